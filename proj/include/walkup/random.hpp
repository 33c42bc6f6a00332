#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "walkup/complex.hpp"
#include "walkup/symmetry.hpp"

// Seeded generators for property tests. Every generator takes its engine
// explicitly.
namespace walkup::random {

using Engine = std::mt19937_64;

// Stacked d-ball with m facets, built by repeatedly gluing a new simplex with
// a fresh vertex onto a free (d-1)-face.
inline Complex stacked_ball(int d, int m, Engine& rng) {
  if (d < 1 || m < 1) throw std::domain_error("stacked_ball: need d >= 1 and m >= 1");
  std::vector<Face> facets{standard_ball(d).facets().front()};
  std::vector<Face> free;  // (d-1)-faces in exactly one facet
  for_each_subset(facets[0], d, [&](const Face& r) { free.push_back(r); });
  Vertex next = d + 1;
  for (int i = 1; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    std::size_t at = pick(rng);
    Face tau = free[at];
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(at));
    Face sigma = tau;
    sigma.push_back(next++);
    for_each_subset(sigma, d, [&](const Face& r) {
      if (r != tau) free.push_back(r);
    });
    facets.push_back(std::move(sigma));
  }
  return Complex(std::move(facets));
}

// Pure d-complex with m facets whose dual graph is a tree: each new facet
// shares a (d-1)-face with one existing facet and no other. The extra vertex
// is fresh or reused at random, so the result need not be a ball.
inline Complex tree_dual_complex(int d, int m, Engine& rng) {
  if (d < 1 || m < 1) throw std::domain_error("tree_dual_complex: need d >= 1 and m >= 1");
  std::vector<Face> facets{standard_ball(d).facets().front()};
  Vertex next = d + 1;
  std::bernoulli_distribution fresh(0.5);
  int attempts = 0;
  while (static_cast<int>(facets.size()) < m && attempts < 1000 * m) {
    ++attempts;
    const Face& parent = facets[std::uniform_int_distribution<std::size_t>(0, facets.size() - 1)(rng)];
    Face ridge = parent;
    ridge.erase(ridge.begin() + std::uniform_int_distribution<int>(0, d)(rng));
    Vertex x;
    if (fresh(rng)) {
      x = next;
    } else {
      x = std::uniform_int_distribution<Vertex>(0, next - 1)(rng);
      if (std::binary_search(parent.begin(), parent.end(), x)) continue;
    }
    Face sigma = ridge;
    sigma.push_back(x);
    std::sort(sigma.begin(), sigma.end());
    bool ok = true;
    int adjacent = 0;
    for (const auto& f : facets) {
      std::size_t common = 0;
      for (Vertex v : sigma) common += std::binary_search(f.begin(), f.end(), v);
      if (common == sigma.size()) ok = false;
      if (common == static_cast<std::size_t>(d)) ++adjacent;
    }
    if (!ok || adjacent != 1) continue;
    if (x == next) ++next;
    facets.push_back(std::move(sigma));
  }
  return Complex(std::move(facets));
}

inline Permutation permutation(std::size_t n, Engine& rng) {
  Permutation p = Permutation::identity(n);
  std::shuffle(p.image.begin(), p.image.end(), rng);
  return p;
}

}  // namespace walkup::random
