#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "walkup/complex.hpp"
#include "walkup/graph.hpp"

namespace walkup {

using DualGraph = Graph;

// Facets are nodes (indexed as in K.facets()); adjacent iff they share a
// codimension-one face.
inline DualGraph dual_graph(const Complex& k) {
  require_pure(k, "dual_graph");
  DualGraph g(k.num_facets());
  for (const auto& [ridge, inc] : ridge_incidence(k))
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b)
        g.add_edge(static_cast<int>(inc[a]), static_cast<int>(inc[b]));
  g.finalize();
  return g;
}

inline bool is_pseudomanifold(const Complex& k) {
  return is_weak_pseudomanifold(k) && dual_graph(k).is_connected();
}

inline bool is_closed(const Complex& k) {
  return is_weak_pseudomanifold(k) && boundary_complex(k).empty();
}

// Tree dual graph, f0 = f_d + d, and weak pseudomanifold.
inline bool is_stacked_ball(const Complex& k) {
  require_pure(k, "is_stacked_ball");
  if (k.empty()) return false;
  const auto d = static_cast<std::size_t>(k.dim());
  if (k.num_vertices() != k.num_facets() + d) return false;
  if (!is_weak_pseudomanifold(k)) return false;
  return dual_graph(k).is_tree();
}

// Greedy apex reduction: repeatedly replace the star of the lowest vertex
// whose link is the boundary of a d-simplex by the simplex on its link,
// until the boundary of a (d+1)-simplex remains.
inline bool is_stacked_sphere(const Complex& k) {
  require_pure(k, "is_stacked_sphere");
  if (k.empty()) return false;
  if (!is_closed(k)) throw std::domain_error("is_stacked_sphere: complex is not a closed weak pseudomanifold");

  const auto d = static_cast<std::size_t>(k.dim());
  std::set<Face> facets(k.facets().begin(), k.facets().end());
  while (true) {
    std::map<Vertex, std::vector<const Face*>> stars;
    for (const auto& f : facets)
      for (Vertex v : f) stars[v].push_back(&f);
    if (facets.size() <= d + 2) return facets.size() == d + 2 && stars.size() == d + 2;

    bool reduced = false;
    for (const auto& [v, st] : stars) {
      if (st.size() != d + 1) continue;
      std::set<Vertex> span;
      for (const Face* f : st) span.insert(f->begin(), f->end());
      span.erase(v);
      if (span.size() != d + 1) continue;
      Face merged(span.begin(), span.end());
      if (facets.count(merged)) return false;
      std::vector<Face> doomed;
      for (const Face* f : st) doomed.push_back(*f);
      for (const auto& f : doomed) facets.erase(f);
      facets.insert(std::move(merged));
      reduced = true;
      break;
    }
    if (!reduced) return false;
  }
}

enum class WalkupClass { K, Kbar, Kstar };

inline const char* to_string(WalkupClass c) {
  switch (c) {
    case WalkupClass::K: return "K";
    case WalkupClass::Kbar: return "Kbar";
    case WalkupClass::Kstar: return "Kstar";
  }
  return "?";
}

namespace detail {

inline bool link_is_stacked_sphere(const Complex& lk) {
  if (!is_closed(lk)) return false;
  return is_stacked_sphere(lk);
}

}  // namespace detail

// K: all vertex links are stacked (d-1)-spheres. Kbar: stacked (d-1)-balls.
// Kstar: K and 2-neighborly.
inline bool in_walkup_class(const Complex& k, WalkupClass variant) {
  if (k.empty() || !k.is_pure() || k.dim() < 1) return false;
  for (Vertex v : k.vertices()) {
    Complex lk = link(k, v);
    bool ok = variant == WalkupClass::Kbar ? is_stacked_ball(lk) : detail::link_is_stacked_sphere(lk);
    if (!ok) return false;
  }
  if (variant == WalkupClass::Kstar) return is_l_neighborly(k, 2);
  return true;
}

// New apex vertex (one past the largest id) joined to every facet.
inline Complex cone(const Complex& k) {
  Vertex apex = k.vertices().empty() ? 0 : k.vertices().back() + 1;
  std::vector<Face> out;
  for (auto f : k.facets()) {
    f.push_back(apex);
    out.push_back(std::move(f));
  }
  return Complex(std::move(out));
}

struct BoundReport {
  struct Row {
    int j = 0;
    std::int64_t actual = 0;
    std::int64_t bound = 0;
    bool holds = false;
    bool equality = false;
  };

  int dim = 0;
  std::int64_t f0 = 0;
  std::int64_t beta1 = 0;
  std::vector<Row> part_a;  // 1 <= j <= d
  std::int64_t b_lhs = 0;   // C(f0-d-1, 2)
  std::int64_t b_rhs = 0;   // C(d+2, 2) * beta1
  bool b_holds = false;
  bool b_equality = false;
  // "caller-asserted", "stacked-vertex-links" or "unverified"
  std::string manifoldness = "caller-asserted";

  bool a_holds() const {
    for (const auto& r : part_a)
      if (!r.holds) return false;
    return true;
  }
  bool a_equality_at(int j) const {
    for (const auto& r : part_a)
      if (r.j == j) return r.equality;
    return false;
  }
};

// Face-vector lower bounds for a connected closed triangulated d-manifold
// with first mod-2 Betti number beta1. Manifoldness is the caller's
// obligation; with `strict` the vertex links are checked for being stacked
// spheres and the report records whether that succeeded.
inline BoundReport check_lower_bounds(const Complex& k, std::int64_t beta1, bool strict = false) {
  require_pure(k, "check_lower_bounds");
  const auto fv = face_vector(k);
  const int d = k.dim();
  BoundReport rep;
  rep.dim = d;
  rep.f0 = fv.counts[0];
  rep.beta1 = beta1;
  for (int j = 1; j <= d; ++j) {
    BoundReport::Row row;
    row.j = j;
    row.actual = fv.counts[j];
    if (j < d)
      row.bound = binomial(d + 1, j) * rep.f0 + j * binomial(d + 2, j + 1) * (beta1 - 1);
    else
      row.bound = static_cast<std::int64_t>(d) * rep.f0 + static_cast<std::int64_t>(d - 1) * (d + 2) * (beta1 - 1);
    row.holds = row.actual >= row.bound;
    row.equality = row.actual == row.bound;
    rep.part_a.push_back(row);
  }
  rep.b_lhs = binomial(rep.f0 - d - 1, 2);
  rep.b_rhs = binomial(d + 2, 2) * beta1;
  rep.b_holds = rep.b_lhs >= rep.b_rhs;
  rep.b_equality = rep.b_lhs == rep.b_rhs;
  if (strict) {
    bool ok = is_pseudomanifold(k) && is_closed(k) && in_walkup_class(k, WalkupClass::K);
    rep.manifoldness = ok ? "stacked-vertex-links" : "unverified";
  }
  return rep;
}

}  // namespace walkup
