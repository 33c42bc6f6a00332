#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "walkup/classifiers.hpp"
#include "walkup/complex.hpp"

namespace walkup {

// A bijection on 0 .. n-1, stored as its image array.
struct Permutation {
  std::vector<Vertex> image;

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.image.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.image[i] = static_cast<Vertex>(i);
    return p;
  }

  std::size_t size() const { return image.size(); }
  Vertex operator()(Vertex v) const { return image.at(v); }

  bool is_bijection() const {
    std::vector<bool> hit(image.size(), false);
    for (Vertex v : image) {
      if (v < 0 || static_cast<std::size_t>(v) >= image.size() || hit[v]) return false;
      hit[v] = true;
    }
    return true;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < image.size(); ++i)
      if (image[i] != static_cast<Vertex>(i)) return false;
    return true;
  }

  // (*this * o)(v) = this(o(v))
  Permutation operator*(const Permutation& o) const {
    Permutation r;
    r.image.resize(o.size());
    for (std::size_t i = 0; i < o.size(); ++i) r.image[i] = image[o.image[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.image.resize(size());
    for (std::size_t i = 0; i < size(); ++i) r.image[image[i]] = static_cast<Vertex>(i);
    return r;
  }

  // Least common multiple of the cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j])) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

struct GroupDescription {
  boost::multiprecision::cpp_int order = 1;
  std::vector<Permutation> generators;
  bool cyclic = false;  // set only when one generator has the full order

  std::string structure() const {
    if (cyclic) return "Z" + order.str();
    return "";
  }
};

inline bool is_automorphism(const Complex& k, const Permutation& p) {
  if (!k.is_dense()) throw std::domain_error("is_automorphism: vertex ids are not dense");
  if (p.size() != k.num_vertices()) throw std::domain_error("is_automorphism: permutation length mismatch");
  if (!p.is_bijection()) throw std::domain_error("is_automorphism: not a bijection");
  std::vector<Face> mapped;
  mapped.reserve(k.num_facets());
  for (auto f : k.facets()) {
    for (auto& v : f) v = p.image[v];
    std::sort(f.begin(), f.end());
    mapped.push_back(std::move(f));
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == k.facets();
}

// All elements of the group generated by `gens`; gives up (nullopt) beyond `cap`.
inline std::optional<std::set<Permutation>> enumerate_group(const std::vector<Permutation>& gens, std::size_t n,
                                                            std::size_t cap = 100000) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Permutation h = s * g;
        if (seen.insert(h).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

inline constexpr std::size_t kAutomorphismMaxVertices = 64;

namespace detail {

// Backtracking over vertex images. Candidate images are restricted to the
// same refined vertex class and kept consistent with the edge-multiplicity
// matrix (number of facets through each pair) of all assigned vertices.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Complex& k) : n_(static_cast<int>(k.num_vertices())) {
    for (const auto& f : k.facets()) {
      std::uint64_t m = 0;
      for (Vertex v : f) m |= bit(v);
      facet_masks_.push_back(m);
      facet_set_.insert(m);
    }
    vertex_facets_.resize(n_);
    for (auto m : facet_masks_)
      for (int v = 0; v < n_; ++v)
        if (m & bit(v)) vertex_facets_[v].push_back(m);

    weight_.assign(n_, std::vector<int>(n_, 0));
    for (const auto& f : k.facets())
      for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = 0; b < f.size(); ++b) ++weight_[f[a]][f[b]];
    int max_w = 0;
    for (const auto& row : weight_)
      for (int w : row) max_w = std::max(max_w, w);
    same_weight_.assign(n_, std::vector<std::uint64_t>(max_w + 1, 0));
    for (int b = 0; b < n_; ++b)
      for (int w = 0; w < n_; ++w) same_weight_[b][weight_[w][b]] |= bit(w);

    refine_colors(k);
  }

  struct State {
    std::vector<int> img;
    std::vector<std::uint64_t> domain;
    std::uint64_t used = 0;
    std::uint64_t assigned = 0;
  };

  State initial() const {
    State s;
    s.img.assign(n_, -1);
    s.domain.resize(n_);
    for (int v = 0; v < n_; ++v) s.domain[v] = class_mask_[color_[v]];
    return s;
  }

  // Assigns a -> b with forward checking; false on a wipe-out or a facet
  // whose image is not a facet.
  bool assign(State& s, int a, int b) const {
    if (!(s.domain[a] & bit(b))) return false;
    s.img[a] = b;
    s.used |= bit(b);
    s.assigned |= bit(a);
    for (int v = 0; v < n_; ++v) {
      if (s.assigned & bit(v)) continue;
      s.domain[v] &= same_weight_[b][weight_[v][a]] & ~bit(b);
      if (!s.domain[v]) return false;
    }
    for (auto m : vertex_facets_[a]) {
      if ((m & s.assigned) != m) continue;
      if (!facet_set_.count(image_mask(s, m))) return false;
    }
    return true;
  }

  // Assigns all forced (singleton-domain) vertices.
  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n_; ++v) {
        if (s.assigned & bit(v)) continue;
        if (std::popcount(s.domain[v]) == 1) {
          if (!assign(s, v, std::countr_zero(s.domain[v]))) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  // Unassigned vertex with the fewest candidates, lowest id on ties; -1 if none.
  int branch_vertex(const State& s) const {
    int best = -1, best_size = 65;
    for (int v = 0; v < n_; ++v) {
      if (s.assigned & bit(v)) continue;
      int sz = std::popcount(s.domain[v]);
      if (sz < best_size) {
        best = v;
        best_size = sz;
      }
    }
    return best;
  }

  std::optional<Permutation> complete(State s) const {
    if (!propagate(s)) return std::nullopt;
    int v = branch_vertex(s);
    if (v < 0) {
      Permutation p;
      p.image.assign(s.img.begin(), s.img.end());
      for (auto m : facet_masks_)
        if (!facet_set_.count(image_mask(s, m))) return std::nullopt;
      return p;
    }
    for (std::uint64_t d = s.domain[v]; d; d &= d - 1) {
      State t = s;
      if (!assign(t, v, std::countr_zero(d))) continue;
      if (auto p = complete(std::move(t))) return p;
    }
    return std::nullopt;
  }

  int size() const { return n_; }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  std::uint64_t image_mask(const State& s, std::uint64_t m) const {
    std::uint64_t out = 0;
    for (; m; m &= m - 1) out |= bit(s.img[std::countr_zero(m)]);
    return out;
  }

  // Initial invariant: facet degree, link f-vector and the sorted multiset of
  // edge-link f-vectors; then iterated refinement by the multiset of
  // (edge multiplicity, neighbour class). Classes are ranks of sorted
  // invariant keys, so they do not depend on the labelling.
  void refine_colors(const Complex& k) {
    using Key = std::vector<std::int64_t>;
    std::vector<Key> keys(n_);
    std::map<std::pair<int, int>, std::vector<std::int64_t>> edge_fv;
    for (int v = 0; v < n_; ++v) {
      Key key{weight_[v][v]};
      auto lk = face_vector(link(k, v)).counts;
      key.push_back(static_cast<std::int64_t>(lk.size()));
      key.insert(key.end(), lk.begin(), lk.end());
      std::vector<std::vector<std::int64_t>> edges;
      for (int u = 0; u < n_; ++u) {
        if (u == v || weight_[u][v] == 0) continue;
        auto e = std::minmax(u, v);
        auto it = edge_fv.find(e);
        if (it == edge_fv.end()) {
          Complex el = link(k, Face{e.first, e.second});
          it = edge_fv.emplace(e, el.dim() >= 0 ? face_vector(el).counts : std::vector<std::int64_t>{}).first;
        }
        edges.push_back(it->second);
      }
      std::sort(edges.begin(), edges.end());
      for (const auto& e : edges) {
        key.push_back(static_cast<std::int64_t>(e.size()));
        key.insert(key.end(), e.begin(), e.end());
      }
      keys[v] = std::move(key);
    }
    color_ = rank_keys(keys);
    std::size_t classes = count_classes();
    while (true) {
      for (int v = 0; v < n_; ++v) {
        Key key{color_[v]};
        std::vector<std::pair<int, int>> nb;
        for (int u = 0; u < n_; ++u)
          if (u != v && weight_[u][v] > 0) nb.emplace_back(weight_[u][v], color_[u]);
        std::sort(nb.begin(), nb.end());
        for (auto [w, c] : nb) {
          key.push_back(w);
          key.push_back(c);
        }
        keys[v] = std::move(key);
      }
      color_ = rank_keys(keys);
      std::size_t now = count_classes();
      if (now == classes) break;
      classes = now;
    }
    class_mask_.assign(classes, 0);
    for (int v = 0; v < n_; ++v) class_mask_[color_[v]] |= bit(v);
  }

  template <class Key>
  static std::vector<int> rank_keys(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out;
    for (const auto& k : keys)
      out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()));
    return out;
  }

  std::size_t count_classes() const {
    return static_cast<std::size_t>(*std::max_element(color_.begin(), color_.end())) + 1;
  }

  int n_;
  std::vector<std::uint64_t> facet_masks_;
  std::unordered_set<std::uint64_t> facet_set_;
  std::vector<std::vector<std::uint64_t>> vertex_facets_;
  std::vector<std::vector<int>> weight_;
  std::vector<std::vector<std::uint64_t>> same_weight_;  // [b][w] = {x : weight(x,b) = w}
  std::vector<int> color_;
  std::vector<std::uint64_t> class_mask_;
};

}  // namespace detail

// Full automorphism group. A base b_1..b_k is chosen so that fixing it
// forces the identity; then, from the deepest level up, the orbit of b_i
// under the stabiliser of b_1..b_{i-1} is completed by searching for one
// automorphism per candidate image not yet reached. The automorphisms found
// form a strong generating set and |Aut| is the product of the orbit sizes.
inline GroupDescription automorphism_group(const Complex& k) {
  require_pure(k, "automorphism_group");
  if (k.empty()) throw std::domain_error("automorphism_group: empty complex");
  if (!k.is_dense()) throw std::domain_error("automorphism_group: vertex ids are not dense");
  if (k.num_vertices() > kAutomorphismMaxVertices)
    throw capacity_error("automorphism_group: " + std::to_string(k.num_vertices()) + " vertices exceeds the limit of " +
                         std::to_string(kAutomorphismMaxVertices));
  detail::AutomorphismSearch search(k);
  const int n = search.size();

  // base, with the search state after fixing each prefix
  std::vector<int> base;
  std::vector<detail::AutomorphismSearch::State> prefix_states;
  {
    auto s = search.initial();
    while (true) {
      search.propagate(s);
      int v = search.branch_vertex(s);
      if (v < 0) break;
      base.push_back(v);
      prefix_states.push_back(s);
      search.assign(s, v, v);
    }
  }

  std::vector<Permutation> strong_gens;
  boost::multiprecision::cpp_int order = 1;
  for (int level = static_cast<int>(base.size()) - 1; level >= 0; --level) {
    const int b = base[level];
    const auto& state = prefix_states[level];
    auto orbit_of = [&]() {
      std::vector<bool> in(n, false);
      std::vector<int> stack{b};
      in[b] = true;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& g : strong_gens) {
          int y = g.image[x];
          if (!in[y]) {
            in[y] = true;
            stack.push_back(y);
          }
        }
      }
      return in;
    };
    auto orbit = orbit_of();
    for (std::uint64_t d = state.domain[b]; d; d &= d - 1) {
      int c = std::countr_zero(d);
      if (orbit[c]) continue;
      auto t = state;
      if (!search.assign(t, b, c)) continue;
      if (auto g = search.complete(std::move(t))) {
        strong_gens.push_back(std::move(*g));
        orbit = orbit_of();
      }
    }
    order *= static_cast<unsigned>(std::count(orbit.begin(), orbit.end(), true));
  }

  GroupDescription out;
  out.order = order;
  out.generators = strong_gens;
  for (const auto& g : strong_gens)
    if (boost::multiprecision::cpp_int(g.order()) == order) {
      out.cyclic = true;
      out.generators = {g};
      break;
    }
  if (order == 1) out.cyclic = true;
  return out;
}

// Aut(M) == Aut(boundary M) as permutation groups on the common vertex set.
// Both groups are computed; they coincide iff the orders agree and each
// generating set acts by automorphisms on the other complex.
inline bool verify_aut_equality(const Complex& m) {
  if (m.dim() < 5 || !in_walkup_class(m, WalkupClass::Kbar))
    throw std::domain_error("verify_aut_equality: requires a member of Kbar(d+1) with d >= 4");
  Complex bd = boundary_complex(m);
  if (bd.vertices() != m.vertices()) return false;
  auto g = automorphism_group(m);
  auto h = automorphism_group(bd);
  if (g.order != h.order) return false;
  for (const auto& p : g.generators)
    if (!is_automorphism(bd, p)) return false;
  for (const auto& p : h.generators)
    if (!is_automorphism(m, p)) return false;
  return true;
}

}  // namespace walkup
