#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "walkup/classifiers.hpp"
#include "walkup/complex.hpp"
#include "walkup/graph.hpp"
#include "walkup/symmetry.hpp"

namespace walkup {

using HostGraph = Graph;

// A host graph with a family of n vertex subsets T_0 .. T_{n-1}. When the
// family satisfies the hypotheses below, the sets û = {i : u in T_i} over
// the host vertices u are the facets of a neighborly member of Kbar(d).
struct TreeFamily {
  HostGraph host;
  std::vector<std::vector<int>> trees;  // sorted host-vertex lists
  int d = 0;

  std::size_t size() const { return trees.size(); }
};

// Tree indices whose tree contains host vertex u.
inline std::vector<int> defines_subset(const TreeFamily& f, int u) {
  if (u < 0 || static_cast<std::size_t>(u) >= f.host.size())
    throw std::domain_error("defines_subset: unknown host vertex " + std::to_string(u));
  std::vector<int> out;
  for (std::size_t i = 0; i < f.trees.size(); ++i)
    if (std::binary_search(f.trees[i].begin(), f.trees[i].end(), u)) out.push_back(static_cast<int>(i));
  return out;
}

struct HypothesisReport {
  struct Condition {
    std::string name;
    bool passed = true;
    std::size_t failures = 0;
    std::vector<std::string> witnesses;  // first few failures
  };

  static constexpr std::size_t kMaxWitnesses = 64;

  // 0: each T_i induces a subtree on n-d vertices
  // 1: any two trees intersect
  // 2: each host vertex lies in exactly d+1 trees
  // 3: u, v share exactly d trees iff uv is a host edge
  std::array<Condition, 4> conditions{{{"subtrees", true, 0, {}},
                                         {"intersecting", true, 0, {}},
                                         {"vertex-multiplicity", true, 0, {}},
                                         {"edge-iff-d-common", true, 0, {}}}};

  bool passed() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.passed; });
  }

  void fail(int c, std::string witness) {
    auto& cond = conditions[c];
    cond.passed = false;
    ++cond.failures;
    if (cond.witnesses.size() < kMaxWitnesses) cond.witnesses.push_back(std::move(witness));
  }

  std::string summary() const {
    std::string s;
    for (std::size_t i = 0; i < conditions.size(); ++i) {
      const auto& c = conditions[i];
      s += "(" + std::to_string(i) + ") " + c.name + ": " + (c.passed ? "pass" : "FAIL");
      if (!c.passed) {
        s += " [" + std::to_string(c.failures) + " failures";
        if (!c.witnesses.empty()) s += "; first: " + c.witnesses.front();
        s += "]";
      }
      s += "\n";
    }
    return s;
  }
};

// Runs every condition and collects witnesses rather than stopping early.
inline HypothesisReport verify_hypotheses(const TreeFamily& f) {
  HypothesisReport rep;
  const auto n = static_cast<int>(f.trees.size());
  const auto nv = static_cast<int>(f.host.size());
  const int d = f.d;

  std::vector<std::vector<bool>> member(n, std::vector<bool>(nv, false));
  for (int i = 0; i < n; ++i) {
    const auto& t = f.trees[i];
    bool valid = std::is_sorted(t.begin(), t.end()) && std::adjacent_find(t.begin(), t.end()) == t.end();
    for (int u : t)
      if (u < 0 || u >= nv) valid = false;
    if (!valid) {
      rep.fail(0, "tree " + std::to_string(i) + ": invalid vertex list");
      continue;
    }
    for (int u : t) member[i][u] = true;
    if (static_cast<int>(t.size()) != n - d)
      rep.fail(0, "tree " + std::to_string(i) + ": has " + std::to_string(t.size()) + " vertices, expected " +
                      std::to_string(n - d));
    else if (!f.host.induced_connected(member[i]))
      rep.fail(0, "tree " + std::to_string(i) + ": induced subgraph is disconnected");
    else if (f.host.induced_edge_count(member[i]) + 1 != t.size())
      rep.fail(0, "tree " + std::to_string(i) + ": induced subgraph has a cycle");
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool meet = false;
      for (int u : f.trees[i])
        if (u >= 0 && u < nv && member[j][u]) {
          meet = true;
          break;
        }
      if (!meet) rep.fail(1, "trees " + std::to_string(i) + " and " + std::to_string(j) + " are disjoint");
    }

  std::vector<std::vector<int>> hat(nv);
  for (int i = 0; i < n; ++i)
    for (int u = 0; u < nv; ++u)
      if (member[i][u]) hat[u].push_back(i);
  for (int u = 0; u < nv; ++u)
    if (static_cast<int>(hat[u].size()) != d + 1)
      rep.fail(2, "vertex " + std::to_string(u) + " lies in " + std::to_string(hat[u].size()) + " trees");

  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) {
      std::size_t common = 0;
      for (std::size_t a = 0, b = 0; a < hat[u].size() && b < hat[v].size();) {
        if (hat[u][a] < hat[v][b]) ++a;
        else if (hat[v][b] < hat[u][a]) ++b;
        else {
          ++common;
          ++a;
          ++b;
        }
      }
      bool edge = f.host.has_edge(u, v);
      if ((common == static_cast<std::size_t>(d)) != edge)
        rep.fail(3, "vertices " + std::to_string(u) + "," + std::to_string(v) + ": " + std::to_string(common) +
                        " common trees, " + (edge ? "edge" : "non-edge"));
    }
  return rep;
}

struct hypothesis_error : std::domain_error {
  explicit hypothesis_error(HypothesisReport r)
      : std::domain_error("tree family fails the construction hypotheses:\n" + r.summary()), report(std::move(r)) {}
  HypothesisReport report;
};

// Facet û for every host vertex u; tree i becomes vertex id i. Refuses
// families that fail the hypotheses, and checks the construction's
// guarantees on the result.
inline Complex complex_from_tree_family(const TreeFamily& f) {
  auto rep = verify_hypotheses(f);
  if (!rep.passed()) throw hypothesis_error(std::move(rep));

  std::vector<Face> facets;
  for (std::size_t u = 0; u < f.host.size(); ++u) facets.push_back(defines_subset(f, static_cast<int>(u)));
  Complex m(facets);

  auto post = [](bool ok, const char* what) {
    if (!ok) throw std::domain_error(std::string("complex_from_tree_family: result ") + what);
  };
  post(m.num_facets() == f.host.size(), "has repeated facets");
  post(m.dim() == f.d && m.is_pure(), "has the wrong dimension");
  auto lambda = dual_graph(m);
  post(lambda.num_edges() == f.host.num_edges(), "dual graph differs from the host graph");
  for (auto [u, v] : f.host.edges())
    post(lambda.has_edge(static_cast<int>(m.facet_index(facets[u])), static_cast<int>(m.facet_index(facets[v]))),
         "dual graph differs from the host graph");
  post(is_pseudomanifold(m), "is not a pseudomanifold");
  post(is_l_neighborly(m, 2), "is not neighborly");
  post(in_walkup_class(m, WalkupClass::Kbar) || f.d == 0, "is not in Kbar(d)");
  return m;
}

// Host = dual graph of M; T_i = indices of the facets containing vertex i.
inline TreeFamily tree_family_from_complex(const Complex& m) {
  if (m.empty() || !m.is_pure() || !m.is_dense())
    throw std::domain_error("tree_family_from_complex: need a nonempty pure complex with dense vertex ids");
  if (!is_l_neighborly(m, 2) || !in_walkup_class(m, WalkupClass::Kbar))
    throw std::domain_error("tree_family_from_complex: complex is not a neighborly member of Kbar(d)");
  TreeFamily f;
  f.host = dual_graph(m);
  f.d = m.dim();
  f.trees.assign(m.num_vertices(), {});
  for (std::size_t u = 0; u < m.num_facets(); ++u)
    for (Vertex v : m.facets()[u]) f.trees[v].push_back(static_cast<int>(u));
  return f;
}

// Cyclic orbit presentation: label classes (a, b, c, ...) each indexed by
// Z_m, and basic facets over labels. Class k occupies ids [k*m, (k+1)*m).
struct OrbitPresentation {
  struct Label {
    int cls = 0;
    int index = 0;
  };

  int m = 1;
  std::vector<std::string> classes;
  std::vector<std::vector<Label>> basic;
  std::vector<std::string> names;  // optional, one per basic facet

  Vertex id(Label l, int shift = 0) const { return static_cast<Vertex>(l.cls * m + ((l.index + shift) % m + m) % m); }

  void validate() const {
    if (m < 1) throw std::domain_error("orbit presentation: group order must be positive");
    if (classes.empty()) throw std::domain_error("orbit presentation: no label classes");
    for (const auto& b : basic)
      for (auto l : b)
        if (l.cls < 0 || l.cls >= static_cast<int>(classes.size()) || l.index < 0 || l.index >= m)
          throw std::domain_error("orbit presentation: malformed label");
  }

  // Basic facet `which` shifted by the group element `shift`.
  Face facet(std::size_t which, int shift) const {
    std::vector<Vertex> vs;
    for (auto l : basic.at(which)) vs.push_back(id(l, shift));
    return make_face(std::move(vs));
  }

  // The generator i -> i+1 acting within every class.
  Permutation shift_permutation() const {
    Permutation p;
    const int n = m * static_cast<int>(classes.size());
    p.image.resize(n);
    for (int v = 0; v < n; ++v) p.image[v] = static_cast<Vertex>((v / m) * m + (v % m + 1) % m);
    return p;
  }
};

inline Complex expand_orbit(const OrbitPresentation& p) {
  p.validate();
  std::vector<Face> facets;
  for (std::size_t b = 0; b < p.basic.size(); ++b)
    for (int i = 0; i < p.m; ++i) facets.push_back(p.facet(b, i));
  return Complex(std::move(facets));
}

}  // namespace walkup
