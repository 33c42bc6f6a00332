#pragma once

#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "walkup/classifiers.hpp"
#include "walkup/complex.hpp"
#include "walkup/constructor.hpp"
#include "walkup/homology.hpp"
#include "walkup/io.hpp"

// Built-in complexes: the four neighborly members of Kbar(5) given by cyclic
// orbit presentations, their boundary 4-manifolds, the 246-vertex host graph
// with its 41 subtrees, standard balls and spheres, and a pseudomanifold
// whose dual graph is a tree but which is not a ball.
namespace walkup::catalog {

namespace detail {

struct PresentationData {
  const char* name;
  int m;
  std::vector<std::string> classes;
  std::vector<std::pair<const char*, const char*>> basic;  // (facet name, labels)
};

inline const std::vector<PresentationData>& presentation_table() {
  static const std::vector<PresentationData> table = {
      {"A5_21",
       7,
       {"a", "b", "c"},
       {{"sigma", "a0 a1 a2 b0 b1 c0"},
        {"kappa", "a1 a2 b0 b1 b2 c0"},
        {"tau", "a1 a2 a3 b0 b1 b2"},
        {"alpha", "a0 a1 b0 b1 c0 c3"},
        {"beta", "a0 a1 b0 b3 c0 c3"},
        {"mu", "a0 b0 b3 c0 c3 c4"},
        {"nu", "a0 a3 b3 c0 c3 c4"},
        {"gamma", "a3 b3 c0 c3 c4 c6"}}},
      {"B5_21",
       7,
       {"a", "b", "c"},
       {{"sigma", "a0 a1 a2 b0 b1 c0"},
        {"kappa", "a0 a1 a2 b1 b2 c0"},
        {"tau", "a0 a1 a2 a3 b1 b2"},
        {"alpha", "a0 a1 b0 b1 c0 c3"},
        {"beta", "a0 b0 b1 b3 c0 c3"},
        {"mu", "a0 b0 b3 c0 c3 c4"},
        {"nu", "a3 b0 b3 c0 c3 c4"},
        {"gamma", "a3 b3 c0 c3 c4 c6"}}},
      {"B5_26",
       13,
       {"a", "b"},
       {{"sigma", "a0 a10 a11 a12 b9 b10"},
        {"tau", "a0 a1 a10 a11 a12 b10"},
        {"alpha", "a0 a11 a12 b5 b9 b10"},
        {"beta", "a0 a11 a12 b2 b5 b10"},
        {"gamma", "a0 a7 a12 b2 b5 b10"},
        {"mu", "a7 a12 b0 b2 b5 b10"},
        {"delta", "a7 b0 b2 b5 b8 b10"}}},
      {"A5_41",
       41,
       {"a"},
       {{"sigma", "a36 a37 a38 a39 a40 a0"},
        {"alpha", "a36 a37 a38 a39 a0 a6"},
        {"beta", "a37 a38 a39 a0 a6 a13"},
        {"gamma", "a38 a39 a0 a6 a13 a20"},
        {"delta", "a39 a0 a6 a13 a20 a27"},
        {"mu", "a6 a13 a20 a27 a34 a0"}}},
  };
  return table;
}

// Dual-graph edges sigma_i -- tau_{i+shift} for every i, as listed with
// each orbit presentation: two cycles plus one path per group element.
struct DualPattern {
  const char* name;
  std::vector<std::tuple<const char*, const char*, int>> edges;
};

inline const std::vector<DualPattern>& dual_patterns() {
  static const std::vector<DualPattern> patterns = {
      {"A5_21",
       {{"sigma", "kappa", 0}, {"kappa", "tau", 0}, {"tau", "sigma", 1},
        {"mu", "nu", 0}, {"nu", "gamma", 0}, {"gamma", "mu", 3},
        {"sigma", "alpha", 0}, {"alpha", "beta", 0}, {"beta", "mu", 0}}},
      {"B5_21",
       {{"sigma", "kappa", 0}, {"kappa", "tau", 0}, {"tau", "sigma", 1},
        {"mu", "nu", 0}, {"nu", "gamma", 0}, {"gamma", "mu", 3},
        {"sigma", "alpha", 0}, {"alpha", "beta", 0}, {"beta", "mu", 0}}},
      {"B5_26",
       {{"sigma", "tau", 0}, {"tau", "sigma", 1},
        {"mu", "delta", 0}, {"delta", "mu", 8},
        {"sigma", "alpha", 0}, {"alpha", "beta", 0}, {"beta", "gamma", 0}, {"gamma", "mu", 0}}},
      {"A5_41",
       {{"sigma", "sigma", 1}, {"mu", "mu", 7},
        {"sigma", "alpha", 0}, {"alpha", "beta", 0}, {"beta", "gamma", 0}, {"gamma", "delta", 0},
        {"delta", "mu", 0}}},
  };
  return patterns;
}

inline std::optional<std::int64_t> parse_param(const std::string& name, const std::string& stem) {
  static const std::regex paren("([a-z_]+)\\((\\d+)\\)");
  static const std::regex colon("([a-z_]+):(\\d+)");
  std::smatch m;
  if ((std::regex_match(name, m, paren) || std::regex_match(name, m, colon)) && m[1] == stem)
    return std::stoll(m[2]);
  return std::nullopt;
}

}  // namespace detail

inline const std::vector<std::string>& main_complexes() {
  static const std::vector<std::string> v = {"A5_21", "B5_21", "B5_26", "A5_41"};
  return v;
}

// Table rows in order; each is the boundary of the matching main complex.
inline const std::vector<std::string>& table1_manifolds() {
  static const std::vector<std::string> v = {"M4_21", "N4_21", "N4_26", "M4_41"};
  return v;
}

inline std::string boundary_source(const std::string& manifold) {
  if (manifold == "M4_21") return "A5_21";
  if (manifold == "N4_21") return "B5_21";
  if (manifold == "N4_26") return "B5_26";
  if (manifold == "M4_41") return "A5_41";
  return "";
}

inline std::vector<std::string> names() {
  return {"A5_21", "B5_21", "B5_26", "A5_41", "M4_21", "N4_21", "N4_26", "M4_41", "S4_6",
          "standard_sphere(d)", "standard_ball(d)", "nonball_example", "A5_41_tree_family"};
}

inline OrbitPresentation presentation(const std::string& name) {
  for (const auto& p : detail::presentation_table()) {
    if (name != p.name) continue;
    OrbitPresentation out;
    out.m = p.m;
    out.classes = p.classes;
    for (const auto& [fname, labels] : p.basic) {
      std::vector<OrbitPresentation::Label> facet;
      std::istringstream in(labels);
      std::string tok;
      while (in >> tok) facet.push_back(parse_label(tok, out.classes, out.m));
      out.basic.push_back(std::move(facet));
      out.names.emplace_back(fname);
    }
    return out;
  }
  throw std::domain_error("catalog: no orbit presentation named '" + name + "'");
}

// The 246-vertex host graph (two 41-cycles joined by 41 paths of length 5)
// and the 41 subtrees T_i on 36 vertices each. Host ids: u_i = i,
// x_i = 41+i, y_i = 82+i, z_i = 123+i, w_i = 164+i, v_i = 205+i.
inline TreeFamily a541_tree_family() {
  constexpr int m = 41;
  enum Row { U, X, Y, Z, W, V };
  auto id = [](Row r, int i) { return static_cast<int>(r) * m + ((i % m) + m) % m; };

  TreeFamily f;
  f.d = 5;
  f.host = HostGraph(6 * m);
  for (int i = 0; i < m; ++i) {
    f.host.add_edge(id(U, i), id(U, i + 1));
    f.host.add_edge(id(V, i), id(V, i + 7));
    f.host.add_edge(id(U, i), id(X, i));
    f.host.add_edge(id(X, i), id(Y, i));
    f.host.add_edge(id(Y, i), id(Z, i));
    f.host.add_edge(id(Z, i), id(W, i));
    f.host.add_edge(id(W, i), id(V, i));
  }
  f.host.finalize();

  // T_i, listed with offsets from i
  const std::vector<std::pair<Row, int>> shape = {
      {U, 0},  {U, 1},  {U, 2},  {U, 3},  {U, 4},  {U, 5},
      {V, 0},  {V, 7},  {V, 14}, {V, 21}, {V, 28}, {V, 35},
      {X, 0},  {Y, 0},  {Z, 0},  {W, 0},
      {X, 2},  {Y, 2},  {Z, 2},  {W, 2},
      {X, 3},  {Y, 3},  {Z, 3},
      {X, 4},  {Y, 4},
      {X, 5},  {W, 14},
      {W, 21}, {Z, 21},
      {W, 28}, {Z, 28}, {Y, 28},
      {W, 35}, {Z, 35}, {Y, 35}, {X, 35}};
  for (int i = 0; i < m; ++i) {
    std::vector<int> t;
    for (auto [r, off] : shape) t.push_back(id(r, i + off));
    std::sort(t.begin(), t.end());
    f.trees.push_back(std::move(t));
  }
  return f;
}

inline bool is_family_name(const std::string& name) { return name == "A5_41_tree_family"; }

inline TreeFamily get_family(const std::string& name) {
  if (name == "A5_41_tree_family") return a541_tree_family();
  throw std::domain_error("catalog: unknown tree family '" + name + "'");
}

inline bool is_known(const std::string& name);

inline Complex get(const std::string& name) {
  for (const auto& p : detail::presentation_table())
    if (name == p.name) return expand_orbit(presentation(name));
  if (auto src = boundary_source(name); !src.empty()) return boundary_complex(get(src));
  if (name == "S4_6") return standard_sphere(4);
  if (auto d = detail::parse_param(name, "standard_sphere")) return standard_sphere(static_cast<int>(*d));
  if (auto d = detail::parse_param(name, "standard_ball")) return standard_ball(static_cast<int>(*d));
  if (name == "nonball_example")
    // 1234, 2345, 3456, 4567, 5671 shifted to 0-based ids
    return Complex({{0, 1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 6}, {0, 4, 5, 6}});
  if (is_family_name(name)) return complex_from_tree_family(get_family(name));
  throw std::domain_error("catalog: unknown name '" + name + "'");
}

inline bool is_known(const std::string& name) {
  try {
    if (is_family_name(name) || name == "S4_6" || name == "nonball_example" || !boundary_source(name).empty())
      return true;
    for (const auto& p : detail::presentation_table())
      if (name == p.name) return true;
    return detail::parse_param(name, "standard_sphere").has_value() ||
           detail::parse_param(name, "standard_ball").has_value();
  } catch (...) {
    return false;
  }
}

// Expected properties of a named object. Only the fields that apply are set.
struct CatalogEntry {
  std::string name;
  std::string recipe;  // "orbit", "boundary", "tree-family", "formula"
  std::optional<std::size_t> facets;
  std::optional<std::vector<std::int64_t>> f_vector;
  std::optional<std::int64_t> chi;
  std::optional<std::int64_t> beta1;
  std::optional<std::int64_t> aut_order;
  std::optional<bool> orientable;
  std::optional<std::string> type;
};

inline std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline CatalogEntry expected(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  auto table_row = [&](std::vector<std::int64_t> f, std::int64_t chi, std::int64_t b1, std::int64_t aut, bool orient,
                       std::string type) {
    e.recipe = "boundary";
    e.facets = static_cast<std::size_t>(f.back());
    e.f_vector = std::move(f);
    e.chi = chi;
    e.beta1 = b1;
    e.aut_order = aut;
    e.orientable = orient;
    e.type = std::move(type);
  };
  if (name == "M4_21") table_row({21, 210, 490, 525, 210}, -14, 8, 7, true, "(S³×S¹)^#8");
  else if (name == "N4_21") table_row({21, 210, 490, 525, 210}, -14, 8, 7, false, "(S³⋊S¹)^#8 twisted");
  else if (name == "N4_26") table_row({26, 325, 780, 845, 338}, -26, 14, 13, false, "(S³⋊S¹)^#14 twisted");
  else if (name == "M4_41") table_row({41, 820, 2050, 2255, 902}, -82, 42, 41, true, "(S³×S¹)^#42");
  else if (name == "A5_21" || name == "B5_21" || name == "B5_26" || name == "A5_41" || is_family_name(name)) {
    e.recipe = is_family_name(name) ? "tree-family" : "orbit";
    const bool is21 = name == "A5_21" || name == "B5_21";
    const bool is26 = name == "B5_26";
    e.facets = is21 ? 56 : is26 ? 91 : 246;
    e.aut_order = is21 ? 7 : is26 ? 13 : 41;
    e.orientable = name != "B5_21" && name != "B5_26";
  } else if (name == "S4_6" || detail::parse_param(name, "standard_sphere")) {
    int d = name == "S4_6" ? 4 : static_cast<int>(*detail::parse_param(name, "standard_sphere"));
    e.recipe = "formula";
    std::vector<std::int64_t> f;
    for (int j = 0; j <= d; ++j) f.push_back(binomial(d + 2, j + 1));
    e.facets = static_cast<std::size_t>(d + 2);
    e.f_vector = f;
    e.chi = d % 2 == 0 ? 2 : 0;
    e.beta1 = d == 1 ? 1 : 0;
    e.aut_order = factorial(d + 2);
    e.orientable = true;
    e.type = "S" + walkup::detail::superscript(d);
  } else if (auto d = detail::parse_param(name, "standard_ball")) {
    e.recipe = "formula";
    std::vector<std::int64_t> f;
    for (int j = 0; j <= *d; ++j) f.push_back(binomial(*d + 1, j + 1));
    e.facets = 1;
    e.f_vector = f;
    e.chi = 1;
    e.beta1 = 0;
    e.aut_order = factorial(static_cast<int>(*d) + 1);
  } else if (name == "nonball_example") {
    e.recipe = "formula";
    e.facets = 5;
  } else {
    throw std::domain_error("catalog: unknown name '" + name + "'");
  }
  return e;
}

struct DualStructureReport {
  std::string name;
  std::size_t expected_edges = 0;
  std::size_t actual_edges = 0;
  std::vector<std::string> missing;  // listed but not adjacent
  std::vector<std::string> extra;    // adjacent but not listed
  bool matches() const { return missing.empty() && extra.empty() && expected_edges == actual_edges; }
};

// Compares the dual graph of a main complex with its listed decomposition
// into two cycles and one path per group element.
inline DualStructureReport dual_structure(const std::string& name) {
  const detail::DualPattern* pat = nullptr;
  for (const auto& p : detail::dual_patterns())
    if (name == p.name) pat = &p;
  if (!pat) throw std::domain_error("catalog: no dual-graph pattern for '" + name + "'");

  auto pres = presentation(name);
  Complex k = expand_orbit(pres);
  auto g = dual_graph(k);

  std::vector<std::string> facet_name(k.num_facets());
  auto index_of = [&](const std::string& basic, int shift) {
    auto it = std::find(pres.names.begin(), pres.names.end(), basic);
    return k.facet_index(pres.facet(static_cast<std::size_t>(it - pres.names.begin()), shift));
  };
  for (std::size_t b = 0; b < pres.basic.size(); ++b)
    for (int i = 0; i < pres.m; ++i)
      facet_name[k.facet_index(pres.facet(b, i))] = pres.names[b] + "_" + std::to_string(i);

  std::vector<std::pair<int, int>> want;
  for (const auto& [from, to, shift] : pat->edges)
    for (int i = 0; i < pres.m; ++i) {
      int a = static_cast<int>(index_of(from, i));
      int b = static_cast<int>(index_of(to, i + shift));
      want.emplace_back(std::min(a, b), std::max(a, b));
    }
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());

  DualStructureReport rep;
  rep.name = name;
  rep.expected_edges = want.size();
  rep.actual_edges = g.num_edges();
  auto label = [&](std::pair<int, int> e) { return facet_name[e.first] + "--" + facet_name[e.second]; };
  std::vector<std::pair<int, int>> have(g.edges().begin(), g.edges().end());
  std::vector<std::pair<int, int>> diff;
  std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(diff));
  for (auto e : diff) rep.missing.push_back(label(e));
  diff.clear();
  std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(diff));
  for (auto e : diff) rep.extra.push_back(label(e));
  return rep;
}

inline DualStructureReport a541_dual_structure() { return dual_structure("A5_41"); }

}  // namespace walkup::catalog
