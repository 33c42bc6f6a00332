#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "walkup/catalog.hpp"
#include "walkup/classifiers.hpp"
#include "walkup/complex.hpp"
#include "walkup/homology.hpp"
#include "walkup/symmetry.hpp"

// JSON views of the library's result types, the verification pipeline used
// by `walkup verify`, and the four-manifold summary table.
namespace walkup {

using json = nlohmann::json;  // std::map backed, so keys come out sorted

inline json order_json(const boost::multiprecision::cpp_int& n) {
  if (n <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(n);
  return n.str();
}

inline void to_json(json& j, const FaceVector& f) { j = json{{"f", f.counts}, {"chi", f.chi}}; }

inline void to_json(json& j, const BoundReport& r) {
  json rows = json::array();
  for (const auto& row : r.part_a)
    rows.push_back({{"j", row.j}, {"actual", row.actual}, {"bound", row.bound}, {"holds", row.holds},
                    {"equality", row.equality}});
  j = json{{"dim", r.dim},
           {"f0", r.f0},
           {"beta1", r.beta1},
           {"a", rows},
           {"a_holds", r.a_holds()},
           {"b", {{"lhs", r.b_lhs}, {"rhs", r.b_rhs}, {"holds", r.b_holds}, {"equality", r.b_equality}}},
           {"manifoldness", r.manifoldness}};
}

inline void to_json(json& j, const BettiVector& b) { j = b.betti; }

inline void to_json(json& j, const TypeReport& t) {
  j = json{{"dim", t.dim},           {"beta1", t.beta1}, {"orientable", t.orientable},
           {"chi", t.chi},           {"euler_relation", t.euler_relation}, {"type", t.type}};
}

inline void to_json(json& j, const TightCertificate& c) {
  j = json{{"dim", c.dim},
           {"in_kstar", c.in_kstar},
           {"orientable", c.orientable},
           {"field", to_string(c.field)},
           {"tight", c.tight},
           {"strongly_minimal", c.strongly_minimal},
           {"verdict", c.verdict}};
}

inline void to_json(json& j, const Permutation& p) { j = p.image; }

inline std::string structure_tag(const GroupDescription& g) {
  auto s = g.structure();
  return s.empty() ? "order " + g.order.str() : s;
}

inline void to_json(json& j, const GroupDescription& g) {
  j = json{{"order", order_json(g.order)}, {"structure", structure_tag(g)}, {"generators", g.generators}};
}

inline void to_json(json& j, const HypothesisReport& r) {
  json conds = json::array();
  for (std::size_t i = 0; i < r.conditions.size(); ++i) {
    const auto& c = r.conditions[i];
    conds.push_back({{"index", i},
                     {"name", c.name},
                     {"passed", c.passed},
                     {"failures", c.failures},
                     {"witnesses", c.witnesses}});
  }
  j = json{{"passed", r.passed()}, {"conditions", conds}};
}

struct VerifyOptions {
  bool gf2 = true;
  bool q = true;
};

struct VerifyResult {
  json report;                              // includes "timing"
  std::vector<std::string> inconsistencies;
  std::vector<std::string> skips;           // capacity skips
  bool consistent() const { return inconsistencies.empty(); }
};

// Runs every applicable analysis on a pure complex with dense vertex ids.
// Results that contradict each other are listed under "inconsistencies";
// analyses beyond a capacity limit are recorded under "skipped".
inline VerifyResult verify_complex(const Complex& k, json identity, const VerifyOptions& opt = {}) {
  using clock = std::chrono::steady_clock;
  VerifyResult res;
  json& r = res.report;
  json timing = json::object();
  auto stage = [&](const char* name, const std::function<void()>& fn) {
    auto t0 = clock::now();
    fn();
    timing[name] = std::chrono::duration<double>(clock::now() - t0).count();
  };
  auto inconsistent = [&](std::string what) { res.inconsistencies.push_back(std::move(what)); };
  auto skip = [&](const char* what, const std::string& why) {
    r["skipped"][what] = why;
    res.skips.push_back(std::string(what) + ": " + why);
  };

  require_pure(k, "verify");
  if (k.empty()) throw std::domain_error("verify: empty complex");
  r["schema"] = 1;
  r["input"] = std::move(identity);
  r["skipped"] = json::object();

  const int d = k.dim();
  FaceVector fv;
  stage("faces", [&] {
    fv = face_vector(k);
    r["dim"] = d;
    r["facets"] = k.num_facets();
    r["f_vector"] = fv.counts;
    r["chi"] = fv.chi;
    r["neighborly"] = is_l_neighborly(k, 2);
  });

  bool closed = false, pm = false, connected = false;
  stage("structure", [&] {
    auto g = dual_graph(k);
    bool weak = is_weak_pseudomanifold(k);
    pm = weak && g.is_connected();
    closed = weak && is_closed(k);
    connected = g.is_connected();
    r["pseudomanifold"] = {{"weak", weak}, {"strong", pm}, {"closed", closed}};
    r["dual_graph"] = {{"vertices", g.size()}, {"edges", g.num_edges()}, {"connected", connected},
                       {"tree", g.is_tree()}};
    r["stacked"]["ball"] = is_stacked_ball(k);
    r["stacked"]["sphere"] = closed ? json(is_stacked_sphere(k)) : json(nullptr);
  });

  bool in_k = false, in_kbar = false, in_kstar = false;
  stage("walkup", [&] {
    in_k = in_walkup_class(k, WalkupClass::K);
    in_kbar = in_walkup_class(k, WalkupClass::Kbar);
    in_kstar = in_walkup_class(k, WalkupClass::Kstar);
    r["walkup"] = {{"K", in_k}, {"Kbar", in_kbar}, {"Kstar", in_kstar}};
  });

  std::optional<BettiVector> b2, bq;
  stage("homology", [&] {
    if (opt.gf2) {
      b2 = betti_numbers(k, Field::GF2);
      r["betti"]["GF2"] = *b2;
      if (b2->alternating_sum() != fv.chi) inconsistent("chi differs from the alternating sum of GF2 Betti numbers");
    }
    if (opt.q) {
      bq = betti_numbers(k, Field::Q);
      r["betti"]["Q"] = *bq;
      if (bq->alternating_sum() != fv.chi) inconsistent("chi differs from the alternating sum of Q Betti numbers");
    }
    if (b2 && bq && b2->at(0) != bq->at(0)) inconsistent("beta0 differs between GF2 and Q");
  });

  stage("orientability", [&] {
    if (!(closed && connected)) {
      r["orientable"] = nullptr;
      return;
    }
    bool o = is_orientable(k);
    r["orientable"] = o;
    if (bq && (bq->at(static_cast<std::size_t>(d)) == 1) != o)
      inconsistent("orientability disagrees with the top rational Betti number");
    if (b2 && b2->at(static_cast<std::size_t>(d)) != 1) inconsistent("closed pseudomanifold with top GF2 Betti number != 1");
    // members of K(d) are torsion-free, so the two fields agree when orientable
    if (o && in_k && b2 && bq && b2->betti != bq->betti)
      inconsistent("orientable member of K(d) whose GF2 and Q Betti numbers differ");
  });

  stage("automorphisms", [&] {
    if (k.num_vertices() > kAutomorphismMaxVertices) {
      r["automorphisms"] = nullptr;
      skip("automorphisms", std::to_string(k.num_vertices()) + " vertices exceeds the limit of " +
                                std::to_string(kAutomorphismMaxVertices));
      return;
    }
    auto g = automorphism_group(k);
    r["automorphisms"] = g;
    for (const auto& p : g.generators)
      if (!is_automorphism(k, p)) inconsistent("reported automorphism generator does not preserve the facets");
  });

  stage("bounds", [&] {
    if (!(in_k && closed && connected && d >= 3 && b2)) {
      r["bounds"] = nullptr;
      return;
    }
    auto br = check_lower_bounds(k, b2->at(1), true);
    r["bounds"] = br;
    if (!br.a_holds() || !br.b_holds) inconsistent("face-number lower bounds fail on a member of K(d)");
    // members of K(d) attain equality in (a) at j = 1
    if (!br.a_equality_at(1)) inconsistent("member of K(d) misses equality in (a) at j = 1");
    if (in_kstar && !br.b_equality) inconsistent("neighborly member of K(d) misses equality in (b)");
  });

  stage("type", [&] {
    if (!(in_k && connected && d >= 4 && b2)) {
      r["type"] = nullptr;
      return;
    }
    auto t = identify_type(k);
    r["type"] = t;
    if (!t.euler_relation && d % 2 == 0) inconsistent("chi != 2 - 2 beta1 for an even-dimensional member of K(d)");
  });

  stage("tightness", [&] {
    if (in_kstar && connected && closed) r["tight_certificate"] = certify_tight(k);
    else r["tight_certificate"] = nullptr;
    if (!connected) {
      r["tight_bruteforce"] = nullptr;
      return;
    }
    if (k.num_vertices() > kTightBruteforceMaxVertices) {
      r["tight_bruteforce"] = nullptr;
      skip("tight_bruteforce", std::to_string(k.num_vertices()) + " vertices exceeds the limit of " +
                                   std::to_string(kTightBruteforceMaxVertices));
      return;
    }
    json tb;
    if (opt.gf2) tb["GF2"] = is_tight_bruteforce(k, Field::GF2);
    if (opt.q) tb["Q"] = is_tight_bruteforce(k, Field::Q);
    r["tight_bruteforce"] = tb;
    const auto& cert = r["tight_certificate"];
    if (!cert.is_null() && cert["tight"].get<bool>()) {
      const char* f = cert["orientable"].get<bool>() ? "Q" : "GF2";
      if (tb.contains(f) && !tb[f].get<bool>()) inconsistent("certified tight but the exhaustive check disagrees");
    }
  });

  stage("boundary", [&] {
    if (!(in_kbar && pm && d >= 1)) {
      r["boundary"] = nullptr;
      return;
    }
    Complex bd = boundary_complex(k);
    json b;
    b["f_vector"] = face_vector(bd).counts;
    b["chi"] = face_vector(bd).chi;
    b["Kstar"] = in_walkup_class(bd, WalkupClass::Kstar);
    bool skel = d >= 2 && skeleton(k, d - 2) == skeleton(bd, d - 2);
    b["skeleton_equality"] = skel;
    if (d >= 5 && k.num_vertices() <= kAutomorphismMaxVertices) b["aut_equality"] = verify_aut_equality(k);
    r["boundary"] = b;
  });

  json inc = json::array();
  for (const auto& s : res.inconsistencies) inc.push_back(s);
  r["inconsistencies"] = inc;
  r["consistent"] = res.consistent();
  r["timing"] = timing;
  return res;
}

// Report without the "timing" key; this is the part that must be byte-stable.
inline json deterministic_part(json report) {
  report.erase("timing");
  return report;
}

// One row of the four-manifold summary: f-vector, chi, beta1 (GF2),
// |Aut|, orientability and type.
struct TableRow {
  std::string name;
  std::vector<std::int64_t> f_vector;
  std::int64_t chi = 0;
  std::int64_t beta1 = 0;
  std::string aut_order;
  bool orientable = false;
  std::string type;
};

inline TableRow compute_table_row(const std::string& name) {
  Complex k = catalog::get(name);
  TableRow row;
  row.name = name;
  auto fv = face_vector(k);
  row.f_vector = fv.counts;
  row.chi = fv.chi;
  row.beta1 = betti_number(k, 1, Field::GF2);
  row.aut_order = automorphism_group(k).order.str();
  row.orientable = is_orientable(k);
  row.type = walkup_type_name(k.dim(), row.beta1, row.orientable);
  return row;
}

inline TableRow expected_table_row(const std::string& name) {
  auto e = catalog::expected(name);
  TableRow row;
  row.name = name;
  row.f_vector = e.f_vector.value();
  row.chi = e.chi.value();
  row.beta1 = e.beta1.value();
  row.aut_order = std::to_string(e.aut_order.value());
  row.orientable = e.orientable.value();
  row.type = e.type.value();
  return row;
}

inline const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> c = {"f_vector", "chi", "beta1", "aut_order", "orientable", "type"};
  return c;
}

inline std::string table_cell(const TableRow& r, const std::string& col) {
  if (col == "f_vector") {
    std::string s = "(";
    for (std::size_t i = 0; i < r.f_vector.size(); ++i) s += (i ? "," : "") + std::to_string(r.f_vector[i]);
    return s + ")";
  }
  if (col == "chi") return std::to_string(r.chi);
  if (col == "beta1") return std::to_string(r.beta1);
  if (col == "aut_order") return r.aut_order;
  if (col == "orientable") return r.orientable ? "true" : "false";
  if (col == "type") return r.type;
  throw std::domain_error("unknown table column '" + col + "'");
}

// Applies overrides of the form {"N4_21": {"beta1": 9, ...}} to expected rows.
inline void apply_override(TableRow& row, const json& o) {
  for (auto it = o.begin(); it != o.end(); ++it) {
    const auto& k = it.key();
    const auto& v = it.value();
    if (k == "f_vector") row.f_vector = v.get<std::vector<std::int64_t>>();
    else if (k == "chi") row.chi = v.get<std::int64_t>();
    else if (k == "beta1") row.beta1 = v.get<std::int64_t>();
    else if (k == "aut_order") row.aut_order = v.is_string() ? v.get<std::string>() : std::to_string(v.get<std::int64_t>());
    else if (k == "orientable") row.orientable = v.get<bool>();
    else if (k == "type") row.type = v.get<std::string>();
    else throw std::domain_error("unknown table column '" + k + "' in expected-value override");
  }
}

struct TableDiff {
  std::string row, column, expected, actual;
};

struct TableResult {
  std::vector<TableRow> actual;
  std::vector<TableRow> expected;
  std::vector<TableDiff> diffs;
  bool matches() const { return diffs.empty(); }
};

inline TableResult reproduce_table(const json& overrides = json::object()) {
  TableResult res;
  for (const auto& name : catalog::table1_manifolds()) {
    auto want = expected_table_row(name);
    if (overrides.contains(name)) apply_override(want, overrides[name]);
    auto got = compute_table_row(name);
    for (const auto& col : table_columns()) {
      auto a = table_cell(got, col), e = table_cell(want, col);
      if (a != e) res.diffs.push_back({name, col, e, a});
    }
    res.actual.push_back(std::move(got));
    res.expected.push_back(std::move(want));
  }
  for (auto it = overrides.begin(); it != overrides.end(); ++it)
    if (catalog::boundary_source(it.key()).empty())
      throw std::domain_error("expected-value override names unknown row '" + it.key() + "'");
  return res;
}

inline std::string format_table(const TableResult& t) {
  std::ostringstream out;
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"name"});
  for (const auto& c : table_columns()) cells.back().push_back(c);
  for (const auto& r : t.actual) {
    cells.push_back({r.name});
    for (const auto& c : table_columns()) cells.back().push_back(table_cell(r, c));
  }
  // column widths in code points so the superscripts line up
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s) w += (ch & 0xC0) != 0x80;
    return w;
  };
  std::vector<std::size_t> w(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], width(row[i]));
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(w[i] - width(row[i]) + 2, ' ');
    }
    out << '\n';
  }
  for (const auto& d : t.diffs)
    out << "MISMATCH " << d.row << "." << d.column << ": expected " << d.expected << ", got " << d.actual << '\n';
  out << (t.matches() ? "all cells match\n" : std::to_string(t.diffs.size()) + " cell(s) differ\n");
  return out.str();
}

}  // namespace walkup
