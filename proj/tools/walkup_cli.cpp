// walkup: command-line front end for the library.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error,
// 3 capacity skip while --strict is set.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <openssl/evp.h>

#include "CLI11.hpp"

#include "walkup/catalog.hpp"
#include "walkup/io.hpp"
#include "walkup/random.hpp"
#include "walkup/report.hpp"

namespace fs = std::filesystem;
using namespace walkup;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInputError = 2, kCapacity = 3 };

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

std::string slurp(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  return slurp(in);
}

bool has_ext(const std::string& path, std::initializer_list<const char*> exts) {
  auto e = fs::path(path).extension().string();
  for (const char* x : exts)
    if (e == x) return true;
  return false;
}

// Re-raise parse errors with the file name in front.
template <class Fn>
auto parsing(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const parse_error& e) {
    throw input_error(where + ": " + e.what());
  }
}

struct Loaded {
  Complex complex;
  json identity;
  std::optional<TreeFamily> family;        // when the input was a tree family
  std::optional<OrbitPresentation> orbit;  // when the input was an orbit presentation
};

Complex densify(Complex k, json& identity) {
  identity["relabeled"] = !k.is_dense();
  if (!k.is_dense()) {
    identity["original_vertices"] = k.vertices();
    k = relabel_dense(k);
  }
  return k;
}

Complex construct_or_throw(const TreeFamily& f) {
  try {
    return complex_from_tree_family(f);
  } catch (const hypothesis_error& e) {
    throw input_error(e.what());
  }
}

Loaded load(const std::string& source, std::uint64_t seed) {
  Loaded out;
  json id;
  static const std::regex rnd(R"(random_stacked_(ball|sphere)\((\d+),(\d+)\))");
  std::smatch m;
  if (source == "-") {
    out.complex = parsing("<stdin>", [&] { return read_facets(std::cin); });
    id["source"] = "stdin";
  } else if (fs::is_regular_file(source)) {
    std::string text = read_file(source);
    id["source"] = "file";
    id["file"] = source;
    if (has_ext(source, {".tree", ".family"})) {
      std::istringstream in(text);
      out.family = parsing(source, [&] { return read_tree_family(in); });
      out.complex = construct_or_throw(*out.family);
    } else if (has_ext(source, {".orbit"})) {
      std::istringstream in(text);
      out.orbit = parsing(source, [&] { return read_orbit_presentation(in); });
      try {
        out.complex = expand_orbit(*out.orbit);
      } catch (const std::domain_error& e) {
        throw input_error(source + ": " + e.what());
      }
    } else {
      out.complex = parsing(source, [&] { return read_facets(std::string_view(text)); });
    }
  } else if (std::regex_match(source, m, rnd)) {
    int d = std::stoi(m[2]), n = std::stoi(m[3]);
    if (d < 1 || d > 12 || n < 1 || n > 2000) throw input_error("random complex parameters out of range");
    random::Engine rng(seed);
    Complex ball = random::stacked_ball(m[1] == "ball" ? d : d + 1, n, rng);
    out.complex = m[1] == "ball" ? ball : boundary_complex(ball);
    id["source"] = "random";
    id["name"] = source;
    id["seed"] = seed;
  } else if (catalog::is_known(source)) {
    if (catalog::is_family_name(source)) out.family = catalog::get_family(source);
    out.complex = catalog::get(source);
    id["source"] = "catalog";
    id["name"] = source;
  } else {
    throw input_error("'" + source + "' is neither a readable file nor a catalog name");
  }
  out.complex = densify(std::move(out.complex), id);
  id["sha256"] = sha256_hex(facets_to_string(out.complex));
  out.identity = std::move(id);
  return out;
}

// Writes to --out when given, else stdout.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw input_error("cannot write '" + out_path + "'");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

VerifyOptions field_options(const std::string& field) {
  VerifyOptions o;
  o.gf2 = field != "q";
  o.q = field != "gf2";
  return o;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string verify_text(const json& r) {
  std::ostringstream out;
  auto str = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  out << "input: " << str(r["input"].value("name", r["input"].value("file", std::string("stdin")))) << "\n";
  out << "sha256: " << r["input"]["sha256"].get<std::string>() << "\n";
  out << "dim: " << r["dim"] << "  facets: " << r["facets"] << "\n";
  out << "f-vector: (" << join(r["f_vector"].get<std::vector<std::int64_t>>()) << ")  chi: " << r["chi"] << "\n";
  out << "pseudomanifold: " << r["pseudomanifold"].dump() << "\n";
  out << "stacked: " << r["stacked"].dump() << "  dual graph tree: " << r["dual_graph"]["tree"] << "\n";
  out << "walkup: " << r["walkup"].dump() << "  neighborly: " << r["neighborly"] << "\n";
  for (auto it = r["betti"].begin(); it != r["betti"].end(); ++it)
    out << "betti " << it.key() << ": (" << join(it.value().get<std::vector<std::int64_t>>()) << ")\n";
  out << "orientable: " << r["orientable"].dump() << "\n";
  if (!r["automorphisms"].is_null())
    out << "aut: order " << str(r["automorphisms"]["order"]) << ", " << str(r["automorphisms"]["structure"]) << "\n";
  if (!r["type"].is_null()) out << "type: " << r["type"]["type"].get<std::string>() << "\n";
  if (!r["tight_certificate"].is_null())
    out << "tight certificate: " << r["tight_certificate"]["verdict"].get<std::string>() << " over "
        << r["tight_certificate"]["field"].get<std::string>() << "\n";
  if (!r["boundary"].is_null())
    out << "boundary f-vector: (" << join(r["boundary"]["f_vector"].get<std::vector<std::int64_t>>()) << ")\n";
  for (auto it = r["skipped"].begin(); it != r["skipped"].end(); ++it)
    out << "skipped " << it.key() << ": " << it.value().get<std::string>() << "\n";
  for (const auto& s : r["inconsistencies"]) out << "INCONSISTENT: " << s.get<std::string>() << "\n";
  out << (r["consistent"].get<bool>() ? "consistent\n" : "inconsistent\n");
  return out.str();
}

struct Common {
  std::string out;
  std::string field = "both";
  bool strict = false;
  bool json_out = false;
  bool text_out = false;
  std::uint64_t seed = 1;
};

void add_format(CLI::App* c, Common& o) {
  auto* j = c->add_flag("--json", o.json_out, "JSON output");
  auto* t = c->add_flag("--text", o.text_out, "plain text output");
  j->excludes(t);
}

void add_out(CLI::App* c, Common& o) { c->add_option("--out,-o", o.out, "write output to this file"); }

void add_field(CLI::App* c, Common& o) {
  c->add_option("--field", o.field, "coefficient field")->check(CLI::IsMember({"gf2", "q", "both"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walkup-class triangulations: verification, construction and export"};
  app.require_subcommand(1);
  Common o;
  std::string input;
  std::string expected_path;
  std::string format = "facets";
  int relabelings = 0;

  app.add_option("--seed", o.seed, "seed for random_stacked_ball(d,m) / random_stacked_sphere(d,m) and relabelings");

  auto* verify = app.add_subcommand("verify", "run the full verification pipeline on a complex");
  verify->add_option("input", input, "catalog name, facet/.tree/.orbit file, or - for stdin")->required();
  add_out(verify, o);
  add_field(verify, o);
  add_format(verify, o);
  verify->add_flag("--strict", o.strict, "treat capacity skips as failures (exit 3)");

  auto* table1 = app.add_subcommand("table1", "recompute the four 4-manifold rows and compare with expected values");
  table1->add_option("--expected", expected_path, "JSON file overriding expected cells");
  add_out(table1, o);
  add_format(table1, o);

  auto* construct = app.add_subcommand("construct", "build a complex from a tree family file");
  construct->add_option("family", input, "tree family file, catalog family name, or - for stdin")->required();
  add_out(construct, o);
  add_format(construct, o);

  auto* decompose = app.add_subcommand("decompose", "write the tree family of a neighborly member of Kbar(d)");
  decompose->add_option("input", input)->required();
  add_out(decompose, o);

  auto* exp = app.add_subcommand("export", "write a complex as a facet file (or orbit presentation / tree family)");
  exp->add_option("input", input)->required();
  exp->add_option("--format", format, "facets, orbit or family")->check(CLI::IsMember({"facets", "orbit", "family"}));
  add_out(exp, o);

  auto* homology = app.add_subcommand("homology", "Betti numbers");
  homology->add_option("input", input)->required();
  add_field(homology, o);
  add_format(homology, o);
  add_out(homology, o);

  auto* aut = app.add_subcommand("aut", "automorphism group");
  aut->add_option("input", input)->required();
  aut->add_option("--relabel", relabelings, "also recompute under N random relabelings and compare orders")
      ->check(CLI::NonNegativeNumber);
  add_format(aut, o);
  add_out(aut, o);
  aut->add_flag("--strict", o.strict, "treat a capacity skip as a failure (exit 3)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      auto in = load(input, o.seed);
      auto res = verify_complex(in.complex, in.identity, field_options(o.field));
      emit(o.out, o.text_out ? verify_text(res.report) : dump(res.report));
      for (const auto& s : res.inconsistencies) std::cerr << "inconsistent: " << s << "\n";
      if (!res.consistent()) return kMismatch;
      if (o.strict && !res.skips.empty()) {
        for (const auto& s : res.skips) std::cerr << "capacity skip: " << s << "\n";
        return kCapacity;
      }
      return kOk;
    }

    if (*table1) {
      json overrides = json::object();
      if (!expected_path.empty()) {
        try {
          overrides = json::parse(read_file(expected_path));
        } catch (const json::parse_error& e) {
          throw input_error(expected_path + ": " + e.what());
        }
      }
      TableResult t;
      try {
        t = reproduce_table(overrides);
      } catch (const json::exception& e) {
        throw input_error(expected_path + ": " + e.what());
      }
      if (o.json_out) {
        json j;
        j["schema"] = 1;
        j["matches"] = t.matches();
        for (std::size_t i = 0; i < t.actual.size(); ++i) {
          json row;
          for (const auto& c : table_columns())
            row[c] = {{"actual", table_cell(t.actual[i], c)}, {"expected", table_cell(t.expected[i], c)}};
          j["rows"][t.actual[i].name] = row;
        }
        json diffs = json::array();
        for (const auto& d : t.diffs)
          diffs.push_back({{"row", d.row}, {"column", d.column}, {"expected", d.expected}, {"actual", d.actual}});
        j["diffs"] = diffs;
        emit(o.out, dump(j));
      } else {
        emit(o.out, format_table(t));
      }
      for (const auto& d : t.diffs)
        std::cerr << "mismatch in " << d.row << "." << d.column << ": expected " << d.expected << ", got "
                  << d.actual << "\n";
      return t.matches() ? kOk : kMismatch;
    }

    if (*construct) {
      TreeFamily f;
      if (input == "-") {
        f = parsing("<stdin>", [&] { return read_tree_family(std::cin); });
      } else if (fs::is_regular_file(input)) {
        std::ifstream in(input);
        f = parsing(input, [&] { return read_tree_family(in); });
      } else if (catalog::is_family_name(input)) {
        f = catalog::get_family(input);
      } else {
        throw input_error("'" + input + "' is neither a readable file nor a catalog family");
      }
      auto rep = verify_hypotheses(f);
      if (!rep.passed()) {
        if (o.json_out) std::cout << dump(json{{"schema", 1}, {"hypotheses", rep}});
        std::cerr << "tree family fails the construction hypotheses:\n" << rep.summary();
        for (std::size_t i = 0; i < rep.conditions.size(); ++i)
          for (const auto& w : rep.conditions[i].witnesses)
            std::cerr << "  condition (" << i << ") " << rep.conditions[i].name << ": " << w << "\n";
        return kMismatch;
      }
      emit(o.out, facets_to_string(complex_from_tree_family(f)));
      return kOk;
    }

    if (*decompose) {
      auto in = load(input, o.seed);
      TreeFamily f;
      try {
        f = tree_family_from_complex(in.complex);
      } catch (const std::domain_error& e) {
        throw input_error(e.what());
      }
      std::ostringstream out;
      write_tree_family(out, f);
      emit(o.out, out.str());
      return kOk;
    }

    if (*exp) {
      std::ostringstream out;
      if (format == "orbit") {
        std::optional<OrbitPresentation> p;
        if (fs::is_regular_file(input)) p = load(input, o.seed).orbit;
        else if (catalog::is_known(input)) {
          try {
            p = catalog::presentation(input);
          } catch (const std::domain_error&) {
          }
        }
        if (!p) throw input_error("'" + input + "' has no orbit presentation");
        write_orbit_presentation(out, *p);
      } else if (format == "family") {
        auto in = load(input, o.seed);
        if (in.family) write_tree_family(out, *in.family);
        else {
          try {
            write_tree_family(out, tree_family_from_complex(in.complex));
          } catch (const std::domain_error& e) {
            throw input_error(e.what());
          }
        }
      } else {
        write_facets(out, load(input, o.seed).complex);
      }
      emit(o.out, out.str());
      return kOk;
    }

    if (*homology) {
      auto in = load(input, o.seed);
      auto opt = field_options(o.field);
      json j;
      j["schema"] = 1;
      j["input"] = in.identity;
      std::ostringstream text;
      for (Field f : {Field::GF2, Field::Q}) {
        if ((f == Field::GF2 && !opt.gf2) || (f == Field::Q && !opt.q)) continue;
        auto b = betti_numbers(in.complex, f);
        j["betti"][to_string(f)] = b;
        text << to_string(f) << ": (" << join(b.betti) << ")\n";
      }
      emit(o.out, o.json_out ? dump(j) : text.str());
      return kOk;
    }

    if (*aut) {
      auto in = load(input, o.seed);
      if (in.complex.num_vertices() > kAutomorphismMaxVertices) {
        std::string why = std::to_string(in.complex.num_vertices()) + " vertices exceeds the limit of " +
                          std::to_string(kAutomorphismMaxVertices);
        emit(o.out, o.json_out ? dump(json{{"schema", 1}, {"input", in.identity}, {"skipped", {{"automorphisms", why}}}})
                               : "skipped: " + why + "\n");
        return o.strict ? kCapacity : kOk;
      }
      auto g = automorphism_group(in.complex);
      bool ok = true;
      for (const auto& p : g.generators) ok = ok && is_automorphism(in.complex, p);
      json runs = json::array();
      random::Engine rng(o.seed);
      for (int i = 0; i < relabelings; ++i) {
        auto p = random::permutation(in.complex.num_vertices(), rng);
        auto h = automorphism_group(relabel(in.complex, p.image));
        runs.push_back(order_json(h.order));
        ok = ok && h.order == g.order;
      }
      json j{{"schema", 1}, {"input", in.identity}, {"group", g}, {"consistent", ok}};
      if (relabelings > 0) j["relabel_orders"] = runs;
      std::ostringstream text;
      text << "order: " << g.order.str() << "\nstructure: " << structure_tag(g) << "\n";
      for (const auto& p : g.generators) text << "generator: " << json(p).dump() << "\n";
      if (relabelings > 0) text << "relabelings: " << relabelings << (ok ? ", all orders agree\n" : ", ORDER MISMATCH\n");
      emit(o.out, o.json_out ? dump(j) : text.str());
      return ok ? kOk : kMismatch;
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const capacity_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return o.strict ? kCapacity : kOk;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
