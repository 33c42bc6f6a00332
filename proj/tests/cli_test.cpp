#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("walkup_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

// Runs a shell command line in which WALKUP stands for the binary.
Run run(std::string cmd) {
  const std::string bin = WALKUP_CLI;
  for (std::size_t at; (at = cmd.find("WALKUP")) != std::string::npos;) cmd.replace(at, 6, bin);
  auto err = scratch() / "stderr.txt";
  cmd += " 2>" + err.string();
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

std::string samples(const char* f) { return std::string(WALKUP_SAMPLES) + "/" + f; }

}  // namespace

TEST(Cli, VerifyA541) {
  auto r = run("WALKUP verify A5_41");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_TRUE(j["walkup"]["Kbar"].get<bool>());
  EXPECT_EQ(j["boundary"]["f_vector"], json({41, 820, 2050, 2255, 902}));
  EXPECT_EQ(j["input"]["name"], "A5_41");
  EXPECT_EQ(j["input"]["sha256"].get<std::string>().size(), 64u);
}

TEST(Cli, VerifyNonball) {
  auto r = run("WALKUP verify nonball_example");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_FALSE(j["stacked"]["ball"].get<bool>());
  EXPECT_TRUE(j["dual_graph"]["tree"].get<bool>());
}

TEST(Cli, VerifyIsDeterministic) {
  auto a = run("WALKUP verify M4_21"), b = run("WALKUP verify M4_21");
  ASSERT_EQ(a.code, 0);
  auto ja = json::parse(a.out), jb = json::parse(b.out);
  ja.erase("timing");
  jb.erase("timing");
  EXPECT_EQ(ja.dump(), jb.dump());
  // keys are emitted sorted
  std::vector<std::string> keys;
  for (auto it = ja.begin(); it != ja.end(); ++it) keys.push_back(it.key());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(Cli, VerifyWritesOutFileAndText) {
  auto out = scratch() / "report.json";
  auto r = run("WALKUP verify S4_6 --out " + out.string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(json::parse(slurp(out))["type"]["type"], "S⁴");
  auto t = run("WALKUP verify S4_6 --text");
  EXPECT_NE(t.out.find("type: S⁴"), std::string::npos);
  EXPECT_NE(t.out.find("consistent"), std::string::npos);
}

TEST(Cli, ParseErrorHasLocation) {
  auto f = scratch() / "bad.facets";
  write(f, "0 1 2\n0 1 q3\n");
  auto r = run("WALKUP verify " + f.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2, column 5"), std::string::npos) << r.err;
}

TEST(Cli, UnknownInputIsInputError) {
  EXPECT_EQ(run("WALKUP verify no_such_thing").code, 2);
  EXPECT_EQ(run("WALKUP verify").code, 106);  // CLI11 usage error
}

TEST(Cli, SparseIdsAreRelabeled) {
  auto f = scratch() / "sparse.facets";
  write(f, "10 20 30\n10 20 40\n10 30 40\n20 30 40\n");
  auto r = run("WALKUP verify " + f.string());
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["input"]["relabeled"].get<bool>());
  EXPECT_EQ(j["input"]["original_vertices"], json({10, 20, 30, 40}));
  EXPECT_TRUE(j["stacked"]["sphere"].get<bool>());
}

TEST(Cli, StrictCapacitySkip) {
  EXPECT_EQ(run("WALKUP verify A5_41 --strict").code, 3);
  EXPECT_EQ(run("WALKUP verify S4_6 --strict").code, 0);
  std::string cyc;
  for (int i = 0; i < 65; ++i) cyc += std::to_string(i) + " " + std::to_string((i + 1) % 65) + "\n";
  auto f = scratch() / "c65.facets";
  write(f, cyc);
  auto r = run("WALKUP aut " + f.string() + " --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["skipped"].contains("automorphisms"));
  EXPECT_EQ(run("WALKUP aut " + f.string() + " --strict").code, 3);
}

TEST(Cli, Table1MatchesAndIsByteStable) {
  auto a = run("WALKUP table1"), b = run("WALKUP table1");
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("all cells match"), std::string::npos);
  auto j = run("WALKUP table1 --json");
  EXPECT_TRUE(json::parse(j.out)["matches"].get<bool>());
}

TEST(Cli, Table1CorruptedExpectationFails) {
  auto r = run("WALKUP table1 --expected " + samples("table1_corrupted.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("N4_21.beta1"), std::string::npos) << r.err;
  EXPECT_NE(r.out.find("MISMATCH N4_21.beta1: expected 9, got 8"), std::string::npos);
  auto bad = scratch() / "bad.json";
  write(bad, "{not json");
  EXPECT_EQ(run("WALKUP table1 --expected " + bad.string()).code, 2);
}

TEST(Cli, ConstructFamilyEqualsExport) {
  auto c = run("WALKUP construct " + samples("A5_41.tree"));
  auto e = run("WALKUP export A5_41");
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out, e.out);
  EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 246);
  EXPECT_EQ(run("WALKUP construct A5_41_tree_family").out, e.out);
}

TEST(Cli, ConstructBrokenFamilyReportsConditionZero) {
  // move u_2 out of T_0 in the sample family
  std::istringstream in(slurp(samples("A5_41.tree")));
  std::string line, text;
  while (std::getline(in, line)) {
    if (line.rfind("t 0 ", 0) == 0) {
      std::istringstream ts(line.substr(4));
      std::string out = "t 0";
      for (int v; ts >> v;) out += " " + std::to_string(v == 2 ? 20 : v);
      line = out;
    }
    text += line + "\n";
  }
  auto f = scratch() / "broken.tree";
  write(f, text);
  auto r = run("WALKUP construct " + f.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("condition (0) subtrees: tree 0"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, DecomposeConstructRoundTrip) {
  for (const char* name : {"A5_21", "B5_21", "B5_26", "A5_41"}) {
    auto rt = run(std::string("WALKUP decompose ") + name + " | WALKUP construct -");
    ASSERT_EQ(rt.code, 0) << name << rt.err;
    EXPECT_EQ(rt.out, run(std::string("WALKUP export ") + name).out) << name;
  }
  auto f = scratch() / "oct.facets";
  write(f, "0 2 4\n0 2 5\n0 3 4\n0 3 5\n1 2 4\n1 2 5\n1 3 4\n1 3 5\n");
  EXPECT_EQ(run("WALKUP decompose " + f.string()).code, 2);
}

TEST(Cli, OrbitExportRoundTrip) {
  auto f = scratch() / "b526.orbit";
  ASSERT_EQ(run("WALKUP export B5_26 --format orbit --out " + f.string()).code, 0);
  EXPECT_EQ(run("WALKUP export " + f.string()).out, run("WALKUP export B5_26").out);
  EXPECT_EQ(run("WALKUP export M4_21 --format orbit").code, 2);
}

TEST(Cli, Homology) {
  auto r = run("WALKUP homology N4_21");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "GF2: (1,8,0,8,1)\nQ: (1,8,0,7,0)\n");
  auto q = run("WALKUP homology M4_21 --field q --json");
  auto j = json::parse(q.out);
  EXPECT_EQ(j["betti"]["Q"], json({1, 8, 0, 8, 1}));
  EXPECT_FALSE(j["betti"].contains("GF2"));
  EXPECT_NE(run("WALKUP homology M4_21 --field z2").code, 0);
}

TEST(Cli, AutWithRelabelings) {
  auto r = run("WALKUP --seed 7 aut M4_41 --relabel 3 --json");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["group"]["order"], 41);
  EXPECT_EQ(j["relabel_orders"], json({41, 41, 41}));
  EXPECT_TRUE(j["consistent"].get<bool>());
}

TEST(Cli, SeededRandomInputs) {
  auto a = run("WALKUP --seed 5 verify 'random_stacked_sphere(4,20)'");
  auto b = run("WALKUP --seed 5 verify 'random_stacked_sphere(4,20)'");
  ASSERT_EQ(a.code, 0) << a.err;
  auto ja = json::parse(a.out), jb = json::parse(b.out);
  EXPECT_EQ(ja["input"]["sha256"], jb["input"]["sha256"]);
  EXPECT_TRUE(ja["stacked"]["sphere"].get<bool>());
  EXPECT_TRUE(ja["walkup"]["K"].get<bool>());
  EXPECT_EQ(ja["chi"], 2);
  auto c = run("WALKUP --seed 6 verify 'random_stacked_sphere(4,20)'");
  EXPECT_NE(json::parse(c.out)["input"]["sha256"], ja["input"]["sha256"]);
}
