#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "walkup/catalog.hpp"
#include "walkup/homology.hpp"
#include "walkup/random.hpp"

using namespace walkup;
using V = std::vector<std::int64_t>;

namespace {

std::vector<Complex> small_corpus() {
  std::vector<Complex> ks = {fixtures::octahedron(), fixtures::torus_7(),   fixtures::rp2_6(),
                             fixtures::cycle(5),     fixtures::book3(),     fixtures::wedge_of_spheres(),
                             standard_sphere(3),     standard_ball(4),      catalog::get("nonball_example")};
  random::Engine rng(21);
  for (int i = 0; i < 12; ++i) ks.push_back(random::tree_dual_complex(2 + i % 2, 4 + i, rng));
  for (int i = 0; i < 6; ++i) ks.push_back(boundary_complex(random::stacked_ball(3 + i % 2, 2 + i, rng)));
  return ks;
}

std::vector<SparseColumn> random_columns(random::Engine& rng, int rows, int cols, int lo, int hi, double density) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution keep(density);
  std::vector<SparseColumn> out;
  for (int c = 0; c < cols; ++c) {
    SparseColumn col;
    for (int r = 0; r < rows; ++r)
      if (keep(rng)) {
        int v = val(rng);
        if (v != 0) col.emplace_back(r, v);
      }
    out.push_back(col);
  }
  return out;
}

std::vector<std::vector<int>> dense(const std::vector<SparseColumn>& cols, int rows) {
  std::vector<std::vector<int>> m(rows, std::vector<int>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (auto [r, v] : cols[c]) m[r][c] = v;
  return m;
}

}  // namespace

TEST(Boundary, RangeAndShape) {
  auto k = standard_sphere(2);
  EXPECT_THROW(boundary_matrix(k, 0, Field::GF2), std::domain_error);
  EXPECT_THROW(boundary_matrix(k, 3, Field::Q), std::domain_error);
  auto b = boundary_matrix(k, 2, Field::Q);
  EXPECT_EQ(b.rows.size(), 6u);
  EXPECT_EQ(b.cols.size(), 4u);
  // d[0,1,2] = [1,2] - [0,2] + [0,1]
  EXPECT_EQ(b.columns[0], (SparseColumn{{0, 1}, {1, -1}, {3, 1}}));
}

TEST(Boundary, ComposesToZero) {
  auto ks = small_corpus();
  for (const char* n : {"S4_6", "M4_21", "N4_26"}) ks.push_back(catalog::get(n));
  for (const auto& k : ks)
    for (Field f : {Field::GF2, Field::Q})
      for (int j = 2; j <= k.dim(); ++j)
        EXPECT_TRUE(composes_to_zero(boundary_matrix(k, j - 1, f), boundary_matrix(k, j, f)));
  EXPECT_THROW(composes_to_zero(boundary_matrix(ks[0], 1, Field::Q), boundary_matrix(ks[1], 2, Field::Q)),
               std::domain_error);
}

TEST(Boundary, MatchesDenseOracle) {
  for (const auto& k : small_corpus())
    for (int j = 1; j <= k.dim(); ++j) {
      auto b = boundary_matrix(k, j, Field::Q);
      EXPECT_EQ(dense(b.columns, static_cast<int>(b.rows.size())), oracle::boundary(k, j));
    }
}

TEST(Rank, Gf2MatchesTransposeAndOracle) {
  random::Engine rng(1);
  for (int t = 0; t < 200; ++t) {
    int rows = 1 + static_cast<int>(rng() % 150), cols = 1 + static_cast<int>(rng() % 150);
    auto c = random_columns(rng, rows, cols, 1, 1, 0.05 + (t % 5) * 0.1);
    auto m = BitMatrix::from_columns(c, rows);
    EXPECT_EQ(m.rank(), m.transposed().rank());
    EXPECT_EQ(gf2_rank(c, rows), m.rank());
    if (rows <= 60 && cols <= 60) {
      EXPECT_EQ(gf2_rank(c, rows), oracle::rank_gf2(dense(c, rows)));
    }
  }
}

TEST(Rank, RationalMatchesOracle) {
  random::Engine rng(2);
  for (int t = 0; t < 150; ++t) {
    int rows = 1 + static_cast<int>(rng() % 25), cols = 1 + static_cast<int>(rng() % 25);
    auto c = random_columns(rng, rows, cols, -3, 3, 0.3);
    EXPECT_EQ(rational_rank(c), oracle::rank_q(dense(c, rows))) << t;
  }
}

TEST(Rank, RationalSurvivesInt64Overflow) {
  // entries near 2^30 overflow int64 after two elimination steps
  random::Engine rng(3);
  for (int t = 0; t < 20; ++t) {
    int n = 6 + t % 6;
    auto c = random_columns(rng, n, n, -(1 << 30), 1 << 30, 1.0);
    // force a dependency: last column = first + second
    if (n >= 3) {
      std::vector<long long> sum(n, 0);
      for (auto [r, v] : c[0]) sum[r] += v;
      for (auto [r, v] : c[1]) sum[r] -= v;
      SparseColumn last;
      for (int r = 0; r < n; ++r)
        if (sum[r] != 0 && sum[r] >= INT32_MIN && sum[r] <= INT32_MAX) last.emplace_back(r, static_cast<int>(sum[r]));
      if (last.size() == static_cast<std::size_t>(n)) c.back() = last;
    }
    EXPECT_EQ(rational_rank(c), oracle::rank_q(dense(c, n))) << t;
  }
}

TEST(Rank, RationalSeesTorsionThatGf2Misses) {
  // [[2]] has rank 1 over Q and 0 over GF2
  std::vector<SparseColumn> c = {{{0, 2}}};
  EXPECT_EQ(rational_rank(c), 1u);
  EXPECT_EQ(gf2_rank(c, 1), 0u);
}

TEST(Betti, KnownSurfaces) {
  EXPECT_EQ(betti_numbers(fixtures::torus_7(), Field::GF2).betti, (V{1, 2, 1}));
  EXPECT_EQ(betti_numbers(fixtures::torus_7(), Field::Q).betti, (V{1, 2, 1}));
  EXPECT_EQ(betti_numbers(fixtures::rp2_6(), Field::GF2).betti, (V{1, 1, 1}));
  EXPECT_EQ(betti_numbers(fixtures::rp2_6(), Field::Q).betti, (V{1, 0, 0}));
  EXPECT_EQ(betti_numbers(fixtures::octahedron(), Field::Q).betti, (V{1, 0, 1}));
  EXPECT_EQ(betti_numbers(fixtures::wedge_of_spheres(), Field::GF2).betti, (V{1, 0, 2}));
  EXPECT_EQ(betti_numbers(fixtures::cycle(6), Field::Q).betti, (V{1, 1}));
  EXPECT_EQ(betti_numbers(Complex({{0, 1}, {2, 3}}), Field::Q).betti, (V{2, 0}));
  EXPECT_EQ(betti_numbers(standard_ball(4), Field::Q).betti, (V{1, 0, 0, 0, 0}));
  EXPECT_EQ(betti_numbers(standard_sphere(5), Field::GF2).betti, (V{1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(betti_number(fixtures::rp2_6(), 1, Field::GF2), 1);
  EXPECT_EQ(betti_number(fixtures::rp2_6(), 7, Field::GF2), 0);
  EXPECT_THROW(betti_number(fixtures::rp2_6(), -1, Field::GF2), std::domain_error);
  EXPECT_THROW(betti_numbers(Complex(), Field::Q), std::domain_error);
}

TEST(Betti, MatchesOracleAndEuler) {
  for (const auto& k : small_corpus()) {
    auto b2 = betti_numbers(k, Field::GF2), bq = betti_numbers(k, Field::Q);
    EXPECT_EQ(b2.betti, oracle::betti(k, false));
    EXPECT_EQ(bq.betti, oracle::betti(k, true));
    EXPECT_EQ(b2.alternating_sum(), euler_characteristic(k));
    EXPECT_EQ(bq.alternating_sum(), euler_characteristic(k));
    for (int j = 0; j <= k.dim(); ++j) EXPECT_EQ(betti_number(k, j, Field::Q), bq.at(j));
  }
}

TEST(Betti, InducedSubcomplexMayBeMixed) {
  auto k = induced_subcomplex(fixtures::octahedron(), {0, 1, 2, 4});
  EXPECT_EQ(betti_numbers(k, Field::Q).betti, oracle::betti(k, true));
}

TEST(Orientability, Surfaces) {
  EXPECT_TRUE(is_orientable(fixtures::torus_7()));
  EXPECT_TRUE(is_orientable(fixtures::octahedron()));
  EXPECT_FALSE(is_orientable(fixtures::rp2_6()));
  EXPECT_TRUE(is_orientable(fixtures::cycle(4)));
  EXPECT_THROW(is_orientable(standard_ball(2)), std::domain_error);
  EXPECT_THROW(is_orientable(fixtures::book3()), std::domain_error);
  Complex two_spheres({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}});
  EXPECT_THROW(is_orientable(two_spheres), std::domain_error);
}

TEST(Orientability, AgreesWithTopRationalBetti) {
  std::vector<Complex> ks = {fixtures::torus_7(), fixtures::rp2_6(), fixtures::octahedron(), standard_sphere(4)};
  random::Engine rng(4);
  for (int i = 0; i < 10; ++i) ks.push_back(boundary_complex(random::stacked_ball(3 + i % 3, 3 + i, rng)));
  for (const auto& k : ks)
    EXPECT_EQ(is_orientable(k), betti_number(k, k.dim(), Field::Q) == 1);
}

TEST(Type, Names) {
  EXPECT_EQ(walkup_type_name(4, 0, true), "S⁴");
  EXPECT_EQ(walkup_type_name(4, 8, true), "(S³×S¹)^#8");
  EXPECT_EQ(walkup_type_name(4, 8, false), "(S³⋊S¹)^#8 twisted");
  EXPECT_EQ(walkup_type_name(10, 12, true), "(S⁹×S¹)^#12");
}

TEST(Type, Identify) {
  auto t = identify_type(standard_sphere(4));
  EXPECT_EQ(t.type, "S⁴");
  EXPECT_TRUE(t.euler_relation);
  EXPECT_EQ(t.chi, 2);
  EXPECT_THROW(identify_type(standard_sphere(3)), std::domain_error);
  EXPECT_THROW(identify_type(standard_ball(4)), std::domain_error);
  auto m = identify_type(catalog::get("M4_21"));
  EXPECT_EQ(m.type, "(S³×S¹)^#8");
  EXPECT_EQ(m.beta1, 8);
  EXPECT_TRUE(m.orientable);
  EXPECT_TRUE(m.euler_relation);
}

TEST(Tight, StandardSpheres) {
  for (int d = 1; d <= 5; ++d) {
    EXPECT_TRUE(is_tight_bruteforce(standard_sphere(d), Field::GF2)) << d;
    EXPECT_TRUE(is_tight_bruteforce(standard_sphere(d), Field::Q)) << d;
  }
}

TEST(Tight, SmallExamples) {
  EXPECT_FALSE(is_tight_bruteforce(fixtures::cycle(4), Field::GF2));
  EXPECT_FALSE(is_tight_bruteforce(fixtures::octahedron(), Field::GF2));
  EXPECT_TRUE(is_tight_bruteforce(fixtures::torus_7(), Field::GF2));
  EXPECT_TRUE(is_tight_bruteforce(fixtures::torus_7(), Field::Q));
  EXPECT_TRUE(is_tight_bruteforce(fixtures::rp2_6(), Field::GF2));
  EXPECT_FALSE(is_tight_bruteforce(fixtures::rp2_6(), Field::Q));
  EXPECT_FALSE(is_tight_bruteforce(Complex({{0, 1}, {2, 3}}), Field::GF2));
}

TEST(Tight, MatchesDefinitionOracle) {
  std::vector<Complex> ks = {fixtures::cycle(3), fixtures::cycle(4), fixtures::octahedron(), fixtures::torus_7(),
                             fixtures::rp2_6(), standard_sphere(3), standard_ball(2), fixtures::wedge_of_spheres()};
  random::Engine rng(6);
  for (int i = 0; i < 4; ++i) ks.push_back(boundary_complex(random::stacked_ball(3, 2 + i, rng)));
  for (const auto& k : ks) EXPECT_EQ(is_tight_bruteforce(k, Field::Q), oracle::tight_q(k));
}

TEST(Tight, CapacityGuard) {
  EXPECT_THROW(is_tight_bruteforce(fixtures::cycle(17), Field::GF2), capacity_error);
  EXPECT_NO_THROW(is_tight_bruteforce(fixtures::cycle(16), Field::GF2));
}

TEST(Tight, CertificateDimensionThree) {
  // boundary of the 4-simplex: f0 = 5, beta1 = 0, and 20*0 == 1*0
  auto c = certify_tight(standard_sphere(3));
  EXPECT_TRUE(c.in_kstar);
  EXPECT_TRUE(c.tight);
  EXPECT_EQ(c.verdict, "tight");
  // a non-neighborly stacked 3-sphere is not in K*(3): no certificate
  random::Engine rng(7);
  auto s = boundary_complex(random::stacked_ball(4, 2, rng));
  auto n = certify_tight(s);
  EXPECT_FALSE(n.in_kstar);
  EXPECT_EQ(n.verdict, "not certified");
  EXPECT_FALSE(is_tight_bruteforce(s, Field::GF2));
}

TEST(Tight, CertificateFourManifolds) {
  auto a = certify_tight(catalog::get("M4_21"));
  EXPECT_TRUE(a.tight && a.strongly_minimal);
  EXPECT_EQ(a.field, Field::Q);
  auto b = certify_tight(catalog::get("N4_21"));
  EXPECT_TRUE(b.tight && b.strongly_minimal);
  EXPECT_EQ(b.field, Field::GF2);
  auto s = certify_tight(standard_sphere(4));
  EXPECT_TRUE(s.tight);
  EXPECT_TRUE(is_tight_bruteforce(standard_sphere(4), Field::Q));
}
