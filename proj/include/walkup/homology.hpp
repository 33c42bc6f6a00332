#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "walkup/classifiers.hpp"
#include "walkup/complex.hpp"
#include "walkup/linalg.hpp"

namespace walkup {

enum class Field { GF2, Q };

inline const char* to_string(Field f) { return f == Field::GF2 ? "GF2" : "Q"; }

// Simplicial boundary map C_j -> C_{j-1}. Rows and columns follow the
// canonical face order; a face is oriented by its sorted vertex order.
struct ChainBoundary {
  int dim = 0;
  Field field = Field::GF2;
  std::vector<Face> rows;  // (j-1)-faces
  std::vector<Face> cols;  // j-faces
  std::vector<SparseColumn> columns;

  std::size_t rank() const {
    return field == Field::GF2 ? gf2_rank(columns, rows.size()) : rational_rank(columns);
  }
};

namespace detail {

inline ChainBoundary make_boundary(std::vector<Face> rows, std::vector<Face> cols, int j, Field field) {
  ChainBoundary b;
  b.dim = j;
  b.field = field;
  b.rows = std::move(rows);
  b.cols = std::move(cols);
  b.columns.reserve(b.cols.size());
  Face facet;
  for (const auto& s : b.cols) {
    SparseColumn col;
    for (int k = 0; k <= j; ++k) {
      facet.assign(s.begin(), s.end());
      facet.erase(facet.begin() + k);
      auto it = std::lower_bound(b.rows.begin(), b.rows.end(), facet);
      int r = static_cast<int>(it - b.rows.begin());
      int sign = field == Field::GF2 ? 1 : (k % 2 == 0 ? 1 : -1);
      col.emplace_back(r, sign);
    }
    std::sort(col.begin(), col.end());
    b.columns.push_back(std::move(col));
  }
  return b;
}

}  // namespace detail

inline ChainBoundary boundary_matrix(const Complex& k, int j, Field field) {
  if (j < 1 || j > k.dim())
    throw std::domain_error("boundary_matrix: dimension " + std::to_string(j) + " out of range");
  return detail::make_boundary(enumerate_faces(k, j - 1), enumerate_faces(k, j), j, field);
}

// True iff lower o upper is the zero map (lower = d_{j-1}, upper = d_j).
inline bool composes_to_zero(const ChainBoundary& lower, const ChainBoundary& upper) {
  if (lower.cols != upper.rows) throw std::domain_error("composes_to_zero: boundary maps do not chain");
  std::vector<std::int64_t> acc(lower.rows.size(), 0);
  for (const auto& col : upper.columns) {
    std::fill(acc.begin(), acc.end(), 0);
    for (auto [mid, a] : col)
      for (auto [r, b] : lower.columns[mid]) acc[r] += static_cast<std::int64_t>(a) * b;
    for (auto v : acc)
      if (upper.field == Field::GF2 ? (v % 2 != 0) : (v != 0)) return false;
  }
  return true;
}

struct BettiVector {
  Field field = Field::GF2;
  std::vector<std::int64_t> betti;  // beta_0 .. beta_d

  std::int64_t at(std::size_t j) const { return j < betti.size() ? betti[j] : 0; }
  std::int64_t alternating_sum() const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < betti.size(); ++j) s += (j % 2 == 0) ? betti[j] : -betti[j];
    return s;
  }
};

// Unreduced Betti numbers by exact elimination.
inline BettiVector betti_numbers(const Complex& k, Field field) {
  if (k.empty()) throw std::domain_error("betti_numbers: empty complex");
  const int d = k.dim();
  std::vector<std::vector<Face>> faces;
  for (int j = 0; j <= d; ++j) faces.push_back(enumerate_faces(k, j));
  std::vector<std::int64_t> rank(d + 2, 0);  // rank[j] = rank of d_j
  for (int j = 1; j <= d; ++j)
    rank[j] = static_cast<std::int64_t>(detail::make_boundary(faces[j - 1], faces[j], j, field).rank());
  BettiVector out;
  out.field = field;
  for (int j = 0; j <= d; ++j)
    out.betti.push_back(static_cast<std::int64_t>(faces[j].size()) - rank[j] - rank[j + 1]);
  return out;
}

inline std::int64_t betti_number(const Complex& k, int j, Field field) {
  if (k.empty() || j < 0) throw std::domain_error("betti_number: bad arguments");
  if (j > k.dim()) return 0;
  auto faces_j = enumerate_faces(k, j);
  std::int64_t r_low = 0, r_high = 0;
  if (j >= 1) r_low = static_cast<std::int64_t>(detail::make_boundary(enumerate_faces(k, j - 1), faces_j, j, field).rank());
  if (j + 1 <= k.dim())
    r_high = static_cast<std::int64_t>(detail::make_boundary(faces_j, enumerate_faces(k, j + 1), j + 1, field).rank());
  return static_cast<std::int64_t>(faces_j.size()) - r_low - r_high;
}

// Orientation propagation across the dual graph. Requires a closed,
// connected weak pseudomanifold.
inline bool is_orientable(const Complex& k) {
  require_pure(k, "is_orientable");
  if (!is_weak_pseudomanifold(k)) throw std::domain_error("is_orientable: not a weak pseudomanifold");
  const auto inc = ridge_incidence(k);
  for (const auto& [r, fs] : inc)
    if (fs.size() != 2) throw std::domain_error("is_orientable: complex is not closed");

  const auto& facets = k.facets();
  const int d = k.dim();
  // position of the vertex missing from a ridge in a facet
  auto missing_pos = [&](const Face& facet, const Face& ridge) {
    for (int p = 0; p < d; ++p)
      if (facet[p] != ridge[p]) return p;
    return d;
  };
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(facets.size());  // (neighbor, relative sign)
  for (const auto& [r, fs] : inc) {
    int pa = missing_pos(facets[fs[0]], r);
    int pb = missing_pos(facets[fs[1]], r);
    // induced orientations on r must cancel: s_a (-1)^pa = -s_b (-1)^pb
    int rel = ((pa + pb) % 2 == 0) ? -1 : 1;
    adj[fs[0]].emplace_back(fs[1], rel);
    adj[fs[1]].emplace_back(fs[0], rel);
  }
  std::vector<int> sign(facets.size(), 0);
  std::deque<std::size_t> queue{0};
  sign[0] = 1;
  std::size_t seen = 1;
  bool consistent = true;
  while (!queue.empty()) {
    auto a = queue.front();
    queue.pop_front();
    for (auto [b, rel] : adj[a]) {
      int want = sign[a] * rel;
      if (sign[b] == 0) {
        sign[b] = want;
        ++seen;
        queue.push_back(b);
      } else if (sign[b] != want) {
        consistent = false;
      }
    }
  }
  if (seen != facets.size()) throw std::domain_error("is_orientable: complex is not connected");
  return consistent;
}

namespace detail {

inline std::string superscript(long long n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(n), out;
  for (char c : s) out += digits[c - '0'];
  return out;
}

}  // namespace detail

// Homeomorphism type of a connected member of K(d), d >= 4: the sphere for
// beta1 = 0, otherwise a connected sum of beta1 copies of the orientable or
// the twisted S^{d-1}-bundle over S^1.
inline std::string walkup_type_name(int d, std::int64_t beta1, bool orientable) {
  if (beta1 == 0) return "S" + detail::superscript(d);
  std::string fibre = "S" + detail::superscript(d - 1);
  if (orientable) return "(" + fibre + "×S¹)^#" + std::to_string(beta1);
  return "(" + fibre + "⋊S¹)^#" + std::to_string(beta1) + " twisted";
}

struct TypeReport {
  int dim = 0;
  std::int64_t beta1 = 0;  // over GF2
  bool orientable = false;
  std::int64_t chi = 0;
  bool euler_relation = false;  // chi == 2 - 2 beta1
  std::string type;
};

inline TypeReport identify_type(const Complex& k) {
  if (k.dim() < 4) throw std::domain_error("identify_type: dimension must be at least 4");
  if (!in_walkup_class(k, WalkupClass::K)) throw std::domain_error("identify_type: not in Walkup's class K(d)");
  if (!dual_graph(k).is_connected()) throw std::domain_error("identify_type: complex is not connected");
  TypeReport t;
  t.dim = k.dim();
  t.beta1 = betti_number(k, 1, Field::GF2);
  t.orientable = is_orientable(k);
  t.chi = euler_characteristic(k);
  t.euler_relation = t.chi == 2 - 2 * t.beta1;
  t.type = walkup_type_name(t.dim, t.beta1, t.orientable);
  return t;
}

inline constexpr std::size_t kTightBruteforceMaxVertices = 16;

// Exhaustive tightness check over all induced subcomplexes. For an induced
// subcomplex Y of X the map H_j(Y) -> H_j(X) is injective iff
//   rank d_{j+1}(X) - rank(rows of d_{j+1}(X) outside Y) == rank d_{j+1}(Y),
// since its kernel is (B_j(X) n C_j(Y)) / B_j(Y).
inline bool is_tight_bruteforce(const Complex& k, Field field) {
  if (k.num_vertices() > kTightBruteforceMaxVertices)
    throw capacity_error("is_tight_bruteforce: " + std::to_string(k.num_vertices()) + " vertices exceeds the limit of " +
                         std::to_string(kTightBruteforceMaxVertices) + "; use certify_tight instead");
  if (k.empty()) return false;
  const Complex x = k.is_dense() ? k : relabel_dense(k);
  const int d = x.dim();
  const int n = static_cast<int>(x.num_vertices());

  std::vector<std::vector<Face>> faces;
  for (int j = 0; j <= d; ++j) faces.push_back(enumerate_faces(x, j));
  auto mask_of = [](const Face& f) {
    std::uint32_t m = 0;
    for (Vertex v : f) m |= std::uint32_t{1} << v;
    return m;
  };
  std::vector<std::vector<std::uint32_t>> masks;
  for (const auto& fj : faces) {
    std::vector<std::uint32_t> ms;
    for (const auto& f : fj) ms.push_back(mask_of(f));
    masks.push_back(std::move(ms));
  }
  // H_0 injectivity at W = V(X) is connectedness
  std::vector<ChainBoundary> up;  // up[j] = d_{j+1}
  std::vector<std::size_t> full_rank;
  for (int j = 0; j < d; ++j) {
    up.push_back(detail::make_boundary(faces[j], faces[j + 1], j + 1, field));
    full_rank.push_back(up.back().rank());
  }
  if (static_cast<std::int64_t>(faces[0].size()) - (d >= 1 ? static_cast<std::int64_t>(full_rank[0]) : 0) != 1)
    return false;

  auto rank_of = [&](const std::vector<SparseColumn>& cols, std::size_t nrows) {
    return field == Field::GF2 ? gf2_rank(cols, nrows) : rational_rank(cols);
  };

  // Gray-code order over vertex subsets
  std::uint32_t w = 0;
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t i = 1; i < total; ++i) {
    w ^= std::uint32_t{1} << __builtin_ctz(i);
    for (int j = 0; j < d; ++j) {
      const auto& b = up[j];
      const auto& row_masks = masks[j];
      const auto& col_masks = masks[j + 1];
      // rows outside Y, all columns
      std::vector<int> outside_index(b.rows.size(), -1);
      std::size_t n_out = 0;
      for (std::size_t r = 0; r < b.rows.size(); ++r)
        if ((row_masks[r] & ~w) != 0) outside_index[r] = static_cast<int>(n_out++);
      std::vector<SparseColumn> proj, inner;
      for (std::size_t c = 0; c < b.columns.size(); ++c) {
        SparseColumn pc;
        for (auto [r, v] : b.columns[c])
          if (outside_index[r] >= 0) pc.emplace_back(outside_index[r], v);
        if (!pc.empty()) proj.push_back(std::move(pc));
        if ((col_masks[c] & ~w) == 0) inner.push_back(b.columns[c]);
      }
      std::size_t r_proj = rank_of(proj, n_out);
      std::size_t r_inner = rank_of(inner, b.rows.size());
      if (full_rank[j] - r_proj != r_inner) return false;
    }
  }
  return true;
}

struct TightCertificate {
  int dim = 0;
  bool in_kstar = false;
  bool orientable = false;
  Field field = Field::GF2;  // Q when orientable, else GF2
  bool tight = false;
  bool strongly_minimal = false;
  std::string verdict;  // "tight", "not tight" or "not certified"
};

// Tightness and strong minimality through the Walkup-class criteria: an
// F-orientable 2-neighborly member of K(d) is F-tight for d != 3 (for d = 3
// iff 20 beta1 = (f0-4)(f0-5)), and F-tight members of K(d) are strongly
// minimal.
inline TightCertificate certify_tight(const Complex& k) {
  TightCertificate c;
  c.dim = k.dim();
  c.in_kstar = in_walkup_class(k, WalkupClass::Kstar);
  if (!c.in_kstar) {
    c.verdict = "not certified";
    return c;
  }
  c.orientable = is_orientable(k);
  c.field = c.orientable ? Field::Q : Field::GF2;
  if (c.dim == 3) {
    const auto f0 = static_cast<std::int64_t>(k.num_vertices());
    const auto beta1 = betti_number(k, 1, c.field);
    c.tight = 20 * beta1 == (f0 - 4) * (f0 - 5);
  } else {
    c.tight = true;
  }
  c.strongly_minimal = c.tight;
  c.verdict = c.tight ? "tight" : "not tight";
  return c;
}

}  // namespace walkup
