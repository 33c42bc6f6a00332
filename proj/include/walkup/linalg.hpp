#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace walkup {

// Sparse column: (row, value) pairs with strictly increasing rows, no zeros.
using SparseColumn = std::vector<std::pair<int, int>>;

// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  static BitMatrix from_columns(const std::vector<SparseColumn>& columns, std::size_t rows) {
    BitMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (auto [r, v] : columns[c])
        if (v & 1) m.flip(static_cast<std::size_t>(r), c);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1u; }
  void flip(std::size_t r, std::size_t c) { row(r)[c / 64] ^= std::uint64_t{1} << (c % 64); }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.flip(c, r);
    return t;
  }

  // Gaussian elimination on a copy; word-parallel row XOR.
  std::size_t rank() const {
    std::vector<std::uint64_t> a = bits_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      const std::size_t w = c / 64;
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      std::size_t piv = rank;
      while (piv < rows_ && !(a[piv * words_ + w] & bit)) ++piv;
      if (piv == rows_) continue;
      if (piv != rank)
        std::swap_ranges(a.begin() + piv * words_, a.begin() + (piv + 1) * words_, a.begin() + rank * words_);
      const std::uint64_t* p = a.data() + rank * words_;
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        std::uint64_t* q = a.data() + r * words_;
        if (q[w] & bit)
          for (std::size_t k = w; k < words_; ++k) q[k] ^= p[k];
      }
      ++rank;
    }
    return rank;
  }

 private:
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;
};

inline std::size_t gf2_rank(const std::vector<SparseColumn>& columns, std::size_t rows) {
  // eliminate along the shorter side
  BitMatrix m = BitMatrix::from_columns(columns, rows);
  return m.cols() < m.rows() ? m.transposed().rank() : m.rank();
}

namespace detail {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline boost::multiprecision::cpp_int checked_mul(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b) {
  return a * b;
}

inline boost::multiprecision::cpp_int checked_sub(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b) {
  return a - b;
}

inline std::int64_t int_gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline boost::multiprecision::cpp_int int_gcd(const boost::multiprecision::cpp_int& a,
                                              const boost::multiprecision::cpp_int& b) {
  return boost::multiprecision::gcd(a, b);
}

// Column reduction by lowest nonzero row. Each step replaces
// col <- p*col - c*pivot with p, c the two low entries, then divides out the
// content, so all arithmetic stays in the integers.
template <class Int>
std::size_t integer_rank(const std::vector<SparseColumn>& columns) {
  using Col = std::vector<std::pair<int, Int>>;
  std::vector<Col> pivots;
  std::vector<std::pair<int, std::size_t>> low_to_pivot;  // sorted by row
  auto find_pivot = [&](int low) -> const Col* {
    auto it = std::lower_bound(low_to_pivot.begin(), low_to_pivot.end(), std::make_pair(low, std::size_t{0}));
    if (it == low_to_pivot.end() || it->first != low) return nullptr;
    return &pivots[it->second];
  };

  Col cur, next;
  for (const auto& src : columns) {
    cur.clear();
    for (auto [r, v] : src) cur.emplace_back(r, Int(v));
    while (!cur.empty()) {
      const Col* piv = find_pivot(cur.back().first);
      if (!piv) break;
      const Int a = cur.back().second;
      const Int b = piv->back().second;
      next.clear();
      std::size_t i = 0, j = 0;
      while (i < cur.size() || j < piv->size()) {
        if (j == piv->size() || (i < cur.size() && cur[i].first < (*piv)[j].first)) {
          next.emplace_back(cur[i].first, checked_mul(cur[i].second, b));
          ++i;
        } else if (i == cur.size() || (*piv)[j].first < cur[i].first) {
          next.emplace_back((*piv)[j].first, checked_sub(Int(0), checked_mul((*piv)[j].second, a)));
          ++j;
        } else {
          Int v = checked_sub(checked_mul(cur[i].second, b), checked_mul((*piv)[j].second, a));
          if (v != 0) next.emplace_back(cur[i].first, v);
          ++i;
          ++j;
        }
      }
      Int g = 0;
      for (auto& [r, v] : next) g = int_gcd(g, v < 0 ? Int(-v) : v);
      if (g > 1)
        for (auto& [r, v] : next) v /= g;
      std::swap(cur, next);
    }
    if (cur.empty()) continue;
    auto pos = std::lower_bound(low_to_pivot.begin(), low_to_pivot.end(),
                                std::make_pair(cur.back().first, std::size_t{0}));
    low_to_pivot.insert(pos, {cur.back().first, pivots.size()});
    pivots.push_back(cur);
  }
  return pivots.size();
}

}  // namespace detail

// Exact rank over the rationals of an integer matrix given by columns.
// 64-bit arithmetic first; on overflow the whole reduction reruns with
// arbitrary precision.
inline std::size_t rational_rank(const std::vector<SparseColumn>& columns) {
  try {
    return detail::integer_rank<std::int64_t>(columns);
  } catch (const detail::Overflow&) {
    return detail::integer_rank<boost::multiprecision::cpp_int>(columns);
  }
}

}  // namespace walkup
