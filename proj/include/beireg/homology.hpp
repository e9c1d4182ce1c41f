#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace beireg {

/// Sparse integer row: (column, value) pairs sorted by column.
using SparseRow = std::vector<std::pair<int, int>>;

namespace detail {

struct RankOverflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw RankOverflow{};
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw RankOverflow{};
  return out;
}

template <class Int>
struct IntOps;

template <>
struct IntOps<std::int64_t> {
  static std::int64_t mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
  static std::int64_t sub(std::int64_t a, std::int64_t b) { return checked_sub(a, b); }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
  static std::int64_t abs(std::int64_t a) { return a < 0 ? -a : a; }
};

using BigInt = boost::multiprecision::cpp_int;

template <>
struct IntOps<BigInt> {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
  static BigInt abs(const BigInt& a) { return boost::multiprecision::abs(a); }
};

// Fraction-free elimination over the integers: row_k <- p*row_k - a*row_pivot,
// then each row is divided by the gcd of its entries. The rank over Z equals
// the rank over Q.
template <class Int>
int integer_rank(const std::vector<SparseRow>& input) {
  using Ops = IntOps<Int>;
  using Row = std::vector<std::pair<int, Int>>;
  std::vector<Row> rows;
  rows.reserve(input.size());
  for (const SparseRow& r : input) {
    Row row;
    for (const auto& [c, v] : r)
      if (v != 0) row.emplace_back(c, Int(v));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  int rank = 0;
  while (!rows.empty()) {
    // Pivot: smallest leading column, then shortest row.
    std::size_t best = 0;
    for (std::size_t k = 1; k < rows.size(); ++k) {
      if (rows[k].front().first < rows[best].front().first ||
          (rows[k].front().first == rows[best].front().first && rows[k].size() < rows[best].size()))
        best = k;
    }
    std::swap(rows[best], rows.back());
    Row pivot = std::move(rows.back());
    rows.pop_back();
    ++rank;
    const int col = pivot.front().first;
    const Int p = pivot.front().second;
    for (Row& row : rows) {
      if (row.front().first != col) continue;
      const Int a = row.front().second;
      Row merged;
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < row.size() || j < pivot.size()) {
        int c;
        Int v;
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
          c = row[i].first;
          v = Ops::mul(p, row[i].second);
          ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
          c = pivot[j].first;
          v = Ops::sub(Int(0), Ops::mul(a, pivot[j].second));
          ++j;
        } else {
          c = row[i].first;
          v = Ops::sub(Ops::mul(p, row[i].second), Ops::mul(a, pivot[j].second));
          ++i;
          ++j;
        }
        if (v != 0) merged.emplace_back(c, std::move(v));
      }
      Int g(0);
      for (const auto& e : merged) g = Ops::gcd(g, Ops::abs(e.second));
      if (g > 1)
        for (auto& e : merged) e.second /= g;
      row = std::move(merged);
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const Row& r) { return r.empty(); }), rows.end());
  }
  return rank;
}

}  // namespace detail

/// Rank over the rationals, computed exactly.
inline int rational_rank(const std::vector<SparseRow>& rows) {
  try {
    return detail::integer_rank<std::int64_t>(rows);
  } catch (const detail::RankOverflow&) {
    return detail::integer_rank<detail::BigInt>(rows);
  }
}

/// Rank over GF(2); the entries are reduced mod 2.
inline int gf2_rank(const std::vector<SparseRow>& input, int cols) {
  const std::size_t words = static_cast<std::size_t>(cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(input.size());
  for (const SparseRow& r : input) {
    std::vector<std::uint64_t> row(words, 0);
    for (const auto& [c, v] : r)
      if (v % 2 != 0) row[static_cast<std::size_t>(c) / 64] ^= std::uint64_t{1} << (c % 64);
    rows.push_back(std::move(row));
  }
  int rank = 0;
  std::size_t next = 0;
  for (int c = 0; c < cols && next < rows.size(); ++c) {
    const std::size_t w = static_cast<std::size_t>(c) / 64;
    const std::uint64_t b = std::uint64_t{1} << (c % 64);
    std::size_t hit = next;
    while (hit < rows.size() && !(rows[hit][w] & b)) ++hit;
    if (hit == rows.size()) continue;
    std::swap(rows[hit], rows[next]);
    for (std::size_t k = next + 1; k < rows.size(); ++k)
      if (rows[k][w] & b)
        for (std::size_t x = w; x < words; ++x) rows[k][x] ^= rows[next][x];
    ++next;
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Simplicial complexes
// ---------------------------------------------------------------------------

using FaceMask = std::uint32_t;

enum class Coefficients { rationals, gf2 };

namespace detail {

/// Boundary matrix of dimension `upper` faces into dimension `upper - 1`
/// faces; both lists sorted. Row k is the boundary of upper[k].
inline std::vector<SparseRow> boundary_rows(const std::vector<FaceMask>& upper,
                                            const std::vector<FaceMask>& lower) {
  std::vector<SparseRow> rows;
  rows.reserve(upper.size());
  for (FaceMask f : upper) {
    SparseRow row;
    int sign = 1;
    for (FaceMask rest = f; rest; rest &= rest - 1) {
      const FaceMask vertex = rest & (~rest + 1);
      const FaceMask facet = f & ~vertex;
      auto it = std::lower_bound(lower.begin(), lower.end(), facet);
      if (it == lower.end() || *it != facet) throw std::logic_error("boundary face missing: complex not closed");
      row.emplace_back(static_cast<int>(it - lower.begin()), sign);
      sign = -sign;
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// Finite simplicial complex on vertices 0..vertex_count-1 (at most 32),
/// stored as its faces grouped by size. faces_of_size(0) is {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex(int vertex_count, std::vector<FaceMask> faces) : vertex_count_(vertex_count) {
    if (vertex_count < 0 || vertex_count > 32) throw std::invalid_argument("SimplicialComplex: at most 32 vertices");
    by_size_.assign(static_cast<std::size_t>(vertex_count) + 2, {});
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (FaceMask f : faces) by_size_[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    if (by_size_[0].empty()) by_size_[0].push_back(0);
  }

  /// Downward closure of the given facets.
  static SimplicialComplex from_facets(int vertex_count, const std::vector<FaceMask>& facets) {
    std::vector<FaceMask> faces;
    for (FaceMask f : facets)
      for (FaceMask s = f;; s = (s - 1) & f) {
        faces.push_back(s);
        if (s == 0) break;
      }
    return SimplicialComplex(vertex_count, std::move(faces));
  }

  int vertex_count() const { return vertex_count_; }

  int dimension() const {
    for (int s = static_cast<int>(by_size_.size()) - 1; s > 0; --s)
      if (!by_size_[static_cast<std::size_t>(s)].empty()) return s - 1;
    return -1;
  }

  const std::vector<FaceMask>& faces_of_size(int size) const {
    static const std::vector<FaceMask> none;
    if (size < 0 || size >= static_cast<int>(by_size_.size())) return none;
    return by_size_[static_cast<std::size_t>(size)];
  }

  bool contains(FaceMask f) const {
    const auto& bucket = faces_of_size(std::popcount(f));
    return std::binary_search(bucket.begin(), bucket.end(), f);
  }

  /// Induced subcomplex on the vertex set sigma.
  SimplicialComplex restrict_to(FaceMask sigma) const {
    std::vector<FaceMask> faces;
    for (const auto& bucket : by_size_)
      for (FaceMask f : bucket)
        if ((f & ~sigma) == 0) faces.push_back(f);
    return SimplicialComplex(vertex_count_, std::move(faces));
  }

  /// Rank of the boundary map from size-`size` faces to size-(size-1) faces.
  int boundary_rank(int size, Coefficients k) const {
    if (size <= 0) return 0;
    const auto& upper = faces_of_size(size);
    if (upper.empty()) return 0;
    const auto rows = detail::boundary_rows(upper, faces_of_size(size - 1));
    return k == Coefficients::gf2 ? gf2_rank(rows, static_cast<int>(faces_of_size(size - 1).size()))
                                  : rational_rank(rows);
  }

  /// dim of reduced homology in degree h >= -1.
  int reduced_betti(int h, Coefficients k = Coefficients::rationals) const {
    const int size = h + 1;
    const int chains = static_cast<int>(faces_of_size(size).size());
    if (chains == 0) return 0;
    return chains - boundary_rank(size, k) - boundary_rank(size + 1, k);
  }

 private:
  int vertex_count_;
  std::vector<std::vector<FaceMask>> by_size_;
};

}  // namespace beireg
