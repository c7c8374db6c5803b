#ifndef HHRES_EXACTLIN_RATIONAL_MATRIX_HPP
#define HHRES_EXACTLIN_RATIONAL_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/exactlin/rational.hpp"

namespace hhres {

/// Sorted list of (column, nonzero value) pairs.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Exact sparse matrix over Q. Only nonzero entries are stored.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
    return m;
  }

  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw ValidationError("ragged dense matrix");
      for (std::size_t j = 0; j < c; ++j)
        if (!rows[i][j].is_zero()) m.data_[i].emplace_back(j, rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  const SparseRow& row(std::size_t r) const { return data_.at(r); }

  Rational at(std::size_t r, std::size_t c) const {
    check(r, c);
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : Rational();
  }

  void set(std::size_t r, std::size_t c, const Rational& v) {
    check(r, c);
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
      if (v.is_zero())
        row.erase(it);
      else
        it->second = v;
    } else if (!v.is_zero()) {
      row.insert(it, {c, v});
    }
  }

  void add_to(std::size_t r, std::size_t c, const Rational& v) {
    if (v.is_zero()) return;
    set(r, c, at(r, c) + v);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const SparseRow& r) { return r.empty(); });
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
    return t;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw ValidationError("vector length does not match matrix columns");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& [j, a] : data_[i])
        if (!v[j].is_zero()) out[i] += a * v[j];
    return out;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_)
      throw ValidationError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::map<std::size_t, Rational> acc;
      for (const auto& [k, x] : a.data_[i])
        for (const auto& [j, y] : b.data_[k]) acc[j] += x * y;
      for (const auto& [j, v] : acc)
        if (!v.is_zero()) c.data_[i].emplace_back(j, v);
    }
    return c;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw ValidationError("matrix index out of bounds");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

namespace detail {

/// Reduced row echelon data: pivot column -> row with a leading 1 there, and
/// zeros in every other pivot column.
struct Echelon {
  std::map<std::size_t, SparseRow> pivots;
};

inline SparseRow axpy_row(const SparseRow& x, const Rational& alpha, const SparseRow& y) {
  // x + alpha * y
  SparseRow out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, alpha * j->second);
      ++j;
    } else {
      Rational v = i->second + alpha * j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline Echelon sparse_echelon(const RationalMatrix& m, bool reduce_fully) {
  Echelon e;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row = m.row(r);
    while (!row.empty()) {
      auto it = e.pivots.find(row.front().first);
      if (it == e.pivots.end()) break;
      row = axpy_row(row, -row.front().second, it->second);
    }
    if (row.empty()) continue;
    const Rational lead = row.front().second;
    if (!lead.is_one())
      for (auto& [c, v] : row) v /= lead;
    e.pivots.emplace(row.front().first, std::move(row));
  }
  if (reduce_fully) {
    // Clear every pivot column from the rows above it, last pivot first.
    for (auto p = e.pivots.rbegin(); p != e.pivots.rend(); ++p) {
      const std::size_t col = p->first;
      for (auto q = e.pivots.begin(); q->first < col; ++q) {
        auto& row = q->second;
        auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& x, std::size_t c) { return x.first < c; });
        if (it != row.end() && it->first == col) row = axpy_row(row, -it->second, p->second);
      }
    }
  }
  return e;
}

constexpr std::size_t kDenseCutoff = 64;

inline std::vector<std::vector<Rational>> dense_rref(const RationalMatrix& m, std::vector<std::size_t>& pivot_cols) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) a[i][j] = v;
  std::size_t r = 0;
  pivot_cols.clear();
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c].is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    const Rational lead = a[r][c];
    for (std::size_t j = c; j < m.cols(); ++j) a[r][j] /= lead;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  return a;
}

inline bool use_dense(const RationalMatrix& m) { return m.rows() < kDenseCutoff && m.cols() < kDenseCutoff; }

}  // namespace detail

/// Rank over Q.
inline std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (detail::use_dense(m)) {
    std::vector<std::size_t> piv;
    detail::dense_rref(m, piv);
    return piv.size();
  }
  return detail::sparse_echelon(m, false).pivots.size();
}

/// Basis of the right null space; one vector per non-pivot column.
inline std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> basis;
  std::map<std::size_t, SparseRow> pivots;
  if (detail::use_dense(m)) {
    std::vector<std::size_t> piv;
    const auto rref = detail::dense_rref(m, piv);
    for (std::size_t k = 0; k < piv.size(); ++k) {
      SparseRow row;
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!rref[k][j].is_zero()) row.emplace_back(j, rref[k][j]);
      pivots.emplace(piv[k], std::move(row));
    }
  } else {
    pivots = detail::sparse_echelon(m, true).pivots;
  }
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivots.count(f)) continue;
    std::vector<Rational> v(m.cols());
    v[f] = Rational(1);
    for (const auto& [pc, row] : pivots) {
      auto it = std::lower_bound(row.begin(), row.end(), f, [](const auto& x, std::size_t c) { return x.first < c; });
      if (it != row.end() && it->first == f) v[pc] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse of a square matrix; throws PreconditionError when singular.
inline RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, v] : m.row(i)) aug.set(i, j, v);
    aug.set(i, n + i, Rational(1));
  }
  std::vector<std::size_t> piv;
  const auto rref = detail::dense_rref(aug, piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw PreconditionError("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, rref[i][n + j]);
  return inv;
}

/// True when v lies in the column span of m.
inline bool in_column_span(const RationalMatrix& m, const std::vector<Rational>& v) {
  if (v.size() != m.rows()) throw ValidationError("vector length does not match matrix rows");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, x] : m.row(i)) aug.set(i, j, x);
    aug.set(i, m.cols(), v[i]);
  }
  return rank(aug) == rank(m);
}

}  // namespace hhres

#endif  // HHRES_EXACTLIN_RATIONAL_MATRIX_HPP
