#ifndef HHRES_HOCHSCHILD_HH_HPP
#define HHRES_HOCHSCHILD_HH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <type_traits>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/exactlin/chain_complex.hpp"
#include "hhres/exactlin/rational_matrix.hpp"
#include "hhres/hochschild/hoch_chain.hpp"
#include "hhres/hochschild/structure_algebra.hpp"

namespace hhres {

/// dim HH_m, keyed by Hochschild degree m and then internal degree w. For an
/// ungraded computation every entry sits at w = 0 and `graded` is false.
struct HHTable {
  bool graded = false;
  std::map<int, std::map<int, std::size_t>> pieces;

  std::size_t at(int m, int w = 0) const {
    auto it = pieces.find(m);
    if (it == pieces.end()) return 0;
    auto jt = it->second.find(w);
    return jt == it->second.end() ? 0 : jt->second;
  }

  std::map<int, std::size_t> totals() const {
    std::map<int, std::size_t> t;
    for (const auto& [m, row] : pieces)
      for (const auto& [w, d] : row) t[m] += d;
    return t;
  }
};

namespace detail {

template <class Algebra>
void check_nonnegative_grading(const Algebra& alg) {
  if constexpr (std::is_same_v<Algebra, StructureAlgebra>) {
    if (!alg.is_graded()) throw ValidationError("grade window supplied for an ungraded algebra");
    for (std::size_t i = 0; i < alg.dim(); ++i)
      if (alg.degree(i) < 0) throw ValidationError("graded Hochschild splitting needs a nonnegative grading");
  }
}

template <class E>
void enumerate_tuples(const std::vector<std::vector<E>>& by_degree, std::size_t len, int budget, std::vector<E>& cur,
                      std::vector<std::vector<E>>& out) {
  if (cur.size() + 1 == len) {
    if (budget < static_cast<int>(by_degree.size()))
      for (const E& e : by_degree[static_cast<std::size_t>(budget)]) {
        cur.push_back(e);
        out.push_back(cur);
        cur.pop_back();
      }
    return;
  }
  for (int k = 0; k <= budget && k < static_cast<int>(by_degree.size()); ++k)
    for (const E& e : by_degree[static_cast<std::size_t>(k)]) {
      cur.push_back(e);
      enumerate_tuples(by_degree, len, budget - k, cur, out);
      cur.pop_back();
    }
}

}  // namespace detail

/// Basis of C_m(A) = A^{(x) m+1}: all tuples of basis elements, or only
/// those of total internal degree w.
template <class Algebra>
std::vector<std::vector<typename Algebra::element>> tensor_basis(const Algebra& alg, int m, std::optional<int> w) {
  using E = typename Algebra::element;
  std::vector<std::vector<E>> out;
  std::vector<E> cur;
  const std::size_t len = static_cast<std::size_t>(m) + 1;
  if (!w) {
    const std::vector<E> b = alg.basis();
    // Every factor has "degree 0" in this flat enumeration.
    std::vector<std::vector<E>> by_degree{b};
    detail::enumerate_tuples(by_degree, len, 0, cur, out);
    return out;
  }
  if (*w < 0) return out;
  std::vector<std::vector<E>> by_degree;
  for (int k = 0; k <= *w; ++k) by_degree.push_back(alg.basis_of_degree(k));
  detail::enumerate_tuples(by_degree, len, *w, cur, out);
  return out;
}

/// The Hochschild complex C_0 <- C_1 <- ... <- C_top, optionally restricted to
/// internal degree w.
template <class Algebra>
ChainComplexData hochschild_complex(const Algebra& alg, int top, std::optional<int> w = std::nullopt) {
  using E = typename Algebra::element;
  if (top < 0) throw ValidationError("negative Hochschild degree bound");
  if (w) detail::check_nonnegative_grading(alg);
  if (!w && !alg.is_finite()) throw ValidationError("infinite-dimensional algebra needs a grade window");
  std::vector<std::vector<std::vector<E>>> bases;
  std::vector<std::size_t> dims;
  for (int m = 0; m <= top; ++m) {
    bases.push_back(tensor_basis(alg, m, w));
    dims.push_back(bases.back().size());
  }
  std::map<int, RationalMatrix> diffs;
  for (int m = 1; m <= top; ++m) {
    std::map<std::vector<E>, std::size_t> row_index;
    const auto& rows = bases[static_cast<std::size_t>(m - 1)];
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
    const auto& cols = bases[static_cast<std::size_t>(m)];
    RationalMatrix d(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto image = b_apply(alg, HochChain<E>::elementary(cols[c])).normalized();
      for (const auto& t : image.terms()) {
        auto it = row_index.find(t.factors);
        if (it == row_index.end()) throw Error("Hochschild boundary left the graded piece");
        d.add_to(it->second, c, t.coef);
      }
    }
    diffs.emplace(m, std::move(d));
  }
  return ChainComplexData(0, std::move(dims), std::move(diffs));
}

/// dim HH_m(A) for 0 <= m <= max_degree; with a window, one entry per
/// internal degree in the window.
template <class Algebra>
HHTable hh_dims(const Algebra& alg, int max_degree, std::optional<GradeWindow> window = std::nullopt) {
  if (max_degree < 0) throw ValidationError("negative Hochschild degree bound");
  HHTable table;
  if (!window) {
    if (!alg.is_finite()) throw ValidationError("grade window required for an infinite-dimensional algebra");
    const auto h = hochschild_complex(alg, max_degree + 1).homology_dims();
    for (int m = 0; m <= max_degree; ++m) table.pieces[m][0] = h.at(m);
    return table;
  }
  table.graded = true;
  for (int w = window->lo; w <= window->hi; ++w) {
    if (w < 0) {
      for (int m = 0; m <= max_degree; ++m) table.pieces[m][w] = 0;
      continue;
    }
    const auto h = hochschild_complex(alg, max_degree + 1, w).homology_dims();
    for (int m = 0; m <= max_degree; ++m) table.pieces[m][w] = h.at(m);
  }
  return table;
}

}  // namespace hhres

#endif  // HHRES_HOCHSCHILD_HH_HPP
