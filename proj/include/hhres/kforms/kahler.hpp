#ifndef HHRES_KFORMS_KAHLER_HPP
#define HHRES_KFORMS_KAHLER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/exactlin/rational_matrix.hpp"
#include "hhres/hochschild/structure_algebra.hpp"

namespace hhres {

/// Omega^1_{A/Q} computed from its presentation: generators a db for basis
/// elements a, b, relations c d(ab) = ca db + cb da.
template <class E>
struct KahlerReport {
  std::size_t dim = 0;
  std::size_t generators = 0;
  std::size_t relation_rank = 0;
  /// Generators (a, b) = a db whose classes form a basis of the quotient.
  std::vector<std::pair<E, E>> basis;
};

namespace detail {

template <class Algebra>
KahlerReport<typename Algebra::element> kahler_from_bases(const Algebra& alg,
                                                         const std::vector<std::vector<typename Algebra::element>>& by_degree,
                                                         std::optional<int> w) {
  using E = typename Algebra::element;
  auto deg = [&](std::size_t k) { return w ? static_cast<int>(k) : 0; };
  const int target = w.value_or(0);
  std::vector<std::pair<E, E>> gens;
  std::map<std::pair<E, E>, std::size_t> index;
  for (std::size_t i = 0; i < by_degree.size(); ++i)
    for (std::size_t j = 0; j < by_degree.size(); ++j) {
      if (deg(i) + deg(j) != target) continue;
      for (const E& a : by_degree[i])
        for (const E& b : by_degree[j]) {
          index.emplace(std::make_pair(a, b), gens.size());
          gens.emplace_back(a, b);
        }
    }
  std::vector<SparseRow> rels;
  auto col = [&](const E& a, const E& b) {
    auto it = index.find({a, b});
    if (it == index.end()) throw Error("Kahler relation left the graded piece");
    return it->second;
  };
  for (std::size_t i = 0; i < by_degree.size(); ++i)
    for (std::size_t j = 0; j < by_degree.size(); ++j)
      for (std::size_t k = 0; k < by_degree.size(); ++k) {
        if (deg(i) + deg(j) + deg(k) != target) continue;
        for (const E& c : by_degree[i])
          for (const E& a : by_degree[j])
            for (const E& b : by_degree[k]) {
              std::map<std::size_t, Rational> row;
              for (const auto& [p, x] : alg.multiply(a, b)) row[col(c, p)] += x;
              for (const auto& [p, x] : alg.multiply(c, a)) row[col(p, b)] -= x;
              for (const auto& [p, x] : alg.multiply(c, b)) row[col(p, a)] -= x;
              SparseRow r;
              for (const auto& [cc, x] : row)
                if (!x.is_zero()) r.emplace_back(cc, x);
              if (!r.empty()) rels.push_back(std::move(r));
            }
      }
  RationalMatrix m(rels.size(), gens.size());
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (const auto& [c, x] : rels[r]) m.set(r, c, x);
  KahlerReport<E> rep;
  rep.generators = gens.size();
  const auto pivots = sparse_echelon(m, false).pivots;
  rep.relation_rank = pivots.size();
  rep.dim = gens.size() - rep.relation_rank;
  for (std::size_t c = 0; c < gens.size(); ++c)
    if (!pivots.count(c)) rep.basis.push_back(gens[c]);
  return rep;
}

}  // namespace detail

/// Omega^1 of a commutative finite-dimensional unital algebra.
inline KahlerReport<std::size_t> kahler_presentation(const StructureAlgebra& alg) {
  if (!alg.is_commutative()) throw ValidationError("Kahler differentials need a commutative algebra");
  return detail::kahler_from_bases(alg, {alg.basis()}, std::nullopt);
}

/// Internal-degree-w piece of Omega^1 for a commutative algebra graded in
/// nonnegative degrees (deg da = deg a).
template <class Algebra>
KahlerReport<typename Algebra::element> kahler_presentation_graded(const Algebra& alg, int w) {
  using E = typename Algebra::element;
  if constexpr (std::is_same_v<Algebra, StructureAlgebra>) {
    if (!alg.is_commutative()) throw ValidationError("Kahler differentials need a commutative algebra");
    if (!alg.is_graded()) throw ValidationError("graded Kahler piece of an ungraded algebra");
  }
  if (w < 0) return {};
  std::vector<std::vector<E>> by_degree;
  for (int k = 0; k <= w; ++k) by_degree.push_back(alg.basis_of_degree(k));
  return detail::kahler_from_bases(alg, by_degree, w);
}

}  // namespace hhres

#endif  // HHRES_KFORMS_KAHLER_HPP
