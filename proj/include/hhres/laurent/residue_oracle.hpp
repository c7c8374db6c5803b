#ifndef HHRES_LAURENT_RESIDUE_ORACLE_HPP
#define HHRES_LAURENT_RESIDUE_ORACLE_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/laurent/laurent_poly.hpp"

namespace hhres {

/// det(d g_i / d t_j) by the Leibniz expansion.
inline LaurentPoly jacobian_determinant(const std::vector<LaurentPoly>& gs) {
  if (gs.empty()) throw ValidationError("Jacobian of an empty family");
  const VarOrder& order = gs.front().order();
  const std::size_t n = order.size();
  if (gs.size() != n) throw ValidationError("Jacobian needs exactly one function per variable");
  std::vector<std::vector<LaurentPoly>> jac(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(gs[i].order() == order)) throw ValidationError("Jacobian entries over different variable orders");
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(gs[i].derivative(j));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det(order);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    LaurentPoly term = LaurentPoly::constant(order, Rational(inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * jac[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Classical residue of f dg_1 ^ ... ^ dg_n on the iterated Laurent model: the
/// coefficient of t_1^-1 ... t_n^-1 in f * det(d g_i / d t_j).
inline Rational residue_oracle_nd(const LaurentPoly& f, const std::vector<LaurentPoly>& gs) {
  const std::size_t n = f.order().size();
  if (gs.size() != n)
    throw ValidationError("residue oracle arity mismatch: " + std::to_string(gs.size()) + " functions for " +
                          std::to_string(n) + " variables");
  const LaurentPoly jac = jacobian_determinant(gs);
  if (!(jac.order() == f.order())) throw ValidationError("residue oracle inputs over different variable orders");
  Exponents target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = -1;
  // Only the pairings landing on the target exponent are needed.
  Rational r;
  for (const auto& [e, c] : f.terms()) {
    const Rational j = jac.coeff(target - e);
    if (!j.is_zero()) r += c * j;
  }
  return r;
}

}  // namespace hhres

#endif  // HHRES_LAURENT_RESIDUE_ORACLE_HPP
