#ifndef HHRES_RESSYM_CE_CHECK_HPP
#define HHRES_RESSYM_CE_CHECK_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/tateop/banded_operator.hpp"
#include "hhres/tateop/cubical.hpp"

namespace hhres {

/// One term (-1)^{i+j} [x_i, x_j] ^ x_0 ^ ... (x_i, x_j omitted) ... ^ x_n of the CE boundary.
struct CeTerm {
  int sign = 1;
  std::size_t i = 0, j = 0;
  BandedOperator bracket;
  std::vector<std::size_t> rest;
};

inline std::vector<CeTerm> ce_boundary_terms(const std::vector<BandedOperator>& ops) {
  std::vector<CeTerm> out;
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      CeTerm t;
      t.sign = (i + j) % 2 ? -1 : 1;
      t.i = i;
      t.j = j;
      t.bracket = commutator(ops[i], ops[j]);
      for (std::size_t k = 0; k < ops.size(); ++k)
        if (k != i && k != j) t.rest.push_back(k);
      out.push_back(std::move(t));
    }
  return out;
}

/// The Chevalley-Eilenberg boundary of x_0 ^ ... ^ x_n vanishes term by term.
/// Throws PreconditionError when two of the operators do not commute.
inline bool ce_cycle_check(const std::vector<BandedOperator>& ops) {
  for (std::size_t k = 1; k < ops.size(); ++k)
    if (!(ops[k].order() == ops[0].order())) throw ValidationError("operators over different variable orders");
  const std::vector<CeTerm> terms = ce_boundary_terms(ops);
  for (const CeTerm& t : terms)
    if (!is_zero(t.bracket))
      throw PreconditionError("operators " + std::to_string(t.i) + " and " + std::to_string(t.j) + " do not commute");
  for (const CeTerm& t : terms)
    if (!is_zero(t.bracket)) return false;
  return true;
}

}  // namespace hhres

#endif  // HHRES_RESSYM_CE_CHECK_HPP
