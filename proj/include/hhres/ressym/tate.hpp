#ifndef HHRES_RESSYM_TATE_HPP
#define HHRES_RESSYM_TATE_HPP

#include "hhres/error.hpp"
#include "hhres/exactlin/rational.hpp"
#include "hhres/laurent/laurent_poly.hpp"
#include "hhres/tateop/banded_operator.hpp"
#include "hhres/tateop/cubical.hpp"

namespace hhres {

/// Tate's residue Tr [P^+ f, g] on Q((t)).
inline Rational tate_residue_1d(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.order().size() != 1) throw ValidationError("Tate residue needs a single variable");
  if (!(f.order() == g.order())) throw ValidationError("f and g over different variable orders");
  const CubicalContext ctx(f.order());
  const BandedOperator c = commutator(ctx.lambda_plus(ctx.mult(f), 1), ctx.mult(g));
  if (!ctx.is_trace_class(c)) throw Error("commutator [P+f, g] failed the trace-class certificate");
  return ctx.trace(c);
}

}  // namespace hhres

#endif  // HHRES_RESSYM_TATE_HPP
