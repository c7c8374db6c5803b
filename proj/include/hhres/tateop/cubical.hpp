#ifndef HHRES_TATEOP_CUBICAL_HPP
#define HHRES_TATEOP_CUBICAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/exactlin/rational.hpp"
#include "hhres/tateop/banded_operator.hpp"

namespace hhres {

enum class IdealSign { Plus, Minus, Zero };

inline std::string to_string(IdealSign s) {
  switch (s) {
    case IdealSign::Plus:
      return "+";
    case IdealSign::Minus:
      return "-";
    case IdealSign::Zero:
      return "0";
  }
  return "?";
}

namespace detail {

/// Calls fn on every grid exponent: per variable one representative of each
/// shift-equivariant regime (hull_lo - 1 .. hull_hi + 1, or 0 without a hull),
/// with `fixed` pinning one coordinate. Stops early when fn returns false.
inline bool for_each_regime(const Band& band, std::optional<std::pair<std::size_t, int>> fixed,
                            const std::function<bool(const Exponents&)>& fn) {
  const std::size_t nv = band.vars.size();
  std::vector<int> lo(nv), hi(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const VarBand& b = band.vars[v];
    if (fixed && fixed->first == v) {
      lo[v] = hi[v] = fixed->second;
    } else if (b.has_hull) {
      lo[v] = b.hull_lo - 1;
      hi[v] = b.hull_hi + 1;
    } else {
      lo[v] = hi[v] = 0;
    }
  }
  Exponents e(nv);
  for (std::size_t v = 0; v < nv; ++v) e[v] = lo[v];
  while (true) {
    if (!fn(e)) return false;
    std::size_t v = 0;
    while (v < nv && e[v] == hi[v]) {
      e[v] = lo[v];
      ++v;
    }
    if (v == nv) return true;
    ++e[v];
  }
}

inline bool vanishes_on(const BandedOperator& op, std::optional<std::pair<std::size_t, int>> fixed) {
  if (op.is_structurally_zero()) return true;
  return for_each_regime(op.band(), fixed, [&](const Exponents& a) { return op.apply_terms({{a, Rational(1)}}).empty(); });
}

}  // namespace detail

/// Exact zero test: one basis vector per regime decides the whole operator.
inline bool is_zero(const BandedOperator& op) { return detail::vanishes_on(op, std::nullopt); }

inline bool operator_equal(const BandedOperator& a, const BandedOperator& b) { return is_zero(a - b); }

/// Beilinson n-fold cubical structure on End of the span of t^alpha: level i
/// is the variable t_{n+1-i}, P_i^+ projects onto exponent >= 0 there.
class CubicalContext {
 public:
  explicit CubicalContext(VarOrder order) : order_(std::move(order)) {}

  const VarOrder& order() const noexcept { return order_; }
  int levels() const noexcept { return static_cast<int>(order_.size()); }

  /// 0-based index of the variable carrying level i (1-based).
  std::size_t variable_of_level(int i) const {
    if (i < 1 || i > levels()) throw ValidationError("level " + std::to_string(i) + " out of range 1.." + std::to_string(levels()));
    return order_.size() - static_cast<std::size_t>(i);
  }

  BandedOperator plus_projector(int i) const { return BandedOperator::projector(order_, variable_of_level(i), 0, std::nullopt); }
  BandedOperator minus_projector(int i) const { return BandedOperator::projector(order_, variable_of_level(i), std::nullopt, -1); }

  /// Projector onto exponents in [-N, N] at level i.
  BandedOperator local_unit(int i, int N) const {
    if (N < 0) throw ValidationError("negative local unit radius");
    return BandedOperator::projector(order_, variable_of_level(i), -N, N);
  }

  BandedOperator mult(const LaurentPoly& f) const {
    check(f.order());
    return BandedOperator::mult(f);
  }

  /// +: the image lies in a lattice of the level variable; -: some lattice is
  /// killed; 0: both. Exact for every operator built from the generators.
  bool ideal_membership(const BandedOperator& op, int i, IdealSign s) const {
    check(op.order());
    const std::size_t v = variable_of_level(i);
    if (op.is_structurally_zero()) return true;
    const VarBand& b = op.band().vars[v];
    const auto kills_above = [&] { return detail::vanishes_on(op, std::make_pair(v, b.has_hull ? b.hull_hi + 1 : 0)); };
    const auto kills_below = [&] { return detail::vanishes_on(op, std::make_pair(v, b.has_hull ? b.hull_lo - 1 : 0)); };
    switch (s) {
      case IdealSign::Plus:
        return kills_below();
      case IdealSign::Minus:
        return kills_above();
      case IdealSign::Zero:
        return kills_above() && kills_below();
    }
    return false;
  }

  bool is_trace_class(const BandedOperator& op) const {
    for (int i = 1; i <= levels(); ++i)
      if (!ideal_membership(op, i, IdealSign::Zero)) return false;
    return true;
  }

  /// Radius N with op = e o op = op o e for the local unit e = P[-N, N] at level i.
  int certified_window(const BandedOperator& op, int i) const {
    if (!ideal_membership(op, i, IdealSign::Zero))
      throw PreconditionError("operator is not in I" + std::to_string(i) + "^0: " + op.to_string());
    if (op.is_structurally_zero()) return 0;
    const VarBand& b = op.band().vars[variable_of_level(i)];
    const int lo = b.hull_lo, hi = b.hull_hi;
    return std::max({std::abs(lo), std::abs(hi), std::abs(lo + b.shift_lo), std::abs(hi + b.shift_hi)});
  }

  /// Sum of the diagonal of a trace-class operator.
  Rational trace(const BandedOperator& op) const {
    check(op.order());
    if (!is_trace_class(op)) throw PreconditionError("trace of a non-trace-class operator: " + op.to_string());
    Rational tr;
    if (op.is_structurally_zero()) return tr;
    const Band& band = op.band();
    const std::size_t nv = band.vars.size();
    for (const VarBand& b : band.vars)
      if (b.shift_lo > 0 || b.shift_hi < 0 || !b.has_hull || b.hull_lo > b.hull_hi) return tr;
    Exponents e(nv);
    for (std::size_t v = 0; v < nv; ++v) e[v] = band.vars[v].hull_lo;
    while (true) {
      for (const auto& [x, c] : op.apply_terms({{e, Rational(1)}}))
        if (x == e) tr += c;
      std::size_t v = 0;
      while (v < nv && e[v] == band.vars[v].hull_hi) {
        e[v] = band.vars[v].hull_lo;
        ++v;
      }
      if (v == nv) break;
      ++e[v];
    }
    return tr;
  }

  /// Chosen representative P_i^+ o op of the class of op in A / I_i^-.
  BandedOperator lambda_plus(const BandedOperator& op, int i) const {
    check(op.order());
    return plus_projector(i) * op;
  }

  /// op = plus + minus with plus in I_i^+ and minus in I_i^-.
  std::pair<BandedOperator, BandedOperator> decompose_pm(const BandedOperator& op, int i) const {
    check(op.order());
    BandedOperator plus = plus_projector(i) * op;
    BandedOperator minus = minus_projector(i) * op;
    if (!ideal_membership(plus, i, IdealSign::Plus) || !ideal_membership(minus, i, IdealSign::Minus))
      throw Error("band certification failed while splitting " + op.to_string());
    return {plus, minus};
  }

 private:
  void check(const VarOrder& o) const {
    if (!(o == order_)) throw ValidationError("operator over a different variable order than the cubical context");
  }

  VarOrder order_;
};

}  // namespace hhres

#endif  // HHRES_TATEOP_CUBICAL_HPP
