#ifndef HHRES_LOCALCOH_FLAG_RING_HPP
#define HHRES_LOCALCOH_FLAG_RING_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/localcoh/gen_fraction.hpp"

namespace hhres {

enum class FlagKind { L, C };

/// Level-j ring of the coordinate flag on A^n, t_1 innermost: t_1..t_{n-j} are
/// Laurent variables and t_{n-j+1}..t_n power-series variables. L_j and C_j share
/// this data and differ only in their tag; completions are never formed, the
/// series variables act through bounded exponent windows.
class FlagRing {
 public:
  FlagRing(int level, FlagKind kind, VarOrder vars) : level_(level), kind_(kind), vars_(std::move(vars)) {
    if (level_ < 0 || level_ > static_cast<int>(vars_.size()))
      throw ValidationError("flag level " + std::to_string(level_) + " outside 0.." + std::to_string(vars_.size()));
  }

  int level() const noexcept { return level_; }
  FlagKind kind() const noexcept { return kind_; }
  const VarOrder& variables() const noexcept { return vars_; }
  std::size_t dimension() const noexcept { return vars_.size(); }

  std::vector<std::size_t> laurent_variables() const {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i + static_cast<std::size_t>(level_) < vars_.size(); ++i) v.push_back(i);
    return v;
  }

  std::vector<std::size_t> series_variables() const {
    std::vector<std::size_t> v;
    for (std::size_t i = vars_.size() - static_cast<std::size_t>(level_); i < vars_.size(); ++i) v.push_back(i);
    return v;
  }

  /// Support of the level-j local cohomology classes: the j outermost variables,
  /// outermost first.
  SupportSeq class_support() const {
    std::vector<std::size_t> s;
    for (int k = 0; k < level_; ++k) s.push_back(vars_.size() - 1 - static_cast<std::size_t>(k));
    return SupportSeq(vars_, s, laurent_variables());
  }

  RingSpec ring_spec() const { return class_support().base_ring(); }

  /// "Q((t1))[[t2]]"
  std::string to_string() const {
    std::string s = "Q";
    for (std::size_t v : laurent_variables()) s = s + "((" + vars_.name(v) + "))";
    const auto ser = series_variables();
    if (!ser.empty()) {
      s += "[[";
      for (std::size_t k = 0; k < ser.size(); ++k) s += (k ? "," : "") + vars_.name(ser[k]);
      s += "]]";
    }
    return (kind_ == FlagKind::L ? "L" : "C") + std::to_string(level_) + " = " + s;
  }

  /// Level-j class with numerator `form`.
  GenFraction make_class(const DifferentialForm& form) const { return GenFraction(class_support(), form); }

  /// Boundary map to level j + 1: t_{n-j} joins the support.
  GenFraction boundary(const GenFraction& x) const {
    if (level_ >= static_cast<int>(vars_.size())) throw ValidationError("no boundary out of the last flag level");
    if (!(x.support() == class_support())) throw ValidationError("class does not live on this flag level");
    return boundary_partial(x, vars_.size() - 1 - static_cast<std::size_t>(level_));
  }

 private:
  int level_;
  FlagKind kind_;
  VarOrder vars_;
};

inline FlagRing flag_ring(int level, FlagKind kind, std::size_t n) {
  if (n == 0) throw ValidationError("flag on A^0");
  std::vector<std::string> names;
  if (n == 1)
    names.push_back("t");
  else
    for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return FlagRing(level, kind, VarOrder(names));
}

}  // namespace hhres

#endif  // HHRES_LOCALCOH_FLAG_RING_HPP
