#ifndef HHRES_KFORMS_RING_SPEC_HPP
#define HHRES_KFORMS_RING_SPEC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/laurent/laurent_poly.hpp"
#include "hhres/laurent/var_order.hpp"

namespace hhres {

/// Monomial localization Q[t_1, ..., t_n][t_S^-1] of a polynomial ring.
class RingSpec {
 public:
  RingSpec() = default;

  explicit RingSpec(VarOrder variables) : vars_(std::move(variables)), inverted_(vars_.size(), false) {}

  RingSpec(VarOrder variables, const std::vector<std::string>& inverted) : RingSpec(std::move(variables)) {
    for (const auto& name : inverted) inverted_[vars_.index_of(name)] = true;
  }

  const VarOrder& variables() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  bool is_inverted(std::size_t i) const { return inverted_.at(i); }
  bool is_polynomial() const {
    for (bool b : inverted_)
      if (b) return false;
    return true;
  }

  RingSpec with_inverted(std::size_t i, bool value) const {
    RingSpec r = *this;
    r.inverted_.at(i) = value;
    return r;
  }

  /// True when every negative exponent of p sits on an inverted variable.
  bool contains(const LaurentPoly& p) const {
    for (const auto& [e, c] : p.terms())
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !inverted_[i]) return false;
    return true;
  }

  /// "Q[x,y][y^-1]"
  std::string to_string() const {
    std::string s = "Q[";
    for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_.name(i);
    s += "]";
    std::string inv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (inverted_[i]) inv += (inv.empty() ? "" : ",") + vars_.name(i) + "^-1";
    if (!inv.empty()) s += "[" + inv + "]";
    return s;
  }

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.vars_ == b.vars_ && a.inverted_ == b.inverted_;
  }

 private:
  VarOrder vars_;
  std::vector<bool> inverted_;
};

}  // namespace hhres

#endif  // HHRES_KFORMS_RING_SPEC_HPP
