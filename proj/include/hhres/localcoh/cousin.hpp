#ifndef HHRES_LOCALCOH_COUSIN_HPP
#define HHRES_LOCALCOH_COUSIN_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/localcoh/cech.hpp"
#include "hhres/localcoh/gen_fraction.hpp"

namespace hhres {

/// One entry of an E_1 row: a point and the local class living there.
struct CousinEntry {
  std::string point;
  std::string local_class;
  std::optional<Rational> residue;
};

struct CousinRow {
  std::string scheme;  // "A1", "A2" or "P1"
  int form_degree = 0;
  int codimension = 0;
  std::vector<CousinEntry> entries;
};

/// Cochain of the coordinate Cousin complex of A^n = Spec Q[t_1..t_n]: a class in
/// H^{|S|}_{(t_S)}(Q[t][t_{S^c}^-1], Omega^m) for each coordinate stratum S
/// (bitmask over variable indices).
class CousinCochain {
 public:
  CousinCochain(VarOrder vars, int codim, int form_degree)
      : vars_(std::move(vars)), codim_(codim), degree_(form_degree) {
    if (codim_ < 0 || codim_ > static_cast<int>(vars_.size())) throw ValidationError("codimension out of range");
  }

  const VarOrder& variables() const noexcept { return vars_; }
  int codimension() const noexcept { return codim_; }
  int form_degree() const noexcept { return degree_; }
  const std::map<unsigned, GenFraction>& components() const noexcept { return parts_; }

  static SupportSeq stratum_support(const VarOrder& vars, unsigned mask) {
    std::vector<std::size_t> s, inv;
    for (std::size_t v = 0; v < vars.size(); ++v) (mask >> v & 1u ? s : inv).push_back(v);
    return SupportSeq(vars, s, inv);
  }

  static std::string stratum_name(const VarOrder& vars, unsigned mask) {
    if (mask == 0) return "(0)";
    std::string s = "(";
    bool first = true;
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (mask >> v & 1u) {
        s += (first ? "" : ",") + vars.name(v);
        first = false;
      }
    return s + ")";
  }

  /// Adds a class to the component at stratum `mask`.
  void add(unsigned mask, const DifferentialForm& numerator) {
    if (__builtin_popcount(mask) != codim_) throw ValidationError("stratum of the wrong codimension");
    if (numerator.degree() != degree_) throw ValidationError("form of the wrong degree");
    const GenFraction x(stratum_support(vars_, mask), numerator);
    auto it = parts_.find(mask);
    if (it == parts_.end())
      parts_.emplace(mask, x.normal_form());
    else
      it->second = (it->second + x).normal_form();
  }

  bool is_zero() const {
    for (const auto& [m, x] : parts_)
      if (!x.is_zero_class()) return false;
    return true;
  }

  CousinRow row(const std::string& scheme) const {
    CousinRow r{scheme, degree_, codim_, {}};
    for (const auto& [m, x] : parts_)
      if (!x.is_zero_class()) r.entries.push_back({stratum_name(vars_, m), x.normal_form().numerator().to_string(), {}});
    return r;
  }

 private:
  VarOrder vars_;
  int codim_;
  int degree_;
  std::map<unsigned, GenFraction> parts_;
};

/// Cousin differential: component S -> S + {j} is (-1)^{#{i in S : i < j}} times
/// the boundary map reinterpreting the class with t_j added to the support.
inline CousinCochain cousin_differential(const CousinCochain& c) {
  const std::size_t n = c.variables().size();
  CousinCochain out(c.variables(), c.codimension() + 1, c.form_degree());
  for (const auto& [mask, x] : c.components())
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1u) continue;
      int before = 0;
      for (std::size_t i = 0; i < j; ++i)
        if (mask >> i & 1u) ++before;
      const GenFraction b = boundary_partial(x, j);
      out.add(mask | (1u << j), Rational(before % 2 ? -1 : 1) * b.numerator());
    }
  return out;
}

/// The same boundary computed on the Cech side: the numerator, read as a top
/// Cech cocycle for the enlarged support, must be cohomologous to the
/// normal-form answer.
inline bool cech_boundary_agrees(const GenFraction& x, std::size_t t_next) {
  const GenFraction b = boundary_partial(x, t_next);
  return cech_same_class(b.support(), x.numerator().in_ring(b.support().full_localization()), b.numerator());
}

}  // namespace hhres

#endif  // HHRES_LOCALCOH_COUSIN_HPP
