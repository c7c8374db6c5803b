#ifndef HHRES_LOCALCOH_GEN_FRACTION_HPP
#define HHRES_LOCALCOH_GEN_FRACTION_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/kforms/differential_form.hpp"
#include "hhres/kforms/ring_spec.hpp"

namespace hhres {

/// Coordinate regular sequence t_{s_1}, ..., t_{s_p} in a polynomial ring,
/// optionally over the localization at a further set of coordinates.
class SupportSeq {
 public:
  SupportSeq() = default;

  SupportSeq(VarOrder vars, std::vector<std::size_t> sequence, std::vector<std::size_t> inverted = {})
      : vars_(std::move(vars)), seq_(std::move(sequence)), inv_(std::move(inverted)) {
    std::vector<bool> seen(vars_.size(), false);
    for (std::size_t v : seq_) {
      if (v >= vars_.size()) throw ValidationError("support variable out of range");
      if (seen[v]) throw ValidationError("support variable '" + vars_.name(v) + "' repeated");
      seen[v] = true;
    }
    std::sort(inv_.begin(), inv_.end());
    inv_.erase(std::unique(inv_.begin(), inv_.end()), inv_.end());
    for (std::size_t v : inv_) {
      if (v >= vars_.size()) throw ValidationError("inverted variable out of range");
      if (seen[v]) throw ValidationError("variable '" + vars_.name(v) + "' both inverted and in the support");
    }
  }

  static SupportSeq parse(const VarOrder& vars, const std::vector<std::string>& support,
                          const std::vector<std::string>& inverted = {}) {
    std::vector<std::size_t> s, i;
    for (const auto& n : support) s.push_back(vars.index_of(n));
    for (const auto& n : inverted) i.push_back(vars.index_of(n));
    return SupportSeq(vars, s, i);
  }

  const VarOrder& variables() const noexcept { return vars_; }
  const std::vector<std::size_t>& sequence() const noexcept { return seq_; }
  const std::vector<std::size_t>& inverted() const noexcept { return inv_; }
  std::size_t length() const noexcept { return seq_.size(); }

  bool in_support(std::size_t v) const { return std::find(seq_.begin(), seq_.end(), v) != seq_.end(); }
  bool is_inverted(std::size_t v) const { return std::binary_search(inv_.begin(), inv_.end(), v); }

  /// Ring R[t_inverted^-1] in which the support lives.
  RingSpec base_ring() const {
    RingSpec r(vars_);
    for (std::size_t v : inv_) r = r.with_inverted(v, true);
    return r;
  }

  /// R[t_inverted^-1][t_support^-1], home of generalized-fraction numerators.
  RingSpec full_localization() const {
    RingSpec r = base_ring();
    for (std::size_t v : seq_) r = r.with_inverted(v, true);
    return r;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < seq_.size(); ++k) s += (k ? "," : "") + vars_.name(seq_[k]);
    return s + ")";
  }

  friend bool operator==(const SupportSeq& a, const SupportSeq& b) {
    return a.vars_ == b.vars_ && a.seq_ == b.seq_ && a.inv_ == b.inv_;
  }

 private:
  VarOrder vars_;
  std::vector<std::size_t> seq_;
  std::vector<std::size_t> inv_;
};

/// Class of a form m / t^a in H^p_{(t_S)}(R[t_inv^-1], Omega^i), represented by a
/// numerator over the full localization.
class GenFraction {
 public:
  GenFraction() = default;

  GenFraction(SupportSeq support, const DifferentialForm& numerator)
      : support_(std::move(support)), num_(numerator.in_ring(support_.full_localization())) {}

  GenFraction(SupportSeq support, const LaurentPoly& numerator)
      : GenFraction(support, DifferentialForm::function(support.full_localization(), numerator)) {}

  const SupportSeq& support() const noexcept { return support_; }
  const DifferentialForm& numerator() const noexcept { return num_; }
  int form_degree() const noexcept { return num_.degree(); }

  /// Keeps only monomials with a negative exponent in every support variable.
  GenFraction normal_form() const {
    const auto& seq = support_.sequence();
    GenFraction r = *this;
    r.num_ = num_.map_coefficients([&](const LaurentPoly& f) {
      return f.filtered([&](const Exponents& e) {
        for (std::size_t v : seq)
          if (e[v] >= 0) return false;
        return true;
      });
    });
    return r;
  }

  bool is_zero_class() const { return normal_form().num_.is_zero(); }

  bool same_class(const GenFraction& o) const {
    if (!(support_.variables() == o.support_.variables())) return false;
    std::vector<std::size_t> a = support_.sequence(), b = o.support_.sequence();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b || support_.inverted() != o.support_.inverted()) return false;
    return normal_form().num_ == o.normal_form().num_;
  }

  friend GenFraction operator+(const GenFraction& a, const GenFraction& b) {
    if (!(a.support_ == b.support_)) throw ValidationError("adding classes with different supports");
    return GenFraction(a.support_, a.num_ + b.num_);
  }

  friend GenFraction operator*(const Rational& s, const GenFraction& a) { return GenFraction(a.support_, s * a.num_); }

  std::string to_string() const {
    return "[" + num_.to_string() + "] in H^" + std::to_string(support_.length()) + "_" + support_.to_string() + "(" +
           support_.base_ring().to_string() + ", Omega^" + std::to_string(num_.degree()) + ")";
  }

 private:
  SupportSeq support_;
  DifferentialForm num_;
};

inline GenFraction normal_form(const GenFraction& x) { return x.normal_form(); }

/// Connecting map H^p_{(t_S)}(R[t_j^-1], -) -> H^{p+1}_{(t_S, t_j)}(R, -): the same
/// numerator read over the enlarged support, reduced to normal form.
inline GenFraction boundary_partial(const GenFraction& x, std::size_t t_next) {
  const SupportSeq& s = x.support();
  if (t_next >= s.variables().size()) throw ValidationError("boundary variable out of range");
  if (s.in_support(t_next)) throw ValidationError("variable '" + s.variables().name(t_next) + "' already in the support");
  if (!s.is_inverted(t_next))
    throw ValidationError("variable '" + s.variables().name(t_next) + "' is not inverted in " + s.base_ring().to_string());
  std::vector<std::size_t> seq = s.sequence();
  seq.push_back(t_next);
  std::vector<std::size_t> inv;
  for (std::size_t v : s.inverted())
    if (v != t_next) inv.push_back(v);
  return GenFraction(SupportSeq(s.variables(), seq, inv), x.normal_form().numerator()).normal_form();
}

inline GenFraction boundary_partial(const GenFraction& x, const std::string& t_next) {
  return boundary_partial(x, x.support().variables().index_of(t_next));
}

/// Product H_{(t_S)} x H_{(t_T)} -> H_{(t_S, t_T)} for disjoint supports: wedge
/// of numerators, normal form over the concatenated support.
inline GenFraction product_concat(const GenFraction& x, const GenFraction& y) {
  const SupportSeq& a = x.support();
  const SupportSeq& b = y.support();
  if (!(a.variables() == b.variables())) throw ValidationError("product of classes over different rings");
  std::vector<std::size_t> seq = a.sequence();
  for (std::size_t v : b.sequence()) {
    if (a.in_support(v)) throw ValidationError("supports overlap in '" + a.variables().name(v) + "'");
    seq.push_back(v);
  }
  std::vector<std::size_t> inv = a.inverted();
  inv.insert(inv.end(), b.inverted().begin(), b.inverted().end());
  for (std::size_t v : inv)
    if (std::find(seq.begin(), seq.end(), v) != seq.end())
      throw ValidationError("variable '" + a.variables().name(v) + "' is inverted in one factor and a support of the other");
  const SupportSeq s(a.variables(), seq, inv);
  const RingSpec full = s.full_localization();
  return GenFraction(s, wedge(x.normal_form().numerator().in_ring(full), y.normal_form().numerator().in_ring(full)))
      .normal_form();
}

}  // namespace hhres

#endif  // HHRES_LOCALCOH_GEN_FRACTION_HPP
