#ifndef HHRES_KFORMS_DIFFERENTIAL_FORM_HPP
#define HHRES_KFORMS_DIFFERENTIAL_FORM_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/kforms/ring_spec.hpp"
#include "hhres/laurent/laurent_poly.hpp"

namespace hhres {

/// Strictly increasing variable indices {i_1 < ... < i_k} naming dt_{i_1} ^ ... ^ dt_{i_k}.
using WedgeIndex = std::vector<int>;

/// Kahler form sum_I f_I dt_I over a monomial localization of a polynomial ring.
class DifferentialForm {
 public:
  DifferentialForm() = default;
  DifferentialForm(RingSpec ring, int degree) : ring_(std::move(ring)), degree_(degree) {
    if (degree_ < 0) throw ValidationError("negative form degree");
  }

  DifferentialForm(RingSpec ring, int degree, std::map<WedgeIndex, LaurentPoly> terms)
      : DifferentialForm(std::move(ring), degree) {
    for (auto& [idx, f] : terms) add_term(idx, f);
  }

  /// Degree-0 form.
  static DifferentialForm function(const RingSpec& ring, const LaurentPoly& f) {
    DifferentialForm w(ring, 0);
    w.add_term({}, f);
    return w;
  }

  /// f dt_I (I need not be sorted; the permutation sign is applied).
  static DifferentialForm monomial_form(const RingSpec& ring, const LaurentPoly& f, WedgeIndex index) {
    int sign = 1;
    for (std::size_t a = 0; a < index.size(); ++a)
      for (std::size_t b = a + 1; b < index.size(); ++b) {
        if (index[a] == index[b]) return DifferentialForm(ring, static_cast<int>(index.size()));
        if (index[a] > index[b]) sign = -sign;
      }
    std::sort(index.begin(), index.end());
    DifferentialForm w(ring, static_cast<int>(index.size()));
    w.add_term(index, Rational(sign) * f);
    return w;
  }

  /// dt_i.
  static DifferentialForm basis_one_form(const RingSpec& ring, std::size_t i) {
    return monomial_form(ring, LaurentPoly::constant(ring.variables(), Rational(1)), {static_cast<int>(i)});
  }

  const RingSpec& ring() const noexcept { return ring_; }
  int degree() const noexcept { return degree_; }
  const std::map<WedgeIndex, LaurentPoly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  LaurentPoly coefficient(const WedgeIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? LaurentPoly(ring_.variables()) : it->second;
  }

  DifferentialForm map_coefficients(const std::function<LaurentPoly(const LaurentPoly&)>& fn) const {
    DifferentialForm r(ring_, degree_);
    for (const auto& [idx, f] : terms_) r.add_term(idx, fn(f));
    return r;
  }

  /// Same coefficients read in another ring over the same variables.
  DifferentialForm in_ring(const RingSpec& ring) const {
    if (!(ring.variables() == ring_.variables())) throw ValidationError("ring change across different variables");
    DifferentialForm r(ring, degree_);
    for (const auto& [idx, f] : terms_) r.add_term(idx, f);
    return r;
  }

  friend DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b) {
    a.check_compatible(b);
    DifferentialForm r = a;
    for (const auto& [idx, f] : b.terms_) r.add_term(idx, f);
    return r;
  }

  friend DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b) {
    return a + Rational(-1) * b;
  }

  friend DifferentialForm operator*(const Rational& s, const DifferentialForm& a) {
    return a.map_coefficients([&](const LaurentPoly& f) { return s * f; });
  }

  friend DifferentialForm operator*(const LaurentPoly& g, const DifferentialForm& a) {
    return a.map_coefficients([&](const LaurentPoly& f) { return g * f; });
  }

  friend bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
    return a.ring_ == b.ring_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// "x*y dx/\dy - 2 dy"; zero prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [idx, f] : terms_) {
      if (!first) s += " + ";
      first = false;
      std::string diff;
      for (std::size_t k = 0; k < idx.size(); ++k) diff += (k ? "/\\" : "") + std::string("d") + ring_.variables().name(idx[k]);
      if (idx.empty())
        s += f.to_string();
      else if (f == LaurentPoly::constant(ring_.variables(), Rational(1)))
        s += diff;
      else
        s += "(" + f.to_string() + ") " + diff;
    }
    return s;
  }

 private:
  friend DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
  friend DifferentialForm exterior_derivative(const DifferentialForm& a);

  void add_term(const WedgeIndex& idx, const LaurentPoly& f) {
    if (static_cast<int>(idx.size()) != degree_) throw ValidationError("wedge index size does not match form degree");
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= static_cast<int>(ring_.size())) throw ValidationError("wedge index out of range");
      if (k > 0 && idx[k - 1] >= idx[k]) throw ValidationError("wedge indices must be strictly increasing");
    }
    if (!(f.order() == ring_.variables())) throw ValidationError("form coefficient over a different variable order");
    if (!ring_.contains(f))
      throw ValidationError("coefficient " + f.to_string() + " has a negative exponent on a variable not inverted in " +
                            ring_.to_string());
    if (f.is_zero()) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
      terms_.emplace(idx, f);
    } else {
      it->second += f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void check_compatible(const DifferentialForm& b) const {
    if (!(ring_ == b.ring_)) throw ValidationError("forms over different rings");
    if (degree_ != b.degree_) throw ValidationError("adding forms of different degrees");
  }

  RingSpec ring_;
  int degree_ = 0;
  std::map<WedgeIndex, LaurentPoly> terms_;
};

/// Exterior product; dt_I ^ dt_J carries the sign of the merge permutation.
inline DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  if (!(a.ring_ == b.ring_)) throw ValidationError("wedge of forms over different rings");
  DifferentialForm r(a.ring_, a.degree_ + b.degree_);
  for (const auto& [i, f] : a.terms_)
    for (const auto& [j, g] : b.terms_) {
      int sign = 1;
      bool overlap = false;
      for (int x : i)
        for (int y : j) {
          if (x == y) overlap = true;
          if (x > y) sign = -sign;
        }
      if (overlap) continue;
      WedgeIndex k = i;
      k.insert(k.end(), j.begin(), j.end());
      std::sort(k.begin(), k.end());
      r.add_term(k, Rational(sign) * (f * g));
    }
  return r;
}

inline DifferentialForm exterior_derivative(const DifferentialForm& a) {
  DifferentialForm r(a.ring_, a.degree_ + 1);
  for (const auto& [idx, f] : a.terms_)
    for (std::size_t v = 0; v < a.ring_.size(); ++v) {
      const int vi = static_cast<int>(v);
      if (std::find(idx.begin(), idx.end(), vi) != idx.end()) continue;
      LaurentPoly df = f.derivative(v);
      if (df.is_zero()) continue;
      int before = 0;
      for (int x : idx)
        if (x < vi) ++before;
      WedgeIndex k = idx;
      k.insert(std::upper_bound(k.begin(), k.end(), vi), vi);
      r.add_term(k, Rational(before % 2 ? -1 : 1) * df);
    }
  return r;
}

}  // namespace hhres

#endif  // HHRES_KFORMS_DIFFERENTIAL_FORM_HPP
