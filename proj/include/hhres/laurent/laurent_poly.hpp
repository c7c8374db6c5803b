#ifndef HHRES_LAURENT_LAURENT_POLY_HPP
#define HHRES_LAURENT_LAURENT_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/exactlin/rational.hpp"
#include "hhres/laurent/exponents.hpp"
#include "hhres/laurent/var_order.hpp"

namespace hhres {

using Term = std::pair<Exponents, Rational>;

/// Sorted by exponent, no duplicate exponents, no zero coefficients.
using SparseVec = std::vector<Term>;

namespace detail {

/// Sorts, merges equal exponents and drops zeros in place.
inline void canonicalize(SparseVec& v) {
  if (v.size() > 1) {
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i + 1;
      Rational sum = std::move(v[i].second);
      while (j < v.size() && v[j].first == v[i].first) sum += v[j++].second;
      if (!sum.is_zero()) v[out++] = Term(v[i].first, std::move(sum));
      i = j;
    }
    v.resize(out);
  } else if (v.size() == 1 && v.front().second.is_zero()) {
    v.clear();
  }
}

inline SparseVec merge_add(const SparseVec& a, const SparseVec& b, const Rational& scale_b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, scale_b * j->second);
      ++j;
    } else {
      Rational s = i->second + scale_b * j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Multivariate Laurent polynomial over Q with a fixed variable order.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(VarOrder order) : order_(std::move(order)) {}

  LaurentPoly(VarOrder order, SparseVec terms) : order_(std::move(order)), terms_(std::move(terms)) {
    for (const auto& [e, c] : terms_)
      if (e.size() != order_.size()) throw ValidationError("exponent length does not match variable order");
    detail::canonicalize(terms_);
  }

  static LaurentPoly constant(const VarOrder& order, const Rational& c) {
    return LaurentPoly(order, {{Exponents(order.size()), c}});
  }

  static LaurentPoly monomial(const VarOrder& order, const Exponents& e, const Rational& c = Rational(1)) {
    return LaurentPoly(order, {{e, c}});
  }

  static LaurentPoly variable(const VarOrder& order, std::size_t index, int power = 1) {
    if (index >= order.size()) throw ValidationError("variable index out of range");
    Exponents e(order.size());
    e[index] = power;
    return monomial(order, e);
  }

  static LaurentPoly variable(const VarOrder& order, const std::string& name, int power = 1) {
    return variable(order, order.index_of(name), power);
  }

  const VarOrder& order() const noexcept { return order_; }
  const SparseVec& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Rational coeff(const Exponents& e) const {
    if (e.size() != order_.size()) throw ValidationError("exponent vector length does not match variable order");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exponents& x) { return t.first < x; });
    return (it != terms_.end() && it->first == e) ? it->second : Rational();
  }

  /// Smallest and largest exponent of variable i over the support; {0,0} for zero.
  std::pair<int, int> exponent_range(std::size_t i) const {
    if (terms_.empty()) return {0, 0};
    int lo = terms_.front().first[i], hi = lo;
    for (const auto& [e, c] : terms_) {
      lo = std::min(lo, e[i]);
      hi = std::max(hi, e[i]);
    }
    return {lo, hi};
  }

  LaurentPoly filtered(const std::function<bool(const Exponents&)>& keep) const {
    LaurentPoly r(order_);
    for (const auto& t : terms_)
      if (keep(t.first)) r.terms_.push_back(t);
    return r;
  }

  LaurentPoly derivative(std::size_t index) const {
    if (index >= order_.size()) throw ValidationError("derivative in unknown variable");
    LaurentPoly r(order_);
    for (const auto& [e, c] : terms_) {
      if (e[index] == 0) continue;
      Exponents f = e;
      f[index] -= 1;
      r.terms_.emplace_back(f, c * Rational(e[index]));
    }
    detail::canonicalize(r.terms_);
    return r;
  }

  LaurentPoly derivative(const std::string& name) const { return derivative(order_.index_of(name)); }

  /// Integer power; negative powers only for monomials.
  LaurentPoly pow(int k) const {
    if (k < 0) {
      if (!is_monomial()) throw ValidationError("negative power of a non-monomial Laurent polynomial");
      Exponents e(order_.size());
      for (std::size_t i = 0; i < order_.size(); ++i) e[i] = -terms_[0].first[i];
      return monomial(order_, e, Rational(1) / terms_[0].second).pow(-k);
    }
    LaurentPoly result = constant(order_, Rational(1));
    LaurentPoly base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    return LaurentPoly(a.order_, detail::merge_add(a.terms_, b.terms_, Rational(1)), 0);
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    return LaurentPoly(a.order_, detail::merge_add(a.terms_, b.terms_, Rational(-1)), 0);
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    SparseVec out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.emplace_back(ea + eb, ca * cb);
    detail::canonicalize(out);
    return LaurentPoly(a.order_, std::move(out), 0);
  }

  friend LaurentPoly operator*(const Rational& s, const LaurentPoly& a) {
    if (s.is_zero()) return LaurentPoly(a.order_);
    LaurentPoly r = a;
    for (auto& t : r.terms_) t.second *= s;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// Deterministic text such as "3/2*x^2*y^-1 + y"; zero prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& [e, c] = terms_[k];
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += order_.name(i);
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      Rational coef = c;
      if (k > 0) {
        s += coef.sign() < 0 ? " - " : " + ";
        if (coef.sign() < 0) coef = -coef;
      } else if (coef.sign() < 0 && !mono.empty() && coef == Rational(-1)) {
        s += "-";
        coef = Rational(1);
      }
      if (mono.empty())
        s += coef.to_string();
      else if (coef.is_one())
        s += mono;
      else
        s += coef.to_string() + "*" + mono;
    }
    return s;
  }

 private:
  // Trusted constructor: terms already canonical.
  LaurentPoly(VarOrder order, SparseVec terms, int) : order_(std::move(order)), terms_(std::move(terms)) {}

  void check_same(const LaurentPoly& o) const {
    if (!(order_ == o.order_)) throw ValidationError("Laurent polynomials over different variable orders");
  }

  VarOrder order_;
  SparseVec terms_;
};

}  // namespace hhres

#endif  // HHRES_LAURENT_LAURENT_POLY_HPP
