#ifndef HHRES_LOCALCOH_UPOLY_HPP
#define HHRES_LOCALCOH_UPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hhres/error.hpp"
#include "hhres/exactlin/rational.hpp"

namespace hhres {

/// Dense univariate polynomial over Q, coefficients from degree 0 upward.
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::initializer_list<Rational> c) : c_(c) { trim(); }
  explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static UPoly constant(const Rational& a) { return UPoly(std::vector<Rational>{a}); }
  static UPoly x(int k = 1) {
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c.back() = Rational(1);
    return UPoly(std::move(c));
  }

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const {
    return k < 0 || k > degree() ? Rational() : c_[static_cast<std::size_t>(k)];
  }
  Rational lead() const { return is_zero() ? Rational() : c_.back(); }
  bool is_monic() const { return !is_zero() && c_.back().is_one(); }
  bool is_constant() const { return degree() <= 0; }

  UPoly monic() const {
    if (is_zero()) throw PreconditionError("monic part of the zero polynomial");
    return (Rational(1) / lead()) * *this;
  }

  Rational eval(const Rational& t) const {
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
  }

  UPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Rational(static_cast<std::int64_t>(k)) * c_[k]);
    return UPoly(std::move(d));
  }

  UPoly pow(int k) const {
    if (k < 0) throw PreconditionError("negative power of a polynomial");
    UPoly r = constant(1), b = *this;
    for (; k; k >>= 1, b = b * b)
      if (k & 1) r = r * b;
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a) { return Rational(-1) * a; }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const Rational& s, const UPoly& a) {
    if (s.is_zero()) return UPoly();
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= s;
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator<(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k)
      if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    return false;
  }

  /// Quotient and remainder of Euclidean division.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Rational> r = a.c_;
    const int db = b.degree();
    std::vector<Rational> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
    const Rational inv = Rational(1) / b.lead();
    for (int k = a.degree(); k >= db; --k) {
      const Rational f = r[static_cast<std::size_t>(k)] * inv;
      if (f.is_zero()) continue;
      q[static_cast<std::size_t>(k - db)] = f;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  /// Monic gcd (zero if both are zero).
  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
  }

  /// (g, u, v) with u a + v b = g = gcd(a, b), g monic.
  static std::tuple<UPoly, UPoly, UPoly> ext_gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b, s0 = constant(1), s1, t0, t1 = constant(1);
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational inv = Rational(1) / r0.lead();
    return {inv * r0, inv * s0, inv * t0};
  }

  /// Inverse of a modulo m; throws when gcd(a, m) != 1.
  static UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    auto [g, u, v] = ext_gcd(a % m, m);
    if (g.degree() != 0) throw PreconditionError("polynomial is not invertible modulo the given modulus");
    return u % m;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const Rational& c = c_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      const bool neg = c.sign() < 0;
      const Rational a = neg ? -c : c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      const std::string mono = k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k);
      if (mono.empty())
        s += a.to_string();
      else if (a.is_one())
        s += mono;
      else
        s += a.to_string() + "*" + mono;
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Reduced quotient num / den with den monic.
class RatFunc {
 public:
  RatFunc() : den_(UPoly::constant(1)) {}
  RatFunc(const UPoly& num) : num_(num), den_(UPoly::constant(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const UPoly& num, const UPoly& den) {
    if (den.is_zero()) throw ValidationError("rational function with zero denominator");
    const UPoly g = UPoly::gcd(num, den);
    UPoly n = num.is_zero() ? num : num / g, d = num.is_zero() ? UPoly::constant(1) : den / g;
    const Rational l = d.lead();
    num_ = (Rational(1) / l) * n;
    den_ = (Rational(1) / l) * d;
  }

  static RatFunc constant(const Rational& a) { return RatFunc(UPoly::constant(a)); }
  static RatFunc x() { return RatFunc(UPoly::x()); }

  const UPoly& num() const noexcept { return num_; }
  const UPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  RatFunc pow(int k) const {
    if (k >= 0) return RatFunc(num_.pow(k), den_.pow(k));
    if (is_zero()) throw ValidationError("negative power of zero");
    return RatFunc(den_.pow(-k), num_.pow(-k));
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
  friend RatFunc operator*(const Rational& s, const RatFunc& a) { return RatFunc(s * a.num_, a.den_); }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ValidationError("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string(const std::string& var = "x") const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  UPoly num_;
  UPoly den_;
};

}  // namespace hhres

#endif  // HHRES_LOCALCOH_UPOLY_HPP
