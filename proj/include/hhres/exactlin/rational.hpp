#ifndef HHRES_EXACTLIN_RATIONAL_HPP
#define HHRES_EXACTLIN_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "hhres/error.hpp"

namespace hhres {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 63 bits are stored inline and
/// combined with 128-bit intermediates; anything larger is promoted to a GMP
/// rational and demoted again as soon as it fits. The two representations are
/// never observable from outside.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      assign(static_cast<__int128>(value), 1);
    } else {
      assign(static_cast<__int128>(static_cast<unsigned long long>(value)), 1);
    }
  }

  Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw ValidationError("rational with zero denominator");
    assign(numerator, denominator);
  }

  explicit Rational(const mpq_class& value) { assign_big(mpq_class(value)); }

  Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw ValidationError("rational with zero denominator");
    mpq_class q(numerator, denominator);
    q.canonicalize();
    assign_big(std::move(q));
  }

  /// Parses "p", "-p", "+p" or "p/q" with decimal digits of any length.
  static Rational parse(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    const auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num_text, true)) throw ParseError("malformed rational numerator '" + std::string(text) + "'", 0);
    if (!valid_int(den_text, false))
      throw ParseError("malformed rational denominator '" + std::string(text) + "'", slash == std::string_view::npos ? 0 : slash + 1);
    std::string n(num_text);
    if (!n.empty() && n.front() == '+') n.erase(0, 1);
    mpz_class num(n, 10);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    return Rational(num, den);
  }

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

  mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz(num_); }
  mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : to_mpz(den_); }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(to_mpz(num_), to_mpz(den_));
  }

  /// Canonical text: "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (!big_) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return from_mpq(-*big_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_i128(static_cast<__int128>(a.num_) + b.num_, 1);
      return from_i128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_i128(static_cast<__int128>(a.num_) - b.num_, 1);
      return from_i128(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() - b.to_mpq());
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_i128(static_cast<__int128>(a.num_) * b.num_, 1);
      return from_i128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw PreconditionError("division by zero rational");
    if (!a.big_ && !b.big_)
      return from_i128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    return from_mpq(a.to_mpq() / b.to_mpq());
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a value has exactly one representation
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      const __int128 l = static_cast<__int128>(a.num_) * b.den_;
      const __int128 r = static_cast<__int128>(b.num_) * a.den_;
      return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  std::size_t hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    return std::hash<std::int64_t>{}(num_) * 1000003u ^ std::hash<std::int64_t>{}(den_);
  }

 private:
  static constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

  static mpz_class to_mpz(std::int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
  }

  static mpz_class to_mpz(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_class lo;
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
    mpz_class z = (hi << 64) + lo;
    return neg ? mpz_class(-z) : z;
  }

  static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      const unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_i128(__int128 n, __int128 d) {
    Rational r;
    r.assign(n, d);
    return r;
  }

  static Rational from_mpq(mpq_class q) {
    Rational r;
    r.assign_big(std::move(q));
    return r;
  }

  void assign(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    const unsigned __int128 un = n < 0 ? -static_cast<unsigned __int128>(n) : static_cast<unsigned __int128>(n);
    const unsigned __int128 g = gcd128(un, static_cast<unsigned __int128>(d));
    if (g > 1) {
      n /= static_cast<__int128>(g);
      d /= static_cast<__int128>(g);
    }
    if (n <= kSmallMax && n >= -kSmallMax && d <= kSmallMax) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
      return;
    }
    big_ = std::make_shared<const mpq_class>(to_mpz(n), to_mpz(d));
    num_ = 0;
    den_ = 1;
  }

  void assign_big(mpq_class q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      const long n = q.get_num().get_si();
      const long d = q.get_den().get_si();
      if (n != std::numeric_limits<long>::min()) {
        num_ = n;
        den_ = d;
        big_.reset();
        return;
      }
    }
    big_ = std::make_shared<const mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace hhres

template <>
struct std::hash<hhres::Rational> {
  std::size_t operator()(const hhres::Rational& r) const { return r.hash(); }
};

#endif  // HHRES_EXACTLIN_RATIONAL_HPP
