#ifndef HHRES_LAURENT_EXPONENTS_HPP
#define HHRES_LAURENT_EXPONENTS_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "hhres/error.hpp"

namespace hhres {

/// Upper bound on the number of variables of any ring or Laurent model.
inline constexpr std::size_t kMaxVars = 8;

/// Integer exponent vector of fixed small capacity.
class Exponents {
 public:
  Exponents() = default;

  explicit Exponents(std::size_t n) : n_(checked(n)) {}

  Exponents(std::initializer_list<int> values) : n_(checked(values.size())) {
    std::size_t i = 0;
    for (int v : values) e_[i++] = v;
  }

  explicit Exponents(const std::vector<int>& values) : n_(checked(values.size())) {
    for (std::size_t i = 0; i < values.size(); ++i) e_[i] = values[i];
  }

  std::size_t size() const noexcept { return n_; }
  int operator[](std::size_t i) const noexcept { return e_[i]; }
  int& operator[](std::size_t i) noexcept { return e_[i]; }

  const std::int32_t* begin() const noexcept { return e_.data(); }
  const std::int32_t* end() const noexcept { return e_.data() + n_; }

  long total() const noexcept {
    long s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += e_[i];
    return s;
  }

  Exponents with(std::size_t i, int value) const {
    Exponents r = *this;
    r.e_[i] = value;
    return r;
  }

  friend Exponents operator+(const Exponents& a, const Exponents& b) {
    Exponents r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }

  friend Exponents operator-(const Exponents& a, const Exponents& b) {
    Exponents r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }

  friend auto operator<=>(const Exponents&, const Exponents&) = default;
  friend bool operator==(const Exponents&, const Exponents&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u + static_cast<std::size_t>(static_cast<std::uint32_t>(e_[i]));
    return h;
  }

 private:
  static std::uint8_t checked(std::size_t n) {
    if (n > kMaxVars) throw ValidationError("at most " + std::to_string(kMaxVars) + " variables are supported");
    return static_cast<std::uint8_t>(n);
  }

  // n_ precedes e_ so the defaulted ordering compares lengths first.
  std::uint8_t n_ = 0;
  std::array<std::int32_t, kMaxVars> e_{};
};

}  // namespace hhres

template <>
struct std::hash<hhres::Exponents> {
  std::size_t operator()(const hhres::Exponents& e) const noexcept { return e.hash(); }
};

#endif  // HHRES_LAURENT_EXPONENTS_HPP
