#ifndef HHRES_HOCHSCHILD_HOCH_CHAIN_HPP
#define HHRES_HOCHSCHILD_HOCH_CHAIN_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/exactlin/rational.hpp"
#include "hhres/hochschild/structure_algebra.hpp"

namespace hhres {

/// Formal Q-combination of elementary tensors a_0 (x) ... (x) a_m over the
/// basis / element type E of a coefficient algebra. Terms are kept in
/// insertion order; `normalized` merges equal tensors when E is ordered.
template <class E>
class HochChain {
 public:
  struct Term {
    Rational coef;
    std::vector<E> factors;
  };

  HochChain() = default;
  explicit HochChain(int degree) : degree_(degree) {
    if (degree_ < 0) throw ValidationError("negative Hochschild degree");
  }

  static HochChain elementary(std::vector<E> factors, const Rational& coef = Rational(1)) {
    if (factors.empty()) throw ValidationError("elementary tensor needs at least one factor");
    HochChain c(static_cast<int>(factors.size()) - 1);
    c.add(coef, std::move(factors));
    return c;
  }

  int degree() const noexcept { return degree_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  void add(const Rational& coef, std::vector<E> factors) {
    if (static_cast<int>(factors.size()) != degree_ + 1)
      throw ValidationError("tensor of length " + std::to_string(factors.size()) + " in a degree " +
                            std::to_string(degree_) + " chain");
    if (coef.is_zero()) return;
    terms_.push_back({coef, std::move(factors)});
  }

  void add_chain(const Rational& scale, const HochChain& other) {
    if (other.degree_ != degree_) throw ValidationError("adding Hochschild chains of different degrees");
    for (const auto& t : other.terms_) add(scale * t.coef, t.factors);
  }

  /// Merged, zero-free, sorted by tensor.
  HochChain normalized() const {
    std::map<std::vector<E>, Rational> acc;
    for (const auto& t : terms_) acc[t.factors] += t.coef;
    HochChain out(degree_);
    for (auto& [f, c] : acc)
      if (!c.is_zero()) out.terms_.push_back({c, f});
    return out;
  }

  bool is_zero() const { return normalized().terms_.empty(); }

  friend bool operator==(const HochChain& a, const HochChain& b) {
    if (a.degree_ != b.degree_) return false;
    const HochChain x = a.normalized();
    const HochChain y = b.normalized();
    if (x.terms_.size() != y.terms_.size()) return false;
    for (std::size_t i = 0; i < x.terms_.size(); ++i)
      if (x.terms_[i].coef != y.terms_[i].coef || x.terms_[i].factors != y.terms_[i].factors) return false;
    return true;
  }

 private:
  int degree_ = 0;
  std::vector<Term> terms_;
};

/// Hochschild boundary
///   b(a0 (x) ... (x) ai) = sum_{j<i} (-1)^j a0 (x) ... (x) a_j a_{j+1} (x) ... (x) ai
///                          + (-1)^i ai a0 (x) a1 (x) ... (x) a_{i-1}
/// for any algebra exposing `multiply(a, b) -> LinComb<element>`.
template <class Algebra>
HochChain<typename Algebra::element> b_apply(const Algebra& alg, const HochChain<typename Algebra::element>& c) {
  using E = typename Algebra::element;
  const int i = c.degree();
  if (i < 1) throw PreconditionError("Hochschild boundary of a degree 0 chain");
  HochChain<E> out(i - 1);
  for (const auto& t : c.terms()) {
    const auto& a = t.factors;
    for (int j = 0; j <= i; ++j) {
      const bool wrap = j == i;
      const Rational sign = Rational((j % 2) ? -1 : 1) * t.coef;
      const LinComb<E> prod = wrap ? alg.multiply(a[i], a[0]) : alg.multiply(a[j], a[j + 1]);
      for (const auto& [p, coef] : prod) {
        std::vector<E> f;
        f.reserve(static_cast<std::size_t>(i));
        if (wrap) {
          f.push_back(p);
          for (int k = 1; k < i; ++k) f.push_back(a[k]);
        } else {
          for (int k = 0; k < j; ++k) f.push_back(a[k]);
          f.push_back(p);
          for (int k = j + 2; k <= i; ++k) f.push_back(a[k]);
        }
        out.add(sign * coef, std::move(f));
      }
    }
  }
  return out;
}

}  // namespace hhres

#endif  // HHRES_HOCHSCHILD_HOCH_CHAIN_HPP
