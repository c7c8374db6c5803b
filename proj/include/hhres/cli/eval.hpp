#ifndef HHRES_CLI_EVAL_HPP
#define HHRES_CLI_EVAL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "hhres/cli/expr.hpp"
#include "hhres/error.hpp"
#include "hhres/kforms/differential_form.hpp"
#include "hhres/kforms/ring_spec.hpp"
#include "hhres/laurent/laurent_poly.hpp"
#include "hhres/localcoh/upoly.hpp"

namespace hhres::cli {

namespace detail {

/// sum_I c_I dt_I with coefficients in R.
template <class R>
struct FormValue {
  int degree = 0;
  std::map<WedgeIndex, R> terms;
};

struct LaurentPolicy {
  using value_type = LaurentPoly;
  VarOrder order;

  std::size_t nvars() const { return order.size(); }
  LaurentPoly constant(const Rational& c) const { return LaurentPoly::constant(order, c); }
  LaurentPoly variable(const Expr& e) const {
    auto i = order.find(e.name);
    if (!i) throw ParseError("unknown variable '" + e.name + "'", e.position);
    return LaurentPoly::variable(order, *i);
  }
  LaurentPoly pow(const LaurentPoly& a, int k, const Expr& at) const {
    if (k >= 0) return a.pow(k);
    if (!a.is_monomial()) throw ParseError("negative power of a non-monomial Laurent polynomial", at.position);
    const auto& [e, c] = a.terms().front();
    Exponents inv(e.size());
    for (std::size_t v = 0; v < e.size(); ++v) inv[v] = -e[v];
    return LaurentPoly::monomial(order, inv, Rational(1) / c).pow(-k);
  }
  LaurentPoly derivative(const LaurentPoly& a, std::size_t i) const { return a.derivative(i); }
  static bool is_zero(const LaurentPoly& a) { return a.is_zero(); }
};

struct RatFuncPolicy {
  using value_type = RatFunc;
  std::string var;

  std::size_t nvars() const { return 1; }
  RatFunc constant(const Rational& c) const { return RatFunc::constant(c); }
  RatFunc variable(const Expr& e) const {
    if (e.name != var) throw ParseError("unknown variable '" + e.name + "'", e.position);
    return RatFunc::x();
  }
  RatFunc pow(const RatFunc& a, int k, const Expr& at) const {
    if (k < 0 && a.is_zero()) throw ParseError("negative power of zero", at.position);
    return a.pow(k);
  }
  RatFunc derivative(const RatFunc& a, std::size_t) const { return a.derivative(); }
  static bool is_zero(const RatFunc& a) { return a.is_zero(); }
};

template <class P>
void add_into(FormValue<typename P::value_type>& acc, const WedgeIndex& idx, const typename P::value_type& c) {
  auto it = acc.terms.find(idx);
  if (it == acc.terms.end()) {
    if (!P::is_zero(c)) acc.terms.emplace(idx, c);
    return;
  }
  it->second = it->second + c;
  if (P::is_zero(it->second)) acc.terms.erase(it);
}

template <class P>
FormValue<typename P::value_type> evaluate(const Expr& e, const P& pol) {
  using R = typename P::value_type;
  using V = FormValue<R>;
  using K = Expr::Kind;
  const auto scalar = [&](const R& r) {
    V v;
    if (!P::is_zero(r)) v.terms.emplace(WedgeIndex{}, r);
    return v;
  };
  const auto function_of = [&](const V& v, const Expr& at, const std::string& what) {
    if (v.degree != 0) throw ParseError(what + " needs a function, not a " + std::to_string(v.degree) + "-form", at.position);
    auto it = v.terms.find(WedgeIndex{});
    return it == v.terms.end() ? pol.constant(Rational(0)) : it->second;
  };
  switch (e.kind) {
    case K::Number:
      return scalar(pol.constant(e.value));
    case K::Variable:
      return scalar(pol.variable(e));
    case K::Neg: {
      V v = evaluate(*e.kids[0], pol);
      for (auto& [i, c] : v.terms) c = pol.constant(Rational(-1)) * c;
      return v;
    }
    case K::Add:
    case K::Sub: {
      V a = evaluate(*e.kids[0], pol);
      const V b = evaluate(*e.kids[1], pol);
      if (a.degree != b.degree && !a.terms.empty() && !b.terms.empty())
        throw ParseError("adding a " + std::to_string(a.degree) + "-form and a " + std::to_string(b.degree) + "-form",
                         e.position);
      if (a.terms.empty()) a.degree = b.degree;
      const R s = pol.constant(Rational(e.kind == K::Add ? 1 : -1));
      for (const auto& [i, c] : b.terms) add_into<P>(a, i, s * c);
      return a;
    }
    case K::Mul: {
      const V a = evaluate(*e.kids[0], pol);
      const V b = evaluate(*e.kids[1], pol);
      if (a.degree != 0 && b.degree != 0) throw ParseError("use /\\ to multiply forms", e.position);
      const V& f = a.degree == 0 ? a : b;
      const V& w = a.degree == 0 ? b : a;
      const R c = function_of(f, e, "'*'");
      V out;
      out.degree = w.degree;
      for (const auto& [i, x] : w.terms) add_into<P>(out, i, c * x);
      return out;
    }
    case K::Pow: {
      const V a = evaluate(*e.kids[0], pol);
      return scalar(pol.pow(function_of(a, e, "'^'"), e.power, e));
    }
    case K::D: {
      const V a = evaluate(*e.kids[0], pol);
      const R f = function_of(a, e, "d");
      V out;
      out.degree = 1;
      for (std::size_t v = 0; v < pol.nvars(); ++v) add_into<P>(out, WedgeIndex{static_cast<int>(v)}, pol.derivative(f, v));
      return out;
    }
    case K::Wedge: {
      const V a = evaluate(*e.kids[0], pol);
      const V b = evaluate(*e.kids[1], pol);
      V out;
      out.degree = a.degree + b.degree;
      for (const auto& [i, x] : a.terms)
        for (const auto& [j, y] : b.terms) {
          int sign = 1;
          bool overlap = false;
          for (int p : i)
            for (int q : j) {
              overlap = overlap || p == q;
              if (p > q) sign = -sign;
            }
          if (overlap) continue;
          WedgeIndex k = i;
          k.insert(k.end(), j.begin(), j.end());
          std::sort(k.begin(), k.end());
          add_into<P>(out, k, pol.constant(Rational(sign)) * (x * y));
        }
      return out;
    }
  }
  return {};
}

inline void collect_variables(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Variable) out.insert(e.name);
  for (const auto& k : e.kids) collect_variables(*k, out);
}

}  // namespace detail

inline std::set<std::string> variables_of(const Expr& e) {
  std::set<std::string> s;
  detail::collect_variables(e, s);
  return s;
}

/// A Laurent polynomial; d and wedges are rejected.
inline LaurentPoly eval_laurent(const Expr& e, const VarOrder& order) {
  const auto v = detail::evaluate(e, detail::LaurentPolicy{order});
  if (v.degree != 0) throw ParseError("expected a function, got a " + std::to_string(v.degree) + "-form", e.position);
  auto it = v.terms.find(WedgeIndex{});
  return it == v.terms.end() ? LaurentPoly(order) : it->second;
}

inline LaurentPoly parse_laurent(std::string_view text, const VarOrder& order) { return eval_laurent(*parse(text), order); }

/// A differential form over `ring`; negative exponents only on inverted variables.
inline DifferentialForm eval_form(const Expr& e, const RingSpec& ring) {
  const auto v = detail::evaluate(e, detail::LaurentPolicy{ring.variables()});
  std::map<WedgeIndex, LaurentPoly> terms(v.terms.begin(), v.terms.end());
  return DifferentialForm(ring, v.degree, terms);
}

inline DifferentialForm parse_form(std::string_view text, const RingSpec& ring) { return eval_form(*parse(text), ring); }

/// The coefficient r of a rational 1-form r dvar in one variable.
inline RatFunc eval_p1_form(const Expr& e, const std::string& var) {
  const auto v = detail::evaluate(e, detail::RatFuncPolicy{var});
  if (v.terms.empty()) return RatFunc();
  if (v.degree != 1) throw ParseError("expected a 1-form, got a " + std::to_string(v.degree) + "-form", e.position);
  return v.terms.begin()->second;
}

}  // namespace hhres::cli

#endif  // HHRES_CLI_EVAL_HPP
