#ifndef HHRES_TATEOP_BANDED_OPERATOR_HPP
#define HHRES_TATEOP_BANDED_OPERATOR_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/exactlin/rational.hpp"
#include "hhres/laurent/laurent_poly.hpp"

namespace hhres {

/// Band data of an operator X on the monomial basis along one variable v.
///   shift: every nonzero matrix entry (beta <- alpha) has beta_v - alpha_v in [shift_lo, shift_hi].
///   hull:  X commutes with the shift alpha -> alpha + e_v on inputs with alpha_v >= hull_hi + 1,
///          and likewise on inputs with alpha_v <= hull_lo - 1; hull_lo <= hull_hi + 1.
///          Without a hull X commutes with the shift everywhere.
struct VarBand {
  int shift_lo = 0;
  int shift_hi = 0;
  bool has_hull = false;
  int hull_lo = 0;
  int hull_hi = -1;

  friend bool operator==(const VarBand&, const VarBand&) = default;
};

struct Band {
  bool zero = false;
  std::vector<VarBand> vars;
};

/// Endomorphism of the span of t^alpha (alpha in Z^n) given as an immutable
/// expression tree over multiplication operators, exponent-window projectors
/// and finite matrices, with sound band metadata.
class BandedOperator {
 public:
  enum class Kind { Zero, Identity, Mult, Projector, Window, Compose, Sum };

  struct Node {
    Kind kind = Kind::Zero;
    LaurentPoly f;                               // Mult
    std::size_t var = 0;                         // Projector
    std::optional<int> lo, hi;                   // Projector
    std::map<Exponents, SparseVec> columns;      // Window: input -> image
    std::vector<std::shared_ptr<const Node>> factors;                      // Compose, applied right to left
    std::vector<std::pair<Rational, std::shared_ptr<const Node>>> summands;  // Sum
    Band band;
  };
  using NodePtr = std::shared_ptr<const Node>;

  BandedOperator() = default;

  // ---- generators --------------------------------------------------------

  static BandedOperator zero(const VarOrder& order) { return BandedOperator(order, make_zero(order.size())); }

  static BandedOperator identity(const VarOrder& order) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Identity;
    n->band.vars.assign(order.size(), VarBand{});
    return BandedOperator(order, n);
  }

  static BandedOperator mult(const LaurentPoly& f) {
    const VarOrder& order = f.order();
    if (f.is_zero()) return zero(order);
    if (f == LaurentPoly::constant(order, Rational(1))) return identity(order);
    auto n = std::make_shared<Node>();
    n->kind = Kind::Mult;
    n->f = f;
    n->band.vars.resize(order.size());
    for (std::size_t v = 0; v < order.size(); ++v) {
      const auto [lo, hi] = f.exponent_range(v);
      n->band.vars[v] = VarBand{lo, hi, false, 0, -1};
    }
    return BandedOperator(order, n);
  }

  /// Projection onto monomials with lo <= alpha_var <= hi (either side may be open).
  static BandedOperator projector(const VarOrder& order, std::size_t var, std::optional<int> lo, std::optional<int> hi) {
    if (var >= order.size()) throw ValidationError("projector variable out of range");
    if (!lo && !hi) return identity(order);
    if (lo && hi && *lo > *hi) return zero(order);
    auto n = std::make_shared<Node>();
    n->kind = Kind::Projector;
    n->var = var;
    n->lo = lo;
    n->hi = hi;
    n->band.vars.assign(order.size(), VarBand{});
    VarBand& b = n->band.vars[var];
    b.has_hull = true;
    if (lo && hi) {
      b.hull_lo = *lo;
      b.hull_hi = *hi;
    } else if (lo) {
      b.hull_lo = *lo;
      b.hull_hi = *lo - 1;
    } else {
      b.hull_lo = *hi + 1;
      b.hull_hi = *hi;
    }
    return BandedOperator(order, n);
  }

  /// Finite matrix: `columns[alpha]` is the image of t^alpha; all other monomials map to 0.
  static BandedOperator window(const VarOrder& order, const std::map<Exponents, LaurentPoly>& columns) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Window;
    for (const auto& [a, img] : columns) {
      if (a.size() != order.size()) throw ValidationError("window input exponent has the wrong length");
      if (!(img.order() == order)) throw ValidationError("window image over a different variable order");
      if (!img.is_zero()) n->columns.emplace(a, img.terms());
    }
    if (n->columns.empty()) return zero(order);
    const std::size_t nv = order.size();
    n->band.vars.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      VarBand b;
      b.has_hull = true;
      bool first = true;
      for (const auto& [a, img] : n->columns) {
        if (first) {
          b.hull_lo = b.hull_hi = a[v];
          b.shift_lo = b.shift_hi = img.front().first[v] - a[v];
          first = false;
        }
        b.hull_lo = std::min(b.hull_lo, a[v]);
        b.hull_hi = std::max(b.hull_hi, a[v]);
        for (const auto& [e, c] : img) {
          b.shift_lo = std::min(b.shift_lo, e[v] - a[v]);
          b.shift_hi = std::max(b.shift_hi, e[v] - a[v]);
        }
      }
      n->band.vars[v] = b;
    }
    return BandedOperator(order, n);
  }

  /// c * (t^from |-> t^to), all other monomials to 0.
  static BandedOperator matrix_unit(const VarOrder& order, const Exponents& from, const Exponents& to,
                                    const Rational& c = Rational(1)) {
    return window(order, {{from, LaurentPoly::monomial(order, to, c)}});
  }

  // ---- accessors -----------------------------------------------------------

  const VarOrder& order() const noexcept { return order_; }
  const NodePtr& node() const noexcept { return node_; }
  Kind kind() const noexcept { return node_->kind; }
  const Band& band() const noexcept { return node_->band; }
  bool is_structurally_zero() const noexcept { return node_->kind == Kind::Zero; }
  bool same_node(const BandedOperator& o) const noexcept { return node_ == o.node_; }

  // ---- evaluation ----------------------------------------------------------

  SparseVec apply_terms(const SparseVec& v) const { return apply_node(*node_, v); }

  LaurentPoly apply(const LaurentPoly& v) const {
    if (!(v.order() == order_)) throw ValidationError("operator and vector over different variable orders");
    return LaurentPoly(order_, apply_terms(v.terms()));
  }

  LaurentPoly apply_basis(const Exponents& alpha) const {
    return LaurentPoly(order_, apply_terms({{alpha, Rational(1)}}));
  }

  // ---- algebra -------------------------------------------------------------

  /// a * b = a o b (b acts first).
  friend BandedOperator operator*(const BandedOperator& a, const BandedOperator& b) {
    a.check_same(b);
    return BandedOperator(a.order_, make_compose({a.node_, b.node_}, a.order_.size()));
  }

  friend BandedOperator operator*(const Rational& s, const BandedOperator& a) {
    return BandedOperator(a.order_, make_sum({{s, a.node_}}, a.order_.size()));
  }

  friend BandedOperator operator+(const BandedOperator& a, const BandedOperator& b) {
    a.check_same(b);
    return BandedOperator(a.order_, make_sum({{Rational(1), a.node_}, {Rational(1), b.node_}}, a.order_.size()));
  }

  friend BandedOperator operator-(const BandedOperator& a, const BandedOperator& b) {
    a.check_same(b);
    return BandedOperator(a.order_, make_sum({{Rational(1), a.node_}, {Rational(-1), b.node_}}, a.order_.size()));
  }

  BandedOperator operator-() const { return Rational(-1) * *this; }

  /// sum_k c_k X_k in one node.
  static BandedOperator linear_combination(const VarOrder& order,
                                           const std::vector<std::pair<Rational, BandedOperator>>& terms) {
    std::vector<std::pair<Rational, NodePtr>> s;
    for (const auto& [c, x] : terms) {
      if (!(x.order_ == order)) throw ValidationError("operators over different variable orders");
      s.emplace_back(c, x.node_);
    }
    return BandedOperator(order, make_sum(s, order.size()));
  }

  std::string to_string() const { return node_string(*node_); }

 private:
  BandedOperator(VarOrder order, NodePtr node) : order_(std::move(order)), node_(std::move(node)) {}

  void check_same(const BandedOperator& b) const {
    if (!(order_ == b.order_)) throw ValidationError("operators over different variable orders");
  }

  static NodePtr make_zero(std::size_t nv) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Zero;
    n->band.zero = true;
    n->band.vars.assign(nv, VarBand{});
    return n;
  }

  static Band compose_band(const Band& a, const Band& b) {
    Band r;
    if (a.zero || b.zero) {
      r.zero = true;
      r.vars.assign(a.vars.size(), VarBand{});
      return r;
    }
    r.vars.resize(a.vars.size());
    for (std::size_t v = 0; v < a.vars.size(); ++v) {
      const VarBand& x = a.vars[v];
      const VarBand& y = b.vars[v];
      VarBand z;
      z.shift_lo = x.shift_lo + y.shift_lo;
      z.shift_hi = x.shift_hi + y.shift_hi;
      z.has_hull = x.has_hull || y.has_hull;
      if (y.has_hull && x.has_hull) {
        z.hull_lo = std::min(y.hull_lo, x.hull_lo - y.shift_hi);
        z.hull_hi = std::max(y.hull_hi, x.hull_hi - y.shift_lo);
      } else if (y.has_hull) {
        z.hull_lo = y.hull_lo;
        z.hull_hi = y.hull_hi;
      } else if (x.has_hull) {
        z.hull_lo = x.hull_lo - y.shift_hi;
        z.hull_hi = x.hull_hi - y.shift_lo;
      }
      r.vars[v] = z;
    }
    return r;
  }

  static Band sum_band(const std::vector<const Band*>& parts, std::size_t nv) {
    Band r;
    r.vars.assign(nv, VarBand{});
    bool any = false;
    for (const Band* p : parts) {
      if (p->zero) continue;
      for (std::size_t v = 0; v < nv; ++v) {
        VarBand& z = r.vars[v];
        const VarBand& x = p->vars[v];
        if (!any) {
          z.shift_lo = x.shift_lo;
          z.shift_hi = x.shift_hi;
        } else {
          z.shift_lo = std::min(z.shift_lo, x.shift_lo);
          z.shift_hi = std::max(z.shift_hi, x.shift_hi);
        }
        if (x.has_hull) {
          if (!z.has_hull) {
            z.has_hull = true;
            z.hull_lo = x.hull_lo;
            z.hull_hi = x.hull_hi;
          } else {
            z.hull_lo = std::min(z.hull_lo, x.hull_lo);
            z.hull_hi = std::max(z.hull_hi, x.hull_hi);
          }
        }
      }
      any = true;
    }
    r.zero = !any;
    return r;
  }

  static NodePtr make_compose(const std::vector<NodePtr>& in, std::size_t nv) {
    std::vector<NodePtr> fs;
    for (const auto& x : in) {
      if (x->kind == Kind::Zero) return make_zero(nv);
      if (x->kind == Kind::Identity) continue;
      if (x->kind == Kind::Compose) {
        for (const auto& y : x->factors) push_factor(fs, y);
      } else {
        push_factor(fs, x);
      }
    }
    if (fs.empty()) {
      auto n = std::make_shared<Node>();
      n->kind = Kind::Identity;
      n->band.vars.assign(nv, VarBand{});
      return n;
    }
    for (const auto& x : fs)
      if (x->kind == Kind::Zero) return make_zero(nv);
    if (fs.size() == 1) return fs.front();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Compose;
    n->factors = fs;
    Band b = fs.back()->band;
    for (std::size_t k = fs.size() - 1; k-- > 0;) b = compose_band(fs[k]->band, b);
    n->band = b;
    if (b.zero) return make_zero(nv);
    return n;
  }

  /// Appends y to a factor list, merging Mult o Mult and same-variable projectors.
  static void push_factor(std::vector<NodePtr>& fs, const NodePtr& y) {
    if (!fs.empty()) {
      const NodePtr& x = fs.back();
      if (x->kind == Kind::Mult && y->kind == Kind::Mult) {
        const LaurentPoly p = x->f * y->f;
        if (p == LaurentPoly::constant(p.order(), Rational(1)))
          fs.pop_back();
        else
          fs.back() = p.is_zero() ? make_zero(x->band.vars.size()) : mult(p).node_;
        return;
      }
      if (x->kind == Kind::Projector && y->kind == Kind::Projector && x->var == y->var) {
        std::optional<int> lo = x->lo, hi = x->hi;
        if (y->lo) lo = lo ? std::max(*lo, *y->lo) : *y->lo;
        if (y->hi) hi = hi ? std::min(*hi, *y->hi) : *y->hi;
        VarOrder dummy = anonymous_order(x->band.vars.size());
        fs.back() = projector(dummy, x->var, lo, hi).node_;
        return;
      }
    }
    fs.push_back(y);
  }

  static VarOrder anonymous_order(std::size_t nv) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nv; ++i) names.push_back("_" + std::to_string(i));
    return VarOrder(names);
  }

  static NodePtr make_sum(const std::vector<std::pair<Rational, NodePtr>>& in, std::size_t nv) {
    std::vector<std::pair<Rational, NodePtr>> acc;
    std::function<void(const Rational&, const NodePtr&)> add = [&](const Rational& c, const NodePtr& x) {
      if (c.is_zero() || x->kind == Kind::Zero) return;
      if (x->kind == Kind::Sum) {
        for (const auto& [d, y] : x->summands) add(c * d, y);
        return;
      }
      for (auto& [d, y] : acc)
        if (y == x) {
          d += c;
          return;
        }
      acc.emplace_back(c, x);
    };
    for (const auto& [c, x] : in) add(c, x);
    acc.erase(std::remove_if(acc.begin(), acc.end(), [](const auto& p) { return p.first.is_zero(); }), acc.end());
    if (acc.empty()) return make_zero(nv);
    if (acc.size() == 1 && acc.front().first.is_one()) return acc.front().second;
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->summands = acc;
    std::vector<const Band*> parts;
    for (const auto& [c, x] : acc) parts.push_back(&x->band);
    n->band = sum_band(parts, nv);
    return n;
  }

  static SparseVec apply_node(const Node& n, const SparseVec& v) {
    if (v.empty()) return {};
    switch (n.kind) {
      case Kind::Zero:
        return {};
      case Kind::Identity:
        return v;
      case Kind::Mult: {
        SparseVec out;
        for (const auto& [e, c] : v) {
          SparseVec part;
          part.reserve(n.f.terms().size());
          for (const auto& [g, d] : n.f.terms()) part.emplace_back(e + g, c * d);
          out = detail::merge_add(out, part, Rational(1));
        }
        return out;
      }
      case Kind::Projector: {
        SparseVec out;
        for (const auto& t : v) {
          const int x = t.first[n.var];
          if ((n.lo && x < *n.lo) || (n.hi && x > *n.hi)) continue;
          out.push_back(t);
        }
        return out;
      }
      case Kind::Window: {
        SparseVec out;
        for (const auto& [e, c] : v) {
          auto it = n.columns.find(e);
          if (it != n.columns.end()) out = detail::merge_add(out, it->second, c);
        }
        return out;
      }
      case Kind::Compose: {
        SparseVec cur = v;
        for (auto it = n.factors.rbegin(); it != n.factors.rend() && !cur.empty(); ++it) cur = apply_node(**it, cur);
        return cur;
      }
      case Kind::Sum: {
        SparseVec out;
        for (const auto& [c, x] : n.summands) out = detail::merge_add(out, apply_node(*x, v), c);
        return out;
      }
    }
    return {};
  }

  std::string var_name(std::size_t v) const { return order_.name(v); }

  std::string node_string(const Node& n) const {
    switch (n.kind) {
      case Kind::Zero:
        return "0";
      case Kind::Identity:
        return "1";
      case Kind::Mult:
        return "M(" + n.f.to_string() + ")";
      case Kind::Projector: {
        const std::string v = var_name(n.var);
        if (n.lo && n.hi) return "P[" + std::to_string(*n.lo) + "<=" + v + "<=" + std::to_string(*n.hi) + "]";
        if (n.lo) return "P[" + v + ">=" + std::to_string(*n.lo) + "]";
        return "P[" + v + "<=" + std::to_string(*n.hi) + "]";
      }
      case Kind::Window: {
        std::string s = "W{";
        bool first = true;
        for (const auto& [a, img] : n.columns) {
          s += (first ? "" : "; ") + LaurentPoly::monomial(order_, a).to_string() + " -> " +
               LaurentPoly(order_, img).to_string();
          first = false;
        }
        return s + "}";
      }
      case Kind::Compose: {
        std::string s;
        for (std::size_t k = 0; k < n.factors.size(); ++k) s += (k ? " . " : "") + node_string(*n.factors[k]);
        return s;
      }
      case Kind::Sum: {
        std::string s = "(";
        for (std::size_t k = 0; k < n.summands.size(); ++k) {
          const auto& [c, x] = n.summands[k];
          const bool neg = c.sign() < 0;
          const Rational a = neg ? -c : c;
          if (k == 0)
            s += neg ? "-" : "";
          else
            s += neg ? " - " : " + ";
          if (!a.is_one()) s += a.to_string() + "*";
          const bool wrap = x->kind == Kind::Compose && !a.is_one();
          s += wrap ? "[" + node_string(*x) + "]" : node_string(*x);
        }
        return s + ")";
      }
    }
    return "?";
  }

  VarOrder order_;
  NodePtr node_;
};

/// [a, b] = ab - ba.
inline BandedOperator commutator(const BandedOperator& a, const BandedOperator& b) { return a * b - b * a; }

}  // namespace hhres

#endif  // HHRES_TATEOP_BANDED_OPERATOR_HPP
