#ifndef HHRES_HOCHSCHILD_STRUCTURE_ALGEBRA_HPP
#define HHRES_HOCHSCHILD_STRUCTURE_ALGEBRA_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/exactlin/rational.hpp"
#include "hhres/exactlin/rational_matrix.hpp"
#include "hhres/laurent/exponents.hpp"
#include "hhres/laurent/var_order.hpp"

namespace hhres {

/// Finite formal linear combination of basis elements.
template <class E>
using LinComb = std::vector<std::pair<E, Rational>>;

/// Closed interval of internal degrees, written "A..B".
struct GradeWindow {
  int lo = 0;
  int hi = 0;

  static GradeWindow parse(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw ValidationError("grade window must look like A..B, got '" + text + "'");
    try {
      GradeWindow w{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
      if (w.lo > w.hi) throw ValidationError("empty grade window '" + text + "'");
      return w;
    } catch (const std::logic_error&) {
      throw ValidationError("grade window must look like A..B, got '" + text + "'");
    }
  }

  bool contains(int d) const noexcept { return lo <= d && d <= hi; }
};

/// Finite-dimensional unital associative Q-algebra given by structure constants
/// e_i e_j = sum_k c^k_ij e_k. Associativity, the unit and the optional grading
/// are verified exhaustively on construction.
class StructureAlgebra {
 public:
  using element = std::size_t;

  /// `table[i][j]` is the coordinate vector of e_i e_j.
  StructureAlgebra(std::vector<std::string> labels, const std::vector<std::vector<std::vector<Rational>>>& table,
                   std::vector<Rational> unit, std::optional<std::vector<int>> grading = std::nullopt)
      : labels_(std::move(labels)), unit_(std::move(unit)), grading_(std::move(grading)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw ValidationError("algebra of dimension 0");
    if (table.size() != n) throw ValidationError("multiplication table has wrong number of rows");
    if (unit_.size() != n) throw ValidationError("unit vector has wrong length");
    if (grading_ && grading_->size() != n) throw ValidationError("grading has wrong length");
    mul_.assign(n, std::vector<LinComb<element>>(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) throw ValidationError("multiplication table has wrong number of columns");
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j].size() != n) throw ValidationError("product vector has wrong length");
        for (std::size_t k = 0; k < n; ++k)
          if (!table[i][j][k].is_zero()) mul_[i][j].emplace_back(k, table[i][j][k]);
      }
    }
    validate();
  }

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Rational>& unit() const noexcept { return unit_; }
  bool is_graded() const noexcept { return grading_.has_value(); }
  bool is_finite() const noexcept { return true; }
  const std::optional<std::vector<int>>& grading() const noexcept { return grading_; }
  int degree(element i) const { return grading_ ? grading_->at(i) : 0; }

  const LinComb<element>& multiply(element i, element j) const { return mul_.at(i).at(j); }

  std::vector<element> basis() const {
    std::vector<element> b(dim());
    for (std::size_t i = 0; i < dim(); ++i) b[i] = i;
    return b;
  }

  std::vector<element> basis_of_degree(int w) const {
    std::vector<element> b;
    for (std::size_t i = 0; i < dim(); ++i)
      if (degree(i) == w) b.push_back(i);
    return b;
  }

  int max_degree() const {
    int m = 0;
    for (std::size_t i = 0; i < dim(); ++i) m = std::max(m, degree(i));
    return m;
  }

  std::vector<Rational> multiply_vectors(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    std::vector<Rational> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a.at(i).is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (b.at(j).is_zero()) continue;
        const Rational s = a[i] * b[j];
        for (const auto& [k, c] : mul_[i][j]) out[k] += s * c;
      }
    }
    return out;
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (mul_[i][j] != mul_[j][i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "algebra(dim=" + std::to_string(dim()) + ", basis=[";
    for (std::size_t i = 0; i < dim(); ++i) s += (i ? "," : "") + labels_[i];
    return s + "])";
  }

  // ---- factories -------------------------------------------------------

  static StructureAlgebra ground_field() { return truncated_polynomial(1, "x"); }

  /// Q[x]/(x^n) with basis 1, x, ..., x^{n-1}, graded by x-degree.
  static StructureAlgebra truncated_polynomial(std::size_t n, const std::string& var = "x") {
    return monomial_quotient(VarOrder({var}), standard_monomials_box({static_cast<int>(n) - 1}));
  }

  /// Q[x]/(x^2).
  static StructureAlgebra dual_numbers() { return truncated_polynomial(2, "e"); }

  /// Exponent vectors e with 0 <= e_i <= max_i.
  static std::vector<Exponents> standard_monomials_box(const std::vector<int>& max) {
    std::vector<Exponents> out;
    Exponents e(max.size());
    while (true) {
      out.push_back(e);
      std::size_t i = 0;
      while (i < max.size() && e[i] == max[i]) e[i++] = 0;
      if (i == max.size()) break;
      ++e[i];
    }
    return out;
  }

  /// Q[vars]/I for a monomial ideal I, given by its standard monomials (a set
  /// closed under division that contains 1). Graded by total degree.
  static StructureAlgebra monomial_quotient(const VarOrder& vars, std::vector<Exponents> standard) {
    std::sort(standard.begin(), standard.end(),
              [](const Exponents& a, const Exponents& b) { return a.total() != b.total() ? a.total() < b.total() : a < b; });
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < standard.size(); ++i) index.emplace(standard[i], i);
    if (!index.count(Exponents(vars.size()))) throw ValidationError("standard monomials must contain 1");
    const std::size_t n = standard.size();
    std::vector<std::string> labels;
    std::vector<int> grading;
    for (const auto& e : standard) {
      std::string l;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        if (e[v] == 0) continue;
        if (!l.empty()) l += "*";
        l += vars.name(v) + (e[v] == 1 ? "" : "^" + std::to_string(e[v]));
      }
      labels.push_back(l.empty() ? "1" : l);
      grading.push_back(static_cast<int>(e.total()));
    }
    std::vector<std::vector<std::vector<Rational>>> table(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto it = index.find(standard[i] + standard[j]);
        if (it != index.end()) table[i][j][it->second] = Rational(1);
      }
    std::vector<Rational> unit(n);
    unit[index.at(Exponents(vars.size()))] = Rational(1);
    return StructureAlgebra(std::move(labels), table, std::move(unit), std::move(grading));
  }

  /// Q[x]/(p) for a polynomial p of degree >= 1 given by coefficients p_0..p_d.
  static StructureAlgebra polynomial_quotient(const std::vector<Rational>& p, const std::string& var = "x") {
    std::vector<Rational> q = p;
    while (!q.empty() && q.back().is_zero()) q.pop_back();
    if (q.size() < 2) throw ValidationError("quotient polynomial must have degree >= 1");
    const std::size_t d = q.size() - 1;
    const Rational lead = q.back();
    for (auto& c : q) c /= lead;
    // x^k mod p for k < 2d - 1
    std::vector<std::vector<Rational>> pow(2 * d, std::vector<Rational>(d));
    for (std::size_t k = 0; k < d; ++k) pow[k][k] = Rational(1);
    for (std::size_t k = d; k < 2 * d; ++k) {
      // x * x^{k-1}
      const auto& prev = pow[k - 1];
      std::vector<Rational> cur(d);
      for (std::size_t i = 0; i + 1 < d; ++i) cur[i + 1] = prev[i];
      const Rational top = prev[d - 1];
      for (std::size_t i = 0; i < d; ++i) cur[i] -= top * q[i];
      pow[k] = cur;
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
    std::vector<std::vector<std::vector<Rational>>> table(d, std::vector<std::vector<Rational>>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) table[i][j] = pow[i + j];
    std::vector<Rational> unit(d);
    unit[0] = Rational(1);
    return StructureAlgebra(std::move(labels), table, std::move(unit));
  }

  /// A x B with componentwise product.
  static StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b) {
    const std::size_t n = a.dim() + b.dim();
    std::vector<std::string> labels;
    for (const auto& l : a.labels_) labels.push_back("(" + l + ",0)");
    for (const auto& l : b.labels_) labels.push_back("(0," + l + ")");
    std::vector<std::vector<std::vector<Rational>>> table(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (const auto& [k, c] : a.multiply(i, j)) table[i][j][k] = c;
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j)
        for (const auto& [k, c] : b.multiply(i, j)) table[a.dim() + i][a.dim() + j][a.dim() + k] = c;
    std::vector<Rational> unit = a.unit_;
    unit.insert(unit.end(), b.unit_.begin(), b.unit_.end());
    return StructureAlgebra(std::move(labels), table, std::move(unit));
  }

  /// A (x) B with basis e_i (x) f_j in lexicographic order.
  static StructureAlgebra tensor(const StructureAlgebra& a, const StructureAlgebra& b) {
    const std::size_t n = a.dim() * b.dim();
    auto idx = [&](std::size_t i, std::size_t j) { return i * b.dim() + j; };
    std::vector<std::string> labels;
    for (const auto& la : a.labels_)
      for (const auto& lb : b.labels_) labels.push_back(la + "(x)" + lb);
    std::vector<std::vector<std::vector<Rational>>> table(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (std::size_t i1 = 0; i1 < a.dim(); ++i1)
      for (std::size_t j1 = 0; j1 < b.dim(); ++j1)
        for (std::size_t i2 = 0; i2 < a.dim(); ++i2)
          for (std::size_t j2 = 0; j2 < b.dim(); ++j2)
            for (const auto& [ka, ca] : a.multiply(i1, i2))
              for (const auto& [kb, cb] : b.multiply(j1, j2)) table[idx(i1, j1)][idx(i2, j2)][idx(ka, kb)] += ca * cb;
    std::vector<Rational> unit(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) unit[idx(i, j)] = a.unit_[i] * b.unit_[j];
    return StructureAlgebra(std::move(labels), table, std::move(unit));
  }

  /// Same algebra in the basis f_a = sum_i P[i][a] e_i (P invertible). The
  /// grading is dropped since the new basis need not be homogeneous.
  static StructureAlgebra change_basis(const StructureAlgebra& a, const RationalMatrix& p) {
    const std::size_t n = a.dim();
    if (p.rows() != n || p.cols() != n) throw ValidationError("basis change matrix has wrong shape");
    const RationalMatrix pinv = inverse(p);
    std::vector<std::vector<Rational>> cols(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < n; ++c) cols[c][i] = p.at(i, c);
    std::vector<std::vector<std::vector<Rational>>> table(n, std::vector<std::vector<Rational>>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) table[x][y] = pinv.apply(a.multiply_vectors(cols[x], cols[y]));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i));
    return StructureAlgebra(std::move(labels), table, pinv.apply(a.unit_));
  }

 private:
  void validate() const {
    const std::size_t n = dim();
    // associativity on basis triples
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<Rational> left(n), right(n);
          for (const auto& [m, c] : mul_[i][j])
            for (const auto& [r, d] : mul_[m][k]) left[r] += c * d;
          for (const auto& [m, c] : mul_[j][k])
            for (const auto& [r, d] : mul_[i][m]) right[r] += c * d;
          if (left != right)
            throw ValidationError("structure constants are not associative at (" + labels_[i] + "," + labels_[j] + "," +
                                  labels_[k] + ")");
        }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> e(n);
      e[i] = Rational(1);
      if (multiply_vectors(unit_, e) != e || multiply_vectors(e, unit_) != e)
        throw ValidationError("unit vector is not a two-sided identity on " + labels_[i]);
    }
    if (grading_) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (const auto& [k, c] : mul_[i][j])
            if ((*grading_)[k] != (*grading_)[i] + (*grading_)[j])
              throw ValidationError("structure constants do not respect the grading");
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<LinComb<element>>> mul_;
  std::vector<Rational> unit_;
  std::optional<std::vector<int>> grading_;
};

/// Free polynomial algebra Q[t_1..t_n], graded by total degree. Infinite
/// dimensional: Hochschild computations need a grade window.
class PolyAlgebra {
 public:
  using element = Exponents;

  explicit PolyAlgebra(VarOrder vars) : vars_(std::move(vars)) {}

  const VarOrder& variables() const noexcept { return vars_; }
  bool is_graded() const noexcept { return true; }
  bool is_finite() const noexcept { return false; }
  int degree(const element& e) const noexcept { return static_cast<int>(e.total()); }

  LinComb<element> multiply(const element& a, const element& b) const { return {{a + b, Rational(1)}}; }

  std::vector<element> basis() const { throw ValidationError("polynomial algebra is infinite dimensional"); }

  /// Monomials of total degree w, in increasing exponent order.
  std::vector<element> basis_of_degree(int w) const {
    std::vector<element> out;
    if (w < 0) return out;
    Exponents e(vars_.size());
    enumerate(e, 0, w, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string label(const element& e) const {
    std::string l;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (e[v] == 0) continue;
      if (!l.empty()) l += "*";
      l += vars_.name(v) + (e[v] == 1 ? "" : "^" + std::to_string(e[v]));
    }
    return l.empty() ? "1" : l;
  }

 private:
  void enumerate(Exponents& e, std::size_t v, int left, std::vector<element>& out) const {
    if (v + 1 == vars_.size()) {
      e[v] = left;
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[v] = k;
      enumerate(e, v + 1, left - k, out);
    }
  }

  VarOrder vars_;
};

}  // namespace hhres

#endif  // HHRES_HOCHSCHILD_STRUCTURE_ALGEBRA_HPP
