#ifndef HHRES_EXACTLIN_CHAIN_COMPLEX_HPP
#define HHRES_EXACTLIN_CHAIN_COMPLEX_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/exactlin/rational_matrix.hpp"

namespace hhres {

/// Bounded chain complex of finite-dimensional Q-vector spaces in degrees
/// [lo, hi]. The differential d_n maps degree n to degree n-1, so its matrix
/// has dims(n-1) rows and dims(n) columns. Cochain complexes are stored with
/// negated degrees.
class ChainComplexData {
 public:
  /// `dims[k]` is the dimension in degree lo + k; `differentials` maps n to
  /// d_n for lo < n <= hi (missing entries are zero maps). Throws
  /// ValidationError on shape mismatch or when d_{n-1} d_n != 0.
  ChainComplexData(int lo, std::vector<std::size_t> dims, std::map<int, RationalMatrix> differentials)
      : lo_(lo), dims_(std::move(dims)) {
    if (dims_.empty()) throw ValidationError("chain complex needs at least one degree");
    for (auto& [n, d] : differentials) {
      if (n <= lo_ || n > hi())
        throw ValidationError("differential d_" + std::to_string(n) + " outside degree range");
      if (d.rows() != dim(n - 1) || d.cols() != dim(n))
        throw ValidationError("differential d_" + std::to_string(n) + " has shape " + std::to_string(d.rows()) +
                              "x" + std::to_string(d.cols()) + ", expected " + std::to_string(dim(n - 1)) + "x" +
                              std::to_string(dim(n)));
    }
    diffs_ = std::move(differentials);
    for (int n = lo_ + 2; n <= hi(); ++n) {
      if (!((differential(n - 1) * differential(n)).is_zero()))
        throw ValidationError("d_" + std::to_string(n - 1) + " * d_" + std::to_string(n) + " is not zero");
    }
  }

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(dims_.size()) - 1; }

  std::size_t dim(int n) const {
    if (n < lo_ || n > hi()) return 0;
    return dims_[static_cast<std::size_t>(n - lo_)];
  }

  /// d_n, or the zero map of the right shape.
  RationalMatrix differential(int n) const {
    auto it = diffs_.find(n);
    if (it != diffs_.end()) return it->second;
    return RationalMatrix(dim(n - 1), dim(n));
  }

  std::size_t differential_rank(int n) const {
    auto it = diffs_.find(n);
    return it == diffs_.end() ? 0 : rank(it->second);
  }

  /// dim H_n = dim ker d_n - rank d_{n+1} for every degree in range.
  std::map<int, std::size_t> homology_dims() const {
    std::map<int, std::size_t> ranks;
    for (int n = lo_; n <= hi() + 1; ++n) ranks[n] = differential_rank(n);
    std::map<int, std::size_t> h;
    for (int n = lo_; n <= hi(); ++n) h[n] = dim(n) - ranks[n] - ranks[n + 1];
    return h;
  }

  /// Alternating sum of chain dimensions.
  long long euler_characteristic() const {
    long long chi = 0;
    for (int n = lo_; n <= hi(); ++n) chi += ((n % 2 == 0) ? 1 : -1) * static_cast<long long>(dim(n));
    return chi;
  }

 private:
  int lo_;
  std::vector<std::size_t> dims_;
  std::map<int, RationalMatrix> diffs_;
};

inline std::map<int, std::size_t> homology_dims(const ChainComplexData& c) { return c.homology_dims(); }

}  // namespace hhres

#endif  // HHRES_EXACTLIN_CHAIN_COMPLEX_HPP
