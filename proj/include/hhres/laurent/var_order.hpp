#ifndef HHRES_LAURENT_VAR_ORDER_HPP
#define HHRES_LAURENT_VAR_ORDER_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/laurent/exponents.hpp"

namespace hhres {

/// Ordered variable names, innermost first: (t1, t2) models Q((t1))((t2)).
class VarOrder {
 public:
  VarOrder() : names_(std::make_shared<const std::vector<std::string>>()) {}

  explicit VarOrder(std::vector<std::string> names) {
    if (names.empty()) throw ValidationError("variable order must name at least one variable");
    if (names.size() > kMaxVars) throw ValidationError("too many variables");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw ValidationError("empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j]) throw ValidationError("duplicate variable '" + names[i] + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  /// Comma-separated list, whitespace ignored: "t1, t2".
  static VarOrder parse(std::string_view text) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : text) {
      if (c == ',') {
        names.push_back(cur);
        cur.clear();
      } else if (c != ' ' && c != '\t') {
        cur += c;
      }
    }
    names.push_back(cur);
    return VarOrder(std::move(names));
  }

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  const std::vector<std::string>& names() const noexcept { return *names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_->begin());
  }

  std::size_t index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) throw ValidationError("unknown variable '" + std::string(name) + "'");
    return *i;
  }

  friend bool operator==(const VarOrder& a, const VarOrder& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace hhres

#endif  // HHRES_LAURENT_VAR_ORDER_HPP
