#ifndef HHRES_HOCHSCHILD_ALGEBRA_FILE_HPP
#define HHRES_HOCHSCHILD_ALGEBRA_FILE_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hhres/error.hpp"
#include "hhres/hochschild/structure_algebra.hpp"

namespace hhres {

using AlgebraSpec = std::variant<StructureAlgebra, PolyAlgebra>;

namespace detail {

inline Rational json_rational(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  throw ValidationError(where + ": expected an exact rational (integer or \"p/q\" string)");
}

inline std::vector<Rational> json_vector(const nlohmann::json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) throw ValidationError(where + ": expected " + std::to_string(n) + " coordinates");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(json_rational(v[k], where));
  return out;
}

}  // namespace detail

/// Algebra from its JSON description. Either
///   {"dim": n, "basis": [labels], "unit": [coords], "mul": [[i, j, [coords]], ...], "grading": [degrees]}
/// with omitted products equal to zero, or {"polynomial": ["x", "y"]}.
inline AlgebraSpec algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("algebra description must be a JSON object");
  if (j.contains("polynomial")) {
    std::vector<std::string> names;
    for (const auto& v : j.at("polynomial")) {
      if (!v.is_string()) throw ValidationError("polynomial variables must be strings");
      names.push_back(v.get<std::string>());
    }
    return PolyAlgebra(VarOrder(names));
  }
  for (const char* key : {"dim", "basis", "unit", "mul"})
    if (!j.contains(key)) throw ValidationError(std::string("algebra description lacks field '") + key + "'");
  if (!j.at("dim").is_number_integer() || j.at("dim").get<long>() <= 0)
    throw ValidationError("'dim' must be a positive integer");
  const std::size_t n = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (!j.at("basis").is_array() || j.at("basis").size() != n) throw ValidationError("'basis' must list dim labels");
  for (const auto& v : j.at("basis")) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  const auto unit = detail::json_vector(j.at("unit"), n, "unit");
  std::vector<std::vector<std::vector<Rational>>> table(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (const auto& entry : j.at("mul")) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() || !entry[1].is_number_integer())
      throw ValidationError("each 'mul' entry must be [i, j, [coords]]");
    const long a = entry[0].get<long>();
    const long b = entry[1].get<long>();
    if (a < 0 || b < 0 || a >= static_cast<long>(n) || b >= static_cast<long>(n))
      throw ValidationError("'mul' index out of range");
    table[a][b] = detail::json_vector(entry[2], n, "mul[" + std::to_string(a) + "," + std::to_string(b) + "]");
  }
  std::optional<std::vector<int>> grading;
  if (j.contains("grading")) {
    if (!j.at("grading").is_array()) throw ValidationError("'grading' must be a list of integers");
    grading.emplace();
    for (const auto& v : j.at("grading")) {
      if (!v.is_number_integer()) throw ValidationError("'grading' must be a list of integers");
      grading->push_back(v.get<int>());
    }
  }
  return StructureAlgebra(std::move(labels), table, unit, std::move(grading));
}

inline AlgebraSpec load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open algebra file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("algebra file is not valid JSON: ") + e.what(), e.byte);
  }
  return algebra_from_json(j);
}

/// Inverse of `algebra_from_json` for structure-constant algebras.
inline nlohmann::json algebra_to_json(const StructureAlgebra& a) {
  nlohmann::json j;
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  std::vector<std::string> unit;
  for (const auto& c : a.unit()) unit.push_back(c.to_string());
  j["unit"] = unit;
  nlohmann::json mul = nlohmann::json::array();
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      if (a.multiply(x, y).empty()) continue;
      std::vector<std::string> v(a.dim(), "0");
      for (const auto& [k, c] : a.multiply(x, y)) v[k] = c.to_string();
      mul.push_back(nlohmann::json::array({x, y, v}));
    }
  j["mul"] = mul;
  if (a.grading()) j["grading"] = *a.grading();
  return j;
}

}  // namespace hhres

#endif  // HHRES_HOCHSCHILD_ALGEBRA_FILE_HPP
