#ifndef HHRES_RESSYM_TRACE_JSON_HPP
#define HHRES_RESSYM_TRACE_JSON_HPP

#include <string>

#include "json.hpp"

#include "hhres/ressym/symbol.hpp"

namespace hhres {

inline nlohmann::json chain_to_json(const OperatorChain& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : c.terms()) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& a : t.factors) fs.push_back(a.to_string());
    terms.push_back({{"coef", t.coef.to_string()}, {"factors", fs}});
  }
  return {{"degree", c.degree()}, {"terms", terms}};
}

inline nlohmann::json trace_to_json(const SymbolTrace& tr) {
  nlohmann::json gs = nlohmann::json::array();
  for (const auto& g : tr.input.gs) gs.push_back(g.to_string());
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : tr.steps)
    steps.push_back({{"level", s.level},
                     {"window", s.window},
                     {"lifted", chain_to_json(s.lifted)},
                     {"boundary", chain_to_json(s.boundary)},
                     {"merged", chain_to_json(s.merged)},
                     {"output", chain_to_json(s.output)}});
  nlohmann::json j = {{"vars", tr.input.order.names()},
                      {"f", tr.input.f.to_string()},
                      {"g", gs},
                      {"seed", chain_to_json(tr.seed)},
                      {"steps", steps},
                      {"raw_trace", tr.raw.to_string()},
                      {"sign", tr.sign},
                      {"value", tr.value.to_string()},
                      {"oracle", tr.oracle.to_string()},
                      {"agree", tr.agree}};
  j["tate"] = tr.tate ? nlohmann::json(tr.tate->to_string()) : nlohmann::json(nullptr);
  return j;
}

}  // namespace hhres

#endif  // HHRES_RESSYM_TRACE_JSON_HPP
