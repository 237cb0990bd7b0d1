#pragma once

#include "thuediag/criteria/checks.hpp"
#include "thuediag/solver/json.hpp"

namespace thuediag::criteria {

inline Json to_json(const TraceEntry& t) {
  return Json{{"what", t.what}, {"lhs", t.lhs}, {"relation", t.relation}, {"rhs", t.rhs}, {"result", t.result}, {"route", t.route}};
}

inline Json to_json(const TheoremVerdict& v) {
  Json params = Json::object();
  for (const auto& [k, val] : v.params) params[k] = val;
  Json trace = Json::array();
  for (const auto& t : v.exact_trace) trace.push_back(to_json(t));
  return Json{{"theorem_id", v.id()},
              {"params", params},
              {"form_case", v.form_case},
              {"hypothesis_holds", v.hypothesis_holds},
              {"bound", v.bound.get_str()},
              {"bound_expr", v.bound_expr},
              {"observed", v.observed},
              {"pass", v.pass ? Json(*v.pass) : Json(nullptr)},
              {"region", v.region},
              {"exact_trace", trace}};
}

}  // namespace thuediag::criteria
