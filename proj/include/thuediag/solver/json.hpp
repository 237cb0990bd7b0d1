#pragma once

#include "thuediag/forms/json.hpp"
#include "thuediag/solver/audit.hpp"

namespace thuediag {

inline Json to_json(const SolutionRecord& s) {
  return Json{{"x", s.x.get_str()},
              {"y", s.y.get_str()},
              {"F", s.f_value.get_str()},
              {"xi", s.xi.str()},
              {"eta", s.eta.str()},
              {"zeta_sq", s.zeta_sq.str()},
              {"z_pow_2r", s.z_pow_2r.str()},
              {"related_index", s.related_index},
              {"tie", s.tie},
              {"hessian", s.hessian.get_str()}};
}

inline Json to_json(const RelatedClassification& c) {
  Json groups = Json::object();
  for (const auto& [k, g] : c.groups) {
    Json arr = Json::array();
    for (const auto& s : g) arr.push_back(s.key());
    groups[std::to_string(k)] = arr;
  }
  return Json{{"groups", groups}, {"ties", c.ties}, {"undecided", c.undecided}, {"max_bits", c.max_bits}};
}

inline Json to_json(const AuditCheck& c) {
  return Json{{"name", c.name}, {"subject", c.subject}, {"decided", c.decided}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"route", c.route}};
}

inline Json to_json(const AuditReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(to_json(c));
  return Json{{"checks", checks}, {"falsifications", rep.falsifications()}, {"undecided", rep.undecided()}};
}

}  // namespace thuediag
