#pragma once

#include <string>

#include "thuediag/cli/sweep.hpp"
#include "thuediag/pade.hpp"

namespace thuediag::cli {

inline Json poly_json(const pade::Poly& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.get_str());
  return out;
}

inline Json solutions_json(const std::vector<SolutionRecord>& sols) {
  Json out = Json::array();
  for (const auto& s : sols) out.push_back(to_json(s));
  return out;
}

inline Json invariants_json(const DiagForm& f, const Integer& h) {
  Discriminant d = discriminant(f);
  return Json{{"r", f.r()},
              {"A", f.A().get_str()},
              {"B", f.B().get_str()},
              {"C", f.C().get_str()},
              {"D", f.D().get_str()},
              {"discriminant_resultant", d.value.get_str()},
              {"discriminant_identity", d.via_identity.get_str()},
              {"discriminant_routes_agree", Rational(abs(d.value)) == abs(d.via_identity) && d.sign_agrees},
              {"delta_prime", criteria::delta_prime(f, h).get_str()},
              {"j_power", f.j_power().get_str()},
              {"reduced", f.is_reduced()},
              {"definite", f.is_definite()},
              {"form_case", criteria::to_string(criteria::form_case(f))}};
}

struct CommandResult {
  Json report;
  int exit_code = exit_pass;
};

/// Invariants, box solutions, related classes and the gap audit for one (form, h).
inline CommandResult cmd_analyze(const DiagForm& f, const Integer& h, long box) {
  if (h < 1) throw ParameterError("h must be positive");
  std::vector<SolutionRecord> sols = enumerate_box(f, h, box, box);
  RelatedClassification cls = classify(f, sols);
  AuditReport audit = gap_audit(f, h, cls);
  CommandResult out;
  out.exit_code = audit.falsifications() > 0 || audit.undecided() > 0 ? exit_falsified : exit_pass;
  out.report = Json{{"artifact", "thuediag"},
                    {"version", kArtifactVersion},
                    {"schema_version", kSchemaVersion},
                    {"command", "analyze"},
                    {"form", to_json(f)},
                    {"h", h.get_str()},
                    {"invariants", invariants_json(f, h)},
                    {"region", "box |x|<=" + std::to_string(box) + ", 1<=y<=" + std::to_string(box)},
                    {"solutions", solutions_json(cls.all())},
                    {"classification", to_json(cls)},
                    {"gap_audit", to_json(audit)}};
  return out;
}

inline CommandResult cmd_enumerate_box(const DiagForm& f, const Integer& h, long box) {
  std::vector<SolutionRecord> sols = enumerate_box(f, h, box, box);
  CommandResult out;
  out.report = Json{{"command", "enumerate"},
                    {"form", to_json(f)},
                    {"h", h.get_str()},
                    {"region", "box |x|<=" + std::to_string(box) + ", 1<=y<=" + std::to_string(box)},
                    {"count", sols.size()},
                    {"solutions", solutions_json(sols)}};
  return out;
}

inline CommandResult cmd_enumerate_convergents(const Integer& a, const Integer& b, int r, const Integer& h, const Integer& y_max) {
  ConvergentSearch cs = enumerate_binomial_convergents(a, b, r, h, y_max);
  CommandResult out;
  out.report = Json{{"command", "enumerate"},
                    {"form", to_json(make_binomial(a, b, r))},
                    {"h", h.get_str()},
                    {"region", "positive quadrant, y<=" + y_max.get_str()},
                    {"crossover", cs.crossover.get_str()},
                    {"depth", cs.depth},
                    {"count", cs.solutions.size()},
                    {"solutions", solutions_json(cs.solutions)}};
  return out;
}

/// Coefficients of A_{n,g}, B_{n,g}, the remainder series through z^order, and the Wronskian constants.
inline CommandResult cmd_pade(int n, int g, int r, int order) {
  pade::PadePair p = pade::build(n, g, r);
  pade::Poly rem = pade::remainder_series(p, order);
  Json wr = Json::object();
  for (int I = 0; I <= 1; ++I) wr["I=" + std::to_string(I)] = pade::wronskian_at_one(n, I, r).get_str();
  CommandResult out;
  out.report = Json{{"command", "pade"},
                    {"n", n},
                    {"g", g},
                    {"r", r},
                    {"A", poly_json(p.a)},
                    {"B", poly_json(p.b)},
                    {"order", order},
                    {"remainder", poly_json(rem)},
                    {"vanishing_order", pade::vanishing_order(rem)},
                    {"wronskian", wr}};
  return out;
}

}  // namespace thuediag::cli
