#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "thuediag/criteria.hpp"

namespace thuediag::cli {

inline constexpr const char* kArtifactVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode { exit_pass = 0, exit_falsified = 1, exit_unmet = 2, exit_input = 3 };

struct TheoremRequest {
  criteria::Theorem id;
  int m = 3;
  int l = 1;
  Rational epsilon = 0;
};

struct FormCell {
  DiagForm form;
  Integer h;
  long box_x = 0, box_y = 0;
  std::string family;
};

struct BinomialCell {
  Integer a, b, c;
  int r = 0;
  Integer y_max;
  std::string family;
};

struct SweepSpec {
  std::string name;
  uint64_t seed = 0;
  bool gap_audit = false;
  std::vector<TheoremRequest> theorems;
  std::vector<FormCell> forms;
  std::vector<BinomialCell> binomials;
  Json source;
};

namespace detail {

inline Integer scalar(const Json& j, const std::string& where) { return thuediag::detail::json_integer(j, where); }

/// An array of integers, or {"from": a, "to": b, "step": s}.
inline std::vector<Integer> int_list(const Json& j, const std::string& where) {
  std::vector<Integer> out;
  if (j.is_array()) {
    for (const auto& v : j) out.push_back(scalar(v, where));
  } else if (j.is_object() && j.contains("from") && j.contains("to")) {
    Integer from = scalar(j["from"], where), to = scalar(j["to"], where);
    Integer step = j.contains("step") ? scalar(j["step"], where) : Integer(1);
    if (step < 1) throw ParameterError(where + ": step must be positive");
    for (Integer v = from; v <= to; v += step) out.push_back(v);
  } else {
    out.push_back(scalar(j, where));
  }
  if (out.empty()) throw ParameterError(where + ": empty range");
  return out;
}

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParameterError(where + ": missing \"" + key + "\"");
  return obj[key];
}

inline std::pair<long, long> box_of(const Json& fam, const std::string& where) {
  const Json& b = field(fam, "box", where);
  if (b.is_number_integer() && b.get<long>() >= 0) return {b.get<long>(), b.get<long>()};
  if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() || !b[1].is_number_integer())
    throw ParameterError(where + ": box must be [x_bound, y_bound] or one bound");
  return {b[0].get<long>(), b[1].get<long>()};
}

inline int small_int(const Integer& z, const std::string& where) {
  if (!z.fits_sint_p()) throw ParameterError(where + ": value out of range");
  return static_cast<int>(z.get_si());
}

}  // namespace detail

inline TheoremRequest parse_theorem_request(const Json& j) {
  TheoremRequest t;
  if (j.is_string()) {
    t.id = criteria::parse_theorem(j.get<std::string>());
    return t;
  }
  t.id = criteria::parse_theorem(detail::field(j, "id", "theorem").get<std::string>());
  if (j.contains("m")) t.m = j["m"].get<int>();
  if (j.contains("l")) t.l = j["l"].get<int>();
  if (j.contains("epsilon")) t.epsilon = parse_rational(thuediag::detail::scalar_text(j["epsilon"], "epsilon"));
  if (t.id == criteria::Theorem::C1_6 && t.epsilon <= 0) throw ParameterError("C1_6 needs a positive epsilon");
  return t;
}

/// Families:
///   {"kind": "forms", "forms": [<form spec>...], "h": [...], "box": [x, y]}
///   {"kind": "binomial", "a": <list>, "b": <list>, "r": <list>, "h": [...], "box": [x, y]}
///   {"kind": "random", "D": [...], "r": [...], "coeff_bound": k, "count": n, "reduce": bool, "h": [...], "box": [x, y]}
///   {"kind": "binomial_inequality", "a": <list>, "b": <list>, "c": <list>, "r": <list>, "y_max": n}
inline SweepSpec parse_sweep(const Json& j, std::optional<uint64_t> seed_override = std::nullopt) {
  if (!j.is_object()) throw ParameterError("sweep spec must be a JSON object");
  SweepSpec s;
  s.source = j;
  s.name = j.value("name", "");
  s.seed = seed_override ? *seed_override : j.value("seed", uint64_t{0});
  s.gap_audit = j.value("gap_audit", false);
  for (const auto& t : detail::field(j, "theorems", "sweep")) s.theorems.push_back(parse_theorem_request(t));
  Rng g(s.seed);
  int idx = 0;
  for (const auto& fam : detail::field(j, "families", "sweep")) {
    std::string where = "families[" + std::to_string(idx) + "]";
    std::string kind = detail::field(fam, "kind", where).get<std::string>();
    std::string tag = where + ":" + kind;
    ++idx;
    if (kind == "binomial_inequality") {
      Integer y_max = detail::scalar(detail::field(fam, "y_max", where), where);
      for (const auto& r : detail::int_list(detail::field(fam, "r", where), where))
        for (const auto& a : detail::int_list(detail::field(fam, "a", where), where))
          for (const auto& b : detail::int_list(detail::field(fam, "b", where), where))
            for (const auto& c : detail::int_list(detail::field(fam, "c", where), where))
              s.binomials.push_back({a, b, c, detail::small_int(r, where), y_max, tag});
      continue;
    }
    auto [bx, by] = detail::box_of(fam, where);
    std::vector<Integer> hs = detail::int_list(detail::field(fam, "h", where), where);
    std::vector<DiagForm> forms;
    if (kind == "forms") {
      for (const auto& f : detail::field(fam, "forms", where)) forms.push_back(form_from_json(f));
    } else if (kind == "binomial") {
      for (const auto& r : detail::int_list(detail::field(fam, "r", where), where))
        for (const auto& a : detail::int_list(detail::field(fam, "a", where), where))
          for (const auto& b : detail::int_list(detail::field(fam, "b", where), where))
            forms.push_back(make_binomial(a, b, detail::small_int(r, where)));
    } else if (kind == "random") {
      std::vector<Integer> ds = detail::int_list(detail::field(fam, "D", where), where);
      std::vector<Integer> rs = detail::int_list(detail::field(fam, "r", where), where);
      long bound = detail::field(fam, "coeff_bound", where).get<long>();
      long count = detail::field(fam, "count", where).get<long>();
      bool red = fam.value("reduce", true);
      for (long i = 0; i < count; ++i) {
        const Integer& d = ds[i % ds.size()];
        int r = detail::small_int(rs[(i / ds.size()) % rs.size()], where);
        DiagForm f = d == 0 ? random_split_form(g, r, bound) : random_trace_form(g, d, r, bound);
        forms.push_back(red && f.D() < 0 ? reduce(f).first : f);
      }
    } else {
      throw ParameterError(where + ": unknown family kind \"" + kind + "\"");
    }
    for (const auto& f : forms)
      for (const auto& h : hs) s.forms.push_back({f, h, bx, by, tag});
  }
  return s;
}

inline std::string form_key(const DiagForm& f) {
  std::string out = "r=" + std::to_string(f.r()) + " [";
  for (size_t i = 0; i < f.coeffs().size(); ++i) out += (i ? "," : "") + f.coeffs()[i].get_str();
  return out + "]";
}

namespace detail {

// Runs one request on one form cell; nullopt when the theorem does not speak about this form.
inline std::optional<criteria::TheoremVerdict> run_form_theorem(const TheoremRequest& t, const FormCell& c, const criteria::Observed& obs) {
  using criteria::Theorem;
  int r = c.form.r();
  switch (t.id) {
    case Theorem::T1_3: return r >= 6 ? std::optional(criteria::check_T1_3(c.form, c.h, obs)) : std::nullopt;
    case Theorem::T1_4: return r >= 5 ? std::optional(criteria::check_T1_4(c.form, c.h, t.m, obs)) : std::nullopt;
    case Theorem::C1_5: return r >= 5 ? std::optional(criteria::check_C1_5(c.form, c.h, obs)) : std::nullopt;
    case Theorem::C1_6:
      if (r < 5 || t.epsilon >= make_rational(1, 2 * (r - 1))) return std::nullopt;
      return criteria::check_C1_6(c.form, c.h, t.epsilon, obs);
    case Theorem::T1_7:
      if (r < 6 || c.form.D() >= 0 || !c.form.is_reduced()) return std::nullopt;
      return criteria::check_T1_7(c.form, c.h, t.m, obs);
    case Theorem::T1_8: return r >= 5 ? std::optional(criteria::check_T1_8(c.form, c.h, t.m, obs)) : std::nullopt;
    case Theorem::T1_9: return r >= 5 ? std::optional(criteria::check_T1_9(c.form, c.h, obs)) : std::nullopt;
    case Theorem::T2_1: return r >= 6 - t.l ? std::optional(criteria::check_T2_1(c.form, c.h, t.l, obs)) : std::nullopt;
    default: return std::nullopt;
  }
}

}  // namespace detail

struct VerifyResult {
  Json report;
  int exit_code = exit_pass;
};

/// Runs every requested theorem on every cell, plus the gap audit when asked.
/// The report carries no timing, so equal inputs give byte-identical output.
inline VerifyResult run_verify(const SweepSpec& s) {
  struct Row {
    std::string key;
    Json body;
  };
  std::vector<Row> verdicts;
  std::vector<Row> audit_failures;
  std::map<std::string, std::map<std::string, long>> audit_counts;
  long held = 0, falsified = 0, skipped = 0, audit_checks = 0, audit_false = 0, audit_undecided = 0;
  long class_undecided = 0, max_bits = 0, solutions = 0;

  auto add_verdict = [&](const std::string& cell, const criteria::TheoremVerdict& v) {
    held += v.hypothesis_holds;
    falsified += v.falsified();
    Json body = criteria::to_json(v);
    body["cell"] = cell;
    verdicts.push_back({cell + " " + v.id(), std::move(body)});
  };

  for (const auto& c : s.forms) {
    std::string cell = c.family + " " + form_key(c.form) + " h=" + c.h.get_str();
    RelatedClassification cls = classify(c.form, enumerate_box(c.form, c.h, c.box_x, c.box_y));
    class_undecided += cls.undecided;
    max_bits = std::max(max_bits, cls.max_bits);
    solutions += static_cast<long>(cls.size());
    criteria::Observed obs =
        criteria::observe(cls, "box |x|<=" + std::to_string(c.box_x) + ", 1<=y<=" + std::to_string(c.box_y));
    for (const auto& t : s.theorems) {
      if (t.id == criteria::Theorem::T1_1 || t.id == criteria::Theorem::T1_2) continue;
      if (auto v = detail::run_form_theorem(t, c, obs))
        add_verdict(cell, *v);
      else
        ++skipped;
    }
    if (s.gap_audit) {
      AuditReport rep = gap_audit(c.form, c.h, cls);
      for (const auto& chk : rep.checks) {
        ++audit_checks;
        auto& cnt = audit_counts[chk.name];
        ++cnt["checks"];
        if (!chk.decided) {
          ++audit_undecided;
          ++cnt["undecided"];
        } else if (!chk.pass) {
          ++audit_false;
          ++cnt["falsifications"];
        }
        if (!chk.decided || !chk.pass) {
          Json body = to_json(chk);
          body["cell"] = cell;
          audit_failures.push_back({cell + " " + chk.name + " " + chk.subject, std::move(body)});
        }
      }
    }
  }
  for (const auto& b : s.binomials) {
    std::string cell = b.family + " a=" + b.a.get_str() + " b=" + b.b.get_str() + " c=" + b.c.get_str() + " r=" + std::to_string(b.r);
    bool want1 = false, want2 = false;
    for (const auto& t : s.theorems) {
      want1 = want1 || t.id == criteria::Theorem::T1_1;
      want2 = want2 || t.id == criteria::Theorem::T1_2;
    }
    if (!want1 && !want2) continue;
    if (b.r < 5) {
      skipped += want1 + want2;
      continue;
    }
    criteria::Observed obs = criteria::observe_binomial(b.a, b.b, b.r, b.c, b.y_max);
    solutions += static_cast<long>(obs.solutions.size());
    if (want1) add_verdict(cell, criteria::check_T1_1(b.a, b.b, b.c, b.r, obs));
    if (want2) add_verdict(cell, criteria::check_T1_2(b.a, b.b, b.c, b.r, obs));
  }

  auto by_key = [](const Row& x, const Row& y) { return x.key < y.key; };
  std::sort(verdicts.begin(), verdicts.end(), by_key);
  std::sort(audit_failures.begin(), audit_failures.end(), by_key);

  VerifyResult out;
  if (falsified > 0 || audit_false > 0 || audit_undecided > 0)
    out.exit_code = exit_falsified;
  else if (held == 0 && audit_checks == 0)
    out.exit_code = exit_unmet;

  Json vs = Json::array(), fs = Json::array(), counts = Json::object();
  for (auto& v : verdicts) vs.push_back(std::move(v.body));
  for (auto& f : audit_failures) fs.push_back(std::move(f.body));
  for (const auto& [name, cnt] : audit_counts) {
    Json c = Json::object();
    for (const char* k : {"checks", "falsifications", "undecided"}) c[k] = cnt.count(k) ? cnt.at(k) : 0;
    counts[name] = c;
  }
  out.report = Json{{"artifact", "thuediag"},
                    {"version", kArtifactVersion},
                    {"schema_version", kSchemaVersion},
                    {"command", "verify"},
                    {"spec", s.source},
                    {"seed", s.seed},
                    {"summary",
                     {{"form_cells", s.forms.size()},
                      {"binomial_cells", s.binomials.size()},
                      {"solutions", solutions},
                      {"verdicts", verdicts.size()},
                      {"skipped", skipped},
                      {"hypotheses_held", held},
                      {"falsifications", falsified},
                      {"audit_checks", audit_checks},
                      {"audit_falsifications", audit_false},
                      {"audit_undecided", audit_undecided},
                      {"classification_undecided", class_undecided},
                      {"max_bits", max_bits},
                      {"exit_code", out.exit_code}}},
                    {"verdicts", vs},
                    {"audit", {{"counts", counts}, {"failures", fs}}}};
  return out;
}

}  // namespace thuediag::cli
