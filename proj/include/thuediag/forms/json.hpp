#pragma once

#include <json.hpp>

#include <string>

#include "thuediag/forms/diag_form.hpp"

namespace thuediag {

using Json = nlohmann::ordered_json;

inline Json quad_json(const QuadElem& x) { return x.str(); }

inline Json optional_quad_json(const std::optional<QuadElem>& x) { return x ? Json(x->str()) : Json(nullptr); }

inline Json to_json(const DiagForm& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"r", f.r()},
              {"coeffs", coeffs},
              {"A", f.A().get_str()},
              {"B", f.B().get_str()},
              {"C", f.C().get_str()},
              {"D", f.D().get_str()},
              {"chi_r", to_string(f.chi_r())},
              {"alpha1", optional_quad_json(f.alpha1())},
              {"beta1", optional_quad_json(f.beta1())},
              {"gamma1", optional_quad_json(f.gamma1())},
              {"delta1", optional_quad_json(f.delta1())},
              {"provenance", f.provenance()}};
}

namespace detail {

inline std::string scalar_text(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParameterError(where + ": expected an integer or rational string");
}

inline Integer json_integer(const Json& j, const std::string& where) { return parse_integer(scalar_text(j, where)); }

/// A rational scalar, or a pair [a, b] meaning a + b sqrt(d).
inline QuadElem json_quad(const Json& j, const Integer& d, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParameterError(where + ": quadratic element must be [a, b]");
    return QuadElem(parse_rational(scalar_text(j[0], where)), parse_rational(scalar_text(j[1], where)), d);
  }
  return QuadElem(parse_rational(scalar_text(j, where)), d);
}

inline int json_degree(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParameterError(where + ": degree must be an integer");
  return j.get<int>();
}

}  // namespace detail

/// Form specifications:
///   {"binomial": [a, b, r]}                      a x^r - b y^r
///   {"diagonal": [a, b, r]}                      same, signs free
///   {"xi": {"d": D, "r": r, "alpha1": .., "beta1": .., "gamma1": .., "delta1": ..}}
///   {"linear": {"d": D, "r": r, "u": [scale, px, py], "v": [scale, px, py]}}
///   {"gl2": {"form": <spec>, "matrix": [[a, b], [c, d]]}}
inline DiagForm form_from_json(const Json& spec) {
  if (!spec.is_object() || spec.size() != 1) throw ParameterError("form spec must be an object with exactly one key");
  const auto& [kind, body] = *spec.items().begin();
  if (kind == "binomial" || kind == "diagonal") {
    if (!body.is_array() || body.size() != 3) throw ParameterError(kind + ": expected [a, b, r]");
    Integer a = detail::json_integer(body[0], kind), b = detail::json_integer(body[1], kind);
    int r = detail::json_degree(body[2], kind);
    return kind == "binomial" ? make_binomial(a, b, r) : make_diagonal(a, b, r);
  }
  if (kind == "xi" || kind == "linear") {
    if (!body.is_object() || !body.contains("r")) throw ParameterError(kind + ": missing r");
    Integer d = body.contains("d") ? detail::json_integer(body["d"], kind + ".d") : Integer(1);
    int r = detail::json_degree(body["r"], kind + ".r");
    if (kind == "xi") {
      for (const char* k : {"alpha1", "beta1", "gamma1", "delta1"})
        if (!body.contains(k)) throw ParameterError(std::string("xi: missing ") + k);
      return make_from_xi(detail::json_quad(body["alpha1"], d, "alpha1"), detail::json_quad(body["beta1"], d, "beta1"),
                          detail::json_quad(body["gamma1"], d, "gamma1"), detail::json_quad(body["delta1"], d, "delta1"), r,
                          "xi-data");
    }
    auto lp = [&](const char* key) {
      if (!body.contains(key) || !body[key].is_array() || body[key].size() != 3)
        throw ParameterError(std::string("linear: ") + key + " must be [scale, px, py]");
      const Json& a = body[key];
      return LinearPower{detail::json_quad(a[0], d, key), detail::json_quad(a[1], d, key), detail::json_quad(a[2], d, key)};
    };
    return DiagForm(r, lp("u"), lp("v"), "linear-data");
  }
  if (kind == "gl2") {
    if (!body.contains("form") || !body.contains("matrix")) throw ParameterError("gl2: needs form and matrix");
    const Json& m = body["matrix"];
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 || !m[1].is_array() || m[1].size() != 2)
      throw ParameterError("gl2: matrix must be 2x2");
    Matrix2 mat;
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) mat[i][k] = detail::json_integer(m[i][k], "gl2.matrix");
    return gl2_action(form_from_json(body["form"]), mat);
  }
  throw ParameterError("unknown form kind '" + kind + "'");
}

}  // namespace thuediag
