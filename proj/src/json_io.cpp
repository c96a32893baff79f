#include "starq/json_io.hpp"

#include <cmath>

namespace starq {

namespace {

using nlohmann::json;

// Rejects absent keys with a uniform message before nlohmann's lookup.
const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw DomainError(std::string("missing JSON field \"") + key + "\"");
  return *it;
}

}  // namespace

void to_json(nlohmann::json& j, const TFunction& f) {
  j = json{{"N", f.trunc()}, {"a", f.coeffs()}};
}

void from_json(const nlohmann::json& j, TFunction& f) {
  const int n = field(j, "N").get<int>();
  auto coeffs = field(j, "a").get<std::vector<double>>();
  if (n < 1) throw DomainError("TFunction: N must be >= 1");
  if (coeffs.size() != static_cast<std::size_t>(n) - 1) {
    throw DomainError("TFunction: field \"a\" must hold exactly N - 1 coefficients");
  }
  f = TFunction(std::move(coeffs));
}

void to_json(nlohmann::json& j, const OperatorParams& p) {
  j = json{{"m", p.m.value},
           {"c_num", p.series.numerator},
           {"b_den", p.series.denominator},
           {"s", p.s},
           {"c", p.c}};
}

OperatorParams operator_params_from_json(const nlohmann::json& j) {
  return OperatorParams(QBase(field(j, "m").get<double>()),
                        SeriesParams(field(j, "c_num").get<std::vector<double>>(),
                                     field(j, "b_den").get<std::vector<double>>()),
                        field(j, "s").get<double>(), field(j, "c").get<double>());
}

void to_json(nlohmann::json& j, const ClassParams& cp) {
  j = json{{"mu", cp.mu}, {"beta", cp.beta}, {"delta", cp.delta}};
}

ClassParams class_params_from_json(const nlohmann::json& j) {
  return ClassParams(field(j, "mu").get<double>(), field(j, "beta").get<double>(),
                     field(j, "delta").get<double>());
}

void to_json(nlohmann::json& j, const MembershipReport& r) {
  j = json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"margin", r.margin}, {"member", r.member}};
}

void from_json(const nlohmann::json& j, MembershipReport& r) {
  r.lhs = field(j, "lhs").get<double>();
  r.rhs = field(j, "rhs").get<double>();
  r.margin = field(j, "margin").get<double>();
  r.member = field(j, "member").get<bool>();
}

void to_json(nlohmann::json& j, const DistortionEnvelope& e) {
  j = json{{"r", e.r},
           {"value_lo", e.value_lo},
           {"value_hi", e.value_hi},
           {"deriv_lo", e.deriv_lo},
           {"deriv_hi", e.deriv_hi}};
}

void from_json(const nlohmann::json& j, DistortionEnvelope& e) {
  e.r = field(j, "r").get<double>();
  e.value_lo = field(j, "value_lo").get<double>();
  e.value_hi = field(j, "value_hi").get<double>();
  e.deriv_lo = field(j, "deriv_lo").get<double>();
  e.deriv_hi = field(j, "deriv_hi").get<double>();
}

void to_json(nlohmann::json& j, const SampleReport& r) {
  j = json{{"max_modulus", r.max_modulus},
           {"argmax_z", {{"re", r.argmax_z.real()}, {"im", r.argmax_z.imag()}}},
           {"excluded_count", r.excluded_count},
           {"beta", r.beta},
           {"satisfied", r.satisfied}};
}

void from_json(const nlohmann::json& j, SampleReport& r) {
  r.max_modulus = field(j, "max_modulus").get<double>();
  const json& z = field(j, "argmax_z");
  r.argmax_z = {field(z, "re").get<double>(), field(z, "im").get<double>()};
  r.excluded_count = field(j, "excluded_count").get<int>();
  r.beta = field(j, "beta").get<double>();
  r.satisfied = field(j, "satisfied").get<bool>();
}

void to_json(nlohmann::json& j, const CrosscheckReport& r) {
  j = json{{"verdict", r.verdict == Verdict::kConsistent ? "CONSISTENT" : "INCONSISTENT"},
           {"membership", r.membership},
           {"sample", r.sample},
           {"necessity_enforced", r.necessity_enforced},
           {"slack", r.slack},
           {"note", r.note}};
  if (r.necessity_enforced) {
    if (std::isfinite(r.boundary_modulus)) {
      j["boundary_modulus"] = r.boundary_modulus;
    } else {
      j["boundary_modulus"] = "inf";
    }
  }
}

}  // namespace starq
