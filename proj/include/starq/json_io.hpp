#pragma once
// JSON bindings for the serializable types.
//
//   TFunction          {"N": <int>=1>, "a": [a_2..a_N]}
//   OperatorParams     {"m":, "c_num": [...], "b_den": [...], "s":, "c":}
//   ClassParams        {"mu":, "beta":, "delta":}
//   MembershipReport   {"lhs":, "rhs":, "margin":, "member":}
//   DistortionEnvelope {"r":, "value_lo":, "value_hi":, "deriv_lo":, "deriv_hi":}
//   SampleReport       {"max_modulus":, "argmax_z": {"re":, "im":},
//                       "excluded_count":, "beta":, "satisfied":}
//
// Doubles survive a dump/parse round trip bit-exactly.

#include <json.hpp>

#include "starq/sampling.hpp"

namespace starq {

void to_json(nlohmann::json& j, const TFunction& f);
void from_json(const nlohmann::json& j, TFunction& f);

void to_json(nlohmann::json& j, const OperatorParams& p);
OperatorParams operator_params_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const ClassParams& cp);
ClassParams class_params_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const MembershipReport& r);
void from_json(const nlohmann::json& j, MembershipReport& r);

void to_json(nlohmann::json& j, const DistortionEnvelope& e);
void from_json(const nlohmann::json& j, DistortionEnvelope& e);

void to_json(nlohmann::json& j, const SampleReport& r);
void from_json(const nlohmann::json& j, SampleReport& r);

void to_json(nlohmann::json& j, const CrosscheckReport& r);

}  // namespace starq
