#include <doctest.h>

#include <json.hpp>

#include "starq/json_io.hpp"
#include "support.hpp"

using namespace starq;
using nlohmann::json;

TEST_CASE("TFunction round trip is bit exact") {
  testsupport::Rng rng(12);
  for (int iter = 0; iter < 20; ++iter) {
    const int trunc = testsupport::uniform_int(rng, 1, 24);
    std::vector<double> c(static_cast<std::size_t>(trunc - 1));
    for (double& v : c) v = testsupport::uniform(rng, 0.0, 1.0) / 3.0;  // not dyadic
    const TFunction f(c);
    const json j = f;
    const std::string text = j.dump();
    const TFunction back = json::parse(text).get<TFunction>();
    CHECK(back == f);  // coefficient vectors compare bitwise
  }
}

TEST_CASE("TFunction schema validation") {
  CHECK(json::parse(R"({"N": 1, "a": []})").get<TFunction>().trunc() == 1);
  CHECK(json::parse(R"({"N": 3, "a": [0.5, 0.25]})").get<TFunction>().a(3) == 0.25);
  CHECK_THROWS_AS(json::parse(R"({"N": 3, "a": [0.5]})").get<TFunction>(), DomainError);
  CHECK_THROWS_AS(json::parse(R"({"N": 0, "a": []})").get<TFunction>(), DomainError);
  CHECK_THROWS_AS(json::parse(R"({"a": [0.5]})").get<TFunction>(), DomainError);
  CHECK_THROWS_AS(json::parse(R"({"N": 2})").get<TFunction>(), DomainError);
  CHECK_THROWS_AS(json::parse(R"({"N": 3, "a": [0.5, -0.25]})").get<TFunction>(),
                  NegativeCoefficient);
}

TEST_CASE("OperatorParams round trip") {
  const OperatorParams p(QBase(0.35), SeriesParams({0.2, -0.7}, {0.5}), -1.25, 2.5);
  const json j = p;
  const OperatorParams back = operator_params_from_json(json::parse(j.dump()));
  CHECK(back.m.value == p.m.value);
  CHECK(back.series.numerator == p.series.numerator);
  CHECK(back.series.denominator == p.series.denominator);
  CHECK(back.s == p.s);
  CHECK(back.c == p.c);
  CHECK_THROWS_AS(operator_params_from_json(json::parse(R"({"m": 0.5})")), DomainError);
  // domain checks still fire on parsed values
  CHECK_THROWS_AS(operator_params_from_json(json::parse(
                      R"({"m": 1.5, "c_num": [0.1], "b_den": [], "s": 0, "c": 1})")),
                  DomainError);
}

TEST_CASE("ClassParams round trip and validation") {
  const ClassParams cp(0.3, 0.85, 0.7);
  const json j = cp;
  const ClassParams back = class_params_from_json(json::parse(j.dump()));
  CHECK(back.mu == cp.mu);
  CHECK(back.beta == cp.beta);
  CHECK(back.delta == cp.delta);
  CHECK_THROWS_AS(
      class_params_from_json(json::parse(R"({"mu": 0.9, "beta": 1, "delta": 1})")),
      DomainError);
  CHECK_THROWS_AS(class_params_from_json(json::parse(R"({"mu": 0.1, "beta": 1})")),
                  DomainError);
}

TEST_CASE("report serialization") {
  MembershipReport mr;
  mr.lhs = 1.75;
  mr.rhs = 2.0;
  mr.margin = 0.25;
  mr.member = true;
  json j = mr;
  CHECK(j["lhs"] == 1.75);
  CHECK(j["member"] == true);
  MembershipReport mback = j.get<MembershipReport>();
  CHECK(mback.lhs == mr.lhs);
  CHECK(mback.member == mr.member);

  DistortionEnvelope env{0.5, 0.375, 0.625, 0.5, 1.5};
  j = env;
  const DistortionEnvelope eback = j.get<DistortionEnvelope>();
  CHECK(eback.r == env.r);
  CHECK(eback.value_lo == env.value_lo);
  CHECK(eback.deriv_hi == env.deriv_hi);

  SampleReport sr;
  sr.max_modulus = 0.25;
  sr.argmax_z = {0.9, -0.3};
  sr.excluded_count = 2;
  sr.beta = 0.5;
  sr.satisfied = true;
  j = sr;
  CHECK(j["argmax_z"]["re"] == 0.9);
  CHECK(j["argmax_z"]["im"] == -0.3);
  const SampleReport sback = j.get<SampleReport>();
  CHECK(sback.argmax_z == sr.argmax_z);
  CHECK(sback.excluded_count == 2);
  CHECK(sback.satisfied);
}

TEST_CASE("crosscheck report serialization") {
  const ClassParams cp(0.0, 1.0, 1.0);
  const OperatorWeights id = OperatorWeights::identity(4);
  const CrosscheckReport member = sampling::crosscheck(TFunction({0.25}), id, cp);
  json j = member;
  CHECK(j["verdict"] == "CONSISTENT");
  CHECK(j["membership"]["member"] == true);
  CHECK(j.contains("sample"));
  CHECK(j.contains("note"));
  CHECK_FALSE(j.contains("boundary_modulus"));  // no necessity evidence needed

  const CrosscheckReport bad = sampling::crosscheck(TFunction({0.5 * 1.3}), id, cp);
  j = bad;
  CHECK(j["verdict"] == "CONSISTENT");
  CHECK(j["membership"]["member"] == false);
  CHECK(j["necessity_enforced"] == true);
  CHECK(j.contains("boundary_modulus"));
  CHECK(j["slack"].get<double>() > 0.0);
}

TEST_CASE("doubles survive dump and parse bit-exactly") {
  testsupport::Rng rng(10101);
  for (int iter = 0; iter < 200; ++iter) {
    const double x = testsupport::uniform(rng, -1.0, 1.0) * std::pow(10.0, iter % 17 - 8);
    const json j = x;
    CHECK(json::parse(j.dump()).get<double>() == x);
  }
}
