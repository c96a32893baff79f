#include <doctest.h>

#include <cmath>
#include <vector>

#include "starq/classify.hpp"
#include "support.hpp"

using namespace starq;
using namespace starq::classify;

TEST_CASE("class parameter domain") {
  CHECK_NOTHROW(ClassParams(0.2, 0.8, 0.75));
  CHECK_NOTHROW(ClassParams(0.0, 1.0, 0.5));
  CHECK_THROWS_AS(ClassParams(-0.1, 0.8, 0.75), DomainError);
  CHECK_THROWS_AS(ClassParams(1.0, 1.0, 0.5), DomainError);   // mu = 1/(2 delta)
  CHECK_THROWS_AS(ClassParams(0.6, 1.0, 1.0), DomainError);   // mu above 1/2
  CHECK_THROWS_AS(ClassParams(0.2, 0.0, 0.75), DomainError);
  CHECK_THROWS_AS(ClassParams(0.2, 1.1, 0.75), DomainError);
  CHECK_THROWS_AS(ClassParams(0.2, 0.8, 0.49), DomainError);
  CHECK_THROWS_AS(ClassParams(0.2, 0.8, 1.01), DomainError);
  const ClassParams cp(0.25, 0.5, 0.8);
  CHECK(cp.rhs() == doctest::Approx(2.0 * 0.5 * 0.8 * 0.75).epsilon(1e-15));
}

TEST_CASE("coefficient multiplier at hand-checked points") {
  const ClassParams starlike(0.0, 1.0, 1.0);
  CHECK(coefficient_multiplier(2, starlike) == 4.0);
  CHECK(coefficient_multiplier(5, starlike) == 10.0);
  const ClassParams cp(0.5, 0.5, 0.5);
  // (n-1)/2 + (n - 1/2)/2 at n = 2: 0.5 + 0.75
  CHECK(coefficient_multiplier(2, cp) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK_THROWS_AS(coefficient_multiplier(1, cp), DomainError);
}

TEST_CASE("membership at the classical starlike boundary") {
  const ClassParams cp(0.0, 1.0, 1.0);
  const OperatorWeights id = OperatorWeights::identity(8);
  // sum n a_n <= 1 normalization appears here as sum 2n a_n <= 2
  const MembershipReport on = membership_test(TFunction({0.5}), id, cp);
  CHECK(on.lhs == 2.0);
  CHECK(on.rhs == 2.0);
  CHECK(on.margin == 0.0);
  CHECK(on.member);
  const MembershipReport out = membership_test(TFunction({0.51}), id, cp);
  CHECK_FALSE(out.member);
  CHECK(out.margin < 0.0);
  // identity map has empty sum
  const MembershipReport e = membership_test(TFunction(), id, cp);
  CHECK(e.lhs == 0.0);
  CHECK(e.member);
}

TEST_CASE("membership tolerance semantics") {
  const ClassParams cp(0.0, 1.0, 1.0);
  const OperatorWeights id = OperatorWeights::identity(4);
  const TFunction f({0.5 * (1.0 + 1e-13)});
  CHECK(membership_test(f, id, cp).member);              // inside default 1e-12
  CHECK_FALSE(membership_test(f, id, cp, 0.0).member);   // strict comparison
  CHECK_THROWS_AS(membership_test(f, id, cp, -1.0), DomainError);
  CHECK_THROWS_AS(membership_test(TFunction({0.1, 0.1, 0.1, 0.1}), id, cp),
                  TruncationMismatch);
}

TEST_CASE("extended-domain test matches the core inequality") {
  const OperatorWeights id = OperatorWeights::identity(4);
  // mu = 0.7 is outside the strict domain for delta = 1 but fine here
  const TFunction f({0.05, 0.02});
  const MembershipReport rep = membership_test_extended(f, id, 0.7, 1.0, 1.0);
  const double lhs = (2.0 * (2.0 - 0.7)) * 0.05 + (2.0 * (3.0 - 0.7)) * 0.02;
  CHECK(rep.lhs == doctest::Approx(lhs).epsilon(1e-14));
  CHECK(rep.rhs == doctest::Approx(2.0 * 0.3).epsilon(1e-14));
  CHECK_THROWS_AS(membership_test_extended(f, id, 1.0, 1.0, 1.0), DomainError);
  // agrees with the strict-domain entry point where both apply
  const ClassParams cp(0.3, 0.7, 0.8);
  const MembershipReport a = membership_test(f, id, cp);
  const MembershipReport b = membership_test_extended(f, id, 0.3, 0.7, 0.8);
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == b.rhs);
}

TEST_CASE("coefficient bounds: classical 1/n and sharpness") {
  const ClassParams starlike(0.0, 1.0, 1.0);
  const OperatorWeights id = OperatorWeights::identity(64);
  for (int n = 2; n <= 64; ++n) {
    CHECK(coefficient_bound(n, id, starlike) == 1.0 / static_cast<double>(n));
  }
  CHECK_THROWS_AS(coefficient_bound(65, id, starlike), DomainError);
  CHECK_THROWS_AS(coefficient_bound(1, id, starlike), DomainError);

  // extremal functions sit on the boundary for arbitrary parameters
  testsupport::Rng rng(808);
  for (int iter = 0; iter < 50; ++iter) {
    const ClassParams cp = testsupport::random_class_params(rng);
    const OperatorWeights w = testsupport::random_weights(rng, 24);
    const int n = testsupport::uniform_int(rng, 2, 24);
    const TFunction ext = extremal_function(n, w, cp);
    CHECK(ext.trunc() == n);
    const MembershipReport rep = membership_test(ext, w, cp);
    CHECK(rep.member);
    CHECK(std::fabs(rep.margin) <= 1e-12 * rep.rhs);
    // nudging the coefficient past the bound leaves the class
    std::vector<double> over = ext.coeffs();
    over.back() *= 1.0 + 1e-6;
    CHECK_FALSE(membership_test(TFunction(over), w, cp).member);
  }
}

TEST_CASE("random members pass and random non-members fail") {
  testsupport::Rng rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    const ClassParams cp = testsupport::random_class_params(rng);
    const OperatorWeights w = testsupport::random_weights(rng, 20);
    const double gamma1 = testsupport::uniform(rng, 0.0, 1.0);
    const TFunction member = testsupport::random_member(rng, w, cp, 20, gamma1);
    const MembershipReport rep = membership_test(member, w, cp);
    CHECK(rep.member);
    // leftover barycentric mass on the identity shows up as margin
    CHECK(std::fabs(rep.margin - gamma1 * rep.rhs) <= 1e-10 * rep.rhs);

    const TFunction bad = testsupport::random_nonmember(rng, w, cp, 20);
    CHECK_FALSE(membership_test(bad, w, cp).member);
  }
}

TEST_CASE("decompose and reconstruct round trip") {
  testsupport::Rng rng(4242);
  for (int iter = 0; iter < 50; ++iter) {
    const ClassParams cp = testsupport::random_class_params(rng);
    const OperatorWeights w = testsupport::random_weights(rng, 16);
    const TFunction f = testsupport::random_member(rng, w, cp, 16);
    const ExtremeDecomposition d = extreme_point_decompose(f, w, cp);
    CHECK(d.gamma1 >= -1e-12);
    double sum = d.gamma1;
    for (double g : d.gammas) {
      CHECK(g >= 0.0);
      sum += g;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    const TFunction back = reconstruct_from_extreme_points(d, w, cp);
    REQUIRE(back.trunc() == f.trunc());
    for (int n = 2; n <= f.trunc(); ++n) {
      CHECK(back.a(n) == doctest::Approx(f.a(n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("decomposition flags non-members through gamma1") {
  const ClassParams cp(0.0, 1.0, 1.0);
  const OperatorWeights id = OperatorWeights::identity(4);
  const ExtremeDecomposition d = extreme_point_decompose(TFunction({0.7}), id, cp);
  CHECK(d.gamma1 < 0.0);                        // 0.7 / 0.5 = 1.4 > 1
  CHECK(d.gammas[0] == doctest::Approx(1.4).epsilon(1e-15));
  CHECK_THROWS_AS(reconstruct_from_extreme_points(d, id, cp), BadWeights);

  // a pure extremal function decomposes to a unit weight
  const ExtremeDecomposition pure =
      extreme_point_decompose(extremal_function(3, id, cp), id, cp);
  CHECK(pure.gamma1 == 0.0);
  CHECK(pure.gammas == std::vector<double>{0.0, 1.0});
}

TEST_CASE("reconstruct validates its weights") {
  const ClassParams cp(0.1, 0.9, 0.75);
  const OperatorWeights id = OperatorWeights::identity(5);
  ExtremeDecomposition d;
  d.gamma1 = 0.5;
  d.gammas = {0.25, 0.25};
  CHECK_NOTHROW(reconstruct_from_extreme_points(d, id, cp));
  d.gammas = {0.6, -0.1};
  CHECK_THROWS_AS(reconstruct_from_extreme_points(d, id, cp), BadWeights);
  d.gammas = {0.25, 0.2};  // sums to 0.95
  CHECK_THROWS_AS(reconstruct_from_extreme_points(d, id, cp), BadWeights);
  d.gammas = {0.1, 0.1, 0.1, 0.1, 0.1};  // needs trunc 6 > weights' 5
  CHECK_THROWS_AS(reconstruct_from_extreme_points(d, id, cp), TruncationMismatch);
}

TEST_CASE("raising mu tightens every coefficient bound") {
  testsupport::Rng rng(17);
  for (int iter = 0; iter < 40; ++iter) {
    const ClassParams cp = testsupport::random_class_params(rng);
    const OperatorWeights w = testsupport::random_weights(rng, 12);
    const double upper = 1.0 / (2.0 * cp.delta);
    double lo = testsupport::uniform(rng, 0.0, upper * 0.98);
    double hi = testsupport::uniform(rng, 0.0, upper * 0.98);
    if (lo > hi) std::swap(lo, hi);
    const InclusionComparison cmp = inclusion_compare(lo, hi, w, cp);
    CHECK(cmp.holds);
    CHECK(cmp.rows.size() == 11);
    CHECK(cmp.rows.front().n == 2);
    for (const InclusionRow& row : cmp.rows) {
      CHECK(row.narrower);
      CHECK(row.bound_narrow <= row.bound_wide);
    }
  }
  const ClassParams cp(0.0, 1.0, 1.0);
  const OperatorWeights id = OperatorWeights::identity(4);
  CHECK_THROWS_AS(inclusion_compare(0.4, 0.1, id, cp), DomainError);
  CHECK_THROWS_AS(inclusion_compare(0.0, 0.5, id, cp), DomainError);
}
