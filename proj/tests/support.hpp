#pragma once
// Shared randomized generators for the property suites. Everything is seeded
// explicitly so failures reproduce.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "starq/classify.hpp"
#include "starq/operators.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline starq::ClassParams random_class_params(Rng& rng) {
  const double beta = uniform(rng, 0.05, 1.0);
  const double delta = uniform(rng, 0.5, 1.0);
  const double mu = uniform(rng, 0.0, 0.98 / (2.0 * delta));
  return {mu, beta, delta};
}

// Parameter ranges keep every weight positive and finite: numerator and
// denominator entries below 1 so no q-Pochhammer factor vanishes.
inline starq::OperatorParams random_operator_params(Rng& rng) {
  const double m = uniform(rng, 0.05, 0.95);
  const int r = uniform_int(rng, 0, 2);
  std::vector<double> cnum, bden;
  for (int i = 0; i <= r; ++i) cnum.push_back(uniform(rng, -1.5, 0.9));
  for (int j = 0; j < r; ++j) bden.push_back(uniform(rng, -1.5, 0.9));
  const double s = uniform(rng, -1.5, 1.0);
  const double c = uniform(rng, 0.0, 4.0);
  return {starq::QBase(m), starq::SeriesParams(cnum, bden), s, c};
}

inline starq::OperatorWeights random_weights(Rng& rng, int trunc) {
  return starq::operators::lambda_weights(random_operator_params(rng), trunc);
}

// Member by construction: convex combination of extremal functions with
// barycentric weight gamma1 >= 0 left on the identity. margin = gamma1 * rhs.
inline starq::TFunction random_member(Rng& rng, const starq::OperatorWeights& w,
                                      const starq::ClassParams& cp, int max_trunc,
                                      double gamma1 = -1.0) {
  const int trunc = uniform_int(rng, 2, std::min(max_trunc, w.trunc()));
  std::vector<double> g(static_cast<std::size_t>(trunc) - 1);
  double sum = 0.0;
  for (double& v : g) {
    v = uniform(rng, 0.0, 1.0);
    sum += v;
  }
  if (gamma1 < 0.0) gamma1 = uniform(rng, 0.0, 1.0);
  for (double& v : g) v *= (1.0 - gamma1) / sum;
  std::vector<double> coeffs(g.size());
  for (int n = 2; n <= trunc; ++n) {
    coeffs[static_cast<std::size_t>(n) - 2] =
        g[static_cast<std::size_t>(n) - 2] * starq::classify::coefficient_bound(n, w, cp);
  }
  return starq::TFunction(std::move(coeffs));
}

// Non-member with prescribed relative violation: coefficients of a random
// member direction scaled until lhs = rhs * (1 + rel).
inline starq::TFunction random_nonmember(Rng& rng, const starq::OperatorWeights& w,
                                         const starq::ClassParams& cp, int max_trunc,
                                         double rel_lo = 0.1, double rel_hi = 0.6) {
  const starq::TFunction base = random_member(rng, w, cp, max_trunc, 0.0);
  const auto rep = starq::classify::membership_test(base, w, cp);
  const double rel = uniform(rng, rel_lo, rel_hi);
  const double scale = rep.rhs * (1.0 + rel) / rep.lhs;
  std::vector<double> coeffs = base.coeffs();
  for (double& a : coeffs) a *= scale;
  return starq::TFunction(std::move(coeffs));
}

}  // namespace testsupport
