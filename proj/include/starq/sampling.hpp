#pragma once
// Disk-sampling checks of the defining analytic condition
// |(w-1) / (2 delta (w - mu) - (w - 1))| < beta, w = z (Hf)'(z) / Hf(z),
// and the theorem-vs-sampling crosscheck.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "starq/geometry.hpp"

namespace starq {

struct SampleGrid {
  // radii each in (0, 1); angles >= 4 equally spaced points per circle;
  // guard > 0 excludes near-singular sample points.
  SampleGrid(std::vector<double> radii_, int angles_, double guard_);

  // radii {0.1..0.9 step 0.1, 0.95, 0.99}, 64 angles, guard 1e-9.
  static SampleGrid defaults();

  double max_radius() const;

  std::vector<double> radii;
  int angles;
  double guard;
};

struct SampleReport {
  double max_modulus = 0.0;
  std::complex<double> argmax_z;
  int excluded_count = 0;
  double beta = 0.0;
  bool satisfied = false;  // max_modulus < beta
};

enum class Verdict { kConsistent, kInconsistent };

struct CrosscheckReport {
  Verdict verdict = Verdict::kConsistent;
  MembershipReport membership;
  SampleReport sample;
  // Necessity evidence is only demanded for relative margins <= -0.1 (weaker
  // violations cannot be certified by interior sampling). boundary_modulus
  // holds the probe value at z = max_radius on the positive real axis; it
  // stays 0 when the interior sample already exhibited the violation.
  bool necessity_enforced = false;
  double boundary_modulus = 0.0;
  double slack = 0.0;
  std::string note;
};

namespace sampling {

// Condition expression at one point. Empty when a guard trips:
// |Hf| <= guard or |denominator| <= guard. Not an error.
std::optional<std::complex<double>> condition_expression(std::complex<double> hf,
                                                         std::complex<double> hf_deriv,
                                                         std::complex<double> z,
                                                         const ClassParams& cp,
                                                         double guard = 1e-9);

// Max of |expression| over the grid for Hf = apply_operator(w, f). The
// reduction is deterministic: ties keep the lexicographically first
// (radius index, angle index). Throws AllPointsExcluded when the guard
// removes every point.
SampleReport sample_disk(const TFunction& f, const OperatorWeights& w,
                         const ClassParams& cp, const SampleGrid& grid = SampleGrid::defaults());

// Membership test vs disk sampling. Members must satisfy
// max_modulus < beta + tol (hard). Non-members with relative margin <= -0.1
// must exhibit the violation one of two ways: the sampled max already
// reaches beta, or |expression| > beta - slack at z = max_radius on the real
// axis, slack = clamp(50 min(|margin|/rhs, 1), 5, 50) * (1 - max_radius).
CrosscheckReport crosscheck(const TFunction& f, const OperatorWeights& w,
                            const ClassParams& cp,
                            const SampleGrid& grid = SampleGrid::defaults(),
                            double tol = 1e-9);

// Max over the grid of |f(z)/g(z) - 1|, excluding points with |g(z)| <= guard.
// Throws AllPointsExcluded when nothing survives.
double max_ratio_deviation(const TFunction& f, const TFunction& g, const SampleGrid& grid);

}  // namespace sampling
}  // namespace starq
