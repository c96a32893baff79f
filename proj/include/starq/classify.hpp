#pragma once
// Coefficient-sum membership machinery: the defining inequality of the
// operator classes, sharp per-index coefficient bounds, extremal functions
// and the extreme-point decomposition.

#include <vector>

#include "starq/operators.hpp"

namespace starq {

// Class parameters. The constructor enforces the class domain
// 0 <= mu < 1/(2 delta), 0 < beta <= 1, 1/2 <= delta <= 1.
struct ClassParams {
  ClassParams(double mu_, double beta_, double delta_);
  double mu;
  double beta;
  double delta;

  // Right-hand side of the membership inequality: 2 beta delta (1 - mu).
  double rhs() const { return 2.0 * beta * delta * (1.0 - mu); }
};

struct MembershipReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs; >= 0 for members
  bool member = false;
};

// Barycentric weights of a TFunction over the identity and the extremal
// functions. gamma1 < 0 diagnoses non-membership; it is not an error.
struct ExtremeDecomposition {
  double gamma1 = 0.0;
  std::vector<double> gammas;  // gamma_2..gamma_N
};

struct InclusionRow {
  int n = 0;
  double bound_narrow = 0.0;  // coefficient bound at the larger mu
  double bound_wide = 0.0;    // coefficient bound at the smaller mu
  bool narrower = false;      // bound_narrow <= bound_wide
};

struct InclusionComparison {
  std::vector<InclusionRow> rows;
  bool holds = false;  // all rows narrower
};

namespace classify {

// (n-1)(1-beta) + 2 beta delta (n - mu) for n >= 2.
double coefficient_multiplier(int n, const ClassParams& cp);

// Tests sum_n Lambda_n multiplier(n) a_n <= rhs with relative tolerance tol
// (member iff lhs <= rhs + tol*rhs). Requires w.trunc() >= f.trunc().
MembershipReport membership_test(const TFunction& f, const OperatorWeights& w,
                                 const ClassParams& cp, double tol = 1e-12);

// Same inequality on the extended domain 0 <= mu < 1 (beta, delta as usual).
// Convolution order bounds can exceed the strict class domain for mu; this
// entry point evaluates the test there.
MembershipReport membership_test_extended(const TFunction& f, const OperatorWeights& w,
                                          double mu, double beta, double delta,
                                          double tol = 1e-12);

// Sharp per-index bound rhs / (multiplier(n) Lambda_n) for n in [2, w.trunc()].
double coefficient_bound(int n, const OperatorWeights& w, const ClassParams& cp);

// z - coefficient_bound(n) z^n, truncation n.
TFunction extremal_function(int n, const OperatorWeights& w, const ClassParams& cp);

// gamma_n = a_n / coefficient_bound(n), gamma1 = 1 - sum gamma_n.
// Requires w.trunc() >= f.trunc().
ExtremeDecomposition extreme_point_decompose(const TFunction& f, const OperatorWeights& w,
                                             const ClassParams& cp);

// Rebuilds a_n = gamma_n * coefficient_bound(n). Weights must be nonnegative
// and sum to 1 within 1e-12 (BadWeights otherwise).
TFunction reconstruct_from_extreme_points(const ExtremeDecomposition& d,
                                          const OperatorWeights& w, const ClassParams& cp);

// Per-index evidence that the class at mu_hi sits inside the class at mu_lo,
// for 0 <= mu_lo <= mu_hi < 1/(2 delta); beta and delta come from cp.
InclusionComparison inclusion_compare(double mu_lo, double mu_hi,
                                      const OperatorWeights& w, const ClassParams& cp);

}  // namespace classify
}  // namespace starq
