#pragma once
// Growth/distortion envelopes and neighborhood geometry of the operator
// classes, plus convolution (Hadamard product) order bounds.

#include <optional>

#include "starq/classify.hpp"

namespace starq {

struct DistortionEnvelope {
  double r = 0.0;
  double value_lo = 0.0;  // bounds on |Hf(z)| at |z| = r
  double value_hi = 0.0;
  double deriv_lo = 0.0;  // bounds on |(Hf)'(z)| at |z| = r
  double deriv_hi = 0.0;
};

namespace geometry {

// Bound on sum a_n over the class: rhs / min_n (Lambda_n multiplier(n)),
// n = 2..w.trunc(). Requires w.trunc() >= 2.
double coefficient_sum_bound(const OperatorWeights& w, const ClassParams& cp);

// Envelope at radius r in (0, 1). Default form: value r -+ r^2 Lambda_2 B,
// derivative 1 -+ 2 r Lambda_2 B with B = coefficient_sum_bound. as_stated
// drops the Lambda_2 factor (bounds r -+ r^2 B, 1 -+ 2 r B); the two coincide
// for identity weights. Lower bounds clamp at 0.
DistortionEnvelope distortion_envelope(double r, const OperatorWeights& w,
                                       const ClassParams& cp, bool as_stated = false);

// sum_n n |a_n - b_n|; truncations must match (TruncationMismatch otherwise).
double neighborhood_distance(const TFunction& f, const TFunction& g);

// Radius gamma such that the whole class lies in the gamma-neighborhood of
// the identity: rhs * max_n (n / (Lambda_n multiplier(n))), n = 2..w.trunc().
double enclosing_neighborhood_radius(const OperatorWeights& w, const ClassParams& cp);

// zeta = 1 - (gamma/2) T/(T - rhs) with T = Lambda_2 multiplier(2); any
// function within distance gamma of a class member stays zeta-proximate to
// it. Requires gamma >= 0 and T > rhs (DegenerateDenominator otherwise).
double neighborhood_zeta(double gamma, const OperatorWeights& w, const ClassParams& cp);

// Per-index order bound for Hadamard products of two class members:
// [M_n^2 L_n - K (n-1)(1-beta) - 2 beta delta K n] / [M_n^2 L_n - 2 beta delta K]
// with M_n = multiplier(n), L_n = Lambda_n, K = 2 beta delta (1-mu)^2.
// Throws DegenerateDenominator (naming n) when the denominator is not positive.
double hadamard_order_term(int n, const OperatorWeights& w, const ClassParams& cp);

// min over n = 2..trunc of hadamard_order_term.
double hadamard_order_bound(const OperatorWeights& w, const ClassParams& cp, int trunc);

// Independent check: binary search on [cp.mu, 1) for the largest mu2 such
// that, for every n, the worst-case single-index pair a_n = b_n =
// coefficient_bound(n) yields a product passing the membership inequality at
// mu2. Empty when even mu2 = cp.mu fails (possible once some coefficient
// bound exceeds 1). Search tolerance tol.
std::optional<double> hadamard_order_oracle(const OperatorWeights& w, const ClassParams& cp,
                                            int trunc, double tol = 1e-10);

}  // namespace geometry
}  // namespace starq
