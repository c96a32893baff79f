#pragma once
// Normalized analytic functions with negative coefficients:
// f(z) = z - sum_{n=2}^{N} a_n z^n, a_n >= 0. Coefficients are stored densely
// from index 2; N is the truncation order. N = 1 is the identity e(z) = z.

#include <complex>
#include <vector>

#include "starq/errors.hpp"

namespace starq {

class TFunction {
 public:
  // Identity e(z) = z.
  TFunction() = default;

  // coeffs holds a_2..a_N in order. Throws NegativeCoefficient (with the
  // offending index n) when any a_n < 0.
  explicit TFunction(std::vector<double> coeffs);

  // e(z) = z carried at truncation order trunc (explicit zeros).
  static TFunction identity(int trunc);

  int trunc() const { return static_cast<int>(coeffs_.size()) + 1; }

  // a_n for n in [2, trunc].
  double a(int n) const;

  // a_2..a_N.
  const std::vector<double>& coeffs() const { return coeffs_; }

  std::complex<double> eval(std::complex<double> z) const;
  std::complex<double> deriv(std::complex<double> z) const;

  bool operator==(const TFunction& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<double> coeffs_;
};

// Coefficientwise product z - sum a_n b_n z^n, truncated at min(trunc_f, trunc_g).
TFunction hadamard(const TFunction& f, const TFunction& g);

// w1 f + w2 g with w1, w2 >= 0 and w1 + w2 = 1 within 1e-12 (BadWeights
// otherwise). Truncation is the max of the inputs; the shorter operand's
// missing coefficients are exact zeros.
TFunction convex_combination(const TFunction& f, const TFunction& g,
                             double w1, double w2);

}  // namespace starq
