#pragma once
// Coefficient-multiplier operators: a q-hypergeometric Pochhammer ratio
// composed with a Hurwitz-Lerch style weight, plus the classical integral
// transforms acting on TFunctions.

#include <vector>

#include "starq/qseries.hpp"
#include "starq/tfunction.hpp"

namespace starq {

// Parameter set of the composed operator. c > -1 keeps every weight base
// (1+c)/(n+c) positive over the working range n >= 1.
struct OperatorParams {
  OperatorParams(QBase m_, SeriesParams series_, double s_, double c_);
  QBase m;
  SeriesParams series;
  double s;  // weight exponent
  double c;  // weight shift
};

// Materialized multiplier sequence Lambda_2..Lambda_N. Weights are validated
// to be finite and strictly positive at construction.
class OperatorWeights {
 public:
  // values holds Lambda_2..Lambda_N.
  explicit OperatorWeights(std::vector<double> values);

  // All-ones weights (the operator degenerates to the identity).
  static OperatorWeights identity(int trunc);

  int trunc() const { return static_cast<int>(values_.size()) + 1; }

  // Lambda_n for n in [2, trunc].
  double lambda(int n) const;

  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

namespace operators {

// ((1+c)/(n+c))^s for n >= 1; requires 1+c > 0 and n+c > 0.
double sa_weight(int n, double s, double c);

// Lambda_n = [prod_i (c_i,m)_{n-1} / ((m,m)_{n-1} prod_j (b_j,m)_{n-1})] *
// sa_weight(n, s, c), eagerly validated for n = 2..trunc. Throws
// DenominatorZero when a denominator factor vanishes and NonPositiveWeight
// (naming n) when a weight is nonpositive or non-finite.
OperatorWeights lambda_weights(const OperatorParams& p, int trunc);

// z - sum Lambda_n a_n z^n; requires w.trunc() >= f.trunc().
TFunction apply_operator(const OperatorWeights& w, const TFunction& f);

// Coefficient map a_n -> (q+1)/(q+n) a_n for q > -1.
TFunction bernardi_integral(const TFunction& f, double q);

// Coefficient map a_n -> (alpha/n) a_n for 0 <= alpha <= 2.
TFunction alpha_integral(const TFunction& f, double alpha);

}  // namespace operators
}  // namespace starq
