#include "starq/operators.hpp"

#include <cmath>
#include <utility>

namespace starq {

OperatorParams::OperatorParams(QBase m_, SeriesParams series_, double s_, double c_)
    : m(m_), series(std::move(series_)), s(s_), c(c_) {
  if (!(1.0 + c > 0.0)) {
    throw DomainError("operator parameter c must satisfy 1 + c > 0, got " +
                      std::to_string(c));
  }
}

OperatorWeights::OperatorWeights(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double v = values_[k];
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw NonPositiveWeight(static_cast<int>(k) + 2, v);
    }
  }
}

OperatorWeights OperatorWeights::identity(int trunc) {
  if (trunc < 1) throw DomainError("OperatorWeights::identity: trunc must be >= 1");
  return OperatorWeights(std::vector<double>(static_cast<std::size_t>(trunc) - 1, 1.0));
}

double OperatorWeights::lambda(int n) const {
  if (n < 2 || n > trunc()) {
    throw DomainError("OperatorWeights::lambda: index " + std::to_string(n) +
                      " outside [2, " + std::to_string(trunc()) + "]");
  }
  return values_[static_cast<std::size_t>(n) - 2];
}

namespace operators {

double sa_weight(int n, double s, double c) {
  if (n < 1) throw DomainError("sa_weight: n must be >= 1");
  const double num = 1.0 + c;
  const double den = static_cast<double>(n) + c;
  if (!(num > 0.0) || !(den > 0.0)) {
    throw DomainError("sa_weight: requires 1 + c > 0 and n + c > 0");
  }
  return std::pow(num / den, s);
}

OperatorWeights lambda_weights(const OperatorParams& p, int trunc) {
  if (trunc < 1) throw DomainError("lambda_weights: trunc must be >= 1");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(trunc > 1 ? trunc - 1 : 0));
  const double m = p.m.value;
  double num = 1.0;  // prod_i (c_i, m)_{n-1}
  double den = 1.0;  // (m, m)_{n-1} prod_j (b_j, m)_{n-1}
  double mk = 1.0;   // m^(n-2)
  for (int n = 2; n <= trunc; ++n) {
    for (double ci : p.series.numerator) num *= 1.0 - ci * mk;
    den *= 1.0 - m * mk;
    for (double bj : p.series.denominator) {
      const double factor = 1.0 - bj * mk;
      if (factor == 0.0) throw DenominatorZero(n);
      den *= factor;
    }
    if (den == 0.0) throw DenominatorZero(n);
    const double lam = num / den * sa_weight(n, p.s, p.c);
    if (!(lam > 0.0) || !std::isfinite(lam)) throw NonPositiveWeight(n, lam);
    values.push_back(lam);
    mk *= m;
  }
  return OperatorWeights(std::move(values));
}

TFunction apply_operator(const OperatorWeights& w, const TFunction& f) {
  if (w.trunc() < f.trunc()) {
    throw TruncationMismatch("apply_operator: weights truncated at " +
                             std::to_string(w.trunc()) + " cannot cover a function of order " +
                             std::to_string(f.trunc()));
  }
  std::vector<double> out(f.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = w.values()[k] * f.coeffs()[k];
  return TFunction(std::move(out));
}

TFunction bernardi_integral(const TFunction& f, double q) {
  if (!(q > -1.0)) throw DomainError("bernardi_integral: q must be > -1");
  std::vector<double> out(f.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double n = static_cast<double>(k) + 2.0;
    out[k] = f.coeffs()[k] * (q + 1.0) / (q + n);
  }
  return TFunction(std::move(out));
}

TFunction alpha_integral(const TFunction& f, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 2.0)) {
    throw DomainError("alpha_integral: alpha must lie in [0, 2]");
  }
  std::vector<double> out(f.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = f.coeffs()[k] * alpha / (static_cast<double>(k) + 2.0);
  }
  return TFunction(std::move(out));
}

}  // namespace operators
}  // namespace starq
