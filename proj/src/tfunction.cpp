#include "starq/tfunction.hpp"

#include <cmath>
#include <utility>

#include "starq/kernels.hpp"

namespace starq {

namespace {

constexpr double kWeightSumTol = 1e-12;

}  // namespace

TFunction::TFunction(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!(coeffs_[k] >= 0.0)) {
      throw NegativeCoefficient(static_cast<int>(k) + 2, coeffs_[k]);
    }
  }
}

TFunction TFunction::identity(int trunc) {
  if (trunc < 1) throw DomainError("TFunction::identity: trunc must be >= 1");
  return TFunction(std::vector<double>(static_cast<std::size_t>(trunc) - 1, 0.0));
}

double TFunction::a(int n) const {
  if (n < 2 || n > trunc()) {
    throw DomainError("TFunction::a: index " + std::to_string(n) +
                      " outside [2, " + std::to_string(trunc()) + "]");
  }
  return coeffs_[static_cast<std::size_t>(n) - 2];
}

std::complex<double> TFunction::eval(std::complex<double> z) const {
  const double zr = z.real(), zi = z.imag();
  double fr, fi, dr, di;
  kernels::eval_series_batch(coeffs_, {&zr, 1}, {&zi, 1}, {&fr, 1}, {&fi, 1},
                             {&dr, 1}, {&di, 1});
  return {fr, fi};
}

std::complex<double> TFunction::deriv(std::complex<double> z) const {
  const double zr = z.real(), zi = z.imag();
  double fr, fi, dr, di;
  kernels::eval_series_batch(coeffs_, {&zr, 1}, {&zi, 1}, {&fr, 1}, {&fi, 1},
                             {&dr, 1}, {&di, 1});
  return {dr, di};
}

TFunction hadamard(const TFunction& f, const TFunction& g) {
  const std::size_t n = std::min(f.coeffs().size(), g.coeffs().size());
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = f.coeffs()[k] * g.coeffs()[k];
  return TFunction(std::move(out));
}

TFunction convex_combination(const TFunction& f, const TFunction& g,
                             double w1, double w2) {
  if (!(w1 >= 0.0) || !(w2 >= 0.0)) {
    throw BadWeights("convex_combination: weights must be nonnegative");
  }
  if (std::fabs(w1 + w2 - 1.0) > kWeightSumTol) {
    throw BadWeights("convex_combination: weights must sum to 1 within 1e-12, got " +
                     std::to_string(w1 + w2));
  }
  const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double af = k < f.coeffs().size() ? f.coeffs()[k] : 0.0;
    const double ag = k < g.coeffs().size() ? g.coeffs()[k] : 0.0;
    out[k] = w1 * af + w2 * ag;
  }
  return TFunction(std::move(out));
}

}  // namespace starq
