#include "starq/qseries.hpp"

#include <cmath>

namespace starq {

namespace {

constexpr double kGammaTailTol = 1e-12;  // settledness threshold for q_gamma
constexpr double kEarlyStopRel = 1e-16;  // term/sum ratio that ends summation

}  // namespace

QBase::QBase(double v) : value(v) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError("q base must lie in (0, 1), got " + std::to_string(v));
  }
}

SeriesParams::SeriesParams(std::vector<double> numerator_, std::vector<double> denominator_)
    : numerator(std::move(numerator_)), denominator(std::move(denominator_)) {
  if (numerator.size() != denominator.size() + 1) {
    throw DomainError("series parameters need t = r + 1 (got t = " +
                      std::to_string(numerator.size()) + ", r = " +
                      std::to_string(denominator.size()) + ")");
  }
}

namespace qseries {

double q_pochhammer(double a, QBase m, int n) {
  if (n < 0) throw DomainError("q_pochhammer: n must be >= 0");
  double prod = 1.0;
  double mk = 1.0;  // m^k
  for (int k = 0; k < n; ++k) {
    prod *= 1.0 - a * mk;
    mk *= m.value;
  }
  return prod;
}

double q_gamma(double y, QBase m, int tail_terms) {
  if (!(y > 0.0)) throw DomainError("q_gamma: y must be > 0");
  if (tail_terms < 1) throw DomainError("q_gamma: tail_terms must be >= 1");
  const double q = m.value;
  // Tail of log prod_{k>=T} (1 - x q^k) is bounded by ~ x q^T / (1-q), x <= 1.
  const double tail = std::pow(q, tail_terms) / (1.0 - q);
  if (!(tail < kGammaTailTol)) {
    throw NonConvergence("q_gamma: products not settled after " +
                         std::to_string(tail_terms) + " factors (tail ~ " +
                         std::to_string(tail) + ")");
  }
  const double qy = std::pow(q, y);
  double num = 1.0, den = 1.0;
  double qk = 1.0;  // q^k
  for (int k = 0; k < tail_terms; ++k) {
    num *= 1.0 - q * qk;
    den *= 1.0 - qy * qk;
    qk *= q;
  }
  return num * std::pow(1.0 - q, 1.0 - y) / den;
}

std::complex<double> t_psi_r(const SeriesParams& params, QBase m,
                             std::complex<double> z, int trunc) {
  if (trunc < 0) throw DomainError("t_psi_r: trunc must be >= 0");
  if (!(std::abs(z) < 1.0)) throw DomainError("t_psi_r: |z| must be < 1");
  std::complex<double> sum = 1.0;  // n = 0 term
  std::complex<double> term = 1.0;
  double mn = 1.0;  // m^n
  for (int n = 0; n < trunc; ++n) {
    double num = 1.0;
    for (double ci : params.numerator) num *= 1.0 - ci * mn;
    double den = 1.0 - m.value * mn;  // (m,m) factor, never 0 for m in (0,1)
    for (double bj : params.denominator) {
      const double factor = 1.0 - bj * mn;
      if (factor == 0.0) throw DenominatorZero(n + 1);
      den *= factor;
    }
    if (den == 0.0) throw DenominatorZero(n + 1);
    term *= z * (num / den);
    sum += term;
    if (std::abs(term) < kEarlyStopRel * std::abs(sum)) break;
    mn *= m.value;
  }
  return sum;
}

std::complex<double> hurwitz_lerch_partial(std::complex<double> z, double s,
                                           double c, int trunc) {
  if (!(c > 0.0)) throw DomainError("hurwitz_lerch_partial: c must be > 0");
  if (trunc < 0) throw DomainError("hurwitz_lerch_partial: trunc must be >= 0");
  std::complex<double> sum = 0.0;
  std::complex<double> zn = 1.0;  // z^n
  for (int n = 0; n <= trunc; ++n) {
    sum += zn / std::pow(static_cast<double>(n) + c, s);
    zn *= z;
  }
  return sum;
}

}  // namespace qseries
}  // namespace starq
