#include "starq/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "starq/kernels.hpp"

namespace starq {
namespace geometry {

namespace {

double combined(int n, const OperatorWeights& w, const ClassParams& cp) {
  return w.lambda(n) * classify::coefficient_multiplier(n, cp);
}

void require_quadratic_range(const OperatorWeights& w, const char* who) {
  if (w.trunc() < 2) {
    throw DomainError(std::string(who) + ": weights must cover n = 2");
  }
}

}  // namespace

double coefficient_sum_bound(const OperatorWeights& w, const ClassParams& cp) {
  require_quadratic_range(w, "coefficient_sum_bound");
  double min_u = combined(2, w, cp);
  for (int n = 3; n <= w.trunc(); ++n) min_u = std::min(min_u, combined(n, w, cp));
  return cp.rhs() / min_u;
}

DistortionEnvelope distortion_envelope(double r, const OperatorWeights& w,
                                       const ClassParams& cp, bool as_stated) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("distortion_envelope: r must lie in (0, 1)");
  }
  require_quadratic_range(w, "distortion_envelope");
  const double b = coefficient_sum_bound(w, cp);
  const double scale = as_stated ? b : w.lambda(2) * b;
  DistortionEnvelope env;
  env.r = r;
  env.value_lo = std::max(0.0, r - r * r * scale);
  env.value_hi = r + r * r * scale;
  env.deriv_lo = std::max(0.0, 1.0 - 2.0 * r * scale);
  env.deriv_hi = 1.0 + 2.0 * r * scale;
  return env;
}

double neighborhood_distance(const TFunction& f, const TFunction& g) {
  if (f.trunc() != g.trunc()) {
    throw TruncationMismatch("neighborhood_distance: truncations differ (" +
                             std::to_string(f.trunc()) + " vs " +
                             std::to_string(g.trunc()) + ")");
  }
  std::vector<double> n_weights(f.coeffs().size());
  for (std::size_t k = 0; k < n_weights.size(); ++k) {
    n_weights[k] = static_cast<double>(k) + 2.0;
  }
  return kernels::weighted_abs_diff(n_weights, f.coeffs(), g.coeffs());
}

double enclosing_neighborhood_radius(const OperatorWeights& w, const ClassParams& cp) {
  require_quadratic_range(w, "enclosing_neighborhood_radius");
  double max_ratio = 2.0 / combined(2, w, cp);
  for (int n = 3; n <= w.trunc(); ++n) {
    max_ratio = std::max(max_ratio, static_cast<double>(n) / combined(n, w, cp));
  }
  return cp.rhs() * max_ratio;
}

double neighborhood_zeta(double gamma, const OperatorWeights& w, const ClassParams& cp) {
  if (!(gamma >= 0.0)) throw DomainError("neighborhood_zeta: gamma must be >= 0");
  require_quadratic_range(w, "neighborhood_zeta");
  const double t = combined(2, w, cp);
  const double den = t - cp.rhs();
  if (!(den > 0.0)) {
    throw DegenerateDenominator(2, "neighborhood_zeta: requires Lambda_2 multiplier(2) > rhs");
  }
  return 1.0 - (gamma / 2.0) * (t / den);
}

double hadamard_order_term(int n, const OperatorWeights& w, const ClassParams& cp) {
  if (n < 2 || n > w.trunc()) {
    throw DomainError("hadamard_order_term: n outside [2, " + std::to_string(w.trunc()) + "]");
  }
  const double beta = cp.beta, delta = cp.delta, mu = cp.mu;
  const double tb = 2.0 * beta * delta;
  const double k = tb * (1.0 - mu) * (1.0 - mu);
  const double m_n = classify::coefficient_multiplier(n, cp);
  const double p = m_n * m_n * w.lambda(n);
  const double den = p - tb * k;
  if (!(den > 0.0)) {
    throw DegenerateDenominator(
        n, "hadamard_order_term: denominator not positive at n = " + std::to_string(n));
  }
  const double num = p - k * (static_cast<double>(n) - 1.0) * (1.0 - beta) -
                     tb * k * static_cast<double>(n);
  return num / den;
}

double hadamard_order_bound(const OperatorWeights& w, const ClassParams& cp, int trunc) {
  if (trunc < 2 || trunc > w.trunc()) {
    throw DomainError("hadamard_order_bound: trunc outside [2, " +
                      std::to_string(w.trunc()) + "]");
  }
  double best = hadamard_order_term(2, w, cp);
  for (int n = 3; n <= trunc; ++n) best = std::min(best, hadamard_order_term(n, w, cp));
  return best;
}

std::optional<double> hadamard_order_oracle(const OperatorWeights& w, const ClassParams& cp,
                                            int trunc, double tol) {
  if (trunc < 2 || trunc > w.trunc()) {
    throw DomainError("hadamard_order_oracle: trunc outside [2, " +
                      std::to_string(w.trunc()) + "]");
  }
  if (!(tol > 0.0)) throw DomainError("hadamard_order_oracle: tol must be > 0");
  // Worst-case single-index products a_n b_n = coefficient_bound(n)^2.
  std::vector<double> ab(static_cast<std::size_t>(trunc) - 1);
  for (int n = 2; n <= trunc; ++n) {
    const double bound = classify::coefficient_bound(n, w, cp);
    ab[static_cast<std::size_t>(n) - 2] = bound * bound;
  }
  const auto passes = [&](double mu2) {
    const double rhs2 = 2.0 * cp.beta * cp.delta * (1.0 - mu2);
    for (int n = 2; n <= trunc; ++n) {
      const double mult2 = (static_cast<double>(n) - 1.0) * (1.0 - cp.beta) +
                           2.0 * cp.beta * cp.delta * (static_cast<double>(n) - mu2);
      const double lhs = w.lambda(n) * mult2 * ab[static_cast<std::size_t>(n) - 2];
      if (lhs > rhs2 * (1.0 + 1e-15)) return false;
    }
    return true;
  };
  // The membership inequality stays well-posed for mu2 < 1; the admissible
  // set is downward closed whenever the closed-form denominators are positive.
  double lo = cp.mu, hi = 1.0;
  if (!passes(lo)) return std::nullopt;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (passes(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace geometry
}  // namespace starq
