#include "starq/classify.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "starq/kernels.hpp"

namespace starq {

namespace {

constexpr double kDecompositionSumTol = 1e-12;

void check_class_domain(double mu, double beta, double delta, double mu_upper) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw DomainError("class parameter beta must lie in (0, 1], got " + std::to_string(beta));
  }
  if (!(delta >= 0.5 && delta <= 1.0)) {
    throw DomainError("class parameter delta must lie in [1/2, 1], got " + std::to_string(delta));
  }
  if (!(mu >= 0.0 && mu < mu_upper)) {
    throw DomainError("class parameter mu must lie in [0, " + std::to_string(mu_upper) +
                      "), got " + std::to_string(mu));
  }
}

double multiplier_at(int n, double mu, double beta, double delta) {
  return (static_cast<double>(n) - 1.0) * (1.0 - beta) +
         2.0 * beta * delta * (static_cast<double>(n) - mu);
}

// Lambda_n * multiplier(n) for n = 2..trunc.
std::vector<double> combined_weights(const OperatorWeights& w, double mu, double beta,
                                     double delta, int trunc) {
  std::vector<double> u(static_cast<std::size_t>(trunc) - 1);
  for (int n = 2; n <= trunc; ++n) {
    u[static_cast<std::size_t>(n) - 2] = w.lambda(n) * multiplier_at(n, mu, beta, delta);
  }
  return u;
}

MembershipReport run_test(const TFunction& f, const OperatorWeights& w, double mu,
                          double beta, double delta, double tol) {
  if (tol < 0.0) throw DomainError("membership test: tol must be >= 0");
  if (w.trunc() < f.trunc()) {
    throw TruncationMismatch("membership test: weights truncated at " +
                             std::to_string(w.trunc()) + " cannot cover a function of order " +
                             std::to_string(f.trunc()));
  }
  MembershipReport rep;
  rep.rhs = 2.0 * beta * delta * (1.0 - mu);
  if (f.trunc() >= 2) {
    const std::vector<double> u = combined_weights(w, mu, beta, delta, f.trunc());
    rep.lhs = kernels::dot(u, f.coeffs());
  }
  rep.margin = rep.rhs - rep.lhs;
  rep.member = rep.lhs <= rep.rhs + tol * rep.rhs;
  return rep;
}

}  // namespace

ClassParams::ClassParams(double mu_, double beta_, double delta_)
    : mu(mu_), beta(beta_), delta(delta_) {
  check_class_domain(mu, beta, delta, 1.0 / (2.0 * delta));
}

namespace classify {

double coefficient_multiplier(int n, const ClassParams& cp) {
  if (n < 2) throw DomainError("coefficient_multiplier: n must be >= 2");
  return multiplier_at(n, cp.mu, cp.beta, cp.delta);
}

MembershipReport membership_test(const TFunction& f, const OperatorWeights& w,
                                 const ClassParams& cp, double tol) {
  return run_test(f, w, cp.mu, cp.beta, cp.delta, tol);
}

MembershipReport membership_test_extended(const TFunction& f, const OperatorWeights& w,
                                          double mu, double beta, double delta,
                                          double tol) {
  check_class_domain(mu, beta, delta, 1.0);
  return run_test(f, w, mu, beta, delta, tol);
}

double coefficient_bound(int n, const OperatorWeights& w, const ClassParams& cp) {
  return cp.rhs() / (w.lambda(n) * coefficient_multiplier(n, cp));
}

TFunction extremal_function(int n, const OperatorWeights& w, const ClassParams& cp) {
  const double bound = coefficient_bound(n, w, cp);  // validates n against w
  std::vector<double> coeffs(static_cast<std::size_t>(n) - 1, 0.0);
  coeffs.back() = bound;
  return TFunction(std::move(coeffs));
}

ExtremeDecomposition extreme_point_decompose(const TFunction& f, const OperatorWeights& w,
                                             const ClassParams& cp) {
  if (w.trunc() < f.trunc()) {
    throw TruncationMismatch("extreme_point_decompose: weights truncated at " +
                             std::to_string(w.trunc()) + " cannot cover a function of order " +
                             std::to_string(f.trunc()));
  }
  ExtremeDecomposition d;
  d.gammas.resize(f.coeffs().size());
  for (int n = 2; n <= f.trunc(); ++n) {
    d.gammas[static_cast<std::size_t>(n) - 2] = f.a(n) / coefficient_bound(n, w, cp);
  }
  d.gamma1 = 1.0 - std::accumulate(d.gammas.begin(), d.gammas.end(), 0.0);
  return d;
}

TFunction reconstruct_from_extreme_points(const ExtremeDecomposition& d,
                                          const OperatorWeights& w, const ClassParams& cp) {
  if (!(d.gamma1 >= 0.0)) {
    throw BadWeights("reconstruct_from_extreme_points: gamma1 must be >= 0, got " +
                     std::to_string(d.gamma1));
  }
  double sum = d.gamma1;
  for (double g : d.gammas) {
    if (!(g >= 0.0)) {
      throw BadWeights("reconstruct_from_extreme_points: weights must be nonnegative");
    }
    sum += g;
  }
  if (std::fabs(sum - 1.0) > kDecompositionSumTol) {
    throw BadWeights("reconstruct_from_extreme_points: weights must sum to 1 within 1e-12, got " +
                     std::to_string(sum));
  }
  const int trunc = static_cast<int>(d.gammas.size()) + 1;
  if (w.trunc() < trunc) {
    throw TruncationMismatch("reconstruct_from_extreme_points: weights too short");
  }
  std::vector<double> coeffs(d.gammas.size());
  for (int n = 2; n <= trunc; ++n) {
    coeffs[static_cast<std::size_t>(n) - 2] =
        d.gammas[static_cast<std::size_t>(n) - 2] * coefficient_bound(n, w, cp);
  }
  return TFunction(std::move(coeffs));
}

InclusionComparison inclusion_compare(double mu_lo, double mu_hi,
                                      const OperatorWeights& w, const ClassParams& cp) {
  const double upper = 1.0 / (2.0 * cp.delta);
  if (!(mu_lo >= 0.0 && mu_lo <= mu_hi && mu_hi < upper)) {
    throw DomainError("inclusion_compare: need 0 <= mu_lo <= mu_hi < 1/(2 delta)");
  }
  const ClassParams wide(mu_lo, cp.beta, cp.delta);
  const ClassParams narrow(mu_hi, cp.beta, cp.delta);
  InclusionComparison cmp;
  cmp.holds = true;
  cmp.rows.reserve(static_cast<std::size_t>(w.trunc()) - 1);
  for (int n = 2; n <= w.trunc(); ++n) {
    InclusionRow row;
    row.n = n;
    row.bound_wide = coefficient_bound(n, w, wide);
    row.bound_narrow = coefficient_bound(n, w, narrow);
    row.narrower = row.bound_narrow <= row.bound_wide;
    cmp.holds = cmp.holds && row.narrower;
    cmp.rows.push_back(row);
  }
  return cmp;
}

}  // namespace classify
}  // namespace starq
