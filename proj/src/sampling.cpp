#include "starq/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "starq/kernels.hpp"

namespace starq {

SampleGrid::SampleGrid(std::vector<double> radii_, int angles_, double guard_)
    : radii(std::move(radii_)), angles(angles_), guard(guard_) {
  if (radii.empty()) throw DomainError("SampleGrid: radii must be nonempty");
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) {
      throw DomainError("SampleGrid: radii must lie in (0, 1)");
    }
  }
  if (angles < 4) throw DomainError("SampleGrid: need at least 4 angles");
  if (!(guard > 0.0)) throw DomainError("SampleGrid: guard must be > 0");
}

SampleGrid SampleGrid::defaults() {
  return SampleGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99}, 64, 1e-9);
}

double SampleGrid::max_radius() const {
  return *std::max_element(radii.begin(), radii.end());
}

namespace sampling {

namespace {

constexpr double kMembershipTol = 1e-12;   // tolerance of the coefficient test
constexpr double kNecessityRelMargin = 0.1;  // enforce the probe beyond this

// SoA evaluation of Hf and (Hf)' over the full grid, radius-major order.
struct GridEval {
  std::vector<double> f_re, f_im, df_re, df_im, z_re, z_im;
};

GridEval evaluate_grid(const TFunction& hf, const SampleGrid& grid) {
  const std::size_t npts = grid.radii.size() * static_cast<std::size_t>(grid.angles);
  GridEval ev;
  ev.z_re.resize(npts);
  ev.z_im.resize(npts);
  ev.f_re.resize(npts);
  ev.f_im.resize(npts);
  ev.df_re.resize(npts);
  ev.df_im.resize(npts);
  std::size_t i = 0;
  for (double r : grid.radii) {
    for (int k = 0; k < grid.angles; ++k, ++i) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(grid.angles);
      ev.z_re[i] = r * std::cos(theta);
      ev.z_im[i] = r * std::sin(theta);
    }
  }
  kernels::eval_series_batch(hf.coeffs(), ev.z_re, ev.z_im, ev.f_re, ev.f_im,
                             ev.df_re, ev.df_im);
  return ev;
}

}  // namespace

std::optional<std::complex<double>> condition_expression(std::complex<double> hf,
                                                         std::complex<double> hf_deriv,
                                                         std::complex<double> z,
                                                         const ClassParams& cp,
                                                         double guard) {
  if (!(guard > 0.0)) throw DomainError("condition_expression: guard must be > 0");
  if (std::abs(hf) <= guard) return std::nullopt;
  const std::complex<double> w = z * hf_deriv / hf;
  const std::complex<double> num = w - 1.0;
  const std::complex<double> den = 2.0 * cp.delta * (w - cp.mu) - num;
  if (std::abs(den) <= guard) return std::nullopt;
  return num / den;
}

SampleReport sample_disk(const TFunction& f, const OperatorWeights& w,
                         const ClassParams& cp, const SampleGrid& grid) {
  const TFunction hf = operators::apply_operator(w, f);
  const GridEval ev = evaluate_grid(hf, grid);
  SampleReport rep;
  rep.beta = cp.beta;
  rep.max_modulus = -1.0;
  // Fixed scan order (radius-major, then angle) makes the argmax and its
  // tie-breaking deterministic: strict improvement keeps the first maximizer.
  for (std::size_t i = 0; i < ev.z_re.size(); ++i) {
    const std::complex<double> z{ev.z_re[i], ev.z_im[i]};
    const auto expr = condition_expression({ev.f_re[i], ev.f_im[i]},
                                           {ev.df_re[i], ev.df_im[i]}, z, cp, grid.guard);
    if (!expr) {
      ++rep.excluded_count;
      continue;
    }
    const double mod = std::abs(*expr);
    if (mod > rep.max_modulus) {
      rep.max_modulus = mod;
      rep.argmax_z = z;
    }
  }
  if (rep.max_modulus < 0.0) {
    throw AllPointsExcluded("sample_disk: the guard excluded every grid point");
  }
  rep.satisfied = rep.max_modulus < cp.beta;
  return rep;
}

CrosscheckReport crosscheck(const TFunction& f, const OperatorWeights& w,
                            const ClassParams& cp, const SampleGrid& grid, double tol) {
  if (!(tol >= 0.0)) throw DomainError("crosscheck: tol must be >= 0");
  CrosscheckReport rep;
  rep.membership = classify::membership_test(f, w, cp, kMembershipTol);
  rep.sample = sample_disk(f, w, cp, grid);
  if (rep.membership.member) {
    // Sufficiency is a hard assertion: members never violate the condition.
    if (rep.sample.max_modulus < cp.beta + tol) {
      rep.verdict = Verdict::kConsistent;
      rep.note = "member: sampled condition satisfied";
    } else {
      rep.verdict = Verdict::kInconsistent;
      rep.note = "member: sampled modulus exceeds beta + tol";
    }
    return rep;
  }
  const double rel = -rep.membership.margin / rep.membership.rhs;
  const double rmax = grid.max_radius();
  rep.slack = std::clamp(50.0 * std::min(rel, 1.0), 5.0, 50.0) * (1.0 - rmax);
  if (rel < kNecessityRelMargin) {
    // Too close to the boundary for interior sampling to certify; advisory.
    rep.verdict = Verdict::kConsistent;
    rep.note = "non-member: violation below the enforcement threshold, necessity skipped";
    return rep;
  }
  rep.necessity_enforced = true;
  if (rep.sample.max_modulus >= cp.beta) {
    // Interior sampling already exhibits the violation (this happens when Hf
    // vanishes inside the disk and the condition blows up there).
    rep.verdict = Verdict::kConsistent;
    rep.note = "non-member: sampled modulus already exhibits the violation";
    return rep;
  }
  const TFunction hf = operators::apply_operator(w, f);
  const std::complex<double> z{rmax, 0.0};
  const auto expr = condition_expression(hf.eval(z), hf.deriv(z), z, cp, grid.guard);
  // A guard trip at the probe means the expression blew up there; that is a
  // violation exhibited, not a failure.
  rep.boundary_modulus = expr ? std::abs(*expr) : std::numeric_limits<double>::infinity();
  if (rep.boundary_modulus > cp.beta - rep.slack) {
    rep.verdict = Verdict::kConsistent;
    rep.note = "non-member: boundary probe exhibits the violation";
  } else {
    rep.verdict = Verdict::kInconsistent;
    rep.note = "non-member: boundary probe stayed below beta - slack";
  }
  return rep;
}

double max_ratio_deviation(const TFunction& f, const TFunction& g, const SampleGrid& grid) {
  const GridEval fe = evaluate_grid(f, grid);
  const GridEval ge = evaluate_grid(g, grid);
  double best = -1.0;
  for (std::size_t i = 0; i < fe.z_re.size(); ++i) {
    const std::complex<double> fv{fe.f_re[i], fe.f_im[i]};
    const std::complex<double> gv{ge.f_re[i], ge.f_im[i]};
    if (std::abs(gv) <= grid.guard) continue;
    best = std::max(best, std::abs(fv / gv - 1.0));
  }
  if (best < 0.0) {
    throw AllPointsExcluded("max_ratio_deviation: the guard excluded every grid point");
  }
  return best;
}

}  // namespace sampling
}  // namespace starq
