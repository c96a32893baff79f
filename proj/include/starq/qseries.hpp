#pragma once
// q-series building blocks: q-Pochhammer products, the q-analogue of the
// Gamma function, truncated basic hypergeometric sums and Hurwitz-Lerch
// partial sums. All parameters are real; series arguments may be complex.

#include <complex>
#include <vector>

#include "starq/errors.hpp"

namespace starq {

// Base of the q-calculus; the value is constrained to (0, 1).
struct QBase {
  explicit QBase(double v);
  double value;
};

// Numerator parameters c_1..c_t and denominator parameters b_1..b_r of a
// basic hypergeometric series. t = r + 1 is enforced at construction.
struct SeriesParams {
  SeriesParams(std::vector<double> numerator_, std::vector<double> denominator_);
  std::vector<double> numerator;
  std::vector<double> denominator;
};

namespace qseries {

// (a, m)_n = prod_{k=0}^{n-1} (1 - a m^k); empty product (= 1) for n = 0.
// The power m^k is accumulated by repeated multiplication, so the recurrence
// (a,m)_{n+1} = (a,m)_n * (1 - a m^n) is exact when m^n is built the same way.
double q_pochhammer(double a, QBase m, int n);

// Gamma analogue (m,m)_inf (1-m)^(1-y) / (m^y,m)_inf for y > 0, with both
// infinite products truncated after tail_terms factors. Throws NonConvergence
// when the truncation tail estimate m^tail_terms / (1-m) exceeds 1e-12.
double q_gamma(double y, QBase m, int tail_terms = 200);

// Truncated series sum_{n=0}^{trunc} [prod_i (c_i,m)_n /
// ((m,m)_n prod_j (b_j,m)_n)] z^n for |z| < 1. Terms are built by the ratio
// recurrence; summation stops early once |term| < 1e-16 |sum|.
std::complex<double> t_psi_r(const SeriesParams& params, QBase m,
                             std::complex<double> z, int trunc = 64);

// Partial sum sum_{n=0}^{trunc} z^n / (n + c)^s with c > 0.
std::complex<double> hurwitz_lerch_partial(std::complex<double> z, double s,
                                           double c, int trunc = 64);

}  // namespace qseries
}  // namespace starq
