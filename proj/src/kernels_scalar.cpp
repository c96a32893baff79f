// Scalar reference kernels. These define the semantics; the SIMD variants
// must agree with them up to FMA rounding differences.

#include <cmath>

#include "kernels_impl.hpp"

namespace starq::kernels::detail {

void eval_series_scalar(const double* coeffs, std::size_t ncoeff,
                        const double* z_re, const double* z_im, std::size_t npts,
                        double* f_re, double* f_im, double* df_re, double* df_im) {
  for (std::size_t i = 0; i < npts; ++i) {
    const double zr = z_re[i];
    const double zi = z_im[i];
    // Horner on q(z) = sum_k a_{k+2} z^k and p(z) = sum_k (k+2) a_{k+2} z^k,
    // so that f = z - z^2 q(z) and f' = 1 - z p(z).
    double qr = 0.0, qi = 0.0;
    double pr = 0.0, pi = 0.0;
    for (std::size_t k = ncoeff; k-- > 0;) {
      const double a = coeffs[k];
      const double na = a * static_cast<double>(k + 2);
      const double tqr = qr * zr - qi * zi + a;
      const double tqi = qr * zi + qi * zr;
      qr = tqr;
      qi = tqi;
      const double tpr = pr * zr - pi * zi + na;
      const double tpi = pr * zi + pi * zr;
      pr = tpr;
      pi = tpi;
    }
    const double z2r = zr * zr - zi * zi;
    const double z2i = 2.0 * zr * zi;
    f_re[i] = zr - (z2r * qr - z2i * qi);
    f_im[i] = zi - (z2r * qi + z2i * qr);
    df_re[i] = 1.0 - (zr * pr - zi * pi);
    df_im[i] = -(zr * pi + zi * pr);
  }
}

double dot_scalar(const double* w, const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * a[i];
  return acc;
}

double weighted_abs_diff_scalar(const double* w, const double* a, const double* b,
                                std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * std::fabs(a[i] - b[i]);
  return acc;
}

}  // namespace starq::kernels::detail
