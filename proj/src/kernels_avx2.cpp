// AVX2+FMA kernel variants, 4 points per vector. Remainder points fall back
// to the scalar reference. This translation unit is the only one compiled
// with -mavx2 -mfma; it must not be entered unless the CPU supports both.

#include "kernels_impl.hpp"

#if defined(STARQ_KERNELS_AVX2)

#include <immintrin.h>

#include <cmath>

namespace starq::kernels::detail {

void eval_series_avx2(const double* coeffs, std::size_t ncoeff,
                      const double* z_re, const double* z_im, std::size_t npts,
                      double* f_re, double* f_im, double* df_re, double* df_im) {
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= npts; i += 4) {
    const __m256d zr = _mm256_loadu_pd(z_re + i);
    const __m256d zi = _mm256_loadu_pd(z_im + i);
    __m256d qr = _mm256_setzero_pd(), qi = _mm256_setzero_pd();
    __m256d pr = _mm256_setzero_pd(), pi = _mm256_setzero_pd();
    for (std::size_t k = ncoeff; k-- > 0;) {
      const __m256d a = _mm256_set1_pd(coeffs[k]);
      const __m256d na = _mm256_set1_pd(coeffs[k] * static_cast<double>(k + 2));
      // q <- q*z + a, complex.
      const __m256d tqr = _mm256_fmadd_pd(qr, zr, _mm256_fnmadd_pd(qi, zi, a));
      const __m256d tqi = _mm256_fmadd_pd(qr, zi, _mm256_mul_pd(qi, zr));
      qr = tqr;
      qi = tqi;
      const __m256d tpr = _mm256_fmadd_pd(pr, zr, _mm256_fnmadd_pd(pi, zi, na));
      const __m256d tpi = _mm256_fmadd_pd(pr, zi, _mm256_mul_pd(pi, zr));
      pr = tpr;
      pi = tpi;
    }
    const __m256d z2r = _mm256_fnmadd_pd(zi, zi, _mm256_mul_pd(zr, zr));
    const __m256d zrzi = _mm256_mul_pd(zr, zi);
    const __m256d z2i = _mm256_add_pd(zrzi, zrzi);
    // f = z - z^2 q
    const __m256d vr = _mm256_fnmadd_pd(z2i, qi, _mm256_mul_pd(z2r, qr));
    const __m256d vi = _mm256_fmadd_pd(z2r, qi, _mm256_mul_pd(z2i, qr));
    _mm256_storeu_pd(f_re + i, _mm256_sub_pd(zr, vr));
    _mm256_storeu_pd(f_im + i, _mm256_sub_pd(zi, vi));
    // f' = 1 - z p
    const __m256d dr = _mm256_fnmadd_pd(zi, pi, _mm256_mul_pd(zr, pr));
    const __m256d di = _mm256_fmadd_pd(zr, pi, _mm256_mul_pd(zi, pr));
    _mm256_storeu_pd(df_re + i, _mm256_sub_pd(one, dr));
    _mm256_storeu_pd(df_im + i, _mm256_sub_pd(_mm256_setzero_pd(), di));
  }
  if (i < npts) {
    eval_series_scalar(coeffs, ncoeff, z_re + i, z_im + i, npts - i,
                       f_re + i, f_im + i, df_re + i, df_im + i);
  }
}

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double dot_avx2(const double* w, const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(a + i), acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += w[i] * a[i];
  return r;
}

double weighted_abs_diff_avx2(const double* w, const double* a, const double* b,
                              std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_andnot_pd(sign_mask, d), acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += w[i] * std::fabs(a[i] - b[i]);
  return r;
}

}  // namespace starq::kernels::detail

#endif  // STARQ_KERNELS_AVX2
