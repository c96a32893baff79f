#pragma once
// Internal backend entry points shared by the dispatch layer. Raw pointers
// keep the per-ISA translation units free of the public span-based surface.

#include <cstddef>

namespace starq::kernels::detail {

void eval_series_scalar(const double* coeffs, std::size_t ncoeff,
                        const double* z_re, const double* z_im, std::size_t npts,
                        double* f_re, double* f_im, double* df_re, double* df_im);
double dot_scalar(const double* w, const double* a, std::size_t n);
double weighted_abs_diff_scalar(const double* w, const double* a, const double* b,
                                std::size_t n);

#if defined(STARQ_KERNELS_AVX2)
void eval_series_avx2(const double* coeffs, std::size_t ncoeff,
                      const double* z_re, const double* z_im, std::size_t npts,
                      double* f_re, double* f_im, double* df_re, double* df_im);
double dot_avx2(const double* w, const double* a, std::size_t n);
double weighted_abs_diff_avx2(const double* w, const double* a, const double* b,
                              std::size_t n);
#endif

}  // namespace starq::kernels::detail
