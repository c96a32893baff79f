#pragma once
// Low-level numeric kernels behind the series evaluations and coefficient
// reductions. Each kernel has a scalar reference implementation and, on
// x86-64, an AVX2+FMA variant; the active backend is selected at runtime and
// can be forced for equivalence testing. Results are deterministic for a
// fixed backend (fixed accumulation order), but backends may differ by a few
// ulp because of FMA contraction.

#include <cstddef>
#include <span>
#include <string_view>

namespace starq::kernels {

enum class Backend { kScalar, kAvx2 };

// True when the running CPU supports the AVX2 variants.
bool cpu_supports_avx2();

// Currently active backend. Defaults to the best supported one.
Backend active_backend();

// Forces a backend; returns false (backend unchanged) when unsupported.
// Not safe to call concurrently with running kernels.
bool set_backend(Backend b);

std::string_view backend_name(Backend b);

// Evaluates f(z) = z - sum_{n=2}^{N} a_n z^n and its derivative at a batch of
// points. coeffs holds a_2..a_N densely; points are SoA (z_re/z_im). All point
// spans must share one length.
void eval_series_batch(std::span<const double> coeffs,
                       std::span<const double> z_re, std::span<const double> z_im,
                       std::span<double> f_re, std::span<double> f_im,
                       std::span<double> df_re, std::span<double> df_im);

// sum_i w[i] * a[i].
double dot(std::span<const double> w, std::span<const double> a);

// sum_i w[i] * |a[i] - b[i]|.
double weighted_abs_diff(std::span<const double> w, std::span<const double> a,
                         std::span<const double> b);

}  // namespace starq::kernels
