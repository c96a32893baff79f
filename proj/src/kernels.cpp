// Runtime backend dispatch for the numeric kernels.

#include "starq/kernels.hpp"

#include <atomic>

#include "kernels_impl.hpp"
#include "starq/errors.hpp"

namespace starq::kernels {

bool cpu_supports_avx2() {
#if defined(STARQ_KERNELS_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Backend pick_default() { return cpu_supports_avx2() ? Backend::kAvx2 : Backend::kScalar; }

std::atomic<Backend> g_backend{pick_default()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

bool set_backend(Backend b) {
  if (b == Backend::kAvx2 && !cpu_supports_avx2()) return false;
  g_backend.store(b, std::memory_order_relaxed);
  return true;
}

std::string_view backend_name(Backend b) {
  return b == Backend::kAvx2 ? "avx2" : "scalar";
}

void eval_series_batch(std::span<const double> coeffs,
                       std::span<const double> z_re, std::span<const double> z_im,
                       std::span<double> f_re, std::span<double> f_im,
                       std::span<double> df_re, std::span<double> df_im) {
  const std::size_t n = z_re.size();
  if (z_im.size() != n || f_re.size() != n || f_im.size() != n ||
      df_re.size() != n || df_im.size() != n) {
    throw DomainError("eval_series_batch: point spans must share one length");
  }
#if defined(STARQ_KERNELS_AVX2)
  if (active_backend() == Backend::kAvx2) {
    detail::eval_series_avx2(coeffs.data(), coeffs.size(), z_re.data(), z_im.data(), n,
                             f_re.data(), f_im.data(), df_re.data(), df_im.data());
    return;
  }
#endif
  detail::eval_series_scalar(coeffs.data(), coeffs.size(), z_re.data(), z_im.data(), n,
                             f_re.data(), f_im.data(), df_re.data(), df_im.data());
}

double dot(std::span<const double> w, std::span<const double> a) {
  if (w.size() != a.size()) throw DomainError("dot: length mismatch");
#if defined(STARQ_KERNELS_AVX2)
  if (active_backend() == Backend::kAvx2) return detail::dot_avx2(w.data(), a.data(), w.size());
#endif
  return detail::dot_scalar(w.data(), a.data(), w.size());
}

double weighted_abs_diff(std::span<const double> w, std::span<const double> a,
                         std::span<const double> b) {
  if (w.size() != a.size() || w.size() != b.size()) {
    throw DomainError("weighted_abs_diff: length mismatch");
  }
#if defined(STARQ_KERNELS_AVX2)
  if (active_backend() == Backend::kAvx2) {
    return detail::weighted_abs_diff_avx2(w.data(), a.data(), b.data(), w.size());
  }
#endif
  return detail::weighted_abs_diff_scalar(w.data(), a.data(), b.data(), w.size());
}

}  // namespace starq::kernels
