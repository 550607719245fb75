// Built with -mavx2 -mfma; only entered after a runtime CPU check.

#include "rrs/kernels/complex_kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace rrs::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

void complex_dot(const double* a_re, const double* a_im, const double* b_re, const double* b_im,
                 std::size_t n, double* out_re, double* out_im) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d ar = _mm256_loadu_pd(a_re + k);
    const __m256d ai = _mm256_loadu_pd(a_im + k);
    const __m256d br = _mm256_loadu_pd(b_re + k);
    const __m256d bi = _mm256_loadu_pd(b_im + k);
    acc_re = _mm256_fmadd_pd(ar, br, acc_re);
    acc_re = _mm256_fnmadd_pd(ai, bi, acc_re);
    acc_im = _mm256_fmadd_pd(ar, bi, acc_im);
    acc_im = _mm256_fmadd_pd(ai, br, acc_im);
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; k < n; ++k) {
    re += a_re[k] * b_re[k] - a_im[k] * b_im[k];
    im += a_re[k] * b_im[k] + a_im[k] * b_re[k];
  }
  *out_re = re;
  *out_im = im;
}

void complex_axpy(double alpha_re, double alpha_im, const double* x_re, const double* x_im,
                  double* y_re, double* y_im, std::size_t n) {
  const __m256d wr = _mm256_set1_pd(alpha_re);
  const __m256d wi = _mm256_set1_pd(alpha_im);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d xr = _mm256_loadu_pd(x_re + k);
    const __m256d xi = _mm256_loadu_pd(x_im + k);
    __m256d yr = _mm256_loadu_pd(y_re + k);
    __m256d yi = _mm256_loadu_pd(y_im + k);
    yr = _mm256_fmadd_pd(wr, xr, yr);
    yr = _mm256_fnmadd_pd(wi, xi, yr);
    yi = _mm256_fmadd_pd(wr, xi, yi);
    yi = _mm256_fmadd_pd(wi, xr, yi);
    _mm256_storeu_pd(y_re + k, yr);
    _mm256_storeu_pd(y_im + k, yi);
  }
  for (; k < n; ++k) {
    y_re[k] += alpha_re * x_re[k] - alpha_im * x_im[k];
    y_im[k] += alpha_re * x_im[k] + alpha_im * x_re[k];
  }
}

void accumulate_norm_sq(const double* y_re, const double* y_im, double* acc, std::size_t n) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d r = _mm256_loadu_pd(y_re + k);
    const __m256d i = _mm256_loadu_pd(y_im + k);
    __m256d a = _mm256_loadu_pd(acc + k);
    a = _mm256_fmadd_pd(r, r, a);
    a = _mm256_fmadd_pd(i, i, a);
    _mm256_storeu_pd(acc + k, a);
  }
  for (; k < n; ++k) acc[k] += y_re[k] * y_re[k] + y_im[k] * y_im[k];
}

constexpr KernelTable kAvx2{complex_dot, complex_axpy, accumulate_norm_sq};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

}  // namespace rrs::kernels::detail

#else

namespace rrs::kernels::detail {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace rrs::kernels::detail

#endif
