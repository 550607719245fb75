#include "rrs/kernels/complex_kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace rrs::kernels::detail {

namespace {

void complex_dot(const double* a_re, const double* a_im, const double* b_re, const double* b_im,
                 std::size_t n, double* out_re, double* out_im) {
  float64x2_t acc_re = vdupq_n_f64(0.0);
  float64x2_t acc_im = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t ar = vld1q_f64(a_re + k);
    const float64x2_t ai = vld1q_f64(a_im + k);
    const float64x2_t br = vld1q_f64(b_re + k);
    const float64x2_t bi = vld1q_f64(b_im + k);
    acc_re = vfmaq_f64(acc_re, ar, br);
    acc_re = vfmsq_f64(acc_re, ai, bi);
    acc_im = vfmaq_f64(acc_im, ar, bi);
    acc_im = vfmaq_f64(acc_im, ai, br);
  }
  double re = vaddvq_f64(acc_re);
  double im = vaddvq_f64(acc_im);
  for (; k < n; ++k) {
    re += a_re[k] * b_re[k] - a_im[k] * b_im[k];
    im += a_re[k] * b_im[k] + a_im[k] * b_re[k];
  }
  *out_re = re;
  *out_im = im;
}

void complex_axpy(double alpha_re, double alpha_im, const double* x_re, const double* x_im,
                  double* y_re, double* y_im, std::size_t n) {
  const float64x2_t wr = vdupq_n_f64(alpha_re);
  const float64x2_t wi = vdupq_n_f64(alpha_im);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t xr = vld1q_f64(x_re + k);
    const float64x2_t xi = vld1q_f64(x_im + k);
    float64x2_t yr = vld1q_f64(y_re + k);
    float64x2_t yi = vld1q_f64(y_im + k);
    yr = vfmaq_f64(yr, wr, xr);
    yr = vfmsq_f64(yr, wi, xi);
    yi = vfmaq_f64(yi, wr, xi);
    yi = vfmaq_f64(yi, wi, xr);
    vst1q_f64(y_re + k, yr);
    vst1q_f64(y_im + k, yi);
  }
  for (; k < n; ++k) {
    y_re[k] += alpha_re * x_re[k] - alpha_im * x_im[k];
    y_im[k] += alpha_re * x_im[k] + alpha_im * x_re[k];
  }
}

void accumulate_norm_sq(const double* y_re, const double* y_im, double* acc, std::size_t n) {
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t r = vld1q_f64(y_re + k);
    const float64x2_t i = vld1q_f64(y_im + k);
    float64x2_t a = vld1q_f64(acc + k);
    a = vfmaq_f64(a, r, r);
    a = vfmaq_f64(a, i, i);
    vst1q_f64(acc + k, a);
  }
  for (; k < n; ++k) acc[k] += y_re[k] * y_re[k] + y_im[k] * y_im[k];
}

constexpr KernelTable kNeon{complex_dot, complex_axpy, accumulate_norm_sq};

}  // namespace

const KernelTable* neon_table() { return &kNeon; }

}  // namespace rrs::kernels::detail

#else

namespace rrs::kernels::detail {
const KernelTable* neon_table() { return nullptr; }
}  // namespace rrs::kernels::detail

#endif
