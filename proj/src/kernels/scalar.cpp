#include "rrs/kernels/complex_kernels.hpp"

namespace rrs::kernels::detail {

namespace {

void complex_dot(const double* a_re, const double* a_im, const double* b_re, const double* b_im,
                 std::size_t n, double* out_re, double* out_im) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re += a_re[k] * b_re[k] - a_im[k] * b_im[k];
    im += a_re[k] * b_im[k] + a_im[k] * b_re[k];
  }
  *out_re = re;
  *out_im = im;
}

void complex_axpy(double alpha_re, double alpha_im, const double* x_re, const double* x_im,
                  double* y_re, double* y_im, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    y_re[k] += alpha_re * x_re[k] - alpha_im * x_im[k];
    y_im[k] += alpha_re * x_im[k] + alpha_im * x_re[k];
  }
}

void accumulate_norm_sq(const double* y_re, const double* y_im, double* acc, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) acc[k] += y_re[k] * y_re[k] + y_im[k] * y_im[k];
}

constexpr KernelTable kScalar{complex_dot, complex_axpy, accumulate_norm_sq};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace rrs::kernels::detail
