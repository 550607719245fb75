#pragma once

// Split-complex (SoA) inner loops used by the RIS cascade and the cell-free
// MR interference sums. Every routine has a scalar reference implementation;
// vector variants are picked once at startup from the CPU's capabilities and
// can be forced with RRS_SIMD=scalar|avx2|neon.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace rrs::kernels {

enum class Backend { Scalar, Avx2, Neon };

std::string_view to_string(Backend backend);

struct KernelTable {
  // sum_k a_k * b_k (no conjugation)
  void (*complex_dot)(const double* a_re, const double* a_im, const double* b_re,
                      const double* b_im, std::size_t n, double* out_re, double* out_im);
  // y_k += alpha * x_k
  void (*complex_axpy)(double alpha_re, double alpha_im, const double* x_re, const double* x_im,
                       double* y_re, double* y_im, std::size_t n);
  // acc_k += |y_k|^2
  void (*accumulate_norm_sq)(const double* y_re, const double* y_im, double* acc, std::size_t n);
};

bool backend_supported(Backend backend);
// Throws std::invalid_argument for a backend this CPU/build cannot run.
const KernelTable& table_for(Backend backend);

Backend active_backend();
void set_active_backend(Backend backend);

std::complex<double> complex_dot(std::span<const double> a_re, std::span<const double> a_im,
                                 std::span<const double> b_re, std::span<const double> b_im);
void complex_axpy(std::complex<double> alpha, std::span<const double> x_re,
                  std::span<const double> x_im, std::span<double> y_re, std::span<double> y_im);
void accumulate_norm_sq(std::span<const double> y_re, std::span<const double> y_im,
                        std::span<double> acc);

namespace detail {
const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when not compiled in
const KernelTable* neon_table();
}  // namespace detail

}  // namespace rrs::kernels
