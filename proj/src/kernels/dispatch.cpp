#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rrs/kernels/complex_kernels.hpp"

namespace rrs::kernels {

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool backend_supported(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
      return detail::avx2_table() != nullptr && __builtin_cpu_supports("avx2") &&
             __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::Neon:
      return detail::neon_table() != nullptr;
  }
  return false;
}

const KernelTable& table_for(Backend backend) {
  if (!backend_supported(backend)) {
    throw std::invalid_argument("SIMD backend not available: " + std::string(to_string(backend)));
  }
  switch (backend) {
    case Backend::Avx2: return *detail::avx2_table();
    case Backend::Neon: return *detail::neon_table();
    case Backend::Scalar: break;
  }
  return detail::scalar_table();
}

namespace {

Backend detect_backend() {
  if (const char* forced = std::getenv("RRS_SIMD")) {
    const std::string name(forced);
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
      if (name == to_string(b) && backend_supported(b)) return b;
    }
  }
  if (backend_supported(Backend::Avx2)) return Backend::Avx2;
  if (backend_supported(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

std::atomic<const KernelTable*> g_table{nullptr};
std::atomic<Backend> g_backend{Backend::Scalar};

const KernelTable& active_table() {
  const KernelTable* t = g_table.load(std::memory_order_acquire);
  if (t == nullptr) {
    const Backend b = detect_backend();
    g_backend.store(b, std::memory_order_relaxed);
    t = &table_for(b);
    g_table.store(t, std::memory_order_release);
  }
  return *t;
}

void check_same(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("complex kernel operand length mismatch");
}

}  // namespace

Backend active_backend() {
  active_table();
  return g_backend.load(std::memory_order_relaxed);
}

void set_active_backend(Backend backend) {
  const KernelTable& t = table_for(backend);
  g_backend.store(backend, std::memory_order_relaxed);
  g_table.store(&t, std::memory_order_release);
}

std::complex<double> complex_dot(std::span<const double> a_re, std::span<const double> a_im,
                                 std::span<const double> b_re, std::span<const double> b_im) {
  check_same(a_re.size(), a_im.size());
  check_same(a_re.size(), b_re.size());
  check_same(a_re.size(), b_im.size());
  double re = 0.0;
  double im = 0.0;
  active_table().complex_dot(a_re.data(), a_im.data(), b_re.data(), b_im.data(), a_re.size(), &re,
                             &im);
  return {re, im};
}

void complex_axpy(std::complex<double> alpha, std::span<const double> x_re,
                  std::span<const double> x_im, std::span<double> y_re, std::span<double> y_im) {
  check_same(x_re.size(), x_im.size());
  check_same(x_re.size(), y_re.size());
  check_same(x_re.size(), y_im.size());
  active_table().complex_axpy(alpha.real(), alpha.imag(), x_re.data(), x_im.data(), y_re.data(),
                              y_im.data(), x_re.size());
}

void accumulate_norm_sq(std::span<const double> y_re, std::span<const double> y_im,
                        std::span<double> acc) {
  check_same(y_re.size(), y_im.size());
  check_same(y_re.size(), acc.size());
  active_table().accumulate_norm_sq(y_re.data(), y_im.data(), acc.data(), y_re.size());
}

}  // namespace rrs::kernels
