#include <gtest/gtest.h>

#include <vector>

#include "rrs/kernels/complex_kernels.hpp"
#include "rrs/simcore/rng.hpp"

using namespace rrs;
using namespace rrs::kernels;

namespace {

std::vector<double> random_vec(sim::RngStream& r, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = r.uniform(-1.0, 1.0);
  return v;
}

std::vector<Backend> vector_backends() {
  std::vector<Backend> out;
  for (auto b : {Backend::Avx2, Backend::Neon}) {
    if (backend_supported(b)) out.push_back(b);
  }
  return out;
}

}  // namespace

TEST(Kernels, ScalarDotMatchesStdComplex) {
  sim::RngStream r(1);
  const std::size_t n = 37;
  auto ar = random_vec(r, n), ai = random_vec(r, n), br = random_vec(r, n), bi = random_vec(r, n);
  std::complex<double> ref{0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) ref += std::complex<double>(ar[k], ai[k]) * std::complex<double>(br[k], bi[k]);
  double re = 0.0, im = 0.0;
  detail::scalar_table().complex_dot(ar.data(), ai.data(), br.data(), bi.data(), n, &re, &im);
  EXPECT_NEAR(re, ref.real(), 1e-12);
  EXPECT_NEAR(im, ref.imag(), 1e-12);
}

TEST(Kernels, VectorBackendsMatchScalar) {
  const auto& scalar = detail::scalar_table();
  const auto backends = vector_backends();
  if (backends.empty()) GTEST_SKIP() << "no vector backend on this CPU";
  sim::RngStream r(2);
  for (auto b : backends) {
    const auto& t = table_for(b);
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 31u, 76u, 257u}) {
      auto ar = random_vec(r, n), ai = random_vec(r, n), br = random_vec(r, n), bi = random_vec(r, n);
      double sr = 0, si = 0, vr = 0, vi = 0;
      scalar.complex_dot(ar.data(), ai.data(), br.data(), bi.data(), n, &sr, &si);
      t.complex_dot(ar.data(), ai.data(), br.data(), bi.data(), n, &vr, &vi);
      EXPECT_NEAR(vr, sr, 1e-12 * (1.0 + static_cast<double>(n))) << to_string(b) << " n=" << n;
      EXPECT_NEAR(vi, si, 1e-12 * (1.0 + static_cast<double>(n))) << to_string(b) << " n=" << n;

      auto yr1 = random_vec(r, n), yi1 = random_vec(r, n);
      auto yr2 = yr1, yi2 = yi1;
      scalar.complex_axpy(0.3, -1.7, ar.data(), ai.data(), yr1.data(), yi1.data(), n);
      t.complex_axpy(0.3, -1.7, ar.data(), ai.data(), yr2.data(), yi2.data(), n);
      for (std::size_t k = 0; k < n; ++k) {
        EXPECT_NEAR(yr2[k], yr1[k], 1e-14);
        EXPECT_NEAR(yi2[k], yi1[k], 1e-14);
      }

      auto acc1 = random_vec(r, n);
      auto acc2 = acc1;
      scalar.accumulate_norm_sq(br.data(), bi.data(), acc1.data(), n);
      t.accumulate_norm_sq(br.data(), bi.data(), acc2.data(), n);
      for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(acc2[k], acc1[k], 1e-14);
    }
  }
}

TEST(Kernels, ActiveBackendSwitchKeepsResults) {
  sim::RngStream r(3);
  const std::size_t n = 76;
  auto ar = random_vec(r, n), ai = random_vec(r, n), br = random_vec(r, n), bi = random_vec(r, n);
  const auto before = active_backend();
  set_active_backend(Backend::Scalar);
  const auto s = complex_dot(ar, ai, br, bi);
  for (auto b : vector_backends()) {
    set_active_backend(b);
    const auto v = complex_dot(ar, ai, br, bi);
    EXPECT_NEAR(std::abs(v - s), 0.0, 1e-12);
  }
  set_active_backend(before);
}

TEST(Kernels, UnsupportedBackendThrows) {
  for (auto b : {Backend::Avx2, Backend::Neon}) {
    if (!backend_supported(b)) EXPECT_THROW(table_for(b), std::invalid_argument);
  }
}
