#include <gtest/gtest.h>

#include <complex>

#include "fixtures.hpp"
#include "rrs/cfmimo/cfmimo.hpp"

using namespace rrs;
using namespace rrs::cfmimo;
using rrs::test::code_of;

namespace {

GainTable table(std::vector<double> gains_db, std::size_t M, std::size_t K) {
  GainTable t;
  for (std::size_t m = 0; m < M; ++m) t.ap_ids.push_back(static_cast<std::uint32_t>(m + 1));
  for (std::size_t k = 0; k < K; ++k) t.ue_ids.push_back(static_cast<std::uint32_t>(100 + k));
  t.gain_db = std::move(gains_db);
  t.ap_live.assign(M, true);
  return t;
}

ClusterAssignment full_assignment(std::size_t M, std::size_t K, std::vector<std::vector<std::size_t>> serving) {
  ClusterAssignment a;
  for (std::size_t m = 0; m < M; ++m) a.ap_ids.push_back(static_cast<std::uint32_t>(m + 1));
  for (std::size_t k = 0; k < K; ++k) a.ue_ids.push_back(static_cast<std::uint32_t>(100 + k));
  a.serving = std::move(serving);
  return a;
}

// Direct evaluation of the MR downlink SINR expression, term by term.
std::vector<double> oracle_sinr(const ClusterAssignment& a, const FadingRealization& f,
                                const std::vector<double>& p, double noise) {
  const std::size_t M = a.ap_ids.size(), K = a.ue_ids.size();
  std::vector<double> load(M, 0.0);
  for (const auto& s : a.serving) for (auto m : s) load[m] += 1.0;
  std::vector<double> out(K, 0.0);
  for (std::size_t k = 0; k < K; ++k) {
    if (a.serving[k].empty()) continue;
    std::complex<double> num = 0.0;
    for (auto m : a.serving[k]) num += std::sqrt(p[m] / load[m]) * std::abs(f.at(m, k));
    double interf = 0.0;
    for (std::size_t i = 0; i < K; ++i) {
      if (i == k) continue;
      std::complex<double> s = 0.0;
      for (auto m : a.serving[i]) {
        const auto hmi = f.at(m, i);
        s += std::sqrt(p[m] / load[m]) * std::conj(hmi) * f.at(m, k) / std::abs(hmi);
      }
      interf += std::norm(s);
    }
    out[k] = std::norm(num) / (interf + noise);
  }
  return out;
}

}  // namespace

TEST(Cluster, SingleApServesEveryone) {
  const auto a = cluster(table({-90, -95, -100}, 1, 3), 3);
  for (const auto& s : a.serving) EXPECT_EQ(s, (std::vector<std::size_t>{0}));
}

TEST(Cluster, TopTwoByGainAndTies) {
  const auto a = cluster(table({-80, -90, -100}, 3, 1), 2);
  EXPECT_EQ(a.serving_ids(0), (std::vector<std::uint32_t>{1, 2}));
  const auto tie = cluster(table({-90, -80, -80}, 3, 1), 2);
  EXPECT_EQ(tie.serving_ids(0), (std::vector<std::uint32_t>{2, 3}));
  const auto tie1 = cluster(table({-80, -80, -80}, 3, 1), 1);
  EXPECT_EQ(tie1.serving_ids(0), (std::vector<std::uint32_t>{1}));
}

TEST(Cluster, FailedApExcludedAndErrors) {
  auto t = table({-60, -90, -100}, 3, 1);
  t.ap_live[0] = false;
  EXPECT_EQ(cluster(t, 1).serving_ids(0), (std::vector<std::uint32_t>{2}));
  t.ap_live.assign(3, false);
  EXPECT_EQ(code_of([&] { cluster(t, 1); }), ErrorCode::NoActiveAps);
  EXPECT_EQ(code_of([&] { cluster(table({-60}, 1, 1), 0); }), ErrorCode::ValidationError);
}

TEST(Sinr, SingleLinkClosedForm) {
  auto f = FadingRealization::zeros(1, 1);
  f.set(0, 0, {3e-5, -4e-5});
  const auto s = sinr(full_assignment(1, 1, {{0}}), f, std::vector<double>{200.0}, 1e-9);
  EXPECT_NEAR(s[0], 200.0 * 25e-10 / 1e-9, 1e-9);
}

TEST(Sinr, TwoByTwoMatchesOracle) {
  auto f = FadingRealization::zeros(2, 2);
  f.set(0, 0, {1.0, 0.5});
  f.set(0, 1, {-0.3, 0.8});
  f.set(1, 0, {0.2, -0.7});
  f.set(1, 1, {0.9, 0.1});
  const auto a = full_assignment(2, 2, {{0, 1}, {1}});
  const std::vector<double> p{2.0, 1.0};
  const auto got = sinr(a, f, p, 0.05);
  const auto want = oracle_sinr(a, f, p, 0.05);
  for (int k = 0; k < 2; ++k) EXPECT_NEAR(got[k], want[k], 1e-12 * want[k]);
}

TEST(Sinr, RandomInstancesMatchOracle) {
  sim::RngStream r(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t M = 1 + r.index(6), K = 1 + r.index(8);
    auto f = FadingRealization::zeros(M, K);
    for (std::size_t m = 0; m < M; ++m)
      for (std::size_t k = 0; k < K; ++k) f.set(m, k, r.complex_normal());
    std::vector<std::vector<std::size_t>> serving(K);
    for (auto& s : serving)
      for (std::size_t m = 0; m < M; ++m)
        if (r.uniform() < 0.5) s.push_back(m);
    std::vector<double> p(M);
    for (auto& x : p) x = r.uniform(0.1, 5.0);
    const auto a = full_assignment(M, K, serving);
    const auto got = sinr(a, f, p, 0.1);
    const auto want = oracle_sinr(a, f, p, 0.1);
    for (std::size_t k = 0; k < K; ++k) EXPECT_NEAR(got[k], want[k], 1e-10 * (1 + want[k]));
  }
}

TEST(Sinr, EmptyClusterZeroAndDimensionCheck) {
  auto f = FadingRealization::zeros(1, 2);
  f.set(0, 0, {1, 0});
  f.set(0, 1, {1, 0});
  const auto s = sinr(full_assignment(1, 2, {{0}, {}}), f, std::vector<double>{1.0}, 1.0);
  EXPECT_EQ(s[1], 0.0);
  EXPECT_EQ(code_of([&] { sinr(full_assignment(1, 2, {{0}, {}}), f, std::vector<double>{1.0, 2.0}, 1.0); }),
            ErrorCode::DimensionMismatch);
}

TEST(Sinr, AddingApToClusterNeverLowersNumeratorShare) {
  // Same fading, same loads elsewhere: with a lone UE, a larger cluster can only help.
  sim::RngStream r(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = FadingRealization::zeros(3, 1);
    for (std::size_t m = 0; m < 3; ++m) f.set(m, 0, r.complex_normal());
    const std::vector<double> p{1.0, 1.0, 1.0};
    const double one = sinr(full_assignment(3, 1, {{0}}), f, p, 0.1)[0];
    const double two = sinr(full_assignment(3, 1, {{0, 1}}), f, p, 0.1)[0];
    EXPECT_GE(two, one);
  }
}

TEST(Sinr, RemovingAnInterfererWithOwnApsHelps) {
  sim::RngStream r(6);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = FadingRealization::zeros(3, 3);
    for (std::size_t m = 0; m < 3; ++m)
      for (std::size_t k = 0; k < 3; ++k) f.set(m, k, r.complex_normal());
    const std::vector<double> p{1.0, 1.0, 1.0};
    const auto with = sinr(full_assignment(3, 3, {{0}, {1}, {2}}), f, p, 0.1);
    const auto without = sinr(full_assignment(3, 3, {{0}, {1}, {}}), f, p, 0.1);
    EXPECT_GE(without[0], with[0]);
    EXPECT_GE(without[1], with[1]);
  }
}

TEST(MeanSinr, DeterministicForSeedAndSingleBlockWithoutFading) {
  const std::vector<std::complex<double>> ls{{1e-4, 0}, {5e-5, 0}};
  const auto a = full_assignment(1, 2, {{0}, {0}});
  const std::vector<double> p{1.0};
  sim::RngStream r1(1, "f"), r2(1, "f");
  EXPECT_EQ(mean_sinr(a, ls, p, 1e-10, 20, r1, true), mean_sinr(a, ls, p, 1e-10, 20, r2, true));
  sim::RngStream r3(1, "f");
  const auto flat = mean_sinr(a, ls, p, 1e-10, 20, r3, false);
  auto f = FadingRealization::zeros(1, 2);
  f.set(0, 0, ls[0]);
  f.set(0, 1, ls[1]);
  EXPECT_EQ(flat, sinr(a, f, p, 1e-10));
}

TEST(Serve, OfferedCapsAndContention) {
  const auto mcs = channel::McsTable::default_table();
  const auto one = full_assignment(1, 1, {{0}});
  EXPECT_EQ(serve(one, std::vector<double>{1e6}, std::vector<double>{0.0}, mcs)[0], 0.0);
  EXPECT_EQ(serve(one, std::vector<double>{1e6}, std::vector<double>{5.0}, mcs)[0], 5.0);
  EXPECT_EQ(serve(one, std::vector<double>{1e6}, std::vector<double>{500.0}, mcs)[0], mcs.max_rate_mbps());

  // Ten UEs on one AP under a 91.5x voice surge: each gets an equal tenth.
  std::vector<std::vector<std::size_t>> serving(10, {0});
  const auto cell = full_assignment(1, 10, serving);
  const double offered = 0.0125 * 91.5 + 0.5 * 2.6;
  const std::vector<double> sinr_v(10, 1e3);  // 30 dB
  const auto d = serve(cell, sinr_v, std::vector<double>(10, offered), mcs);
  for (double x : d) {
    EXPECT_DOUBLE_EQ(x, std::min(offered, mcs.max_rate_mbps() / 10.0));
    EXPECT_LE(x, offered);
  }
}
