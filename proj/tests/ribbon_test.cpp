#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "ribbonkit/ribbon.hpp"

using namespace ribbonkit;

namespace {

std::vector<Label> names(const FusionRing& ring, const std::vector<std::size_t>& idx) {
  std::vector<Label> out;
  for (auto i : idx) out.push_back(ring.label(i));
  return out;
}

}  // namespace

TEST(Ribbon, WpTwists) {
  for (int p = 2; p <= 7; ++p) {
    auto ctx = FieldContext::create(p);
    auto wp = wp_ring(p);
    auto t = wp_twists(ctx, wp);
    EXPECT_EQ(t.at(x_label(2, 1)), -make_root(ctx, 3));
    EXPECT_TRUE(t.at(x_label(1, 1)).is_one());
    EXPECT_TRUE(check_twist_table(wp, t).ok);
    // Same table from e^{2 pi i h} with h_{1,s} and h_{2,s}.
    auto w = weight_twists(ctx, wp);
    EXPECT_EQ(t.theta, w.theta);
    for (int s = 1; s <= p; ++s) {
      const double pi = std::numbers::pi;
      const std::complex<double> q_half = std::polar(1.0, pi * (s * s - 1) / (2.0 * p));
      const std::complex<double> expected = -std::polar(1.0, 3.0 * pi * p / 2.0) * q_half;
      EXPECT_LT(std::abs(t.at(x_label(s, -1)).to_complex() - expected), 1e-9);
    }
  }
  auto ctx2 = FieldContext::create(2);
  EXPECT_TRUE(wp_twists(ctx2, wp_ring(2)).at(x_label(1, -1)).is_one());
}

TEST(Ribbon, UqTwistsMatchWp) {
  for (int p = 2; p <= 7; ++p) {
    auto ctx = FieldContext::create(p);
    auto uq = uq_ring(ctx);
    auto wp = wp_ring(p);
    auto inv = uq_twists(ctx, uq, true);
    EXPECT_EQ(inv.at(v_label(2, 0)), -make_root(ctx, 3));
    EXPECT_TRUE(inv.at(v_label(1, 0)).is_one());
    auto r = check_twist_matching(map_T(uq, wp), inv, wp_twists(ctx, wp));
    EXPECT_TRUE(r.ok) << r.witness;
    EXPECT_EQ(r.checked, static_cast<std::size_t>(2 * p));
    auto fwd = uq_twists(ctx, uq, false);
    for (std::size_t i = 0; i < uq.size(); ++i) EXPECT_TRUE((fwd.theta[i] * inv.theta[i]).is_one());
    EXPECT_FALSE(check_twist_matching(map_T(uq, wp), fwd, wp_twists(ctx, wp)).ok);
  }
}

TEST(Ribbon, MonodromyExamples) {
  for (int p = 2; p <= 7; ++p) {
    auto ctx = FieldContext::create(p);
    auto wp = wp_ring(p);
    auto t = wp_twists(ctx, wp);
    const auto x2 = wp.index_of(x_label(2, 1));
    const auto x1m = wp.index_of(x_label(1, -1));
    auto m = monodromy(wp, t, x2, x1m);
    ASSERT_EQ(m.eigenvalues.size(), 1u);
    EXPECT_EQ(m.eigenvalues[0].second, CycNumber(ctx, -1));
    auto unit = monodromy(wp, t, wp.unit(), x2);
    EXPECT_TRUE(unit.trivial());
    if (p > 2) {
      auto sq = monodromy(wp, t, x2, x2);
      ASSERT_EQ(sq.eigenvalues.size(), 2u);
      EXPECT_EQ(sq.eigenvalues[0].first, x_label(1, 1));
      EXPECT_EQ(sq.eigenvalues[0].second, q_power(ctx, -3));
      EXPECT_EQ(sq.eigenvalues[1].second, q_power(ctx, 1));
    }
    for (std::size_t i = 0; i < wp.size(); ++i)
      for (std::size_t j = 0; j < wp.size(); ++j) {
        auto a = monodromy(wp, t, i, j), b = monodromy(wp, t, j, i);
        EXPECT_EQ(a.eigenvalues.size(), b.eigenvalues.size());
        EXPECT_EQ(a.eigenvalues.size(), static_cast<std::size_t>(total_length(wp.product(i, j))));
        for (std::size_t k = 0; k < a.eigenvalues.size(); ++k) EXPECT_EQ(a.eigenvalues[k], b.eigenvalues[k]);
      }
  }
}

TEST(Ribbon, MugerCenter) {
  for (int p = 2; p <= 7; ++p) {
    auto ctx = FieldContext::create(p);
    auto wp = wp_ring(p);
    EXPECT_EQ(names(wp, muger_candidates(wp, wp_twists(ctx, wp))), std::vector<Label>{x_label(1, 1)});
    EXPECT_EQ(muger_candidates(wp, trivial_twists(ctx, wp)).size(), wp.size());
  }
  for (int p = 2; p <= 5; ++p) {
    auto ctx = FieldContext::create(p);
    auto singlet = singlet_ring(p, 6);
    auto t = weight_twists(ctx, singlet);
    EXPECT_TRUE(check_twist_table(singlet, t).ok);
    EXPECT_EQ(names(singlet, muger_candidates(singlet, t)),
              (std::vector<Label>{singlet_label(-1, 1), singlet_label(1, 1), singlet_label(3, 1)}));
  }
  auto ctx = FieldContext::create(3);
  auto z3 = group_ring(3);
  EXPECT_EQ(muger_candidates(z3, trivial_twists(ctx, z3)).size(), 3u);
}

TEST(Ribbon, QuantumOrder) {
  for (int p = 2; p <= 7; ++p) {
    auto ctx = FieldContext::create(p);
    auto report = quantum_order_check(ctx);
    EXPECT_TRUE(report.ok) << report.detail;
    EXPECT_EQ(report.order_q2, p);
    EXPECT_TRUE(report.dims[0].is_one());
    EXPECT_TRUE(report.dims.back().is_zero());
  }
  auto ctx = FieldContext::create(4);
  auto report = quantum_order_check(ctx);
  EXPECT_EQ(report.dims[2], q_power(ctx, 2) + CycNumber(ctx, 1) + q_power(ctx, -2));
}

TEST(Ribbon, VoaPhases) {
  for (int p = 2; p <= 7; ++p) {
    auto ctx = FieldContext::create(p);
    const Rational h12 = conformal_weight(p, 1, 2);
    const Rational zero(0);
    auto unit_channel = voa_braiding_phase(ctx, h12, h12, zero);
    EXPECT_EQ(unit_channel, -make_root(ctx, -3));
    EXPECT_EQ(unit_channel * unit_channel, q_power(ctx, -3));
    EXPECT_EQ(voa_monodromy_phase(ctx, h12, h12, zero), q_power(ctx, -3));
    if (p > 2) EXPECT_EQ(voa_braiding_phase(ctx, h12, h12, conformal_weight(p, 1, 3)), make_root(ctx, 1));
    auto singlet = voa_monodromy_phase(ctx, conformal_weight(p, 3, 1), conformal_weight(p, 1, 2), conformal_weight(p, 3, 2));
    EXPECT_TRUE(singlet.is_one());
  }
  auto ctx = FieldContext::create(3);
  EXPECT_THROW(voa_monodromy_phase(ctx, Rational(1, 7), Rational(0), Rational(0)), NonRepresentablePhaseError);
  EXPECT_THROW(voa_braiding_phase(ctx, Rational(1, 12), Rational(0), Rational(0)), NonRepresentablePhaseError);
}

TEST(Ribbon, Json) {
  auto ctx = FieldContext::create(2);
  auto wp = wp_ring(2);
  auto t = wp_twists(ctx, wp);
  auto j = t.to_json();
  EXPECT_EQ(j["twists"].size(), 4u);
  EXPECT_EQ(j["twists"][0]["label"], "X[1,+]");
  EXPECT_EQ(j["twists"][0]["theta"], "1");
  EXPECT_THROW(t.at(vir_label(1, 1)), UnknownLabelError);
}
