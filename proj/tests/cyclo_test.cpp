#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ribbonkit/cyclo.hpp"

using namespace ribbonkit;

namespace {

CycNumber random_element(const ContextPtr& ctx, std::mt19937_64& rng, int height = 5) {
  std::uniform_int_distribution<long> coeff(-height, height);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Rational> c;
  for (int i = 0; i < ctx->degree(); ++i) c.emplace_back(coeff(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return CycNumber::from_coefficients(ctx, c);
}

}  // namespace

TEST(Cyclotomic, PolynomialDegrees) {
  for (int n = 1; n <= 40; ++n) {
    auto phi = cyclotomic_polynomial(n);
    EXPECT_EQ(static_cast<int>(phi.size()) - 1, euler_phi(n)) << n;
    EXPECT_EQ(phi.back(), 1);
  }
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<Integer>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, MakeRoot) {
  auto ctx3 = FieldContext::create(3);
  EXPECT_TRUE(make_root(ctx3, 0).is_one());
  EXPECT_TRUE(make_root(ctx3, 12).is_one());
  auto ctx2 = FieldContext::create(2);
  EXPECT_EQ(make_root(ctx2, 4), CycNumber(ctx2, -1L));
  EXPECT_EQ(make_root(ctx2, -1), make_root(ctx2, 7));
}

TEST(Cyclotomic, BasicIdentities) {
  for (int p = 2; p <= 7; ++p) {
    auto ctx = FieldContext::create(p);
    auto z = make_root(ctx, 1);
    EXPECT_TRUE((z * z.inverse()).is_one());
    EXPECT_TRUE((q_power(ctx, p) + CycNumber(ctx, 1L)).is_zero());
    EXPECT_EQ(z * z, q_of(ctx));
    EXPECT_TRUE(qint(ctx, 1).is_one());
    EXPECT_TRUE(qint(ctx, p).is_zero());
  }
  auto ctx = FieldContext::create(3);
  EXPECT_EQ(qint(ctx, 2), q_of(ctx) + q_of(ctx).inverse());
}

TEST(Cyclotomic, RootOrders) {
  for (int p = 2; p <= 7; ++p) {
    auto ctx = FieldContext::create(p);
    auto z = make_root(ctx, 1);
    auto order = [&](const CycNumber& x) {
      CycNumber acc = x;
      int k = 1;
      while (!acc.is_one()) {
        acc *= x;
        ++k;
      }
      return k;
    };
    EXPECT_EQ(order(z), 4 * p);
    EXPECT_EQ(order(q_of(ctx)), 2 * p);
    EXPECT_EQ(order(q_power(ctx, 2)), p);
    EXPECT_EQ(make_root(ctx, 5).root_exponent(), 5);
    EXPECT_EQ((z + z).root_exponent(), -1);
  }
}

TEST(Cyclotomic, ComplexEmbedding) {
  auto ctx2 = FieldContext::create(2);
  auto q = embed_complex(q_of(ctx2));
  EXPECT_NEAR(q.real(), 0.0, 1e-12);
  EXPECT_NEAR(q.imag(), 1.0, 1e-12);
  auto ctx3 = FieldContext::create(3);
  auto v = embed_complex(qint(ctx3, 2));
  EXPECT_NEAR(v.real(), 2.0 * std::cos(M_PI / 3.0), 1e-12);
  EXPECT_NEAR(v.imag(), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(embed_complex(CycNumber(ctx3, 1L)) - 1.0), 0.0, 1e-15);
}

TEST(Cyclotomic, Errors) {
  auto a = FieldContext::create(3);
  auto b = FieldContext::create(3);
  EXPECT_THROW(CycNumber(a, 1L) + CycNumber(b, 1L), ContextMismatchError);
  EXPECT_THROW(CycNumber(a).inverse(), DivisionByZeroError);
  EXPECT_THROW(FieldContext::create(1), RangeError);
}

TEST(Cyclotomic, QBinomial) {
  for (int p = 2; p <= 6; ++p) {
    auto ctx = FieldContext::create(p);
    for (long n = 0; n < p; ++n) {
      for (long k = 0; k <= n; ++k) {
        EXPECT_EQ(qbinom(ctx, n, k) * qfact(ctx, k) * qfact(ctx, n - k), qfact(ctx, n)) << n << " " << k;
      }
    }
    // Lucas-type value at a multiple of p: [mp choose p] = m * (-1)^{(m+1)p}.
    for (long m = -3; m <= 3; ++m) {
      long expected = m * (((m + 1) * p) % 2 == 0 ? 1 : -1);
      EXPECT_EQ(qbinom(ctx, m * p, p), CycNumber(ctx, expected)) << "p=" << p << " m=" << m;
    }
  }
}

TEST(Cyclotomic, StringRoundTrip) {
  auto ctx = FieldContext::create(3);
  auto x = parse_cyc(ctx, "1/2*z^3 - z");
  EXPECT_EQ(x.to_string(), "1/2*z^3 - z");
  EXPECT_EQ(CycNumber(ctx).to_string(), "0");
  EXPECT_EQ(parse_cyc(ctx, "-z^2 + 3"), CycNumber(ctx, 3L) - q_of(ctx));
  EXPECT_EQ(ctx->header(), "cyclotomic(N=12)");
  EXPECT_THROW(parse_cyc(ctx, "z^"), ParseError);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto a = random_element(ctx, rng);
    EXPECT_EQ(parse_cyc(ctx, a.to_string()), a);
  }
}

TEST(CyclotomicProperty, FieldAxioms) {
  std::mt19937_64 rng(20261016);
  for (int p = 2; p <= 7; ++p) {
    auto ctx = FieldContext::create(p);
    for (int trial = 0; trial < 60; ++trial) {
      auto a = random_element(ctx, rng);
      auto b = random_element(ctx, rng);
      auto c = random_element(ctx, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_EQ(a.is_zero(), std::abs(embed_complex(a)) < 1e-9);
      auto e = embed_complex(a * b) - embed_complex(a) * embed_complex(b);
      EXPECT_LT(std::abs(e), 1e-9);
    }
  }
}
