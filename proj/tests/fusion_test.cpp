#include <random>

#include <gtest/gtest.h>

#include "ribbonkit/fusion.hpp"

using namespace ribbonkit;

namespace {

Combination parse_simple(const FusionRing& ring, std::initializer_list<std::pair<Label, long>> terms) {
  Combination c;
  for (const auto& [l, k] : terms) c[ring.index_of(l)] += k;
  return c;
}

Combination mul(const FusionRing& ring, const Label& a, const Label& b) {
  return ring.product(ring.index_of(a), ring.index_of(b));
}

}  // namespace

TEST(Fusion, UqRingExamples) {
  for (int p = 2; p <= 7; ++p) {
    auto ctx = FieldContext::create(p);
    auto uq = uq_ring(ctx);
    EXPECT_EQ(uq.size(), static_cast<std::size_t>(2 * p));
    EXPECT_EQ(mul(uq, v_label(1, 1), v_label(1, 1)), uq.basis(uq.unit()));
    for (int s = 2; s < p; ++s)
      EXPECT_EQ(mul(uq, v_label(2, 0), v_label(s, 0)), parse_simple(uq, {{v_label(s - 1, 0), 1}, {v_label(s + 1, 0), 1}}));
    EXPECT_TRUE(check_associativity(uq).ok);
    { auto du = check_unit_and_duality(uq); EXPECT_TRUE(du.ok) << du.witness; }
  }
  auto ctx2 = FieldContext::create(2);
  auto uq2 = uq_ring(ctx2);
  EXPECT_EQ(uq2.format(mul(uq2, v_label(2, 0), v_label(2, 0))), "2*V[1] + 2*chi*V[1]");
}

TEST(Fusion, WpRingExamples) {
  for (int p = 2; p <= 7; ++p) {
    auto wp = wp_ring(p);
    EXPECT_EQ(mul(wp, x_label(2, 1), x_label(p, 1)), parse_simple(wp, {{x_label(1, -1), 2}, {x_label(p - 1, 1), 2}}));
    EXPECT_EQ(mul(wp, x_label(1, -1), x_label(1, -1)), wp.basis(wp.unit()));
    auto assoc = check_associativity(wp);
    EXPECT_TRUE(assoc.ok) << assoc.witness;
    EXPECT_EQ(assoc.checked, static_cast<std::size_t>(8 * p * p * p));
    { auto du = check_unit_and_duality(wp); EXPECT_TRUE(du.ok) << du.witness; }
  }
  auto wp3 = wp_ring(3);
  EXPECT_EQ(wp3.format(mul(wp3, x_label(2, 1), x_label(3, 1))), "2*X[1,-] + 2*X[2,+]");
}

TEST(Fusion, IsoT) {
  for (int p = 2; p <= 7; ++p) {
    auto ctx = FieldContext::create(p);
    auto uq = uq_ring(ctx);
    auto wp = wp_ring(p);
    auto r = check_iso_T(uq, wp);
    EXPECT_TRUE(r.ok) << r.witness;
    EXPECT_EQ(r.checked, static_cast<std::size_t>(4 * p * p));
  }
  auto ctx = FieldContext::create(3);
  auto uq = uq_ring(ctx);
  auto wp = wp_ring(3);
  auto broken = wp;
  auto prod = broken.product(1, 2);
  prod[0] += 1;
  broken.set_product(1, 2, prod);
  auto r = check_iso_T(uq, broken);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.witness.find("V[2] * V[3]"), std::string::npos) << r.witness;
}

TEST(Fusion, FPDims) {
  for (int p = 2; p <= 6; ++p) {
    auto ctx = FieldContext::create(p);
    auto uq = uq_ring(ctx);
    for (std::size_t i = 0; i < uq.size(); ++i) {
      auto d = fpdim_object(uq, uq.basis(i));
      EXPECT_TRUE(d.exact);
      EXPECT_EQ(d.exact_value, uq.label(i).s);
    }
    auto proj = uq_projective_classes(ctx, uq);
    EXPECT_EQ(proj, projective_classes_closed_form(uq));
    EXPECT_EQ(fpdim_category(uq, proj), Rational(2 * p * p * p));
    auto wp = wp_ring(p);
    EXPECT_EQ(fpdim_category(wp, projective_classes_closed_form(wp)), Rational(2 * p * p * p));
  }
  auto wp3 = wp_ring(3);
  auto d = fpdim_object(wp3, wp3.basis(wp3.index_of(x_label(2, 1))));
  EXPECT_TRUE(d.exact);
  EXPECT_EQ(d.exact_value, 2);
  EXPECT_EQ(fpdim_object(wp3, wp3.basis(wp3.unit())).exact_value, 1);
  auto z2 = group_ring(2);
  std::vector<Combination> proj{z2.basis(0), z2.basis(1)};
  EXPECT_EQ(fpdim_category(z2, proj), Rational(2));
}

TEST(FusionProperty, FPDimMultiplicative) {
  for (int p = 2; p <= 5; ++p) {
    auto wp = wp_ring(p);
    for (std::size_t i = 0; i < wp.size(); ++i)
      for (std::size_t j = 0; j < wp.size(); ++j) {
        const double di = fpdim_object(wp, wp.basis(i)).value;
        const double dj = fpdim_object(wp, wp.basis(j)).value;
        const auto dij = fpdim_object(wp, wp.product(i, j));
        EXPECT_NEAR(di * dj, dij.value, 1e-9);
        EXPECT_TRUE(dij.exact);
      }
  }
}

TEST(Fusion, ConformalWeights) {
  for (int p = 2; p <= 7; ++p) {
    Rational expected = Rational(3, 4 * p) - Rational(1, 2);
    expected.canonicalize();
    EXPECT_EQ(conformal_weight(p, 1, 2), expected);
    EXPECT_EQ(conformal_weight(p, 1, 1), 0);
  }
  EXPECT_EQ(conformal_weight(2, 2, 1), 1);
  EXPECT_EQ(vir_labels(3, 2).size(), 6u);
  EXPECT_EQ(singlet_labels(3, 2).size(), 15u);
}

TEST(Fusion, VirasoroRing) {
  for (int p = 2; p <= 5; ++p) {
    auto vir = vir_ring(p, 6);
    EXPECT_EQ(mul(vir, vir_label(2, 1), vir_label(2, 1)), parse_simple(vir, {{vir_label(1, 1), 1}, {vir_label(3, 1), 1}}));
    EXPECT_EQ(mul(vir, vir_label(1, 2), vir_label(1, p)),
              parse_simple(vir, {{vir_label(1, p - 1), 2}, {vir_label(2, 1), 1}}));
    EXPECT_THROW(mul(vir, vir_label(6, 1), vir_label(2, 1)), TruncationOverflowError);
    auto assoc = check_associativity(vir);
    EXPECT_TRUE(assoc.ok) << assoc.witness;
    for (std::size_t i = 0; i < vir.size(); ++i)
      for (std::size_t j = 0; j < vir.size(); ++j)
        if (vir.has_product(i, j)) EXPECT_EQ(vir.product(i, j), vir.product(j, i));
    { auto du = check_unit_and_duality(vir); EXPECT_TRUE(du.ok) << du.witness; }
  }
}

TEST(Fusion, SingletRing) {
  for (int p = 2; p <= 5; ++p) {
    auto singlet = singlet_ring(p, 6);
    EXPECT_EQ(mul(singlet, singlet_label(3, 1), singlet_label(3, 1)), singlet.basis(singlet.index_of(singlet_label(5, 1))));
    for (int r = -2; r <= 3; ++r)
      for (int r2 = -2; r2 <= 3; ++r2)
        EXPECT_EQ(mul(singlet, singlet_label(r, 1), singlet_label(r2, 1)),
                  singlet.basis(singlet.index_of(singlet_label(r + r2 - 1, 1))));
    EXPECT_EQ(mul(singlet, singlet_label(1, 2), singlet_label(1, p)),
              parse_simple(singlet, {{singlet_label(2, 1), 1}, {singlet_label(1, p - 1), 2}, {singlet_label(0, 1), 1}}));
    auto assoc = check_associativity(singlet);
    EXPECT_TRUE(assoc.ok) << assoc.witness;
    auto duality = check_unit_and_duality(singlet);
    EXPECT_TRUE(duality.ok) << duality.witness;
    EXPECT_EQ(*singlet.dual(singlet.index_of(singlet_label(3, 2))), singlet.index_of(singlet_label(-1, 2)));
  }
}

TEST(Fusion, InductionMaps) {
  for (int p = 2; p <= 7; ++p) {
    auto wp = wp_ring(p);
    auto singlet = singlet_ring(p, 6);
    EXPECT_EQ(induction_F(wp, vir_label(2, p - 1)), parse_simple(wp, {{x_label(p - 1, -1), 2}}));
    EXPECT_EQ(induction_Iprime(wp, singlet_label(1, 2)), parse_simple(wp, {{x_label(2, 1), 1}}));
    EXPECT_EQ(induction_I(singlet, vir_label(3, 1)),
              parse_simple(singlet, {{singlet_label(3, 1), 1}, {singlet_label(1, 1), 1}, {singlet_label(-1, 1), 1}}));
    EXPECT_EQ(induction_I(singlet, vir_label(1, 2)), parse_simple(singlet, {{singlet_label(1, 2), 1}}));
    EXPECT_TRUE(check_induction_composition(p, 6).ok);
    auto hom = check_induction_I_homomorphism(p, 6);
    EXPECT_TRUE(hom.ok) << hom.witness;
    EXPECT_GT(hom.checked, 0u);
    EXPECT_EQ(map_K(sl2_label(1, 1)), vir_label(2, 1));
    EXPECT_EQ(map_K(sl2_label(0, 1)), vir_label(1, 1));
  }
}

TEST(Fusion, ParitySigns) {
  auto wp = wp_ring(4);
  for (int r = 1; r <= 4; ++r)
    for (int r2 = 1; r2 <= 4; ++r2) {
      auto lhs = wp.multiply(induction_F(wp, vir_label(r, 1)), induction_F(wp, vir_label(r2, 1)));
      ASSERT_EQ(lhs.size(), 1u);
      EXPECT_EQ(wp.label(lhs.begin()->first).sign, epsilon(r + r2 - 1));
    }
}

TEST(Fusion, GrothendieckK) {
  for (int p = 2; p <= 7; ++p) {
    auto ctx = FieldContext::create(p);
    auto uq = uq_ring(ctx);
    auto r = check_grring_iso_K(p, 6, uq);
    EXPECT_TRUE(r.ok) << r.witness;
    auto vir = vir_ring(p, 6);
    auto wp = wp_ring(p);
    auto q1 = projective_Q(vir, 1, 1);
    EXPECT_EQ(q1, parse_simple(vir, {{vir_label(1, 1), 2}, {vir_label(2, p - 1), 1}}));
    Combination image;
    for (const auto& [idx, c] : q1) add_to(image, induction_F(wp, vir.label(idx)), c);
    EXPECT_EQ(image, parse_simple(wp, {{x_label(1, 1), 2}, {x_label(p - 1, -1), 2}}));
    EXPECT_EQ(total_length(image), 4);
    auto q21 = projective_Q(vir, 2, 1);
    EXPECT_EQ(q21, vir.multiply(vir.basis(vir.index_of(vir_label(2, 1))), q1));
  }
}

TEST(FusionProperty, SampledAssociativity) {
  std::mt19937_64 rng(2026);
  for (int p = 2; p <= 4; ++p) {
    auto vir = vir_ring(p, 8);
    auto a = check_associativity_sampled(vir, 2000, rng);
    EXPECT_TRUE(a.ok) << a.witness;
    auto singlet = singlet_ring(p, 8);
    auto b = check_associativity_sampled(singlet, 2000, rng);
    EXPECT_TRUE(b.ok) << b.witness;
  }
}

TEST(Fusion, Json) {
  auto wp = wp_ring(2);
  auto j = wp.to_json();
  EXPECT_EQ(j["labels"].size(), 4u);
  EXPECT_EQ(j["unit"], "X[1,+]");
  auto ctx = FieldContext::create(2);
  auto uq = uq_ring(ctx);
  auto t = map_T(uq, wp);
  EXPECT_EQ(morphism_to_json(t)["assignment"]["chi*V[2]"], "X[2,-]");
  EXPECT_THROW(wp.index_of(vir_label(1, 1)), UnknownLabelError);
}
