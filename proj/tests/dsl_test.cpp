#include <random>

#include <gtest/gtest.h>

#include "ribbonkit/dsl.hpp"

using namespace ribbonkit;
using namespace ribbonkit::dsl;

namespace {

std::string fuse(const std::string& text, int p, int r_max = 8) { return evaluate(*parse(text), p, r_max).text(); }

class ExprGenerator {
 public:
  explicit ExprGenerator(std::uint64_t seed) : rng_(seed) {}

  ExprPtr operator()(int depth) {
    if (depth == 0 || pick(3) == 0) return leaf();
    const Expr::Kind kinds[] = {Expr::Kind::Sum, Expr::Kind::Difference, Expr::Kind::Product};
    return Expr::binary(kinds[pick(3)], (*this)(depth - 1), (*this)(depth - 1));
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Index index() {
    Index i;
    i.uses_p = pick(3) == 0;
    i.offset = pick(9) - 4;
    return i;
  }

  ExprPtr leaf() {
    if (pick(4) == 0) return Expr::integer(pick(20));
    Atom a;
    const Family families[] = {Family::V, Family::X, Family::L, Family::M};
    a.family = families[pick(4)];
    a.first = index();
    if (a.family == Family::V) a.sign = pick(2);
    if (a.family == Family::X) a.sign = pick(2) ? 1 : -1;
    if (a.family == Family::L || a.family == Family::M) a.second = index();
    return Expr::make_atom(a);
  }

  std::mt19937_64 rng_;
};

}  // namespace

TEST(Dsl, ParsesProducts) {
  auto e = parse("X[2,+] * X[p,+]");
  ASSERT_EQ(e->kind, Expr::Kind::Product);
  EXPECT_EQ(e->rhs->atom.first.uses_p, true);
  auto left = parse("V[2]*V[2]*V[2]");
  ASSERT_EQ(left->kind, Expr::Kind::Product);
  EXPECT_EQ(left->lhs->kind, Expr::Kind::Product);
  EXPECT_EQ(left->rhs->kind, Expr::Kind::Atom);
  auto chi = parse("chi*V[3]");
  ASSERT_EQ(chi->kind, Expr::Kind::Atom);
  EXPECT_EQ(chi->atom.sign, 1);
  EXPECT_EQ(print(*parse("chi")), "chi*V[1]");
  EXPECT_EQ(print(*parse("M[-1, p-1]")), "M[-1,p-1]");
  EXPECT_EQ(print(*parse("(V[1]+V[2])*V[3] - (V[1] - V[2])")), "(V[1] + V[2])*V[3] - (V[1] - V[2])");
}

TEST(Dsl, ParseErrors) {
  try {
    parse("X[2,*]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  for (const char* bad : {"", "V[", "V[2", "V[2]*", "(V[2]", "V[2])", "Y[1]", "X[2]", "L[1]", "V[q]", "-V[1]"})
    EXPECT_THROW(parse(bad), ParseError) << bad;
}

TEST(Dsl, EvaluateExamples) {
  EXPECT_EQ(fuse("X[2,+]*X[3,+]", 3), "2*X[1,-] + 2*X[2,+]");
  EXPECT_EQ(fuse("1*X[2,+]", 3), "X[2,+]");
  EXPECT_EQ(fuse("M[3,1]*M[3,1]", 2), "M[5,1]");
  EXPECT_EQ(fuse("X[2,+]*X[p,+]", 4), "2*X[1,-] + 2*X[3,+]");
  EXPECT_EQ(fuse("V[2]*V[2]", 2), "2*V[1] + 2*chi*V[1]");
  EXPECT_EQ(fuse("chi*chi", 3), "V[1]");
  EXPECT_EQ(fuse("L[2,1]*L[2,1] - L[1,1]", 3), "L[3,1]");
  EXPECT_EQ(fuse("2 + 3", 3), "5*X[1,+]");
  EXPECT_EQ(fuse("X[1,+] - X[1,+]", 3), "0");
  EXPECT_THROW(fuse("X[4,+]", 3), UnknownLabelError);
  EXPECT_THROW(fuse("X[1,+]*V[1]", 3), UnknownLabelError);
  EXPECT_THROW(fuse("L[5,1]*L[5,1]", 3, 6), TruncationOverflowError);
}

TEST(DslProperty, PrintParseRoundTrip) {
  ExprGenerator gen(7);
  for (int i = 0; i < 1000; ++i) {
    auto e = gen(4);
    const std::string text = print(*e);
    auto back = parse(text);
    EXPECT_TRUE(equal(*e, *back)) << text << " -> " << print(*back);
    EXPECT_EQ(print(*back), text);
  }
}

TEST(DslProperty, ReassociationInvariant) {
  std::mt19937_64 rng(11);
  const char* atoms[] = {"X[1,+]", "X[2,+]", "X[2,-]", "X[p,+]", "X[p-1,-]", "X[1,-]"};
  for (int p = 2; p <= 5; ++p)
    for (int i = 0; i < 50; ++i) {
      std::string a = atoms[rng() % 6], b = atoms[rng() % 6], c = atoms[rng() % 6];
      EXPECT_EQ(fuse("(" + a + "*" + b + ")*" + c, p), fuse(a + "*(" + b + "*" + c + ")", p));
    }
}
