#include <gtest/gtest.h>

#include <random>

#include "charkit/polyring.hpp"

using namespace charkit;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

MultiPoly random_poly(std::mt19937& rng, int terms = 6, int max_exp = 2) {
  std::uniform_int_distribution<int> e(0, max_exp), c(-5, 5);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    Monomial n;
    for (int i = 0; i < kRank; ++i) n[i] = e(rng) * (e(rng) == 0);
    p.add_term(n, mpz_class(c(rng)));
  }
  return p;
}

const std::array<mpz_class, kRank> kDims{133, 912, 8645, 365750, 27664, 1539, 56};

}  // namespace

TEST(Poly, Addition) {
  EXPECT_EQ(P("z7^2 - z6") + P("z6 - z1"), P("z7^2 - z1"));
  MultiPoly p = P("3*z1*z2 -2");
  EXPECT_EQ(p + MultiPoly(), p);
  EXPECT_EQ(P("1*z7^2 -1*z6 -1*z1 -1") + P("z6 + z1 + 1"), P("z7^2"));
}

TEST(Poly, Multiplication) {
  MultiPoly z7 = MultiPoly::variable(7);
  EXPECT_EQ(z7 * z7, P("z7^2"));
  MultiPoly chi = P("z7^2 - z6 - z1 - 1");
  EXPECT_EQ(chi * MultiPoly(mpz_class(1)), chi);
  EXPECT_EQ((z7 * z7 * z7).coefficient_of(Monomial::fundamental(7) + Monomial::fundamental(7) + Monomial::fundamental(7)), 1);
  EXPECT_TRUE((chi * MultiPoly()).is_zero());
}

TEST(Poly, Partial) {
  MultiPoly p = P("z7^2");
  EXPECT_EQ(partial(p, 7), P("2*z7"));
  EXPECT_TRUE(partial(p, 1).is_zero());
  EXPECT_EQ(partial(partial(p, 7), 7), P("2"));
  EXPECT_THROW(partial(p, 0), DomainError);
  EXPECT_THROW(partial(p, 8), DomainError);
}

TEST(Poly, SecondDerivativeCoefficient) {
  Monomial n = Weight::parse("2130004");
  MultiPoly p = MultiPoly::monomial(n);
  for (int j = 1; j <= kRank; ++j)
    for (int k = 1; k <= kRank; ++k) {
      MultiPoly d = partial(partial(p, k), j);
      long expected = static_cast<long>(n[j - 1]) * (n[k - 1] - (j == k ? 1 : 0));
      if (n[j - 1] == 0 || n[k - 1] - (j == k ? 1 : 0) <= 0) expected = 0;
      if (expected == 0) {
        EXPECT_TRUE(d.is_zero());
      } else {
        Monomial m = n - Monomial::fundamental(j) - Monomial::fundamental(k);
        EXPECT_EQ(d.coefficient_of(m), expected);
        EXPECT_EQ(d.size(), 1u);
      }
    }
}

TEST(Poly, EvalInteger) {
  EXPECT_EQ(eval_integer(P("z7^2 - z6 - z1 - 1"), kDims), 1463);
  std::array<mpz_class, kRank> zero{};
  EXPECT_EQ(eval_integer(P("5*z1*z3 - 7*z2 + 11"), zero), 11);
  EXPECT_EQ(eval_integer(MultiPoly::variable(1), kDims), 133);
}

TEST(Poly, CoefficientOf) {
  EXPECT_EQ(coefficient_of(P("z7^2 - z6 - z1 - 1"), Monomial::fundamental(6)), -1);
  EXPECT_EQ(coefficient_of(P("z7^2 - z6"), Monomial::fundamental(3)), 0);
  EXPECT_EQ(coefficient_of(P("z1*z2 - z5 - z1*z7"), Monomial::fundamental(1) + Monomial::fundamental(7)), -1);
}

TEST(Poly, CanonicalText) {
  EXPECT_EQ(to_string(P("-1 - z1 - z6 + z7^2")), "1*z7^2 -1*z6 -1*z1 -1");
  EXPECT_EQ(to_string(P("-z7 + z1*z7 - z2")), "1*z1*z7 -1*z7 -1*z2");
  EXPECT_EQ(to_string(MultiPoly()), "0");
  EXPECT_EQ(to_string(P("12345678901234567890123*z4^3")), "12345678901234567890123*z4^3");
}

TEST(Poly, TextRoundTrip) {
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    MultiPoly p = random_poly(rng, 8, 3);
    EXPECT_EQ(parse_poly(to_string(p)), p);
  }
}

TEST(Poly, ParseErrors) {
  EXPECT_THROW(P("z8"), ParseError);
  EXPECT_THROW(P("2*z1 3*z2"), ParseError);
  EXPECT_THROW(P("2*"), ParseError);
  EXPECT_THROW(P("z1^"), ParseError);
}

TEST(Poly, RationalParseAndIntegrality) {
  RationalPoly q = parse_poly<mpq_class>("1/2*z1 + 3/2*z1");
  MultiPoly out;
  ASSERT_TRUE(to_integer_poly(q, out));
  EXPECT_EQ(out, P("2*z1"));
  EXPECT_FALSE(to_integer_poly(parse_poly<mpq_class>("1/3*z2"), out));
  EXPECT_EQ(out, P("2*z1"));
  EXPECT_EQ(to_rational_poly(P("4*z3 - 1")), parse_poly<mpq_class>("4*z3 - 1"));
}

TEST(PolyProperty, RingAxioms) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 60; ++t) {
    MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE(add(a, negate(a)).is_zero());
    EXPECT_EQ(mul(a, MultiPoly(mpz_class(1))), a);
  }
}

TEST(PolyProperty, Leibniz) {
  std::mt19937 rng(99);
  for (int t = 0; t < 60; ++t) {
    MultiPoly a = random_poly(rng, 5, 3), b = random_poly(rng, 5, 3);
    for (int i = 1; i <= kRank; ++i) EXPECT_EQ(partial(a * b, i), partial(a, i) * b + a * partial(b, i));
  }
}

TEST(PolyProperty, EvaluationIsHomomorphism) {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    MultiPoly a = random_poly(rng), b = random_poly(rng);
    EXPECT_EQ(eval_integer(a * b, kDims), eval_integer(a, kDims) * eval_integer(b, kDims));
    EXPECT_EQ(eval_integer(a + b, kDims), eval_integer(a, kDims) + eval_integer(b, kDims));
  }
}

TEST(MonomialOrder, DegreeThenAscendingExponents) {
  MonomialOrder less;
  EXPECT_TRUE(less(Weight::parse("0000002"), Weight::parse("0000010")));
  EXPECT_TRUE(less(Weight::parse("0000001"), Weight::parse("0000010")));
  EXPECT_TRUE(less(Weight::parse("0000010"), Weight::parse("1000000")));
  EXPECT_TRUE(less(Weight::parse("1000000"), Weight::parse("0000000")));
  EXPECT_FALSE(less(Weight::parse("0000000"), Weight::parse("0000000")));
}
