#include <gtest/gtest.h>

#include "support.hpp"
#include "uflip/cyclotomic.hpp"
#include "uflip/polynomial.hpp"
#include "uflip/rational.hpp"

namespace uflip {
namespace {

using testing::random_poly;
using testing::random_rat;
using testing::u;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rat(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rat(4, 2).to_string(), "2/1");
  EXPECT_EQ(Rat(4, 2).to_short_string(), "2");
  EXPECT_EQ(Rat::parse("-10/4"), Rat(-5, 2));
  EXPECT_EQ(Rat::parse("7"), Rat(7));
  EXPECT_THROW(Rat(1, 0), std::exception);
  EXPECT_THROW(Rat::parse("1/x"), std::exception);
}

TEST(Rational, FieldAxiomsOnRandomSamples) {
  for (int i = 0; i < 500; ++i) {
    const Rat a = random_rat(), b = random_rat(), c = random_rat();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rat(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
  }
}

TEST(Polynomial, RingExamples) {
  EXPECT_EQ((u() + RatPoly(1)) * (u() - RatPoly(1)), pow(u(), 2) - RatPoly(1));
  const RatPoly p = (pow(u(), 3) + u()) * Rat(1, 2);
  EXPECT_EQ(RatPoly() + p, p);
  EXPECT_EQ(p.scaled(Rat(2)), pow(u(), 3) + u());
}

TEST(Polynomial, SubstituteNeg) {
  const RatPoly d = (pow(u(), 3) + u()) * Rat(1, 2);
  EXPECT_EQ(d.substitute_neg(), -d);
  EXPECT_EQ(RatPoly(1).substitute_neg(), RatPoly(1));
  EXPECT_EQ((pow(u(), 2) - u()).substitute_neg(), pow(u(), 2) + u());
}

TEST(Polynomial, DegreeAndValuation) {
  const RatPoly d = (pow(u(), 3) + u()) * Rat(1, 2);
  EXPECT_EQ(d.degree_and_valuation(), std::make_pair(3, 1));
  EXPECT_EQ(RatPoly(1).degree_and_valuation(), std::make_pair(0, 0));
  EXPECT_EQ(pow(u(), 4).degree_and_valuation(), std::make_pair(4, 4));
}

TEST(Polynomial, Printing) {
  const RatPoly d = (pow(u(), 3) + u()) * Rat(1, 2);
  EXPECT_EQ(d.to_string(), "1/2*u^3 + 1/2*u");
  EXPECT_EQ(RatPoly().to_string(), "0");
  EXPECT_EQ(poly_from_json(to_json(d)), d);
}

TEST(Polynomial, RingAxiomsOnRandomSamples) {
  for (int i = 0; i < 300; ++i) {
    const RatPoly a = random_poly(), b = random_poly(), c = random_poly(4, -2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).substitute_neg(), a.substitute_neg() * b.substitute_neg());
    const Rat x = random_rat();
    if (!x.is_zero()) {
      EXPECT_EQ((a * c).evaluate(x), a.evaluate(x) * c.evaluate(x));
    }
    EXPECT_EQ(a.shifted(3), a * pow(u(), 3));
  }
}

TEST(Polynomial, DivisionWithRemainder) {
  for (int i = 0; i < 200; ++i) {
    const RatPoly a = random_poly(7), b = random_poly(3);
    if (b.is_zero()) continue;
    const auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    if (!r.is_zero()) {
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

TEST(Cyclotomic, RootsOfUnity) {
  const Cyclotomic z = Cyclotomic::root_of_unity(3, 1);
  const Cyclotomic one = Cyclotomic::integer(3, 1);
  EXPECT_EQ(z * z * z, one);
  EXPECT_EQ((one + z + z * z).as_integer(), std::optional<std::int64_t>(0));
  EXPECT_EQ(z.conjugate(), z * z);
  EXPECT_FALSE(z.as_integer().has_value());
  const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  EXPECT_EQ((i * i).as_integer(), std::optional<std::int64_t>(-1));
}

TEST(Cyclotomic, LiftingIsARingMap) {
  for (int n : {3, 4, 5, 6}) {
    const Cyclotomic a = Cyclotomic::root_of_unity(n, 1) + Cyclotomic::integer(n, 2);
    const Cyclotomic b = Cyclotomic::root_of_unity(n, n - 1) * 3;
    EXPECT_EQ((a * b).lifted(60), a.lifted(60) * b.lifted(60));
    EXPECT_EQ((a + b).lifted(60), a.lifted(60) + b.lifted(60));
  }
}

TEST(Cyclotomic, NormOfRandomElementsIsRealAndNonNegative) {
  std::uniform_int_distribution<int> k(0, 11), c(-3, 3);
  for (int i = 0; i < 200; ++i) {
    Cyclotomic a(12);
    for (int j = 0; j < 3; ++j) a += Cyclotomic::root_of_unity(12, k(testing::rng())) * c(testing::rng());
    const Cyclotomic norm = a * a.conjugate();
    EXPECT_EQ(norm, norm.conjugate());
  }
}

}  // namespace
}  // namespace uflip
