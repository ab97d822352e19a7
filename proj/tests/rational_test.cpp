#include "sqfree/rational.hpp"

#include <gtest/gtest.h>

#include "sqfree/error.hpp"
#include "sqfree/op_counter.hpp"

namespace sqfree {
namespace {

TEST(RationalTest, StoredReduced) {
  const Rational q(6, -4);
  EXPECT_EQ(q.numerator(), -3);
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(Rational(0, -7).denominator(), 1);
  EXPECT_EQ(Rational(0, 5), Rational());
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(RationalTest, FromString) {
  EXPECT_EQ(Rational::from_string("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::from_string("7"), Rational(7));
  EXPECT_EQ(Rational::from_string("123456789012345678901234567890").to_string(),
            "123456789012345678901234567890");
  EXPECT_THROW(Rational::from_string("1.5"), DomainError);
  EXPECT_THROW(Rational::from_string("1/0"), DomainError);
  EXPECT_THROW(Rational::from_string(""), DomainError);
}

TEST(OpCounterTest, CountsOnlyMultiplicationsInScope) {
  OpCounter outer;
  Rational a(3, 2), b(5, 7);
  (void)(a * b);  // no scope
  {
    CountingScope scope(outer);
    Rational c = a * b;
    c += a;
    c -= b;
    c /= a;
    c.add_product(a, b);
    c.sub_product(a, b);
    {
      OpCounter inner;
      CountingScope nested(inner);
      c *= a;
      EXPECT_EQ(inner.scalar_muls, 1u);
    }
    c *= b;
  }
  EXPECT_EQ(outer.scalar_muls, 4u);
}

}  // namespace
}  // namespace sqfree
