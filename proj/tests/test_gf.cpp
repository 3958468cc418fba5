#include <gtest/gtest.h>

#include <set>

#include "twcubic/gf.hpp"

using namespace twcubic;

namespace {

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const Field f = make_field_of_order(GetParam());
  const auto el = f.elements();
  ASSERT_EQ(el.size(), GetParam());
  for (const auto& a : el) {
    EXPECT_EQ(a + f.zero(), a);
    EXPECT_EQ(a * f.one(), a);
    EXPECT_EQ(a + (-a), f.zero());
    if (!a.is_zero()) EXPECT_EQ(a * a.inv(), f.one());
    for (const auto& b : el) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a - b) + b, a);
      for (const auto& c : el) {
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
}

TEST_P(FieldAxioms, MultiplicativeGroupIsCyclic) {
  const Field f = make_field_of_order(GetParam());
  bool found = false;
  for (const auto& g : f.elements()) {
    if (g.is_zero()) continue;
    std::set<std::uint32_t> seen;
    FieldElement x = f.one();
    for (std::uint32_t k = 0; k < f.q() - 1; ++k, x *= g) seen.insert(x.encoding());
    if (seen.size() == f.q() - 1) found = true;
  }
  EXPECT_TRUE(found);
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, FieldAxioms, ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u));

TEST(PrimeField, MatchesIntegerArithmetic) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const Field f = make_field_of_order(p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        EXPECT_EQ((f.element(a) + f.element(b)).encoding(), (a + b) % p);
        EXPECT_EQ((f.element(a) * f.element(b)).encoding(), (a * b) % p);
      }
  }
}

// GF(9) = F_3[x]/(x^2+1), element c0 + c1 x encoded as c0 + 3 c1.
TEST(ExtensionField, Gf9MatchesHandPolynomialProduct) {
  const Field f = make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = 0; b < 9; ++b) {
      const int a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
      const int c0 = ((a0 * b0 - a1 * b1) % 3 + 3) % 3;
      const int c1 = (a0 * b1 + a1 * b0) % 3;
      EXPECT_EQ((f.element(a) * f.element(b)).encoding(), static_cast<std::uint32_t>(c0 + 3 * c1)) << a << "*" << b;
      EXPECT_EQ((f.element(a) + f.element(b)).encoding(), static_cast<std::uint32_t>((a0 + b0) % 3 + 3 * ((a1 + b1) % 3)));
    }
}

TEST(ExtensionField, CustomModulusGivesAField) {
  const Field f = make_field(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1});
  EXPECT_EQ(f.q(), 8u);
  for (const auto& a : f.elements())
    if (!a.is_zero()) EXPECT_EQ(a.pow(7), f.one());
}

TEST(FieldErrors, RejectsBadParameters) {
  EXPECT_THROW(make_field_of_order(6), FieldError);
  EXPECT_THROW(make_field_of_order(1), FieldError);
  EXPECT_THROW(make_field(4, 1), FieldError);
  EXPECT_THROW(make_field(3, 2, std::vector<std::uint32_t>{1, 2, 1}), FieldError);  // (x+1)^2
  EXPECT_THROW(make_field(3, 2, std::vector<std::uint32_t>{1, 0, 2}), FieldError);  // not monic
  EXPECT_THROW(make_field_of_order(256), FieldError);                               // above the ceiling
  EXPECT_THROW(make_field_of_order(5).zero().inv(), FieldError);
  EXPECT_THROW(make_field_of_order(5).one() + make_field_of_order(7).one(), FieldError);
}

TEST(FieldXi, IsQModThree) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 27u}) {
    const int r = static_cast<int>(q % 3);
    EXPECT_EQ(make_field_of_order(q).xi(), r == 2 ? -1 : r) << q;
  }
}

TEST(QuadraticCharacter, MatchesSquareSet) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u}) {
    const Field f = make_field_of_order(q);
    std::set<std::uint32_t> squares;
    for (const auto& x : f.elements())
      if (!x.is_zero()) squares.insert((x * x).encoding());
    for (const auto& a : f.elements()) {
      const int want = a.is_zero() ? 0 : squares.count(a.encoding()) ? 1 : -1;
      EXPECT_EQ(quadratic_character(a), want);
    }
  }
  EXPECT_THROW(quadratic_character(make_field_of_order(8).one()), FieldError);
}

TEST(SquareValues, CountIsHalfOfQMinusOne) {
  for (std::uint32_t q : {5u, 11u, 17u, 23u}) {
    const Field f = make_field_of_order(q);
    std::set<std::uint32_t> squares;
    for (const auto& x : f.elements())
      if (!x.is_zero()) squares.insert((x * x).encoding());
    std::uint64_t brute = 0;
    for (const auto& a : f.elements()) brute += squares.count((a * a + a + f.one()).encoding());
    EXPECT_EQ(count_square_values_of_f(f), brute);
    EXPECT_EQ(brute, (q - 1) / 2);
  }
  EXPECT_THROW(count_square_values_of_f(make_field_of_order(7)), FieldError);
}

TEST(TripleProducts, MatchBruteForceOverAllTriples) {
  for (std::uint32_t q : {4u, 7u, 13u, 16u, 19u}) {
    const Field f = make_field_of_order(q);
    std::set<std::uint32_t> cubes;
    for (const auto& x : f.elements())
      if (!x.is_zero()) cubes.insert((x * x * x).encoding());
    TripleProductCounts brute;
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t b = a + 1; b < q; ++b)
        for (std::uint32_t c = b + 1; c < q; ++c) {
          const auto prod = f.element(a) * f.element(b) * f.element(c);
          (cubes.count(prod.encoding()) ? brute.cubes : brute.non_cubes)++;
        }
    EXPECT_EQ(triple_product_class_counts(f), brute) << "q=" << q;
  }
  const auto q7 = triple_product_class_counts(make_field_of_order(7));
  EXPECT_EQ(q7.cubes, 8u);
  EXPECT_EQ(q7.non_cubes, 12u);
}

}  // namespace
