#include "rhg/field.hpp"

#include <gtest/gtest.h>

#include "rhg/error.hpp"
#include "rhg/factor.hpp"
#include "test_support.hpp"

namespace rhg {
namespace {

using testing::gaussian;
using testing::gf9;

TEST(FieldArith, RationalAddition) {
  Field q = Field::rationals();
  auto a = FieldElem::rational(q, mpq_class(1, 2));
  auto b = FieldElem::rational(q, mpq_class(1, 3));
  EXPECT_EQ((a + b), FieldElem::rational(q, mpq_class(5, 6)));
}

TEST(FieldArith, PrimeFieldProduct) {
  Field f5 = Field::prime(5);
  EXPECT_EQ(FieldElem::integer(f5, 3) * FieldElem::integer(f5, 4), FieldElem::integer(f5, 2));
}

TEST(FieldArith, GaussianSquareOfGenerator) {
  Field k = gaussian();
  FieldElem z(k, k.generator());
  EXPECT_EQ(z * z, FieldElem::integer(k, -1));
}

TEST(FieldArith, Inverses) {
  Field q = Field::rationals();
  EXPECT_EQ(FieldElem::rational(q, mpq_class(2, 3)).inverse(),
            FieldElem::rational(q, mpq_class(3, 2)));
  Field f7 = Field::prime(7);
  EXPECT_EQ(FieldElem::integer(f7, 3).inverse(), FieldElem::integer(f7, 5));
}

TEST(FieldArith, InverseInGf9MatchesBruteForce) {
  Field k = gf9();
  FieldElem z(k, k.generator());
  // Oracle: search all nine elements a + b z for the one with z * w = 1.
  std::optional<FieldElem> found;
  for (long a = 0; a < 3; ++a) {
    for (long b = 0; b < 3; ++b) {
      FieldElem w = FieldElem::integer(k, a) + FieldElem::integer(k, b) * z;
      if (z * w == FieldElem::integer(k, 1)) found = w;
    }
  }
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(*found, FieldElem::integer(k, 2) * z);
  EXPECT_EQ(z.inverse(), *found);
}

TEST(FieldArith, ZeroHasNoInverse) {
  Field f7 = Field::prime(7);
  EXPECT_THROW(FieldElem::integer(f7, 0).inverse(), ArithmeticError);
  EXPECT_THROW(FieldElem::integer(Field::rationals(), 0).inverse(), ArithmeticError);
}

TEST(FieldArith, ReducibleModulusIsDetectedOnInversion) {
  Field q = Field::rationals();
  Field bad = q.adjoin_unchecked(Poly::from_ints(q, {-1, 0, 1}));
  FieldElem zero_divisor = FieldElem(bad, bad.generator()) - FieldElem::integer(bad, 1);
  EXPECT_THROW(zero_divisor.inverse(), ArithmeticError);
}

TEST(FieldArith, DescriptorMismatch) {
  EXPECT_THROW(FieldElem::integer(Field::prime(5), 1) + FieldElem::integer(Field::prime(7), 1),
               FieldMismatch);
}

TEST(FieldArith, RejectsCompositeCharacteristic) {
  EXPECT_THROW(Field::prime(9), PreconditionError);
  EXPECT_THROW(Field::prime(1), PreconditionError);
  EXPECT_NO_THROW(Field::prime(2));
}

TEST(FieldArith, RationalUndefinedModP) {
  EXPECT_THROW(Field::prime(2).from_rational(mpq_class(1, 2)), ArithmeticError);
  EXPECT_EQ(Field::prime(3).from_rational(mpq_class(1, 2)), Field::prime(3).from_int(2));
}

TEST(Extend, Examples) {
  Field q = Field::rationals();
  Field sqrt2 = extend(q, Poly::from_ints(q, {-2, 0, 1}));
  EXPECT_EQ(sqrt2.degree(), 2U);
  Field f2 = Field::prime(2);
  Field f4 = extend(f2, Poly::from_ints(f2, {1, 1, 1}));
  EXPECT_EQ(f4.order(), 4);
  EXPECT_THROW(extend(q, Poly::from_ints(q, {-1, 0, 1})), ReducibleModulus);
  EXPECT_THROW(extend(q, Poly::from_ints(q, {1, 0, 2})), PreconditionError);
}

TEST(Extend, BaseEmbedsCoefficientwise) {
  Field q = Field::rationals();
  Field k = extend(q, Poly::from_ints(q, {-2, 0, 1}));
  Coeff three = k.lift(q, q.from_int(3));
  EXPECT_EQ(three, k.from_int(3));
  FieldElem r(k, k.generator());
  EXPECT_EQ(r * r, FieldElem::integer(k, 2));
}

class FieldAxioms : public ::testing::TestWithParam<int> {
 protected:
  static Field field_for(int which) {
    switch (which) {
      case 0: return Field::rationals();
      case 1: return Field::prime(5);
      case 2: return gf9();
      case 3: return gaussian();
      default: {
        Field f2 = Field::prime(2);
        return f2.adjoin_unchecked(Poly::from_ints(f2, {1, 1, 0, 1}));  // F_8
      }
    }
  }
};

TEST_P(FieldAxioms, RingAxiomsOnRandomTriples) {
  Field f = field_for(GetParam());
  Rng rng(1000 + GetParam());
  for (int i = 0; i < 1000; ++i) {
    FieldElem a(f, f.random(rng)), b(f, f.random(rng)), c(f, f.random(rng));
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a - b) + b, a);
    if (!a.is_zero()) {
      ASSERT_EQ(a.inverse().inverse(), a);
      ASSERT_EQ(a * a.inverse(), FieldElem::integer(f, 1));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllFields, FieldAxioms, ::testing::Values(0, 1, 2, 3, 4));

TEST(FieldArith, FrobeniusIsAdditive) {
  for (Field f : {gf9(), Field::prime(7).adjoin_unchecked(Poly::from_ints(Field::prime(7), {-3, 0, 0, 1}))}) {
    Rng rng(77);
    const mpz_class p(static_cast<unsigned long>(f.characteristic()));
    for (int i = 0; i < 200; ++i) {
      FieldElem a(f, f.random(rng)), b(f, f.random(rng));
      ASSERT_EQ((a + b).pow(p), a.pow(p) + b.pow(p));
      ASSERT_EQ(FieldElem(f, f.frobenius_root(a.value())).pow(p), a);
    }
  }
}

}  // namespace
}  // namespace rhg
