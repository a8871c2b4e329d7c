#include "rhg/validation.hpp"

#include <gtest/gtest.h>

#include "rhg/error.hpp"

namespace rhg {
namespace {

TEST(GenerateRandomPair, Deterministic) {
  auto a = generate_random_pair(1, 5);
  auto b = generate_random_pair(1, 5);
  EXPECT_EQ(a.first, b.first);
  EXPECT_EQ(a.second, b.second);
  auto c = generate_random_pair(2, 5);
  EXPECT_FALSE(a.first == c.first && a.second == c.second);
}

TEST(GenerateRandomPair, Ranges) {
  const Field q = Field::rationals();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto [f, g] = generate_random_pair(seed, 5);
    for (const RationalMap* m : {&f, &g}) {
      ASSERT_GE(m->degree(), 2);
      ASSERT_LE(m->degree(), 5);
      ASSERT_EQ(gcd(m->numerator(), m->denominator()).degree(), 0);
      ASSERT_EQ(make_map(m->numerator(), m->denominator()), *m);
    }
  }
  EXPECT_THROW(generate_random_pair(1, 1), PreconditionError);
}

TEST(GenerateRandomPair, CoefficientsFromSmallIntegers) {
  // Coefficients start in [-9, 9]; normalisation only divides by lc(D).
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    RationalMap f = random_rational_map(rng, 2, 5);
    for (const auto& c : f.numerator().coeffs()) {
      const mpq_class& v = std::get<mpq_class>(c.v);
      ASSERT_LE(abs(v.get_num()), 9);
      ASSERT_LE(v.get_den(), 9);
    }
  }
}

TEST(Families, AllPass) {
  Rng rng(4);
  for (const auto& tag : family_tags()) {
    FamilyResult r = run_family(tag, rng);
    EXPECT_TRUE(r.passed()) << tag;
    for (const auto& f : r.failures) ADD_FAILURE() << tag << " " << f;
  }
  EXPECT_EQ(family_cases("superelliptic").size(), 49U);
  EXPECT_EQ(family_cases("hyperelliptic").size(), 4U);
  EXPECT_EQ(family_cases("artin-schreier").size(), 3U);
  EXPECT_THROW(family_cases("elliptic"), PreconditionError);
}

TEST(PropertyChecks, HoldOnSamples) {
  Rng rng(6);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto [f, g] = generate_random_pair(seed, 4);
    EXPECT_EQ(check_dual_formula(f, g, rng), std::nullopt);
    EXPECT_EQ(check_mobius_invariance(f, g, 2, rng), std::nullopt);
    EXPECT_EQ(check_graph_case(f, rng), std::nullopt);
    for (const auto& v : random_value_orbits(f, rng)) {
      EXPECT_EQ(check_fundamental_equality(f, v, rng), std::nullopt);
    }
  }
}

}  // namespace
}  // namespace rhg
