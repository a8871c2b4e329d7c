#include "rhg/ramification.hpp"

#include <gtest/gtest.h>

#include "rhg/error.hpp"
#include "rhg/factor.hpp"
#include "test_support.hpp"

namespace rhg {
namespace {

using testing::poly_over;
using testing::poly_q;

const Field kQ = Field::rationals();

Orbit point_q(std::initializer_list<long> c) { return Orbit::finite(poly_q(c)); }

Orbit value_q(const std::vector<mpq_class>& c) {
  return Orbit::finite(Poly::from_rationals(kQ, c));
}

// x^2 (x - 1)
RationalMap nodal() { return make_map(poly_q({0, 0, -1, 1})); }

TEST(MakeMap, Examples) {
  RationalMap a = make_map(poly_q({0, -1, 0, 1}));
  EXPECT_EQ(a.degree(), 3);
  EXPECT_TRUE(a.is_polynomial());

  RationalMap b = make_map(poly_q({-1, 0, 1}), poly_q({-1, 1}));
  EXPECT_EQ(b, make_map(poly_q({1, 1})));
  EXPECT_EQ(b.degree(), 1);

  RationalMap c = make_map(poly_q({1}), poly_q({0, 1}));
  EXPECT_EQ(c.degree(), 1);
  Rng rng(1);
  EXPECT_EQ(image_value(c, Orbit::infinity(), rng), point_q({0, 1}));
}

TEST(MakeMap, Errors) {
  EXPECT_THROW(make_map(poly_q({3}), poly_q({2})), PreconditionError);
  EXPECT_THROW(make_map(poly_q({0, 1, 1}), poly_q({0, 2, 2})), PreconditionError);
  EXPECT_THROW(make_map(poly_q({0, 1}), Poly(kQ)), ArithmeticError);
}

TEST(MakeMap, NormalisesDenominator) {
  RationalMap f = make_map(poly_q({1, 0, 2}), poly_q({4, 2}));
  EXPECT_TRUE(f.denominator().is_monic());
  EXPECT_EQ(f.numerator(), Poly::from_rationals(kQ, {mpq_class(1, 2), 0, 1}));
}

TEST(Separability, Examples) {
  Field f3 = Field::prime(3);
  EXPECT_FALSE(is_separable(make_map(poly_over(f3, {0, 0, 0, 1}))));
  EXPECT_TRUE(is_separable(make_map(poly_over(f3, {0, -1, 0, 1}))));
  Rng rng(2);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(is_separable(testing::random_map(rng, 1, 5)));
}

TEST(RamIndex, Examples) {
  EXPECT_EQ(ram_index(nodal(), point_q({0, 1})), 2);
  EXPECT_EQ(ram_index(nodal(), Orbit::infinity()), 3);
  EXPECT_EQ(ram_index(nodal(), point_q({-1, 1})), 1);
  for (std::uint64_t p : {2U, 3U, 5U, 7U}) {
    Field fp = Field::prime(p);
    Poly xp = Poly::monomial(fp, fp.one(), p) - Poly::variable(fp);
    EXPECT_EQ(ram_index(make_map(xp), Orbit::infinity()), static_cast<int>(p));
  }
}

TEST(RamIndex, PolesAndConjugateOrbits) {
  // f = 1/(x^2+1)^3 has e = 3 at the orbit {i, -i}.
  RationalMap f = make_map(poly_q({1}), pow(poly_q({1, 0, 1}), 3));
  EXPECT_EQ(ram_index(f, point_q({1, 0, 1})), 3);
  EXPECT_EQ(ram_index(f, Orbit::infinity()), 6);
  // x^2 at the orbit of sqrt(2) is unramified.
  EXPECT_EQ(ram_index(make_map(poly_q({0, 0, 1})), point_q({-2, 0, 1})), 1);
}

TEST(ImageValue, Examples) {
  Rng rng(3);
  RationalMap sq = make_map(poly_q({0, 0, 1}));
  EXPECT_EQ(image_value(sq, point_q({-2, 0, 1}), rng), point_q({-2, 1}));
  EXPECT_EQ(image_value(sq, point_q({1, 0, 1}), rng), point_q({1, 1}));
  RationalMap inv = make_map(poly_q({1}), poly_q({0, 1}));
  EXPECT_EQ(image_value(inv, point_q({0, 1}), rng), Orbit::infinity());
}

TEST(ImageValue, DegreeFourOrbitMapsToMinimalPolynomial) {
  Rng rng(4);
  // f = x^5 - x at the roots of 5x^4 - 1: f = -4x/5, whose minimal polynomial
  // is t^4 - 256/3125.
  RationalMap f = make_map(poly_q({0, -1, 0, 0, 0, 1}));
  Orbit crit = Orbit::finite(Poly::from_rationals(kQ, {mpq_class(-1, 5), 0, 0, 0, 1}));
  EXPECT_EQ(image_value(f, crit, rng), value_q({mpq_class(-256, 3125), 0, 0, 0, 1}));
  // A pole orbit of degree 2.
  RationalMap g = make_map(poly_q({0, 1}), poly_q({-2, 0, 1}));
  EXPECT_EQ(image_value(g, point_q({-2, 0, 1}), rng), Orbit::infinity());
}

TEST(CriticalOrbits, CubicOverQ) {
  Rng rng(5);
  RamPortrait p = critical_orbits(make_map(poly_q({0, -3, 0, 1})), rng);
  ASSERT_EQ(p.orbits.size(), 3U);
  EXPECT_EQ(p.orbits[0].point, point_q({-1, 1}));
  EXPECT_EQ(p.orbits[0].value, point_q({2, 1}));   // f(1) = -2
  EXPECT_EQ(p.orbits[1].point, point_q({1, 1}));
  EXPECT_EQ(p.orbits[1].value, point_q({-2, 1}));  // f(-1) = 2
  EXPECT_TRUE(p.orbits[2].point.is_infinity());
  EXPECT_EQ(p.orbits[2].e, 3);
  EXPECT_TRUE(p.tame);
  EXPECT_TRUE(p.wild_branch_values.empty());
}

TEST(CriticalOrbits, PowerMap) {
  Rng rng(6);
  for (int m = 2; m <= 6; ++m) {
    RamPortrait p = critical_orbits(make_map(Poly::monomial(kQ, kQ.one(), m)), rng);
    ASSERT_EQ(p.orbits.size(), 2U);
    EXPECT_EQ(p.orbits[0].point, point_q({0, 1}));
    EXPECT_EQ(p.orbits[0].e, m);
    EXPECT_EQ(p.orbits[0].value, point_q({0, 1}));
    EXPECT_TRUE(p.orbits[1].point.is_infinity());
    EXPECT_EQ(p.orbits[1].e, m);
  }
}

TEST(CriticalOrbits, ArtinSchreierIsWildAtInfinity) {
  Rng rng(7);
  Field f3 = Field::prime(3);
  RamPortrait p = critical_orbits(make_map(poly_over(f3, {0, -1, 0, 1})), rng);
  ASSERT_EQ(p.orbits.size(), 1U);
  EXPECT_TRUE(p.orbits[0].point.is_infinity());
  EXPECT_EQ(p.orbits[0].e, 3);
  EXPECT_FALSE(p.tame);
  ASSERT_EQ(p.wild_branch_values.size(), 1U);
  EXPECT_TRUE(p.wild_branch_values[0].is_infinity());
}

TEST(CriticalOrbits, RejectsInseparable) {
  Rng rng(8);
  Field f3 = Field::prime(3);
  EXPECT_THROW(critical_orbits(make_map(poly_over(f3, {0, 0, 0, 1})), rng), PreconditionError);
}

TEST(FiberProfile, Examples) {
  Rng rng(9);
  FiberProfile zero = fiber_profile(nodal(), point_q({0, 1}), rng);
  EXPECT_EQ(zero.entries, (std::vector<FiberEntry>{{1, 1, false}, {2, 1, false}}));

  FiberProfile inf = fiber_profile(nodal(), Orbit::infinity(), rng);
  EXPECT_EQ(inf.entries, (std::vector<FiberEntry>{{3, 1, true}}));

  RationalMap g = make_map(poly_q({0, 0, 1}));
  FiberProfile v = fiber_profile(g, value_q({mpq_class(4, 27), 1}), rng);
  EXPECT_EQ(v.entries, (std::vector<FiberEntry>{{1, 2, false}}));
}

TEST(FiberProfile, OverNonRationalValueOrbit) {
  Rng rng(10);
  RationalMap f = make_map(poly_q({0, -1, 0, 0, 0, 1}));
  FiberProfile fp = fiber_profile(f, value_q({mpq_class(-256, 3125), 0, 0, 0, 1}), rng);
  EXPECT_EQ(fp.value_degree, 4);
  EXPECT_EQ(fp.entries, (std::vector<FiberEntry>{{1, 3, false}, {2, 1, false}}));
}

TEST(FiberProfile, InfinityInsideFiniteValue) {
  Rng rng(11);
  // (x^2 + 1)/(x^2 - 3) takes the value 1 at infinity with e = 2.
  RationalMap f = make_map(poly_q({1, 0, 1}), poly_q({-3, 0, 1}));
  FiberProfile fp = fiber_profile(f, point_q({-1, 1}), rng);
  EXPECT_EQ(fp.entries, (std::vector<FiberEntry>{{2, 1, true}}));
}

TEST(FiberProfile, WildIndicesInCharacteristicP) {
  Rng rng(12);
  Field f3 = Field::prime(3);
  // x^3 is purely inseparable: every fiber is a single point with e = 3.
  RationalMap f = make_map(poly_over(f3, {0, 0, 0, 1}));
  FiberProfile fp = fiber_profile(f, Orbit::finite(poly_over(f3, {1, 0, 1})), rng);
  EXPECT_EQ(fp.entries, (std::vector<FiberEntry>{{3, 1, false}}));
  EXPECT_EQ(fp.value_degree, 2);
}

// Value orbits used for probes: rational points, infinity, branch values and
// random irreducible orbits of higher degree.
std::vector<Orbit> probe_values(const RationalMap& f, Rng& rng) {
  std::vector<Orbit> out{Orbit::infinity()};
  std::uniform_int_distribution<long> d(-6, 6);
  out.push_back(Orbit::finite(Poly::from_rationals(kQ, {mpq_class(d(rng), 1 + (d(rng) + 6) % 4), 1})));
  Poly r = testing::random_int_poly(3, rng, 5);
  for (const auto& fc : factor(r, rng).factors) out.push_back(Orbit::from_irreducible(fc.poly));
  for (const auto& v : critical_orbits(f, rng).branch_values()) out.push_back(v);
  return out;
}

TEST(RamificationInvariants, FundamentalEquality) {
  Rng rng(13);
  int probes = 0;
  while (probes < 200) {
    RationalMap f = testing::random_map(rng, 1, 5);
    for (const auto& v : probe_values(f, rng)) {
      FiberProfile fp = fiber_profile(f, v, rng);
      ASSERT_EQ(fp.mass(), f.degree()) << f.to_string("x") << " over " << v.to_string("t");
      ++probes;
    }
  }
}

TEST(RamificationInvariants, TamePortraitMass) {
  Rng rng(14);
  for (int i = 0; i < 60; ++i) {
    RationalMap f = testing::random_map(rng, 1, 5);
    RamPortrait p = critical_orbits(f, rng);
    ASSERT_TRUE(p.tame);
    ASSERT_EQ(p.ramification_mass(), 2 * f.degree() - 2) << f.to_string("x");
  }
  // Tame maps in positive characteristic as well.
  Field f7 = Field::prime(7);
  RamPortrait p = critical_orbits(make_map(poly_over(f7, {0, 1, 0, 1})), rng);
  ASSERT_TRUE(p.tame);
  EXPECT_EQ(p.ramification_mass(), 4);
}

TEST(RamificationInvariants, FlipConsistency) {
  Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    RationalMap f = testing::random_map(rng, 1, 5);
    RationalMap inv = make_map(poly_q({1}), poly_q({0, 1}));
    ASSERT_EQ(ram_index(f, Orbit::infinity()), ram_index(compose(f, inv), point_q({0, 1})));
  }
}

TEST(RamificationInvariants, MobiusCompositionLaw) {
  Rng rng(16);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int i = 0; i < 100; ++i) {
    RationalMap f = testing::random_map(rng, 1, 5);
    RationalMap mu = testing::random_mobius(rng);
    Orbit p = point_q({d(rng), 1});
    Orbit mp = image_value(mu, p, rng);
    ASSERT_EQ(ram_index(compose(f, mu), p), ram_index(f, mp));
  }
}

}  // namespace
}  // namespace rhg
