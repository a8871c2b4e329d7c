#include "rhg/genus.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "rhg/error.hpp"
#include "test_support.hpp"

namespace rhg {
namespace {

using testing::poly_over;
using testing::poly_q;

const Field kQ = Field::rationals();

RationalMap map_q(std::initializer_list<long> c) { return make_map(poly_q(c)); }
RationalMap power(const Field& k, int m) { return make_map(Poly::monomial(k, k.one(), m)); }
RationalMap identity(const Field& k) { return make_map(Poly::variable(k)); }
RationalMap artin_schreier(std::uint64_t p) {
  Field fp = Field::prime(p);
  return make_map(Poly::monomial(fp, fp.one(), p) - Poly::variable(fp));
}

std::vector<int> contributions(const GenusReport& r) {
  std::vector<int> out;
  for (const auto& e : r.ledger) out.push_back(e.contribution);
  return out;
}

int ledger_total(const GenusReport& r) {
  int s = r.base_term;
  for (const auto& e : r.ledger) {
    int c = 0;
    for (const auto& k : e.classes) c += k.contribution;
    EXPECT_EQ(c, e.contribution);
    s += c;
  }
  return s;
}

TEST(SumChiTame, Examples) {
  Rng rng(1);
  EXPECT_EQ(sum_chi_tame(power(kQ, 4), power(kQ, 6), rng).sum_chi, -4);
  EXPECT_EQ(sum_chi_tame(power(kQ, 3), identity(kQ), rng).sum_chi, -2);

  GenusReport r = sum_chi_tame(map_q({0, 0, -1, 1}), power(kQ, 2), rng);
  EXPECT_EQ(r.sum_chi, -2);
  EXPECT_EQ(r.base_term, -6);
  EXPECT_EQ(r.formula_used, Formula::TameF);
  ASSERT_EQ(r.ledger.size(), 3U);
  EXPECT_EQ(r.ledger[0].value.to_string("t"), "t");
  EXPECT_EQ(r.ledger[1].value.to_string("t"), "t + 4/27");
  EXPECT_TRUE(r.ledger[2].value.is_infinity());
  EXPECT_EQ(contributions(r), (std::vector<int>{0, 2, 2}));
  EXPECT_EQ(ledger_total(r), r.sum_chi);
}

TEST(SumChiTame, RefusesWildF) {
  Rng rng(2);
  for (std::uint64_t p : {2U, 3U, 5U}) {
    Field fp = Field::prime(p);
    try {
      sum_chi_tame(artin_schreier(p), identity(fp), rng);
      FAIL() << "accepted a wild f";
    } catch (const HypothesisError& e) {
      EXPECT_NE(std::string(e.what()).find("inf"), std::string::npos) << e.what();
    }
    EXPECT_THROW(sum_chi_tame(power(fp, static_cast<int>(p)), identity(fp), rng), HypothesisError);
  }
}

TEST(SumChiWild, Examples) {
  Rng rng(3);
  Field f3 = Field::prime(3);
  GenusReport a = sum_chi_wild(artin_schreier(3), identity(f3), rng);
  EXPECT_EQ(a.sum_chi, -2);
  EXPECT_EQ(a.formula_used, Formula::Wild);
  EXPECT_EQ(a.base_term, -2);  // -2*3 - 2*1 + 2*3*1

  GenusReport b = sum_chi_wild(map_q({0, -1, 0, 0, 0, 1}), power(kQ, 2), rng);
  EXPECT_EQ(b.sum_chi, 2);
  EXPECT_EQ(b.base_term, 6);
  EXPECT_EQ(ledger_total(b), 2);

  GenusReport c = sum_chi_wild(map_q({0, 0, -1, 1}), power(kQ, 2), rng);
  EXPECT_EQ(c.sum_chi, -2);
  EXPECT_EQ(ledger_total(c), -2);
}

TEST(SumChiWild, RefusesCommonWildValue) {
  Rng rng(4);
  Field f3 = Field::prime(3);
  try {
    sum_chi_wild(artin_schreier(3), artin_schreier(3), rng);
    FAIL();
  } catch (const HypothesisError& e) {
    EXPECT_NE(std::string(e.what()).find("inf"), std::string::npos);
  }
  EXPECT_THROW(sum_chi_wild(power(f3, 3), power(f3, 3), rng), HypothesisError);
}

TEST(TameFormRhs, ArtinSchreierCounterexample) {
  Rng rng(5);
  for (std::uint64_t p : {2U, 3U, 5U, 7U}) {
    Field fp = Field::prime(p);
    EXPECT_EQ(tame_form_rhs(artin_schreier(p), identity(fp), rng), -static_cast<int>(p) - 1);
    EXPECT_EQ(sum_chi_wild(artin_schreier(p), identity(fp), rng).sum_chi, -2);
  }
}

TEST(Evaluate, Examples) {
  Rng rng(6);
  GenusReport a = evaluate(map_q({0, -1, 0, 0, 0, 1}), power(kQ, 2), rng);
  EXPECT_EQ(a.sum_chi, 2);
  ASSERT_TRUE(a.components.has_value());
  EXPECT_EQ(a.components->r, 1);
  EXPECT_EQ(a.components->source, ComponentSource::CoprimeDegreeCertificate);
  EXPECT_EQ(a.genus, 2);
  EXPECT_EQ(a.formula_used, Formula::BothAgree);
  EXPECT_EQ(a.formulas_applied.size(), 3U);

  GenusReport b = evaluate(power(kQ, 2), power(kQ, 2), rng);
  EXPECT_EQ(b.sum_chi, -4);
  EXPECT_FALSE(b.components.has_value());
  EXPECT_FALSE(b.genus.has_value());

  Field f3 = Field::prime(3);
  try {
    evaluate(power(f3, 3), power(f3, 3), rng);
    FAIL();
  } catch (const HypothesisError& e) {
    std::string w = e.what();
    EXPECT_NE(w.find("t (value 0)"), std::string::npos) << w;
    EXPECT_NE(w.find("inf"), std::string::npos) << w;
  }
}

TEST(Evaluate, ArtinSchreierIsWild) {
  Rng rng(7);
  Field f3 = Field::prime(3);
  GenusReport r = evaluate(artin_schreier(3), identity(f3), rng);
  EXPECT_EQ(r.sum_chi, -2);
  EXPECT_EQ(r.formula_used, Formula::Wild);
  EXPECT_FALSE(r.hypotheses.f_tame);
  EXPECT_TRUE(r.hypotheses.g_tame);
  EXPECT_FALSE(r.hypotheses.wild_overlap);
  EXPECT_EQ(r.genus, 0);
}

TEST(Evaluate, InseparableSide) {
  Rng rng(8);
  Field f3 = Field::prime(3);
  // x^3 = y^2 is the cuspidal cubic.
  GenusReport r = evaluate(power(f3, 3), power(f3, 2), rng);
  EXPECT_EQ(r.sum_chi, -2);
  EXPECT_FALSE(r.hypotheses.f_separable);
  EXPECT_EQ(r.formula_used, Formula::Wild);
  EXPECT_EQ(r.formulas_applied.size(), 2U);
  EXPECT_EQ(r.genus, 0);

  // x^3 against the wild y^3 - y: the wild value inf is common.
  try {
    evaluate(power(f3, 3), artin_schreier(3), rng);
    FAIL();
  } catch (const HypothesisError& e) {
    EXPECT_NE(std::string(e.what()).find("inf"), std::string::npos) << e.what();
  }
}

TEST(Evaluate, UserComponents) {
  Rng rng(9);
  GenusReport a = evaluate(power(kQ, 2), power(kQ, 2), EvaluateOptions{2}, rng);
  ASSERT_TRUE(a.components.has_value());
  EXPECT_EQ(a.components->source, ComponentSource::User);
  EXPECT_EQ(a.components->genus_sum, 0);
  EXPECT_FALSE(a.genus.has_value());

  EXPECT_THROW(evaluate(power(kQ, 2), power(kQ, 2), EvaluateOptions{3}, rng), PreconditionError);
  EXPECT_THROW(evaluate(power(kQ, 2), power(kQ, 2), EvaluateOptions{0}, rng), PreconditionError);
  // sum_chi -4 with r = 1 would mean genus -1.
  EXPECT_THROW(evaluate(power(kQ, 2), power(kQ, 2), EvaluateOptions{1}, rng), PreconditionError);
  EXPECT_THROW(evaluate(map_q({0, -1, 0, 0, 0, 1}), power(kQ, 2), EvaluateOptions{2}, rng),
               PreconditionError);
  GenusReport b = evaluate(map_q({0, -1, 0, 0, 0, 1}), power(kQ, 2), EvaluateOptions{1}, rng);
  EXPECT_EQ(b.components->source, ComponentSource::User);
  EXPECT_EQ(b.genus, 2);
}

TEST(CoprimeDegreeCertificate, Examples) {
  EXPECT_EQ(coprime_degree_certificate(map_q({0, -1, 0, 0, 0, 1}), power(kQ, 2)), 1);
  EXPECT_FALSE(coprime_degree_certificate(power(kQ, 4), power(kQ, 6)).has_value());
  RationalMap r = make_map(poly_q({0, 0, 1}), poly_q({-1, 1}));
  EXPECT_FALSE(coprime_degree_certificate(r, power(kQ, 3)).has_value());
}

TEST(GenusFamilies, Superelliptic) {
  Rng rng(10);
  for (int m = 2; m <= 8; ++m) {
    for (int n = 2; n <= 8; ++n) {
      GenusReport r = evaluate(power(kQ, m), power(kQ, n), rng);
      ASSERT_EQ(r.sum_chi, -2 * std::gcd(m, n)) << m << "," << n;
    }
  }
}

TEST(GenusFamilies, Hyperelliptic) {
  Rng rng(11);
  for (int m : {3, 5, 7, 9}) {
    Poly f = Poly::monomial(kQ, kQ.one(), m) - Poly::variable(kQ);
    GenusReport r = evaluate(make_map(f), power(kQ, 2), rng);
    ASSERT_TRUE(r.genus.has_value());
    EXPECT_EQ(*r.genus, (m - 1) / 2);
  }
}

TEST(GenusInvariants, DualFormulaAgreementAndParity) {
  Rng rng(12);
  for (int i = 0; i < 40; ++i) {
    RationalMap f = testing::random_map(rng, 2, 4);
    RationalMap g = testing::random_map(rng, 2, 4);
    int a = sum_chi_tame(f, g, rng).sum_chi;
    int b = sum_chi_tame(g, f, rng).sum_chi;
    int c = sum_chi_wild(f, g, rng).sum_chi;
    ASSERT_EQ(a, b) << f.to_string("x") << " | " << g.to_string("y");
    ASSERT_EQ(a, c) << f.to_string("x") << " | " << g.to_string("y");
    ASSERT_EQ(a % 2, 0);
    ASSERT_EQ(evaluate(g, f, rng).sum_chi, a);
  }
}

TEST(GenusInvariants, MobiusInvariance) {
  Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    RationalMap f = testing::random_map(rng, 2, 3);
    RationalMap g = testing::random_map(rng, 2, 3);
    int base = evaluate(f, g, rng).sum_chi;
    for (int j = 0; j < 3; ++j) {
      RationalMap mu = testing::random_mobius(rng);
      RationalMap f2 = compose(mu, compose(f, testing::random_mobius(rng)));
      RationalMap g2 = compose(mu, compose(g, testing::random_mobius(rng)));
      ASSERT_EQ(evaluate(f2, g2, rng).sum_chi, base);
    }
  }
}

TEST(GenusInvariants, GraphCase) {
  Rng rng(14);
  for (int i = 0; i < 25; ++i) {
    RationalMap f = testing::random_map(rng, 1, 5);
    ASSERT_EQ(evaluate(f, identity(kQ), rng).sum_chi, -2) << f.to_string("x");
  }
  for (std::uint64_t p : {2U, 3U, 5U}) {
    Field fp = Field::prime(p);
    ASSERT_EQ(evaluate(artin_schreier(p), identity(fp), rng).sum_chi, -2);
    ASSERT_EQ(evaluate(identity(fp), artin_schreier(p), rng).sum_chi, -2);
  }
}

TEST(GenusInvariants, TameMapsInCharacteristicP) {
  Rng rng(15);
  for (std::uint64_t p : {5U, 7U, 11U}) {
    Field fp = Field::prime(p);
    for (int m = 2; m <= 4; ++m) {
      for (int n = 2; n <= 4; ++n) {
        GenusReport r = evaluate(power(fp, m), power(fp, n), rng);
        EXPECT_EQ(r.sum_chi, -2 * std::gcd(m, n));
        EXPECT_EQ(r.formula_used, Formula::BothAgree);
      }
    }
  }
}

}  // namespace
}  // namespace rhg
