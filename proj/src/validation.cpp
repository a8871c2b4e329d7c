#include "rhg/validation.hpp"

#include <numeric>

#include "rhg/error.hpp"
#include "rhg/factor.hpp"

namespace rhg {

namespace {

const Field& rationals() {
  static const Field q = Field::rationals();
  return q;
}

RationalMap power_map(const Field& k, int m) { return make_map(Poly::monomial(k, k.one(), m)); }

Poly random_poly(Rng& rng, int degree) {
  const Field& q = rationals();
  std::uniform_int_distribution<long> c(-9, 9);
  std::vector<Coeff> v;
  for (int i = 0; i <= degree; ++i) v.push_back(q.from_int(c(rng)));
  while (q.is_zero(v.back())) v.back() = q.from_int(c(rng));
  return Poly(q, std::move(v));
}

std::string pair_name(const RationalMap& f, const RationalMap& g) {
  return "f = " + f.to_string("x") + ", g = " + g.to_string("y");
}

}  // namespace

std::vector<std::string> family_tags() { return {"superelliptic", "hyperelliptic", "artin-schreier"}; }

std::vector<FamilyCase> family_cases(const std::string& tag) {
  std::vector<FamilyCase> out;
  const Field& q = rationals();
  if (tag == "superelliptic") {
    for (int m = 2; m <= 8; ++m) {
      for (int n = 2; n <= 8; ++n) {
        out.push_back({tag, "m=" + std::to_string(m) + " n=" + std::to_string(n), power_map(q, m),
                       power_map(q, n), -2 * std::gcd(m, n), std::nullopt,
                       "x^m = y^n splits into gcd(m,n) rational curves"});
      }
    }
  } else if (tag == "hyperelliptic") {
    for (int m : {3, 5, 7, 9}) {
      Poly f = Poly::monomial(q, q.one(), m) - Poly::variable(q);
      out.push_back({tag, "m=" + std::to_string(m), make_map(f), power_map(q, 2), m - 3, (m - 1) / 2,
                     "y^2 = squarefree of odd degree m has genus (m-1)/2"});
    }
  } else if (tag == "artin-schreier") {
    for (std::uint64_t p : {2U, 3U, 5U}) {
      Field fp = Field::prime(p);
      Poly f = Poly::monomial(fp, fp.one(), p) - Poly::variable(fp);
      out.push_back({tag, "p=" + std::to_string(p), make_map(f), make_map(Poly::variable(fp)), -2, 0,
                     "the curve x^p - x = y is the graph of a map, a projective line"});
    }
  } else {
    throw PreconditionError("unknown family '" + tag + "'");
  }
  return out;
}

FamilyResult run_family(const std::string& tag, Rng& rng) {
  FamilyResult res{tag, 0, {}};
  for (const auto& c : family_cases(tag)) {
    ++res.cases;
    try {
      GenusReport r = evaluate(c.f, c.g, rng);
      std::string diff;
      if (r.sum_chi != c.expected_sum_chi) {
        diff += " sum_chi " + std::to_string(r.sum_chi) + " != " + std::to_string(c.expected_sum_chi);
      }
      if (c.expected_genus && r.genus != c.expected_genus) {
        diff += " genus " + (r.genus ? std::to_string(*r.genus) : std::string("absent")) +
                " != " + std::to_string(*c.expected_genus);
      }
      if (!diff.empty()) res.failures.push_back(c.parameters + ":" + diff);
    } catch (const Error& e) {
      res.failures.push_back(c.parameters + ": " + e.what());
    }
  }
  return res;
}

RationalMap random_rational_map(Rng& rng, int min_degree, int max_degree) {
  std::uniform_int_distribution<int> deg(min_degree, max_degree);
  std::bernoulli_distribution coin(0.5);
  const Field& q = rationals();
  for (;;) {
    const int d = deg(rng);
    Poly n = random_poly(rng, d);
    Poly den = Poly::constant(q, q.one());
    if (coin(rng)) den = random_poly(rng, std::uniform_int_distribution<int>(1, d)(rng));
    if (coin(rng)) std::swap(n, den);
    if (gcd(n, den).degree() > 0) continue;
    RationalMap f = make_map(n, den);
    if (f.degree() >= min_degree && f.degree() <= max_degree) return f;
  }
}

std::pair<RationalMap, RationalMap> generate_random_pair(std::uint64_t seed, int max_degree) {
  if (max_degree < 2) throw PreconditionError("max_degree must be at least 2");
  Rng rng(seed);
  RationalMap f = random_rational_map(rng, 2, max_degree);
  RationalMap g = random_rational_map(rng, 2, max_degree);
  return {std::move(f), std::move(g)};
}

RationalMap random_mobius(Rng& rng) {
  const Field& q = rationals();
  std::uniform_int_distribution<long> d(-3, 3);
  for (;;) {
    long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (a * e - b * c == 0) continue;
    return make_map(Poly::from_ints(q, {b, a}), Poly::from_ints(q, {e, c}));
  }
}

std::optional<std::string> check_dual_formula(const RationalMap& f, const RationalMap& g, Rng& rng) {
  const int a = sum_chi_tame(f, g, rng).sum_chi;
  const int b = sum_chi_tame(g, f, rng).sum_chi;
  const int c = sum_chi_wild(f, g, rng).sum_chi;
  const int e = evaluate(f, g, rng).sum_chi;
  const int s = evaluate(g, f, rng).sum_chi;
  if (a == b && b == c && c == e && e == s && a % 2 == 0) return std::nullopt;
  return pair_name(f, g) + ": tame(f,g) " + std::to_string(a) + ", tame(g,f) " + std::to_string(b) +
         ", wild " + std::to_string(c) + ", evaluate " + std::to_string(e) + ", swapped " +
         std::to_string(s);
}

std::optional<std::string> check_mobius_invariance(const RationalMap& f, const RationalMap& g,
                                                   int conjugations, Rng& rng) {
  const int base = evaluate(f, g, rng).sum_chi;
  for (int i = 0; i < conjugations; ++i) {
    RationalMap mu = random_mobius(rng);
    RationalMap f2 = compose(mu, compose(f, random_mobius(rng)));
    RationalMap g2 = compose(mu, compose(g, random_mobius(rng)));
    const int s = evaluate(f2, g2, rng).sum_chi;
    if (s != base) {
      return pair_name(f, g) + " gives " + std::to_string(base) + " but its conjugate " +
             pair_name(f2, g2) + " gives " + std::to_string(s);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_graph_case(const RationalMap& f, Rng& rng) {
  const Field& k = f.field();
  const int s = evaluate(f, make_map(Poly::variable(k)), rng).sum_chi;
  if (s == -2) return std::nullopt;
  return "graph of " + f.to_string("x") + " gives " + std::to_string(s);
}

std::optional<std::string> check_fundamental_equality(const RationalMap& f, const ValueOrbit& value,
                                                      Rng& rng) {
  FiberProfile fp = fiber_profile(f, value, rng);
  if (fp.mass() == f.degree()) return std::nullopt;
  return "fiber of " + f.to_string("x") + " over " + value.to_string("t") + " has mass " +
         std::to_string(fp.mass()) + ", degree " + std::to_string(f.degree());
}

std::vector<ValueOrbit> random_value_orbits(const RationalMap& f, Rng& rng) {
  const Field& k = f.field();
  std::vector<ValueOrbit> out{ValueOrbit::infinity()};
  std::uniform_int_distribution<long> c(-9, 9);
  out.push_back(ValueOrbit::from_irreducible(Poly(k, {k.from_rational(mpq_class(c(rng), 1 + (c(rng) + 9) % 5)), k.one()})));
  for (int d = 2; d <= 3; ++d) {
    Poly r = random_poly(rng, d);
    if (!(k == rationals())) r = reduce_into(r, k);
    if (r.degree() < 1) continue;
    for (const auto& fc : factor(r, rng).factors) out.push_back(ValueOrbit::from_irreducible(fc.poly));
  }
  if (is_separable(f)) {
    for (const auto& v : critical_orbits(f, rng).branch_values()) out.push_back(v);
  }
  return out;
}

}  // namespace rhg
