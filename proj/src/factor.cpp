#include "rhg/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rhg/error.hpp"

namespace rhg {

namespace {

void sort_factors(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
    int c = compare(a.poly, b.poly);
    return c != 0 ? c < 0 : a.exponent < b.exponent;
  });
}

// ---------------------------------------------------------------------------
// Finite fields

Poly pth_root(const Poly& a) {
  const Field& f = a.field();
  const auto p = static_cast<std::size_t>(f.characteristic());
  std::vector<Coeff> v;
  for (std::size_t i = 0; i < a.coeffs().size(); i += p) {
    v.push_back(f.frobenius_root(a.coeffs()[i]));
  }
  return Poly(f, std::move(v));
}

// Squarefree factorisation of a monic polynomial over F_q.
void squarefree_finite(const Poly& a, int scale, std::vector<std::pair<Poly, int>>& out) {
  if (a.degree() <= 0) return;
  Poly c = gcd(a, a.derivative());
  Poly w = exact_div(a, c);
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = exact_div(w, y);
    if (fac.degree() > 0) out.emplace_back(std::move(fac), i * scale);
    w = std::move(y);
    c = exact_div(c, w);
    ++i;
  }
  if (c.degree() > 0) {
    const auto p = static_cast<int>(a.field().characteristic());
    squarefree_finite(pth_root(c), scale * p, out);
  }
}

// Distinct-degree split of a monic squarefree polynomial.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& a) {
  const Field& f = a.field();
  const mpz_class q = f.order();
  std::vector<std::pair<Poly, int>> out;
  Poly rest = a;
  Poly x = Poly::variable(f);
  Poly h = x % rest;
  int d = 0;
  while (rest.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, q, rest);
    Poly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = exact_div(rest, g);
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

Poly random_poly(const Field& f, int degree_bound, Rng& rng) {
  std::vector<Coeff> v;
  for (int i = 0; i < degree_bound; ++i) v.push_back(f.random(rng));
  return Poly(f, std::move(v));
}

// Cantor-Zassenhaus: a is monic squarefree with all irreducible factors of
// degree d.
void equal_degree(const Poly& a, int d, Rng& rng, std::vector<Poly>& out) {
  if (a.degree() <= d) {
    out.push_back(a);
    return;
  }
  const Field& f = a.field();
  const mpz_class q = f.order();
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  const bool even = f.characteristic() == 2;
  const mpz_class half = (qd - 1) / 2;
  const std::size_t trace_len = f.absolute_degree() * static_cast<std::size_t>(d);
  Poly one = Poly::constant(f, f.one());
  for (;;) {
    Poly r = random_poly(f, a.degree(), rng);
    if (r.degree() <= 0) continue;
    Poly g = gcd(r, a);
    if (g.degree() <= 0 || g.degree() >= a.degree()) {
      Poly b(f);
      if (even) {
        Poly term = r % a;
        b = term;
        for (std::size_t j = 1; j < trace_len; ++j) {
          term = (term * term) % a;
          b += term;
        }
      } else {
        b = powmod(r, half, a) - one;
      }
      if (b.is_zero()) continue;
      g = gcd(b, a);
    }
    if (g.degree() > 0 && g.degree() < a.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(a, g), d, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Integer polynomials for Zassenhaus. Constant term first, no trailing zeros.

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

// Coefficients reduced into [0, m).
ZPoly zmod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

// Coefficients reduced into (-m/2, m/2].
ZPoly zsymmetric(ZPoly a, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivrem_monic(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r = zmod(a, m);
  const int db = zdeg(b);
  if (zdeg(r) < db) return {{}, r};
  ZPoly q(static_cast<std::size_t>(zdeg(r) - db + 1), mpz_class(0));
  for (int k = zdeg(r); k >= db; --k) {
    mpz_class c = r[static_cast<std::size_t>(k)] % m;
    if (c < 0) c += m;
    if (sgn(c) == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& t = r[static_cast<std::size_t>(k - db + j)];
      t -= c * b[static_cast<std::size_t>(j)];
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    }
  }
  ztrim(q);
  ztrim(r);
  return {q, r};
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g(0);
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Primitive part with positive leading coefficient.
ZPoly zprimitive(ZPoly a) {
  if (a.empty()) return a;
  mpz_class g = zcontent(a);
  if (sgn(a.back()) < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

Poly to_fp(const ZPoly& a, const Field& fp) {
  std::vector<Coeff> v;
  v.reserve(a.size());
  for (const auto& c : a) v.push_back(fp.from_int(c));
  return Poly(fp, std::move(v));
}

ZPoly from_fp(const Poly& a) {
  ZPoly r;
  r.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) r.emplace_back(std::to_string(std::get<std::uint64_t>(c.v)));
  return r;
}

// Clears denominators: a = content * result, result primitive in Z[x].
ZPoly integer_primitive(const Poly& a) {
  mpz_class den(1);
  for (const auto& c : a.coeffs()) {
    const auto& q = std::get<mpq_class>(c.v);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  ZPoly r;
  for (const auto& c : a.coeffs()) {
    mpq_class s = std::get<mpq_class>(c.v) * den;
    r.push_back(s.get_num());
  }
  return zprimitive(std::move(r));
}

Poly to_rational_monic(const ZPoly& a) {
  const Field q = Field::rationals();
  std::vector<mpq_class> v;
  for (const auto& c : a) v.emplace_back(c, a.back());
  for (auto& c : v) c.canonicalize();
  return Poly::from_rationals(q, v);
}

// One quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10).
// Input f = g*h mod m, s*g + t*h = 1 mod m, h monic, deg s < deg h,
// deg t < deg g. Output the same relations modulo m^2.
struct HenselState {
  ZPoly g, h, s, t;
};

HenselState hensel_step(const ZPoly& f, const HenselState& in, const mpz_class& m) {
  const mpz_class m2 = m * m;
  ZPoly e = zmod(zsub(f, zmul(in.g, in.h)), m2);
  auto [q, r] = zdivrem_monic(zmul(in.s, e), in.h, m2);
  ZPoly g2 = zmod(zadd(in.g, zadd(zmul(in.t, e), zmul(q, in.g))), m2);
  ZPoly h2 = zmod(zadd(in.h, r), m2);
  ZPoly b = zmod(zsub(zadd(zmul(in.s, g2), zmul(in.t, h2)), ZPoly{mpz_class(1)}), m2);
  auto [c, d] = zdivrem_monic(zmul(in.s, b), h2, m2);
  ZPoly s2 = zmod(zsub(in.s, d), m2);
  ZPoly t2 = zmod(zsub(in.t, zadd(zmul(in.t, b), zmul(c, g2))), m2);
  return {g2, h2, s2, t2};
}

ZPoly product_mod_p(const std::vector<Poly>& fs, std::size_t lo, std::size_t hi, const Field& fp) {
  Poly acc = Poly::constant(fp, fp.one());
  for (std::size_t i = lo; i < hi; ++i) acc = acc * fs[i];
  return from_fp(acc);
}

// Lifts the monic factorisation f = prod fs[lo..hi) mod p to modulus
// p^(2^steps). f is monic modulo that modulus.
void lift_tree(const ZPoly& f, const std::vector<Poly>& fs, std::size_t lo, std::size_t hi,
               const Field& fp, const mpz_class& p, int steps, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(f);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  Poly g0 = to_fp(product_mod_p(fs, lo, mid, fp), fp);
  Poly h0 = to_fp(product_mod_p(fs, mid, hi, fp), fp);
  Bezout bz = xgcd(g0, h0);
  if (!bz.gcd.is_one()) throw InternalError("Hensel lifting of non-coprime modular factors");
  // Normalise the cofactors: deg s < deg h, then t = (1 - s g)/h.
  Poly s0 = bz.s % h0;
  Poly t0 = exact_div(Poly::constant(fp, fp.one()) - s0 * g0, h0);
  HenselState st{from_fp(g0), from_fp(h0), from_fp(s0), from_fp(t0)};
  mpz_class m = p;
  for (int i = 0; i < steps; ++i) {
    st = hensel_step(zmod(f, m * m), st, m);
    m *= m;
  }
  lift_tree(st.g, fs, lo, mid, fp, p, steps, out);
  lift_tree(st.h, fs, mid, hi, fp, p, steps, out);
}

struct PrimeChoice {
  Field field = Field::rationals();
  std::vector<Poly> factors;
};

std::uint64_t next_prime(std::uint64_t n) {
  mpz_class z(std::to_string(n)), r;
  mpz_nextprime(r.get_mpz_t(), z.get_mpz_t());
  return r.get_ui();
}

// Tries several good primes and keeps the one with the fewest modular
// factors, which bounds the recombination search.
PrimeChoice choose_prime(const ZPoly& f, Rng& rng) {
  constexpr int kGoodPrimesTried = 5;
  constexpr int kPrimeScanLimit = 2000;
  PrimeChoice best;
  int good = 0;
  std::uint64_t p = 1;
  for (int scanned = 0; scanned < kPrimeScanLimit && good < kGoodPrimesTried; ++scanned) {
    p = next_prime(p);
    mpz_class lc_mod = f.back() % static_cast<unsigned long>(p);
    if (sgn(lc_mod) == 0) continue;
    Field fp = Field::prime(p);
    Poly fbar = to_fp(f, fp);
    if (!gcd(fbar, fbar.derivative()).is_one()) continue;
    ++good;
    Factorization fz = factor_finite(fbar, rng);
    std::vector<Poly> polys;
    for (auto& fc : fz.factors) polys.push_back(fc.poly);
    if (best.factors.empty() || polys.size() < best.factors.size()) {
      best.field = fp;
      best.factors = std::move(polys);
    }
    if (best.factors.size() == 1) break;
  }
  if (best.factors.empty()) throw InternalError("no good prime found for a squarefree polynomial");
  return best;
}

mpz_class isqrt_ceil(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) ++r;
  return r;
}

// Visits k-subsets of {0..n-1} in lexicographic order; stops when the
// visitor returns true.
template <class Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

// Zassenhaus on a primitive squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> zassenhaus(const ZPoly& f, Rng& rng) {
  PrimeChoice pc = choose_prime(f, rng);
  const int r = static_cast<int>(pc.factors.size());
  if (r == 1) return {f};
  if (r > kMaxModularFactors) {
    throw Error("Zassenhaus recombination limit exceeded: " + std::to_string(r) +
                " modular factors (cap " + std::to_string(kMaxModularFactors) + ")");
  }
  const mpz_class p(std::to_string(pc.field.characteristic()));
  const int n = zdeg(f);

  // Coefficients of lc(f) * (any factor) are bounded by |lc| 2^n ||f||_2.
  mpz_class norm2(0);
  for (const auto& c : f) norm2 += c * c;
  mpz_class bound = abs(f.back()) * isqrt_ceil(norm2);
  bound <<= static_cast<unsigned long>(n);
  int steps = 0;
  mpz_class modulus = p;
  while (modulus <= 2 * bound) {
    modulus *= modulus;
    ++steps;
  }

  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
  ZPoly fmonic = f;
  for (auto& c : fmonic) c *= lc_inv;
  fmonic = zmod(fmonic, modulus);

  std::vector<ZPoly> lifted;
  lift_tree(fmonic, pc.factors, 0, pc.factors.size(), pc.field, p, steps, lifted);

  std::vector<ZPoly> found;
  std::vector<ZPoly> remaining = lifted;
  ZPoly rest = f;
  int s = 1;
  while (2 * s <= static_cast<int>(remaining.size())) {
    const int cnt = static_cast<int>(remaining.size());
    std::vector<int> hit;
    for_each_subset(cnt, s, [&](const std::vector<int>& subset) {
      ZPoly g{rest.back()};
      ZPoly h{rest.back()};
      std::size_t si = 0;
      for (int i = 0; i < cnt; ++i) {
        if (si < subset.size() && subset[si] == i) {
          g = zsymmetric(zmul(g, remaining[static_cast<std::size_t>(i)]), modulus);
          ++si;
        } else {
          h = zsymmetric(zmul(h, remaining[static_cast<std::size_t>(i)]), modulus);
        }
      }
      ZPoly gp = zprimitive(g);
      ZPoly hp = zprimitive(h);
      if (zmul(gp, hp) == rest) {
        found.push_back(gp);
        rest = hp;
        hit = subset;
        return true;
      }
      return false;
    });
    if (hit.empty()) {
      ++s;
      continue;
    }
    for (auto it = hit.rbegin(); it != hit.rend(); ++it) {
      remaining.erase(remaining.begin() + *it);
    }
  }
  found.push_back(rest);
  return found;
}

}  // namespace

Poly Factorization::expand(const Field& field) const {
  Poly acc = Poly::constant(field, unit);
  for (const auto& f : factors) acc = acc * pow(f.poly, static_cast<unsigned>(f.exponent));
  return acc;
}

Factorization factor_finite(const Poly& a, Rng& rng) {
  const Field& f = a.field();
  if (f.characteristic() == 0) {
    throw UnsupportedField("factor_finite called over " + f.name());
  }
  if (a.is_zero()) throw PreconditionError("factorisation of the zero polynomial");
  Factorization out{a.leading(), {}};
  if (a.degree() == 0) return out;
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_finite(a.monic(), 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irr;
      equal_degree(block, d, rng, irr);
      for (auto& g : irr) out.factors.push_back({std::move(g), mult});
    }
  }
  // Distinct squarefree parts are coprime, but factors can repeat across
  // the p-th-power recursion levels; merge them.
  sort_factors(out.factors);
  std::vector<Factor> merged;
  for (auto& fc : out.factors) {
    if (!merged.empty() && merged.back().poly == fc.poly) {
      merged.back().exponent += fc.exponent;
    } else {
      merged.push_back(std::move(fc));
    }
  }
  out.factors = std::move(merged);
  return out;
}

Factorization factor_rational(const Poly& a, Rng& rng) {
  const Field& f = a.field();
  if (!(f == Field::rationals())) {
    throw UnsupportedField("factor_rational called over " + f.name());
  }
  if (a.is_zero()) throw PreconditionError("factorisation of the zero polynomial");
  Factorization out{a.leading(), {}};
  if (a.degree() == 0) return out;
  for (const auto& [part, mult] : squarefree_decomposition(a)) {
    if (part.degree() == 1) {
      out.factors.push_back({part, mult});
      continue;
    }
    for (const auto& z : zassenhaus(integer_primitive(part), rng)) {
      out.factors.push_back({to_rational_monic(z), mult});
    }
  }
  sort_factors(out.factors);
  return out;
}

Factorization factor(const Poly& a, Rng& rng) {
  const Field& f = a.field();
  if (f.characteristic() != 0) return factor_finite(a, rng);
  if (f.is_prime_field()) return factor_rational(a, rng);
  throw UnsupportedField("factorisation over the number field " + f.name() +
                         " is not provided");
}

Factorization factor(const Poly& a) {
  Rng rng(kDefaultSeed);
  return factor(a, rng);
}

std::vector<std::pair<Poly, int>> multiplicity_profile(const Poly& a, Rng& rng) {
  if (a.is_zero()) throw PreconditionError("multiplicity profile of the zero polynomial");
  const Field& f = a.field();
  if (f.characteristic() == 0 && !f.is_prime_field()) {
    // Over a number field Yun's split already has this shape, and it needs
    // only gcds (no number-field factorisation).
    return squarefree_decomposition(a);
  }
  Factorization fz = factor(a, rng);
  std::map<int, Poly> by_exp;
  for (const auto& fc : fz.factors) {
    auto it = by_exp.find(fc.exponent);
    if (it == by_exp.end()) {
      by_exp.emplace(fc.exponent, fc.poly);
    } else {
      it->second = it->second * fc.poly;
    }
  }
  std::vector<std::pair<Poly, int>> out;
  for (auto& [e, p] : by_exp) out.emplace_back(std::move(p), e);
  return out;
}

bool is_irreducible(const Poly& a, Rng& rng) {
  if (a.degree() < 1) throw PreconditionError("irreducibility of a constant");
  Factorization fz = factor(a, rng);
  return fz.factors.size() == 1 && fz.factors[0].exponent == 1;
}

bool is_irreducible(const Poly& a) {
  Rng rng(kDefaultSeed);
  return is_irreducible(a, rng);
}

Field extend(const Field& base, const Poly& modulus) {
  if (!(modulus.field() == base)) {
    throw FieldMismatch("modulus is over " + modulus.field().name() + ", not " + base.name());
  }
  if (modulus.degree() < 1 || !modulus.is_monic()) {
    throw PreconditionError("extension modulus must be monic of degree >= 1");
  }
  if (!is_irreducible(modulus)) {
    throw ReducibleModulus("modulus " + modulus.to_string("t") + " is reducible over " +
                           base.name());
  }
  return base.adjoin_unchecked(modulus);
}

}  // namespace rhg
