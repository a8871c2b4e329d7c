#include "rhg/ramification.hpp"

#include <algorithm>

#include "rhg/error.hpp"
#include "rhg/factor.hpp"

namespace rhg {

namespace {

void add_unique(std::vector<ValueOrbit>& out, const ValueOrbit& v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

Poly linear_value(const Field& k, const Coeff& c) {
  return Poly(k, {k.neg(c), k.one()});
}

}  // namespace

Orbit Orbit::finite(Poly defining) {
  if (!defining.is_monic() || defining.degree() < 1) {
    throw PreconditionError("orbit polynomial " + defining.to_string("x") +
                            " must be monic of degree >= 1");
  }
  if (!is_irreducible(defining)) {
    throw PreconditionError("orbit polynomial " + defining.to_string("x") + " is reducible");
  }
  return Orbit(std::move(defining));
}

Orbit Orbit::from_irreducible(Poly defining) { return Orbit(std::move(defining)); }

const Poly& Orbit::poly() const {
  if (!poly_) throw PreconditionError("the orbit at infinity has no defining polynomial");
  return *poly_;
}

std::string Orbit::to_string(std::string_view var) const {
  return poly_ ? poly_->to_string(var) : "inf";
}

bool operator==(const Orbit& a, const Orbit& b) { return a.poly_ == b.poly_; }

bool orbit_less(const Orbit& a, const Orbit& b) {
  if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
  return compare(a.poly(), b.poly()) < 0;
}

int RationalMap::degree() const { return std::max(num_.degree(), den_.degree()); }

std::string RationalMap::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalMap make_map(Poly numerator, Poly denominator) {
  if (!(numerator.field() == denominator.field())) {
    throw FieldMismatch("numerator over " + numerator.field().name() + ", denominator over " +
                        denominator.field().name());
  }
  if (denominator.is_zero()) throw ArithmeticError("rational map with zero denominator");
  if (numerator.is_zero()) throw PreconditionError("constant map 0");
  Poly g = gcd(numerator, denominator);
  Poly n = exact_div(numerator, g);
  Poly d = exact_div(denominator, g);
  if (n.is_constant() && d.is_constant()) {
    throw PreconditionError("constant map " + n.to_string("x") + "/" + d.to_string("x"));
  }
  const Field& k = n.field();
  Coeff s = k.inv(d.leading());
  return RationalMap(n.scaled(s), d.scaled(s));
}

RationalMap make_map(Poly numerator) {
  Field k = numerator.field();
  return make_map(std::move(numerator), Poly::constant(k, k.one()));
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  if (!(outer.field() == inner.field())) {
    throw FieldMismatch("composition of maps over " + outer.field().name() + " and " +
                        inner.field().name());
  }
  // Homogenise outer in degree m and substitute X = N_i, Y = D_i.
  const Field& k = outer.field();
  const auto m = static_cast<std::size_t>(outer.degree());
  std::vector<Poly> np(m + 1, Poly::constant(k, k.one())), dp(m + 1, Poly::constant(k, k.one()));
  for (std::size_t i = 1; i <= m; ++i) {
    np[i] = np[i - 1] * inner.numerator();
    dp[i] = dp[i - 1] * inner.denominator();
  }
  Poly num(k), den(k);
  for (std::size_t j = 0; j <= m; ++j) {
    Poly term = np[j] * dp[m - j];
    num += term.scaled(outer.numerator().coeff(j));
    den += term.scaled(outer.denominator().coeff(j));
  }
  return make_map(std::move(num), std::move(den));
}

RationalMap flip(const RationalMap& f) {
  const int m = f.degree();
  return make_map(reverse(f.numerator(), m), reverse(f.denominator(), m));
}

Poly wronskian(const RationalMap& f) {
  return f.numerator().derivative() * f.denominator() -
         f.numerator() * f.denominator().derivative();
}

bool is_separable(const RationalMap& f) { return !wronskian(f).is_zero(); }

int ram_index(const RationalMap& f, const PointOrbit& point) {
  if (point.is_infinity()) {
    return ram_index(flip(f), PointOrbit::from_irreducible(Poly::variable(f.field())));
  }
  const Field k = f.field().adjoin_unchecked(point.poly());
  const Coeff zeta = k.generator();
  Poly n = coerce(f.numerator(), k);
  Poly d = coerce(f.denominator(), k);
  Coeff dz = d.eval(zeta);
  if (k.is_zero(dz)) return multiplicity(d, k);
  Coeff value = k.div(n.eval(zeta), dz);
  return multiplicity(n - d.scaled(value), k);
}

ValueOrbit image_value(const RationalMap& f, const PointOrbit& point, Rng& rng) {
  const Field& k = f.field();
  const Poly& num = f.numerator();
  const Poly& den = f.denominator();
  if (point.is_infinity()) {
    if (num.degree() > den.degree()) return ValueOrbit::infinity();
    Coeff v = num.degree() == den.degree() ? k.div(num.leading(), den.leading()) : k.zero();
    return ValueOrbit::from_irreducible(linear_value(k, v));
  }
  const Poly& u = point.poly();
  if (u.degree() == 1) {
    Coeff c = k.neg(u.coeff(0));
    Coeff dz = den.eval(c);
    if (k.is_zero(dz)) return ValueOrbit::infinity();
    return ValueOrbit::from_irreducible(linear_value(k, k.div(num.eval(c), dz)));
  }
  // A pole in one conjugate is a pole in all: gcd(u, D) is 1 or u.
  if (gcd(u, den).degree() > 0) return ValueOrbit::infinity();

  // Res_x(u(x), N(x) - t D(x)) is, up to a unit, the characteristic
  // polynomial of f(zeta) over k, i.e. a power of its minimal polynomial.
  std::vector<Poly> a, b;
  for (const auto& c : u.coeffs()) a.push_back(Poly::constant(k, c));
  const auto m = static_cast<std::size_t>(f.degree());
  for (std::size_t i = 0; i <= m; ++i) {
    b.push_back(Poly(k, {num.coeff(i), k.neg(den.coeff(i))}));
  }
  Poly res = resultant(a, b);
  if (res.degree() < 1) throw InternalError("degenerate resultant computing f(" + u.to_string("x") + ")");
  Factorization fz = factor(res, rng);
  if (fz.factors.size() != 1) {
    throw InternalError("image of the orbit " + u.to_string("x") +
                        " is not a single Galois orbit: resultant " + res.to_string("t"));
  }
  return ValueOrbit::from_irreducible(fz.factors[0].poly);
}

int FiberProfile::mass() const {
  int s = 0;
  for (const auto& en : entries) s += en.e * en.points_per_root;
  return s;
}

FiberProfile fiber_profile(const RationalMap& f, const ValueOrbit& value, Rng& rng) {
  const Field& k = f.field();
  const int m = f.degree();
  const Poly& num = f.numerator();
  const Poly& den = f.denominator();
  FiberProfile out{value, value.degree(), {}};
  auto add_profile = [&](const Poly& h) {
    for (const auto& [part, e] : multiplicity_profile(h, rng)) {
      out.entries.push_back({e, part.degree(), false});
    }
  };
  if (value.is_infinity()) {
    if (den.degree() > 0) add_profile(den);
    if (num.degree() > den.degree()) out.entries.push_back({num.degree() - den.degree(), 1, true});
    return out;
  }
  const Poly& w = value.poly();
  Poly h(k);
  if (w.degree() == 1) {
    h = num - den.scaled(k.neg(w.coeff(0)));
  } else {
    const Field kw = k.adjoin_unchecked(w);
    h = coerce(num, kw) - coerce(den, kw).scaled(kw.generator());
  }
  add_profile(h);
  if (m > h.degree()) out.entries.push_back({m - h.degree(), 1, true});
  return out;
}

std::vector<ValueOrbit> RamPortrait::branch_values() const {
  std::vector<ValueOrbit> out;
  for (const auto& o : orbits) add_unique(out, o.value);
  std::sort(out.begin(), out.end(), orbit_less);
  return out;
}

int RamPortrait::ramification_mass() const {
  int s = 0;
  for (const auto& o : orbits) s += o.point.degree() * (o.e - 1);
  return s;
}

RamPortrait critical_orbits(const RationalMap& f, Rng& rng) {
  Poly w = wronskian(f);
  if (w.is_zero()) {
    throw PreconditionError("critical orbits requested for the inseparable map " +
                            f.to_string("x"));
  }
  const std::uint64_t p = f.field().characteristic();
  RamPortrait out;
  auto consider = [&](const PointOrbit& point) {
    int e = ram_index(f, point);
    if (e < 2) return;
    ValueOrbit v = image_value(f, point, rng);
    if (p != 0 && e % static_cast<int>(p) == 0) {
      out.tame = false;
      add_unique(out.wild_branch_values, v);
    }
    out.orbits.push_back({point, e, std::move(v)});
  };
  // Finite ramified points are roots of W or multiple poles, all of which
  // divide W * D.
  Poly candidates = w * f.denominator();
  if (candidates.degree() > 0) {
    for (const auto& fc : factor(candidates, rng).factors) {
      consider(PointOrbit::from_irreducible(fc.poly));
    }
  }
  consider(PointOrbit::infinity());
  std::sort(out.wild_branch_values.begin(), out.wild_branch_values.end(), orbit_less);
  return out;
}

}  // namespace rhg
