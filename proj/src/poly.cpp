#include "rhg/poly.hpp"

#include <algorithm>

#include "rhg/error.hpp"

namespace rhg {

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("polynomials over " + a.field().name() + " and " + b.field().name());
  }
}

}  // namespace

Poly::Poly(Field field, std::vector<Coeff> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly Poly::constant(const Field& field, Coeff c) { return Poly(field, {std::move(c)}); }

Poly Poly::monomial(const Field& field, Coeff c, std::size_t degree) {
  std::vector<Coeff> v(degree + 1, field.zero());
  v[degree] = std::move(c);
  return Poly(field, std::move(v));
}

Poly Poly::variable(const Field& field) { return monomial(field, field.one(), 1); }

Poly Poly::from_ints(const Field& field, std::initializer_list<long> coeffs) {
  std::vector<Coeff> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.push_back(field.from_int(c));
  return Poly(field, std::move(v));
}

Poly Poly::from_rationals(const Field& field, const std::vector<mpq_class>& coeffs) {
  std::vector<Coeff> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(field.from_rational(c));
  return Poly(field, std::move(v));
}

bool Poly::is_one() const { return coeffs_.size() == 1 && field_.is_one(coeffs_[0]); }

bool Poly::is_monic() const { return !coeffs_.empty() && field_.is_one(coeffs_.back()); }

Coeff Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_.zero();
}

const Coeff& Poly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_.inv(leading()));
}

Poly Poly::derivative() const {
  std::vector<Coeff> v;
  if (coeffs_.size() > 1) v.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    v.push_back(field_.mul(field_.from_int(static_cast<long>(i)), coeffs_[i]));
  }
  return Poly(field_, std::move(v));
}

Poly Poly::scaled(const Coeff& c) const {
  std::vector<Coeff> v;
  v.reserve(coeffs_.size());
  for (const auto& a : coeffs_) v.push_back(field_.mul(a, c));
  return Poly(field_, std::move(v));
}

Coeff Poly::eval(const Coeff& x) const {
  Coeff acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  }
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  require_same(*this, inner);
  Poly acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * inner + constant(field_, coeffs_[i]);
  }
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Coeff> v;
  v.reserve(coeffs_.size());
  for (const auto& a : coeffs_) v.push_back(field_.neg(a));
  return Poly(field_, std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  require_same(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  }
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
  }
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (f.is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(f, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  const bool signed_field = field_.characteristic() == 0 && field_.is_prime_field();
  const bool compound = !field_.is_prime_field();
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Coeff& c = coeffs_[i];
    if (field_.is_zero(c)) continue;
    bool negative = signed_field && sgn(std::get<mpq_class>(c.v)) < 0;
    Coeff mag = negative ? field_.neg(c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (i >= 1) {
      mono = std::string(var);
      if (i >= 2) mono += "^" + std::to_string(i);
    }
    std::string cs = field_.format(mag);
    if (compound && cs.find_first_of("+- ") != std::string::npos) cs = "(" + cs + ")";
    if (mono.empty()) {
      out += cs;
    } else if (field_.is_one(mag)) {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

int compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    int c = a.field().compare(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (b.is_zero()) throw ArithmeticError("division by the zero polynomial");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Coeff> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Coeff> q(r.size() - db, f.zero());
  const Coeff lead_inv = f.inv(b.leading());
  const bool monic = f.is_one(b.leading());
  for (std::size_t k = r.size(); k-- > db;) {
    if (f.is_zero(r[k])) continue;
    Coeff c = monic ? r[k] : f.mul(r[k], lead_inv);
    for (std::size_t j = 0; j < db; ++j) {
      r[k - db + j] = f.sub(r[k - db + j], f.mul(c, b.coeffs()[j]));
    }
    r[k] = f.zero();
    q[k - db] = std::move(c);
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

// Euclid with every remainder made monic. Over Q this keeps the rational
// coefficients of each remainder reduced (GMP canonicalises every quotient),
// so the growth is that of the monic subresultant chain rather than the
// exponential swell of unnormalised pseudo-remainders.
Poly gcd(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  Poly x = a.monic();
  Poly y = b.monic();
  while (!y.is_zero()) {
    Poly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Bezout xgcd(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    Poly s2 = s0 - q * s1;
    s0 = std::exchange(s1, std::move(s2));
    Poly t2 = t0 - q * t1;
    t0 = std::exchange(t1, std::move(t2));
  }
  Coeff li = f.inv(r0.leading());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly pow(const Poly& base, unsigned e) {
  Poly result = Poly::constant(base.field(), base.field().one());
  Poly b = base;
  while (e != 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return result;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& modulus) {
  if (sgn(e) < 0) throw PreconditionError("negative exponent in powmod");
  Poly result = Poly::constant(base.field(), base.field().one()) % modulus;
  Poly b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = (result * b) % modulus;
  }
  return result;
}

Poly reverse(const Poly& a, int target_degree) {
  if (target_degree < a.degree()) {
    throw PreconditionError("reverse: target degree " + std::to_string(target_degree) +
                            " is below deg " + std::to_string(a.degree()));
  }
  if (target_degree < 0) throw PreconditionError("reverse: negative target degree");
  std::vector<Coeff> v(static_cast<std::size_t>(target_degree) + 1, a.field().zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    v[static_cast<std::size_t>(target_degree) - i] = a.coeffs()[i];
  }
  return Poly(a.field(), std::move(v));
}

Poly coerce(const Poly& a, const Field& target) {
  if (a.field() == target) return a;
  std::vector<Coeff> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(target.lift(a.field(), c));
  return Poly(target, std::move(v));
}

Poly reduce_into(const Poly& a, const Field& target) {
  if (!(a.field() == Field::rationals())) {
    throw FieldMismatch("reduce_into expects a polynomial over Q, got " + a.field().name());
  }
  std::vector<Coeff> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(target.from_rational(std::get<mpq_class>(c.v)));
  return Poly(target, std::move(v));
}

int multiplicity(const Poly& a, const Field& root_field) {
  if (root_field.is_prime_field()) {
    throw PreconditionError("multiplicity needs an extension field carrying a root");
  }
  if (a.is_zero()) throw PreconditionError("multiplicity of a root of the zero polynomial");
  Poly cur = coerce(a, root_field);
  const Field& k = root_field;
  Poly linear(k, {k.neg(k.generator()), k.one()});
  int count = 0;
  for (;;) {
    auto [q, r] = divrem(cur, linear);
    if (!r.is_zero()) break;
    cur = std::move(q);
    ++count;
  }
  return count;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a) {
  if (a.is_zero()) throw PreconditionError("squarefree decomposition of the zero polynomial");
  if (a.field().characteristic() != 0) {
    throw UnsupportedField(
        "squarefree_decomposition requires characteristic 0; use multiplicity_profile over " +
        a.field().name());
  }
  std::vector<std::pair<Poly, int>> out;
  if (a.degree() == 0) return out;
  // Yun: b = a/gcd(a,a'), c = a'/gcd(a,a'), d = c - b'.
  Poly ap = a.derivative();
  Poly g = gcd(a, ap);
  Poly b = exact_div(a.monic(), g);
  Poly c = exact_div(ap.monic(), g).scaled(a.field().div(ap.leading(), a.leading()));
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly part = gcd(b, d);
    b = exact_div(b, part);
    c = exact_div(d, part);
    d = c - b.derivative();
    if (part.degree() > 0) out.emplace_back(std::move(part), i);
    ++i;
  }
  return out;
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw PreconditionError("determinant of an empty matrix");
  const Field& f = m[0][0].field();
  Poly prev = Poly::constant(f, f.one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return Poly(f);
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = Poly(f);
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

Poly resultant(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() < 1 || b.size() < 1) throw PreconditionError("resultant of empty coefficient list");
  const Field& f = a[0].field();
  const std::size_t da = a.size() - 1;
  const std::size_t db = b.size() - 1;
  if (a.back().is_zero() || b.back().is_zero()) {
    throw PreconditionError("resultant: formal leading coefficient is zero");
  }
  const std::size_t n = da + db;
  if (n == 0) return Poly::constant(f, f.one());
  // Rows 0..db-1 carry shifts of a, rows db..n-1 shifts of b, highest power first.
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(f)));
  for (std::size_t r = 0; r < db; ++r) {
    for (std::size_t j = 0; j <= da; ++j) m[r][r + j] = a[da - j];
  }
  for (std::size_t r = 0; r < da; ++r) {
    for (std::size_t j = 0; j <= db; ++j) m[db + r][r + j] = b[db - j];
  }
  return bareiss_determinant(std::move(m));
}

Coeff resultant(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return a.field().zero();
  std::vector<Poly> ac, bc;
  for (const auto& c : a.coeffs()) ac.push_back(Poly::constant(a.field(), c));
  for (const auto& c : b.coeffs()) bc.push_back(Poly::constant(a.field(), c));
  return resultant(ac, bc).coeff(0);
}

}  // namespace rhg
