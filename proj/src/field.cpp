#include "rhg/field.hpp"

#include <optional>
#include <sstream>

#include "rhg/error.hpp"
#include "rhg/poly.hpp"

namespace rhg {

namespace detail {

struct FieldNode {
  std::uint64_t p = 0;
  std::optional<Field> base;     // empty for a prime field
  std::optional<Poly> modulus;   // monic over *base
  std::size_t height = 0;
  std::size_t absolute_degree = 1;
  mpz_class order;               // 0 for characteristic zero
};

}  // namespace detail

namespace {

using detail::FieldNode;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;  // p < 2^63, no wraparound
  return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t powmod_u(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return r.get_ui();
}

const std::vector<Coeff>& vec(const Coeff& c) {
  return std::get<std::vector<Coeff>>(c.v);
}

Coeff from_vec(std::vector<Coeff> v) { return Coeff{std::move(v)}; }

}  // namespace

Field Field::rationals() {
  static const auto node = [] {
    auto n = std::make_shared<FieldNode>();
    n->p = 0;
    return std::shared_ptr<const FieldNode>(n);
  }();
  return Field(node);
}

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 63U)) {
    throw PreconditionError("field characteristic must be a prime below 2^63, got " +
                            std::to_string(p));
  }
  mpz_class z(std::to_string(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  }
  auto n = std::make_shared<FieldNode>();
  n->p = p;
  n->order = z;
  return Field(std::shared_ptr<const FieldNode>(n));
}

Field Field::adjoin_unchecked(const Poly& modulus) const {
  if (!(modulus.field() == *this)) {
    throw FieldMismatch("extension modulus is not defined over " + name());
  }
  if (modulus.degree() < 1 || !modulus.is_monic()) {
    throw PreconditionError("extension modulus must be monic of degree >= 1");
  }
  auto n = std::make_shared<FieldNode>();
  n->p = node_->p;
  n->base = *this;
  n->modulus = modulus;
  n->height = node_->height + 1;
  n->absolute_degree = node_->absolute_degree * static_cast<std::size_t>(modulus.degree());
  if (n->p != 0) {
    mpz_pow_ui(n->order.get_mpz_t(), node_->order.get_mpz_t(),
               static_cast<unsigned long>(modulus.degree()));
  }
  return Field(std::shared_ptr<const FieldNode>(n));
}

std::uint64_t Field::characteristic() const { return node_->p; }
bool Field::is_prime_field() const { return node_->height == 0; }
std::size_t Field::height() const { return node_->height; }
std::size_t Field::absolute_degree() const { return node_->absolute_degree; }

std::size_t Field::degree() const {
  return node_->modulus ? static_cast<std::size_t>(node_->modulus->degree()) : 1;
}

const Field& Field::base() const {
  if (!node_->base) throw PreconditionError(name() + " is a prime field");
  return *node_->base;
}

const Poly& Field::modulus() const {
  if (!node_->modulus) throw PreconditionError(name() + " is a prime field");
  return *node_->modulus;
}

Field Field::prime_field() const {
  return is_prime_field() ? *this : base().prime_field();
}

mpz_class Field::order() const {
  if (node_->p == 0) throw UnsupportedField("Q has infinite order");
  return node_->order;
}

Coeff Field::zero() const {
  if (node_->base) return from_vec({});
  if (node_->p == 0) return Coeff{mpq_class(0)};
  return Coeff{std::uint64_t{0}};
}

Coeff Field::one() const { return from_int(1); }

Coeff Field::from_int(const mpz_class& n) const {
  if (node_->base) {
    Coeff b = node_->base->from_int(n);
    if (node_->base->is_zero(b)) return from_vec({});
    return from_vec({std::move(b)});
  }
  if (node_->p == 0) return Coeff{mpq_class(n)};
  return Coeff{reduce(n, node_->p)};
}

Coeff Field::from_rational(const mpq_class& q) const {
  mpq_class c(q);
  c.canonicalize();
  Coeff den = from_int(c.get_den());
  if (is_zero(den)) {
    throw ArithmeticError("coefficient " + c.get_str() + " is undefined in " + name());
  }
  return div(from_int(c.get_num()), den);
}

Coeff Field::generator() const {
  if (!node_->modulus) throw PreconditionError(name() + " has no adjoined generator");
  const Field& b = *node_->base;
  if (node_->modulus->degree() == 1) {
    // z = -v0 for a linear modulus z + v0.
    Coeff r = b.neg(node_->modulus->coeff(0));
    if (b.is_zero(r)) return from_vec({});
    return from_vec({std::move(r)});
  }
  return from_vec({b.zero(), b.one()});
}

Coeff Field::lift(const Field& from, const Coeff& c) const {
  if (from == *this) return c;
  if (!node_->base) {
    throw FieldMismatch(from.name() + " is not a subfield of " + name());
  }
  Coeff inner = node_->base->lift(from, c);
  if (node_->base->is_zero(inner)) return from_vec({});
  return from_vec({std::move(inner)});
}

bool Field::is_zero(const Coeff& a) const {
  if (node_->base) return vec(a).empty();
  if (node_->p == 0) return sgn(std::get<mpq_class>(a.v)) == 0;
  return std::get<std::uint64_t>(a.v) == 0;
}

bool Field::is_one(const Coeff& a) const { return a == one(); }

int Field::compare(const Coeff& a, const Coeff& b) const {
  if (node_->base) {
    const auto& x = vec(a);
    const auto& y = vec(b);
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (std::size_t i = x.size(); i-- > 0;) {
      int c = node_->base->compare(x[i], y[i]);
      if (c != 0) return c;
    }
    return 0;
  }
  if (node_->p == 0) {
    int c = cmp(std::get<mpq_class>(a.v), std::get<mpq_class>(b.v));
    return (c > 0) - (c < 0);
  }
  auto x = std::get<std::uint64_t>(a.v);
  auto y = std::get<std::uint64_t>(b.v);
  return (x > y) - (x < y);
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (node_->base) {
    Poly s = Poly(*node_->base, vec(a)) + Poly(*node_->base, vec(b));
    return from_vec(s.coeffs());
  }
  if (node_->p == 0) {
    return Coeff{mpq_class(std::get<mpq_class>(a.v) + std::get<mpq_class>(b.v))};
  }
  return Coeff{addmod(std::get<std::uint64_t>(a.v), std::get<std::uint64_t>(b.v), node_->p)};
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (node_->base) {
    Poly s = Poly(*node_->base, vec(a)) - Poly(*node_->base, vec(b));
    return from_vec(s.coeffs());
  }
  if (node_->p == 0) {
    return Coeff{mpq_class(std::get<mpq_class>(a.v) - std::get<mpq_class>(b.v))};
  }
  return Coeff{submod(std::get<std::uint64_t>(a.v), std::get<std::uint64_t>(b.v), node_->p)};
}

Coeff Field::neg(const Coeff& a) const {
  if (node_->base) return from_vec((-Poly(*node_->base, vec(a))).coeffs());
  if (node_->p == 0) return Coeff{mpq_class(-std::get<mpq_class>(a.v))};
  return Coeff{submod(0, std::get<std::uint64_t>(a.v), node_->p)};
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (node_->base) {
    Poly prod = Poly(*node_->base, vec(a)) * Poly(*node_->base, vec(b));
    if (prod.degree() >= node_->modulus->degree()) prod = prod % *node_->modulus;
    return from_vec(prod.coeffs());
  }
  if (node_->p == 0) {
    return Coeff{mpq_class(std::get<mpq_class>(a.v) * std::get<mpq_class>(b.v))};
  }
  return Coeff{mulmod(std::get<std::uint64_t>(a.v), std::get<std::uint64_t>(b.v), node_->p)};
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw ArithmeticError("division by zero in " + name());
  if (node_->base) {
    // Extended Euclid in base[z]; a unit gcd exists iff a is invertible.
    Bezout b = xgcd(Poly(*node_->base, vec(a)), *node_->modulus);
    if (b.gcd.degree() != 0) {
      throw ArithmeticError("element " + format(a) + " is not invertible in " + name() +
                            ": the modulus is reducible");
    }
    return from_vec((b.s % *node_->modulus).coeffs());
  }
  if (node_->p == 0) return Coeff{mpq_class(1 / std::get<mpq_class>(a.v))};
  auto x = std::get<std::uint64_t>(a.v);
  return Coeff{powmod_u(x, node_->p - 2, node_->p)};
}

Coeff Field::pow(const Coeff& a, const mpz_class& e) const {
  if (sgn(e) < 0) return pow(inv(a), -e);
  Coeff result = one();
  Coeff b = a;
  mpz_class k = e;
  while (sgn(k) != 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = mul(result, b);
    k >>= 1;
    if (sgn(k) != 0) b = mul(b, b);
  }
  return result;
}

Coeff Field::frobenius_root(const Coeff& a) const {
  if (node_->p == 0) throw UnsupportedField("Frobenius root requested over " + name());
  if (!node_->base) return a;
  // Frobenius has order log_p(q) on F_q, so its inverse is a -> a^(q/p).
  mpz_class e = node_->order / node_->p;
  return pow(a, e);
}

Coeff Field::random(Rng& rng) const {
  if (node_->base) {
    std::vector<Coeff> v;
    v.reserve(static_cast<std::size_t>(node_->modulus->degree()));
    for (int i = 0; i < node_->modulus->degree(); ++i) v.push_back(node_->base->random(rng));
    return from_vec(Poly(*node_->base, std::move(v)).coeffs());
  }
  if (node_->p == 0) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 10);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return Coeff{q};
  }
  std::uniform_int_distribution<std::uint64_t> d(0, node_->p - 1);
  return Coeff{d(rng)};
}

std::string Field::format(const Coeff& a) const {
  if (node_->base) {
    std::string var = node_->height == 1 ? "z" : "z" + std::to_string(node_->height);
    return Poly(*node_->base, vec(a)).to_string(var);
  }
  if (node_->p == 0) return std::get<mpq_class>(a.v).get_str();
  return std::to_string(std::get<std::uint64_t>(a.v));
}

std::string Field::name() const {
  if (node_->base) {
    std::string var = node_->height == 1 ? "z" : "z" + std::to_string(node_->height);
    return node_->base->name() + "[" + var + "]/(" + node_->modulus->to_string(var) + ")";
  }
  if (node_->p == 0) return "Q";
  return "F" + std::to_string(node_->p);
}

bool operator==(const Field& a, const Field& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->p != b.node_->p || a.node_->height != b.node_->height) return false;
  if (a.node_->height == 0) return true;
  return *a.node_->base == *b.node_->base && *a.node_->modulus == *b.node_->modulus;
}

FieldElem::FieldElem(Field field, Coeff value)
    : field_(std::move(field)), value_(std::move(value)) {}

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("elements of " + a.field().name() + " and " + b.field().name());
  }
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.field_, a.field_.add(a.value_, b.value_)};
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.field_, a.field_.div(a.value_, b.value_)};
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

}  // namespace rhg
