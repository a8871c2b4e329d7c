#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace rhg {

// Seeded randomness source threaded through every algorithm that makes
// random choices (equal-degree splitting, random test instances).
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

// Raw representation of a field element. Which alternative is live is
// determined by the owning Field:
//   Q          -> mpq_class in lowest terms
//   F_p        -> residue in [0, p)
//   K[z]/(v)   -> coefficients over K, constant first, no trailing zeros,
//                 length < deg v
// Canonical forms make equality structural.
struct Coeff {
  std::variant<mpq_class, std::uint64_t, std::vector<Coeff>> v;

  friend bool operator==(const Coeff& a, const Coeff& b) { return a.v == b.v; }
};

class Poly;

namespace detail {
struct FieldNode;
}

// Descriptor of an exact coefficient field: Q, F_p, or a tower of simple
// extensions K[z]/(v) over one of them. Cheap to copy; immutable.
class Field {
 public:
  static Field rationals();
  // Throws PreconditionError unless p is prime and below 2^63.
  static Field prime(std::uint64_t p);

  // Adjoins a root of `modulus`, which must be monic over this field and of
  // degree >= 1. Irreducibility is NOT checked here; use rhg::extend for the
  // checked constructor. A reducible modulus surfaces later as an
  // ArithmeticError from inv().
  Field adjoin_unchecked(const Poly& modulus) const;

  std::uint64_t characteristic() const;
  bool is_finite() const { return characteristic() != 0; }
  bool is_prime_field() const;
  std::size_t height() const;
  // Degree over the field directly beneath (1 for a prime field).
  std::size_t degree() const;
  std::size_t absolute_degree() const;
  const Field& base() const;
  const Poly& modulus() const;
  Field prime_field() const;
  // Number of elements; finite fields only.
  mpz_class order() const;

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(const mpz_class& n) const;
  Coeff from_int(long n) const { return from_int(mpz_class(n)); }
  // Throws ArithmeticError when the denominator vanishes in the field.
  Coeff from_rational(const mpq_class& q) const;
  // Residue class of the adjoined variable (extensions only).
  Coeff generator() const;
  // Embeds an element of a subfield of the tower (or of this field itself).
  Coeff lift(const Field& from, const Coeff& c) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  // Total order on canonical representations; used for sorting only.
  int compare(const Coeff& a, const Coeff& b) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }
  Coeff pow(const Coeff& a, const mpz_class& e) const;
  // Inverse of the Frobenius a -> a^p; finite fields only.
  Coeff frobenius_root(const Coeff& a) const;
  Coeff random(Rng& rng) const;

  std::string format(const Coeff& a) const;
  // "Q", "F7", "F3[z]/(z^2 + 1)".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::FieldNode> node_;
};

// An element bundled with its field, for callers that want operator syntax.
// Mixing fields throws FieldMismatch.
class FieldElem {
 public:
  FieldElem(Field field, Coeff value);
  static FieldElem integer(const Field& field, long n) {
    return {field, field.from_int(n)};
  }
  static FieldElem rational(const Field& field, const mpq_class& q) {
    return {field, field.from_rational(q)};
  }

  const Field& field() const { return field_; }
  const Coeff& value() const { return value_; }
  bool is_zero() const { return field_.is_zero(value_); }

  FieldElem inverse() const { return {field_, field_.inv(value_)}; }
  FieldElem pow(const mpz_class& e) const { return {field_, field_.pow(value_, e)}; }
  FieldElem operator-() const { return {field_, field_.neg(value_)}; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  std::string to_string() const { return field_.format(value_); }

 private:
  Field field_;
  Coeff value_;
};

}  // namespace rhg
