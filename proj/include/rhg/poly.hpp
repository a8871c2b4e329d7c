#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rhg/field.hpp"

namespace rhg {

// Dense univariate polynomial over a Field. Coefficients are stored constant
// term first with no trailing zeros, so the zero polynomial has no
// coefficients and degree -1.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Coeff> coeffs);

  static Poly constant(const Field& field, Coeff c);
  static Poly monomial(const Field& field, Coeff c, std::size_t degree);
  static Poly variable(const Field& field);
  // Integer coefficients, constant term first.
  static Poly from_ints(const Field& field, std::initializer_list<long> coeffs);
  static Poly from_rationals(const Field& field, const std::vector<mpq_class>& coeffs);

  const Field& field() const { return field_; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const;
  bool is_monic() const;

  // Zero beyond the degree.
  Coeff coeff(std::size_t i) const;
  const Coeff& leading() const;

  Poly monic() const;
  Poly derivative() const;
  Poly scaled(const Coeff& c) const;
  Coeff eval(const Coeff& x) const;
  // this(inner(x)).
  Poly compose(const Poly& inner) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  // Human-readable, re-parseable form such as "x^2 - 3*x + 1/2".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();

  Field field_;
  std::vector<Coeff> coeffs_;
};

// Total order: by degree, then coefficients from the top down.
int compare(const Poly& a, const Poly& b);

// a = q*b + r with deg r < deg b. Throws ArithmeticError when b = 0.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Quotient of an exact division; throws InternalError on a nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);

// Monic gcd by Euclid. Throws PreconditionError when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

struct Bezout {
  Poly gcd;
  Poly s;
  Poly t;
};
// s*a + t*b = gcd, gcd monic.
Bezout xgcd(const Poly& a, const Poly& b);

Poly pow(const Poly& base, unsigned e);
Poly powmod(const Poly& base, const mpz_class& e, const Poly& modulus);

// x^target_degree * a(1/x). Throws PreconditionError if target_degree < deg a.
Poly reverse(const Poly& a, int target_degree);

// Reinterprets the coefficients of `a` in `target`, which must contain the
// field of `a` somewhere below it in its tower.
Poly coerce(const Poly& a, const Field& target);

// Maps a polynomial over Q into any field through from_rational. Throws
// ArithmeticError when a coefficient denominator vanishes there.
Poly reduce_into(const Poly& a, const Field& target);

// Multiplicity of the generator zeta of root_field as a root of `a`, by
// repeated exact division by (x - zeta). `a` lives over root_field or over a
// subfield of it. Throws PreconditionError for a = 0 or a prime root_field.
int multiplicity(const Poly& a, const Field& root_field);

// Yun's algorithm. Returns monic, squarefree, pairwise coprime parts with
// strictly increasing multiplicities; a = lc * prod part^mult. Characteristic
// zero only: in characteristic p use multiplicity_profile from factor.hpp.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a);

// Determinant of a square matrix with entries in K[t] by Bareiss
// fraction-free elimination; every division is exact in K[t].
Poly bareiss_determinant(std::vector<std::vector<Poly>> m);

// Resultant of two polynomials in x whose coefficients (constant first) are
// polynomials in t over a common field, via the Sylvester matrix. The formal
// degrees are a.size()-1 and b.size()-1; leading entries must be nonzero.
Poly resultant(const std::vector<Poly>& a, const std::vector<Poly>& b);

// Resultant of two polynomials over a field.
Coeff resultant(const Poly& a, const Poly& b);

}  // namespace rhg
