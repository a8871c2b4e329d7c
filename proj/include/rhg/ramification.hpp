#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rhg/field.hpp"
#include "rhg/poly.hpp"

namespace rhg {

// A Galois orbit of points of P^1 over the algebraic closure: the roots of a
// monic irreducible polynomial over the ground field, or the point at
// infinity. Points and values of maps use the same shape.
class Orbit {
 public:
  static Orbit infinity() { return Orbit(); }
  // Validates that `defining` is monic and irreducible.
  static Orbit finite(Poly defining);
  // For polynomials already known to be monic irreducible (factorisation
  // output). Not validated.
  static Orbit from_irreducible(Poly defining);

  bool is_infinity() const { return !poly_.has_value(); }
  const Poly& poly() const;
  // Number of geometric points in the orbit.
  int degree() const { return poly_ ? poly_->degree() : 1; }

  // "inf" or the defining polynomial in `var`.
  std::string to_string(std::string_view var) const;

  friend bool operator==(const Orbit& a, const Orbit& b);

 private:
  Orbit() = default;
  explicit Orbit(Poly p) : poly_(std::move(p)) {}

  std::optional<Poly> poly_;
};

using PointOrbit = Orbit;
using ValueOrbit = Orbit;

// Finite orbits by (degree, coefficients); infinity last.
bool orbit_less(const Orbit& a, const Orbit& b);

// A nonconstant morphism P^1 -> P^1 given as N/D with gcd(N, D) = 1 and D
// monic. Build through make_map.
class RationalMap {
 public:
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  const Field& field() const { return num_.field(); }
  int degree() const;
  bool is_polynomial() const { return den_.degree() == 0; }

  std::string to_string(std::string_view var) const;

  friend bool operator==(const RationalMap& a, const RationalMap& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RationalMap(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {}
  friend RationalMap make_map(Poly, Poly);

  Poly num_;
  Poly den_;
};

// Cancels gcd(N, D), makes D monic. Throws PreconditionError for a constant
// map and ArithmeticError for D = 0.
RationalMap make_map(Poly numerator, Poly denominator);
RationalMap make_map(Poly numerator);

// outer(inner(x)).
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

// x -> f(1/x).
RationalMap flip(const RationalMap& f);

// N'D - ND'.
Poly wronskian(const RationalMap& f);
bool is_separable(const RationalMap& f);

// Ramification index at any point of the orbit (all conjugates agree).
// Division-based, so wild indices are exact.
int ram_index(const RationalMap& f, const PointOrbit& point);

// Orbit of f(P). Throws InternalError if the resultant radical is not a
// power of a single irreducible, which would contradict Galois equivariance.
ValueOrbit image_value(const RationalMap& f, const PointOrbit& point, Rng& rng);

struct FiberEntry {
  int e;                 // ramification index
  int points_per_root;   // geometric points above each root of the value orbit
  bool at_infinity;

  friend bool operator==(const FiberEntry&, const FiberEntry&) = default;
};

// The full fiber f^{-1}(R) with multiplicities, counted above one root of R.
struct FiberProfile {
  ValueOrbit value;
  int value_degree;
  std::vector<FiberEntry> entries;

  // Sum of e * points_per_root; equals deg f (fundamental equality).
  int mass() const;
};

FiberProfile fiber_profile(const RationalMap& f, const ValueOrbit& value, Rng& rng);

struct RamifiedOrbit {
  PointOrbit point;
  int e;
  ValueOrbit value;
};

// All orbits with e >= 2 together with their images. Built for separable maps
// only.
struct RamPortrait {
  std::vector<RamifiedOrbit> orbits;
  bool separable = true;
  bool tame = true;
  std::vector<ValueOrbit> wild_branch_values;

  // Deduplicated, sorted images of the ramified orbits.
  std::vector<ValueOrbit> branch_values() const;
  // Sum over the portrait of deg(orbit) * (e - 1).
  int ramification_mass() const;
};

// Throws PreconditionError for an inseparable map.
RamPortrait critical_orbits(const RationalMap& f, Rng& rng);

}  // namespace rhg
