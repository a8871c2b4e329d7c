#pragma once

#include <utility>
#include <vector>

#include "rhg/field.hpp"
#include "rhg/poly.hpp"

namespace rhg {

struct Factor {
  Poly poly;  // monic irreducible
  int exponent;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// input = unit * prod poly^exponent. Factors are sorted (degree, then
// coefficients) so the result does not depend on the random choices made
// while splitting.
struct Factorization {
  Coeff unit;
  std::vector<Factor> factors;

  Poly expand(const Field& field) const;
};

// Finite fields of any tower height: squarefree split with p-th root
// extraction, distinct-degree, then Cantor-Zassenhaus equal-degree splitting
// (trace map in characteristic 2). Throws UnsupportedField for char 0.
Factorization factor_finite(const Poly& a, Rng& rng);

// Maximum number of modular factors Zassenhaus recombination will accept.
inline constexpr int kMaxModularFactors = 20;

// Zassenhaus over Q: primitive integer part, Yun split, good prime, modular
// factorisation, quadratic Hensel lifting past the Mignotte bound, subset
// recombination. Throws UnsupportedField for anything but Q and Error when
// more than kMaxModularFactors modular factors survive prime selection.
Factorization factor_rational(const Poly& a, Rng& rng);

// Dispatches on the field. Number fields are rejected with UnsupportedField.
Factorization factor(const Poly& a, Rng& rng);
Factorization factor(const Poly& a);

// Parts grouped by exponent: for each exponent e present, the monic product
// of all irreducible factors of exponent e. Exponents strictly increasing.
// Valid in every characteristic, including exponents divisible by p.
std::vector<std::pair<Poly, int>> multiplicity_profile(const Poly& a, Rng& rng);

bool is_irreducible(const Poly& a, Rng& rng);
bool is_irreducible(const Poly& a);

// Checked field extension: modulus must be monic, of degree >= 1, over
// `base`, and irreducible. Throws ReducibleModulus otherwise.
Field extend(const Field& base, const Poly& modulus);

}  // namespace rhg
