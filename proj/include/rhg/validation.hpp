#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rhg/genus.hpp"
#include "rhg/ramification.hpp"

namespace rhg {

struct FamilyCase {
  std::string family;
  std::string parameters;  // e.g. "m=4 n=6"
  RationalMap f;
  RationalMap g;
  int expected_sum_chi;
  std::optional<int> expected_genus;
  // Where the expected value comes from, independent of the engine.
  std::string oracle;
};

struct FamilyResult {
  std::string family;
  int cases = 0;
  std::vector<std::string> failures;  // one diff line per failing case

  bool passed() const { return cases > 0 && failures.empty(); }
};

// "superelliptic", "hyperelliptic", "artin-schreier".
std::vector<std::string> family_tags();
// Throws PreconditionError for an unknown tag.
std::vector<FamilyCase> family_cases(const std::string& tag);
FamilyResult run_family(const std::string& tag, Rng& rng);

// Reproducible pair over Q: coefficients in [-9, 9], degrees in
// [2, max_degree], numerator and denominator coprime. Throws
// PreconditionError when max_degree < 2.
std::pair<RationalMap, RationalMap> generate_random_pair(std::uint64_t seed, int max_degree);
// Single map over Q with degree in [min_degree, max_degree].
RationalMap random_rational_map(Rng& rng, int min_degree, int max_degree);
// x -> (a x + b)/(c x + d) with small integer entries and ad - bc != 0.
RationalMap random_mobius(Rng& rng);

// Property checks. Each returns a description of the discrepancy, or nothing.
std::optional<std::string> check_dual_formula(const RationalMap& f, const RationalMap& g, Rng& rng);
std::optional<std::string> check_mobius_invariance(const RationalMap& f, const RationalMap& g,
                                                   int conjugations, Rng& rng);
std::optional<std::string> check_graph_case(const RationalMap& f, Rng& rng);
std::optional<std::string> check_fundamental_equality(const RationalMap& f, const ValueOrbit& value,
                                                      Rng& rng);
// Random value orbits: rational points, infinity, branch values and random
// irreducible orbits of degree up to 3.
std::vector<ValueOrbit> random_value_orbits(const RationalMap& f, Rng& rng);

}  // namespace rhg
