#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rhg/ramification.hpp"

namespace rhg {

enum class OrbitSelector {
  FBranch,
  GBranch,
  Union,
  Intersection,
  // Values that are wild branch values of both maps. An inseparable map
  // counts every value as wild.
  WildIntersection,
};

// Side data for the orbit selectors: the portrait of a separable map, or
// nothing for an inseparable one.
using SidePortrait = std::optional<RamPortrait>;

SidePortrait side_portrait(const RationalMap& f, Rng& rng);

// Deduplicated, sorted by orbit_less. Throws PreconditionError when the
// branch values of an inseparable side are needed.
std::vector<ValueOrbit> value_orbit_union(const SidePortrait& f, const SidePortrait& g,
                                          OrbitSelector side);
std::vector<ValueOrbit> value_orbit_union(const RationalMap& f, const RationalMap& g,
                                          OrbitSelector side, Rng& rng);

struct PairClass {
  ValueOrbit value;
  int value_degree;
  int e_f;
  int e_g;
  // Geometric pairs (P, Q) over all roots of the value orbit.
  int pair_count;
  bool f_at_infinity = false;
  bool g_at_infinity = false;
};

// Classes for one value orbit from the two fibers above it.
std::vector<PairClass> pair_classes(const FiberProfile& f_fiber, const FiberProfile& g_fiber);
std::vector<PairClass> pair_classes(const RationalMap& f, const RationalMap& g,
                                    const std::vector<ValueOrbit>& orbits, Rng& rng);

// Wild branch values shared by f and g. When both maps are inseparable every
// value qualifies and the orbits t and inf over `field` are returned as
// witnesses.
std::vector<ValueOrbit> common_wild_values(const SidePortrait& f, const SidePortrait& g,
                                           const Field& field);
bool wild_overlap(const SidePortrait& f, const SidePortrait& g);
bool wild_overlap(const RationalMap& f, const RationalMap& g, Rng& rng);

struct FiberPointStructure {
  int point_count;  // points of the normalised fiber product above one pair
  int e_over_A;     // index over the x-line, e_g / gcd
  int e_over_B;     // index over the y-line, e_f / gcd
  int e_over_D;     // lcm(e_f, e_g)

  friend bool operator==(const FiberPointStructure&, const FiberPointStructure&) = default;
};

// Throws HypothesisError when the characteristic divides gcd(e_f, e_g); no
// structure is reported in that case.
FiberPointStructure fiber_point_structure(const PairClass& c, std::uint64_t characteristic);
FiberPointStructure fiber_point_structure(const RationalMap& f, const RationalMap& g,
                                          const PairClass& c);

}  // namespace rhg
