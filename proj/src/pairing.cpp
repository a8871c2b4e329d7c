#include "rhg/pairing.hpp"

#include <algorithm>
#include <numeric>

#include "rhg/error.hpp"

namespace rhg {

namespace {

const std::vector<ValueOrbit>& branch_of(const SidePortrait& s, const char* side,
                                         std::vector<ValueOrbit>& storage) {
  if (!s) {
    throw PreconditionError(std::string("branch values of the inseparable map ") + side +
                            " are not enumerable");
  }
  storage = s->branch_values();
  return storage;
}

bool contains(const std::vector<ValueOrbit>& v, const ValueOrbit& o) {
  return std::find(v.begin(), v.end(), o) != v.end();
}

std::vector<ValueOrbit> sorted_unique(std::vector<ValueOrbit> v) {
  std::vector<ValueOrbit> out;
  for (auto& o : v) {
    if (!contains(out, o)) out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), orbit_less);
  return out;
}

}  // namespace

SidePortrait side_portrait(const RationalMap& f, Rng& rng) {
  if (!is_separable(f)) return std::nullopt;
  return critical_orbits(f, rng);
}

std::vector<ValueOrbit> value_orbit_union(const SidePortrait& f, const SidePortrait& g,
                                          OrbitSelector side) {
  std::vector<ValueOrbit> a, b;
  switch (side) {
    case OrbitSelector::FBranch:
      return branch_of(f, "f", a);
    case OrbitSelector::GBranch:
      return branch_of(g, "g", b);
    case OrbitSelector::Union: {
      std::vector<ValueOrbit> u = branch_of(f, "f", a);
      const auto& gb = branch_of(g, "g", b);
      u.insert(u.end(), gb.begin(), gb.end());
      return sorted_unique(std::move(u));
    }
    case OrbitSelector::Intersection: {
      std::vector<ValueOrbit> out;
      const auto& gb = branch_of(g, "g", b);
      for (const auto& o : branch_of(f, "f", a)) {
        if (contains(gb, o)) out.push_back(o);
      }
      return out;
    }
    case OrbitSelector::WildIntersection:
      if (!f && !g) throw PreconditionError("both maps are inseparable; every value is wild for both");
      return common_wild_values(f, g, Field::rationals());
  }
  throw InternalError("unknown orbit selector");
}

std::vector<ValueOrbit> value_orbit_union(const RationalMap& f, const RationalMap& g,
                                          OrbitSelector side, Rng& rng) {
  if (!(f.field() == g.field())) {
    throw FieldMismatch("f over " + f.field().name() + ", g over " + g.field().name());
  }
  return value_orbit_union(side_portrait(f, rng), side_portrait(g, rng), side);
}

std::vector<PairClass> pair_classes(const FiberProfile& f_fiber, const FiberProfile& g_fiber) {
  if (!(f_fiber.value == g_fiber.value)) {
    throw PreconditionError("fibers over different value orbits " + f_fiber.value.to_string("t") +
                            " and " + g_fiber.value.to_string("t"));
  }
  std::vector<PairClass> out;
  for (const auto& a : f_fiber.entries) {
    for (const auto& b : g_fiber.entries) {
      out.push_back({f_fiber.value, f_fiber.value_degree, a.e, b.e,
                     f_fiber.value_degree * a.points_per_root * b.points_per_root, a.at_infinity,
                     b.at_infinity});
    }
  }
  return out;
}

std::vector<PairClass> pair_classes(const RationalMap& f, const RationalMap& g,
                                    const std::vector<ValueOrbit>& orbits, Rng& rng) {
  std::vector<PairClass> out;
  for (const auto& r : orbits) {
    auto c = pair_classes(fiber_profile(f, r, rng), fiber_profile(g, r, rng));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<ValueOrbit> common_wild_values(const SidePortrait& f, const SidePortrait& g,
                                           const Field& field) {
  if (!f && !g) {
    return {ValueOrbit::from_irreducible(Poly::variable(field)), ValueOrbit::infinity()};
  }
  if (!f) return g->wild_branch_values;
  if (!g) return f->wild_branch_values;
  std::vector<ValueOrbit> out;
  for (const auto& o : f->wild_branch_values) {
    if (contains(g->wild_branch_values, o)) out.push_back(o);
  }
  return out;
}

bool wild_overlap(const SidePortrait& f, const SidePortrait& g) {
  if (!f && !g) return true;
  return !common_wild_values(f, g, Field::rationals()).empty();
}

bool wild_overlap(const RationalMap& f, const RationalMap& g, Rng& rng) {
  if (f.field().characteristic() == 0) return false;
  return wild_overlap(side_portrait(f, rng), side_portrait(g, rng));
}

FiberPointStructure fiber_point_structure(const PairClass& c, std::uint64_t characteristic) {
  const int d = std::gcd(c.e_f, c.e_g);
  if (characteristic != 0 && d % static_cast<long long>(characteristic) == 0) {
    throw HypothesisError("characteristic " + std::to_string(characteristic) +
                          " divides gcd(e_f, e_g) = " + std::to_string(d) + " over the value orbit " +
                          c.value.to_string("t") + "; the local structure is not determined");
  }
  return {d, c.e_g / d, c.e_f / d, std::lcm(c.e_f, c.e_g)};
}

FiberPointStructure fiber_point_structure(const RationalMap& f, const RationalMap& g,
                                          const PairClass& c) {
  if (!(f.field() == g.field())) {
    throw FieldMismatch("f over " + f.field().name() + ", g over " + g.field().name());
  }
  return fiber_point_structure(c, f.field().characteristic());
}

}  // namespace rhg
