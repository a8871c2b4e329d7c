#include "rhg/genus.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "rhg/error.hpp"

namespace rhg {

namespace {

// "t (value 3/2)" for rational orbits, otherwise the defining polynomial.
std::string describe(const ValueOrbit& v) {
  if (v.is_infinity()) return "inf";
  std::string s = v.poly().to_string("t");
  if (v.degree() == 1) {
    const Field& k = v.poly().field();
    s += " (value " + k.format(k.neg(v.poly().coeff(0))) + ")";
  }
  return s;
}

std::string describe(const std::vector<ValueOrbit>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) s += i + 1 == vs.size() ? " and " : ", ";
    s += describe(vs[i]);
  }
  return s;
}

struct Side {
  const RationalMap& map;
  SidePortrait portrait;
  std::deque<FiberProfile> fibers;  // stable references

  bool tame() const { return portrait && portrait->tame; }
};

class Engine {
 public:
  Engine(const RationalMap& f, const RationalMap& g, Rng& rng)
      : f_{f, side_portrait(f, rng), {}}, g_{g, side_portrait(g, rng), {}}, rng_(rng) {
    if (!(f.field() == g.field())) {
      throw FieldMismatch("f over " + f.field().name() + ", g over " + g.field().name());
    }
    h_.f_separable = f_.portrait.has_value();
    h_.g_separable = g_.portrait.has_value();
    h_.f_tame = f_.tame();
    h_.g_tame = g_.tame();
    h_.wild_overlap = f.field().characteristic() != 0 && wild_overlap(f_.portrait, g_.portrait);
  }

  const Hypotheses& hypotheses() const { return h_; }
  bool wild_applies() const { return (h_.f_separable || h_.g_separable) && !h_.wild_overlap; }

  std::vector<ValueOrbit> common_wild() const {
    return common_wild_values(f_.portrait, g_.portrait, f_.map.field());
  }

  // Tame formula with `lead` as the tame side. With swapped = true the lead
  // is g and ledger classes are transposed back to (e_f, e_g).
  GenusReport tame(bool swapped, bool checked = true) {
    Side& lead = swapped ? g_ : f_;
    Side& other = swapped ? f_ : g_;
    if (!lead.portrait) throw PreconditionError(side_name(swapped) + " is inseparable");
    GenusReport rep = blank(swapped ? Formula::TameG : Formula::TameF);
    const AmbientGenera& amb = rep.ambient;
    rep.base_term = lead.map.degree() * (2 * (swapped ? amb.a : amb.b) - 2);
    for (const auto& r : lead.portrait->branch_values()) {
      LedgerEntry entry{r, r.degree(), {}, 0};
      for (const auto& c : pair_classes(fiber(lead, r), fiber(other, r))) {
        int contribution = c.pair_count * (c.e_f - std::gcd(c.e_f, c.e_g));
        push(entry, c, contribution, swapped);
      }
      rep.ledger.push_back(std::move(entry));
    }
    finish(rep, checked);
    return rep;
  }

  GenusReport wild() {
    GenusReport rep = blank(Formula::Wild);
    const AmbientGenera& amb = rep.ambient;
    const int m = f_.map.degree();
    const int n = g_.map.degree();
    rep.base_term = m * (2 * amb.b - 2) + n * (2 * amb.a - 2) - m * n * (2 * amb.d - 2);
    std::vector<ValueOrbit> orbits;
    if (!f_.portrait) {
      orbits = g_.portrait->branch_values();
    } else if (!g_.portrait) {
      orbits = f_.portrait->branch_values();
    } else {
      orbits = value_orbit_union(f_.portrait, g_.portrait, OrbitSelector::Intersection);
    }
    for (const auto& r : orbits) {
      LedgerEntry entry{r, r.degree(), {}, 0};
      for (const auto& c : pair_classes(fiber(f_, r), fiber(g_, r))) {
        const int d = std::gcd(c.e_f, c.e_g);
        push(entry, c, -c.pair_count * ((c.e_f - 1) * (c.e_g - 1) + d - 1), false);
      }
      rep.ledger.push_back(std::move(entry));
    }
    finish(rep, true);
    return rep;
  }

  std::string side_name(bool g) const {
    return std::string(g ? "g = " : "f = ") + (g ? g_.map.to_string("y") : f_.map.to_string("x"));
  }

  const SidePortrait& portrait(bool g) const { return g ? g_.portrait : f_.portrait; }

 private:
  const FiberProfile& fiber(Side& s, const ValueOrbit& r) {
    for (const auto& fp : s.fibers) {
      if (fp.value == r) return fp;
    }
    s.fibers.push_back(fiber_profile(s.map, r, rng_));
    return s.fibers.back();
  }

  GenusReport blank(Formula formula) const {
    GenusReport rep;
    rep.formula_used = formula;
    rep.hypotheses = h_;
    rep.m = f_.map.degree();
    rep.n = g_.map.degree();
    rep.f_portrait = f_.portrait;
    rep.g_portrait = g_.portrait;
    return rep;
  }

  static void push(LedgerEntry& entry, const PairClass& c, int contribution, bool swapped) {
    if (swapped) {
      entry.classes.push_back({c.e_g, c.e_f, c.pair_count, contribution, c.g_at_infinity,
                               c.f_at_infinity});
    } else {
      entry.classes.push_back({c.e_f, c.e_g, c.pair_count, contribution, c.f_at_infinity,
                               c.g_at_infinity});
    }
    entry.contribution += contribution;
  }

  static void finish(GenusReport& rep, bool checked) {
    rep.sum_chi = rep.base_term;
    for (const auto& e : rep.ledger) rep.sum_chi += e.contribution;
    if (checked && rep.sum_chi % 2 != 0) {
      throw InternalError(std::string(formula_tag(rep.formula_used)) + " formula produced the odd value " +
                          std::to_string(rep.sum_chi));
    }
    rep.formulas_applied = {{rep.formula_used, rep.sum_chi}};
  }

  Side f_;
  Side g_;
  Rng& rng_;
  Hypotheses h_;
};

std::string wild_orbit_names(const SidePortrait& p) {
  return describe(p->wild_branch_values);
}

void require_tame_f(const Engine& e) {
  if (e.hypotheses().f_tame) return;
  if (!e.hypotheses().f_separable) {
    throw HypothesisError("the tame formula needs f tame, but " + e.side_name(false) +
                          " is inseparable");
  }
  throw HypothesisError("the tame formula needs f tame, but " + e.side_name(false) +
                        " is wildly ramified over " + wild_orbit_names(e.portrait(false)));
}

std::string overlap_message(const Engine& e) {
  const Hypotheses& h = e.hypotheses();
  if (!h.f_separable && !h.g_separable) {
    return "f and g are both inseparable, so every value is a common wild branch value, e.g. " +
           describe(e.common_wild());
  }
  auto common = e.common_wild();
  return std::string(common.size() == 1 ? "common wild branch value orbit " : "common wild branch value orbits ") +
         describe(common);
}

}  // namespace

std::string_view formula_tag(Formula f) {
  switch (f) {
    case Formula::TameF: return "tame-f";
    case Formula::TameG: return "tame-g";
    case Formula::Wild: return "wild";
    case Formula::BothAgree: return "both-agree";
  }
  return "?";
}

std::string_view component_source_tag(ComponentSource s) {
  return s == ComponentSource::User ? "user" : "coprime-degree-certificate";
}

GenusReport sum_chi_tame(const RationalMap& f, const RationalMap& g, Rng& rng) {
  Engine e(f, g, rng);
  require_tame_f(e);
  return e.tame(false);
}

GenusReport sum_chi_wild(const RationalMap& f, const RationalMap& g, Rng& rng) {
  Engine e(f, g, rng);
  if (!e.wild_applies()) throw HypothesisError("the wild formula does not apply: " + overlap_message(e));
  return e.wild();
}

int tame_form_rhs(const RationalMap& f, const RationalMap& g, Rng& rng) {
  Engine e(f, g, rng);
  return e.tame(false, false).sum_chi;
}

std::optional<int> coprime_degree_certificate(const RationalMap& f, const RationalMap& g) {
  if (f.is_polynomial() && g.is_polynomial() && std::gcd(f.degree(), g.degree()) == 1) return 1;
  return std::nullopt;
}

GenusReport evaluate(const RationalMap& f, const RationalMap& g, const EvaluateOptions& options,
                     Rng& rng) {
  Engine e(f, g, rng);
  const Hypotheses& h = e.hypotheses();
  std::vector<GenusReport> runs;
  if (h.f_tame) runs.push_back(e.tame(false));
  if (h.g_tame) runs.push_back(e.tame(true));
  if (e.wild_applies()) runs.push_back(e.wild());
  if (runs.empty()) throw HypothesisError("no formula applies: " + overlap_message(e));

  std::vector<FormulaResult> applied;
  for (const auto& r : runs) applied.push_back({r.formula_used, r.sum_chi});
  for (const auto& r : applied) {
    if (r.sum_chi != applied.front().sum_chi) {
      std::string msg = "formulas disagree on f = " + f.to_string("x") + ", g = " + g.to_string("y") + ":";
      for (const auto& a : applied) msg += " " + std::string(formula_tag(a.formula)) + "=" + std::to_string(a.sum_chi);
      throw InternalError(msg);
    }
  }

  // The tame-f ledger is primary when available, then wild, then tame-g.
  auto pick = [&](Formula want) -> GenusReport* {
    for (auto& r : runs) {
      if (r.formula_used == want) return &r;
    }
    return nullptr;
  };
  GenusReport rep;
  if (GenusReport* t = pick(Formula::TameF); t && e.wild_applies()) {
    rep = std::move(*t);
    rep.formula_used = Formula::BothAgree;
  } else if (GenusReport* w = pick(Formula::Wild)) {
    rep = std::move(*w);
  } else if (GenusReport* tf = pick(Formula::TameF)) {
    rep = std::move(*tf);
  } else {
    rep = std::move(*pick(Formula::TameG));
  }
  rep.formulas_applied = std::move(applied);

  std::optional<int> cert = coprime_degree_certificate(f, g);
  if (options.components) {
    const int r = *options.components;
    if (r < 1) throw PreconditionError("--components must be positive, got " + std::to_string(r));
    if (r > std::min(rep.m, rep.n)) {
      throw PreconditionError("--components " + std::to_string(r) + " exceeds min(m, n) = " +
                              std::to_string(std::min(rep.m, rep.n)));
    }
    if (cert && *cert != r) {
      throw PreconditionError("--components " + std::to_string(r) +
                              " contradicts the coprime-degree certificate r = 1");
    }
    const int genus_sum = (rep.sum_chi + 2 * r) / 2;
    if (genus_sum < 0) {
      throw PreconditionError("--components " + std::to_string(r) + " gives a negative genus sum " +
                              std::to_string(genus_sum) + " for sum_chi " + std::to_string(rep.sum_chi));
    }
    rep.components = Components{r, ComponentSource::User, genus_sum};
  } else if (cert) {
    rep.components = Components{1, ComponentSource::CoprimeDegreeCertificate, (rep.sum_chi + 2) / 2};
    if (rep.components->genus_sum < 0) {
      throw InternalError("certified irreducible curve with sum_chi " + std::to_string(rep.sum_chi));
    }
  }
  if (rep.components && rep.components->r == 1) rep.genus = rep.components->genus_sum;
  return rep;
}

GenusReport evaluate(const RationalMap& f, const RationalMap& g, Rng& rng) {
  return evaluate(f, g, EvaluateOptions{}, rng);
}

}  // namespace rhg
