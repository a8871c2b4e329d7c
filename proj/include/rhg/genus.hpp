#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rhg/pairing.hpp"
#include "rhg/ramification.hpp"

namespace rhg {

enum class Formula { TameF, TameG, Wild, BothAgree };

// "tame-f", "tame-g", "wild", "both-agree".
std::string_view formula_tag(Formula f);

struct Hypotheses {
  bool f_tame = false;
  bool g_tame = false;
  bool f_separable = false;
  bool g_separable = false;
  bool wild_overlap = false;
};

// One pair class of the ledger, always oriented as (e_f, e_g) of the input
// maps. The contribution is signed so that sum_chi = base_term + sum of all
// contributions of the formula that produced the ledger.
struct LedgerClass {
  int e_f;
  int e_g;
  int count;
  int contribution;
  bool f_at_infinity;
  bool g_at_infinity;
};

struct LedgerEntry {
  ValueOrbit value;
  int value_degree;
  std::vector<LedgerClass> classes;
  int contribution;
};

// The base and target curves are all the projective line.
struct AmbientGenera {
  int a = 0;  // x-line
  int b = 0;  // y-line
  int d = 0;  // common target
};

enum class ComponentSource { User, CoprimeDegreeCertificate };
std::string_view component_source_tag(ComponentSource s);  // "user", "coprime-degree-certificate"

struct Components {
  int r;
  ComponentSource source;
  int genus_sum;
};

struct FormulaResult {
  Formula formula;
  int sum_chi;
};

struct GenusReport {
  int sum_chi = 0;
  Formula formula_used = Formula::TameF;
  Hypotheses hypotheses;
  std::vector<LedgerEntry> ledger;
  int base_term = 0;
  int m = 0;
  int n = 0;
  AmbientGenera ambient;
  std::vector<FormulaResult> formulas_applied;
  std::optional<Components> components;
  std::optional<int> genus;
  // Empty for an inseparable side.
  SidePortrait f_portrait;
  SidePortrait g_portrait;
};

// Requires f tame; throws HypothesisError otherwise, naming a wild orbit of f.
GenusReport sum_chi_tame(const RationalMap& f, const RationalMap& g, Rng& rng);

// Requires no common wild branch value and not both maps inseparable; throws
// HypothesisError naming the offending value orbits otherwise.
GenusReport sum_chi_wild(const RationalMap& f, const RationalMap& g, Rng& rng);

// The right side of the tame formula evaluated without checking tameness.
// Diagnostic only: for wild f it need not equal sum_chi. f must be separable.
int tame_form_rhs(const RationalMap& f, const RationalMap& g, Rng& rng);

// r = 1 when both maps are polynomials of coprime degree.
std::optional<int> coprime_degree_certificate(const RationalMap& f, const RationalMap& g);

struct EvaluateOptions {
  std::optional<int> components;
};

// Runs every applicable formula and cross-checks them (InternalError on
// disagreement). HypothesisError when none applies. A supplied component
// count that is inconsistent with sum_chi or with the certificate is a
// PreconditionError.
GenusReport evaluate(const RationalMap& f, const RationalMap& g, const EvaluateOptions& options,
                     Rng& rng);
GenusReport evaluate(const RationalMap& f, const RationalMap& g, Rng& rng);

}  // namespace rhg
