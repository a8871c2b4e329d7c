#include "rhg/cli.hpp"

#include <iomanip>
#include <sstream>

#include "rhg/error.hpp"
#include "rhg/expr.hpp"

namespace rhg {

using nlohmann::json;

namespace {

json portrait_json(const SidePortrait& p) {
  if (!p) return {{"separable", false}};
  json orbits = json::array();
  for (const auto& o : p->orbits) {
    orbits.push_back({{"point", orbit_json(o.point)}, {"e", o.e}, {"value", orbit_json(o.value)}});
  }
  json wild = json::array();
  for (const auto& v : p->wild_branch_values) wild.push_back(orbit_json(v));
  return {{"separable", true}, {"tame", p->tame}, {"orbits", orbits}, {"wild_branch_values", wild}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void portrait_text(std::ostream& os, const char* name, const char* var, const SidePortrait& p) {
  os << "portrait of " << name << ":";
  if (!p) {
    os << " inseparable (every value is a wild branch value)\n";
    return;
  }
  os << (p->tame ? " tame" : " wild") << "\n";
  for (const auto& o : p->orbits) {
    os << "  " << std::left << std::setw(24) << o.point.to_string(var) << " e = " << std::setw(3)
       << o.e << " -> " << o.value.to_string("t") << "\n";
  }
  if (p->orbits.empty()) os << "  (unramified)\n";
}

}  // namespace

json orbit_json(const Orbit& o) {
  if (o.is_infinity()) return "inf";
  json c = json::array();
  const Field& k = o.poly().field();
  for (const auto& a : o.poly().coeffs()) c.push_back(k.format(a));
  return c;
}

json report_json(const std::string& field, const RationalMap& f, const RationalMap& g,
                 const GenusReport& r, bool verbose) {
  json ledger = json::array();
  for (const auto& e : r.ledger) {
    json classes = json::array();
    for (const auto& c : e.classes) {
      json jc = {{"e_f", c.e_f}, {"e_g", c.e_g}, {"count", c.count}, {"contribution", c.contribution}};
      if (verbose) {
        jc["f_at_infinity"] = c.f_at_infinity;
        jc["g_at_infinity"] = c.g_at_infinity;
      }
      classes.push_back(jc);
    }
    ledger.push_back({{"value_orbit", orbit_json(e.value)},
                      {"degree", e.value_degree},
                      {"contribution", e.contribution},
                      {"classes", classes}});
  }
  json applied = json::array();
  for (const auto& a : r.formulas_applied) {
    applied.push_back({{"formula", formula_tag(a.formula)}, {"sum_chi", a.sum_chi}});
  }
  const Hypotheses& h = r.hypotheses;
  json out = {
      {"field", field},
      {"f", f.to_string("x")},
      {"g", g.to_string("y")},
      {"degrees", {{"m", r.m}, {"n", r.n}}},
      {"hypotheses",
       {{"f_tame", h.f_tame},
        {"g_tame", h.g_tame},
        {"f_separable", h.f_separable},
        {"g_separable", h.g_separable},
        {"wild_overlap", h.wild_overlap}}},
      {"formula_used", formula_tag(r.formula_used)},
      {"formulas_applied", applied},
      {"ambient_genera", {{"A", r.ambient.a}, {"B", r.ambient.b}, {"D", r.ambient.d}}},
      {"base_term", r.base_term},
      {"ledger", ledger},
      {"sum_chi", r.sum_chi},
      {"components", nullptr},
      {"genus", nullptr},
  };
  if (r.components) {
    out["components"] = {{"r", r.components->r},
                         {"source", component_source_tag(r.components->source)},
                         {"genus_sum", r.components->genus_sum}};
  }
  if (r.genus) out["genus"] = *r.genus;
  if (verbose) out["portraits"] = {{"f", portrait_json(r.f_portrait)}, {"g", portrait_json(r.g_portrait)}};
  return out;
}

std::string report_text(const std::string& field, const RationalMap& f, const RationalMap& g,
                        const GenusReport& r, bool verbose) {
  std::ostringstream os;
  const Hypotheses& h = r.hypotheses;
  os << "field   " << field << "\n";
  os << "f(x)    " << f.to_string("x") << "   (m = " << r.m << ")\n";
  os << "g(y)    " << g.to_string("y") << "   (n = " << r.n << ")\n";
  os << "ambient genera A = B = D = 0\n\n";
  portrait_text(os, "f", "x", r.f_portrait);
  portrait_text(os, "g", "y", r.g_portrait);
  os << "\nhypotheses: f_tame " << yes_no(h.f_tame) << ", g_tame " << yes_no(h.g_tame)
     << ", f_separable " << yes_no(h.f_separable) << ", g_separable " << yes_no(h.g_separable)
     << ", wild_overlap " << yes_no(h.wild_overlap) << "\n";
  os << "formulas:";
  for (std::size_t i = 0; i < r.formulas_applied.size(); ++i) {
    const auto& a = r.formulas_applied[i];
    os << (i ? ", " : " ") << formula_tag(a.formula) << " = " << a.sum_chi;
  }
  os << "\nformula used: " << formula_tag(r.formula_used) << "\n\n";
  os << "ledger (base term " << r.base_term << ")\n";
  for (const auto& e : r.ledger) {
    os << "  " << std::left << std::setw(28) << e.value.to_string("t") << std::right << std::setw(6)
       << e.contribution << "  ";
    for (const auto& c : e.classes) {
      os << " (" << c.e_f << "," << c.e_g << ")x" << c.count;
      if (verbose && (c.f_at_infinity || c.g_at_infinity)) {
        os << "[" << (c.f_at_infinity ? "x=inf" : "") << (c.f_at_infinity && c.g_at_infinity ? "," : "")
           << (c.g_at_infinity ? "y=inf" : "") << "]";
      }
      os << ":" << c.contribution;
    }
    os << "\n";
  }
  if (r.ledger.empty()) os << "  (no branch values)\n";
  os << "\nsum_chi " << r.sum_chi << "\n";
  if (r.components) {
    os << "components r = " << r.components->r << " (" << component_source_tag(r.components->source)
       << "), genus sum " << r.components->genus_sum << "\n";
  } else {
    os << "components not certified; supply --components to get a genus\n";
  }
  if (r.genus) os << "genus " << *r.genus << "\n";
  return os.str();
}

int run(const InputSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const Field k = parse_field(spec.field);
    RationalMap f = [&] {
      try {
        return parse_rational_expr(spec.f_expr, "x", k);
      } catch (const InternalError&) {
        throw;
      } catch (const Error& e) {
        throw PreconditionError(std::string("--f: ") + e.what());
      }
    }();
    RationalMap g = [&] {
      try {
        return parse_rational_expr(spec.g_expr, "y", k);
      } catch (const InternalError&) {
        throw;
      } catch (const Error& e) {
        throw PreconditionError(std::string("--g: ") + e.what());
      }
    }();
    EvaluateOptions opts;
    if (spec.components) {
      if (*spec.components < 1 || *spec.components > 1000000) {
        throw PreconditionError("--components must be a positive integer, got " +
                                std::to_string(*spec.components));
      }
      opts.components = static_cast<int>(*spec.components);
    }
    Rng rng(spec.seed);
    GenusReport rep = evaluate(f, g, opts, rng);
    if (spec.output_mode == OutputMode::Json) {
      out << report_json(spec.field, f, g, rep, spec.verbose).dump(2) << "\n";
    } else {
      out << report_text(spec.field, f, g, rep, spec.verbose);
    }
    return kExitOk;
  } catch (const HypothesisError& e) {
    err << "hypothesis failure: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace rhg
