#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "rhg/field.hpp"
#include "rhg/genus.hpp"

namespace rhg {

enum class OutputMode { Report, Json };

struct InputSpec {
  std::string field;
  std::string f_expr;
  std::string g_expr;
  std::optional<long> components;
  OutputMode output_mode = OutputMode::Report;
  std::uint64_t seed = kDefaultSeed;
  bool verbose = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitHypothesis = 2;
inline constexpr int kExitInternal = 3;

// Orbit as its monic defining polynomial's coefficients (constant term
// first, exact strings) or "inf".
nlohmann::json orbit_json(const Orbit& o);

nlohmann::json report_json(const std::string& field, const RationalMap& f, const RationalMap& g,
                           const GenusReport& r, bool verbose);
std::string report_text(const std::string& field, const RationalMap& f, const RationalMap& g,
                        const GenusReport& r, bool verbose);

// Parses, evaluates and writes the report to `out`; diagnostics go to `err`.
// Returns one of the kExit* codes.
int run(const InputSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace rhg
