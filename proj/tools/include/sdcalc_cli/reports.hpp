#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sdcalc_cli/diagram_io.hpp"
#include "sdcalc_cli/json_io.hpp"

namespace sdcalc::cli {

/// One command's output in both formats. JSON keys are sorted by the
/// underlying map, so dumps are stable.
struct Report {
  Json json;
  std::string text;
};

struct SubstituteArgs {
  std::string op;  // blowup | stab | hayano
  std::size_t pos = 0;
  std::optional<int> exponent;
  std::optional<Int> k;
  std::optional<HClass> dual;
};

/// Shown on every report for genus >= 2.
std::string homological_banner(int genus);

Report info_report(const Diagram& d);
Report classify_report(const Diagram& d);
Report detect_report(const Diagram& d);
Report substitute_report(const Diagram& d, const SubstituteArgs& args);
Report switch_report(const Diagram& d, long long k);
Report double_report(const Diagram& d);
Report monodromy_report(const Diagram& d);
Report blf_report(const Diagram& d);
Report kirby_report(const Diagram& d, std::optional<Int> section);
Report generate_report(std::uint64_t seed, std::size_t steps);

/// `failures` empty means valid; `d` is then the normalized diagram.
Report validate_report(const DiagramFile& f, const std::optional<Diagram>& d,
                       const std::vector<ValidationFailure>& failures);

/// Both closures of `reduced`, normalized and deduplicated in S0, S1 order.
std::vector<CanonicalForm> closures_of(const SumForm& reduced);

}  // namespace sdcalc::cli
