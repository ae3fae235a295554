#pragma once

#include "tightspan/metric.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tightspan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerification = 2;

/// JSON report on a metric: tight-span f-vectors, Δ_d, and for generic
/// six-point metrics the class invariants and (S,P).
std::string analyze_report(const Metric& d);

/// Subcommands analyze, enumerate, rays, facets, decompose, export and
/// catalog-verify. Returns the process exit status. The vector form takes
/// the arguments without the program name.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tightspan
