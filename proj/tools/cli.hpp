#pragma once

#include <ostream>

#include "kmm/report.hpp"

namespace kmm::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

/// Entry point of the `kmismatch` tool; writes to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// One line per alignment: "<position> <distance>" or "<position> -".
void write_report(std::ostream& out, const DistanceReport& report);

/// kOk when identical, else prints the differing positions and returns
/// kMismatch.
int compare_reports(const DistanceReport& expected, const DistanceReport& actual,
                    std::ostream& out);

}  // namespace kmm::cli
