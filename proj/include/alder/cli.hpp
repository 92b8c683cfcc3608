#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "alder/asymptotics.hpp"
#include "alder/report.hpp"
#include "alder/verifier.hpp"

namespace alder::cli
{

enum ExitCode : int { exit_pass = 0, exit_violations = 1, exit_usage = 2 };

/// Runs one partcheck invocation. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// `{family, ranges, violations[], elapsed_ms, status}` with counts as decimal
/// strings. elapsed_ms is written as 0 unless `timing` is set.
std::string report_json(const VerificationReport &report, bool timing);

/// Header plus one row per violation.
std::string report_csv(const VerificationReport &report);

std::string table4_csv(const std::vector<AsymptoticConstants> &rows);

std::string chain_csv(ChainId chain, Part d, Part a, Part n, const std::vector<ChainLink> &links, bool header);

std::string csv_field(const std::string &s);

} // namespace alder::cli
