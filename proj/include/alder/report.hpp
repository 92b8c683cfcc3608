#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "alder/count.hpp"

namespace alder
{

enum class ReportStatus { pass, fail, exploratory };

std::string_view to_string(ReportStatus s);

/// One point where lhs >= rhs (or an injection law) failed. Injection checks
/// leave d and a at zero and describe the failure in `note`.
struct Violation {
    Part d = 0;
    Part a = 0;
    Part n = 0;
    Count lhs;
    Count rhs;
    std::string note;
};

struct VerificationReport {
    std::string family;
    std::string ranges;
    std::uint64_t points_checked = 0;
    std::vector<Violation> violations;
    std::chrono::milliseconds elapsed{0};
    ReportStatus status = ReportStatus::pass;

    bool passed() const { return status != ReportStatus::fail; }

    /// pass iff no violations; exploratory reports never fail.
    void settle(bool exploratory);
};

/// Concatenate reports in the given order; the status is recomputed.
VerificationReport merge_reports(std::string family, std::string ranges,
                                 std::vector<VerificationReport> parts, bool exploratory);

} // namespace alder
