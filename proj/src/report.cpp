#include "alder/report.hpp"

namespace alder
{

std::string_view to_string(ReportStatus s)
{
    switch (s) {
    case ReportStatus::pass:
        return "pass";
    case ReportStatus::fail:
        return "fail";
    case ReportStatus::exploratory:
        return "exploratory";
    }
    return "fail";
}

void VerificationReport::settle(bool exploratory)
{
    if (exploratory)
        status = ReportStatus::exploratory;
    else
        status = violations.empty() ? ReportStatus::pass : ReportStatus::fail;
}

VerificationReport merge_reports(std::string family, std::string ranges,
                                 std::vector<VerificationReport> parts, bool exploratory)
{
    VerificationReport out;
    out.family = std::move(family);
    out.ranges = std::move(ranges);
    for (auto &p : parts) {
        out.points_checked += p.points_checked;
        out.elapsed += p.elapsed;
        for (auto &v : p.violations)
            out.violations.push_back(std::move(v));
    }
    out.settle(exploratory);
    return out;
}

} // namespace alder
