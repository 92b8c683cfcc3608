#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <sstream>
#include <thread>

#include "alder/counting.hpp"
#include "alder/verifier.hpp"

namespace alder
{

IntSet::IntSet(std::vector<Part> values) : values_(std::move(values))
{
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

IntSet IntSet::range(Part lo, Part hi)
{
    if (lo > hi)
        throw DomainError("empty range " + std::to_string(lo) + ".." + std::to_string(hi) +
                          "; ranges are lo..hi with lo <= hi, both inclusive");
    std::vector<Part> v;
    v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Part x = lo; x <= hi; ++x)
        v.push_back(x);
    return IntSet(std::move(v));
}

namespace
{

Part parse_int(std::string_view s, std::string_view whole)
{
    Part value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw DomainError("malformed range '" + std::string(whole) +
                          "'; expected lo..hi, a single integer, or a comma list such as 1,2,91..93");
    return value;
}

} // namespace

IntSet IntSet::parse(std::string_view text)
{
    std::vector<Part> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view item = text.substr(start, comma - start);
        if (auto dots = item.find(".."); dots != std::string_view::npos) {
            const Part lo = parse_int(item.substr(0, dots), text);
            const Part hi = parse_int(item.substr(dots + 2), text);
            const IntSet r = range(lo, hi);
            values.insert(values.end(), r.values().begin(), r.values().end());
        } else {
            values.push_back(parse_int(item, text));
        }
        start = comma + 1;
    }
    return IntSet(std::move(values));
}

std::string IntSet::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < values_.size();) {
        std::size_t j = i;
        while (j + 1 < values_.size() && values_[j + 1] == values_[j] + 1)
            ++j;
        if (i > 0)
            os << ',';
        os << values_[i];
        if (j > i + 1)
            os << ".." << values_[j];
        else if (j == i + 1)
            os << ',' << values_[j];
        i = j + 1;
    }
    return os.str();
}

std::string_view to_string(FamilyId id)
{
    switch (id) {
    case FamilyId::alder:
        return "alder";
    case FamilyId::kang_park_2minus:
        return "kang_park_2minus";
    case FamilyId::a3_minus:
        return "a3_minus";
    case FamilyId::general_a_minus:
        return "general_a_minus";
    case FamilyId::general_a_minusminus:
        return "general_a_minusminus";
    case FamilyId::conj_1_7:
        return "conj_1_7";
    case FamilyId::prop_3_1:
        return "prop_3_1";
    case FamilyId::sec7_plain:
        return "sec7_plain";
    case FamilyId::delta2_plain:
        return "delta2_plain";
    }
    return "alder";
}

FamilyId parse_family(std::string_view s)
{
    for (auto id : {FamilyId::alder, FamilyId::kang_park_2minus, FamilyId::a3_minus, FamilyId::general_a_minus,
                    FamilyId::general_a_minusminus, FamilyId::conj_1_7, FamilyId::prop_3_1, FamilyId::sec7_plain,
                    FamilyId::delta2_plain})
        if (s == to_string(id))
            return id;
    throw DomainError("unknown family '" + std::string(s) +
                      "'; expected alder, kang_park_2minus, a3_minus, general_a_minus, general_a_minusminus, "
                      "conj_1_7, prop_3_1, sec7_plain or delta2_plain");
}

FamilyTraits family_traits(FamilyId id)
{
    FamilyTraits t{id, std::nullopt};
    switch (id) {
    case FamilyId::alder:
    case FamilyId::conj_1_7:
    case FamilyId::prop_3_1:
    case FamilyId::sec7_plain:
        t.fixed_a = 1;
        break;
    case FamilyId::kang_park_2minus:
    case FamilyId::delta2_plain:
        t.fixed_a = 2;
        break;
    case FamilyId::a3_minus:
        t.fixed_a = 3;
        break;
    case FamilyId::general_a_minus:
    case FamilyId::general_a_minusminus:
        break;
    }
    return t;
}

CountingFunction FamilyTraits::lhs(Part d, Part a) const { return CountingFunction::gap(d, a); }

CountingFunction FamilyTraits::rhs(Part d, Part a) const
{
    switch (id) {
    case FamilyId::alder:
    case FamilyId::delta2_plain:
        return CountingFunction::residue(d, a, DeltaVariant::plain);
    case FamilyId::kang_park_2minus:
    case FamilyId::a3_minus:
    case FamilyId::general_a_minus:
        return CountingFunction::residue(d, a, DeltaVariant::minus);
    case FamilyId::general_a_minusminus:
        return CountingFunction::residue(d, a, DeltaVariant::minus_minus);
    case FamilyId::conj_1_7:
        return CountingFunction::residue(d - 4, 1, DeltaVariant::minus);
    case FamilyId::prop_3_1:
        return CountingFunction::residue(d - 3, 1, DeltaVariant::minus);
    case FamilyId::sec7_plain:
        return CountingFunction::residue(d - 3, 1, DeltaVariant::plain);
    }
    throw InvariantViolation("unhandled family");
}

bool FamilyTraits::excluded(Part d, Part a, Part n) const
{
    if (id != FamilyId::general_a_minus)
        return false;
    return ((d + 3) % a == 0) && n == d + 3 + a;
}

bool FamilyTraits::in_range(Part d, Part, Part n) const
{
    switch (id) {
    case FamilyId::conj_1_7:
    case FamilyId::prop_3_1:
    case FamilyId::sec7_plain:
        return n >= d + 2;
    default:
        return n >= 1;
    }
}

bool FamilyTraits::exploratory(Part d, Part a) const
{
    switch (id) {
    case FamilyId::delta2_plain:
        return true;
    case FamilyId::conj_1_7:
        return d <= 11;
    case FamilyId::prop_3_1:
        return !(d == 31 || d >= 63);
    case FamilyId::sec7_plain:
        return d < 10;
    case FamilyId::general_a_minus: {
        if (a <= 3)
            return false;
        const auto [h, k] = residue_helpers(d, a);
        return !((k == 31 || k >= 63) && h <= 3);
    }
    default:
        return false;
    }
}

namespace
{

struct Cell {
    Part d;
    Part a;
};

VerificationReport scan_cell(const FamilyTraits &traits, const Cell &cell, const IntSet &ns,
                             const ScanOptions &options)
{
    VerificationReport r;
    const CountingFunction lhs = traits.lhs(cell.d, cell.a);
    const CountingFunction rhs = traits.rhs(cell.d, cell.a);
    const Part n_max = ns.max();
    const auto lhs_counts = options.use_oracle ? oracle_counts(lhs, n_max, options.limits) : counts(lhs, n_max);
    const auto rhs_counts = options.use_oracle ? oracle_counts(rhs, n_max, options.limits) : counts(rhs, n_max);
    for (Part n : ns.values()) {
        if (n < 0 || !traits.in_range(cell.d, cell.a, n) || traits.excluded(cell.d, cell.a, n))
            continue;
        ++r.points_checked;
        const Count &l = lhs_counts[n];
        const Count &q = rhs_counts[n];
        if (l < q)
            r.violations.push_back({cell.d, cell.a, n, l, q, {}});
    }
    return r;
}

} // namespace

VerificationReport scan_family(const InequalityFamily &family, const ScanOptions &options)
{
    const auto start = std::chrono::steady_clock::now();
    const FamilyTraits traits = family_traits(family.id);
    if (family.d.empty() || family.n.empty())
        throw DomainError("scan needs nonempty d and n ranges");

    IntSet as = family.a;
    if (traits.fixed_a) {
        if (!as.empty() && as.values() != std::vector<Part>{*traits.fixed_a})
            throw DomainError("family " + std::string(to_string(family.id)) + " fixes a = " +
                              std::to_string(*traits.fixed_a) + "; drop --a or pass that value");
        as = IntSet({*traits.fixed_a});
    } else if (as.empty()) {
        throw DomainError("family " + std::string(to_string(family.id)) + " needs an a range");
    }

    std::vector<Cell> cells;
    bool exploratory = false;
    for (Part d : family.d.values())
        for (Part a : as.values()) {
            // Fail fast, before any worker starts, on parameters outside the family's domain.
            traits.lhs(d, a).validate();
            traits.rhs(d, a).validate();
            cells.push_back({d, a});
            exploratory = exploratory || traits.exploratory(d, a);
        }

    std::vector<VerificationReport> parts(cells.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(cells.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            parts[i] = scan_cell(traits, cells[i], family.n, options);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < cells.size(); i = next++)
                        parts[i] = scan_cell(traits, cells[i], family.n, options);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto &t : pool)
            t.join();
        for (auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    std::string ranges = "d=" + family.d.to_string() + ";a=" + as.to_string() + ";n=" + family.n.to_string();
    VerificationReport report =
        merge_reports(std::string(to_string(family.id)), std::move(ranges), std::move(parts), exploratory);
    // A violation in a cell the statement covers is a failure even when other cells are exploratory.
    const bool hard_violation = std::any_of(report.violations.begin(), report.violations.end(),
                                            [&](const Violation &v) { return !traits.exploratory(v.d, v.a); });
    if (hard_violation)
        report.status = ReportStatus::fail;
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace alder
