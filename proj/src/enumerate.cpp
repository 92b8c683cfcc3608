#include "alder/enumerate.hpp"

#include <functional>
#include <type_traits>

namespace alder
{

namespace
{

void check_ceiling(Part n, const EnumerationLimits &limits)
{
    if (n < 0)
        throw DomainError("cannot enumerate partitions of negative n=" + std::to_string(n));
    if (n > limits.ceiling)
        throw CeilingExceeded("brute-force enumeration refused: n=" + std::to_string(n) +
                              " exceeds the oracle ceiling " + std::to_string(limits.ceiling) +
                              "; raise the ceiling explicitly or use the DP counters");
}

void check_filter(const PartitionFilter &filter)
{
    if (const auto *gap = std::get_if<GapSpec>(&filter)) {
        if (gap->min_part < 1 || gap->min_gap < 0)
            throw DomainError("gap filter needs min_part >= 1 and min_gap >= 0");
    } else {
        std::get<PartSetSpec>(filter).validate();
    }
}

// Depth-first walk over weakly decreasing part sequences. `largest_next(prev)`
// bounds the next part given the previous one; `usable(x)` says whether x may
// appear at all. Every completed sequence is re-checked against the filter.
class Walker
{
  public:
    Walker(const PartitionFilter &filter, std::function<void(const std::vector<Part> &)> emit)
        : filter_(filter), emit_(std::move(emit))
    {
    }

    void run(Part n)
    {
        stack_.clear();
        descend(n, n);
    }

  private:
    Part smallest_usable() const
    {
        return std::visit([](const auto &f) -> Part {
            if constexpr (std::is_same_v<std::decay_t<decltype(f)>, GapSpec>)
                return f.min_part;
            else
                return 1;
        }, filter_);
    }

    bool usable(Part x) const
    {
        return std::visit([x](const auto &f) -> bool {
            if constexpr (std::is_same_v<std::decay_t<decltype(f)>, GapSpec>)
                return x >= f.min_part;
            else
                return f.allows(x);
        }, filter_);
    }

    Part largest_next(Part prev) const
    {
        return std::visit([prev](const auto &f) -> Part {
            if constexpr (std::is_same_v<std::decay_t<decltype(f)>, GapSpec>)
                return prev - f.min_gap;
            else
                return f.is_distinct(prev) ? prev - 1 : prev;
        }, filter_);
    }

    bool accepts(const std::vector<Part> &parts) const
    {
        Partition p{parts};
        return std::visit([&p](const auto &f) { return f.admits(p); }, filter_);
    }

    void descend(Part remaining, Part cap)
    {
        if (remaining == 0) {
            if (accepts(stack_))
                emit_(stack_);
            return;
        }
        const Part lo = std::max<Part>(1, smallest_usable());
        for (Part x = std::min(remaining, cap); x >= lo; --x) {
            if (!usable(x))
                continue;
            stack_.push_back(x);
            descend(remaining - x, largest_next(x));
            stack_.pop_back();
        }
    }

    const PartitionFilter &filter_;
    std::function<void(const std::vector<Part> &)> emit_;
    std::vector<Part> stack_;
};

} // namespace

std::vector<Partition> enumerate_partitions(Part n, const PartitionFilter &filter,
                                            EnumerationLimits limits)
{
    check_ceiling(n, limits);
    check_filter(filter);
    std::vector<Partition> out;
    Walker walker(filter, [&out](const std::vector<Part> &parts) { out.emplace_back(parts); });
    walker.run(n);
    return out;
}

Count enumerate_count(Part n, const PartitionFilter &filter, EnumerationLimits limits)
{
    check_ceiling(n, limits);
    check_filter(filter);
    Count total = 0;
    Walker walker(filter, [&total](const std::vector<Part> &) { ++total; });
    walker.run(n);
    return total;
}

} // namespace alder
