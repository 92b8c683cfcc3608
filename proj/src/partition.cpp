#include "alder/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace alder
{

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts))
{
    for (Part p : parts_)
        if (p < 1)
            throw DomainError("partition parts must be positive, got " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end(), std::greater<>{});
    weight_ = std::accumulate(parts_.begin(), parts_.end(), Part{0});
}

std::size_t Partition::multiplicity(Part part) const
{
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        if (!first)
            os << ',';
        first = false;
        os << parts_[i];
        if (j - i > 1)
            os << '^' << (j - i);
        i = j;
    }
    os << ')';
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Partition &p) { return os << p.to_string(); }

bool GapSpec::admits(const Partition &p) const
{
    auto parts = p.parts();
    if (parts.empty())
        return true;
    if (parts.back() < min_part)
        return false;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] - parts[i + 1] < min_gap)
            return false;
    return true;
}

} // namespace alder
