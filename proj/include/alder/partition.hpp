#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "alder/count.hpp"

namespace alder
{

/// A partition: weakly decreasing positive parts.
class Partition
{
  public:
    Partition() = default;

    /// Sorts the parts into canonical (descending) order. Throws DomainError on a part < 1.
    explicit Partition(std::vector<Part> parts);

    std::span<const Part> parts() const { return parts_; }
    Part weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    Part largest() const { return parts_.empty() ? 0 : parts_.front(); }
    Part smallest() const { return parts_.empty() ? 0 : parts_.back(); }

    /// Number of occurrences of `part`.
    std::size_t multiplicity(Part part) const;

    /// Compact form with exponents for repeats, e.g. "(39,1^8)"; the empty partition is "()".
    std::string to_string() const;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend std::strong_ordering operator<=>(const Partition &lhs, const Partition &rhs)
    {
        if (auto c = lhs.weight_ <=> rhs.weight_; c != 0)
            return c;
        return lhs.parts_ <=> rhs.parts_;
    }

  private:
    std::vector<Part> parts_;
    Part weight_ = 0;
};

std::ostream &operator<<(std::ostream &os, const Partition &p);

/// Partition with smallest part >= min_part and consecutive parts differing by >= min_gap.
struct GapSpec {
    Part min_part = 1;
    Part min_gap = 0;

    bool admits(const Partition &p) const;
};

} // namespace alder
