#pragma once

#include <variant>
#include <vector>

#include "alder/part_set.hpp"
#include "alder/partition.hpp"

namespace alder
{

using PartitionFilter = std::variant<GapSpec, PartSetSpec>;

struct EnumerationLimits {
    Part ceiling = 400;
};

/// Brute-force enumeration of the partitions of n admitted by `filter`, in
/// reverse lexicographic order (largest first part first).
///
/// This is the oracle every DP and series result is checked against, so it
/// deliberately shares no code with them: it walks the partition tree part by
/// part and tests each candidate against the filter predicate.
std::vector<Partition> enumerate_partitions(Part n, const PartitionFilter &filter,
                                            EnumerationLimits limits = {});

/// Number of partitions enumerate_partitions would return, without storing them.
Count enumerate_count(Part n, const PartitionFilter &filter, EnumerationLimits limits = {});

} // namespace alder
