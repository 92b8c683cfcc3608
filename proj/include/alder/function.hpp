#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "alder/count.hpp"
#include "alder/enumerate.hpp"
#include "alder/part_set.hpp"

namespace alder
{

enum class FunctionKind { q, Q, Qminus, Qminusminus, rho, G };

std::string_view to_string(FunctionKind k);
FunctionKind parse_function_kind(std::string_view s);

/// A named counting function of n: q_d^(a), one of the Q variants, rho over an
/// explicit part set, or G_d^(1).
struct CountingFunction {
    FunctionKind kind = FunctionKind::q;
    Part d = 0;
    Part a = 1;
    PartSetSpec set; // rho only

    static CountingFunction gap(Part d, Part a);
    static CountingFunction residue(Part d, Part a, DeltaVariant variant);
    static CountingFunction rho(PartSetSpec spec);
    static CountingFunction yee(Part d);

    void validate() const;

    /// Filter admitted by the brute-force enumerator for this function.
    PartitionFilter filter() const;

    /// Canonical, deterministic key, e.g. "Qminus(d=28,a=1)".
    std::string descriptor() const;

    friend bool operator==(const CountingFunction &, const CountingFunction &) = default;
};

/// Counts for n = 0..n_max via the DP counters.
std::vector<Count> counts(const CountingFunction &fn, Part n_max);

/// Counts for n = 0..n_max via brute-force enumeration.
std::vector<Count> oracle_counts(const CountingFunction &fn, Part n_max,
                                 EnumerationLimits limits = {});

/// Memo of count tables keyed by descriptor. Many concurrent readers, exclusive
/// insertion; published tables are immutable.
class CountTableCache
{
  public:
    using Table = std::shared_ptr<const std::vector<Count>>;

    /// A table covering at least 0..n_max (possibly longer).
    Table get(const CountingFunction &fn, Part n_max);

    std::size_t size() const;
    void clear();

  private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, Table> tables_;
};

CountTableCache &default_cache();

} // namespace alder
