#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alder/count.hpp"
#include "alder/enumerate.hpp"
#include "alder/function.hpp"
#include "alder/report.hpp"

namespace alder
{

/// Sorted, duplicate-free set of integer parameter values.
class IntSet
{
  public:
    IntSet() = default;
    explicit IntSet(std::vector<Part> values);
    static IntSet range(Part lo, Part hi);

    /// Parses "lo..hi", "v", or comma-joined mixtures such as "1,2,91..93".
    static IntSet parse(std::string_view text);

    const std::vector<Part> &values() const { return values_; }
    bool empty() const { return values_.empty(); }
    Part min() const { return values_.front(); }
    Part max() const { return values_.back(); }

    /// Canonical text, collapsing runs: "1,2,91..93".
    std::string to_string() const;

  private:
    std::vector<Part> values_;
};

enum class FamilyId {
    alder,
    kang_park_2minus,
    a3_minus,
    general_a_minus,
    general_a_minusminus,
    conj_1_7,
    prop_3_1,
    sec7_plain,
    delta2_plain,
};

std::string_view to_string(FamilyId id);
FamilyId parse_family(std::string_view s);

/// The (lhs, rhs) pair of counting functions behind each family and its
/// documented exclusions.
struct FamilyTraits {
    FamilyId id;
    /// Families with a single admissible a report it here.
    std::optional<Part> fixed_a;
    CountingFunction lhs(Part d, Part a) const;
    CountingFunction rhs(Part d, Part a) const;
    /// True when the family's statement exempts (d, a, n).
    bool excluded(Part d, Part a, Part n) const;
    /// True when (d, a, n) is inside the range the statement speaks about.
    bool in_range(Part d, Part a, Part n) const;
    /// True when a sign change is expected somewhere and violations are data.
    bool exploratory(Part d, Part a) const;
};

FamilyTraits family_traits(FamilyId id);

struct InequalityFamily {
    FamilyId id;
    IntSet d;
    IntSet a;
    IntSet n;
};

struct ScanOptions {
    unsigned workers = 1;
    /// Count by brute-force enumeration instead of DP; refused above the ceiling.
    bool use_oracle = false;
    EnumerationLimits limits{};
};

/// Checks lhs(n) >= rhs(n) at every in-range, non-excluded point. Deterministic:
/// (d, a) cells may run in parallel but are merged in ascending order.
VerificationReport scan_family(const InequalityFamily &family, const ScanOptions &options = {});

enum class ChainId { a3_chain, strengthen_chain, genkp_chain, conditional_chain };

std::string_view to_string(ChainId id);
ChainId parse_chain(std::string_view s);

enum class Relation { ge, eq };

struct ChainLink {
    std::string name;
    std::string lhs_label;
    std::string rhs_label;
    Relation relation = Relation::ge;
    Count lhs;
    Count rhs;
    bool holds = false;
};

/// Evaluates each link of a reduction chain at one (d, a, n). Throws
/// DomainError naming the link whose hypothesis fails.
std::vector<ChainLink> check_chain(ChainId chain, Part d, Part a, Part n);

enum class TableId { table1, table2 };

std::string_view to_string(TableId id);
TableId parse_table(std::string_view s);

/// table1: i-th parts of S_d and T_{5,d} against their closed forms (d >= 31),
/// with dominance x_i >= y_i failing exactly at i = 2.
/// table2: parts of Q_d^(a,-,-) against T^a_{a,ceil(d/a)}, requiring
/// a >= 5 and d + h_d^(a) >= a*2^(a+3) - a, with dominance everywhere.
VerificationReport check_table_closed_forms(TableId table, Part d, Part a, std::size_t i_max);

/// Closed form of the i-th (1-based) element of S_d or T_{5,d}.
Part table1_x(std::size_t i, Part d);
Part table1_y(std::size_t i, Part d);
/// Closed forms of the i-th part of Q_d^(a,-,-) and of T^a_{a,k}, k = ceil(d/a).
Part table2_x(std::size_t i, Part d, Part a);
Part table2_y(std::size_t i, Part d, Part a);

enum class IdentityId {
    euler,
    rr1,
    rr2,
    schur,
    glaisher_consistency,
    monotonicity,
    delta_chain,
    lemma25,
    table3_bounds,
    sec4_series,
};

std::string_view to_string(IdentityId id);
IdentityId parse_identity(std::string_view s);

/// Largest N accepted by check_identity.
inline constexpr Part identity_cap = 5000;

VerificationReport check_identity(IdentityId id, Part n_max);

/// (1 - q^e) * sum q_2^(2)(n) q^n against sum Q_2^(3,-)(n) q^n, through the
/// series engine and through the DP counts. Only e = 2 is an identity;
/// sec4_series runs that form.
VerificationReport check_sec4_identity(Part factor_exponent, Part n_max);

enum class InjectionSuite { lemma33, glaisher, phi_d2, mod_andrews };

std::string_view to_string(InjectionSuite s);
InjectionSuite parse_injection_suite(std::string_view s);

struct InjectionSuiteParams {
    Part d = 31;        // lemma33 only
    IntSet n;           // weights of the domain (lemma33, glaisher, phi_d2)
    std::size_t instances = 1000; // mod_andrews only
    std::uint64_t seed = 1;       // mod_andrews only
};

/// Enumerates the domain of an injection and runs verify_injection on it.
/// mod_andrews instead draws random small (S, T, lambda) triples and checks
/// the weight-shift law and the shape of the image.
VerificationReport check_injection_suite(InjectionSuite suite, const InjectionSuiteParams &params);

/// Number of partitions of n with gaps >= 3 where a gap of exactly 3 never
/// joins two multiples of 3, by DP on the largest part.
std::vector<Count> schur_gap_counts(Part n_max);
bool schur_admits(const Partition &p);

/// Interval bounds for q_k^(1)(m) (lower) and rho(T^1_{a,k}; m) (upper).
struct Table3Row {
    Part m_lo;
    Part m_hi;
    Count q_lower;
    Count rho_upper;
};
std::vector<Table3Row> table3_rows(Part a, Part k);

} // namespace alder
