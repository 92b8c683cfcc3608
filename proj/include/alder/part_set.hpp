#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "alder/count.hpp"
#include "alder/partition.hpp"

namespace alder
{

/// Allowed-part set R = {x >= 1 : x mod m in residues} \ excluded_parts.
///
/// Parts whose residue is in `distinct_residues` may appear at most once. The
/// induced set is infinite whenever `residues` is nonempty, so it is only ever
/// materialized up to a bound.
struct PartSetSpec {
    Part modulus = 1;
    std::set<Part> residues;
    std::set<Part> excluded_parts;
    std::set<Part> distinct_residues;

    /// Throws DomainError when the spec is malformed or `residues` is empty.
    void validate() const;

    bool allows(Part x) const;
    bool is_distinct(Part x) const;

    /// Allowed parts <= max_part, ascending.
    std::vector<Part> parts_up_to(Part max_part) const;

    /// The `count` smallest allowed parts, ascending (x_1, x_2, ...).
    std::vector<Part> first_parts(std::size_t count) const;

    bool admits(const Partition &p) const;

    /// Deterministic textual form, stable across runs; used for cache keys.
    std::string descriptor() const;

    friend bool operator==(const PartSetSpec &, const PartSetSpec &) = default;
};

/// Which Q-function a residue count refers to.
enum class DeltaVariant { plain, minus, minus_minus };

std::string_view to_string(DeltaVariant v);
DeltaVariant parse_delta_variant(std::string_view s);

namespace part_sets
{

/// Parts = +-a (mod d+3), with the exclusions selected by `variant`:
/// Q_d^(a), Q_d^(a,-) (drops d+3-a) or Q_d^(a,-,-) (drops a and d+3-a).
/// The minus variants require 1 <= a <= d+2.
PartSetSpec q_set(Part d, Part a, DeltaVariant variant = DeltaVariant::plain);

/// Andrews' T_{r,d}: residues 1, d+2, d+4, ..., d+2^(r-1) modulo 2d.
PartSetSpec andrews(Part r, Part d);

/// T^l_{a,d}: residues l, (d+2)l, ..., (d+2^(a-1))l modulo 2dl.
PartSetSpec scaled_andrews(Part ell, Part a, Part d);

/// S_d = {x = +-1 (mod d)} \ {d-1}; equal as a set to the parts of Q_{d-3}^(1,-).
PartSetSpec s_set(Part d);

/// Yee's hybrid set behind G_d^(1): T_{r_d - 1, d} unrestricted plus the class
/// d + 2^(r_d - 1) (mod 2d) with distinct parts. Requires d >= 3.
PartSetSpec yee(Part d);

PartSetSpec odd_parts();
PartSetSpec distinct_parts();

} // namespace part_sets

} // namespace alder
