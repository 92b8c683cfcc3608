#pragma once

#include <vector>

#include "alder/count.hpp"
#include "alder/part_set.hpp"

namespace alder
{

// Dynamic-programming counters. Every table function returns counts for
// n = 0..n_max inclusive; the scalar forms evaluate a single n.

/// q_d^(a)(n) for n = 0..n_max by the staircase transform: a k-part gap
/// partition minus (d*C(k,2) + k*a) is a partition into at most k parts.
std::vector<Count> gap_counts(Part d, Part a, Part n_max);
Count count_gap(Part n, Part d, Part a);

/// rho(R; n) for the part set described by `spec` (bounded-coin DP).
std::vector<Count> residue_counts(const PartSetSpec &spec, Part n_max);
Count count_residue(Part n, const PartSetSpec &spec);

/// G_d^(1)(n); throws DomainError for d < 3.
std::vector<Count> yee_counts(Part d, Part n_max);
Count count_G(Part n, Part d);

/// h = least nonnegative residue of -x modulo a, and ceil(x/a) = (x+h)/a.
struct ResidueHelpers {
    Part h;
    Part ceil;
};
ResidueHelpers residue_helpers(Part x, Part a);

/// Largest r >= 1 with 2^r - 1 <= d.
Part r_index(Part d);

/// Largest r >= 0 with 2^r - 1 <= ceil(d/a).
Part r_index_a(Part d, Part a);

/// q_d^(a)(n) minus the Q-function selected by `variant`. May be negative.
Count delta(Part n, Part d, Part a, DeltaVariant variant);

} // namespace alder
