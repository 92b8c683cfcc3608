#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "alder/count.hpp"
#include "alder/partition.hpp"
#include "alder/report.hpp"

namespace alder
{

/// Multiplicities relative to an ordered part list. Index 0 is the smallest
/// part x_1; only nonzero multiplicities are stored.
struct MultiplicityVector {
    std::vector<Part> base_parts;
    std::map<std::size_t, std::int64_t> mults;

    std::int64_t at(std::size_t i) const;
    Part weight() const;
    Partition to_partition() const;

    /// Throws DomainError when base_parts is not strictly increasing, a
    /// multiplicity is negative, or an index is out of range.
    void validate() const;

    /// Throws DomainError if some part of `p` is not in `base_parts`.
    static MultiplicityVector from_partition(const Partition &p, std::vector<Part> base_parts);
};

/// Andrews' comparison map shifted for a target set whose parts are all
/// multiples of a, with y_1 = a.
///
/// With alpha = sum p_i (x_i - y_i) and h = h_n^(a), the image has
/// q_1 = p_1 + (h + alpha)/a and q_i = p_i otherwise, so its weight is n + h.
/// `lambda.base_parts` is S; `target_parts` is the prefix y_1, y_2, ... of T.
MultiplicityVector phi_mod_andrews(const MultiplicityVector &lambda, std::span<const Part> target_parts,
                                   Part a);

enum class InjectionBranch { simple, rebalanced };

struct InjectionCaseData {
    Part alpha = 0;
    Part beta = 0;
    Part p_bar = 0;
    int epsilon = 0;
};

struct TracedImage {
    Partition image;
    InjectionBranch branch = InjectionBranch::simple;
    InjectionCaseData data;
};

/// Weight-preserving injection from partitions into S_d = {+-1 mod d} \ {d-1}
/// to partitions into T_{5,d}, for d >= 31.
///
/// Case I (p_1 + alpha >= p_2) moves the excess onto the part 1. Case II
/// splits on beta = (p_1 + p_6) div (d-2) and the parity epsilon of p_2 and
/// moves copies of d+1 onto 2d+1 and d+2. The alpha here skips i = 2, the one
/// index where x_i < y_i.
TracedImage phi_lemma33_traced(const Partition &lambda, Part d);
Partition phi_lemma33(const Partition &lambda, Part d);

/// Glaisher's binary split restricted to odd parts >= 3: a part v of
/// multiplicity sum 2^j becomes the distinct parts 2^j v.
Partition glaisher_mod(const Partition &lambda);

/// Drops the trailing part 2 of a partition with parts >= 2 and gaps >= 2.
Partition phi_d2(const Partition &lambda);

struct InjectionCheck {
    std::string name;
    std::function<Partition(const Partition &)> map;
    std::function<bool(const Partition &)> in_codomain;
    Part weight_shift = 0;
};

/// Runs `check.map` over the whole domain and reports ill-defined images,
/// images outside the codomain, wrong weight shifts and colliding pairs.
VerificationReport verify_injection(std::span<const Partition> domain, const InjectionCheck &check);

} // namespace alder
