#include "alder/counting.hpp"

#include <string>

#include "alder/part_set.hpp"

namespace alder
{

namespace
{

void check_n(Part n_max)
{
    if (n_max < 0)
        throw DomainError("n must be nonnegative, got " + std::to_string(n_max));
}

} // namespace

std::vector<Count> gap_counts(Part d, Part a, Part n_max)
{
    check_n(n_max);
    if (d < 0 || a < 1)
        throw DomainError("q_d^(a) needs d >= 0 and a >= 1, got d=" + std::to_string(d) +
                          ", a=" + std::to_string(a));
    const auto size = static_cast<std::size_t>(n_max) + 1;
    std::vector<Count> result(size, 0);
    result[0] = 1;

    // at_most[m] = partitions of m into at most k parts, advanced one k at a time.
    std::vector<Count> at_most(size, 0);
    at_most[0] = 1;
    for (Part k = 1;; ++k) {
        const Part base = d * (k * (k - 1) / 2) + k * a;
        if (base > n_max)
            break;
        const Part limit = n_max - base;
        for (Part m = k; m <= limit; ++m)
            at_most[m] += at_most[m - k];
        for (Part m = 0; m <= limit; ++m)
            result[m + base] += at_most[m];
    }
    return result;
}

Count count_gap(Part n, Part d, Part a) { return gap_counts(d, a, n)[n]; }

std::vector<Count> residue_counts(const PartSetSpec &spec, Part n_max)
{
    check_n(n_max);
    spec.validate();
    const auto size = static_cast<std::size_t>(n_max) + 1;
    std::vector<Count> c(size, 0);
    c[0] = 1;
    for (Part e : spec.parts_up_to(n_max)) {
        if (spec.is_distinct(e)) {
            for (Part j = n_max; j >= e; --j)
                c[j] += c[j - e];
        } else {
            for (Part j = e; j <= n_max; ++j)
                c[j] += c[j - e];
        }
    }
    return c;
}

Count count_residue(Part n, const PartSetSpec &spec) { return residue_counts(spec, n)[n]; }

std::vector<Count> yee_counts(Part d, Part n_max) { return residue_counts(part_sets::yee(d), n_max); }

Count count_G(Part n, Part d) { return yee_counts(d, n)[n]; }

ResidueHelpers residue_helpers(Part x, Part a)
{
    if (a < 1)
        throw DomainError("modulus a must be positive, got " + std::to_string(a));
    if (x < 0)
        throw DomainError("x must be nonnegative, got " + std::to_string(x));
    const Part h = (a - x % a) % a;
    return {h, (x + h) / a};
}

Part r_index(Part d)
{
    if (d < 1)
        throw DomainError("r_d needs d >= 1, got " + std::to_string(d));
    Part r = 1;
    while ((Part{1} << (r + 1)) - 1 <= d)
        ++r;
    return r;
}

Part r_index_a(Part d, Part a)
{
    if (d < 1)
        throw DomainError("r_{d,a} needs d >= 1, got " + std::to_string(d));
    const Part k = residue_helpers(d, a).ceil;
    Part r = 0;
    while ((Part{1} << (r + 1)) - 1 <= k)
        ++r;
    return r;
}

Count delta(Part n, Part d, Part a, DeltaVariant variant)
{
    const PartSetSpec spec = part_sets::q_set(d, a, variant);
    return count_gap(n, d, a) - count_residue(n, spec);
}

} // namespace alder
