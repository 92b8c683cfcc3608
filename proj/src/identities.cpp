#include <chrono>
#include <span>

#include "alder/counting.hpp"
#include "alder/series.hpp"
#include "alder/verifier.hpp"

namespace alder
{

std::string_view to_string(IdentityId id)
{
    switch (id) {
    case IdentityId::euler:
        return "euler";
    case IdentityId::rr1:
        return "rr1";
    case IdentityId::rr2:
        return "rr2";
    case IdentityId::schur:
        return "schur";
    case IdentityId::glaisher_consistency:
        return "glaisher_consistency";
    case IdentityId::monotonicity:
        return "monotonicity";
    case IdentityId::delta_chain:
        return "delta_chain";
    case IdentityId::lemma25:
        return "lemma25";
    case IdentityId::table3_bounds:
        return "table3_bounds";
    case IdentityId::sec4_series:
        return "sec4_series";
    }
    return "euler";
}

IdentityId parse_identity(std::string_view s)
{
    for (auto id : {IdentityId::euler, IdentityId::rr1, IdentityId::rr2, IdentityId::schur,
                    IdentityId::glaisher_consistency, IdentityId::monotonicity, IdentityId::delta_chain,
                    IdentityId::lemma25, IdentityId::table3_bounds, IdentityId::sec4_series})
        if (s == to_string(id))
            return id;
    throw DomainError("unknown identity '" + std::string(s) + "'");
}

bool schur_admits(const Partition &p)
{
    auto parts = p.parts();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const Part gap = parts[i] - parts[i + 1];
        if (gap < 3 || (gap == 3 && parts[i] % 3 == 0))
            return false;
    }
    return true;
}

std::vector<Count> schur_gap_counts(Part n_max)
{
    if (n_max < 0)
        throw DomainError("n must be nonnegative");
    if (n_max > 1500)
        throw DomainError("schur DP is quadratic in memory; n_max is capped at 1500");
    const auto size = static_cast<std::size_t>(n_max) + 1;
    // exact[n][p]: partitions of n with largest part exactly p; upto[n][p]: largest part <= p.
    std::vector<std::vector<Count>> exact(size), upto(size);
    std::vector<Count> total(size, 0);
    total[0] = 1;
    for (Part n = 1; n <= n_max; ++n) {
        exact[n].assign(static_cast<std::size_t>(n) + 1, 0);
        upto[n].assign(static_cast<std::size_t>(n) + 1, 0);
        for (Part p = 1; p <= n; ++p) {
            const Part rest = n - p;
            Count c = rest == 0 ? 1 : 0;
            if (rest > 0 && p - 3 >= 1) {
                c += upto[rest][std::min(p - 3, rest)];
                // a gap of exactly 3 below a multiple of 3 joins two multiples of 3
                if (p % 3 == 0 && p - 3 <= rest)
                    c -= exact[rest][p - 3];
            }
            exact[n][p] = c;
            upto[n][p] = upto[n][p - 1] + c;
        }
        total[n] = upto[n][n];
    }
    return total;
}

namespace
{

constexpr Part oracle_bound = 60;

void compare(VerificationReport &r, std::span<const Count> lhs, std::span<const Count> rhs, Part n_max,
             const std::string &route, Part d = 0, Part a = 0)
{
    for (Part n = 0; n <= n_max; ++n) {
        ++r.points_checked;
        if (lhs[n] != rhs[n])
            r.violations.push_back({d, a, n, lhs[n], rhs[n], route});
    }
}

std::vector<Count> oracle_table(const PartitionFilter &filter, Part n_max, bool (*extra)(const Partition &) = nullptr)
{
    std::vector<Count> out;
    for (Part n = 0; n <= n_max; ++n) {
        if (!extra) {
            out.push_back(enumerate_count(n, filter));
            continue;
        }
        Count c = 0;
        for (const auto &p : enumerate_partitions(n, filter))
            if (extra(p))
                ++c;
        out.push_back(c);
    }
    return out;
}

// gap side vs product side, three ways: DP vs DP, series vs series, DP vs enumeration.
void gap_identity(VerificationReport &r, Part d, Part a, const PartSetSpec &product, Part n_max)
{
    const auto gap = gap_counts(d, a, n_max);
    const auto prod = residue_counts(product, n_max);
    compare(r, gap, prod, n_max, "dp", d, a);
    const auto n = static_cast<std::size_t>(n_max);
    const TruncatedSeries sum = gap_sum_series(d, a, n);
    const TruncatedSeries prod_series = product_series(product, n);
    compare(r, sum.coefficients(), prod_series.coefficients(), n_max, "series", d, a);
    compare(r, gap, sum.coefficients(), n_max, "dp-vs-series", d, a);
    const Part lim = std::min(n_max, oracle_bound);
    compare(r, oracle_table(GapSpec{a, d}, lim), oracle_table(product, lim), lim, "enumeration", d, a);
}

void euler(VerificationReport &r, Part n_max)
{
    const auto odd = part_sets::odd_parts();
    const auto dist = part_sets::distinct_parts();
    const auto n = static_cast<std::size_t>(n_max);
    compare(r, residue_counts(odd, n_max), residue_counts(dist, n_max), n_max, "dp");
    compare(r, product_series(odd, n).coefficients(), product_series(dist, n).coefficients(), n_max, "series");
    const Part lim = std::min(n_max, oracle_bound);
    compare(r, oracle_table(odd, lim), oracle_table(dist, lim), lim, "enumeration");
}

void schur(VerificationReport &r, Part n_max)
{
    PartSetSpec pm1_mod6;
    pm1_mod6.modulus = 6;
    pm1_mod6.residues = {1, 5};
    const auto gap = schur_gap_counts(n_max);
    compare(r, gap, residue_counts(pm1_mod6, n_max), n_max, "dp", 3, 1);
    compare(r, gap, product_series(pm1_mod6, static_cast<std::size_t>(n_max)).coefficients(), n_max,
            "dp-vs-series", 3, 1);
    const Part lim = std::min<Part>(n_max, 100);
    compare(r, oracle_table(GapSpec{1, 3}, lim, &schur_admits), oracle_table(pm1_mod6, lim), lim, "enumeration", 3,
            1);
}

void glaisher_consistency(VerificationReport &r, Part n_max)
{
    // odd parts >= 3 are equinumerous with distinct parts that are not powers of two,
    // and both are dominated by distinct parts >= 3 (= q_1^(3)).
    const auto odd3 = residue_counts(part_sets::q_set(1, 3, DeltaVariant::minus), n_max);
    PartSetSpec no_pow2 = part_sets::distinct_parts();
    for (Part p = 1; p <= n_max; p *= 2)
        no_pow2.excluded_parts.insert(p);
    const auto image = residue_counts(no_pow2, n_max);
    const auto distinct3 = gap_counts(1, 3, n_max);
    compare(r, odd3, image, n_max, "odd>=3 vs distinct non-powers-of-two");
    for (Part n = 0; n <= n_max; ++n) {
        ++r.points_checked;
        if (odd3[n] > distinct3[n])
            r.violations.push_back({1, 3, n, distinct3[n], odd3[n], "q_1^(3) < Q_1^(3,-)"});
    }
}

void monotonicity(VerificationReport &r, Part n_max)
{
    for (Part d : {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 31, 63}) {
        const auto q = gap_counts(d, 1, n_max);
        const auto Q = residue_counts(part_sets::q_set(d - 3, 1, DeltaVariant::minus), n_max);
        for (Part n = 0; n < n_max; ++n) {
            r.points_checked += 2;
            if (q[n + 1] < q[n])
                r.violations.push_back({d, 1, n + 1, q[n + 1], q[n], "q_d^(1) decreases"});
            if (Q[n + 1] < Q[n])
                r.violations.push_back({d, 1, n + 1, Q[n + 1], Q[n], "Q_{d-3}^(1,-) decreases"});
        }
    }
}

void delta_chain(VerificationReport &r, Part n_max)
{
    for (Part d = 1; d <= 12; ++d)
        for (Part a = 1; a <= std::min<Part>(5, d + 2); ++a) {
            const auto q = gap_counts(d, a, n_max);
            const auto plain = residue_counts(part_sets::q_set(d, a, DeltaVariant::plain), n_max);
            const auto minus = residue_counts(part_sets::q_set(d, a, DeltaVariant::minus), n_max);
            const auto mm = residue_counts(part_sets::q_set(d, a, DeltaVariant::minus_minus), n_max);
            for (Part n = 0; n <= n_max; ++n) {
                ++r.points_checked;
                const Count d0 = q[n] - plain[n];
                const Count d1 = q[n] - minus[n];
                const Count d2 = q[n] - mm[n];
                if (d2 < d1)
                    r.violations.push_back({d, a, n, d2, d1, "Delta^(a,-,-) < Delta^(a,-)"});
                if (d1 < d0)
                    r.violations.push_back({d, a, n, d1, d0, "Delta^(a,-) < Delta^(a)"});
            }
        }
}

void lemma25(VerificationReport &r, Part n_max)
{
    for (Part a = 1; a <= 6; ++a)
        for (Part j = 3; j <= 8; ++j) {
            const Part d = a * j - 3;
            if (d < 1)
                continue;
            for (auto variant : {DeltaVariant::minus, DeltaVariant::minus_minus}) {
                const auto big = residue_counts(part_sets::q_set(d, a, variant), a * n_max);
                const auto small = residue_counts(part_sets::q_set(j - 3, 1, variant), n_max);
                const std::string tag = std::string(to_string(variant));
                for (Part m = 0; m <= a * n_max; ++m) {
                    ++r.points_checked;
                    if (m % a == 0) {
                        if (big[m] != small[m / a])
                            r.violations.push_back({d, a, m, big[m], small[m / a], tag + " scaling"});
                    } else if (big[m] != 0) {
                        r.violations.push_back({d, a, m, big[m], 0, tag + " nonzero off multiples of a"});
                    }
                }
            }
        }
}

void table3(VerificationReport &r)
{
    for (Part a : {5, 6, 7})
        for (Part k : {(Part{1} << (a + 3)) - 1, (Part{1} << (a + 3)) + 8}) {
            const auto rows = table3_rows(a, k);
            const Part m_max = rows.back().m_hi;
            const auto q = gap_counts(k, 1, m_max);
            const auto rho = residue_counts(part_sets::scaled_andrews(1, a, k), m_max);
            for (const auto &row : rows)
                for (Part m = row.m_lo; m <= row.m_hi; ++m) {
                    r.points_checked += 2;
                    if (q[m] < row.q_lower)
                        r.violations.push_back({k, a, m, q[m], row.q_lower, "q_k^(1)(m) below its lower bound"});
                    if (rho[m] > row.rho_upper)
                        r.violations.push_back({k, a, m, rho[m], row.rho_upper, "rho(T^1_{a,k}; m) above its upper bound"});
                }
        }
}

} // namespace

std::vector<Table3Row> table3_rows(Part a, Part k)
{
    if (a < 1 || k < 1)
        throw DomainError("table3 rows need a, k >= 1");
    const Part p2 = Part{1} << (a + 2);
    return {
        {2 * k + 6, 3 * k + 1, Count(p2 + 3), Count(1 + a * (a + 1) / 2)},
        {3 * k + 1, 4 * k + 1, Count(2 * p2), Count(2 * a + a * (a + 1) * (2 * a + 1) / 6)},
        {4 * k + 1, 5 * k + 1, Count(3 * p2), Count(2 + a * (a - 1) + a * (a + 1) / 2 + a * a * (a + 1) * (a + 1) / 4)},
    };
}

VerificationReport check_sec4_identity(Part factor_exponent, Part n_max)
{
    if (n_max < 0 || n_max > identity_cap)
        throw DomainError("N must lie in [0, " + std::to_string(identity_cap) + "]");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.family = "sec4_series(1-q^" + std::to_string(factor_exponent) + ")";
    r.ranges = "n=0.." + std::to_string(n_max);
    const auto n = static_cast<std::size_t>(n_max);
    const PartSetSpec target = part_sets::q_set(2, 3, DeltaVariant::minus);

    const TruncatedSeries lhs = series_binomial_factor(gap_sum_series(2, 2, n), factor_exponent, -1);
    compare(r, lhs.coefficients(), product_series(target, n).coefficients(), n_max, "series", 2, 3);

    const auto q = gap_counts(2, 2, n_max);
    const auto Q = residue_counts(target, n_max);
    std::vector<Count> diff(q.size());
    for (Part i = 0; i <= n_max; ++i)
        diff[i] = q[i] - (i >= factor_exponent ? q[i - factor_exponent] : Count(0));
    compare(r, diff, Q, n_max, "dp", 2, 3);

    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    r.settle(false);
    return r;
}

VerificationReport check_identity(IdentityId id, Part n_max)
{
    if (n_max < 0 || n_max > identity_cap)
        throw DomainError("identity checks take 0 <= N <= " + std::to_string(identity_cap) + ", got " +
                          std::to_string(n_max));
    if (id == IdentityId::sec4_series) {
        VerificationReport r = check_sec4_identity(2, n_max);
        r.family = "sec4_series";
        return r;
    }
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.family = std::string(to_string(id));
    r.ranges = "n=0.." + std::to_string(n_max);
    switch (id) {
    case IdentityId::euler:
        euler(r, n_max);
        break;
    case IdentityId::rr1:
        gap_identity(r, 2, 1, part_sets::q_set(2, 1), n_max);
        break;
    case IdentityId::rr2:
        gap_identity(r, 2, 2, part_sets::q_set(2, 2), n_max);
        break;
    case IdentityId::schur:
        schur(r, n_max);
        break;
    case IdentityId::glaisher_consistency:
        glaisher_consistency(r, n_max);
        break;
    case IdentityId::monotonicity:
        monotonicity(r, n_max);
        break;
    case IdentityId::delta_chain:
        delta_chain(r, n_max);
        break;
    case IdentityId::lemma25:
        lemma25(r, n_max);
        break;
    case IdentityId::table3_bounds:
        r.ranges = "a=5..7;k=2^(a+3)-1,2^(a+3)+8;m=2k+6..5k+1";
        table3(r);
        break;
    case IdentityId::sec4_series:
        break;
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    r.settle(false);
    return r;
}

} // namespace alder
