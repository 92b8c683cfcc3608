#include "alder/injections.hpp"

#include <algorithm>
#include <chrono>

#include "alder/counting.hpp"
#include "alder/part_set.hpp"

namespace alder
{

std::int64_t MultiplicityVector::at(std::size_t i) const
{
    auto it = mults.find(i);
    return it == mults.end() ? 0 : it->second;
}

Part MultiplicityVector::weight() const
{
    Part w = 0;
    for (auto [i, p] : mults)
        w += p * base_parts.at(i);
    return w;
}

Partition MultiplicityVector::to_partition() const
{
    validate();
    std::vector<Part> parts;
    for (auto [i, p] : mults)
        parts.insert(parts.end(), static_cast<std::size_t>(p), base_parts[i]);
    return Partition(std::move(parts));
}

void MultiplicityVector::validate() const
{
    for (std::size_t i = 0; i < base_parts.size(); ++i) {
        if (base_parts[i] < 1)
            throw DomainError("base part " + std::to_string(i + 1) + " is not positive");
        if (i > 0 && base_parts[i] <= base_parts[i - 1])
            throw DomainError("base parts are not strictly increasing at index " + std::to_string(i + 1));
    }
    for (auto [i, p] : mults) {
        if (i >= base_parts.size())
            throw DomainError("multiplicity index " + std::to_string(i + 1) + " beyond the part list");
        if (p < 0)
            throw DomainError("negative multiplicity at index " + std::to_string(i + 1));
    }
}

MultiplicityVector MultiplicityVector::from_partition(const Partition &p, std::vector<Part> base_parts)
{
    MultiplicityVector mv{std::move(base_parts), {}};
    for (Part part : p.parts()) {
        auto it = std::lower_bound(mv.base_parts.begin(), mv.base_parts.end(), part);
        if (it == mv.base_parts.end() || *it != part)
            throw DomainError("part " + std::to_string(part) + " is not in the base part list");
        ++mv.mults[static_cast<std::size_t>(it - mv.base_parts.begin())];
    }
    return mv;
}

MultiplicityVector phi_mod_andrews(const MultiplicityVector &lambda, std::span<const Part> target_parts,
                                   Part a)
{
    lambda.validate();
    if (a < 1)
        throw DomainError("phi_mod_andrews needs a >= 1");
    if (target_parts.empty() || target_parts.front() != a)
        throw DomainError("phi_mod_andrews needs y_1 = a = " + std::to_string(a));
    for (std::size_t i = 0; i < target_parts.size(); ++i) {
        if (target_parts[i] % a != 0)
            throw DomainError("phi_mod_andrews: a does not divide y_" + std::to_string(i + 1) + " = " +
                              std::to_string(target_parts[i]));
        if (i > 0 && target_parts[i] <= target_parts[i - 1])
            throw DomainError("phi_mod_andrews: target parts not strictly increasing at index " +
                              std::to_string(i + 1));
    }

    Part alpha = 0;
    for (auto [i, p] : lambda.mults) {
        if (i >= target_parts.size())
            throw DomainError("phi_mod_andrews: no target part y_" + std::to_string(i + 1) +
                              " supplied for a used source part");
        const Part x = lambda.base_parts[i];
        const Part y = target_parts[i];
        if (x < y)
            throw DomainError("phi_mod_andrews: x_" + std::to_string(i + 1) + " = " + std::to_string(x) +
                              " < y_" + std::to_string(i + 1) + " = " + std::to_string(y));
        alpha += p * (x - y);
    }
    const Part h = residue_helpers(lambda.weight(), a).h;
    if ((alpha + h) % a != 0)
        throw InvariantViolation("phi_mod_andrews: a does not divide alpha + h_n^(a)");

    MultiplicityVector out{std::vector<Part>(target_parts.begin(), target_parts.end()), lambda.mults};
    const Part lift = (alpha + h) / a;
    if (lift > 0)
        out.mults[0] += lift;
    return out;
}

TracedImage phi_lemma33_traced(const Partition &lambda, Part d)
{
    if (d < 31)
        throw DomainError("phi_lemma33 needs d >= 31, got d=" + std::to_string(d));
    const PartSetSpec source = part_sets::s_set(d);
    for (Part part : lambda.parts())
        if (!source.allows(part))
            throw DomainError("phi_lemma33: part " + std::to_string(part) + " is not in S_" + std::to_string(d));

    const std::size_t len = std::max<std::size_t>(6, source.parts_up_to(lambda.largest()).size());
    const std::vector<Part> xs = source.first_parts(len);
    const std::vector<Part> ys = part_sets::andrews(5, d).first_parts(len);
    const MultiplicityVector p = MultiplicityVector::from_partition(lambda, xs);

    // Indices below are 0-based: [0] is x_1 = 1, [1] is x_2 = d+1, [5] is x_6 = 3d+1.
    Part alpha = 0;
    for (auto [i, m] : p.mults)
        if (i != 1)
            alpha += m * (xs[i] - ys[i]);
    const Part p1 = p.at(0);
    const Part p2 = p.at(1);
    const Part p6 = p.at(5);

    TracedImage result;
    result.data.alpha = alpha;
    MultiplicityVector q{ys, p.mults};

    if (p1 + alpha >= p2) {
        result.branch = InjectionBranch::simple;
        q.mults[0] = p1 + alpha - p2;
    } else {
        result.branch = InjectionBranch::rebalanced;
        if (p2 < 2)
            throw InvariantViolation("phi_lemma33: case II reached with p_2 = " + std::to_string(p2));
        const Part beta = (p1 + p6) / (d - 2);
        const Part p_bar = (p1 + p6) % (d - 2);
        const int eps = static_cast<int>(p2 % 2);
        result.data.beta = beta;
        result.data.p_bar = p_bar;
        result.data.epsilon = eps;

        const Part q1_half = p2 - 2 * beta - 3 * eps;
        const Part q6_half = p2 - 2 * beta - eps;
        if (q1_half % 2 != 0 || q6_half % 2 != 0)
            throw InvariantViolation("phi_lemma33: odd numerator in case II");
        q.mults[0] = q1_half / 2 + alpha + p1 - 2 * beta;
        q.mults[1] = 2 * beta + eps;
        q.mults[5] = q6_half / 2 + p6;
    }
    for (auto it = q.mults.begin(); it != q.mults.end();) {
        if (it->second < 0)
            throw InvariantViolation("phi_lemma33: negative image multiplicity q_" +
                                     std::to_string(it->first + 1) + " for " + lambda.to_string());
        it = it->second == 0 ? q.mults.erase(it) : std::next(it);
    }
    result.image = q.to_partition();
    return result;
}

Partition phi_lemma33(const Partition &lambda, Part d) { return phi_lemma33_traced(lambda, d).image; }

Partition glaisher_mod(const Partition &lambda)
{
    std::map<Part, Part> mult;
    for (Part part : lambda.parts()) {
        if (part < 3 || part % 2 == 0)
            throw DomainError("glaisher_mod needs odd parts >= 3, got " + std::to_string(part));
        ++mult[part];
    }
    std::vector<Part> out;
    for (auto [part, m] : mult)
        for (Part bit = 0; (m >> bit) != 0; ++bit)
            if ((m >> bit) & 1)
                out.push_back(part << bit);
    return Partition(std::move(out));
}

Partition phi_d2(const Partition &lambda)
{
    if (!GapSpec{2, 2}.admits(lambda))
        throw DomainError("phi_d2 needs parts >= 2 with gaps >= 2, got " + lambda.to_string());
    if (lambda.empty() || lambda.smallest() != 2)
        throw DomainError("phi_d2 needs a part equal to 2, got " + lambda.to_string());
    auto parts = lambda.parts();
    return Partition(std::vector<Part>(parts.begin(), parts.end() - 1));
}

VerificationReport verify_injection(std::span<const Partition> domain, const InjectionCheck &check)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.family = check.name;

    std::map<Partition, const Partition *> preimage;
    for (const Partition &lambda : domain) {
        ++report.points_checked;
        auto fail = [&](std::string note) {
            report.violations.push_back({0, 0, lambda.weight(), 0, 0, std::move(note)});
        };
        Partition mu;
        try {
            mu = check.map(lambda);
        } catch (const std::exception &e) {
            fail("ill-defined at " + lambda.to_string() + ": " + e.what());
            continue;
        }
        if (mu.weight() - lambda.weight() != check.weight_shift)
            fail("weight shift " + std::to_string(mu.weight() - lambda.weight()) + " != " +
                 std::to_string(check.weight_shift) + " at " + lambda.to_string());
        if (check.in_codomain && !check.in_codomain(mu))
            fail("image " + mu.to_string() + " of " + lambda.to_string() + " is outside the codomain");
        auto [it, inserted] = preimage.emplace(mu, &lambda);
        if (!inserted)
            fail("collision: " + it->second->to_string() + " and " + lambda.to_string() + " both map to " +
                 mu.to_string());
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    report.settle(false);
    return report;
}

} // namespace alder
