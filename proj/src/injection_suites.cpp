#include <chrono>
#include <random>

#include "alder/counting.hpp"
#include "alder/injections.hpp"
#include "alder/verifier.hpp"

namespace alder
{

std::string_view to_string(InjectionSuite s)
{
    switch (s) {
    case InjectionSuite::lemma33:
        return "lemma33";
    case InjectionSuite::glaisher:
        return "glaisher";
    case InjectionSuite::phi_d2:
        return "phi_d2";
    case InjectionSuite::mod_andrews:
        return "mod_andrews";
    }
    return "lemma33";
}

InjectionSuite parse_injection_suite(std::string_view s)
{
    for (auto v : {InjectionSuite::lemma33, InjectionSuite::glaisher, InjectionSuite::phi_d2,
                   InjectionSuite::mod_andrews})
        if (s == to_string(v))
            return v;
    throw DomainError("unknown injection suite '" + std::string(s) +
                      "'; expected lemma33, glaisher, phi_d2 or mod_andrews");
}

namespace
{

VerificationReport over_weights(const std::string &family, const IntSet &weights, const PartitionFilter &filter,
                                const InjectionCheck &check, bool (*keep)(const Partition &) = nullptr)
{
    std::vector<VerificationReport> parts;
    for (Part n : weights.values()) {
        auto domain = enumerate_partitions(n, filter);
        if (keep)
            std::erase_if(domain, [keep](const Partition &p) { return !keep(p); });
        parts.push_back(verify_injection(domain, check));
    }
    return merge_reports(family, "n=" + weights.to_string(), std::move(parts), false);
}

bool has_part_two(const Partition &p)
{
    return p.multiplicity(2) > 0;
}

VerificationReport mod_andrews(const InjectionSuiteParams &params)
{
    VerificationReport r;
    r.family = "mod_andrews";
    r.ranges = "instances=" + std::to_string(params.instances) + ";seed=" + std::to_string(params.seed);
    std::mt19937_64 rng(params.seed);
    auto pick = [&rng](Part lo, Part hi) { return std::uniform_int_distribution<Part>(lo, hi)(rng); };

    for (std::size_t k = 0; k < params.instances; ++k) {
        const Part a = pick(1, 5);
        const auto len = static_cast<std::size_t>(pick(1, 6));
        std::vector<Part> target{a};
        while (target.size() < len)
            target.push_back(target.back() + a * pick(1, 3));
        std::vector<Part> source;
        for (std::size_t i = 0; i < len; ++i) {
            const Part floor_i = i == 0 ? target[0] : std::max(target[i], source.back() + 1);
            source.push_back(floor_i + pick(0, 4));
        }
        MultiplicityVector lambda{source, {}};
        // the first instance is the empty partition
        for (std::size_t i = 0; k > 0 && i < len; ++i)
            if (const Part m = pick(0, 3); m > 0)
                lambda.mults[i] = m;

        ++r.points_checked;
        const Part n = lambda.weight();
        const Part h = residue_helpers(n, a).h;
        const std::string where = "a=" + std::to_string(a) + " S=" + lambda.to_partition().to_string();
        try {
            const MultiplicityVector image = phi_mod_andrews(lambda, target, a);
            Part alpha = 0;
            for (const auto &[i, m] : lambda.mults)
                alpha += m * (source[i] - target[i]);
            if (image.weight() != n + h)
                r.violations.push_back({0, a, n, image.weight(), n + h, "weight shift broken for " + where});
            if (image.at(0) != lambda.at(0) + (h + alpha) / a)
                r.violations.push_back({0, a, n, image.at(0), lambda.at(0) + (h + alpha) / a,
                                        "q_1 formula broken for " + where});
            for (std::size_t i = 1; i < len; ++i)
                if (image.at(i) != lambda.at(i))
                    r.violations.push_back({0, a, n, image.at(i), lambda.at(i),
                                            "q_" + std::to_string(i + 1) + " changed for " + where});
            const Partition shape = image.to_partition();
            for (Part part : shape.parts())
                if (part % a != 0)
                    r.violations.push_back({0, a, n, part, a, "image part not a multiple of a for " + where});
        } catch (const std::exception &e) {
            r.violations.push_back({0, a, n, 0, 0, "ill-defined for " + where + ": " + e.what()});
        }
    }
    r.settle(false);
    return r;
}

} // namespace

VerificationReport check_injection_suite(InjectionSuite suite, const InjectionSuiteParams &params)
{
    const auto start = std::chrono::steady_clock::now();
    if (suite != InjectionSuite::mod_andrews) {
        if (params.n.empty())
            throw DomainError("injection suite " + std::string(to_string(suite)) + " needs a weight range --n");
        if (params.n.min() < 0)
            throw DomainError("weights must be nonnegative");
    }
    VerificationReport r;
    switch (suite) {
    case InjectionSuite::lemma33: {
        const Part d = params.d;
        if (d < 31)
            throw DomainError("lemma33 needs d >= 31, got d=" + std::to_string(d));
        const PartSetSpec codomain = part_sets::andrews(5, d);
        InjectionCheck check{"phi_lemma33", [d](const Partition &p) { return phi_lemma33(p, d); },
                             [codomain](const Partition &p) { return codomain.admits(p); }, 0};
        r = over_weights("phi_lemma33(d=" + std::to_string(d) + ")", params.n, part_sets::s_set(d), check);
        break;
    }
    case InjectionSuite::glaisher: {
        const GapSpec distinct3{3, 1};
        InjectionCheck check{"glaisher_mod", glaisher_mod, [distinct3](const Partition &p) { return distinct3.admits(p); },
                             0};
        r = over_weights("glaisher_mod", params.n, part_sets::q_set(1, 3, DeltaVariant::minus), check);
        break;
    }
    case InjectionSuite::phi_d2: {
        const GapSpec gaps{2, 2};
        InjectionCheck check{"phi_d2", phi_d2, [gaps](const Partition &p) { return gaps.admits(p); }, -2};
        r = over_weights("phi_d2", params.n, gaps, check, &has_part_two);
        break;
    }
    case InjectionSuite::mod_andrews:
        r = mod_andrews(params);
        break;
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

} // namespace alder
