#include "alder/counting.hpp"
#include "alder/verifier.hpp"

namespace alder
{

std::string_view to_string(ChainId id)
{
    switch (id) {
    case ChainId::a3_chain:
        return "a3_chain";
    case ChainId::strengthen_chain:
        return "strengthen_chain";
    case ChainId::genkp_chain:
        return "genkp_chain";
    case ChainId::conditional_chain:
        return "conditional_chain";
    }
    return "a3_chain";
}

ChainId parse_chain(std::string_view s)
{
    for (auto id : {ChainId::a3_chain, ChainId::strengthen_chain, ChainId::genkp_chain, ChainId::conditional_chain})
        if (s == to_string(id))
            return id;
    throw DomainError("unknown chain '" + std::string(s) +
                      "'; expected a3_chain, strengthen_chain, genkp_chain or conditional_chain");
}

namespace
{

std::string label(const char *fn, Part d, Part a, Part n)
{
    return std::string(fn) + "_" + std::to_string(d) + "^(" + std::to_string(a) + ")(" + std::to_string(n) + ")";
}

Count value(const CountingFunction &fn, Part n) { return (*default_cache().get(fn, n))[n]; }

ChainLink make_link(std::string name, Relation rel, std::string lhs_label, Count lhs, std::string rhs_label,
                    Count rhs)
{
    ChainLink link{std::move(name), std::move(lhs_label), std::move(rhs_label), rel, std::move(lhs), std::move(rhs)};
    link.holds = rel == Relation::eq ? link.lhs == link.rhs : link.lhs >= link.rhs;
    return link;
}

void require(bool ok, const std::string &link, const std::string &why)
{
    if (!ok)
        throw DomainError("chain link " + link + ": hypothesis fails (" + why + ")");
}

} // namespace

std::vector<ChainLink> check_chain(ChainId chain, Part d, Part a, Part n)
{
    require(d >= 1 && a >= 1 && n >= 1, "setup", "needs d, a, n >= 1");
    if (chain == ChainId::a3_chain)
        require(a == 3, "setup", "a3_chain fixes a = 3");
    require(n >= d + 2 * a, "gap_reduction", "needs n >= d + 2a");

    const auto [hd, k] = residue_helpers(d, a);
    const auto [hn, m] = residue_helpers(n, a);
    std::vector<ChainLink> links;

    const CountingFunction q_top = CountingFunction::gap(d, a);
    const CountingFunction q_red = CountingFunction::gap(k, 1);
    links.push_back(make_link("gap_reduction", Relation::ge, label("q", d, a, n), value(q_top, n),
                              label("q", k, 1, m), value(q_red, m)));

    if (chain == ChainId::genkp_chain) {
        const CountingFunction t1 = CountingFunction::rho(part_sets::scaled_andrews(1, a, k));
        const CountingFunction ta = CountingFunction::rho(part_sets::scaled_andrews(a, a, k));
        require(a <= d + 2, "mod_andrews", "Q_d^(a,-,-) needs a <= d+2");
        const CountingFunction qmm = CountingFunction::residue(d, a, DeltaVariant::minus_minus);
        const std::string t1_label = "rho(T^1_{" + std::to_string(a) + "," + std::to_string(k) + "};" +
                                     std::to_string(m) + ")";
        const std::string ta_label = "rho(T^" + std::to_string(a) + "_{" + std::to_string(a) + "," +
                                     std::to_string(k) + "};" + std::to_string(n + hn) + ")";
        links.push_back(make_link("andrews_yee", Relation::ge, label("q", k, 1, m), value(q_red, m), t1_label,
                                  value(t1, m)));
        links.push_back(make_link("scale_by_a", Relation::eq, t1_label, value(t1, m), ta_label, value(ta, n + hn)));
        links.push_back(make_link("mod_andrews", Relation::ge, ta_label, value(ta, n + hn),
                                  label("Qminusminus", d, a, n), value(qmm, n)));
        return links;
    }

    // strengthen / a3 compare against Q_{k-3}^(1,-); conditional against Q_{k-4}^(1,-).
    const Part shift = chain == ChainId::conditional_chain ? 4 : 3;
    if (chain == ChainId::conditional_chain)
        require(k >= 12, "alder_type", "conditional chain needs ceil(d/a) >= 12");
    else
        require(k >= shift, "alder_type", "needs ceil(d/a) >= 3");
    require(a <= d + 2, "mod_andrews", "Q_d^(a,-) needs a <= d+2");

    const Part d_mid = k - shift;
    const Part d_scaled = d + hd - 3 - (shift - 3) * a;
    const CountingFunction q_mid = CountingFunction::residue(d_mid, 1, DeltaVariant::minus);
    const CountingFunction q_scaled = CountingFunction::residue(d_scaled, a, DeltaVariant::minus);
    const CountingFunction q_bottom = CountingFunction::residue(d, a, DeltaVariant::minus);

    links.push_back(make_link("alder_type", Relation::ge, label("q", k, 1, m), value(q_red, m),
                              label("Qminus", d_mid, 1, m), value(q_mid, m)));
    links.push_back(make_link("scale_by_a", Relation::eq, label("Qminus", d_mid, 1, m), value(q_mid, m),
                              label("Qminus", d_scaled, a, n + hn), value(q_scaled, n + hn)));
    links.push_back(make_link("mod_andrews", Relation::ge, label("Qminus", d_scaled, a, n + hn),
                              value(q_scaled, n + hn), label("Qminus", d, a, n), value(q_bottom, n)));
    return links;
}

} // namespace alder
