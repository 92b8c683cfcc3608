#include "alder/part_set.hpp"

#include <sstream>

#include "alder/counting.hpp"

namespace alder
{

namespace
{

Part mod(Part x, Part m) { return ((x % m) + m) % m; }

void join(std::ostream &os, const std::set<Part> &values)
{
    bool first = true;
    for (Part v : values) {
        if (!first)
            os << ',';
        first = false;
        os << v;
    }
}

} // namespace

void PartSetSpec::validate() const
{
    if (modulus < 1)
        throw DomainError("part set modulus must be positive, got " + std::to_string(modulus));
    if (residues.empty())
        throw DomainError("part set has no residue classes; an empty part set is not a valid spec");
    for (Part r : residues)
        if (r < 0 || r >= modulus)
            throw DomainError("residue " + std::to_string(r) + " outside [0, " +
                              std::to_string(modulus) + ")");
    for (Part r : distinct_residues)
        if (!residues.contains(r))
            throw DomainError("distinct residue " + std::to_string(r) +
                              " is not one of the allowed residues");
    for (Part e : excluded_parts)
        if (e < 1)
            throw DomainError("excluded part " + std::to_string(e) + " is not positive");
}

bool PartSetSpec::allows(Part x) const
{
    return x >= 1 && residues.contains(mod(x, modulus)) && !excluded_parts.contains(x);
}

bool PartSetSpec::is_distinct(Part x) const { return distinct_residues.contains(mod(x, modulus)); }

std::vector<Part> PartSetSpec::parts_up_to(Part max_part) const
{
    std::vector<Part> out;
    for (Part base = 0; base <= max_part; base += modulus)
        for (Part r : residues) {
            Part x = base + r;
            if (x <= max_part && allows(x))
                out.push_back(x);
        }
    return out;
}

std::vector<Part> PartSetSpec::first_parts(std::size_t count) const
{
    validate();
    std::vector<Part> out;
    out.reserve(count);
    for (Part base = 0; out.size() < count; base += modulus)
        for (Part r : residues) {
            Part x = base + r;
            if (out.size() < count && allows(x))
                out.push_back(x);
        }
    return out;
}

bool PartSetSpec::admits(const Partition &p) const
{
    auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!allows(parts[i]))
            return false;
        if (i > 0 && parts[i] == parts[i - 1] && is_distinct(parts[i]))
            return false;
    }
    return true;
}

std::string PartSetSpec::descriptor() const
{
    std::ostringstream os;
    os << "mod=" << modulus << ";res=";
    join(os, residues);
    os << ";excl=";
    join(os, excluded_parts);
    os << ";dist=";
    join(os, distinct_residues);
    return os.str();
}

std::string_view to_string(DeltaVariant v)
{
    switch (v) {
    case DeltaVariant::plain:
        return "plain";
    case DeltaVariant::minus:
        return "minus";
    case DeltaVariant::minus_minus:
        return "minus_minus";
    }
    return "plain";
}

DeltaVariant parse_delta_variant(std::string_view s)
{
    if (s == "plain")
        return DeltaVariant::plain;
    if (s == "minus")
        return DeltaVariant::minus;
    if (s == "minus_minus" || s == "minusminus")
        return DeltaVariant::minus_minus;
    throw DomainError("unknown delta variant '" + std::string(s) + "'");
}

namespace part_sets
{

PartSetSpec q_set(Part d, Part a, DeltaVariant variant)
{
    if (d < 0 || a < 1)
        throw DomainError("Q_d^(a) needs d >= 0 and a >= 1, got d=" + std::to_string(d) +
                          ", a=" + std::to_string(a));
    if (variant != DeltaVariant::plain && a > d + 2)
        throw DomainError("minus variants need 1 <= a <= d+2 (excluded part d+3-a must be positive); got d=" +
                          std::to_string(d) + ", a=" + std::to_string(a));
    const Part m = d + 3;
    PartSetSpec spec;
    spec.modulus = m;
    spec.residues = {mod(a, m), mod(-a, m)};
    if (variant != DeltaVariant::plain)
        spec.excluded_parts.insert(m - a);
    if (variant == DeltaVariant::minus_minus)
        spec.excluded_parts.insert(a);
    return spec;
}

PartSetSpec andrews(Part r, Part d)
{
    if (r < 1 || d < 1)
        throw DomainError("T_{r,d} needs r, d >= 1");
    PartSetSpec spec;
    spec.modulus = 2 * d;
    spec.residues.insert(mod(1, spec.modulus));
    for (Part j = 1; j < r; ++j)
        spec.residues.insert(mod(d + (Part{1} << j), spec.modulus));
    return spec;
}

PartSetSpec scaled_andrews(Part ell, Part a, Part d)
{
    if (ell < 1 || a < 1 || d < 1)
        throw DomainError("T^l_{a,d} needs l, a, d >= 1");
    PartSetSpec spec;
    spec.modulus = 2 * d * ell;
    spec.residues.insert(mod(ell, spec.modulus));
    for (Part j = 1; j < a; ++j)
        spec.residues.insert(mod((d + (Part{1} << j)) * ell, spec.modulus));
    return spec;
}

PartSetSpec s_set(Part d)
{
    if (d < 2)
        throw DomainError("S_d needs d >= 2");
    PartSetSpec spec;
    spec.modulus = d;
    spec.residues = {mod(1, d), mod(-1, d)};
    spec.excluded_parts = {d - 1};
    return spec;
}

PartSetSpec yee(Part d)
{
    if (d < 3)
        throw DomainError("G_d^(1) needs d >= 3 so that r_d >= 2, got d=" + std::to_string(d));
    const Part r = r_index(d);
    PartSetSpec spec = andrews(r, d);
    spec.distinct_residues.insert(mod(d + (Part{1} << (r - 1)), spec.modulus));
    return spec;
}

PartSetSpec odd_parts()
{
    PartSetSpec spec;
    spec.modulus = 2;
    spec.residues = {1};
    return spec;
}

PartSetSpec distinct_parts()
{
    PartSetSpec spec;
    spec.modulus = 1;
    spec.residues = {0};
    spec.distinct_residues = {0};
    return spec;
}

} // namespace part_sets

} // namespace alder
