#include "alder/function.hpp"

#include <sstream>

#include "alder/counting.hpp"

namespace alder
{

std::string_view to_string(FunctionKind k)
{
    switch (k) {
    case FunctionKind::q:
        return "q";
    case FunctionKind::Q:
        return "Q";
    case FunctionKind::Qminus:
        return "Qminus";
    case FunctionKind::Qminusminus:
        return "Qminusminus";
    case FunctionKind::rho:
        return "rho";
    case FunctionKind::G:
        return "G";
    }
    return "q";
}

FunctionKind parse_function_kind(std::string_view s)
{
    for (auto k : {FunctionKind::q, FunctionKind::Q, FunctionKind::Qminus, FunctionKind::Qminusminus,
                   FunctionKind::rho, FunctionKind::G})
        if (s == to_string(k))
            return k;
    throw DomainError("unknown counting function '" + std::string(s) +
                      "'; expected one of q, Q, Qminus, Qminusminus, rho, G");
}

CountingFunction CountingFunction::gap(Part d, Part a) { return {FunctionKind::q, d, a, {}}; }

CountingFunction CountingFunction::residue(Part d, Part a, DeltaVariant variant)
{
    switch (variant) {
    case DeltaVariant::plain:
        return {FunctionKind::Q, d, a, {}};
    case DeltaVariant::minus:
        return {FunctionKind::Qminus, d, a, {}};
    case DeltaVariant::minus_minus:
        return {FunctionKind::Qminusminus, d, a, {}};
    }
    return {FunctionKind::Q, d, a, {}};
}

CountingFunction CountingFunction::rho(PartSetSpec spec)
{
    return {FunctionKind::rho, 0, 1, std::move(spec)};
}

CountingFunction CountingFunction::yee(Part d) { return {FunctionKind::G, d, 1, {}}; }

namespace
{

PartSetSpec residue_spec(const CountingFunction &fn)
{
    switch (fn.kind) {
    case FunctionKind::Q:
        return part_sets::q_set(fn.d, fn.a, DeltaVariant::plain);
    case FunctionKind::Qminus:
        return part_sets::q_set(fn.d, fn.a, DeltaVariant::minus);
    case FunctionKind::Qminusminus:
        return part_sets::q_set(fn.d, fn.a, DeltaVariant::minus_minus);
    case FunctionKind::rho:
        return fn.set;
    case FunctionKind::G:
        return part_sets::yee(fn.d);
    case FunctionKind::q:
        break;
    }
    throw InvariantViolation("gap function has no residue part set");
}

} // namespace

void CountingFunction::validate() const
{
    if (kind == FunctionKind::q) {
        if (d < 0 || a < 1)
            throw DomainError("q_d^(a) needs d >= 0 and a >= 1, got d=" + std::to_string(d) +
                              ", a=" + std::to_string(a));
        return;
    }
    residue_spec(*this).validate();
}

PartitionFilter CountingFunction::filter() const
{
    validate();
    if (kind == FunctionKind::q)
        return GapSpec{a, d};
    return residue_spec(*this);
}

std::string CountingFunction::descriptor() const
{
    std::ostringstream os;
    os << to_string(kind) << '(';
    switch (kind) {
    case FunctionKind::rho:
        os << set.descriptor();
        break;
    case FunctionKind::G:
        os << "d=" << d;
        break;
    default:
        os << "d=" << d << ",a=" << a;
        break;
    }
    os << ')';
    return os.str();
}

std::vector<Count> counts(const CountingFunction &fn, Part n_max)
{
    fn.validate();
    if (fn.kind == FunctionKind::q)
        return gap_counts(fn.d, fn.a, n_max);
    return residue_counts(residue_spec(fn), n_max);
}

std::vector<Count> oracle_counts(const CountingFunction &fn, Part n_max, EnumerationLimits limits)
{
    const PartitionFilter filter = fn.filter();
    if (n_max > limits.ceiling)
        throw CeilingExceeded("oracle counts requested up to n=" + std::to_string(n_max) +
                              " but the oracle ceiling is " + std::to_string(limits.ceiling));
    std::vector<Count> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (Part n = 0; n <= n_max; ++n)
        out.push_back(enumerate_count(n, filter, limits));
    return out;
}

CountTableCache::Table CountTableCache::get(const CountingFunction &fn, Part n_max)
{
    const std::string key = fn.descriptor();
    {
        std::shared_lock lock(mutex_);
        if (auto it = tables_.find(key);
            it != tables_.end() && static_cast<Part>(it->second->size()) > n_max)
            return it->second;
    }
    auto table = std::make_shared<const std::vector<Count>>(counts(fn, n_max));
    std::unique_lock lock(mutex_);
    auto &slot = tables_[key];
    if (!slot || slot->size() < table->size())
        slot = table;
    return slot;
}

std::size_t CountTableCache::size() const
{
    std::shared_lock lock(mutex_);
    return tables_.size();
}

void CountTableCache::clear()
{
    std::unique_lock lock(mutex_);
    tables_.clear();
}

CountTableCache &default_cache()
{
    static CountTableCache cache;
    return cache;
}

} // namespace alder
