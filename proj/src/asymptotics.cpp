#include "alder/asymptotics.hpp"

#include <cmath>
#include <numbers>

namespace alder
{

namespace
{

void require_positive(Part d)
{
    if (d < 1)
        throw DomainError("asymptotic constants need d >= 1, got d=" + std::to_string(d));
}

double ratio(double A)
{
    return std::numbers::pi * std::numbers::pi / (3.0 * A);
}

} // namespace

double alpha(Part d)
{
    require_positive(d);
    const double dd = static_cast<double>(d);
    auto f = [dd](double x) { return std::pow(x, dd) + x - 1.0; };
    double lo = 0.0, hi = 1.0; // f(0) = -1, f(1) = 1
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 2; ++i)
        x -= f(x) / (dd * std::pow(x, dd - 1.0) + 1.0);
    return x;
}

double A_const(Part d)
{
    const double a = alpha(d);
    const double dd = static_cast<double>(d);
    const double base = std::pow(a, dd); // = 1 - alpha
    double sum = 0.0;
    double power = 1.0;
    for (long r = 1;; ++r) {
        power *= base;
        const double r2 = static_cast<double>(r) * static_cast<double>(r);
        sum += power / r2;
        if (power * base / ((r + 1.0) * (r + 1.0) * (1.0 - base)) < 1e-14)
            break;
    }
    const double l = std::log(a);
    return 0.5 * dd * l * l + sum;
}

Part M_const(Part d)
{
    return static_cast<Part>(std::floor(ratio(A_const(d))));
}

AsymptoticConstants constants(Part d)
{
    AsymptoticConstants c;
    c.d = d;
    c.alpha_d = alpha(d);
    c.A_d = A_const(d);
    const double r = ratio(c.A_d);
    c.M_d = static_cast<Part>(std::floor(r));
    c.boundary_sensitive = std::abs(r - std::round(r)) < 1e-8;
    return c;
}

std::vector<AsymptoticConstants> table4()
{
    std::vector<AsymptoticConstants> rows;
    for (Part d : table4_d)
        rows.push_back(constants(d));
    return rows;
}

std::vector<Count> delta_trend(const CountingFunction &lhs, const CountingFunction &rhs, Part n_max)
{
    if (n_max < 0 || n_max > trend_cap)
        throw DomainError("trend range must satisfy 0 <= n_max <= " + std::to_string(trend_cap) +
                          "; split larger ranges");
    lhs.validate();
    rhs.validate();
    const auto l = default_cache().get(lhs, n_max);
    const auto r = default_cache().get(rhs, n_max);
    std::vector<Count> out(static_cast<std::size_t>(n_max) + 1);
    for (Part n = 0; n <= n_max; ++n)
        out[n] = (*l)[n] - (*r)[n];
    return out;
}

} // namespace alder
