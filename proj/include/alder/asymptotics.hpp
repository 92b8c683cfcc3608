#pragma once

#include <array>
#include <vector>

#include "alder/count.hpp"
#include "alder/function.hpp"

namespace alder
{

/// Root of x^d + x - 1 in (0,1).
double alpha(Part d);

/// (d/2) log^2(alpha_d) + sum_{r>=1} alpha_d^{rd} / r^2.
double A_const(Part d);

/// floor(pi^2 / (3 A_d)).
Part M_const(Part d);

struct AsymptoticConstants {
    Part d = 1;
    double alpha_d = 0.5;
    double A_d = 0;
    Part M_d = 0;
    bool boundary_sensitive = false; // pi^2/(3A_d) within 1e-8 of an integer
};

AsymptoticConstants constants(Part d);

inline constexpr std::array<Part, 12> table4_d = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 20, 100};

std::vector<AsymptoticConstants> table4();

inline constexpr Part trend_cap = 100000;

/// lhs(n) - rhs(n) for n = 0..n_max. Finite-range evidence only.
std::vector<Count> delta_trend(const CountingFunction &lhs, const CountingFunction &rhs, Part n_max);

} // namespace alder
