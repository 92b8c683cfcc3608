#include <doctest.h>

#include <cmath>

#include "alder/asymptotics.hpp"

using namespace alder;

TEST_SUITE("asymptotics")
{
    TEST_CASE("alpha_d")
    {
        CHECK(alpha(1) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::abs(alpha(3) - 0.682328) < 1e-6);
        CHECK(std::abs(alpha(100) - 0.966584) < 1e-6);
        for (Part d : {1, 2, 3, 7, 50, 100, 1000}) {
            const double a = alpha(d);
            CHECK(a > 0.0);
            CHECK(a < 1.0);
            CHECK(std::abs(std::pow(a, static_cast<double>(d)) + a - 1.0) < 1e-12);
        }
        CHECK_THROWS_AS(alpha(0), DomainError);
    }

    TEST_CASE("A_d and M_d")
    {
        CHECK(std::abs(A_const(3) - 0.566433) < 1e-5);
        CHECK(std::abs(A_const(10) - 0.334683) < 1e-5);
        CHECK(std::abs(A_const(12) - 0.305958) < 1e-5);
        CHECK(M_const(3) == 5);
        CHECK(M_const(9) == 9);
        CHECK(M_const(20) == 14);
    }

    TEST_CASE("monotone over the tabulated d")
    {
        const auto rows = table4();
        REQUIRE(rows.size() == 12);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i].M_d >= rows[i - 1].M_d);
            CHECK(rows[i].A_d < rows[i - 1].A_d);
            CHECK(rows[i].A_d > 0.0);
            CHECK_FALSE(rows[i].boundary_sensitive);
        }
    }

    TEST_CASE("boundary sensitivity is flagged")
    {
        // A_1 = pi^2/12 and A_2 = pi^2/15 put pi^2/(3A) on an integer
        CHECK(constants(1).boundary_sensitive);
        CHECK(constants(2).boundary_sensitive);
    }

    TEST_CASE("delta_trend")
    {
        const auto q10 = CountingFunction::gap(10, 1);
        const auto same = delta_trend(q10, q10, 300);
        for (const auto &v : same)
            CHECK(v == 0);
        const auto trend = delta_trend(q10, CountingFunction::residue(7, 1, DeltaVariant::plain), 5000);
        REQUIRE(trend.size() == 5001);
        // (12), (11,1) against 1^12, 11+1, 9+1^3
        CHECK(trend[12] == -1);
        CHECK(trend.back() > 0);
        const auto q3 = delta_trend(CountingFunction::gap(3, 1), CountingFunction::residue(0, 1, DeltaVariant::plain), 2000);
        CHECK(q3.size() == 2001);
        CHECK_THROWS_AS(delta_trend(q10, q10, trend_cap + 1), DomainError);
    }
}
