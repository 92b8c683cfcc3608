#include <doctest.h>

#include <algorithm>

#include "alder/counting.hpp"
#include "alder/enumerate.hpp"
#include "alder/function.hpp"
#include "alder/part_set.hpp"

using namespace alder;

namespace
{

std::vector<std::string> shapes(const std::vector<Partition> &ps)
{
    std::vector<std::string> out;
    for (const auto &p : ps)
        out.push_back(p.to_string());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_SUITE("partition")
{
    TEST_CASE("canonical descending form")
    {
        const Partition p({1, 3, 1, 2});
        CHECK(p.to_string() == "(3,2,1^2)");
        CHECK(p.weight() == 7);
        CHECK(p.length() == 4);
        CHECK(p.largest() == 3);
        CHECK(p.smallest() == 1);
        CHECK(p.multiplicity(1) == 2);
        CHECK(p.multiplicity(5) == 0);
        CHECK(Partition{}.weight() == 0);
        CHECK(Partition{}.empty());
    }

    TEST_CASE("nonpositive parts are rejected")
    {
        CHECK_THROWS_AS(Partition({3, 0}), DomainError);
        CHECK_THROWS_AS(Partition({-1}), DomainError);
    }

    TEST_CASE("gap spec admission")
    {
        const GapSpec g{2, 2};
        CHECK(g.admits(Partition({7, 3})));
        CHECK_FALSE(g.admits(Partition({6, 5})));
        CHECK_FALSE(g.admits(Partition({9, 1})));
        CHECK(g.admits(Partition{}));
    }
}

TEST_SUITE("part sets")
{
    TEST_CASE("delta variants exclude d+3-a and a")
    {
        const auto plain = part_sets::q_set(12, 3);
        const auto minus = part_sets::q_set(12, 3, DeltaVariant::minus);
        const auto mm = part_sets::q_set(12, 3, DeltaVariant::minus_minus);
        CHECK(plain.allows(3));
        CHECK(plain.allows(12));
        CHECK(minus.allows(3));
        CHECK_FALSE(minus.allows(12));
        CHECK(minus.allows(27));
        CHECK_FALSE(mm.allows(3));
        CHECK_FALSE(mm.allows(12));
        CHECK(mm.allows(18));
    }

    TEST_CASE("first parts of S_31 and T_{5,31}")
    {
        CHECK(part_sets::s_set(31).first_parts(6) == std::vector<Part>{1, 32, 61, 63, 92, 94});
        CHECK(part_sets::andrews(5, 31).first_parts(6) == std::vector<Part>{1, 33, 35, 39, 47, 63});
    }

    TEST_CASE("invalid specs are refused with a reason")
    {
        PartSetSpec empty;
        empty.modulus = 5;
        CHECK_THROWS_AS(empty.validate(), DomainError);
        PartSetSpec bad;
        bad.modulus = 5;
        bad.residues = {1};
        bad.distinct_residues = {2};
        CHECK_THROWS_AS(bad.validate(), DomainError);
        CHECK_THROWS_AS(part_sets::q_set(5, 9, DeltaVariant::minus), DomainError);
        CHECK_THROWS_AS(part_sets::yee(2), DomainError);
    }

    TEST_CASE("descriptors are deterministic")
    {
        CHECK(part_sets::q_set(28, 1, DeltaVariant::minus).descriptor() ==
              part_sets::q_set(28, 1, DeltaVariant::minus).descriptor());
        CHECK(CountingFunction::residue(28, 1, DeltaVariant::minus).descriptor() == "Qminus(d=28,a=1)");
        CHECK(CountingFunction::gap(2, 2).descriptor() != CountingFunction::residue(2, 2, DeltaVariant::plain).descriptor());
    }
}

TEST_SUITE("enumerate_partitions")
{
    TEST_CASE("n = 0 gives only the empty partition")
    {
        const auto ps = enumerate_partitions(0, GapSpec{3, 5});
        REQUIRE(ps.size() == 1);
        CHECK(ps.front().empty());
        CHECK(enumerate_partitions(0, part_sets::odd_parts()).size() == 1);
    }

    TEST_CASE("p(4) = 5")
    {
        CHECK(shapes(enumerate_partitions(4, GapSpec{1, 0})) ==
              std::vector<std::string>{"(1^4)", "(2,1^2)", "(2^2)", "(3,1)", "(4)"});
    }

    TEST_CASE("n = 10 with parts >= 2 and gaps >= 2")
    {
        CHECK(shapes(enumerate_partitions(10, GapSpec{2, 2})) ==
              std::vector<std::string>{"(10)", "(6,4)", "(7,3)", "(8,2)"});
    }

    TEST_CASE("the ceiling is enforced and named")
    {
        CHECK_THROWS_AS(enumerate_partitions(401, GapSpec{1, 0}), CeilingExceeded);
        CHECK_THROWS_WITH_AS(enumerate_count(50, GapSpec{1, 0}, EnumerationLimits{40}),
                             doctest::Contains("40"), CeilingExceeded);
        CHECK_THROWS_AS(enumerate_partitions(-1, GapSpec{1, 0}), DomainError);
    }
}

TEST_SUITE("counting")
{
    TEST_CASE("count_gap examples")
    {
        CHECK(count_gap(33, 31, 1) == 2);
        CHECK(count_gap(0, 31, 1) == 1);
        CHECK(count_gap(0, 4, 7) == 1);
        CHECK(count_gap(7, 2, 2) == 2);
        CHECK(count_gap(3, 5, 4) == 0);
        CHECK(count_gap(10, 2, 2) == 4);
    }

    TEST_CASE("count_residue examples")
    {
        CHECK(count_residue(31, part_sets::q_set(8, 1, DeltaVariant::minus)) == 5);
        CHECK(count_residue(155, part_sets::q_set(28, 1, DeltaVariant::minus)) == 26);
        const auto t = part_sets::andrews(5, 31);
        CHECK(count_residue(0, t) == 1);
        const auto mm = part_sets::q_set(12, 3, DeltaVariant::minus_minus);
        for (Part n = 1; n < 18; ++n)
            CHECK(count_residue(n, mm) == 0);
    }

    TEST_CASE("count_G examples")
    {
        CHECK(count_G(0, 31) == 1);
        CHECK(count_G(1, 31) == 1);
        CHECK(count_G(47, 31) == 5);
        CHECK(enumerate_count(47, part_sets::yee(31)) == 5);
        CHECK_THROWS_AS(count_G(5, 2), DomainError);
    }

    TEST_CASE("residue_helpers")
    {
        CHECK(residue_helpers(10, 4).h == 2);
        CHECK(residue_helpers(10, 4).ceil == 3);
        CHECK(residue_helpers(12, 4).h == 0);
        CHECK(residue_helpers(12, 4).ceil == 3);
        CHECK(residue_helpers(0, 7).h == 0);
        CHECK(residue_helpers(0, 7).ceil == 0);
        CHECK_THROWS_AS(residue_helpers(3, 0), DomainError);
        CHECK_THROWS_AS(residue_helpers(-1, 3), DomainError);
    }

    TEST_CASE("r indices")
    {
        CHECK(r_index(31) == 5);
        CHECK(r_index(30) == 4);
        CHECK(r_index(1) == 1);
        CHECK(r_index_a(93, 3) == 5);
        CHECK_THROWS_AS(r_index(0), DomainError);
    }

    TEST_CASE("delta")
    {
        for (Part n = 0; n <= 300; ++n)
            CHECK(delta(n, 2, 2, DeltaVariant::minus) >= 0);
        CHECK(delta(0, 9, 4, DeltaVariant::plain) == 0);
        CHECK(delta(0, 9, 4, DeltaVariant::minus_minus) == 0);
        const Count brute = enumerate_count(7, GapSpec{3, 2}) -
                            enumerate_count(7, part_sets::q_set(2, 3, DeltaVariant::minus));
        CHECK(delta(7, 2, 3, DeltaVariant::minus) == brute);
        CHECK(delta(7, 2, 3, DeltaVariant::minus) == 0);
        CHECK_THROWS_AS(delta(7, 2, 5, DeltaVariant::minus), DomainError);
    }

    TEST_CASE("counts exceed 64 bits without overflow")
    {
        const Count big = count_gap(5000, 10, 1);
        CHECK(big > Count("18446744073709551615"));
        CHECK(big == counts(CountingFunction::gap(10, 1), 5000).back());
    }
}

TEST_SUITE("count table cache")
{
    TEST_CASE("tables are shared and cover the request")
    {
        CountTableCache cache;
        const auto fn = CountingFunction::residue(7, 1, DeltaVariant::plain);
        const auto t1 = cache.get(fn, 100);
        CHECK(t1->size() >= 101);
        const auto t2 = cache.get(fn, 50);
        CHECK(t1.get() == t2.get());
        const auto t3 = cache.get(fn, 200);
        CHECK(t3->size() >= 201);
        CHECK(std::equal(t1->begin(), t1->end(), t3->begin()));
        CHECK(cache.size() == 1);
    }
}
