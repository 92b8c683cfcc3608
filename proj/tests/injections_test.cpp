#include <doctest.h>

#include "alder/enumerate.hpp"
#include "alder/injections.hpp"
#include "alder/part_set.hpp"

using namespace alder;

TEST_SUITE("phi_mod_andrews")
{
    TEST_CASE("empty input maps to empty output")
    {
        const std::vector<Part> t{3, 6, 9};
        const MultiplicityVector empty{{3, 7, 12}, {}};
        const auto image = phi_mod_andrews(empty, t, 3);
        CHECK(image.weight() == 0);
        CHECK(image.mults.empty());
    }

    TEST_CASE("a = 1 is the plain comparison map")
    {
        const std::vector<Part> t{1, 2, 4};
        const MultiplicityVector lambda{{1, 3, 7}, {{1, 2}, {2, 1}}};
        const auto image = phi_mod_andrews(lambda, t, 1);
        // alpha = 2*(3-2) + 1*(7-4) = 5
        CHECK(image.at(0) == 5);
        CHECK(image.at(1) == 2);
        CHECK(image.at(2) == 1);
        CHECK(image.weight() == lambda.weight());
    }

    TEST_CASE("Q_12^(3,-) source with a = 3")
    {
        const auto s = part_sets::q_set(12, 3, DeltaVariant::minus).first_parts(4);
        const std::vector<Part> t{3, 6, 9, 12};
        const auto lambda = MultiplicityVector::from_partition(Partition({3, 3}), s);
        const auto image = phi_mod_andrews(lambda, t, 3);
        CHECK(image.weight() == 6);
        CHECK(image.to_partition().to_string() == "(3^2)");
    }

    TEST_CASE("weight grows by h_n^(a)")
    {
        const std::vector<Part> t{2, 4, 6};
        const MultiplicityVector lambda{{3, 5, 8}, {{0, 1}, {2, 2}}}; // n = 19, h = 1
        const auto image = phi_mod_andrews(lambda, t, 2);
        CHECK(image.weight() == 20);
    }

    TEST_CASE("precondition failures name the index")
    {
        const MultiplicityVector lambda{{1, 2, 3}, {{1, 1}}};
        CHECK_THROWS_WITH_AS(phi_mod_andrews(lambda, std::vector<Part>{1, 4, 6}, 1), doctest::Contains("x_2"),
                             DomainError);
        CHECK_THROWS_WITH_AS(phi_mod_andrews(lambda, std::vector<Part>{2, 3}, 2), doctest::Contains("y_2"),
                             DomainError);
        CHECK_THROWS_AS(phi_mod_andrews(lambda, std::vector<Part>{2, 4}, 1), DomainError);
    }
}

TEST_SUITE("phi_lemma33")
{
    TEST_CASE("(1^156) is a fixed point of case I")
    {
        const Partition ones(std::vector<Part>(156, 1));
        const auto traced = phi_lemma33_traced(ones, 31);
        CHECK(traced.branch == InjectionBranch::simple);
        CHECK(traced.image == ones);
    }

    TEST_CASE("(32^5) takes case II with beta = 0, epsilon = 1")
    {
        const auto traced = phi_lemma33_traced(Partition({32, 32, 32, 32, 32}), 31);
        CHECK(traced.branch == InjectionBranch::rebalanced);
        CHECK(traced.data.beta == 0);
        CHECK(traced.data.epsilon == 1);
        CHECK(traced.image.to_string() == "(63^2,33,1)");
        CHECK(traced.image.weight() == 160);
    }

    TEST_CASE("domain errors")
    {
        CHECK_THROWS_AS(phi_lemma33(Partition({30}), 31), DomainError);
        CHECK_THROWS_AS(phi_lemma33(Partition({1}), 30), DomainError);
    }

    TEST_CASE("images land in T_{5,d} with the same weight, d = 31 and 40")
    {
        for (Part d : {31, 40}) {
            const auto t = part_sets::andrews(5, d);
            for (Part n = 5 * d - 5; n <= 5 * d + 5; ++n)
                for (const auto &p : enumerate_partitions(n, part_sets::s_set(d))) {
                    const auto img = phi_lemma33(p, d);
                    CHECK(img.weight() == n);
                    CHECK(t.admits(img));
                }
        }
    }
}

TEST_SUITE("glaisher_mod and phi_d2")
{
    TEST_CASE("binary splitting")
    {
        CHECK(glaisher_mod(Partition({5})).to_string() == "(5)");
        CHECK(glaisher_mod(Partition({3, 3, 3})).to_string() == "(6,3)");
        CHECK(glaisher_mod(Partition({9, 3, 3})).to_string() == "(9,6)");
        CHECK_THROWS_AS(glaisher_mod(Partition({4, 3})), DomainError);
        CHECK_THROWS_AS(glaisher_mod(Partition({3, 1})), DomainError);
    }

    TEST_CASE("drop the trailing 2")
    {
        CHECK(phi_d2(Partition({7, 2})).to_string() == "(7)");
        CHECK(phi_d2(Partition({2})).empty());
        CHECK_THROWS_AS(phi_d2(Partition({7, 3})), DomainError);
        CHECK_THROWS_AS(phi_d2(Partition({3, 2})), DomainError);
    }
}

TEST_SUITE("verify_injection")
{
    TEST_CASE("empty domain passes vacuously")
    {
        const InjectionCheck check{"id", [](const Partition &p) { return p; }, [](const Partition &) { return true; },
                                   0};
        const auto r = verify_injection({}, check);
        CHECK(r.violations.empty());
        CHECK(r.passed());
    }

    TEST_CASE("collisions name both preimages")
    {
        const InjectionCheck collapse{"collapse", [](const Partition &) { return Partition({1}); },
                                      [](const Partition &) { return true; }, 0};
        const std::vector<Partition> domain{Partition({1}), Partition({1})};
        const auto r = verify_injection(domain, collapse);
        REQUIRE_FALSE(r.violations.empty());
        CHECK_FALSE(r.passed());
    }

    TEST_CASE("wrong weight shift, codomain miss and throwing maps are reported")
    {
        const std::vector<Partition> domain{Partition({4}), Partition({3, 1})};
        const InjectionCheck shift{"shift", [](const Partition &p) { return p; },
                                   [](const Partition &) { return true; }, 1};
        CHECK(verify_injection(domain, shift).violations.size() == 2);
        const InjectionCheck codomain{"cod", [](const Partition &p) { return p; },
                                      [](const Partition &p) { return p.length() == 1; }, 0};
        CHECK(verify_injection(domain, codomain).violations.size() == 1);
        const InjectionCheck throws{"throws", [](const Partition &p) { return phi_d2(p); },
                                    [](const Partition &) { return true; }, -2};
        CHECK(verify_injection(domain, throws).violations.size() == 2);
    }

    TEST_CASE("glaisher_mod over odd >= 3 parts of n <= 40")
    {
        const InjectionCheck check{"glaisher_mod", glaisher_mod,
                                   [](const Partition &p) { return GapSpec{3, 1}.admits(p); }, 0};
        for (Part n = 0; n <= 40; ++n) {
            const auto domain = enumerate_partitions(n, part_sets::q_set(1, 3, DeltaVariant::minus));
            CHECK(verify_injection(domain, check).violations.empty());
        }
    }
}
