#include <doctest.h>

#include "alder/counting.hpp"
#include "alder/verifier.hpp"

using namespace alder;

TEST_SUITE("IntSet")
{
    TEST_CASE("parse and canonical text")
    {
        const auto s = IntSet::parse("93,1,2,91..92");
        CHECK(s.values() == std::vector<Part>{1, 2, 91, 92, 93});
        CHECK(s.to_string() == "1,2,91..93");
        CHECK(IntSet::parse("7").to_string() == "7");
        CHECK(IntSet::range(3, 5).to_string() == "3..5");
    }

    TEST_CASE("malformed ranges carry remediation text")
    {
        CHECK_THROWS_WITH_AS(IntSet::parse("1..x"), doctest::Contains("lo..hi"), DomainError);
        CHECK_THROWS_AS(IntSet::parse("9..3"), DomainError);
        CHECK_THROWS_AS(IntSet::parse(""), DomainError);
    }
}

TEST_SUITE("scan_family")
{
    TEST_CASE("a3_minus at d in {1, 2, 91, 92, 93}, n <= 1000")
    {
        const auto r = scan_family({FamilyId::a3_minus, IntSet({1, 2, 91, 92, 93}), IntSet({3}), IntSet::range(1, 1000)});
        CHECK(r.violations.empty());
        CHECK(r.status == ReportStatus::pass);
        CHECK(r.points_checked == 5000);
        CHECK(r.ranges == "d=1,2,91..93;a=3;n=1..1000");
    }

    TEST_CASE("delta2_plain is exploratory and reports both counts")
    {
        const auto r = scan_family({FamilyId::delta2_plain, IntSet::range(1, 62), IntSet({2}), IntSet::range(1, 200)});
        CHECK(r.status == ReportStatus::exploratory);
        CHECK(r.passed());
        for (const auto &v : r.violations) {
            CHECK(v.lhs < v.rhs);
            CHECK(count_gap(v.n, v.d, 2) == v.lhs);
        }
    }

    TEST_CASE("the conj_1_7 range filter n >= d + 2")
    {
        const auto traits = family_traits(FamilyId::conj_1_7);
        CHECK_FALSE(traits.in_range(12, 1, 13));
        CHECK(traits.in_range(12, 1, 14));
        CHECK_FALSE(traits.excluded(12, 1, 14));
    }

    TEST_CASE("general_a_minus excludes n = d+3+a exactly when a divides d+3")
    {
        const auto traits = family_traits(FamilyId::general_a_minus);
        CHECK(traits.excluded(9, 4, 16));
        CHECK_FALSE(traits.excluded(9, 4, 17));
        CHECK_FALSE(traits.excluded(10, 4, 17));
    }

    TEST_CASE("worker count never changes the report")
    {
        const InequalityFamily fam{FamilyId::delta2_plain, IntSet::range(1, 30), IntSet({2}), IntSet::range(1, 150)};
        ScanOptions one, four;
        four.workers = 4;
        const auto a = scan_family(fam, one);
        const auto b = scan_family(fam, four);
        REQUIRE(a.violations.size() == b.violations.size());
        for (std::size_t i = 0; i < a.violations.size(); ++i) {
            CHECK(a.violations[i].d == b.violations[i].d);
            CHECK(a.violations[i].n == b.violations[i].n);
            CHECK(a.violations[i].lhs == b.violations[i].lhs);
        }
        CHECK(a.points_checked == b.points_checked);
    }

    TEST_CASE("oracle scans agree with DP scans below the ceiling")
    {
        const InequalityFamily fam{FamilyId::delta2_plain, IntSet::range(1, 8), IntSet({2}), IntSet::range(1, 45)};
        ScanOptions oracle;
        oracle.use_oracle = true;
        const auto a = scan_family(fam);
        const auto b = scan_family(fam, oracle);
        REQUIRE(a.violations.size() == b.violations.size());
        for (std::size_t i = 0; i < a.violations.size(); ++i)
            CHECK(a.violations[i].rhs == b.violations[i].rhs);
        ScanOptions tight = oracle;
        tight.limits.ceiling = 20;
        CHECK_THROWS_AS(scan_family(fam, tight), CeilingExceeded);
    }
}

TEST_SUITE("check_chain")
{
    TEST_CASE("a3_chain at d = 93, n = d + 7")
    {
        const auto links = check_chain(ChainId::a3_chain, 93, 3, 100);
        REQUIRE(links.size() == 4);
        for (const auto &l : links)
            CHECK_MESSAGE(l.holds, l.name);
    }

    TEST_CASE("scaling by a: Q_12^(3,-)(15) = Q_2^(1,-)(5) = 1")
    {
        CHECK(count_residue(15, part_sets::q_set(12, 3, DeltaVariant::minus)) == 1);
        CHECK(count_residue(5, part_sets::q_set(2, 1, DeltaVariant::minus)) == 1);
    }

    TEST_CASE("genkp equality link")
    {
        const auto links = check_chain(ChainId::genkp_chain, 1275, 5, 2600);
        const auto &eq = links.at(2);
        CHECK(eq.name == "scale_by_a");
        CHECK(eq.relation == Relation::eq);
        CHECK(eq.lhs == eq.rhs);
    }

    TEST_CASE("hypothesis failures name the link")
    {
        CHECK_THROWS_WITH_AS(check_chain(ChainId::a3_chain, 93, 3, 50), doctest::Contains("gap_reduction"),
                             DomainError);
        CHECK_THROWS_WITH_AS(check_chain(ChainId::conditional_chain, 10, 1, 30), doctest::Contains("alder_type"),
                             DomainError);
    }
}

TEST_SUITE("tables")
{
    TEST_CASE("table1 at d = 31")
    {
        CHECK(table1_x(2, 31) == 32);
        CHECK(table1_y(2, 31) == 33);
        CHECK(table1_x(6, 31) == 94);
        CHECK(table1_y(6, 31) == 63);
        const auto r = check_table_closed_forms(TableId::table1, 31, 1, 50);
        CHECK(r.violations.empty());
    }

    TEST_CASE("table2 with a = 5, d = 5 * 2^8")
    {
        CHECK(check_table_closed_forms(TableId::table2, 5 * 256, 5, 100).violations.empty());
    }

    TEST_CASE("table preconditions")
    {
        CHECK_THROWS_AS(check_table_closed_forms(TableId::table1, 30, 1, 10), DomainError);
        CHECK_THROWS_AS(check_table_closed_forms(TableId::table2, 100, 5, 10), DomainError);
        CHECK_THROWS_AS(check_table_closed_forms(TableId::table2, 5000, 4, 10), DomainError);
    }

    TEST_CASE("table3 first row for a = 5, k = 255")
    {
        const auto rows = table3_rows(5, 255);
        CHECK(rows[0].m_lo == 516);
        CHECK(rows[0].m_hi == 766);
        CHECK(rows[0].q_lower == 131);
        CHECK(rows[0].rho_upper == 16);
    }
}

TEST_SUITE("check_identity")
{
    TEST_CASE("rr2 to N = 300")
    {
        CHECK(check_identity(IdentityId::rr2, 300).violations.empty());
    }

    TEST_CASE("euler at n = 0")
    {
        const auto r = check_identity(IdentityId::euler, 0);
        CHECK(r.violations.empty());
        CHECK(r.points_checked > 0);
    }

    TEST_CASE("table3_bounds on all sampled (a, k)")
    {
        CHECK(check_identity(IdentityId::table3_bounds, 0).violations.empty());
    }

    TEST_CASE("schur DP against predicate-filtered enumeration")
    {
        const auto dp = schur_gap_counts(60);
        CHECK(dp[6] == 2);
        CHECK(dp[9] == 3);
        CHECK_FALSE(schur_admits(Partition({6, 3})));
        CHECK(schur_admits(Partition({7, 4})));
    }

    TEST_CASE("sec4 series: (1 - q^2) holds, (1 - q^3) fails at n = 2")
    {
        CHECK(check_sec4_identity(2, 300).violations.empty());
        const auto cubic = check_sec4_identity(3, 10);
        REQUIRE_FALSE(cubic.violations.empty());
        CHECK(cubic.violations.front().n == 2);
    }

    TEST_CASE("the cap is enforced")
    {
        CHECK_THROWS_AS(check_identity(IdentityId::euler, identity_cap + 1), DomainError);
        CHECK_THROWS_AS(parse_identity("nope"), DomainError);
    }
}

TEST_SUITE("injection suites")
{
    TEST_CASE("lemma33 on Q_28^(1,-)(160)")
    {
        InjectionSuiteParams p;
        p.n = IntSet({160});
        const auto r = check_injection_suite(InjectionSuite::lemma33, p);
        CHECK(r.violations.empty());
        CHECK(r.points_checked == count_residue(160, part_sets::q_set(28, 1, DeltaVariant::minus)));
    }

    TEST_CASE("phi_d2 domain size is bounded by q_2^(2)(m - 2)")
    {
        for (Part m = 3; m <= 60; ++m) {
            InjectionSuiteParams p;
            p.n = IntSet({m});
            const auto r = check_injection_suite(InjectionSuite::phi_d2, p);
            CHECK(r.violations.empty());
            CHECK(Count(static_cast<unsigned long>(r.points_checked)) <= count_gap(m - 2, 2, 2));
        }
    }

    TEST_CASE("mod_andrews is seed-deterministic")
    {
        InjectionSuiteParams p;
        p.instances = 200;
        p.seed = 7;
        const auto a = check_injection_suite(InjectionSuite::mod_andrews, p);
        CHECK(a.violations.empty());
        CHECK(a.points_checked == 200);
    }

    TEST_CASE("weight range is required")
    {
        CHECK_THROWS_AS(check_injection_suite(InjectionSuite::glaisher, {}), DomainError);
    }
}
