#include "alder/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "alder/disk_cache.hpp"

namespace alder::cli
{

using nlohmann::ordered_json;

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

std::string report_json(const VerificationReport &report, bool timing)
{
    ordered_json j;
    j["family"] = report.family;
    j["ranges"] = report.ranges;
    j["violations"] = ordered_json::array();
    for (const auto &v : report.violations)
        j["violations"].push_back(ordered_json{{"d", v.d},
                                               {"a", v.a},
                                               {"n", v.n},
                                               {"lhs", to_decimal(v.lhs)},
                                               {"rhs", to_decimal(v.rhs)},
                                               {"note", v.note}});
    j["elapsed_ms"] = timing ? report.elapsed.count() : 0;
    j["status"] = std::string(to_string(report.status));
    return j.dump(2) + "\n";
}

std::string report_csv(const VerificationReport &report)
{
    std::ostringstream os;
    os << "family,d,a,n,lhs,rhs,note\n";
    for (const auto &v : report.violations)
        os << csv_field(report.family) << ',' << v.d << ',' << v.a << ',' << v.n << ',' << to_decimal(v.lhs) << ','
           << to_decimal(v.rhs) << ',' << csv_field(v.note) << '\n';
    return os.str();
}

std::string table4_csv(const std::vector<AsymptoticConstants> &rows)
{
    std::string s = "d,alpha,A,M\n";
    char buf[96];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%lld,%.6f,%.6f,%lld\n", static_cast<long long>(r.d), r.alpha_d, r.A_d,
                      static_cast<long long>(r.M_d));
        s += buf;
    }
    return s;
}

std::string chain_csv(ChainId chain, Part d, Part a, Part n, const std::vector<ChainLink> &links, bool header)
{
    std::ostringstream os;
    if (header)
        os << "chain,d,a,n,link,lhs_label,relation,rhs_label,lhs,rhs,holds\n";
    for (const auto &l : links)
        os << to_string(chain) << ',' << d << ',' << a << ',' << n << ',' << l.name << ',' << csv_field(l.lhs_label)
           << ',' << (l.relation == Relation::ge ? ">=" : "==") << ',' << csv_field(l.rhs_label) << ','
           << to_decimal(l.lhs) << ',' << to_decimal(l.rhs) << ',' << (l.holds ? "true" : "false") << '\n';
    return os.str();
}

namespace
{

struct FunctionFlags {
    std::string fn;
    Part d = 0;
    Part a = 1;
    // rho only
    std::string set;
    Part r = 5;
    Part ell = 1;
    Part modulus = 0;
    std::vector<Part> residues;
    std::vector<Part> exclude;
    std::vector<Part> distinct;

    void add(CLI::App &app, const std::string &prefix, bool required)
    {
        auto *opt = app.add_option("--" + prefix + "fn", fn, "Counting function: q|Q|Qminus|Qminusminus|rho|G");
        if (required)
            opt->required();
        app.add_option("--" + prefix + "d", d, "Parameter d");
        app.add_option("--" + prefix + "a", a, "Parameter a")->capture_default_str();
        if (!prefix.empty())
            return;
        app.add_option("--set", set, "rho part set preset: andrews|scaled|s|yee|odd|distinct");
        app.add_option("--r", r, "r for --set andrews")->capture_default_str();
        app.add_option("--l", ell, "l for --set scaled")->capture_default_str();
        app.add_option("--modulus", modulus, "rho modulus for an explicit part set");
        app.add_option("--residues", residues, "rho residues, comma separated")->delimiter(',');
        app.add_option("--exclude", exclude, "Excluded parts, comma separated")->delimiter(',');
        app.add_option("--distinct-residues", distinct, "Residues whose parts must be distinct")->delimiter(',');
    }

    CountingFunction build() const
    {
        const FunctionKind kind = parse_function_kind(fn);
        CountingFunction f;
        switch (kind) {
        case FunctionKind::q:
            f = CountingFunction::gap(d, a);
            break;
        case FunctionKind::Q:
            f = CountingFunction::residue(d, a, DeltaVariant::plain);
            break;
        case FunctionKind::Qminus:
            f = CountingFunction::residue(d, a, DeltaVariant::minus);
            break;
        case FunctionKind::Qminusminus:
            f = CountingFunction::residue(d, a, DeltaVariant::minus_minus);
            break;
        case FunctionKind::G:
            f = CountingFunction::yee(d);
            break;
        case FunctionKind::rho:
            f = CountingFunction::rho(rho_set());
            break;
        }
        f.validate();
        return f;
    }

    PartSetSpec rho_set() const
    {
        PartSetSpec spec;
        if (set.empty()) {
            if (modulus < 1 || residues.empty())
                throw DomainError("--fn rho needs --set PRESET or --modulus M --residues r1,r2,...");
            spec.modulus = modulus;
            spec.residues = {residues.begin(), residues.end()};
        } else if (set == "andrews") {
            spec = part_sets::andrews(r, d);
        } else if (set == "scaled") {
            spec = part_sets::scaled_andrews(ell, a, d);
        } else if (set == "s") {
            spec = part_sets::s_set(d);
        } else if (set == "yee") {
            spec = part_sets::yee(d);
        } else if (set == "odd") {
            spec = part_sets::odd_parts();
        } else if (set == "distinct") {
            spec = part_sets::distinct_parts();
        } else {
            throw DomainError("unknown --set '" + set + "'; expected andrews, scaled, s, yee, odd or distinct");
        }
        spec.excluded_parts.insert(exclude.begin(), exclude.end());
        spec.distinct_residues.insert(distinct.begin(), distinct.end());
        return spec;
    }
};

struct ReportFlags {
    std::string format = "json";
    bool timing = false;

    void add(CLI::App &app)
    {
        app.add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        app.add_flag("--timing", timing, "Record wall-clock elapsed_ms (otherwise 0, for byte-stable output)");
    }

    int emit(const VerificationReport &r, std::ostream &out) const
    {
        out << (format == "csv" ? report_csv(r) : report_json(r, timing));
        return r.passed() ? exit_pass : exit_violations;
    }
};

IntSet parse_set(const std::string &text, const char *flag)
{
    try {
        return IntSet::parse(text);
    } catch (const DomainError &e) {
        throw DomainError(std::string(flag) + ": " + e.what());
    }
}

Part parse_single(const std::string &text, const char *flag)
{
    const IntSet s = parse_set(text, flag);
    if (s.values().size() != 1)
        throw DomainError(std::string(flag) + " takes a single value here, got '" + text + "'");
    return s.min();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact restricted-partition counts, inequality scans, injections and asymptotic constants",
                 "partcheck"};
    app.require_subcommand(1);
    std::string cache_flag;
    app.add_option("--cache-dir", cache_flag,
                   "Count cache directory (default: $PARTCHECK_CACHE_DIR, then .partition-cache/)");

    // count
    auto *count = app.add_subcommand("count", "One value of a counting function");
    FunctionFlags count_fn;
    std::string count_n;
    bool count_oracle = false, verify_cache = false, no_cache = false;
    count_fn.add(*count, "", true);
    count->add_option("--n", count_n, "n")->required();
    count->add_flag("--oracle", count_oracle, "Count by brute-force enumeration");
    count->add_flag("--verify-cache", verify_cache, "Recompute and compare with the cached table");
    count->add_flag("--no-cache", no_cache, "Bypass the count cache");
    count->add_option("--cache-dir", cache_flag, "Count cache directory");

    // scan
    auto *scan = app.add_subcommand("scan", "Check an inequality family over (d, a, n) ranges");
    std::string family_name, scan_d, scan_a, scan_n;
    unsigned workers = 1;
    bool scan_oracle = false;
    ReportFlags scan_out;
    scan->add_option("--family", family_name, "Inequality family")->required();
    scan->add_option("--d", scan_d, "d range, e.g. 91..93 or 1,2,91..93")->required();
    scan->add_option("--a", scan_a, "a range (defaults to the family's fixed a)");
    scan->add_option("--n", scan_n, "n range")->required();
    scan->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    scan->add_flag("--oracle", scan_oracle, "Count by brute-force enumeration");
    scan_out.add(*scan);

    // verify
    auto *verify = app.add_subcommand("verify", "Identity, injection and table suites");
    std::string suite, verify_n;
    Part verify_d = 31, verify_a = 5;
    std::size_t verify_i = 50, instances = 1000;
    std::uint64_t seed = 1;
    ReportFlags verify_out;
    verify
        ->add_option("--suite", suite,
                     "euler|rr1|rr2|schur|glaisher_consistency|monotonicity|delta_chain|lemma25|table3_bounds|"
                     "sec4_series|table1|table2|lemma33|glaisher|phi_d2|mod_andrews")
        ->required();
    verify->add_option("--n", verify_n, "N for identities; weight range for injections");
    verify->add_option("--d", verify_d, "d for table1, table2, lemma33")->capture_default_str();
    verify->add_option("--a", verify_a, "a for table2")->capture_default_str();
    verify->add_option("--i", verify_i, "Number of table entries")->capture_default_str();
    verify->add_option("--instances", instances, "Random instances for mod_andrews")->capture_default_str();
    verify->add_option("--seed", seed, "Seed for mod_andrews")->capture_default_str();
    verify_out.add(*verify);

    // chain
    auto *chain = app.add_subcommand("chain", "Evaluate a reduction chain link by link");
    std::string chain_name, chain_n, chain_format = "csv";
    Part chain_d = 0, chain_a = 1;
    chain->add_option("--chain", chain_name, "a3_chain|strengthen_chain|genkp_chain|conditional_chain")->required();
    chain->add_option("--d", chain_d, "d")->required();
    chain->add_option("--a", chain_a, "a")->capture_default_str();
    chain->add_option("--n", chain_n, "n range")->required();
    chain->add_option("--format", chain_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // asym
    auto *asym = app.add_subcommand("asym", "Asymptotic constants alpha_d, A_d, M_d");
    bool table4_flag = false;
    std::string asym_d;
    asym->add_flag("--table4", table4_flag, "The twelve tabulated d");
    asym->add_option("--d", asym_d, "d values");

    // trend
    auto *trend = app.add_subcommand("trend", "lhs(n) - rhs(n) as CSV");
    FunctionFlags lhs_fn, rhs_fn;
    Part trend_n = 0;
    lhs_fn.add(*trend, "", true);
    rhs_fn.add(*trend, "rhs-", true);
    trend->add_option("--n", trend_n, "n_max")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*count) {
            const CountingFunction fn = count_fn.build();
            const Part n = parse_single(count_n, "--n");
            if (n < 0)
                throw DomainError("--n must be nonnegative");
            if (count_oracle) {
                out << to_decimal(enumerate_count(n, fn.filter())) << '\n';
                return exit_pass;
            }
            if (no_cache) {
                out << to_decimal(counts(fn, n)[n]) << '\n';
                return exit_pass;
            }
            DiskCountCache cache(DiskCountCache::resolve_dir(cache_flag));
            bool hit = false;
            const auto table = cache.get(fn, n, &hit);
            out << to_decimal(table[n]) << '\n';
            if (verify_cache) {
                const auto fresh = counts(fn, n);
                if (fresh != table) {
                    err << "cache mismatch for " << fn.descriptor() << " in " << cache.dir().string() << '\n';
                    return exit_violations;
                }
                err << "cache " << (hit ? "hit" : "miss") << " verified for " << fn.descriptor() << '\n';
            }
            return exit_pass;
        }
        if (*scan) {
            const FamilyId id = parse_family(family_name);
            const FamilyTraits traits = family_traits(id);
            IntSet a_set;
            if (!scan_a.empty())
                a_set = parse_set(scan_a, "--a");
            else if (traits.fixed_a)
                a_set = IntSet::range(*traits.fixed_a, *traits.fixed_a);
            else
                throw DomainError("family " + family_name + " ranges over a; pass --a");
            InequalityFamily fam{id, parse_set(scan_d, "--d"), a_set, parse_set(scan_n, "--n")};
            ScanOptions opts;
            opts.workers = workers;
            opts.use_oracle = scan_oracle;
            return scan_out.emit(scan_family(fam, opts), out);
        }
        if (*verify) {
            if (suite == "table1" || suite == "table2")
                return verify_out.emit(check_table_closed_forms(parse_table(suite), verify_d, verify_a, verify_i),
                                       out);
            if (suite == "lemma33" || suite == "glaisher" || suite == "phi_d2" || suite == "mod_andrews") {
                InjectionSuiteParams p;
                p.d = verify_d;
                if (!verify_n.empty())
                    p.n = parse_set(verify_n, "--n");
                p.instances = instances;
                p.seed = seed;
                return verify_out.emit(check_injection_suite(parse_injection_suite(suite), p), out);
            }
            const IdentityId id = parse_identity(suite);
            if (verify_n.empty() && id != IdentityId::table3_bounds)
                throw DomainError("identity suites need --n N");
            const Part n = verify_n.empty() ? 0 : parse_single(verify_n, "--n");
            return verify_out.emit(check_identity(id, n), out);
        }
        if (*chain) {
            const ChainId id = parse_chain(chain_name);
            bool all_hold = true;
            ordered_json rows = ordered_json::array();
            bool header = true;
            const IntSet ns = parse_set(chain_n, "--n");
            for (Part n : ns.values()) {
                const auto links = check_chain(id, chain_d, chain_a, n);
                for (const auto &l : links)
                    all_hold = all_hold && l.holds;
                if (chain_format == "csv") {
                    out << chain_csv(id, chain_d, chain_a, n, links, header);
                    header = false;
                    continue;
                }
                ordered_json jl = ordered_json::array();
                for (const auto &l : links)
                    jl.push_back(ordered_json{{"link", l.name},
                                              {"lhs_label", l.lhs_label},
                                              {"relation", l.relation == Relation::ge ? ">=" : "=="},
                                              {"rhs_label", l.rhs_label},
                                              {"lhs", to_decimal(l.lhs)},
                                              {"rhs", to_decimal(l.rhs)},
                                              {"holds", l.holds}});
                rows.push_back(ordered_json{{"n", n}, {"links", jl}});
            }
            if (chain_format == "json")
                out << ordered_json{{"chain", std::string(to_string(id))}, {"d", chain_d}, {"a", chain_a}, {"points", rows}}
                           .dump(2)
                    << '\n';
            return all_hold ? exit_pass : exit_violations;
        }
        if (*asym) {
            if (table4_flag == !asym_d.empty())
                throw DomainError("asym takes exactly one of --table4 or --d");
            std::vector<AsymptoticConstants> rows;
            if (table4_flag)
                rows = table4();
            else {
                const IntSet ds = parse_set(asym_d, "--d");
                for (Part d : ds.values())
                    rows.push_back(constants(d));
            }
            for (const auto &r : rows)
                if (r.boundary_sensitive)
                    err << "warning: d=" << r.d << ": pi^2/(3A_d) is within 1e-8 of an integer; M_d is boundary-sensitive\n";
            out << table4_csv(rows);
            return exit_pass;
        }
        if (*trend) {
            const auto values = delta_trend(lhs_fn.build(), rhs_fn.build(), trend_n);
            out << "n,delta\n";
            for (std::size_t n = 0; n < values.size(); ++n)
                out << n << ',' << to_decimal(values[n]) << '\n';
            return exit_pass;
        }
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CeilingExceeded &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvariantViolation &e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return exit_violations;
    }
    return exit_usage;
}

} // namespace alder::cli
