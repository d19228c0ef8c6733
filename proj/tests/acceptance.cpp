// One PASS/FAIL line per acceptance criterion; exits nonzero if any criterion fails.

#include <sptforge/bailey.hpp>
#include <sptforge/combinatorics.hpp>
#include <sptforge/registry.hpp>
#include <sptforge/sptcrank.hpp>

#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace sptforge;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string &why)
    {
        if (ok) {
            detail = why;
        }
        ok = false;
    }
};

int failures = 0;

void criterion(int number, const std::string &title, double budget_s, const std::function<Outcome()> &body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > budget_s) {
        o.fail("took longer than the " + std::to_string(static_cast<int>(budget_s)) + " s budget");
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << number << ". " << title << "  (" << timing << ")";
    if (!o.ok) {
        std::cout << "  -- " << o.detail;
        ++failures;
    }
    std::cout << std::endl;
}

// p(n) from 1/(q;q)_inf
IntSeries partition_series(int order)
{
    return series_invert(pochhammer(IntegerRing{}, qmono(1), std::nullopt, qmono(1), order));
}

// sum_{n>=1} q^n / ((1-q^n)^2 (q^{n+1};q)_inf)
IntSeries classic_spt_series(int order)
{
    IntSeries s(IntegerRing{}, order);
    for (int n = 1; n < order; ++n) {
        ProductTerm t(order);
        t.times(qmono(n)).times_binomial(qmono(n), -2).times_poch(qmono(n + 1), qmono(1), std::nullopt, -1);
        add_product_term(s, t, {qmono(0)});
    }
    return s;
}

Outcome run_cases(const std::function<bool(const std::string &)> &select, const VerifyOptions &opts = {})
{
    Outcome o;
    int count = 0;
    for (const auto &c : catalog()) {
        if (!select(c.id)) {
            continue;
        }
        ++count;
        const auto r = run_case(c, opts);
        if (!r.ok()) {
            o.fail(c.id + " mismatch at q^" + std::to_string(r.first_mismatch->power));
        }
    }
    if (count == 0) {
        o.fail("no catalog cases selected");
    }
    return o;
}

bool starts_with(const std::string &s, const std::string &p)
{
    return s.rfind(p, 0) == 0;
}

bool main_theorem_case(const std::string &id)
{
    return starts_with(id, "series_") || starts_with(id, "product_") || starts_with(id, "dissect_");
}

} // namespace

int main()
{
    criterion(1, "classic spt(4) = 10; partition counts match 1/(q;q)_inf for n <= 60", 1.0, [] {
        Outcome o;
        if (classic_spt(4) != BigInt(10)) {
            o.fail("spt(4) = " + classic_spt(4).to_string());
        }
        const IntSeries p = partition_series(61);
        for (int n = 0; n <= 60; ++n) {
            long count = 0;
            for_each_partition(n, [&](const Partition &) { ++count; });
            if (BigInt(count) != p[n]) {
                o.fail("p(" + std::to_string(n) + ")");
            }
        }
        return o;
    });

    criterion(2, "spt_B2(n) = spt(n) - p(n): series n <= 200, enumeration n <= 40", 10.0, [] {
        Outcome o;
        const auto b2 = spt_table(Family::B2, 200);
        const IntSeries spt = classic_spt_series(201);
        const IntSeries p = partition_series(201);
        for (int n = 1; n <= 200; ++n) {
            if (b2[n] != spt[n] - p[n]) {
                o.fail("series at n = " + std::to_string(n));
            }
        }
        for (int n = 1; n <= 40; ++n) {
            long count = 0;
            for_each_partition(n, [&](const Partition &) { ++count; });
            if (spt_oracle(Family::B2, n) != classic_spt(n) - BigInt(count)) {
                o.fail("enumeration at n = " + std::to_string(n));
            }
            if (classic_spt(n) != spt[n]) {
                o.fail("spt(" + std::to_string(n) + ") enumeration vs series");
            }
        }
        return o;
    });

    criterion(3, "spt_J1 = spt_J2 + spt_J3: series n <= 200, fiber map n <= 30", 30.0, [] {
        Outcome o;
        const auto j1 = spt_table(Family::J1, 200);
        const auto j2 = spt_table(Family::J2, 200);
        const auto j3 = spt_table(Family::J3, 200);
        for (int n = 1; n <= 200; ++n) {
            if (j1[n] != j2[n] + j3[n]) {
                o.fail("series at n = " + std::to_string(n));
            }
        }
        for (int n = 1; n <= 30; ++n) {
            const auto r = j_fiber_check(n);
            if (!r.ok() || r.spt_j1 != j1[n] || r.spt_j2 != j2[n] || r.spt_j3 != j3[n]) {
                o.fail("fiber map at n = " + std::to_string(n));
            }
        }
        return o;
    });

    criterion(4, "fifteen congruences for arguments <= 300 (divisibility, vanishing, equal classes)", 300.0, [] {
        Outcome o;
        if (known_congruences().size() != 15) {
            o.fail("expected 15 congruences, have " + std::to_string(known_congruences().size()));
        }
        for (const auto &c : known_congruences()) {
            const auto r = check_congruence(c.family, c.p, c.b, 300);
            if (!r.holds()) {
                o.fail(family_name(c.family) + "(" + std::to_string(c.p) + "n+" + std::to_string(c.b) +
                       ") fails at n = " + std::to_string(r.failure->n) + ": " + r.failure->reason);
            }
        }
        return o;
    });

    criterion(5, "six single-series identities to order 120, and J1 = J2 + J3 on the sum side", 180.0, [] {
        return run_cases([](const std::string &id) { return starts_with(id, "series_"); }, {120});
    });

    criterion(6, "three product identities to order 150", 60.0, [] {
        return run_cases([](const std::string &id) { return starts_with(id, "product_"); }, {150});
    });

    criterion(7, "seven dissections over Z[zeta_3], Z[zeta_5], Z[zeta_7] to 240/250/250", 600.0, [] {
        Outcome o = run_cases([](const std::string &id) { return starts_with(id, "dissect_"); });
        int n = 0;
        for (const auto &c : catalog()) {
            if (starts_with(c.id, "dissect_")) {
                ++n;
                const int want = c.t == 3 ? 240 : 250;
                if (c.default_order < want) {
                    o.fail(c.id + " default order below " + std::to_string(want));
                }
            }
        }
        if (n != 7) {
            o.fail("expected 7 dissections, have " + std::to_string(n));
        }
        return o;
    });

    criterion(8, "auxiliary catalog verifies at default orders", 600.0, [] {
        return run_cases([](const std::string &id) { return !main_theorem_case(id); });
    });

    criterion(9, "Bailey pairs (n <= 25, order 200), conjugate pair, seven lemma variants at order 120", 180.0, [] {
        Outcome o;
        for (const auto &name : bailey_pair_names()) {
            const auto r = check_pair_relation(bailey_pair(name, is_generic_pair(name) ? 2 : 0), 25, 200);
            if (!r.ok()) {
                o.fail("pair relation " + name);
            }
        }
        for (int h : {1, 2, 3}) {
            if (!check_conjugate_pair(MonomialSpec{1, 1, 0}, h, 8, 120).ok()) {
                o.fail("conjugate pair h = " + std::to_string(h));
            }
        }
        for (int k = 1; k <= 7; ++k) {
            std::set<bool> verdicts;
            for (int h : lemma_rescale_set(k)) {
                for (const char *name : {"GenericStar", "GenericStarStar"}) {
                    verdicts.insert(check_lemma_variant(k, bailey_pair(name, h), 120).ok());
                }
            }
            if (verdicts != std::set<bool>{true}) {
                o.fail("lemma variant " + std::to_string(k));
            }
        }
        return o;
    });

    criterion(10, "enumeration oracles match the series (n <= 40 B2/J, n <= 30 F3/G4/AG4)", 300.0, [] {
        Outcome o;
        for (Family f : spt_families()) {
            const bool pairs = f == Family::F3 || f == Family::G4 || f == Family::AG4;
            const int n_max = pairs ? 30 : 40;
            const auto t = spt_table(f, n_max);
            for (int n = 1; n <= n_max; ++n) {
                if (spt_oracle(f, n) != t[n]) {
                    o.fail(family_name(f) + " at n = " + std::to_string(n));
                }
            }
        }
        return o;
    });

    criterion(11, "verify --id '*' JSON is byte-identical at parallelism 1 and 8", 600.0, [] {
        Outcome o;
        auto run = [&](const char *par) {
            std::ostringstream out, err;
            const int code = cli::run({"verify", "--id", "*", "--format", "json", "--no-timing", "--parallelism", par},
                                      out, err);
            if (code != cli::kExitOk) {
                o.fail(std::string("exit code ") + std::to_string(code) + " at parallelism " + par);
            }
            return out.str();
        };
        const std::string a = run("1");
        const std::string b = run("8");
        if (a != b) {
            o.fail("reports differ");
        }
        if (a.find("\"status\": \"verified\"") == std::string::npos) {
            o.fail("aggregate status is not verified");
        }
        return o;
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion/criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
