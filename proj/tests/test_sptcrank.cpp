#include <doctest.h>

#include <sptforge/sptcrank.hpp>

using namespace sptforge;

namespace {

std::vector<long> small(const std::vector<BigInt> &v)
{
    std::vector<long> out;
    for (const auto &x : v) {
        out.push_back(std::stol(x.to_string()));
    }
    return out;
}

} // namespace

TEST_CASE("spt tables: leading values")
{
    auto b2 = small(spt_table(Family::B2, 4));
    CHECK(b2 == std::vector<long>{0, 0, 1, 2, 5});
    CHECK(spt_table(Family::J2, 1)[1] == BigInt(1));
    auto j1 = spt_table(Family::J1, 3);
    CHECK(j1[2] == BigInt(3));
    CHECK(j1[3] == BigInt(4));
    CHECK(spt_table(Family::J3, 2)[2] == BigInt(1));
}

TEST_CASE("z = 1 build matches the one-variable display")
{
    for (Family f : spt_families()) {
        CAPTURE(family_name(f));
        auto two = std::get<IntSeries>(build_spt_crank(f, Mode::one(), 90));
        auto one = spt_display(f, 90);
        CHECK_FALSE(first_mismatch(two, one).has_value());
    }
}

TEST_CASE("modes agree under specialization")
{
    for (Family f : spt_families()) {
        CAPTURE(family_name(f));
        auto sym = std::get<LaurentSeries>(build_spt_crank(f, Mode::symbolic(), 60));
        auto cyc = std::get<CycSeries>(build_spt_crank(f, Mode::root(5), 60));
        auto one = std::get<IntSeries>(build_spt_crank(f, Mode::one(), 60));
        CHECK_FALSE(first_mismatch(eval_at_root(sym, 5), cyc).has_value());
        CHECK_FALSE(first_mismatch(eval_at_one(sym), one).has_value());
    }
}

TEST_CASE("crank coefficients are symmetric and sum to spt")
{
    for (Family f : spt_families()) {
        CAPTURE(family_name(f));
        auto spt = spt_table(f, 40);
        for (int n = 1; n <= 40; ++n) {
            auto c = crank_coefficient(f, n);
            BigInt total;
            for (const auto &t : c.terms()) {
                total += t.coeff;
                CHECK(c.coeff(-t.exp) == t.coeff);
            }
            CHECK(total == spt[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("known congruences hold")
{
    for (const auto &c : known_congruences()) {
        CAPTURE(family_name(c.family));
        CAPTURE(c.p);
        CAPTURE(c.b);
        auto r = check_congruence(c.family, c.p, c.b, 150);
        CHECK(r.holds());
        CHECK(r.checked > 0);
    }
}

TEST_CASE("congruence checks report failures")
{
    auto r = check_congruence(Family::B2, 5, 2, 100);
    REQUIRE_FALSE(r.holds());
    CHECK(r.failure->n % 5 == 2);
    CHECK(check_vanishing(Family::J2, 3, 1, 240).has_value());
    CHECK_FALSE(check_vanishing(Family::J2, 3, 0, 240).has_value());
    CHECK_THROWS_AS(check_congruence(Family::B2, 4, 1, 20), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("B7"), std::invalid_argument);
    CHECK(parse_family("Gstarstar") == Family::Gstarstar);
}

TEST_CASE("starred families are relabelings at -q")
{
    auto ag4 = std::get<LaurentSeries>(build_spt_crank(Family::AG4, Mode::symbolic(), 60));
    auto g4 = std::get<LaurentSeries>(build_spt_crank(Family::G4, Mode::symbolic(), 60));
    auto gs = std::get<LaurentSeries>(build_spt_crank(Family::Gstar, Mode::symbolic(), 60));
    auto gss = std::get<LaurentSeries>(build_spt_crank(Family::Gstarstar, Mode::symbolic(), 60));
    for (int n = 0; n < 60; ++n) {
        auto a = gs[n];
        auto b = gss[n];
        if (n % 2 != 0) {
            a.negate();
            b.negate();
        }
        CHECK(a == ag4[n]);
        CHECK(b == g4[n]);
    }
}
