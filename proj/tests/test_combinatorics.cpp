#include <doctest.h>

#include <sptforge/combinatorics.hpp>

using namespace sptforge;

TEST_CASE("partition enumeration")
{
    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts == std::vector<int>{4});
    CHECK(p4[1].parts == std::vector<int>{3, 1});
    CHECK(p4[2].parts == std::vector<int>{2, 2});
    CHECK(p4[3].parts == std::vector<int>{2, 1, 1});
    CHECK(p4[4].parts == std::vector<int>{1, 1, 1, 1});
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(9).size() == 30);
    auto pn = series_invert(pochhammer(IntegerRing{}, qmono(1), std::nullopt, qmono(1), 41));
    for (int n = 0; n <= 40; ++n) {
        CHECK(BigInt(static_cast<long>(enumerate_partitions(n).size())) == pn[n]);
    }
    CHECK_THROWS_AS(enumerate_partitions(-1), std::invalid_argument);
}

TEST_CASE("classic spt")
{
    CHECK(classic_spt(1) == BigInt(1));
    CHECK(classic_spt(2) == BigInt(3));
    CHECK(classic_spt(4) == BigInt(10));
}

TEST_CASE("oracle small values")
{
    CHECK(spt_oracle(Family::B2, 4) == BigInt(5));
    CHECK(spt_oracle(Family::J2, 3) == BigInt(3));
    CHECK(spt_oracle(Family::J1, 2) == BigInt(3));
    CHECK(spt_oracle(Family::J1, 3) == BigInt(4));
    CHECK(spt_oracle(Family::J3, 3) == BigInt(1));
    CHECK_THROWS_AS(spt_oracle(Family::Gstar, 3), std::invalid_argument);
}

TEST_CASE("oracle agrees with the series")
{
    for (Family f : spt_families()) {
        CAPTURE(family_name(f));
        const bool pairs = f == Family::F3 || f == Family::G4 || f == Family::AG4;
        const int n_max = pairs ? 18 : 25;
        auto t = spt_table(f, n_max);
        for (int n = 1; n <= n_max; ++n) {
            CAPTURE(n);
            CHECK(spt_oracle(f, n) == t[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("J fiber map")
{
    auto r3 = j_fiber_check(3);
    CHECK(r3.ok());
    CHECK(r3.j2_size == 3);
    for (int n = 1; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(j_fiber_check(n).ok());
    }
}
