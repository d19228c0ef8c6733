#include <doctest.h>

#include <sptforge/rings.hpp>

#include <random>
#include <stdexcept>

using namespace sptforge;

namespace {

CyclotomicInteger random_cyc(std::mt19937_64 &rng, int t)
{
    std::uniform_int_distribution<long long> d(-50, 50);
    std::vector<BigInt> c;
    for (int i = 0; i + 1 < t; ++i) {
        c.emplace_back(d(rng));
    }
    return CyclotomicInteger(t, std::move(c));
}

LaurentPolynomial random_laurent(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> e(-6, 6);
    std::uniform_int_distribution<long long> c(-20, 20);
    std::uniform_int_distribution<int> len(0, 5);
    std::vector<LaurentTerm> terms;
    for (int i = len(rng); i > 0; --i) {
        terms.push_back({e(rng), BigInt(c(rng))});
    }
    return LaurentPolynomial(std::move(terms));
}

} // namespace

TEST_CASE("bigint arithmetic crosses the int64 boundary")
{
    BigInt a(std::numeric_limits<long long>::max());
    BigInt b = a + BigInt(1);
    CHECK(b.to_string() == "9223372036854775808");
    CHECK(!b.is_small());
    b -= BigInt(1);
    CHECK(b.is_small());
    CHECK(b == a);
    BigInt c = BigInt::pow(BigInt(3), 60);
    CHECK(c.to_string() == "42391158275216203514294433201");
    CHECK(c.divexact(BigInt::pow(BigInt(3), 58)) == BigInt(9));
    CHECK(BigInt(-7).mod(5) == 3);
    BigInt d(5);
    d.addmul(c, BigInt(2));
    CHECK(d == c + c + BigInt(5));
    CHECK(BigInt::from_string("-123456789012345678901234567890").sign() == -1);
    CHECK_THROWS_AS((void)BigInt(7).divexact(BigInt(2)), std::domain_error);
}

TEST_CASE("cyclotomic construction validates t")
{
    CHECK_THROWS_AS(cyc_from_root_power(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(cyc_from_root_power(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(cyc_mul(cyc_from_root_power(5, 1), cyc_from_root_power(7, 1)), std::invalid_argument);
}

TEST_CASE("cyclotomic reduction")
{
    for (int t : {3, 5, 7, 11}) {
        // 1 + zeta + ... + zeta^{t-1} = 0
        CyclotomicInteger s(t);
        for (int k = 0; k < t; ++k) {
            s += cyc_from_root_power(t, k);
        }
        CHECK(cyc_is_zero(s));
        CHECK(cyc_from_root_power(t, t) == cyc_from_root_power(t, 0));
        CHECK(cyc_from_root_power(t, -1) == cyc_from_root_power(t, t - 1));
        CHECK(cyc_mul(cyc_from_root_power(t, 2), cyc_from_root_power(t, t - 3)) == cyc_from_root_power(t, -1));
    }
    CHECK(cyc_from_root_power(5, 4).render() == "[-1,-1,-1,-1]");
}

TEST_CASE("cyclotomic ring axioms on random triples")
{
    std::mt19937_64 rng(20240521);
    for (int t : {3, 5, 7}) {
        for (int i = 0; i < 4000; ++i) {
            auto a = random_cyc(rng, t), b = random_cyc(rng, t), c = random_cyc(rng, t);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a * b == b * a);
            REQUIRE(a - a == CyclotomicInteger(t));
            auto r = a;
            r.add_rotated(b, -1, 3);
            REQUIRE(r == a - cyc_from_root_power(t, 3) * b);
        }
    }
}

TEST_CASE("laurent ring axioms and evaluation homomorphism")
{
    std::mt19937_64 rng(77);
    for (int i = 0; i < 10000; ++i) {
        auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(laurent_mul(a, b) == laurent_mul(b, a));
        for (int t : {3, 5, 7}) {
            REQUIRE(laurent_eval_at_root(a * b, t) == laurent_eval_at_root(a, t) * laurent_eval_at_root(b, t));
            REQUIRE(laurent_eval_at_root(a + b, t) == laurent_eval_at_root(a, t) + laurent_eval_at_root(b, t));
        }
        REQUIRE((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    }
}

TEST_CASE("laurent canonical form")
{
    LaurentPolynomial p({{2, BigInt(1)}, {-1, BigInt(3)}, {2, BigInt(-1)}, {0, BigInt(0)}});
    CHECK(p.terms().size() == 1);
    CHECK(p.render() == "[-1:3]");
    CHECK((p - p).is_zero());
    // (1 - z)(1 - 1/z) = 2 - z - 1/z
    LaurentPolynomial a({{0, BigInt(1)}, {1, BigInt(-1)}});
    LaurentPolynomial b({{0, BigInt(1)}, {-1, BigInt(-1)}});
    CHECK((a * b).render() == "[-1:-1,0:2,1:-1]");
    // 1 + z + z^2 + z^3 + z^4 vanishes at zeta_5 but not at zeta_7.
    LaurentPolynomial cyc5({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
    CHECK(cyc_is_zero(laurent_eval_at_root(cyc5, 5)));
    CHECK(!cyc_is_zero(laurent_eval_at_root(cyc5, 7)));
}

TEST_CASE("zero test soundness")
{
    // A nonzero integer combination of 1, zeta, ..., zeta^{t-2} is nonzero.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        auto a = random_cyc(rng, 7);
        bool all_zero = true;
        for (const auto &c : a.coeffs()) {
            all_zero = all_zero && c.is_zero();
        }
        REQUIRE(cyc_is_zero(a) == all_zero);
    }
}
