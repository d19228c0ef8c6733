#include <doctest.h>

#include <sptforge/bailey.hpp>

using namespace sptforge;

TEST_CASE("pair relation for the catalog")
{
    for (const auto &name : bailey_pair_names()) {
        CAPTURE(name);
        auto r = check_pair_relation(bailey_pair(name, is_generic_pair(name) ? 3 : 0), 12, 100);
        CHECK(r.ok());
    }
    CHECK_THROWS_AS(bailey_pair("B2", 1), std::invalid_argument);
    CHECK_THROWS_AS(bailey_pair("Z9"), std::invalid_argument);
}

TEST_CASE("pair relation: B2 at n = 1 by hand")
{
    // beta_1 = q/(1-q); rhs 1/(1-q)^2 - (1+q^3)/((1-q)(1-q^2)) in X = q^{1/2}
    auto p = bailey_pair("B2");
    IntSeries beta(IntegerRing{}, 30);
    add_product_term(beta, p.beta(1, 30), {qmono(0)});
    for (int n = 0; n < 30; ++n) {
        CHECK(beta[n] == BigInt(n >= 2 && n % 2 == 0 ? 1 : 0));
    }
}

TEST_CASE("J beta additivity")
{
    auto j1 = bailey_pair("J1"), j2 = bailey_pair("J2"), j3 = bailey_pair("J3");
    for (int n = 1; n <= 10; ++n) {
        IntSeries a(IntegerRing{}, 80), b(IntegerRing{}, 80);
        add_product_term(a, j1.beta(n, 80), {qmono(0)});
        add_product_term(b, j2.beta(n, 80), {qmono(0)});
        add_product_term(b, j3.beta(n, 80), {qmono(0)});
        CHECK_FALSE(first_mismatch(a, b).has_value());
    }
}

TEST_CASE("perturbed pair is caught")
{
    auto p = bailey_pair("J2");
    auto a = p.alpha;
    p.alpha = [a](int n) {
        auto v = a(n);
        if (n == 4) {
            for (auto &m : v) {
                m.sign = -m.sign;
            }
        }
        return v;
    };
    auto r = check_pair_relation(p, 10, 100);
    REQUIRE_FALSE(r.ok());
    CHECK(r.first_mismatch->power == 20);
}

TEST_CASE("limiting lemma")
{
    CHECK(check_limiting_lemma(bailey_pair("B2"), MonomialSpec{1, 1, 0}, MonomialSpec{1, -1, 0}, 60).ok());
    CHECK(check_limiting_lemma(bailey_pair("GenericStar", 1), std::nullopt, std::nullopt, 60).ok());
    CHECK(check_limiting_lemma(bailey_pair("G4"), qmono(1), std::nullopt, 60).ok());
    CHECK(check_limiting_lemma(bailey_pair("B2"), std::nullopt, std::nullopt, 1).ok());
    CHECK_THROWS_AS(check_limiting_lemma(bailey_pair("B2"), qmono(2), qmono(1), 40), DivergentSpec);
}

TEST_CASE("lemma variants over the rescale set")
{
    for (int k = 1; k <= 7; ++k) {
        for (int h : lemma_rescale_set(k)) {
            for (const char *name : {"GenericStar", "GenericStarStar"}) {
                CAPTURE(k);
                CAPTURE(h);
                CAPTURE(name);
                CHECK(check_lemma_variant(k, bailey_pair(name, h), 60).ok());
            }
        }
    }
    CHECK_THROWS_AS(check_lemma_variant(5, bailey_pair("GenericStar", 1), 40), std::invalid_argument);
    CHECK_THROWS_AS(check_lemma_variant(8, bailey_pair("GenericStar", 1), 40), std::invalid_argument);
    CHECK_THROWS_AS(check_lemma_variant(7, bailey_pair("F3"), 40), DivergentSpec);
    CHECK(check_lemma_variant(1, bailey_pair("G4"), 1).ok());
}

TEST_CASE("lemma variants with catalog pairs")
{
    for (const char *name : {"B2", "G4", "AG4", "J1", "J2", "J3"}) {
        CAPTURE(name);
        CHECK(check_lemma_variant(2, bailey_pair(name), 80).ok());
        CHECK(check_lemma_variant(7, bailey_pair(name), 80).ok());
    }
}

TEST_CASE("perturbed alpha fails every variant")
{
    for (int k = 1; k <= 7; ++k) {
        auto p = bailey_pair("GenericStarStar", lemma_rescale_set(k).back());
        auto a = p.alpha;
        p.alpha = [a](int n) {
            auto v = a(n);
            if (n == 1) {
                for (auto &m : v) {
                    m.sign = -m.sign;
                }
            }
            return v;
        };
        CAPTURE(k);
        CHECK_FALSE(check_lemma_variant(k, p, 60).ok());
    }
}

TEST_CASE("conjugate pair")
{
    CHECK(check_conjugate_pair(MonomialSpec{1, 1, 0}, 2, 5, 50).ok());
    CHECK(check_conjugate_pair(MonomialSpec{1, 0, 0}, 1, 3, 50).ok());
    CHECK(check_conjugate_pair(MonomialSpec{1, 1, 0}, 2, 40, 20).ok());
}
