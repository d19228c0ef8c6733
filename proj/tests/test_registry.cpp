#include <doctest.h>

#include <sptforge/registry.hpp>

#include <set>

using namespace sptforge;

TEST_CASE("catalog shape")
{
    const auto &cat = catalog();
    CHECK(cat.size() >= 40);
    std::set<std::string> ids;
    for (const auto &c : cat) {
        CAPTURE(c.id);
        CHECK(ids.insert(c.id).second);
        CHECK_FALSE(c.citation.empty());
        CHECK(c.default_order > 0);
        if (c.ring == CaseRing::cyclotomic && c.t == 7) {
            CHECK(c.default_order >= 211);
        }
    }
    CHECK(std::is_sorted(cat.begin(), cat.end(), [](const auto &a, const auto &b) { return a.id < b.id; }));

    const IdentityCase *c = lookup("dissect_F3_3");
    REQUIRE(c != nullptr);
    CHECK(c->ring == CaseRing::cyclotomic);
    CHECK(c->t == 3);
    CHECK(c->ring_name() == "cyclotomic(3)");
    CHECK(lookup("nonexistent") == nullptr);
    CHECK_THROWS_AS(verify_case("nonexistent"), std::out_of_range);
}

TEST_CASE("mandatory ids are present")
{
    for (const char *id :
         {"series_J1", "series_J2", "series_J3", "series_F3", "series_G4", "series_AG4", "product_F3", "product_G4",
          "product_AG4", "dissect_B2_5", "dissect_B2_7", "dissect_F3_3", "dissect_F3_5", "dissect_F3_7",
          "dissect_G4_5", "dissect_AG4_5", "rank_zeta5", "rank_zeta7", "crank_zeta5", "crank_zeta7", "lemma_B2_rank",
          "b2_rank_crank", "f3_crank_mod3", "f3_crank_mod5", "f3_crank_mod7", "f3_rank_mod3", "f3_rank_mod5",
          "f3_rank_mod7", "one_psi_one", "gauss_half", "mod7_rank_pieces", "UV_symmetries", "lewis_T", "h25",
          "g4_crank_5", "relabel_gstar", "relabel_gstarstar"}) {
        CAPTURE(id);
        CHECK(lookup(id) != nullptr);
    }
    for (const char *pattern : {"lambert_berndt_*", "lambert_ALL_*", "theta_quotient_*", "heine_*", "UV_lemma_b*",
                                "h_combination_*", "g4_ag4_parts_5_*"}) {
        CAPTURE(pattern);
        int n = 0;
        for (const auto &c : catalog()) {
            n += glob_match(pattern, c.id) ? 1 : 0;
        }
        CHECK(n >= 2);
    }
}

TEST_CASE("verify_case examples")
{
    auto r = verify_case("dissect_F3_3", {240});
    CHECK(r.ok());
    CHECK(r.order == 240);

    r = verify_case("series_F3", {120});
    CHECK(r.ok());
    CHECK(r.order == 120);

    // override below the default keeps the default
    r = verify_case("dissect_F3_3", {10});
    CHECK(r.order == 240);
}

TEST_CASE("negative control fails at its first perturbed power")
{
    auto r = run_case(negative_control());
    CHECK_FALSE(r.ok());
    REQUIRE(r.first_mismatch.has_value());
    CHECK(r.first_mismatch->power == 1);
}

TEST_CASE("verify_all filtering and ordering")
{
    auto none = verify_all("no_such_case_*");
    CHECK(none.empty());
    CHECK(all_verified(none));

    auto d = verify_all("dissect_*", 4);
    REQUIRE(d.size() == 7);
    CHECK(all_verified(d));
    for (std::size_t i = 1; i < d.size(); ++i) {
        CHECK(d[i - 1].id < d[i].id);
    }
}

TEST_CASE("reports do not depend on parallelism")
{
    auto a = verify_all("f3_*", 1);
    auto b = verify_all("f3_*", 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].order == b[i].order);
        CHECK(a[i].status == b[i].status);
        CHECK(a[i].notes == b[i].notes);
    }
}

TEST_CASE("reference bounds pin the smaller orders")
{
    VerifyOptions opts;
    opts.reference_bounds = true;
    auto r = verify_case("f3_crank_mod7", opts);
    CHECK(r.ok());
    CHECK(r.order == 211);
    r = verify_case("mod7_rank_pieces", opts);
    CHECK(r.ok());
    CHECK(r.order == 148);
}

TEST_CASE("truncation monotonicity")
{
    auto lo = verify_case("crank_zeta5", {250});
    auto hi = verify_case("crank_zeta5", {400});
    CHECK(lo.ok());
    CHECK(hi.ok());
    CHECK(hi.order == 400);
}
