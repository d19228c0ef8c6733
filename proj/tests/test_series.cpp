#include <doctest.h>

#include <sptforge/builders.hpp>

using namespace sptforge;

namespace {

// p(n) by the pentagonal recurrence.
std::vector<BigInt> partition_numbers(int n)
{
    std::vector<BigInt> p(static_cast<std::size_t>(n), BigInt());
    p[0] = BigInt(1);
    for (int m = 1; m < n; ++m) {
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) {
                break;
            }
            int s = (k % 2 != 0) ? 1 : -1;
            p[m] += BigInt(s) * p[m - g1];
            if (g2 <= m) {
                p[m] += BigInt(s) * p[m - g2];
            }
        }
    }
    return p;
}

} // namespace

TEST_CASE("order semantics")
{
    IntSeries a = IntSeries::one(IntegerRing{}, 10);
    IntSeries b = IntSeries::one(IntegerRing{}, 6);
    CHECK((a + b).order() == 6);
    CHECK((a * b).order() == 6);
    CHECK_THROWS_AS(IntSeries::monomial(IntegerRing{}, BigInt(1), -1, 10), DivergentSpec);
    CHECK_THROWS_AS(a.shifted(-2), DivergentSpec);
}

TEST_CASE("euler product and partitions")
{
    const int N = 200;
    auto euler = pochhammer(IntegerRing{}, qmono(1), std::nullopt, qmono(1), N);
    CHECK(euler == theta_sum(3, -1, true, N));
    auto inv = series_invert(euler);
    auto p = partition_numbers(N);
    for (int n = 0; n < N; ++n) {
        REQUIRE(inv[n] == p[static_cast<std::size_t>(n)]);
    }
    CHECK(inv[100] == BigInt::from_string("190569292"));
    CHECK(eval_at_one(rank_series(LaurentRing{}, 60)) == inv.truncated(60));
    auto c = crank_series(IntegerRing{}, 60);
    CHECK(c == inv.truncated(60));
}

TEST_CASE("invert needs a unit constant term")
{
    IntSeries a(IntegerRing{}, 5);
    a.coeff(0) = BigInt(2);
    CHECK_THROWS_AS(series_invert(a), DivergentSpec);
    auto u = LaurentSeries::zq_monomial(LaurentRing{}, -1, 3, 0, 8);
    u.mul_binomial(1, 1, 2);
    auto prod = u * series_invert(u);
    CHECK(prod == LaurentSeries::one(LaurentRing{}, 8));
}

TEST_CASE("jacobi triple product")
{
    const int N = 150;
    // (q, q, q^2; q^2)... specialised: (q^2;q^2)(q;q^2)^2 = sum (-1)^n q^{n^2}
    ProductTerm t(N);
    t.eta(2).poch(1, 2, 2);
    CHECK(t.evaluate(IntegerRing{}) == theta_sum(2, 0, true, N));
    // (q^5;q^5) j(q^2;q^5) = sum (-1)^n q^{(5n^2 + n)/2}
    auto jp = jacobi_product(2, 5, N) * pochhammer(IntegerRing{}, qmono(5), std::nullopt, qmono(5), N);
    CHECK(jp == theta_sum(5, 1, true, N));
    CHECK_THROWS_AS(jacobi_product(5, 5, N), std::invalid_argument);
}

TEST_CASE("quasi periodic theta normalisation")
{
    const int N = 120;
    // j(q^12; q^5) = (-1)^2 q^{-2*2} q^{-5} j(q^2; q^5), so q^9 j(q^12;q^5) = j(q^2;q^5)
    ProductTerm a(N);
    a.times(qmono(9)).jac(12, 5);
    CHECK(a.evaluate(IntegerRing{}) == jacobi_product(2, 5, N));
    ProductTerm b(N);
    b.jac(-3, 5).times(qmono(3));
    // j(q^{-3}; q^5) = j(q^8; q^5) = -q^{-3} j(q^3; q^5)
    CHECK(b.evaluate(IntegerRing{}) == -jacobi_product(3, 5, N));
    ProductTerm z(N);
    z.jac(10, 5);
    CHECK(z.evaluate(IntegerRing{}).is_zero());
}

TEST_CASE("lambert and divisor series")
{
    const int N = 100;
    auto d = lambert_sum(1, 1, N);
    CHECK(d[12] == BigInt(6));
    CHECK(d[97] == BigInt(2));
    auto e = divisor_series(1, 3, N);
    auto diff = lambert_sum(1, 3, N) - lambert_sum(2, 3, N);
    CHECK(e == diff);
    // sum r_2(n) q^n / 4 = E_1(n;4)
    auto theta = theta_sum(2, 0, false, N);
    auto sq = theta * theta;
    auto e4 = divisor_series(1, 4, N);
    for (int n = 1; n < N; ++n) {
        REQUIRE(sq[n] == BigInt(4) * e4[n]);
    }
}

TEST_CASE("dissect and substitute")
{
    auto p = series_invert(pochhammer(IntegerRing{}, qmono(1), std::nullopt, qmono(1), 101));
    auto d = series_dissect(p, 5, 4);
    CHECK(d.order() == 20);
    for (int n = 0; n < d.order(); ++n) {
        REQUIRE(d[n].mod(5) == 0);
    }
    CHECK(p.dissect(3, 0).order() == 34);
    auto s = series_substitute(p, 3, true);
    CHECK(s.order() == 303);
    CHECK(s[3] == BigInt(-1));
    CHECK(s[6] == BigInt(2));
    CHECK(p.substitute(20, false).order() == 1200);
}

TEST_CASE("bilateral sums rewrite negative denominators")
{
    const int N = 200;
    // 1psi1 with q -> q^10, x = q, y = q^5:
    // (q^10;q^10)^2 j(q^6;q^10) / (j(q;q^10) j(q^5;q^10)) = sum_n q^n / (1 - q^{10n+5})
    BilateralSpec sp;
    sp.e2 = 0;
    CHECK_THROWS(bilateral_sum(sp, N));
    ProductTerm lhs(N);
    lhs.eta(10, 2).jac(6, 10).jac(1, 10, -1).jac(5, 10, -1);
    // sum_n q^n/(1 - q^{10n+5}) is not quadratic; write it as V-type with e2 = 0
    // through the theta quotient lemma instead: compare against a direct
    // expansion.
    IntSeries rhs(IntegerRing{}, N);
    for (long n = -40; n < N; ++n) {
        long d = 10 * n + 5;
        if (d > 0) {
            add_geometric(rhs, BigInt(1), n, d);
        } else {
            add_geometric(rhs, BigInt(-1), n - d, -d);
        }
    }
    CHECK(lhs.evaluate(IntegerRing{}) == rhs);

    // V_l(b) = -V_l(4l - b)
    CHECK(series_V(5, 3, N) == -series_V(5, 17, N));
    // U_l(b) = -q^{2l - b + 2} U_l(4l + 4 - b)
    // q^7 U_5(19) has terms with negative exponents before the shift.
    CHECK_THROWS_AS(series_U(5, 19, N), DivergentSpec);
    BilateralSpec u;
    u.e2 = 2;
    u.e1 = 19;
    u.e0 = 7;
    u.d1 = 20;
    u.d0 = 10;
    CHECK(series_U(5, 5, N) == -bilateral_sum(u, N));
}

TEST_CASE("h at q^25")
{
    const int N = 600;
    auto h = series_h(MonomialSpec{-1, 0, 25}, 100, N);
    CHECK(h[0] == BigInt(0));
    CHECK(h[25] == BigInt(-1));
    h.scale_int(BigInt(4));
    h.coeff(0) += BigInt(1);
    ProductTerm rhs(N);
    rhs.eta(100, 2).jac(50, 100, 3).jac(25, 100, -4, -1);
    CHECK(h == rhs.evaluate(IntegerRing{}));
}
