#include <sptforge/series.hpp>

namespace sptforge {

namespace {

std::optional<BigInt> unit_inverse(const IntegerRing &, const BigInt &v)
{
    if (v == BigInt(1) || v == BigInt(-1)) {
        return v;
    }
    return std::nullopt;
}

std::optional<CyclotomicInteger> unit_inverse(const CyclotomicRing &ring, const CyclotomicInteger &v)
{
    for (int k = 0; k < ring.t; ++k) {
        for (int sign : {1, -1}) {
            if (ring.zmono(sign, k) == v) {
                return ring.zmono(sign, -k);
            }
        }
    }
    return std::nullopt;
}

std::optional<LaurentPolynomial> unit_inverse(const LaurentRing &, const LaurentPolynomial &v)
{
    if (v.terms().size() == 1) {
        const auto &t = v.terms()[0];
        if (t.coeff == BigInt(1) || t.coeff == BigInt(-1)) {
            return LaurentPolynomial::monomial(t.coeff, -t.exp);
        }
    }
    return std::nullopt;
}

} // namespace

template <class Ring>
Series<Ring> series_invert(const Series<Ring> &a)
{
    const int n = a.order();
    Series<Ring> b(a.ring(), n);
    if (n == 0) {
        return b;
    }
    auto inv = unit_inverse(a.ring(), a[0]);
    if (!inv) {
        throw DivergentSpec("constant term " + Ring::render(a[0]) + " is not a unit");
    }
    b.coeff(0) = *inv;
    for (int m = 1; m < n; ++m) {
        typename Ring::Value acc = a.ring().zero();
        for (int i = 1; i <= m; ++i) {
            if (!Ring::is_zero(a[i])) {
                Ring::addmul(acc, a[i], b[m - i]);
            }
        }
        typename Ring::Value r = a.ring().zero();
        Ring::addmul(r, acc, *inv);
        typename Ring::Value neg = a.ring().zero();
        Ring::add_shifted(neg, r, -1, 0);
        b.coeff(m) = std::move(neg);
    }
    return b;
}

template IntSeries series_invert(const IntSeries &);
template CycSeries series_invert(const CycSeries &);
template LaurentSeries series_invert(const LaurentSeries &);

CycSeries eval_at_root(const LaurentSeries &s, int t)
{
    return s.map(CyclotomicRing{t}, [t](const LaurentPolynomial &p) { return p.eval_at_root(t); });
}

IntSeries eval_at_one(const LaurentSeries &s)
{
    return s.map(IntegerRing{}, [](const LaurentPolynomial &p) { return p.eval_at_one(); });
}

CycSeries cyc_times(const IntSeries &s, const CyclotomicInteger &c)
{
    return s.map(CyclotomicRing{c.t()}, [&c](const BigInt &v) {
        CyclotomicInteger r(c);
        r.scale(v);
        return r;
    });
}

} // namespace sptforge
