#include <sptforge/builders.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace sptforge {

Mode Mode::parse(const std::string &s)
{
    if (s == "symbolic") {
        return symbolic();
    }
    if (s == "one") {
        return one();
    }
    if (s.size() > 6 && s.rfind("root(", 0) == 0 && s.back() == ')') {
        int t = std::stoi(s.substr(5, s.size() - 6));
        if (!is_prime(t)) {
            throw std::invalid_argument("root order must be prime: " + s);
        }
        return root(t);
    }
    throw std::invalid_argument("unknown mode: " + s);
}

std::string Mode::name() const
{
    switch (kind) {
    case ModeKind::symbolic:
        return "symbolic";
    case ModeKind::root:
        return "root(" + std::to_string(t) + ")";
    case ModeKind::one:
        break;
    }
    return "one";
}

int any_order(const AnySeries &s)
{
    return std::visit([](const auto &x) { return x.order(); }, s);
}

std::string any_render(const AnySeries &s, int n)
{
    return std::visit(
        [n](const auto &x) {
            using R = std::decay_t<decltype(x.ring())>;
            return R::render(x[n]);
        },
        s);
}

std::optional<Mismatch> any_first_mismatch(const AnySeries &a, const AnySeries &b)
{
    if (a.index() != b.index()) {
        throw std::invalid_argument("comparing series over different rings");
    }
    return std::visit(
        [&b](const auto &x) {
            using S = std::decay_t<decltype(x)>;
            return first_mismatch(x, std::get<S>(b));
        },
        a);
}

int max_order()
{
    if (const char *env = std::getenv("SPTFORGE_MAX_ORDER")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 100000) {
            return static_cast<int>(v);
        }
    }
    return kMaxOrder;
}

int checked_order(int order)
{
    if (order < 0 || order > max_order()) {
        throw std::out_of_range("order " + std::to_string(order) + " outside [0, " + std::to_string(max_order())
                                + "]");
    }
    return order;
}

IntSeries jacobi_product(int a, int b, int order)
{
    if (!(0 < a && a < b)) {
        throw std::invalid_argument("jacobi_product needs 0 < a < b");
    }
    ProductTerm t(order);
    t.poch(a, b).poch(b - a, b);
    return t.evaluate(IntegerRing{});
}

IntSeries theta_sum(int A, int B, bool alternating, int order)
{
    if (A <= 0) {
        throw std::invalid_argument("theta_sum needs a positive quadratic coefficient");
    }
    IntSeries s(IntegerRing{}, order);
    const long reach = static_cast<long>(std::sqrt(2.0 * order / A)) + std::abs(B) / A + 2;
    for (long n = -reach; n <= reach; ++n) {
        long num = A * n * n + B * n;
        if (num % 2 != 0) {
            throw std::invalid_argument("theta_sum exponent is not an integer");
        }
        long e = num / 2;
        if (e < 0) {
            throw DivergentSpec("theta_sum with negative exponent");
        }
        if (e < order) {
            s.coeff(static_cast<int>(e)) += BigInt((alternating && (n % 2 != 0)) ? -1 : 1);
        }
    }
    return s;
}

void add_geometric(IntSeries &s, const BigInt &c, long e, long d, int dsign)
{
    if (d <= 0) {
        throw DivergentSpec("geometric series with nonpositive step");
    }
    if (e < 0) {
        throw DivergentSpec("negative q exponent " + std::to_string(e));
    }
    BigInt v = c;
    for (long k = e; k < s.order(); k += d) {
        s.coeff(static_cast<int>(k)) += v;
        if (dsign < 0) {
            v.negate();
        }
    }
}

IntSeries lambert_sum(int a, int b, int order)
{
    if (a <= 0 || b <= 0) {
        throw std::invalid_argument("lambert_sum needs positive a and b");
    }
    IntSeries s(IntegerRing{}, order);
    for (long n = 1; a * n < order; ++n) {
        add_geometric(s, BigInt(1), a * n, b * n);
    }
    return s;
}

IntSeries divisor_series(int r, int m, int order)
{
    if (m <= 0) {
        throw std::invalid_argument("divisor_series needs a positive modulus");
    }
    IntSeries s(IntegerRing{}, order);
    for (int n = 1; n < order; ++n) {
        BigInt c;
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) {
                continue;
            }
            if ((d - r) % m == 0) {
                c += BigInt(1);
            }
            if ((d + r) % m == 0) {
                c -= BigInt(1);
            }
        }
        s.coeff(n) = c;
    }
    return s;
}

IntSeries bilateral_sum(const BilateralSpec &sp, int order)
{
    if (sp.e2 <= 0 || sp.ediv <= 0) {
        throw std::invalid_argument("bilateral sum needs a positive quadratic exponent");
    }
    IntSeries s(IntegerRing{}, order);
    auto exponent = [&](long n) {
        long num = sp.e2 * n * n + sp.e1 * n;
        if (num % sp.ediv != 0) {
            throw std::invalid_argument("bilateral exponent is not an integer at n = " + std::to_string(n));
        }
        return num / sp.ediv + sp.e0;
    };
    // Past both vertices every term's leading exponent increases with |n|.
    const double v1 = std::abs(static_cast<double>(sp.e1)) / (2.0 * sp.e2);
    const double v2 = std::abs(static_cast<double>(sp.e1 - sp.ediv * sp.d1)) / (2.0 * sp.e2);
    const long vertex = static_cast<long>(std::max(v1, v2)) + 2;
    for (int dir : {1, -1}) {
        for (long n = (dir > 0 ? 0 : -1);; n += dir) {
            const long e = exponent(n);
            const long d = sp.d1 * n + sp.d0;
            const long lead = d >= 0 ? e : e - d;
            if (std::abs(n) > vertex && lead >= order) {
                break;
            }
            if (n == 0 && sp.skip_zero) {
                continue;
            }
            if (d == 0) {
                throw DivergentSpec("pole in bilateral sum at n = " + std::to_string(n));
            }
            int sign = sp.csign;
            if (sp.alternating && (n % 2 != 0)) {
                sign = -sign;
            }
            if (sp.wsign < 0 && (n % 2 != 0)) {
                sign = -sign;
            }
            if (d > 0) {
                if (e < 0) {
                    throw DivergentSpec("negative q exponent in bilateral term n = " + std::to_string(n));
                }
                add_geometric(s, BigInt(sign), e, d, sp.dsign);
            } else {
                if (lead < 0) {
                    throw DivergentSpec("negative q exponent in bilateral term n = " + std::to_string(n));
                }
                add_geometric(s, BigInt(-sign * sp.dsign), lead, -d, sp.dsign);
            }
        }
    }
    return s;
}

IntSeries series_V(int ell, int b, int order)
{
    BilateralSpec sp;
    sp.e2 = 2;
    sp.e1 = b;
    sp.d1 = 4L * ell;
    sp.skip_zero = true;
    return bilateral_sum(sp, order);
}

IntSeries series_U(int ell, int b, int order, int shift)
{
    BilateralSpec sp;
    sp.e0 = shift;
    sp.e2 = 2;
    sp.e1 = b;
    sp.d1 = 4L * ell;
    sp.d0 = 2L * ell;
    return bilateral_sum(sp, order);
}

IntSeries series_T(const MonomialSpec &z, const MonomialSpec &w, int Q, int order, int shift, int csign)
{
    if (z.z_exp != 0 || w.z_exp != 0) {
        throw std::invalid_argument("series_T takes q-monomials");
    }
    BilateralSpec sp;
    sp.e2 = Q;
    sp.e1 = Q + 2L * w.q_exp;
    sp.ediv = 2;
    sp.e0 = shift;
    sp.alternating = true;
    sp.wsign = w.sign;
    sp.csign = csign;
    sp.d1 = Q;
    sp.d0 = z.q_exp;
    sp.dsign = z.sign;
    return bilateral_sum(sp, order);
}

IntSeries series_Tstar(const MonomialSpec &w, int Q, int order, int shift, int csign)
{
    if (w.z_exp != 0) {
        throw std::invalid_argument("series_Tstar takes a q-monomial");
    }
    BilateralSpec sp;
    sp.e2 = Q;
    sp.e1 = Q + 2L * w.q_exp;
    sp.ediv = 2;
    sp.e0 = shift;
    sp.alternating = true;
    sp.wsign = w.sign;
    sp.csign = csign;
    sp.d1 = Q;
    sp.skip_zero = true;
    return bilateral_sum(sp, order);
}

IntSeries series_h(const MonomialSpec &z, int Q, int order)
{
    IntSeries s = series_Tstar(z.inverse(), Q, order);
    s += series_T(z.pow(2), z, Q, order, z.q_exp, z.sign);
    return s;
}

IntSeries bilateral_builder(BilateralKind kind, const BilateralParams &p, int order)
{
    switch (kind) {
    case BilateralKind::V:
        return series_V(p.ell, p.b, order);
    case BilateralKind::U:
        return series_U(p.ell, p.b, order);
    case BilateralKind::T:
        return series_T(p.z, p.w, p.Q, order);
    case BilateralKind::Tstar:
        return series_Tstar(p.w, p.Q, order);
    case BilateralKind::h:
        break;
    }
    return series_h(p.z, p.Q, order);
}

template <class Ring>
Series<Ring> rank_series(const Ring &ring, int order)
{
    auto s = Series<Ring>::one(ring, order);
    // (1 - z)(1 - 1/z) = 2 - z - 1/z
    auto c = ring.from_int(BigInt(2));
    Ring::add_shifted(c, ring.from_int(BigInt(1)), -1, 1);
    Ring::add_shifted(c, ring.from_int(BigInt(1)), -1, -1);
    for (int n = 1; n * (3 * n + 1) / 2 < order; ++n) {
        const int e = n * (3 * n + 1) / 2;
        Series<Ring> term(ring, order);
        const int sign = (n % 2 != 0) ? -1 : 1;
        Ring::add_shifted(term.coeff(e), c, sign, 0);
        if (e + n < order) {
            Ring::add_shifted(term.coeff(e + n), c, sign, 0);
        }
        term.div_binomial(1, 1, n);
        term.div_binomial(1, -1, n);
        s += term;
    }
    for (int j = 1; j < order; ++j) {
        s.div_binomial(1, 0, j);
    }
    return s;
}

template <class Ring>
Series<Ring> crank_series(const Ring &ring, int order)
{
    ProductTerm t(order);
    t.eta(1);
    t.times_poch(MonomialSpec{1, 1, 1}, qmono(1), std::nullopt, -1);
    t.times_poch(MonomialSpec{1, -1, 1}, qmono(1), std::nullopt, -1);
    return t.evaluate(ring);
}

template IntSeries rank_series(const IntegerRing &, int);
template CycSeries rank_series(const CyclotomicRing &, int);
template LaurentSeries rank_series(const LaurentRing &, int);
template IntSeries crank_series(const IntegerRing &, int);
template CycSeries crank_series(const CyclotomicRing &, int);
template LaurentSeries crank_series(const LaurentRing &, int);

AnySeries rank_series(const Mode &mode, int order)
{
    return with_mode(mode, [order](const auto &ring) { return rank_series(ring, order); });
}

AnySeries crank_series(const Mode &mode, int order)
{
    return with_mode(mode, [order](const auto &ring) { return crank_series(ring, order); });
}

} // namespace sptforge
