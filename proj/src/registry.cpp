#include <sptforge/registry.hpp>

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cctype>
#include <stdexcept>
#include <thread>

namespace sptforge {

namespace {

using Cyc = CyclotomicInteger;

// Parses sums such as "1 - 2z + 3z^4" into Z[zeta_t].
Cyc cz(int t, const std::string &expr)
{
    Cyc out(t);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) {
            ++i;
        }
    };
    auto number = [&] {
        long v = 0;
        while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
            v = v * 10 + (expr[i++] - '0');
        }
        return v;
    };
    skip();
    while (i < expr.size()) {
        int sign = 1;
        if (expr[i] == '+' || expr[i] == '-') {
            sign = expr[i] == '-' ? -1 : 1;
            ++i;
            skip();
        }
        long coef = 1;
        if (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
            coef = number();
        }
        long power = 0;
        if (i < expr.size() && expr[i] == 'z') {
            ++i;
            power = 1;
            if (i < expr.size() && expr[i] == '^') {
                ++i;
                power = number();
            }
        }
        out.add_rotated(Cyc::from_int(t, BigInt(coef)), sign, power);
        skip();
    }
    return out;
}

// Factors of an integer eta/theta quotient.
struct Fac {
    enum Kind { eta, poch, jac } kind;
    int a;
    int b;
    int mult;
    int sign;
};

Fac eta(int b, int mult = 1)
{
    return {Fac::eta, b, b, mult, 1};
}
Fac poch(int a, int b, int mult = 1, int sign = 1)
{
    return {Fac::poch, a, b, mult, sign};
}
Fac jac(int a, int b, int mult = 1, int sign = 1)
{
    return {Fac::jac, a, b, mult, sign};
}

// sign * q^shift * prod of factors
IntSeries pq(int order, int shift, std::initializer_list<Fac> fs, int sign = 1)
{
    ProductTerm t(order);
    t.times(qmono(shift, sign));
    for (const auto &f : fs) {
        switch (f.kind) {
        case Fac::eta:
            t.eta(f.b, f.mult);
            break;
        case Fac::poch:
            t.poch(f.a, f.b, f.mult, f.sign);
            break;
        case Fac::jac:
            t.jac(f.a, f.b, f.mult, f.sign);
            break;
        }
    }
    return t.evaluate(IntegerRing{});
}

struct Piece {
    Cyc c;
    IntSeries s;
};

CycSeries combo(int t, int order, const std::vector<Piece> &pieces)
{
    CycSeries out(CyclotomicRing{t}, order);
    for (const auto &p : pieces) {
        out += cyc_times(p.s, p.c);
    }
    return out;
}

IntSeries int_combo(int order, const std::vector<std::pair<long, IntSeries>> &pieces)
{
    IntSeries out(IntegerRing{}, order);
    for (const auto &[k, s] : pieces) {
        IntSeries x = s;
        x.scale_int(BigInt(k));
        out += x;
    }
    return out;
}

IntSeries one(int order)
{
    return IntSeries::one(IntegerRing{}, order);
}

// q^shift / (q^m; q^m)_inf * sum_n (-1)^n q^{3m n(n+1)/2} / (1 - q^{mn+k})
IntSeries rank_bilateral(int m, int k, int shift, int order)
{
    BilateralSpec sp;
    sp.e2 = 3L * m;
    sp.e1 = 3L * m;
    sp.ediv = 2;
    sp.alternating = true;
    sp.d1 = m;
    sp.d0 = k;
    return bilateral_sum(sp, order) * pq(order, shift, {eta(m, -1)});
}

const MonomialSum kTwoMinus = {{1, 0, 0}, {1, 0, 0}, {-1, 1, 0}, {-1, -1, 0}};

// 1 + sum_{n>=1} (1-z)(1-z^{-1}) lead(n) extra(n) / ((1 - z q^{den n})(1 - z^{-1} q^{den n}))
template <class Ring>
Series<Ring> rank_type_sum(const Ring &ring, int order, int den, const std::function<MonomialSpec(int)> &lead,
                           const std::function<MonomialSum(int)> &extra)
{
    auto s = Series<Ring>::one(ring, order);
    const auto unit = ring.from_int(BigInt(1));
    for (int n = 1; n < order + 2; ++n) {
        const MonomialSpec l = lead(n);
        if (l.q_exp >= order) {
            break;
        }
        Series<Ring> term(ring, order);
        for (const auto &m : extra(n)) {
            for (const auto &f : kTwoMinus) {
                const MonomialSpec x = l * m * f;
                if (x.q_exp < order) {
                    Ring::add_shifted(term.coeff(x.q_exp), unit, x.sign, x.z_exp);
                }
            }
        }
        term.div_binomial(1, 1, den * n);
        term.div_binomial(1, -1, den * n);
        s += term;
    }
    return s;
}

MonomialSpec signed_q(int n, int e)
{
    return qmono(e, (n % 2 != 0) ? -1 : 1);
}

// Lambert sum with per-residue weights: sum_{n>=1} sum_r w_r q^{r n} / (1 - q^{m n}).
IntSeries lambert_combo(int m, const std::vector<std::pair<int, long>> &weights, int order)
{
    std::vector<std::pair<long, IntSeries>> parts;
    for (const auto &[r, w] : weights) {
        parts.emplace_back(w, lambert_sum(r, m, order));
    }
    return int_combo(order, parts);
}

CycSeries at_root(Family f, int t, int order)
{
    return std::get<CycSeries>(build_spt_crank(f, Mode::root(t), order));
}

LaurentSeries symbolic(Family f, int order)
{
    return std::get<LaurentSeries>(build_spt_crank(f, Mode::symbolic(), order));
}

LaurentPolynomial lpoly(const MonomialSum &ms)
{
    LaurentPolynomial p;
    for (const auto &m : ms) {
        p += LaurentPolynomial::monomial(BigInt(m.sign), m.z_exp);
    }
    return p;
}

std::vector<Comparison> one_cmp(AnySeries lhs, AnySeries rhs)
{
    std::vector<Comparison> v;
    v.push_back({"identity", std::move(lhs), std::move(rhs)});
    return v;
}

// ---- single-series theorem --------------------------------------------------

MonomialSum j_poly(Family f, int j)
{
    switch (f) {
    case Family::J1:
        return {qmono(0), qmono(j, -1), qmono(2 * j - 2, -1), qmono(4 * j - 3), qmono(5 * j - 2), qmono(6 * j - 3, -1)};
    case Family::J2:
        return {qmono(0), qmono(j - 1, -1), qmono(2 * j, -1), qmono(4 * j - 1), qmono(5 * j - 3), qmono(6 * j - 3, -1)};
    case Family::J3:
        return {qmono(j - 1),     qmono(j, -1),     qmono(2 * j - 2, -1), qmono(2 * j),
                qmono(4 * j - 3), qmono(4 * j - 1, -1), qmono(5 * j - 3, -1), qmono(5 * j - 2)};
    default:
        break;
    }
    throw std::invalid_argument("no single-series polynomial for " + family_name(f));
}

// (1 - z^{j-1})(1 - z^j) z^{1-j}
MonomialSum z_part(int j)
{
    return {{1, 1 - j, 0}, {-1, 0, 0}, {-1, 1, 0}, {1, j, 0}};
}

// ---- catalog ----------------------------------------------------------------

IdentityCase make(std::string id, CaseRing ring, int t, int order, std::string citation,
                  std::function<std::vector<Comparison>(int)> build, int reference_order = 0)
{
    IdentityCase c;
    c.id = std::move(id);
    c.ring = ring;
    c.t = t;
    c.default_order = order;
    c.reference_order = reference_order;
    c.citation = std::move(citation);
    c.build = std::move(build);
    return c;
}

constexpr int kOrderZeta3 = 240;
constexpr int kOrderZeta = kDefaultOrderCyclotomic;
constexpr int kOrderTwoVar = kDefaultOrderTwoVariable;
constexpr int kOrderProduct = 150;
constexpr int kOrderInteger = 500;

void add_single_series(std::vector<IdentityCase> &cat)
{
    const std::pair<Family, const char *> rows[] = {
        {Family::J1, "single-series form of (1+z)(z,z^{-1},q;q)_inf S_{J1}(z,q)"},
        {Family::J2, "single-series form of (1+z)(z,z^{-1},q;q)_inf S_{J2}(z,q)"},
        {Family::J3, "single-series form of (1+z)(z,z^{-1},q;q)_inf S_{J3}(z,q)"},
        {Family::F3, "single-series form of (1+z)(z,z^{-1},q;q^2)_inf S_{F3}(z,q)"},
        {Family::G4, "single-series form of (1+z)(z,z^{-1};q^2)_inf S_{G4}(z,q)"},
        {Family::AG4, "single-series form of (1+z)(z,z^{-1};q^2)_inf S_{AG4}(z,q)"},
    };
    for (const auto &[f, cite] : rows) {
        cat.push_back(make("series_" + family_name(f), CaseRing::two_variable, 0, kOrderTwoVar, cite,
                           [f = f](int order) {
                               return one_cmp(single_series_lhs(f, order), single_series_rhs(f, order));
                           }));
    }
    cat.push_back(make("series_J_sum", CaseRing::two_variable, 0, kOrderTwoVar,
                       "RHS_{J1} = RHS_{J2} + RHS_{J3}", [](int order) {
                           return one_cmp(single_series_rhs(Family::J1, order),
                                          single_series_rhs(Family::J2, order) + single_series_rhs(Family::J3, order));
                       }));
}

void add_products(std::vector<IdentityCase> &cat)
{
    const MonomialSpec z{1, 1, 0};
    const MonomialSpec zi{1, -1, 0};
    auto poch_z = [](ProductTerm &t, MonomialSpec arg, int base, int mult = 1) -> ProductTerm & {
        return t.times_poch(arg, qmono(base), std::nullopt, mult);
    };
    // (1 - z)(1 - z^{-1}) S_X, optionally times (1 + z)
    auto lhs = [z, zi](Family f, int order, bool with_plus) {
        LaurentSeries s = symbolic(f, order);
        FactorBag bag;
        bag.add(z);
        bag.add(zi);
        if (with_plus) {
            bag.add({-1, 1, 0});
        }
        bag.apply(s);
        return s;
    };
    cat.push_back(make(
        "product_F3", CaseRing::two_variable, 0, kOrderProduct,
        "product form S_{F3}(z,q) = (zq,z^{-1}q,q^2;q^2)_inf/((z,z^{-1},q;q^2)_inf) - ...",
        [=](int order) {
            LaurentSeries rhs(LaurentRing{}, order);
            ProductTerm a(order);
            poch_z(a, {1, 1, 1}, 2);
            poch_z(a, {1, -1, 1}, 2);
            a.poch(2, 2).poch(1, 2, -1);
            poch_z(a, {1, 1, 2}, 2, -1);
            poch_z(a, {1, -1, 2}, 2, -1);
            ProductTerm b(order);
            b.times(qmono(0, -1)).eta(1);
            poch_z(b, {1, 1, 2}, 2, -1);
            poch_z(b, {1, -1, 2}, 2, -1);
            rhs += a.evaluate(LaurentRing{});
            rhs += b.evaluate(LaurentRing{});
            return one_cmp(lhs(Family::F3, order, false), rhs);
        }));
    for (Family f : {Family::G4, Family::AG4}) {
        const bool g4 = f == Family::G4;
        cat.push_back(make(
            "product_" + family_name(f), CaseRing::two_variable, 0, kOrderProduct,
            g4 ? "product form S_{G4}(z,q) = z(-z^{-1}q,-zq^3,q^4;q^4)_inf/((1+z)(z,z^{-1};q^2)_inf) + ..."
               : "product form S_{AG4}(z,q) = z(-zq,-z^{-1}q^3,q^4;q^4)_inf/((1+z)(z,z^{-1};q^2)_inf) + ...",
            [=](int order) {
                // (1+z)(1-z)(1-z^{-1}) S = z P(u) + P(v) - (1+z)(q^2;q^2)/(q;q^2) / (zq^2,z^{-1}q^2;q^2)
                const MonomialSpec u1 = g4 ? MonomialSpec{-1, -1, 1} : MonomialSpec{-1, 1, 1};
                const MonomialSpec u3 = g4 ? MonomialSpec{-1, 1, 3} : MonomialSpec{-1, -1, 3};
                const MonomialSpec v1 = g4 ? MonomialSpec{-1, 1, 1} : MonomialSpec{-1, -1, 1};
                const MonomialSpec v3 = g4 ? MonomialSpec{-1, -1, 3} : MonomialSpec{-1, 1, 3};
                auto denom = [&](ProductTerm &t) {
                    poch_z(t, {1, 1, 2}, 2, -1);
                    poch_z(t, {1, -1, 2}, 2, -1);
                };
                ProductTerm a(order);
                a.times({1, 1, 0});
                poch_z(a, u1, 4);
                poch_z(a, u3, 4);
                a.eta(4);
                denom(a);
                ProductTerm b(order);
                poch_z(b, v1, 4);
                poch_z(b, v3, 4);
                b.eta(4);
                denom(b);
                ProductTerm c(order);
                c.times(qmono(0, -1)).times_binomial({-1, 1, 0}).eta(2).poch(1, 2, -1);
                denom(c);
                LaurentSeries rhs = a.evaluate(LaurentRing{});
                rhs += b.evaluate(LaurentRing{});
                rhs += c.evaluate(LaurentRing{});
                return one_cmp(lhs(f, order, true), rhs);
            }));
    }
}

void add_dissections(std::vector<IdentityCase> &cat)
{
    cat.push_back(make(
        "dissect_B2_5", CaseRing::cyclotomic, 5, kOrderZeta, "dissection of S_{B2}(zeta_5,q)",
        [](int o) {
            auto c = [](const char *e) { return cz(5, e); };
            CycSeries rhs = combo(5, o,
                                  {{c("1"), one(o)},
                                   {c("-1"), pq(o, 0, {eta(25), jac(10, 25), jac(5, 25, -2)})},
                                   {c("1-z-z^4"), rank_bilateral(25, 5, 5, o)},
                                   {c("1"), pq(o, 2, {eta(25), jac(10, 25, -1)})},
                                   {c("z+z^4"), pq(o, 3, {eta(25), jac(5, 25), jac(10, 25, -2)})},
                                   {c("z+z^4"), rank_bilateral(25, 10, 8, o)}});
            return one_cmp(at_root(Family::B2, 5, o), rhs);
        }));
    cat.push_back(make(
        "dissect_B2_7", CaseRing::cyclotomic, 7, kOrderZeta, "dissection of S_{B2}(zeta_7,q)",
        [](int o) {
            auto c = [](const char *e) { return cz(7, e); };
            CycSeries rhs =
                combo(7, o,
                      {{c("z+z^6"), one(o)},
                       {c("-z-z^6"), pq(o, 0, {eta(49), jac(21, 49), jac(7, 49, -1), jac(14, 49, -1)})},
                       {c("-1+z+z^6"), rank_bilateral(49, 7, 7, o)},
                       {c("1"), pq(o, 2, {eta(49), jac(14, 49), jac(7, 49, -1), jac(21, 49, -1)})},
                       {c("1+z^2+z^5"), rank_bilateral(49, 21, 16, o)},
                       {c("z+z^6"), pq(o, 3, {eta(49), jac(14, 49, -1)})},
                       {c("1+z+z^2+z^5+z^6"), pq(o, 4, {eta(49), jac(21, 49, -1)})},
                       {c("-z^2-z^5"), rank_bilateral(49, 14, 13, o)},
                       {c("1"), pq(o, 6, {eta(49), jac(7, 49), jac(14, 49, -1), jac(21, 49, -1)})}});
            return one_cmp(at_root(Family::B2, 7, o), rhs);
        }));
    cat.push_back(make(
        "dissect_F3_3", CaseRing::cyclotomic, 3, kOrderZeta3, "dissection of S_{F3}(zeta_3,q)",
        [](int o) {
            CycSeries rhs = combo(3, o,
                                  {{cz(3, "1"), pq(o, 1, {eta(18), eta(9), eta(6, -1)})},
                                   {cz(3, "1"), pq(o, 2, {eta(18, 4), eta(3), eta(9, -2), eta(6, -2)})}});
            return one_cmp(at_root(Family::F3, 3, o), rhs);
        }));
    cat.push_back(make(
        "dissect_F3_5", CaseRing::cyclotomic, 5, kOrderZeta, "dissection of S_{F3}(zeta_5,q)",
        [](int o) {
            auto c = [](const char *e) { return cz(5, e); };
            // both sides times 5
            CycSeries rhs =
                combo(5, o,
                      {{c("5"), pq(o, 1, {eta(25), jac(10, 50, -1)})},
                       {c("3+z+z^4"), pq(o, 2, {eta(50), jac(15, 50), poch(25, 50, -1), jac(10, 50, -1)})},
                       {c("-1-2z-2z^4"), pq(o, 2, {eta(25), jac(10, 25), jac(5, 25, -1), jac(20, 50, -1)})},
                       {c("3+z+z^4"), pq(o, 2, {eta(25), jac(5, 25), jac(10, 25, -1), jac(10, 50, -1)})},
                       {c("-1-2z-2z^4"), pq(o, 7, {eta(50), jac(5, 50), poch(25, 50, -1), jac(20, 50, -1)})},
                       {c("5+5z+5z^4"), pq(o, 3, {eta(25), jac(20, 50, -1)})}});
            CycSeries lhs = at_root(Family::F3, 5, o);
            lhs.scale_int(BigInt(5));
            return one_cmp(lhs, rhs);
        }));
    cat.push_back(make(
        "dissect_F3_7", CaseRing::cyclotomic, 7, kOrderZeta, "dissection of S_{F3}(zeta_7,q)",
        [](int o) {
            auto c = [](const char *e) { return cz(7, e); };
            // both sides times 7
            CycSeries rhs = combo(
                7, o,
                {{c("18+9z+3z^2+3z^5+9z^6"), pq(o, 1, {eta(98), jac(35, 98), poch(49, 98, -1), jac(14, 98, -1)})},
                 {c("-5-6z-2z^2-2z^5-6z^6"), pq(o, 1, {eta(14), poch(7, 14, -1)})},
                 {c("2+z-2z^2-2z^5+z^6"), pq(o, 8, {eta(98), jac(21, 98), poch(49, 98, -1), jac(28, 98, -1)})},
                 {c("-2-z+2z^2+2z^5-z^6"), pq(o, 1, {eta(49), jac(35, 98), jac(21, 49, -1)})},
                 {c("-4-2z-3z^2-3z^5-2z^6"), pq(o, 1, {eta(49), jac(21, 98), jac(7, 49, -1)})},
                 {c("7"), pq(o, 2, {eta(49), jac(14, 49), jac(7, 49, -1), jac(28, 98, -1)})},
                 {c("7+7z+7z^6"), pq(o, 3, {eta(49), jac(7, 49), jac(21, 49, -1), jac(14, 98, -1)})},
                 {c("7+7z+7z^2+7z^5+7z^6"), pq(o, 5, {eta(49), jac(21, 49), jac(14, 49, -1), jac(42, 98, -1)})}});
            CycSeries lhs = at_root(Family::F3, 7, o);
            lhs.scale_int(BigInt(7));
            return one_cmp(lhs, rhs);
        }));
    cat.push_back(make(
        "dissect_G4_5", CaseRing::cyclotomic, 5, kOrderZeta, "dissection of S_{G4}(zeta_5,q)",
        [](int o) {
            auto c = [](const char *e) { return cz(5, e); };
            CycSeries rhs =
                combo(5, o,
                      {{c("-1-z-z^4"), pq(o, 10, {eta(100), jac(10, 200), jac(10, 50, -1), jac(5, 100, -1)})},
                       {c("-z-z^4"), pq(o, 5, {eta(50), poch(25, 50, -1), jac(20, 50, -1)})},
                       {c("-1"), pq(o, 6, {eta(100), jac(30, 200), jac(10, 50, -1), jac(15, 100, -1)})},
                       {c("-1"), pq(o, 12, {eta(100), jac(10, 200), jac(20, 50, -1), jac(5, 100, -1)})},
                       {c("-1"), pq(o, 3, {eta(50), poch(25, 50, -1), jac(10, 50, -1)})},
                       {c("-z-z^4"), pq(o, 8, {eta(100), jac(30, 200), jac(20, 50, -1), jac(15, 100, -1)})}});
            return one_cmp(at_root(Family::G4, 5, o), rhs);
        }));
    cat.push_back(make(
        "dissect_AG4_5", CaseRing::cyclotomic, 5, kOrderZeta, "dissection of S_{AG4}(zeta_5,q)",
        [](int o) {
            auto c = [](const char *e) { return cz(5, e); };
            CycSeries rhs =
                combo(5, o,
                      {{c("-1"), pq(o, 10, {eta(100), jac(10, 200), jac(10, 50, -1), jac(5, 100, -1)})},
                       {c("-1"), pq(o, 1, {eta(100), jac(70, 200), jac(10, 50, -1), jac(35, 100, -1)})},
                       {c("-1-z-z^4"), pq(o, 6, {eta(100), jac(30, 200), jac(10, 50, -1), jac(15, 100, -1)})},
                       {c("-z-z^4"), pq(o, 12, {eta(100), jac(10, 200), jac(20, 50, -1), jac(5, 100, -1)})},
                       {c("-z-z^4"), pq(o, 3, {eta(100), jac(70, 200), jac(20, 50, -1), jac(35, 100, -1)})},
                       {c("-1"), pq(o, 8, {eta(100), jac(30, 200), jac(20, 50, -1), jac(15, 100, -1)})}});
            return one_cmp(at_root(Family::AG4, 5, o), rhs);
        }));
}

void add_rank_crank(std::vector<IdentityCase> &cat)
{
    cat.push_back(make(
        "rank_zeta5", CaseRing::cyclotomic, 5, kOrderZeta, "dissection of R(zeta_5,q)",
        [](int o) {
            auto c = [](const char *e) { return cz(5, e); };
            CycSeries rhs = combo(5, o,
                                  {{c("1"), pq(o, 0, {eta(25), jac(10, 25), jac(5, 25, -2)})},
                                   {c("z+z^4-2"), rank_bilateral(25, 5, 5, o)},
                                   {c("1"), pq(o, 1, {eta(25), jac(5, 25, -1)})},
                                   {c("z+z^4"), pq(o, 2, {eta(25), jac(10, 25, -1)})},
                                   {c("-z-z^4"), pq(o, 3, {eta(25), jac(5, 25), jac(10, 25, -2)})},
                                   {c("-2z-2z^4-1"), rank_bilateral(25, 10, 8, o)}});
            return one_cmp(rank_series(CyclotomicRing{5}, o), rhs);
        }));
    cat.push_back(make(
        "rank_zeta7", CaseRing::cyclotomic, 7, kOrderZeta, "dissection of R(zeta_7,q)",
        [](int o) {
            auto c = [](const char *e) { return cz(7, e); };
            CycSeries rhs =
                combo(7, o,
                      {{c("2-z-z^6"), one(o)},
                       {c("-1+z+z^6"), pq(o, 0, {eta(49), jac(21, 49), jac(7, 49, -1), jac(14, 49, -1)})},
                       {c("2-z-z^6"), rank_bilateral(49, 7, 7, o)},
                       {c("1"), pq(o, 1, {eta(49), jac(7, 49, -1)})},
                       {c("z+z^6"), pq(o, 2, {eta(49), jac(14, 49), jac(7, 49, -1), jac(21, 49, -1)})},
                       {c("z-z^2-z^5+z^6"), rank_bilateral(49, 21, 16, o)},
                       {c("1+z^2+z^5"), pq(o, 3, {eta(49), jac(14, 49, -1)})},
                       {c("-z^2-z^5"), pq(o, 4, {eta(49), jac(21, 49, -1)})},
                       {c("1+z+2z^2+2z^5+z^6"), rank_bilateral(49, 14, 13, o)},
                       {c("z+z^2+z^5+z^6"), pq(o, 6, {eta(49), jac(7, 49), jac(14, 49, -1), jac(21, 49, -1)})}});
            return one_cmp(rank_series(CyclotomicRing{7}, o), rhs);
        }));
    cat.push_back(make(
        "crank_zeta5", CaseRing::cyclotomic, 5, kOrderZeta, "dissection of C(zeta_5,q)", [](int o) {
            auto c = [](const char *e) { return cz(5, e); };
            CycSeries rhs = combo(5, o,
                                  {{c("1"), pq(o, 0, {eta(25), jac(10, 25), jac(5, 25, -2)})},
                                   {c("z+z^4-1"), pq(o, 1, {eta(25), jac(5, 25, -1)})},
                                   {c("-z-z^4-1"), pq(o, 2, {eta(25), jac(10, 25, -1)})},
                                   {c("-z-z^4"), pq(o, 3, {eta(25), jac(5, 25), jac(10, 25, -2)})}});
            return one_cmp(crank_series(CyclotomicRing{5}, o), rhs);
        }));
    cat.push_back(make(
        "crank_zeta7", CaseRing::cyclotomic, 7, kOrderZeta, "dissection of C(zeta_7,q)", [](int o) {
            auto c = [](const char *e) { return cz(7, e); };
            CycSeries rhs =
                combo(7, o,
                      {{c("1"), pq(o, 0, {eta(49), jac(21, 49), jac(7, 49, -1), jac(14, 49, -1)})},
                       {c("z+z^6-1"), pq(o, 1, {eta(49), jac(7, 49, -1)})},
                       {c("z^2+z^5"), pq(o, 2, {eta(49), jac(14, 49), jac(7, 49, -1), jac(21, 49, -1)})},
                       {c("-z-z^2-z^5-z^6"), pq(o, 3, {eta(49), jac(14, 49, -1)})},
                       {c("-z-z^6"), pq(o, 4, {eta(49), jac(21, 49, -1)})},
                       {c("-z^2-z^5-1"), pq(o, 6, {eta(49), jac(7, 49), jac(14, 49, -1), jac(21, 49, -1)})}});
            return one_cmp(crank_series(CyclotomicRing{7}, o), rhs);
        }));
    cat.push_back(make(
        "lemma_B2_rank", CaseRing::two_variable, 0, kOrderTwoVar,
        "rank lemma \"(z+z^{-1}-1)R(z,q) + (1-z)(1-z^{-1})\"", [](int o) {
            LaurentSeries lhs = rank_type_sum(
                LaurentRing{}, o, 1, [](int n) { return signed_q(n, n * (3 * n - 1) / 2); },
                [](int n) { return MonomialSum{qmono(0), qmono(3 * n)}; });
            lhs *= pq(o, 0, {eta(1, -1)}).map(LaurentRing{}, [](const BigInt &v) {
                return LaurentPolynomial::constant(v);
            });
            LaurentSeries rhs = rank_series(LaurentRing{}, o);
            rhs.scale(lpoly({{1, 1, 0}, {1, -1, 0}, {-1, 0, 0}}));
            rhs += LaurentSeries::constant(LaurentRing{}, lpoly(kTwoMinus), o);
            return one_cmp(lhs, rhs);
        }));
    cat.push_back(make(
        "b2_rank_crank", CaseRing::two_variable, 0, kOrderTwoVar,
        "S_{B2} from rank and crank \"((z+z^{-1}-1)R(z,q)-C(z,q))/((1-z)(1-z^{-1}))+1\"", [](int o) {
            // (1-z)(1-z^{-1})(S_{B2} - 1) = (z+z^{-1}-1)R - C
            LaurentSeries lhs = symbolic(Family::B2, o) - LaurentSeries::one(LaurentRing{}, o);
            lhs.scale(lpoly(kTwoMinus));
            LaurentSeries rhs = rank_series(LaurentRing{}, o);
            rhs.scale(lpoly({{1, 1, 0}, {1, -1, 0}, {-1, 0, 0}}));
            rhs -= crank_series(LaurentRing{}, o);
            return one_cmp(lhs, rhs);
        }));
}

// (q; q^2)_inf / (q^2; q^2)_inf (1 + sum (1-z)(1-z^{-1}) q^n (1+q^{2n}) / ((1-zq^{2n})(1-z^{-1}q^{2n})))
CycSeries f3_rank_side(int t, int o)
{
    CycSeries s = rank_type_sum(
        CyclotomicRing{t}, o, 2, [](int n) { return qmono(n); },
        [](int n) { return MonomialSum{qmono(0), qmono(2 * n)}; });
    return s * embed(pq(o, 0, {poch(1, 2), eta(2, -1)}), CyclotomicRing{t});
}

// (q; q)_inf / (zeta q^2, zeta^{-1} q^2; q^2)_inf
CycSeries f3_crank_side(int t, int o)
{
    ProductTerm p(o);
    p.eta(1);
    p.times_poch({1, 1, 2}, qmono(2), std::nullopt, -1);
    p.times_poch({1, -1, 2}, qmono(2), std::nullopt, -1);
    return p.evaluate(CyclotomicRing{t});
}

void add_f3_pieces(std::vector<IdentityCase> &cat)
{
    cat.push_back(make(
        "f3_crank_mod3", CaseRing::cyclotomic, 3, kOrderZeta3,
        "F3 crank part mod 3 \"(q,q^2;q^2)_inf/((zeta_3q^2,zeta_3^{-1}q^2;q^2)_inf)\"", [](int o) {
            auto c = [](const char *e) { return cz(3, e); };
            CycSeries rhs = combo(3, o,
                                  {{c("1"), pq(o, 0, {eta(9, 4), eta(18, -2), eta(3, -1)})},
                                   {c("-1"), pq(o, 1, {eta(18), eta(9), eta(6, -1)})},
                                   {c("-2"), pq(o, 2, {eta(18, 4), eta(3), eta(9, -2), eta(6, -2)})}});
            return one_cmp(f3_crank_side(3, o), rhs);
        }));
    cat.push_back(make(
        "f3_crank_mod5", CaseRing::cyclotomic, 5, kOrderZeta,
        "F3 crank part mod 5 \"(q,q^2;q^2)_inf/((zeta_5q^2,zeta_5^4q^2;q^2)_inf)\"", [](int o) {
            auto c = [](const char *e) { return cz(5, e); };
            CycSeries rhs = combo(5, o,
                                  {{c("1"), pq(o, 0, {eta(25), jac(15, 50), jac(5, 25, -1)})},
                                   {c("-1"), pq(o, 1, {eta(25), jac(10, 50, -1)})},
                                   {c("z+z^4"), pq(o, 2, {eta(25), jac(10, 25), jac(5, 25, -1), jac(20, 50, -1)})},
                                   {c("-1"), pq(o, 2, {eta(25), jac(5, 25), jac(10, 25, -1), jac(10, 50, -1)})},
                                   {c("-z-z^4"), pq(o, 3, {eta(25), jac(20, 50, -1)})},
                                   {c("-z-z^4"), pq(o, 4, {eta(25), jac(5, 50), jac(10, 25, -1)})}});
            return one_cmp(f3_crank_side(5, o), rhs);
        }));
    cat.push_back(make(
        "f3_crank_mod7", CaseRing::cyclotomic, 7, kOrderZeta,
        "F3 crank part mod 7 \"(q,q^2;q^2)_inf/((zeta_7q^2,zeta_7^{-1}q^2;q^2)_inf)\"",
        [](int o) {
            auto c = [](const char *e) { return cz(7, e); };
            CycSeries rhs =
                combo(7, o,
                      {{c("1"), pq(o, 0, {eta(49), jac(14, 98, -1)})},
                       {c("-z^2-z^5"), pq(o, 1, {eta(49), jac(35, 98), jac(21, 49, -1)})},
                       {c("1+z^2+z^5"), pq(o, 1, {eta(49), jac(21, 98), jac(7, 49, -1)})},
                       {c("-2"), pq(o, 1, {eta(98), jac(35, 98), poch(49, 98, -1), jac(14, 98, -1)})},
                       {c("-1+z+z^6"), pq(o, 2, {eta(49), jac(14, 49), jac(7, 49, -1), jac(28, 98, -1)})},
                       {c("-z-z^6"), pq(o, 3, {eta(49), jac(7, 49), jac(21, 49, -1), jac(14, 98, -1)})},
                       {c("1+z^2+z^5"), pq(o, 4, {eta(49), jac(28, 98, -1)})},
                       {c("-z-z^2-z^5-z^6"), pq(o, 5, {eta(49), jac(21, 49), jac(14, 49, -1), jac(42, 98, -1)})},
                       {c("-z^2-z^5"), pq(o, 6, {eta(49), jac(42, 98, -1)})}});
            return one_cmp(f3_crank_side(7, o), rhs);
        },
        211));
    cat.push_back(make(
        "f3_rank_mod3", CaseRing::cyclotomic, 3, kOrderZeta3,
        "F3 rank part mod 3 \"(1-zeta_3)(1-zeta_3^{-1})q^n(1+q^{2n})\"", [](int o) {
            auto c = [](const char *e) { return cz(3, e); };
            const IntSeries lambert = int_combo(o, {{1, one(o)}, {3, lambert_sum(1, 6, o)}, {-3, lambert_sum(5, 6, o)}});
            const IntSeries divisor = int_combo(o, {{1, one(o)}, {3, divisor_series(1, 6, o)}});
            const IntSeries prod = pq(o, 0, {eta(2, 6), eta(3), eta(1, -3), eta(6, -2)});
            CycSeries rhs = combo(3, o,
                                  {{c("1"), pq(o, 0, {eta(9, 4), eta(3, -1), eta(18, -2)})},
                                   {c("2"), pq(o, 1, {eta(9), eta(18), eta(6, -1)})},
                                   {c("1"), pq(o, 2, {eta(3), eta(18, 4), eta(6, -2), eta(9, -2)})}});
            std::vector<Comparison> v;
            v.push_back({"rank sum at zeta_3 as Lambert series",
                         rank_type_sum(
                             CyclotomicRing{3}, o, 2, [](int n) { return qmono(n); },
                             [](int n) { return MonomialSum{qmono(0), qmono(2 * n)}; }),
                         embed(lambert, CyclotomicRing{3})});
            v.push_back({"Lambert series as divisor sum", lambert, divisor});
            v.push_back({"divisor sum as product", divisor, prod});
            v.push_back({"identity", f3_rank_side(3, o), rhs});
            return v;
        }));
    cat.push_back(make(
        "f3_rank_mod5", CaseRing::cyclotomic, 5, kOrderZeta,
        "F3 rank part mod 5 \"(1-zeta_5)(1-zeta_5^{-1})q^n(1+q^{2n})\"", [](int o) {
            auto c = [](const char *e) { return cz(5, e); };
            CycSeries rhs =
                combo(5, o,
                      {{c("1"), pq(o, 0, {eta(25), jac(15, 50), jac(5, 25, -1)})},
                       {c("1-z-z^4"), pq(o, 1, {eta(25), jac(10, 50, -1)})},
                       {c("1"), pq(o, 2, {eta(50), jac(15, 50), poch(25, 50, -1), jac(10, 50, -1)})},
                       {c("-z-z^4"), pq(o, 7, {eta(50), jac(5, 50), poch(25, 50, -1), jac(20, 50, -1)})},
                       {c("1+z+z^4"), pq(o, 3, {eta(25), jac(20, 50, -1)})},
                       {c("-z-z^4"), pq(o, 4, {eta(25), jac(5, 50), jac(10, 25, -1)})}});
            return one_cmp(f3_rank_side(5, o), rhs);
        }));
    cat.push_back(make(
        "f3_rank_mod7", CaseRing::cyclotomic, 7, kOrderZeta,
        "F3 rank part mod 7 \"(1-zeta_7)(1-zeta_7^{-1})q^n(1+q^{2n})\"",
        [](int o) {
            auto c = [](const char *e) { return cz(7, e); };
            CycSeries rhs =
                combo(7, o,
                      {{c("1"), pq(o, 0, {eta(49), jac(14, 98, -1)})},
                       {c("1"), pq(o, 1, {eta(98), jac(35, 98), poch(49, 98, -1), jac(14, 98, -1)})},
                       {c("-z-z^6"), pq(o, 1, {eta(14), poch(7, 14, -1)})},
                       {c("-z^2-z^5"), pq(o, 8, {eta(98), jac(21, 98), poch(49, 98, -1), jac(28, 98, -1)})},
                       {c("1"), pq(o, 2, {eta(49), jac(14, 49), jac(7, 49, -1), jac(28, 98, -1)})},
                       {c("-z^2-z^5"), pq(o, 3, {eta(49), jac(7, 49), jac(21, 49, -1), jac(14, 98, -1)})},
                       {c("1+z^2+z^5"), pq(o, 4, {eta(49), jac(28, 98, -1)})},
                       {c("1+z^2+z^5"), pq(o, 5, {eta(49), jac(21, 49), jac(14, 49, -1), jac(42, 98, -1)})},
                       {c("-z^2-z^5"), pq(o, 6, {eta(49), jac(42, 98, -1)})}});
            return one_cmp(f3_rank_side(7, o), rhs);
        },
        211));

    cat.push_back(make(
        "mod5_rank_pieces", CaseRing::integer, 0, kOrderInteger,
        "Lambert pieces of the F3 rank part mod 5", [](int o) {
            const IntSeries pre = pq(o, 0, {poch(1, 2), eta(2, -1)});
            const IntSeries a = lambert_combo(10, {{1, 1}, {9, -1}}, o);
            const IntSeries b = lambert_combo(10, {{3, 1}, {7, -1}}, o);
            const IntSeries s1 = int_combo(o, {{1, one(o)}, {2, a}, {1, b}});
            const IntSeries s2 = int_combo(o, {{-1, a}, {2, b}});
            std::vector<Comparison> v;
            v.push_back({"piece 1 Lambert series as product", s1,
                         pq(o, 0, {eta(10, 2), jac(2, 10), jac(6, 10, 2), jac(1, 10, -2), jac(5, 10, -1),
                                   jac(7, 10, -1)})});
            v.push_back({"piece 1 as quotient", pre * s1,
                         pq(o, 0, {eta(10), jac(4, 10), poch(5, 10, -1), jac(1, 10, -1)})});
            v.push_back({"piece 1 dissection", pre * s1,
                         int_combo(o, {{1, pq(o, 0, {eta(25), jac(15, 50), jac(5, 25, -1)})},
                                       {1, pq(o, 1, {eta(25), jac(10, 50, -1)})},
                                       {1, pq(o, 2, {eta(50), jac(15, 50), poch(25, 50, -1), jac(10, 50, -1)})},
                                       {1, pq(o, 3, {eta(25), jac(20, 50, -1)})}})});
            v.push_back({"piece 2 as quotient", pre * s2,
                         pq(o, 1, {eta(10), jac(2, 10), poch(5, 10, -1), jac(3, 10, -1)}, -1)});
            v.push_back({"piece 2 dissection", pre * s2,
                         int_combo(o, {{-1, pq(o, 1, {eta(25), jac(10, 50, -1)})},
                                       {-1, pq(o, 7, {eta(50), jac(5, 50), poch(25, 50, -1), jac(20, 50, -1)})},
                                       {1, pq(o, 3, {eta(25), jac(20, 50, -1)})},
                                       {-1, pq(o, 4, {eta(25), jac(5, 50), jac(10, 25, -1)})}})});
            return v;
        }));
    cat.push_back(make(
        "mod7_rank_pieces", CaseRing::integer, 0, kOrderZeta,
        "Lambert pieces of the F3 rank part mod 7",
        [](int o) {
            const IntSeries pre = pq(o, 0, {poch(1, 2), eta(2, -1)});
            const IntSeries s1 = int_combo(o, {{1, one(o)}, {1, lambert_combo(14, {{1, 2}, {5, 1}, {9, -1}, {13, -2}}, o)}});
            const IntSeries s2 = lambert_combo(14, {{1, -1}, {3, 1}, {5, 1}, {9, -1}, {11, -1}, {13, 1}}, o);
            const IntSeries s3 = lambert_combo(14, {{3, -1}, {5, 2}, {9, -2}, {11, 1}}, o);
            std::vector<Comparison> v;
            v.push_back({"piece 1 Lambert series as product", s1,
                         pq(o, 0, {eta(14, 2), jac(2, 14), jac(8, 14, 2), jac(1, 14, -2), jac(7, 14, -1),
                                   jac(9, 14, -1)})});
            v.push_back({"piece 1 as quotient", pre * s1,
                         pq(o, 0, {eta(14), jac(3, 14), jac(6, 14), poch(7, 14, -1), jac(1, 14, -1), jac(4, 14, -1)})});
            v.push_back({"piece 1 dissection", pre * s1,
                         int_combo(o, {{1, pq(o, 0, {eta(49), jac(14, 98, -1)})},
                                       {1, pq(o, 1, {eta(98), jac(35, 98), poch(49, 98, -1), jac(14, 98, -1)})},
                                       {1, pq(o, 2, {eta(49), jac(14, 49), jac(7, 49, -1), jac(28, 98, -1)})},
                                       {1, pq(o, 4, {eta(49), jac(28, 98, -1)})},
                                       {1, pq(o, 5, {eta(49), jac(21, 49), jac(14, 49, -1), jac(42, 98, -1)})}})});
            v.push_back({"piece 2", pre * s2, pq(o, 1, {eta(14), poch(7, 14, -1)}, -1)});
            v.push_back({"piece 3 Lambert series as product", s3,
                         pq(o, 3,
                            {eta(14, 4), jac(2, 14, 2), jac(4, 14), eta(7, -2), jac(9, 14, -2), jac(11, 14, -1)},
                            -1)});
            v.push_back({"piece 3 as quotient", pre * s3,
                         pq(o, 3, {eta(14), jac(1, 14), jac(2, 14), poch(7, 14, -1), jac(5, 14, -1), jac(6, 14, -1)},
                            -1)});
            v.push_back({"piece 3 dissection", pre * s3,
                         int_combo(o, {{-1, pq(o, 8, {eta(98), jac(21, 98), poch(49, 98, -1), jac(28, 98, -1)})},
                                       {-1, pq(o, 3, {eta(49), jac(7, 49), jac(21, 49, -1), jac(14, 98, -1)})},
                                       {1, pq(o, 4, {eta(49), jac(28, 98, -1)})},
                                       {1, pq(o, 5, {eta(49), jac(21, 49), jac(14, 49, -1), jac(42, 98, -1)})},
                                       {-1, pq(o, 6, {eta(49), jac(42, 98, -1)})}})});
            return v;
        },
        148));
}

// q^{P-2A} (Q)^4 j(q^A, q^A, q^{2A}; Q) / ((q^P)^2 j(q^{A+P}, q^{A+P}, q^{2A+P}; Q)), Q = q^{2P},
// as a Lambert series.
std::vector<Comparison> lambert_ab_case(int P, int A, int o)
{
    const int Q = 2 * P;
    const IntSeries lhs = pq(o, P - 2 * A,
                             {eta(Q, 4), jac(A, Q, 2), jac(2 * A, Q), eta(P, -2), jac(A + P, Q, -2),
                              jac(2 * A + P, Q, -1)});
    // q^{Pn}/(1-q^{2Pn}) (a^{-2n} - 2a^{-n} + 2a^n - a^{2n})
    const IntSeries rhs =
        lambert_combo(Q, {{P - 2 * A, 1}, {P - A, -2}, {P + A, 2}, {P + 2 * A, -1}}, o);
    return one_cmp(lhs, rhs);
}

// (Q)^2 j(q^{2A}, q^{A+P}, q^{A+P}; Q) / j(q^A, q^A, q^P, q^{2A+P}; Q), Q = q^{2P}, as geometric series.
std::vector<Comparison> all_case(int P, int A, int o)
{
    const int Q = 2 * P;
    const IntSeries lhs = pq(o, 0,
                             {eta(Q, 2), jac(2 * A, Q), jac(A + P, Q, 2), jac(A, Q, -2), jac(P, Q, -1),
                              jac(2 * A + P, Q, -1)});
    IntSeries rhs = one(o);
    // x / (1 - x) = sum_m x^m for each x = c q^e
    auto add = [&](long coef, long e) {
        if (e > 0 && e < o) {
            add_geometric(rhs, BigInt(coef), e, e);
        }
    };
    for (long k = 0; k * Q < o; ++k) {
        add(2, A + Q * k);
        add(-2, Q * (k + 1) - A);
        add(-1, 2 * A + P + Q * k);
        add(1, Q * (k + 1) - P - 2 * A);
    }
    return one_cmp(lhs, rhs);
}

// M-dissection of (q^{2M};q^{2M})^2 j(z q^M) / ((q^M;q^{2M})^2 j(z)) at z = q^a.
std::vector<Comparison> theta_case(int M, int a, int o)
{
    const int Q = 2 * M;
    const int QQ = 2 * M * M;
    const IntSeries lhs = pq(o, 0, {eta(Q, 2), jac(a + M, Q), poch(M, Q, -2), jac(a, Q, -1)});
    IntSeries rhs(IntegerRing{}, o);
    for (int k = 0; k < M; ++k) {
        rhs += pq(o, a * k, {eta(QQ, 2), jac(a * M, QQ, -1), jac(a * M + M * (2 * k + 1), QQ), jac(M * (2 * k + 1), QQ, -1)});
    }
    return one_cmp(lhs, rhs);
}

// sum_n (A;q)_n (B;q)_n / ((q;q)_n (C;q)_n) X^n
template <class Ring>
Series<Ring> phi21(const Ring &ring, MonomialSpec A, MonomialSpec B, MonomialSpec C, MonomialSpec X, int o)
{
    Series<Ring> term = Series<Ring>::one(ring, o);
    Series<Ring> sum = term;
    for (int n = 0; (n + 1) * X.q_exp < o; ++n) {
        Series<Ring> next(ring, o);
        next.add_scaled(term, X.sign, X.z_exp, X.q_exp);
        next.mul_binomial(A.sign, A.z_exp, A.q_exp + n);
        next.mul_binomial(B.sign, B.z_exp, B.q_exp + n);
        next.div_binomial(1, 0, n + 1);
        next.div_binomial(C.sign, C.z_exp, C.q_exp + n);
        sum += next;
        term = std::move(next);
    }
    return sum;
}

// Heine: 2phi1(a,b;c;x) = (c/b, bx)_inf / (c, x)_inf 2phi1(abx/c, b; bx; c/b)
template <class Ring>
std::vector<Comparison> heine_case(const Ring &ring, MonomialSpec a, MonomialSpec b, MonomialSpec c, MonomialSpec x,
                                   int o)
{
    const MonomialSpec cb = c * b.inverse();
    const MonomialSpec bx = b * x;
    const MonomialSpec abxc = a * b * x * c.inverse();
    ProductTerm pre(o);
    pre.times_poch(cb, qmono(1), std::nullopt)
        .times_poch(bx, qmono(1), std::nullopt)
        .times_poch(c, qmono(1), std::nullopt, -1)
        .times_poch(x, qmono(1), std::nullopt, -1);
    return one_cmp(phi21(ring, a, b, c, x, o), pre.evaluate(ring) * phi21(ring, abxc, b, bx, cb, o));
}

void add_auxiliary(std::vector<IdentityCase> &cat)
{
    for (int P : {5, 7}) {
        cat.push_back(make("lambert_berndt_q" + std::to_string(P), CaseRing::integer, 0, kOrderInteger,
                           "Lambert series for q^{P-2A} j(a,b,ab)/j(-a,-b,-ab), q -> q^" +
                               std::to_string(P) + ", a = b = q^2",
                           [P](int o) { return lambert_ab_case(P, 2, o); }));
    }
    for (int P : {5, 7}) {
        cat.push_back(make("lambert_ALL_q" + std::to_string(2 * P), CaseRing::integer, 0, kOrderInteger,
                           "Lambert series with b = a, c = q^{1/2}, "
                           "q -> q^" + std::to_string(2 * P) + ", a = q",
                           [P](int o) { return all_case(P, 1, o); }));
    }
    for (int a : {1, 3}) {
        cat.push_back(make("theta_quotient_M5_z" + std::to_string(a), CaseRing::integer, 0, kOrderInteger,
                           "M-dissection of j(zq^M;q^{2M})/j(z;q^{2M}), M = 5, z = q^" +
                               std::to_string(a),
                           [a](int o) { return theta_case(5, a, o); }));
    }
    cat.push_back(make("one_psi_one", CaseRing::integer, 0, kOrderInteger,
                       "1psi1 specialization (q)^2 j(xy)/j(x,y) = sum x^n/(1-yq^n)", [](int o) {
                           // (q;q)^2 j(xy) / j(x, y) = sum_n x^n / (1 - y q^n) at q -> q^Q, x = q^a, y = q^b
                           std::vector<Comparison> v;
                           for (auto [Q, a, b] : {std::tuple{7, 2, 3}, std::tuple{6, 1, 4}, std::tuple{10, 1, 5}}) {
                               // no quadratic exponent, so the bilateral builder does not apply
                               IntSeries rhs(IntegerRing{}, o);
                               for (long n = -o; n <= o; ++n) {
                                   const long e = a * n;
                                   const long d = Q * n + b;
                                   if (d > 0 && e >= 0 && e < o) {
                                       add_geometric(rhs, BigInt(1), e, d);
                                   } else if (d < 0 && e - d >= 0 && e - d < o) {
                                       add_geometric(rhs, BigInt(-1), e - d, -d);
                                   }
                               }
                               v.push_back({"q^" + std::to_string(Q) + ", x = q^" + std::to_string(a) + ", y = q^" +
                                                std::to_string(b),
                                            pq(o, 0, {eta(Q, 2), jac(a + b, Q), jac(a, Q, -1), jac(b, Q, -1)}), rhs});
                           }
                           return v;
                       }));
    cat.push_back(make("gauss_half", CaseRing::integer, 0, kDefaultOrderH25,
                       "(q^2;q^2)/(q;q^2) = sum q^{n(n+1)/2}", [](int o) {
                           const IntSeries prod = pq(o, 0, {eta(2), poch(1, 2, -1)});
                           IntSeries twice = prod;
                           twice.scale_int(BigInt(2));
                           std::vector<Comparison> v;
                           v.push_back({"half of triangular theta", twice, theta_sum(1, 1, false, o)});
                           v.push_back({"sum of q^{2n^2-n}", prod, theta_sum(4, -2, false, o)});
                           return v;
                       }));
    cat.push_back(make(
        "gauss_mod9", CaseRing::integer, 0, kDefaultOrderH25,
        "3-dissection of (q^2;q^2)^2/(q;q)", [](int o) {
            const IntSeries u = pq(o, 0, {poch(3, 9, 1, -1), poch(6, 9, 1, -1), eta(9)});
            const IntSeries w = pq(o, 1, {poch(9, 9, 2, -1), eta(9)});
            std::vector<Comparison> v;
            v.push_back({"3-dissection", pq(o, 0, {eta(2, 2), eta(1, -1)}), u + w});
            v.push_back({"square", pq(o, 0, {eta(2, 4), eta(1, -2)}),
                         int_combo(o, {{1, u * u},
                                       {2, pq(o, 1, {poch(3, 3, 1, -1), eta(9), eta(18)})},
                                       {1, pq(o, 2, {poch(9, 9, 2, -1), eta(18, 2)})}})});
            return v;
        }));
    cat.push_back(make("gauss_mod25", CaseRing::integer, 0, kDefaultOrderH25,
                       "5-dissection of (q^2;q^2)/(q;q^2)",
                       [](int o) {
                           return one_cmp(pq(o, 0, {eta(2), poch(1, 2, -1)}),
                                          int_combo(o, {{1, pq(o, 0, {eta(25), jac(20, 50), jac(10, 25, -1)})},
                                                        {1, pq(o, 1, {eta(25), jac(10, 50), jac(5, 25, -1)})},
                                                        {1, pq(o, 3, {eta(50), poch(25, 50, -1)})}}));
                       }));
    cat.push_back(make("heine_1", CaseRing::integer, 0, kOrderInteger,
                       "Heine transformation, a = -q, b = q^2, c = q^3, z = q^2",
                       [](int o) {
                           return heine_case(IntegerRing{}, qmono(1, -1), qmono(2), qmono(3), qmono(2), o);
                       }));
    cat.push_back(make("heine_2", CaseRing::integer, 0, kOrderInteger,
                       "Heine transformation, a = q^3, b = q, c = q^2, z = -q",
                       [](int o) {
                           return heine_case(IntegerRing{}, qmono(3), qmono(1), qmono(2), qmono(1, -1), o);
                       }));
    cat.push_back(make("heine_3", CaseRing::two_variable, 0, kOrderTwoVar,
                       "Heine transformation, a = zq, b = q, c = q^3, z -> q",
                       [](int o) {
                           return heine_case(LaurentRing{}, MonomialSpec{1, 1, 1}, qmono(1), qmono(3), qmono(1), o);
                       }));
}

// h(-q^a, q^100)
IntSeries h100(int a, int o)
{
    return series_h({-1, 0, a}, 100, o);
}

void add_section6(std::vector<IdentityCase> &cat)
{
    constexpr int ell = 5;
    for (int b : {1, 3, 5, 7, 9}) {
        cat.push_back(make(
            "UV_lemma_b" + std::to_string(b), CaseRing::integer, 0, kOrderInteger,
            "V_l(b) - q^{(b+1)/2} U_l(b+2) in terms of h, l = 5, b = " + std::to_string(b), [b](int o) {
                const int L2 = 4 * ell * ell;
                const int c = 2 * ell * ell - b * ell;
                IntSeries lhs = series_V(ell, b, o) - series_U(ell, b + 2, o).shifted((b + 1) / 2);
                IntSeries rhs = series_h({-1, 0, c}, L2, o);
                for (int k = 1; k < ell; ++k) {
                    rhs += pq(o, 2 * k * k + b * k,
                              {eta(L2, 2), jac(c, L2, 1, -1), jac(2 * b * ell + 8 * k * ell, L2), jac(4 * k * ell, L2, -1),
                               jac(2 * b * ell + 4 * k * ell, L2, -1),
                               jac(2 * ell * ell + b * ell + 4 * k * ell, L2, -1, -1)});
                }
                return one_cmp(lhs, rhs);
            }));
    }
    cat.push_back(make("UV_symmetries", CaseRing::integer, 0, kOrderInteger, "n -> -n symmetries of V_l and U_l",
                       [](int o) {
                           std::vector<Comparison> v;
                           for (int b = 1; b <= 2 * ell + 2; b += 2) {
                               v.push_back({"V_5(" + std::to_string(b) + ")", series_V(ell, b, o),
                                            -series_V(ell, 4 * ell - b, o)});
                               v.push_back({"U_5(" + std::to_string(b) + ")", series_U(ell, b, o),
                                            -series_U(ell, 4 * ell + 4 - b, o, 2 * ell - b + 2)});
                           }
                           return v;
                       }));
    cat.push_back(make(
        "lewis_T", CaseRing::integer, 0, kOrderInteger,
        "wT(zw,w) + T(z/w,1/w) product, q -> q^{4l^2}, w = -q^{2l^2-bl-4kl}, z = -q^{2l^2-bl}",
        [](int o) {
            // q^s (w T(zw, w) + T(z/w, 1/w)) = q^s (Q)^2 j(z, w^2) / j(z/w, zw, w)
            const int Q = 4 * ell * ell;
            std::vector<Comparison> v;
            for (int b : {1, 3, 5, 7, 9}) {
                for (int k = 1; k < ell; ++k) {
                    const int s = 2 * k * k + b * k;
                    const MonomialSpec w{-1, 0, 2 * ell * ell - b * ell - 4 * k * ell};
                    const MonomialSpec z{-1, 0, 2 * ell * ell - b * ell};
                    IntSeries lhs = series_T(z * w, w, Q, o, s + w.q_exp, w.sign);
                    lhs += series_T(z * w.inverse(), w.inverse(), Q, o, s);
                    ProductTerm r(o);
                    r.times(qmono(s)).eta(Q, 2);
                    r.times_jac(z, Q).times_jac(w.pow(2), Q);
                    r.times_jac(z * w.inverse(), Q, -1).times_jac(z * w, Q, -1).times_jac(w, Q, -1);
                    v.push_back({"b = " + std::to_string(b) + ", k = " + std::to_string(k), lhs,
                                 r.evaluate(IntegerRing{})});
                }
            }
            return v;
        }));
    const char *names[] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) {
        cat.push_back(make(
            std::string("h_combination_") + names[i], CaseRing::integer, 0, kDefaultOrderH25,
            std::string("(3a-d)h(-q^5,q^100) + ... combination, unit vector ") + names[i], [i](int o) {
                long u[4] = {0, 0, 0, 0};
                u[i] = 1;
                const long a = u[0], b = u[1], c = u[2], d = u[3];
                IntSeries lhs = int_combo(o, {{3 * a - d, h100(5, o)},
                                              {3 * b - a, h100(15, o)},
                                              {3 * c - b, h100(45, o)},
                                              {3 * d - c, h100(35, o)},
                                              {c + d, one(o)}});
                IntSeries rhs = int_combo(
                    o, {{a, pq(o, 0, {eta(100, 2), jac(10, 100, 3), jac(5, 100, -3, -1), jac(15, 100, -1, -1)})},
                        {c - a, pq(o, 0, {eta(100, 2), jac(20, 100, 3), jac(10, 100, -3), jac(30, 100, -1)})},
                        {b, pq(o, 0, {eta(100, 2), jac(30, 100, 3), jac(15, 100, -3, -1), jac(45, 100, -1, -1)})},
                        {d - b, pq(o, 0, {eta(100, 2), jac(40, 100, 3), jac(30, 100, -3), jac(10, 100, -1)})},
                        {c, pq(o, 35, {eta(100, 2), jac(10, 100, 3), jac(45, 100, -3, -1), jac(35, 100, -1, -1)})},
                        {d, pq(o, 5, {eta(100, 2), jac(30, 100, 3), jac(35, 100, -3, -1), jac(5, 100, -1, -1)})}});
                return one_cmp(lhs, rhs);
            }));
    }
    cat.push_back(make("h25", CaseRing::integer, 0, kDefaultOrderH25, "1 + 4h(-q^25,q^100) as a product", [](int o) {
        // Checked as 1 + 4h(-q^25, q^100) = (q^100)^2 j(q^50)^3 / j(-q^25)^4; see the decisions ledger.
        return one_cmp(int_combo(o, {{1, one(o)}, {4, h100(25, o)}}),
                       pq(o, 0, {eta(100, 2), jac(50, 100, 3), jac(25, 100, -4, -1)}));
    }));
    cat.push_back(make("h25_products", CaseRing::integer, 0, kDefaultOrderH25,
                       "(q^100)^2 j(q^50)^4/j(-q^25)^4 = (q^25)^4/(q^100)^2", [](int o) {
                           return one_cmp(pq(o, 0, {eta(100, 2), jac(50, 100, 4), jac(25, 100, -4, -1)}),
                                          pq(o, 0, {eta(25, 4), eta(100, -2)}));
                       }));

    cat.push_back(make(
        "crank_zeta5_q2", CaseRing::cyclotomic, 5, kOrderZeta,
        "dissection of 1/(zeta_5 q^2, zeta_5^{-1} q^2; q^2)",
        [](int o) {
            ProductTerm p(o);
            p.times_poch({1, 1, 2}, qmono(2), std::nullopt, -1);
            p.times_poch({1, -1, 2}, qmono(2), std::nullopt, -1);
            CycSeries rhs = combo(5, o,
                                  {{cz(5, "1"), pq(o, 0, {jac(10, 50, -1)})},
                                   {cz(5, "z+z^4"), pq(o, 2, {jac(20, 50, -1)})}});
            return one_cmp(p.evaluate(CyclotomicRing{5}), rhs);
        }));
    cat.push_back(make(
        "g4_crank_5", CaseRing::cyclotomic, 5, kOrderZeta, "dissection of (q^2;q^2)/((q;q^2)(zeta_5 q^2, zeta_5^{-1} q^2; q^2))",
        [](int o) {
            ProductTerm p(o);
            p.eta(2).poch(1, 2, -1);
            p.times_poch({1, 1, 2}, qmono(2), std::nullopt, -1);
            p.times_poch({1, -1, 2}, qmono(2), std::nullopt, -1);
            auto c = [](const char *e) { return cz(5, e); };
            CycSeries rhs =
                combo(5, o,
                      {{c("1"), pq(o, 0, {eta(25), jac(20, 50), jac(10, 25, -1), jac(10, 50, -1)})},
                       {c("z+z^4"), pq(o, 5, {eta(50), poch(25, 50, -1), jac(20, 50, -1)})},
                       {c("1"), pq(o, 1, {eta(25), jac(5, 25, -1)})},
                       {c("z+z^4"), pq(o, 2, {eta(25), jac(10, 25, -1)})},
                       {c("z+z^4"), pq(o, 3, {eta(25), jac(10, 50), jac(5, 25, -1), jac(20, 50, -1)})},
                       {c("1"), pq(o, 3, {eta(50), poch(25, 50, -1), jac(10, 50, -1)})}});
            return one_cmp(p.evaluate(CyclotomicRing{5}), rhs);
        }));

    auto g4_sum = [](int o) {
        return rank_type_sum(
            CyclotomicRing{5}, o, 2, [](int n) { return signed_q(n, (n * n + 3 * n) / 2); },
            [](int n) { return MonomialSum{qmono(0), qmono(n)}; });
    };
    auto ag4_sum = [](int o) {
        return rank_type_sum(
            CyclotomicRing{5}, o, 2, [](int n) { return signed_q(n, (n * n + n) / 2); },
            [](int n) { return MonomialSum{qmono(0), qmono(3 * n)}; });
    };
    cat.push_back(make(
        "g4_ag4_parts_5_G4", CaseRing::cyclotomic, 5, kOrderZeta,
        "G4/AG4 rank-type part \"(1-zeta_5)(1-zeta_5^{-1})(-1)^n q^{(n^2+3n)/2}(1+q^n)\"",
        [g4_sum](int o) {
            auto c = [](const char *e) { return cz(5, e); };
            CycSeries lhs = g4_sum(o) * embed(pq(o, 0, {eta(1, -1)}), CyclotomicRing{5});
            CycSeries rhs =
                combo(5, o,
                      {{c("1"), pq(o, 0, {eta(25), jac(20, 50), jac(10, 25, -1), jac(10, 50, -1)})},
                       {c("1-2z-2z^4"), pq(o, 5, {eta(50), poch(25, 50, -1), jac(20, 50, -1)})},
                       {c("-1-2z-2z^4"), pq(o, 10, {eta(100), jac(10, 200), jac(10, 50, -1), jac(5, 100, -1)})},
                       {c("1"), pq(o, 1, {eta(25), jac(5, 25, -1)})},
                       {c("-2+z+z^4"), pq(o, 6, {eta(100), jac(30, 200), jac(10, 50, -1), jac(15, 100, -1)})},
                       {c("z+z^4"), pq(o, 2, {eta(25), jac(10, 25, -1)})},
                       {c("-2+z+z^4"), pq(o, 12, {eta(100), jac(10, 200), jac(20, 50, -1), jac(5, 100, -1)})},
                       {c("-1+z+z^4"), pq(o, 3, {eta(50), poch(25, 50, -1), jac(10, 50, -1)})},
                       {c("z+z^4"), pq(o, 3, {eta(25), jac(10, 50), jac(5, 25, -1), jac(20, 50, -1)})},
                       {c("1-3z-3z^4"), pq(o, 8, {eta(100), jac(30, 200), jac(20, 50, -1), jac(15, 100, -1)})}});
            return one_cmp(lhs, rhs);
        }));
    cat.push_back(make(
        "g4_ag4_parts_5_AG4", CaseRing::cyclotomic, 5, kOrderZeta,
        "G4/AG4 rank-type part \"(1-zeta_5)(1-zeta_5^{-1})(-1)^n q^{(n^2+n)/2}(1+q^{3n})\"",
        [ag4_sum](int o) {
            auto c = [](const char *e) { return cz(5, e); };
            CycSeries lhs = ag4_sum(o) * embed(pq(o, 0, {eta(1, -1)}), CyclotomicRing{5});
            CycSeries rhs =
                combo(5, o,
                      {{c("1"), pq(o, 0, {eta(25), jac(20, 50), jac(10, 25, -1), jac(10, 50, -1)})},
                       {c("z+z^4"), pq(o, 5, {eta(50), poch(25, 50, -1), jac(20, 50, -1)})},
                       {c("z+z^4-2"), pq(o, 10, {eta(100), jac(10, 200), jac(10, 50, -1), jac(5, 100, -1)})},
                       {c("z+z^4-2"), pq(o, 1, {eta(100), jac(70, 200), jac(10, 50, -1), jac(35, 100, -1)})},
                       {c("1"), pq(o, 1, {eta(25), jac(5, 25, -1)})},
                       {c("-1-2z-2z^4"), pq(o, 6, {eta(100), jac(30, 200), jac(10, 50, -1), jac(15, 100, -1)})},
                       {c("z+z^4"), pq(o, 2, {eta(25), jac(10, 25, -1)})},
                       {c("1-3z-3z^4"), pq(o, 12, {eta(100), jac(10, 200), jac(20, 50, -1), jac(5, 100, -1)})},
                       {c("1-3z-3z^4"), pq(o, 3, {eta(100), jac(70, 200), jac(20, 50, -1), jac(35, 100, -1)})},
                       {c("z+z^4"), pq(o, 3, {eta(25), jac(10, 50), jac(5, 25, -1), jac(20, 50, -1)})},
                       {c("1"), pq(o, 3, {eta(50), poch(25, 50, -1), jac(10, 50, -1)})},
                       {c("-2+z+z^4"), pq(o, 8, {eta(100), jac(30, 200), jac(20, 50, -1), jac(15, 100, -1)})}});
            return one_cmp(lhs, rhs);
        }));
    cat.push_back(make("g4_vu_5", CaseRing::cyclotomic, 5, kOrderZeta,
                       "G4 part via V, U: \"(2-zeta_5-zeta_5^4)(V_5(3) - q^2U_5(5) + V_5(5) - q^3U_5(7))\"",
                       [g4_sum](int o) {
                           auto V = [o](int b) { return series_V(ell, b, o); };
                           auto U = [o](int b, int s) { return series_U(ell, b, o).shifted(s); };
                           CycSeries rhs = combo(5, o,
                                                 {{cz(5, "1"), one(o)},
                                                  {cz(5, "2-z-z^4"), V(3) - U(5, 2) + V(5) - U(7, 3)},
                                                  {cz(5, "-1+3z+3z^4"), V(7) - U(9, 4) + V(9) - U(11, 5)}});
                           return one_cmp(g4_sum(o), rhs);
                       }));
    cat.push_back(make("ag4_vu_5", CaseRing::cyclotomic, 5, kOrderZeta,
                       "AG4 part via V, U", [ag4_sum](int o) {
                           auto V = [o](int b) { return series_V(ell, b, o); };
                           auto U = [o](int b, int s) { return series_U(ell, b, o).shifted(s); };
                           CycSeries rhs = combo(5, o,
                                                 {{cz(5, "1"), one(o)},
                                                  {cz(5, "2-z-z^4"), V(1) - U(3, 1) + V(7) - U(9, 4)},
                                                  {cz(5, "-1+3z+3z^4"), V(5) - U(7, 3) - V(9) + U(11, 5)}});
                           return one_cmp(ag4_sum(o), rhs);
                       }));
}

void add_relabel(std::vector<IdentityCase> &cat)
{
    cat.push_back(make("relabel_gstar", CaseRing::two_variable, 0, kOrderTwoVar,
                       "S_{G*}(z,-q) = S_{AG4}(z,q)", [](int o) {
                           return one_cmp(symbolic(Family::Gstar, o).substitute(1, true), symbolic(Family::AG4, o));
                       }));
    cat.push_back(make("relabel_gstarstar", CaseRing::two_variable, 0, kOrderTwoVar,
                       "S_{G**}(z,-q) = S_{G4}(z,q)", [](int o) {
                           return one_cmp(symbolic(Family::Gstarstar, o).substitute(1, true), symbolic(Family::G4, o));
                       }));
}

std::vector<IdentityCase> build_catalog()
{
    std::vector<IdentityCase> cat;
    add_single_series(cat);
    add_products(cat);
    add_dissections(cat);
    add_rank_crank(cat);
    add_f3_pieces(cat);
    add_auxiliary(cat);
    add_section6(cat);
    add_relabel(cat);
    std::sort(cat.begin(), cat.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
    for (std::size_t i = 1; i < cat.size(); ++i) {
        if (cat[i].id == cat[i - 1].id) {
            throw std::logic_error("duplicate catalog id " + cat[i].id);
        }
    }
    return cat;
}

} // namespace

std::string IdentityCase::ring_name() const
{
    switch (ring) {
    case CaseRing::integer:
        return "integer";
    case CaseRing::cyclotomic:
        return "cyclotomic(" + std::to_string(t) + ")";
    case CaseRing::two_variable:
        break;
    }
    return "two-variable";
}

LaurentSeries single_series_lhs(Family f, int order)
{
    LaurentSeries s = symbolic(f, order);
    FactorBag bag;
    bag.add({-1, 1, 0});
    switch (f) {
    case Family::J1:
    case Family::J2:
    case Family::J3:
        bag.add_pochhammer({1, 1, 0}, qmono(1), std::nullopt, order);
        bag.add_pochhammer({1, -1, 0}, qmono(1), std::nullopt, order);
        bag.add_pochhammer(qmono(1), qmono(1), std::nullopt, order);
        break;
    case Family::F3:
        bag.add_pochhammer(qmono(1), qmono(2), std::nullopt, order);
        [[fallthrough]];
    case Family::G4:
    case Family::AG4:
        bag.add_pochhammer({1, 1, 0}, qmono(2), std::nullopt, order);
        bag.add_pochhammer({1, -1, 0}, qmono(2), std::nullopt, order);
        break;
    default:
        throw std::invalid_argument("no single-series identity for " + family_name(f));
    }
    bag.apply(s);
    return s;
}

LaurentSeries single_series_rhs(Family f, int order)
{
    LaurentSeries rhs(LaurentRing{}, order);
    const LaurentRing ring;
    if (f == Family::J1 || f == Family::J2 || f == Family::J3) {
        // every j with j(j-1)/2 <= order, plus one guard term
        for (int j = 2; (j - 1) * (j - 2) / 2 <= order; ++j) {
            ProductTerm t(order);
            t.times(qmono(j * (j - 1) / 2, (j % 2 != 0) ? 1 : -1));
            t.times_binomial(qmono(3 * j - 3), -1).times_binomial(qmono(3 * j), -1);
            add_product_term(rhs, t, mono_product(z_part(j), j_poly(f, j)));
        }
        return rhs;
    }
    auto exponent = [f](long j) -> long {
        switch (f) {
        case Family::F3:
            return (j - 1) * (j - 1);
        case Family::G4:
            return 2 * j * j - j;
        case Family::AG4:
            return 2 * j * j + j;
        default:
            break;
        }
        throw std::invalid_argument("no single-series identity for " + family_name(f));
    };
    const auto unit = ring.from_int(BigInt(1));
    for (long j = -order - 2; j <= order + 2; ++j) {
        const long e = exponent(j);
        if (e >= order) {
            continue;
        }
        const int sign = (f == Family::F3 && j % 2 == 0) ? -1 : 1;
        for (const auto &m : z_part(static_cast<int>(j))) {
            LaurentRing::add_shifted(rhs.coeff(static_cast<int>(e)), unit, sign * m.sign, m.z_exp);
        }
    }
    return rhs;
}

const std::vector<IdentityCase> &catalog()
{
    static const std::vector<IdentityCase> cat = build_catalog();
    return cat;
}

const IdentityCase *lookup(const std::string &id)
{
    const auto &cat = catalog();
    auto it = std::lower_bound(cat.begin(), cat.end(), id, [](const auto &c, const std::string &k) { return c.id < k; });
    if (it == cat.end() || it->id != id) {
        return nullptr;
    }
    return &*it;
}

VerificationReport run_case(const IdentityCase &c, const VerifyOptions &opts)
{
    int order = c.default_order;
    if (opts.reference_bounds && c.reference_order > 0) {
        order = c.reference_order;
    }
    if (opts.order) {
        order = std::max(order, *opts.order);
    }
    order = checked_order(order);
    const auto start = std::chrono::steady_clock::now();
    std::vector<Comparison> parts;
    try {
        parts = c.build(order);
    } catch (const DivergentSpec &e) {
        throw DivergentSpec(c.id + ": " + e.what());
    }
    VerificationReport rep;
    rep.id = c.id;
    rep.order = order;
    for (const auto &p : parts) {
        auto r = compare_sides(c.id, p.lhs, p.rhs);
        if (parts.size() > 1 || !r.ok()) {
            merge_into(rep, r, p.label);
        }
        rep.order = std::min(rep.order, r.order);
    }
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

VerificationReport verify_case(const std::string &id, const VerifyOptions &opts)
{
    const IdentityCase *c = lookup(id);
    if (c == nullptr) {
        throw std::out_of_range("unknown identity id: " + id);
    }
    return run_case(*c, opts);
}

bool glob_match(const std::string &pattern, const std::string &id)
{
    return fnmatch(pattern.c_str(), id.c_str(), 0) == 0;
}

std::vector<VerificationReport> verify_all(const std::string &filter, int parallelism, const VerifyOptions &opts)
{
    std::vector<const IdentityCase *> todo;
    for (const auto &c : catalog()) {
        if (glob_match(filter, c.id)) {
            todo.push_back(&c);
        }
    }
    std::vector<VerificationReport> out(todo.size());
    std::vector<std::exception_ptr> errors(todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < todo.size(); i = next++) {
            try {
                out[i] = run_case(*todo[i], opts);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int n = std::max(1, std::min<int>(parallelism, static_cast<int>(todo.size())));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n; ++i) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

bool all_verified(const std::vector<VerificationReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.ok(); });
}

IdentityCase negative_control()
{
    IdentityCase c = *lookup("dissect_F3_3");
    c.id = "negative_control";
    c.citation = "test fixture: dissect_F3_3 with the sign of the q term flipped";
    c.build = [](int o) {
        CycSeries rhs = combo(3, o,
                              {{cz(3, "-1"), pq(o, 1, {eta(18), eta(9), eta(6, -1)})},
                               {cz(3, "1"), pq(o, 2, {eta(18, 4), eta(3), eta(9, -2), eta(6, -2)})}});
        return one_cmp(at_root(Family::F3, 3, o), rhs);
    };
    return c;
}

} // namespace sptforge
