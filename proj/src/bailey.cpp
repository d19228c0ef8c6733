#include <sptforge/bailey.hpp>

#include <stdexcept>

namespace sptforge {

namespace {

using TermList = std::vector<std::pair<ProductTerm, MonomialSum>>;
using TermFn = std::function<TermList(int)>;

MonomialSpec X(int e, int sign = 1)
{
    return qmono(e, sign);
}

MonomialSpec ZX(int zexp, int e, int sign = 1)
{
    return {sign, zexp, e};
}

const MonomialSum kOne{MonomialSpec{}};

int neg1(long k)
{
    return k % 2 == 0 ? 1 : -1;
}

// c * {1, x}
MonomialSum two_terms(int sign, int e0, int sign1, int e1)
{
    return {X(e0, sign), X(e0 + e1, sign * sign1)};
}

MonomialSum scaled(MonomialSum s, int u)
{
    for (auto &m : s) {
        m.q_exp *= u;
    }
    return s;
}

// Sums the terms for n = 0, 1, ... until four consecutive indices contribute
// nothing below the order.
template <class Ring>
Series<Ring> sum_terms(const Ring &ring, int order, const TermFn &terms)
{
    Series<Ring> acc(ring, order);
    int quiet = 0;
    const int limit = 4 * order + 40;
    for (int n = 0;; ++n) {
        if (n > limit) {
            throw DivergentSpec("sum over n does not converge q-adically");
        }
        bool live = false;
        for (const auto &[pt, poly] : terms(n)) {
            if (poly.empty() || product_term_lead(pt, poly) >= order) {
                continue;
            }
            live = true;
            add_product_term(acc, pt, poly);
        }
        quiet = live ? 0 : quiet + 1;
        if (quiet >= 4) {
            return acc;
        }
    }
}

TermList single(ProductTerm pt, MonomialSum poly = kOne)
{
    TermList l;
    l.emplace_back(std::move(pt), std::move(poly));
    return l;
}

struct Catalog {
    int base;
    bool generic;
    // exponents in units of q; scaled to X by 2 / base
    std::function<MonomialSum(int, int)> alpha;
    std::function<ProductTerm(int, int, int, int)> beta; // (n, order, u, h)
};

ProductTerm q_poch(ProductTerm t, int a, int b, int n, int u, int mult, int sign = 1)
{
    t.times_poch(X(a * u, sign), X(b * u), n, mult);
    return t;
}

Catalog catalog_entry(const std::string &name)
{
    auto j_alpha = [](int variant) {
        return [variant](int n, int) -> MonomialSum {
            if (n == 0) {
                return kOne;
            }
            if (n % 3 == 0) {
                const long k = n / 3;
                return two_terms(neg1(k), static_cast<int>((9 * k * k - 3 * k) / 2), 1, static_cast<int>(3 * k));
            }
            if (variant == 1) {
                return {};
            }
            if (n % 3 == 2) {
                const long k = (n + 1) / 3;
                const long e = variant == 2 ? (9 * k * k - 9 * k + 2) / 2 : (9 * k * k - 3 * k) / 2;
                return {X(static_cast<int>(e), neg1(k - 1))};
            }
            const long k = (n - 1) / 3;
            const long e = variant == 2 ? (9 * k * k + 9 * k + 2) / 2 : (9 * k * k + 3 * k) / 2;
            return {X(static_cast<int>(e), neg1(k + 1))};
        };
    };
    if (name == "B2") {
        return {1, false,
                [](int n, int) -> MonomialSum {
                    if (n == 0) {
                        return kOne;
                    }
                    return two_terms(neg1(n), 3 * (n * n - n) / 2, 1, 3 * n);
                },
                [](int n, int order, int u, int) {
                    ProductTerm t(order);
                    t.times(X(u * n));
                    return q_poch(t, 1, 1, n, u, -1);
                }};
    }
    if (name == "J1") {
        return {1, false, j_alpha(1), [](int n, int order, int u, int) {
                    ProductTerm t(order);
                    if (n == 0) {
                        return t;
                    }
                    t = q_poch(t, 3, 3, n - 1, u, 1);
                    t = q_poch(t, 1, 1, 2 * n - 1, u, -1);
                    return q_poch(t, 1, 1, n, u, -1);
                }};
    }
    if (name == "J2" || name == "J3") {
        const bool three = name == "J3";
        return {1, false, j_alpha(three ? 3 : 2), [three](int n, int order, int u, int) {
                    ProductTerm t(order);
                    if (n == 0) {
                        return t;
                    }
                    if (three) {
                        t.times(X(u * n));
                    }
                    t = q_poch(t, 3, 3, n - 1, u, 1);
                    t = q_poch(t, 1, 1, 2 * n, u, -1);
                    return q_poch(t, 1, 1, n - 1, u, -1);
                }};
    }
    if (name == "F3") {
        return {2, false,
                [](int n, int) -> MonomialSum {
                    if (n == 0) {
                        return kOne;
                    }
                    return {X(n), X(-n)};
                },
                [](int n, int order, int u, int) {
                    ProductTerm t(order);
                    t.times(X(-u * n));
                    return q_poch(t, 1, 1, 2 * n, u, -1);
                }};
    }
    if (name == "F1") {
        return {2, false,
                [](int n, int) -> MonomialSum {
                    if (n == 0) {
                        return kOne;
                    }
                    return two_terms(1, 2 * n * n - n, 1, 2 * n);
                },
                [](int n, int order, int u, int) { return q_poch(ProductTerm(order), 1, 1, 2 * n, u, -1); }};
    }
    if (name == "G4" || name == "AG4" || name == "Gstar" || name == "Gstarstar") {
        const bool starred = name == "Gstar" || name == "Gstarstar";
        const bool shifted = name == "AG4" || name == "Gstar";
        MonomialSum (*alpha)(int, int) = nullptr;
        if (name == "G4") {
            alpha = [](int n, int) -> MonomialSum {
                return n == 0 ? kOne : two_terms(neg1(n), n * (n - 1) / 2, 1, n);
            };
        } else if (name == "AG4") {
            alpha = [](int n, int) -> MonomialSum {
                return n == 0 ? kOne : two_terms(neg1(n), n * (n - 3) / 2, 1, 3 * n);
            };
        } else if (name == "Gstar") {
            alpha = [](int n, int) -> MonomialSum {
                return n == 0 ? kOne : two_terms(neg1(n * (n - 1) / 2), n * (n - 3) / 2, neg1(n), 3 * n);
            };
        } else {
            alpha = [](int n, int) -> MonomialSum {
                return n == 0 ? kOne : two_terms(neg1(n * (n + 1) / 2), n * (n - 1) / 2, neg1(n), n);
            };
        }
        return {2, false, alpha, [starred, shifted](int n, int order, int u, int) {
                    ProductTerm t(order);
                    t.times(X(u * (n * n - (shifted ? 2 * n : 0)), starred ? 1 : neg1(n)));
                    t = q_poch(t, 4, 4, n, u, -1);
                    return q_poch(t, 1, 2, n, u, -1, starred ? 1 : -1);
                }};
    }
    if (name == "GenericStar" || name == "GenericStarStar") {
        const bool two = name == "GenericStarStar";
        return {1, true,
                [two](int n, int h) -> MonomialSum {
                    if (n == 0) {
                        return kOne;
                    }
                    if (two && n == 1) {
                        return {X(h + 1, -1)};
                    }
                    return {};
                },
                [two](int n, int order, int u, int h) {
                    ProductTerm t(order);
                    t = q_poch(t, h + (two ? 2 : 1), 1, n, u, -1);
                    return q_poch(t, 1, 1, n, u, -1);
                }};
    }
    throw std::invalid_argument("unknown Bailey pair: " + name);
}

std::string x_note(const BaileyPair &p)
{
    return "X^2 = q" + std::string(p.base == 2 ? "^2" : "") + ", a = " + p.a_spec();
}

} // namespace

std::string BaileyPair::a_spec() const
{
    if (h == 0) {
        return "1";
    }
    return "X^" + std::to_string(2 * h);
}

const std::vector<std::string> &bailey_pair_names()
{
    static const std::vector<std::string> v{"B2", "F3", "G4",    "AG4",       "J1",          "J2",
                                            "J3", "F1", "Gstar", "Gstarstar", "GenericStar", "GenericStarStar"};
    return v;
}

bool is_generic_pair(const std::string &name)
{
    return name == "GenericStar" || name == "GenericStarStar";
}

BaileyPair bailey_pair(const std::string &name, int h)
{
    Catalog c = catalog_entry(name);
    if (!c.generic && h != 0) {
        throw std::invalid_argument("pair " + name + " is relative to a = 1");
    }
    if (h < 0) {
        throw std::invalid_argument("h must be nonnegative");
    }
    const int u = 2 / c.base;
    BaileyPair p;
    p.name = name;
    p.base = c.base;
    p.h = h;
    auto alpha = c.alpha;
    p.alpha = [alpha, u, h](int n) { return scaled(alpha(n, h), u); };
    auto beta = c.beta;
    p.beta = [beta, u, h](int n, int order) { return beta(n, order, u, h); };
    return p;
}

VerificationReport check_pair_relation(const BaileyPair &pair, int n_max, int order)
{
    checked_order(order);
    VerificationReport acc;
    acc.id = "pair_relation:" + pair.name;
    acc.order = order;
    acc.notes.push_back(x_note(pair));
    for (int n = 0; n <= n_max; ++n) {
        ProductTerm beta = pair.beta(n, order);
        TermList rhs;
        int low = product_term_lead(beta, kOne);
        for (int k = 0; k <= n; ++k) {
            ProductTerm t(order);
            t.times_poch(X(2), X(2), n - k, -1);
            t.times_poch(X(2 * pair.h + 2), X(2), n + k, -1);
            auto a = pair.alpha(k);
            if (!a.empty()) {
                low = std::min(low, product_term_lead(t, a));
                rhs.emplace_back(std::move(t), std::move(a));
            }
        }
        const MonomialSpec shift = X(std::max(0, -low));
        IntSeries l(IntegerRing{}, order), r(IntegerRing{}, order);
        beta.times(shift);
        add_product_term(l, beta, kOne);
        for (auto &[t, a] : rhs) {
            t.times(shift);
            add_product_term(r, t, a);
        }
        merge_into(acc, compare_sides(acc.id, l, r), "n = " + std::to_string(n));
        if (!acc.ok()) {
            break;
        }
    }
    return acc;
}

VerificationReport check_limiting_lemma(const BaileyPair &pair, std::optional<MonomialSpec> rho1,
                                        std::optional<MonomialSpec> rho2, int order)
{
    checked_order(order);
    if (!rho1 && rho2) {
        std::swap(rho1, rho2);
    }
    const MonomialSpec aq = X(2 * pair.h + 2);
    const LaurentRing ring;
    ProductTerm pre(order);
    // per-index factor (rho1, rho2; q)_n (aq / rho1 rho2)^n or its limit
    std::function<void(ProductTerm &, int)> weight;
    std::function<void(ProductTerm &, int)> alpha_den;
    if (rho1 && rho2) {
        const MonomialSpec c = aq * rho1->inverse() * rho2->inverse();
        if (c.q_exp <= 0) {
            throw DivergentSpec("aq/(rho1 rho2) must have positive q order");
        }
        pre.times_poch(aq * rho1->inverse(), X(2), std::nullopt, 1);
        pre.times_poch(aq * rho2->inverse(), X(2), std::nullopt, 1);
        pre.times_poch(aq, X(2), std::nullopt, -1);
        pre.times_poch(c, X(2), std::nullopt, -1);
        weight = [=](ProductTerm &t, int n) {
            t.times_poch(*rho1, X(2), n).times_poch(*rho2, X(2), n).times(c.pow(n));
        };
        alpha_den = [=](ProductTerm &t, int n) {
            t.times_poch(aq * rho1->inverse(), X(2), n, -1).times_poch(aq * rho2->inverse(), X(2), n, -1);
        };
    } else if (rho1) {
        const MonomialSpec c = aq * rho1->inverse();
        pre.times_poch(c, X(2), std::nullopt, 1);
        pre.times_poch(aq, X(2), std::nullopt, -1);
        weight = [=](ProductTerm &t, int n) {
            t.times_poch(*rho1, X(2), n).times(c.pow(n)).times(X(n * (n - 1), neg1(n)));
        };
        alpha_den = [=](ProductTerm &t, int n) { t.times_poch(c, X(2), n, -1); };
    } else {
        pre.times_poch(aq, X(2), std::nullopt, -1);
        weight = [=](ProductTerm &t, int n) { t.times(aq.pow(n)).times(X(2 * n * (n - 1))); };
        alpha_den = [](ProductTerm &, int) {};
    }
    auto lhs = sum_terms(ring, order, [&](int n) {
        ProductTerm t = pair.beta(n, order);
        weight(t, n);
        return single(std::move(t));
    });
    auto rhs = sum_terms(ring, order, [&](int n) {
        ProductTerm t = pre;
        weight(t, n);
        alpha_den(t, n);
        return single(std::move(t), pair.alpha(n));
    });
    auto r = compare_sides("limiting_lemma:" + pair.name, lhs, rhs);
    r.notes.push_back(x_note(pair));
    return r;
}

bool lemma_admissible(int k, int h)
{
    switch (k) {
    case 1:
    case 2:
    case 7:
        return h >= 0;
    case 3:
    case 4:
        return h >= 1;
    case 5:
    case 6:
        // a = q (h = 1) is excluded
        return h >= 2;
    default:
        return false;
    }
}

const std::vector<int> &lemma_rescale_set(int k)
{
    static const std::vector<int> wide{0, 1, 2, 3, 4, 5};
    static const std::vector<int> z_forms{1, 2, 3, 4, 5};
    static const std::vector<int> omega{2, 3, 4, 5};
    if (k < 1 || k > 7) {
        throw std::invalid_argument("lemma variant must be in 1..7");
    }
    if (k == 3 || k == 4) {
        return z_forms;
    }
    if (k == 5 || k == 6) {
        return omega;
    }
    return wide;
}

namespace {

// sqrt(a) = X^h, q = X^2 (variants 1-6) or q = X (variant 7).
TermFn lemma_lhs(int k, const BaileyPair &pair, int order, bool at_omega)
{
    const int h = pair.h;
    return [=](int n) {
        ProductTerm t = pair.beta(n, order);
        switch (k) {
        case 1:
            t.times_poch(X(h), X(2), n).times(X(h * n + n * (n + 1), neg1(n)));
            break;
        case 2:
            t.times_poch(X(h + 1), X(2), n).times(X(h * n + n * n, neg1(n)));
            break;
        case 3:
        case 4:
            t.times_poch(ZX(1, h - 1), X(2), n).times_poch(ZX(-1, h - 1), X(2), n).times(X(k == 3 ? 2 * n : 4 * n));
            break;
        case 5:
        case 6:
            if (at_omega) {
                t.times_poch(ZX(1, h - 1), X(2), n).times_poch(ZX(-1, h - 1), X(2), n);
            } else {
                t.times_poch(X(3 * h - 3), X(6), n).times_poch(X(h - 1), X(2), n, -1);
            }
            t.times(X(k == 5 ? 2 * n : 4 * n));
            break;
        case 7:
            t.times_poch(X(h, -1), X(1), 2 * n).times(X(n));
            break;
        }
        return single(std::move(t));
    };
}

// Four denominators (1 - z^{+-1} X^{h-1+2n}) (1 - z^{+-1} X^{h+1+2n}).
void z_quartet(ProductTerm &t, int h, int n)
{
    for (int zs : {1, -1}) {
        t.times_binomial(ZX(zs, h - 1 + 2 * n), -1).times_binomial(ZX(zs, h + 1 + 2 * n), -1);
    }
}

TermFn lemma_rhs(int k, const BaileyPair &pair, int order)
{
    const int h = pair.h;
    ProductTerm pre(order);
    switch (k) {
    case 1:
        pre.times_poch(X(h + 2), X(2), std::nullopt).times_poch(X(2 * h + 2), X(2), std::nullopt, -1);
        break;
    case 2:
        pre.times_poch(X(h + 1), X(2), std::nullopt).times_poch(X(2 * h + 2), X(2), std::nullopt, -1);
        break;
    case 3:
    case 4:
        pre.times_poch(ZX(1, h - 1), X(2), std::nullopt).times_poch(ZX(-1, h - 1), X(2), std::nullopt);
        pre.times_poch(X(2), X(2), std::nullopt, -1).times_poch(X(2 * h + 2), X(2), std::nullopt, -1);
        break;
    case 5:
    case 6:
        pre.times_poch(X(3 * h - 3), X(6), std::nullopt);
        pre.times_poch(X(2), X(2), std::nullopt, -1).times_poch(X(2 * h + 2), X(2), std::nullopt, -1);
        pre.times_poch(X(h - 1), X(2), std::nullopt, -1);
        break;
    case 7:
        pre.times_poch(X(h + 1, -1), X(1), std::nullopt);
        pre.times_poch(X(2 * h + 2), X(2), std::nullopt, -1).times_poch(X(1), X(2), std::nullopt, -1);
        break;
    }
    return [=](int n) {
        ProductTerm t = pre;
        MonomialSum poly = pair.alpha(n);
        switch (k) {
        case 1:
            t.times_binomial(X(h)).times_binomial(X(h + 2 * n), -1).times(X(h * n + n * (n + 1), neg1(n)));
            break;
        case 2:
            t.times(X(h * n + n * n, neg1(n)));
            break;
        case 3:
            z_quartet(t, h, n);
            t.times(X(2 * n));
            poly = mono_product(poly, {X(0), ZX(1, h + 1 + 2 * n, -1), ZX(-1, h + 1 + 2 * n, -1), X(2 * h + 4 * n)});
            break;
        case 4:
            z_quartet(t, h, n);
            t.times_binomial(X(2)).times(X(4 * n));
            break;
        case 5:
            t.times_binomial(X(h - 1 + 2 * n)).times_binomial(X(h + 1 + 2 * n));
            t.times_binomial(X(3 * h - 3 + 6 * n), -1).times_binomial(X(3 * h + 3 + 6 * n), -1);
            t.times(X(2 * n));
            poly = mono_product(poly, {X(0), X(h + 1 + 2 * n), X(2 * h + 4 * n)});
            break;
        case 6:
            t.times_binomial(X(2)).times_binomial(X(h - 1 + 2 * n)).times_binomial(X(h + 1 + 2 * n));
            t.times_binomial(X(3 * h - 3 + 6 * n), -1).times_binomial(X(3 * h + 3 + 6 * n), -1);
            t.times(X(4 * n));
            break;
        case 7:
            t.times_binomial(X(h, -1)).times_binomial(X(h + 2 * n, -1), -1).times(X(n));
            break;
        }
        return single(std::move(t), std::move(poly));
    };
}

} // namespace

VerificationReport check_lemma_variant(int k, const BaileyPair &pair, int order)
{
    checked_order(order);
    if (k < 1 || k > 7) {
        throw std::invalid_argument("lemma variant must be in 1..7");
    }
    if (!lemma_admissible(k, pair.h)) {
        throw std::invalid_argument("lemma variant " + std::to_string(k) + " is not admissible for sqrt(a) = X^"
                                    + std::to_string(pair.h));
    }
    const std::string id = "lemma_variant_" + std::to_string(k) + ":" + pair.name;
    const std::string note = k == 7 ? "q = X, pair relative to (X^" + std::to_string(2 * pair.h) + ", X^2)"
                                    : "q = X^2, sqrt(a) = X^" + std::to_string(pair.h);
    VerificationReport r;
    if (k == 3 || k == 4) {
        const LaurentRing ring;
        r = compare_sides(id, sum_terms(ring, order, lemma_lhs(k, pair, order, false)),
                          sum_terms(ring, order, lemma_rhs(k, pair, order)));
    } else {
        const IntegerRing ring;
        r = compare_sides(id, sum_terms(ring, order, lemma_lhs(k, pair, order, false)),
                          sum_terms(ring, order, lemma_rhs(k, pair, order)));
    }
    if (k == 5 || k == 6) {
        // the omega form against the general form at z = zeta_3
        const CyclotomicRing cyc{3};
        auto general = sum_terms(cyc, order, lemma_lhs(k, pair, order, true));
        auto special = embed<CyclotomicRing>(sum_terms(IntegerRing{}, order, lemma_lhs(k, pair, order, false)), cyc);
        merge_into(r, compare_sides(id, general, special), "z = zeta_3 specialization");
    }
    r.notes.insert(r.notes.begin(), note);
    return r;
}

namespace {

ProductTerm delta1(const MonomialSpec &z, int h, int j, int order)
{
    ProductTerm t(order);
    t.times_poch(z * X(h - 1), X(2), j).times_poch(z.inverse() * X(h - 1), X(2), j).times(X(2 * j));
    return t;
}

std::pair<ProductTerm, MonomialSum> gamma1(const MonomialSpec &z, int h, int n, int order)
{
    ProductTerm t(order);
    const MonomialSpec zi = z.inverse();
    t.times(X(2 * n));
    t.times_poch(z * X(h - 1), X(2), std::nullopt).times_poch(zi * X(h - 1), X(2), std::nullopt);
    t.times_poch(X(2), X(2), std::nullopt, -1).times_poch(X(2 * h + 2), X(2), std::nullopt, -1);
    for (const MonomialSpec &w : {z, zi}) {
        t.times_binomial(w * X(h - 1 + 2 * n), -1).times_binomial(w * X(h + 1 + 2 * n), -1);
    }
    MonomialSum poly{X(0), z * X(h + 1 + 2 * n, -1), zi * X(h + 1 + 2 * n, -1), X(2 * h + 4 * n)};
    return {std::move(t), std::move(poly)};
}

} // namespace

VerificationReport check_conjugate_pair(const MonomialSpec &z, int h, int n_max, int order)
{
    checked_order(order);
    VerificationReport acc;
    acc.id = "conjugate_pair";
    acc.order = order;
    acc.notes.push_back("q = X^2, sqrt(a) = X^" + std::to_string(h));
    const LaurentRing ring;
    for (int n = 0; n <= n_max; ++n) {
        auto [g, gpoly] = gamma1(z, h, n, order);
        LaurentSeries lhs(ring, order);
        add_product_term(lhs, g, gpoly);
        auto rhs = sum_terms(ring, order, [&](int i) {
            const int j = n + i;
            ProductTerm t = delta1(z, h, j, order);
            t.times_poch(X(2), X(2), j - n, -1).times_poch(X(2 * h + 2), X(2), j + n, -1);
            return single(std::move(t));
        });
        merge_into(acc, compare_sides(acc.id, lhs, rhs), "gamma_" + std::to_string(n));
    }
    if (h >= 2) {
        const CyclotomicRing cyc{3};
        const MonomialSpec w{1, 1, 0};
        for (int n = 0; n <= n_max; ++n) {
            CycSeries d1(cyc, order), d2(cyc, order), g1(cyc, order), g2(cyc, order);
            add_product_term(d1, delta1(w, h, n, order), kOne);
            ProductTerm d(order);
            d.times_poch(X(3 * h - 3), X(6), n).times_poch(X(h - 1), X(2), n, -1).times(X(2 * n));
            add_product_term(d2, d, kOne);
            auto [g, gpoly] = gamma1(w, h, n, order);
            add_product_term(g1, g, gpoly);
            ProductTerm t(order);
            t.times(X(2 * n)).times_poch(X(3 * h - 3), X(6), std::nullopt);
            t.times_binomial(X(h - 1 + 2 * n)).times_binomial(X(h + 1 + 2 * n));
            t.times_poch(X(2), X(2), std::nullopt, -1).times_poch(X(2 * h + 2), X(2), std::nullopt, -1);
            t.times_poch(X(h - 1), X(2), std::nullopt, -1);
            t.times_binomial(X(3 * h - 3 + 6 * n), -1).times_binomial(X(3 * h + 3 + 6 * n), -1);
            add_product_term(g2, t, {X(0), X(h + 1 + 2 * n), X(2 * h + 4 * n)});
            merge_into(acc, compare_sides(acc.id, d1, d2), "delta at omega, n = " + std::to_string(n));
            merge_into(acc, compare_sides(acc.id, g1, g2), "gamma at omega, n = " + std::to_string(n));
        }
    }
    return acc;
}

} // namespace sptforge
