#include <sptforge/factors.hpp>

namespace sptforge {

namespace {

// Factors at or above order + kSlack are never needed: evaluation refuses
// terms whose negative q shift exceeds the slack.
constexpr int kSlack = 600;

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

} // namespace

void FactorBag::add(const MonomialSpec &m, int mult)
{
    if (mult == 0) {
        return;
    }
    auto key = std::make_tuple(m.q_exp, m.z_exp, m.sign);
    auto it = f_.find(key);
    if (it == f_.end()) {
        f_.emplace(key, mult);
        return;
    }
    it->second += mult;
    if (it->second == 0) {
        f_.erase(it);
    }
}

void FactorBag::add(const FactorBag &other, int mult)
{
    for (const auto &[key, m] : other.f_) {
        auto [q, z, s] = key;
        add(MonomialSpec{s, z, q}, m * mult);
    }
}

void FactorBag::add_pochhammer(const MonomialSpec &arg, const MonomialSpec &base, std::optional<int> n, int order,
                               int mult)
{
    if (!n && base.q_exp <= 0) {
        throw DivergentSpec("infinite product with base of nonpositive q exponent");
    }
    if (n && *n < 0) {
        throw std::invalid_argument("negative pochhammer length");
    }
    MonomialSpec cur = arg;
    for (int j = 0; !n || j < *n; ++j) {
        if (cur.q_exp >= order + kSlack) {
            if (base.q_exp >= 0) {
                break;
            }
        } else {
            add(cur, mult);
        }
        cur = cur * base;
    }
}

template <class Ring>
Series<Ring> FactorBag::evaluate(const Ring &ring, int order) const
{
    auto s = Series<Ring>::one(ring, order);
    apply(s);
    return s;
}

template <class Ring>
void FactorBag::apply(Series<Ring> &s) const
{
    const int order = s.order();
    // Numerators first so that constant factors of 2 are applied before the
    // denominators; denominators with q exponent 0 are poles.
    for (const auto &[key, m] : f_) {
        auto [q, z, sign] = key;
        if (m <= 0 || q >= order) {
            continue;
        }
        if (q < 0) {
            throw DivergentSpec("factor with negative q exponent " + std::to_string(q));
        }
        for (int k = 0; k < m; ++k) {
            s.mul_binomial(sign, z, q);
        }
    }
    for (const auto &[key, m] : f_) {
        auto [q, z, sign] = key;
        if (m >= 0 || q >= order) {
            continue;
        }
        if (q <= 0) {
            throw DivergentSpec("pole: denominator factor (1 - " + std::to_string(sign) + " z^" + std::to_string(z)
                                + " q^" + std::to_string(q) + ")");
        }
        for (int k = 0; k < -m; ++k) {
            s.div_binomial(sign, z, q);
        }
    }
}

ProductTerm &ProductTerm::times_jac(const MonomialSpec &x, int b, int mult)
{
    if (b <= 0) {
        throw std::invalid_argument("theta modulus must be positive");
    }
    const long m = floor_div(x.q_exp, b);
    const MonomialSpec xr{x.sign, x.z_exp, static_cast<int>(x.q_exp - m * b)};
    // j(x q^{mb}; q^b) = (-1)^m x^{-m} q^{-b m(m-1)/2} j(x; q^b)
    MonomialSpec c = xr.inverse().pow(static_cast<int>(m));
    if (m % 2 != 0) {
        c.sign = -c.sign;
    }
    c.q_exp -= static_cast<int>(b * m * (m - 1) / 2);
    coeff = coeff * c.pow(mult);
    const MonomialSpec base = qmono(b);
    times_poch(xr, base, std::nullopt, mult);
    times_poch(MonomialSpec{xr.sign, -xr.z_exp, b - xr.q_exp}, base, std::nullopt, mult);
    return *this;
}

template <class Ring>
Series<Ring> ProductTerm::evaluate(const Ring &ring) const
{
    Series<Ring> out(ring, order);
    const auto &f = bag.factors();
    auto zero = f.find(std::make_tuple(0, 0, 1));
    if (zero != f.end() && zero->second > 0) {
        // (1 - 1) in the numerator: the whole term vanishes.
        return out;
    }
    if (coeff.q_exp < 0) {
        throw DivergentSpec("product term has negative q shift " + std::to_string(coeff.q_exp));
    }
    if (scalar.is_zero() || coeff.q_exp >= order) {
        return out;
    }
    auto body = bag.evaluate(ring, order - coeff.q_exp);
    if (!scalar.is_one()) {
        body.scale_int(scalar);
    }
    out.add_scaled(body, coeff.sign, coeff.z_exp, coeff.q_exp);
    return out;
}

MonomialSum mono_product(const MonomialSum &a, const MonomialSum &b)
{
    MonomialSum out;
    out.reserve(a.size() * b.size());
    for (const auto &x : a) {
        for (const auto &y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

int product_term_lead(const ProductTerm &term, const MonomialSum &poly)
{
    int low = 0;
    bool first = true;
    for (const auto &m : poly) {
        if (first || m.q_exp < low) {
            low = m.q_exp;
            first = false;
        }
    }
    return term.coeff.q_exp + low;
}

template <class Ring>
void add_product_term(Series<Ring> &acc, const ProductTerm &term, const MonomialSum &poly)
{
    if (poly.empty() || term.scalar.is_zero()) {
        return;
    }
    const int lead = product_term_lead(term, poly);
    if (lead >= acc.order()) {
        return;
    }
    ProductTerm base = term;
    base.order = acc.order();
    base.coeff.q_exp = lead;
    const auto body = base.evaluate(acc.ring());
    for (const auto &m : poly) {
        const int shift = term.coeff.q_exp + m.q_exp - lead;
        if (shift < acc.order()) {
            acc.add_scaled(body, m.sign, m.z_exp, shift);
        }
    }
}

template void add_product_term(IntSeries &, const ProductTerm &, const MonomialSum &);
template void add_product_term(CycSeries &, const ProductTerm &, const MonomialSum &);
template void add_product_term(LaurentSeries &, const ProductTerm &, const MonomialSum &);
template void FactorBag::apply(IntSeries &) const;
template void FactorBag::apply(CycSeries &) const;
template void FactorBag::apply(LaurentSeries &) const;
template IntSeries FactorBag::evaluate(const IntegerRing &, int) const;
template CycSeries FactorBag::evaluate(const CyclotomicRing &, int) const;
template LaurentSeries FactorBag::evaluate(const LaurentRing &, int) const;
template IntSeries ProductTerm::evaluate(const IntegerRing &) const;
template CycSeries ProductTerm::evaluate(const CyclotomicRing &) const;
template LaurentSeries ProductTerm::evaluate(const LaurentRing &) const;

} // namespace sptforge
