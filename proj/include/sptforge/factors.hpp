#pragma once

#include <sptforge/series.hpp>

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace sptforge {

// sign * z^z_exp * q^q_exp
struct MonomialSpec {
    int sign = 1;
    int z_exp = 0;
    int q_exp = 0;

    MonomialSpec operator*(const MonomialSpec &o) const { return {sign * o.sign, z_exp + o.z_exp, q_exp + o.q_exp}; }
    MonomialSpec inverse() const { return {sign, -z_exp, -q_exp}; }
    MonomialSpec pow(int k) const
    {
        return {(k % 2 != 0) ? sign : 1, z_exp * k, q_exp * k};
    }
    friend bool operator==(const MonomialSpec &, const MonomialSpec &) = default;
};

inline MonomialSpec qmono(int e, int sign = 1)
{
    return {sign, 0, e};
}

// Multiset of binomials (1 - sign z^a q^b) with signed multiplicities.
// Matching numerator and denominator factors cancel on insertion, which is
// how removable poles are handled.
class FactorBag {
public:
    void add(const MonomialSpec &m, int mult = 1);
    void add(const FactorBag &other, int mult = 1);
    // (arg; base)_n, or (arg; base)_inf when n is empty. Factors whose q
    // exponent reaches order are dropped.
    void add_pochhammer(const MonomialSpec &arg, const MonomialSpec &base, std::optional<int> n, int order,
                        int mult = 1);

    bool empty() const { return f_.empty(); }
    const std::map<std::tuple<int, int, int>, int> &factors() const { return f_; }

    template <class Ring>
    Series<Ring> evaluate(const Ring &ring, int order) const;
    // Multiplies s in place by the product.
    template <class Ring>
    void apply(Series<Ring> &s) const;

private:
    // key (q_exp, z_exp, sign)
    std::map<std::tuple<int, int, int>, int> f_;
};

// sign * z^z_exp * q^q_exp times a product of binomials. The q shift may be
// negative while a term is assembled; evaluation requires it to be >= 0.
struct ProductTerm {
    MonomialSpec coeff{};
    BigInt scalar{1};
    FactorBag bag;
    int order = 0;

    explicit ProductTerm(int order_) : order(order_) {}

    ProductTerm &times(const MonomialSpec &m)
    {
        coeff = coeff * m;
        return *this;
    }
    ProductTerm &times_int(const BigInt &k)
    {
        scalar *= k;
        return *this;
    }
    // (1 - m)^mult
    ProductTerm &times_binomial(const MonomialSpec &m, int mult = 1)
    {
        bag.add(m, mult);
        return *this;
    }
    // (arg; base)_n^mult
    ProductTerm &times_poch(const MonomialSpec &arg, const MonomialSpec &base, std::optional<int> n, int mult = 1)
    {
        bag.add_pochhammer(arg, base, n, order, mult);
        return *this;
    }
    // (sign q^a; q^b)_inf^mult
    ProductTerm &poch(int a, int b, int mult = 1, int sign = 1)
    {
        return times_poch(qmono(a, sign), qmono(b), std::nullopt, mult);
    }
    // (q^b; q^b)_inf^mult
    ProductTerm &eta(int b, int mult = 1) { return poch(b, b, mult); }
    // j(x; q^b)^mult with j(x; Q) = (x, Q/x; Q)_inf, any q exponent of x.
    ProductTerm &times_jac(const MonomialSpec &x, int b, int mult = 1);
    ProductTerm &jac(int a, int b, int mult = 1, int sign = 1) { return times_jac(qmono(a, sign), b, mult); }

    template <class Ring>
    Series<Ring> evaluate(const Ring &ring) const;
};

// Sum of signed monomials; exponents may be negative.
using MonomialSum = std::vector<MonomialSpec>;

MonomialSum mono_product(const MonomialSum &a, const MonomialSum &b);

// acc += term * poly. The lowest q exponent of term * poly must be >= 0.
template <class Ring>
void add_product_term(Series<Ring> &acc, const ProductTerm &term, const MonomialSum &poly);

// Lowest q exponent of term * poly, ignoring cancellation inside poly.
int product_term_lead(const ProductTerm &term, const MonomialSum &poly);

} // namespace sptforge
