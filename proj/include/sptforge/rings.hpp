#pragma once

#include <sptforge/bigint.hpp>

#include <string>
#include <utility>
#include <vector>

namespace sptforge {

// Element of Z[zeta_t] for a prime t, stored in the power basis
// 1, zeta, ..., zeta^{t-2}. The relation zeta^{t-1} = -(1 + ... + zeta^{t-2})
// keeps the representation canonical.
class CyclotomicInteger {
public:
    CyclotomicInteger() = default;
    // Zero element of Z[zeta_t].
    explicit CyclotomicInteger(int t);
    CyclotomicInteger(int t, std::vector<BigInt> coeffs);

    static CyclotomicInteger from_int(int t, const BigInt &n);
    static CyclotomicInteger root_power(int t, long k);

    int t() const noexcept { return t_; }
    const std::vector<BigInt> &coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept;
    std::string render() const;

    CyclotomicInteger &operator+=(const CyclotomicInteger &o);
    CyclotomicInteger &operator-=(const CyclotomicInteger &o);
    CyclotomicInteger &operator*=(const CyclotomicInteger &o);
    CyclotomicInteger &scale(const BigInt &k);
    void negate();
    // *this += sign * zeta^k * x
    void add_rotated(const CyclotomicInteger &x, int sign, long k);
    // *this += a * b
    void addmul(const CyclotomicInteger &a, const CyclotomicInteger &b);

    friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger &b) { return a += b; }
    friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger &b) { return a -= b; }
    friend CyclotomicInteger operator*(CyclotomicInteger a, const CyclotomicInteger &b) { return a *= b; }
    CyclotomicInteger operator-() const
    {
        CyclotomicInteger r(*this);
        r.negate();
        return r;
    }
    friend bool operator==(const CyclotomicInteger &a, const CyclotomicInteger &b)
    {
        return a.t_ == b.t_ && a.c_ == b.c_;
    }

private:
    void check_same(const CyclotomicInteger &o) const;

    int t_ = 0;
    std::vector<BigInt> c_;
};

// Raises std::invalid_argument unless t is prime.
CyclotomicInteger cyc_from_root_power(int t, long k);
// Raises std::invalid_argument on mismatched t.
CyclotomicInteger cyc_mul(const CyclotomicInteger &a, const CyclotomicInteger &b);
bool cyc_is_zero(const CyclotomicInteger &a);
bool is_prime(long n);

struct LaurentTerm {
    int exp;
    BigInt coeff;
    friend bool operator==(const LaurentTerm &, const LaurentTerm &) = default;
};

// Element of Z[z, z^{-1}]: nonzero terms sorted by exponent.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::vector<LaurentTerm> terms);

    static LaurentPolynomial constant(const BigInt &c);
    static LaurentPolynomial monomial(const BigInt &c, int exp);

    const std::vector<LaurentTerm> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int min_exp() const { return terms_.front().exp; }
    int max_exp() const { return terms_.back().exp; }
    BigInt coeff(int exp) const;
    std::string render() const;

    LaurentPolynomial &operator+=(const LaurentPolynomial &o) { add_shifted(o, 1, 0); return *this; }
    LaurentPolynomial &operator-=(const LaurentPolynomial &o) { add_shifted(o, -1, 0); return *this; }
    LaurentPolynomial &scale(const BigInt &k);
    void negate();
    // *this += sign * z^k * x
    void add_shifted(const LaurentPolynomial &x, int sign, int k);
    void addmul(const LaurentPolynomial &a, const LaurentPolynomial &b);
    void shift(int k);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b);
    LaurentPolynomial operator-() const
    {
        LaurentPolynomial r(*this);
        r.negate();
        return r;
    }
    friend bool operator==(const LaurentPolynomial &a, const LaurentPolynomial &b) = default;

    // Image under z -> zeta_t.
    CyclotomicInteger eval_at_root(int t) const;
    // Image under z -> 1.
    BigInt eval_at_one() const;

private:
    std::vector<LaurentTerm> terms_;
};

LaurentPolynomial laurent_mul(const LaurentPolynomial &a, const LaurentPolynomial &b);
CyclotomicInteger laurent_eval_at_root(const LaurentPolynomial &a, int t);

// Ring contexts. Each one fixes the coefficient ring of a truncated series and
// the image of the formal variable z in it.

struct IntegerRing {
    using Value = BigInt;
    static constexpr const char *kind = "one";

    Value zero() const { return BigInt(); }
    Value from_int(const BigInt &n) const { return n; }
    Value zmono(int sign, int) const { return BigInt(sign); }
    static bool is_zero(const Value &v) { return v.is_zero(); }
    static void add_shifted(Value &acc, const Value &x, int sign, int)
    {
        if (sign > 0) {
            acc += x;
        } else {
            acc -= x;
        }
    }
    static void addmul(Value &acc, const Value &a, const Value &b) { acc.addmul(a, b); }
    static void scale(Value &v, const BigInt &k) { v *= k; }
    static std::string render(const Value &v) { return v.to_string(); }
    std::string name() const { return "integer"; }
    friend bool operator==(const IntegerRing &, const IntegerRing &) = default;
};

struct CyclotomicRing {
    using Value = CyclotomicInteger;
    static constexpr const char *kind = "root";

    int t = 5;

    Value zero() const { return CyclotomicInteger(t); }
    Value from_int(const BigInt &n) const { return CyclotomicInteger::from_int(t, n); }
    Value zmono(int sign, int zexp) const
    {
        auto v = CyclotomicInteger::root_power(t, zexp);
        if (sign < 0) {
            v.negate();
        }
        return v;
    }
    static bool is_zero(const Value &v) { return v.is_zero(); }
    static void add_shifted(Value &acc, const Value &x, int sign, int k) { acc.add_rotated(x, sign, k); }
    static void addmul(Value &acc, const Value &a, const Value &b) { acc.addmul(a, b); }
    static void scale(Value &v, const BigInt &k) { v.scale(k); }
    static std::string render(const Value &v) { return v.render(); }
    std::string name() const { return "cyclotomic(" + std::to_string(t) + ")"; }
    friend bool operator==(const CyclotomicRing &, const CyclotomicRing &) = default;
};

struct LaurentRing {
    using Value = LaurentPolynomial;
    static constexpr const char *kind = "symbolic";

    Value zero() const { return LaurentPolynomial(); }
    Value from_int(const BigInt &n) const { return LaurentPolynomial::constant(n); }
    Value zmono(int sign, int zexp) const { return LaurentPolynomial::monomial(BigInt(sign), zexp); }
    static bool is_zero(const Value &v) { return v.is_zero(); }
    static void add_shifted(Value &acc, const Value &x, int sign, int k) { acc.add_shifted(x, sign, k); }
    static void addmul(Value &acc, const Value &a, const Value &b) { acc.addmul(a, b); }
    static void scale(Value &v, const BigInt &k) { v.scale(k); }
    static std::string render(const Value &v) { return v.render(); }
    std::string name() const { return "laurent"; }
    friend bool operator==(const LaurentRing &, const LaurentRing &) = default;
};

} // namespace sptforge
