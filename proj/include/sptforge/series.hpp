#pragma once

#include <sptforge/rings.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sptforge {

// Raised when a builder would need a pole, a negative q power or a
// non-invertible constant term.
struct DivergentSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Power series in q truncated at an exclusive order N: coefficients of
// q^0 .. q^{N-1} are known exactly, everything from q^N on is unknown.
template <class Ring>
class Series {
public:
    using Value = typename Ring::Value;

    Series() = default;
    Series(Ring ring, int order) : ring_(std::move(ring)), c_(check_order(order), ring_.zero()) {}

    static Series one(const Ring &ring, int order) { return constant(ring, ring.from_int(BigInt(1)), order); }
    static Series constant(const Ring &ring, Value v, int order)
    {
        Series s(ring, order);
        if (order > 0) {
            s.c_[0] = std::move(v);
        }
        return s;
    }
    // c * q^e
    static Series monomial(const Ring &ring, Value c, int e, int order)
    {
        if (e < 0) {
            throw DivergentSpec("negative q exponent " + std::to_string(e));
        }
        Series s(ring, order);
        if (e < order) {
            s.c_[static_cast<std::size_t>(e)] = std::move(c);
        }
        return s;
    }
    // sign * z^zexp * q^qexp
    static Series zq_monomial(const Ring &ring, int sign, int zexp, int qexp, int order)
    {
        return monomial(ring, ring.zmono(sign, zexp), qexp, order);
    }

    const Ring &ring() const noexcept { return ring_; }
    int order() const noexcept { return static_cast<int>(c_.size()); }
    const Value &operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
    Value &coeff(int n) { return c_.at(static_cast<std::size_t>(n)); }
    const std::vector<Value> &coeffs() const noexcept { return c_; }
    std::vector<Value> &coeffs() noexcept { return c_; }

    bool is_zero() const
    {
        for (const auto &v : c_) {
            if (!Ring::is_zero(v)) {
                return false;
            }
        }
        return true;
    }
    // Index of the first nonzero coefficient, or order() if none.
    int valuation() const
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!Ring::is_zero(c_[i])) {
                return static_cast<int>(i);
            }
        }
        return order();
    }

    Series truncated(int order) const
    {
        if (order > this->order()) {
            throw std::invalid_argument("cannot extend a truncated series");
        }
        Series s(*this);
        s.c_.resize(static_cast<std::size_t>(order), ring_.zero());
        return s;
    }

    Series &operator+=(const Series &o)
    {
        check_ring(o);
        shrink_to(o.order());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            Ring::add_shifted(c_[i], o.c_[i], 1, 0);
        }
        return *this;
    }
    Series &operator-=(const Series &o)
    {
        check_ring(o);
        shrink_to(o.order());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            Ring::add_shifted(c_[i], o.c_[i], -1, 0);
        }
        return *this;
    }
    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    Series operator-() const
    {
        Series r(ring_, order());
        r -= *this;
        return r;
    }

    // *this += sign * z^zexp * q^qexp * o
    void add_scaled(const Series &o, int sign, int zexp, int qexp)
    {
        check_ring(o);
        if (qexp < 0) {
            throw DivergentSpec("negative q exponent " + std::to_string(qexp));
        }
        shrink_to(o.order() + qexp);
        for (int n = qexp; n < order(); ++n) {
            Ring::add_shifted(c_[static_cast<std::size_t>(n)], o.c_[static_cast<std::size_t>(n - qexp)], sign, zexp);
        }
    }

    Series &scale(const Value &v)
    {
        for (auto &x : c_) {
            if (!Ring::is_zero(x)) {
                Value r = ring_.zero();
                Ring::addmul(r, x, v);
                x = std::move(r);
            }
        }
        return *this;
    }
    Series &scale_int(const BigInt &k)
    {
        for (auto &x : c_) {
            Ring::scale(x, k);
        }
        return *this;
    }

    // Multiply by q^k, k >= 0; the order is unchanged.
    Series shifted(int k) const
    {
        if (k < 0) {
            throw DivergentSpec("negative q shift " + std::to_string(k));
        }
        Series r(ring_, order());
        for (int n = k; n < order(); ++n) {
            r.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n - k)];
        }
        return r;
    }

    // Multiply in place by (1 - sign * z^zexp * q^qexp).
    Series &mul_binomial(int sign, int zexp, int qexp)
    {
        if (qexp < 0) {
            throw DivergentSpec("negative q exponent in factor");
        }
        if (qexp == 0) {
            // (1 - c) x computed coefficientwise.
            for (auto &x : c_) {
                Value tmp = x;
                Ring::add_shifted(x, tmp, -sign, zexp);
            }
            return *this;
        }
        for (int n = order() - 1; n >= qexp; --n) {
            Ring::add_shifted(c_[static_cast<std::size_t>(n)], c_[static_cast<std::size_t>(n - qexp)], -sign, zexp);
        }
        return *this;
    }
    // Divide in place by (1 - sign * z^zexp * q^qexp) with qexp > 0.
    Series &div_binomial(int sign, int zexp, int qexp)
    {
        if (qexp <= 0) {
            throw DivergentSpec("pole: factor (1 - " + std::to_string(sign) + " z^" + std::to_string(zexp)
                                + ") has no q-adic inverse");
        }
        for (int n = qexp; n < order(); ++n) {
            Ring::add_shifted(c_[static_cast<std::size_t>(n)], c_[static_cast<std::size_t>(n - qexp)], sign, zexp);
        }
        return *this;
    }

    friend Series operator*(const Series &a, const Series &b)
    {
        a.check_ring(b);
        const int n = std::min(a.order(), b.order());
        Series r(a.ring_, n);
        for (int i = 0; i < n; ++i) {
            const auto &ai = a.c_[static_cast<std::size_t>(i)];
            if (Ring::is_zero(ai)) {
                continue;
            }
            for (int j = 0; i + j < n; ++j) {
                const auto &bj = b.c_[static_cast<std::size_t>(j)];
                if (!Ring::is_zero(bj)) {
                    Ring::addmul(r.c_[static_cast<std::size_t>(i + j)], ai, bj);
                }
            }
        }
        return r;
    }
    Series &operator*=(const Series &o) { return *this = *this * o; }

    friend bool operator==(const Series &a, const Series &b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

    // Coefficients with index p, ..., taken at indices congruent to r mod p.
    // Output order is ceil((N - r) / p).
    Series dissect(int p, int r) const
    {
        if (p <= 0 || r < 0 || r >= p) {
            throw std::invalid_argument("dissection needs 0 <= r < p");
        }
        const int n = order() > r ? (order() - r + p - 1) / p : 0;
        Series out(ring_, n);
        for (int m = 0; m < n; ++m) {
            out.c_[static_cast<std::size_t>(m)] = c_[static_cast<std::size_t>(p * m + r)];
        }
        return out;
    }

    // q -> (-1)^{negate} q^k. Output order min(k * N, cap).
    Series substitute(int k, bool negate, int cap = 1200) const
    {
        if (k <= 0) {
            throw std::invalid_argument("substitution exponent must be positive");
        }
        const long full = static_cast<long>(k) * order();
        const int n = static_cast<int>(std::min<long>(full, cap));
        Series out(ring_, n);
        for (int m = 0; m < order() && static_cast<long>(m) * k < n; ++m) {
            Value v = c_[static_cast<std::size_t>(m)];
            if (negate && (m % 2 != 0)) {
                Value z = ring_.zero();
                Ring::add_shifted(z, v, -1, 0);
                v = std::move(z);
            }
            out.c_[static_cast<std::size_t>(m * k)] = std::move(v);
        }
        return out;
    }

    // Converts coefficients with f : Value -> Other::Value.
    template <class Other, class F>
    Series<Other> map(const Other &other, F f) const
    {
        Series<Other> out(other, order());
        for (int n = 0; n < order(); ++n) {
            out.coeffs()[static_cast<std::size_t>(n)] = f(c_[static_cast<std::size_t>(n)]);
        }
        return out;
    }

private:
    static std::size_t check_order(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("negative truncation order");
        }
        return static_cast<std::size_t>(order);
    }
    void check_ring(const Series &o) const
    {
        if (!(ring_ == o.ring_)) {
            throw std::invalid_argument("ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
        }
    }
    void shrink_to(int order)
    {
        if (order < this->order()) {
            c_.resize(static_cast<std::size_t>(order), ring_.zero());
        }
    }

    Ring ring_{};
    std::vector<Value> c_;
};

using IntSeries = Series<IntegerRing>;
using CycSeries = Series<CyclotomicRing>;
using LaurentSeries = Series<LaurentRing>;

// Multiplicative inverse when the constant term is a unit of the form
// +-1, +-zeta^k or +-z^k.
template <class Ring>
Series<Ring> series_invert(const Series<Ring> &a);

template <class Ring>
Series<Ring> series_mul(const Series<Ring> &a, const Series<Ring> &b)
{
    return a * b;
}

template <class Ring>
Series<Ring> series_dissect(const Series<Ring> &a, int p, int r)
{
    return a.dissect(p, r);
}

template <class Ring>
Series<Ring> series_substitute(const Series<Ring> &a, int k, bool negate)
{
    return a.substitute(k, negate);
}

// Integer series viewed in another ring.
template <class Ring>
Series<Ring> embed(const IntSeries &s, const Ring &ring)
{
    return s.map(ring, [&](const BigInt &v) { return ring.from_int(v); });
}

CycSeries eval_at_root(const LaurentSeries &s, int t);
IntSeries eval_at_one(const LaurentSeries &s);
CycSeries cyc_times(const IntSeries &s, const CyclotomicInteger &c);

struct Mismatch {
    int power = -1;
    std::string lhs;
    std::string rhs;
};

// First power below min(order) where a and b differ.
template <class Ring>
std::optional<Mismatch> first_mismatch(const Series<Ring> &a, const Series<Ring> &b)
{
    const int n = std::min(a.order(), b.order());
    for (int i = 0; i < n; ++i) {
        if (!(a[i] == b[i])) {
            return Mismatch{i, Ring::render(a[i]), Ring::render(b[i])};
        }
    }
    return std::nullopt;
}

} // namespace sptforge
