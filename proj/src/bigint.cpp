#include <sptforge/bigint.hpp>

#include <limits>
#include <ostream>
#include <stdexcept>

namespace sptforge {

namespace {

void set_int64(mpz_t z, std::int64_t v)
{
    // mpz_set_si takes a long, which is 64 bits on the supported platforms.
    static_assert(sizeof(long) == sizeof(std::int64_t));
    mpz_set_si(z, static_cast<long>(v));
}

} // namespace

BigInt::BigInt(const BigInt &other) : small_(other.small_)
{
    if (other.big_ != nullptr) {
        big_ = new __mpz_struct;
        mpz_init_set(big_, other.big_);
    }
}

BigInt &BigInt::operator=(const BigInt &other)
{
    if (this == &other) {
        return *this;
    }
    if (other.big_ == nullptr) {
        release();
        small_ = other.small_;
        return *this;
    }
    if (big_ == nullptr) {
        big_ = new __mpz_struct;
        mpz_init_set(big_, other.big_);
    } else {
        mpz_set(big_, other.big_);
    }
    small_ = 0;
    return *this;
}

void BigInt::release() noexcept
{
    if (big_ != nullptr) {
        mpz_clear(big_);
        delete big_;
        big_ = nullptr;
    }
}

BigInt BigInt::from_string(std::string_view s)
{
    mpz_t z;
    std::string tmp(s);
    if (mpz_init_set_str(z, tmp.c_str(), 10) != 0) {
        mpz_clear(z);
        throw std::invalid_argument("invalid integer literal: " + tmp);
    }
    BigInt r;
    r.store(z);
    return r;
}

int BigInt::sign() const noexcept
{
    if (big_ == nullptr) {
        return (small_ > 0) - (small_ < 0);
    }
    return mpz_sgn(big_);
}

std::string BigInt::to_string() const
{
    if (big_ == nullptr) {
        return std::to_string(small_);
    }
    std::string out(mpz_sizeinbase(big_, 10) + 2, '\0');
    mpz_get_str(out.data(), 10, big_);
    out.resize(std::char_traits<char>::length(out.c_str()));
    return out;
}

void BigInt::load(mpz_t out) const
{
    if (big_ == nullptr) {
        set_int64(out, small_);
    } else {
        mpz_set(out, big_);
    }
}

void BigInt::store(mpz_t in)
{
    if (mpz_fits_slong_p(in)) {
        release();
        small_ = mpz_get_si(in);
        mpz_clear(in);
        return;
    }
    if (big_ == nullptr) {
        big_ = new __mpz_struct;
    } else {
        mpz_clear(big_);
    }
    *big_ = *in;
    small_ = 0;
}

void BigInt::slow_add(const BigInt &o, bool subtract)
{
    mpz_t a, b;
    mpz_init(a);
    mpz_init(b);
    load(a);
    o.load(b);
    if (subtract) {
        mpz_sub(a, a, b);
    } else {
        mpz_add(a, a, b);
    }
    mpz_clear(b);
    store(a);
}

void BigInt::slow_mul(const BigInt &o)
{
    mpz_t a, b;
    mpz_init(a);
    mpz_init(b);
    load(a);
    o.load(b);
    mpz_mul(a, a, b);
    mpz_clear(b);
    store(a);
}

void BigInt::slow_addmul(const BigInt &x, const BigInt &y, bool subtract)
{
    mpz_t acc, a, b;
    mpz_init(acc);
    mpz_init(a);
    mpz_init(b);
    load(acc);
    x.load(a);
    y.load(b);
    if (subtract) {
        mpz_submul(acc, a, b);
    } else {
        mpz_addmul(acc, a, b);
    }
    mpz_clear(a);
    mpz_clear(b);
    store(acc);
}

void BigInt::negate()
{
    if (big_ == nullptr) {
        if (small_ != std::numeric_limits<std::int64_t>::min()) {
            small_ = -small_;
            return;
        }
        mpz_t a;
        mpz_init(a);
        set_int64(a, small_);
        mpz_neg(a, a);
        store(a);
        return;
    }
    mpz_neg(big_, big_);
    if (mpz_fits_slong_p(big_)) {
        std::int64_t v = mpz_get_si(big_);
        release();
        small_ = v;
    }
}

BigInt BigInt::divexact(const BigInt &d) const
{
    if (d.is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (!divisible_by(d)) {
        throw std::domain_error("inexact division of " + to_string() + " by " + d.to_string());
    }
    if (big_ == nullptr && d.big_ == nullptr && !(small_ == std::numeric_limits<std::int64_t>::min() && d.small_ == -1)) {
        return BigInt(static_cast<long long>(small_ / d.small_));
    }
    mpz_t a, b;
    mpz_init(a);
    mpz_init(b);
    load(a);
    d.load(b);
    mpz_divexact(a, a, b);
    mpz_clear(b);
    BigInt r;
    r.store(a);
    return r;
}

bool BigInt::divisible_by(const BigInt &d) const
{
    if (d.is_zero()) {
        return is_zero();
    }
    if (big_ == nullptr && d.big_ == nullptr) {
        if (d.small_ == -1) {
            return true;
        }
        return small_ % d.small_ == 0;
    }
    mpz_t a, b;
    mpz_init(a);
    mpz_init(b);
    load(a);
    d.load(b);
    bool r = mpz_divisible_p(a, b) != 0;
    mpz_clear(a);
    mpz_clear(b);
    return r;
}

long BigInt::mod(long m) const
{
    if (m <= 0) {
        throw std::domain_error("modulus must be positive");
    }
    if (big_ == nullptr) {
        long r = static_cast<long>(small_ % m);
        return r < 0 ? r + m : r;
    }
    return static_cast<long>(mpz_fdiv_ui(big_, static_cast<unsigned long>(m)));
}

BigInt BigInt::pow(const BigInt &base, unsigned e)
{
    mpz_t a;
    mpz_init(a);
    base.load(a);
    mpz_pow_ui(a, a, e);
    BigInt r;
    r.store(a);
    return r;
}

int BigInt::compare(const BigInt &o) const noexcept
{
    if (big_ == nullptr && o.big_ == nullptr) {
        return (small_ > o.small_) - (small_ < o.small_);
    }
    if (big_ != nullptr && o.big_ != nullptr) {
        int c = mpz_cmp(big_, o.big_);
        return (c > 0) - (c < 0);
    }
    // Exactly one operand is out of int64 range, so its sign decides.
    if (big_ != nullptr) {
        return mpz_sgn(big_);
    }
    return -mpz_sgn(o.big_);
}

std::ostream &operator<<(std::ostream &os, const BigInt &v)
{
    return os << v.to_string();
}

} // namespace sptforge
