#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sptforge {

// Arbitrary precision integer. Values that fit in int64 are stored inline;
// larger values live in a heap-allocated GMP integer. The representation is
// normalised: the heap form is only used when the value does not fit.
class BigInt {
public:
    BigInt() noexcept = default;
    BigInt(long long v) noexcept : small_(static_cast<std::int64_t>(v)) {}
    BigInt(long v) noexcept : small_(v) {}
    BigInt(int v) noexcept : small_(v) {}
    BigInt(const BigInt &other);
    BigInt(BigInt &&other) noexcept : small_(other.small_), big_(other.big_)
    {
        other.big_ = nullptr;
        other.small_ = 0;
    }
    BigInt &operator=(const BigInt &other);
    BigInt &operator=(BigInt &&other) noexcept
    {
        if (this != &other) {
            release();
            small_ = other.small_;
            big_ = other.big_;
            other.big_ = nullptr;
            other.small_ = 0;
        }
        return *this;
    }
    ~BigInt() { release(); }

    static BigInt from_string(std::string_view s);

    bool is_zero() const noexcept { return big_ == nullptr && small_ == 0; }
    bool is_one() const noexcept { return big_ == nullptr && small_ == 1; }
    int sign() const noexcept;
    bool is_small() const noexcept { return big_ == nullptr; }
    std::int64_t small_value() const noexcept { return small_; }
    std::string to_string() const;

    BigInt &operator+=(const BigInt &o)
    {
        std::int64_t r;
        if (big_ == nullptr && o.big_ == nullptr && !__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        slow_add(o, false);
        return *this;
    }
    BigInt &operator-=(const BigInt &o)
    {
        std::int64_t r;
        if (big_ == nullptr && o.big_ == nullptr && !__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        slow_add(o, true);
        return *this;
    }
    BigInt &operator*=(const BigInt &o)
    {
        std::int64_t r;
        if (big_ == nullptr && o.big_ == nullptr && !__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        slow_mul(o);
        return *this;
    }
    // *this += a * b
    void addmul(const BigInt &a, const BigInt &b)
    {
        std::int64_t p, r;
        if (big_ == nullptr && a.big_ == nullptr && b.big_ == nullptr
            && !__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r)) {
            small_ = r;
            return;
        }
        slow_addmul(a, b, false);
    }
    // *this -= a * b
    void submul(const BigInt &a, const BigInt &b)
    {
        std::int64_t p, r;
        if (big_ == nullptr && a.big_ == nullptr && b.big_ == nullptr
            && !__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_sub_overflow(small_, p, &r)) {
            small_ = r;
            return;
        }
        slow_addmul(a, b, true);
    }
    void negate();

    // Exact quotient. Throws std::domain_error when d does not divide *this.
    BigInt divexact(const BigInt &d) const;
    bool divisible_by(const BigInt &d) const;
    // Least nonnegative residue modulo m > 0.
    long mod(long m) const;

    friend BigInt operator+(BigInt a, const BigInt &b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt &b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt &b) { return a *= b; }
    BigInt operator-() const
    {
        BigInt r(*this);
        r.negate();
        return r;
    }

    friend bool operator==(const BigInt &a, const BigInt &b) noexcept
    {
        if (a.big_ == nullptr && b.big_ == nullptr) {
            return a.small_ == b.small_;
        }
        return a.compare(b) == 0;
    }
    friend std::strong_ordering operator<=>(const BigInt &a, const BigInt &b) noexcept
    {
        int c = a.compare(b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    static BigInt pow(const BigInt &base, unsigned e);

private:
    int compare(const BigInt &o) const noexcept;
    void release() noexcept;
    void slow_add(const BigInt &o, bool subtract);
    void slow_mul(const BigInt &o);
    void slow_addmul(const BigInt &a, const BigInt &b, bool subtract);
    // Copies the value into an initialised mpz.
    void load(mpz_t out) const;
    // Takes ownership of an initialised mpz, demoting to the inline form when possible.
    void store(mpz_t in);

    std::int64_t small_ = 0;
    __mpz_struct *big_ = nullptr;
};

std::ostream &operator<<(std::ostream &os, const BigInt &v);

} // namespace sptforge
