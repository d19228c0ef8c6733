#include <sptforge/rings.hpp>

#include <algorithm>
#include <stdexcept>

namespace sptforge {

bool is_prime(long n)
{
    if (n < 2) {
        return false;
    }
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

namespace {

void require_prime(int t)
{
    if (!is_prime(t)) {
        throw std::invalid_argument("cyclotomic order must be prime, got " + std::to_string(t));
    }
}

long reduce_exp(long k, int t)
{
    long r = k % t;
    return r < 0 ? r + t : r;
}

} // namespace

CyclotomicInteger::CyclotomicInteger(int t) : t_(t), c_(static_cast<std::size_t>(t - 1))
{
    require_prime(t);
}

CyclotomicInteger::CyclotomicInteger(int t, std::vector<BigInt> coeffs) : t_(t), c_(std::move(coeffs))
{
    require_prime(t);
    if (c_.size() == static_cast<std::size_t>(t)) {
        // Accept the redundant length-t form and reduce it.
        BigInt top = c_.back();
        c_.pop_back();
        for (auto &c : c_) {
            c -= top;
        }
    }
    if (c_.size() != static_cast<std::size_t>(t - 1)) {
        throw std::invalid_argument("cyclotomic integer needs t-1 coefficients");
    }
}

CyclotomicInteger CyclotomicInteger::from_int(int t, const BigInt &n)
{
    CyclotomicInteger r(t);
    r.c_[0] = n;
    return r;
}

CyclotomicInteger CyclotomicInteger::root_power(int t, long k)
{
    CyclotomicInteger r(t);
    long e = reduce_exp(k, t);
    if (e == t - 1) {
        for (auto &c : r.c_) {
            c = BigInt(-1);
        }
    } else {
        r.c_[static_cast<std::size_t>(e)] = BigInt(1);
    }
    return r;
}

bool CyclotomicInteger::is_zero() const noexcept
{
    return std::all_of(c_.begin(), c_.end(), [](const BigInt &c) { return c.is_zero(); });
}

std::string CyclotomicInteger::render() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += c_[i].to_string();
    }
    out += ']';
    return out;
}

void CyclotomicInteger::check_same(const CyclotomicInteger &o) const
{
    if (t_ != o.t_) {
        throw std::invalid_argument("mismatched cyclotomic orders " + std::to_string(t_) + " and "
                                    + std::to_string(o.t_));
    }
}

CyclotomicInteger &CyclotomicInteger::operator+=(const CyclotomicInteger &o)
{
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    return *this;
}

CyclotomicInteger &CyclotomicInteger::operator-=(const CyclotomicInteger &o)
{
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    return *this;
}

CyclotomicInteger &CyclotomicInteger::scale(const BigInt &k)
{
    for (auto &c : c_) {
        c *= k;
    }
    return *this;
}

void CyclotomicInteger::negate()
{
    for (auto &c : c_) {
        c.negate();
    }
}

void CyclotomicInteger::add_rotated(const CyclotomicInteger &x, int sign, long k)
{
    check_same(x);
    if (&x == this) {
        CyclotomicInteger copy(x);
        add_rotated(copy, sign, k);
        return;
    }
    const long t = t_;
    const long e = reduce_exp(k, t_);
    const std::size_t wrap = static_cast<std::size_t>(t - 1 - e); // index landing on zeta^{t-1}
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (i == wrap) {
            continue;
        }
        auto p = static_cast<std::size_t>((static_cast<long>(i) + e) % t);
        if (sign > 0) {
            c_[p] += x.c_[i];
        } else {
            c_[p] -= x.c_[i];
        }
    }
    if (wrap < x.c_.size() && !x.c_[wrap].is_zero()) {
        const BigInt &w = x.c_[wrap];
        for (auto &c : c_) {
            if (sign > 0) {
                c -= w;
            } else {
                c += w;
            }
        }
    }
}

void CyclotomicInteger::addmul(const CyclotomicInteger &a, const CyclotomicInteger &b)
{
    check_same(a);
    check_same(b);
    const std::size_t t = static_cast<std::size_t>(t_);
    thread_local std::vector<BigInt> buf;
    buf.assign(t, BigInt());
    for (std::size_t i = 0; i + 1 < t; ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j + 1 < t; ++j) {
            std::size_t p = i + j;
            if (p >= t) {
                p -= t;
            }
            buf[p].addmul(a.c_[i], b.c_[j]);
        }
    }
    const BigInt top = buf[t - 1];
    for (std::size_t i = 0; i + 1 < t; ++i) {
        c_[i] += buf[i];
        c_[i] -= top;
    }
}

CyclotomicInteger &CyclotomicInteger::operator*=(const CyclotomicInteger &o)
{
    CyclotomicInteger r(t_);
    r.addmul(*this, o);
    *this = std::move(r);
    return *this;
}

CyclotomicInteger cyc_from_root_power(int t, long k)
{
    return CyclotomicInteger::root_power(t, k);
}

CyclotomicInteger cyc_mul(const CyclotomicInteger &a, const CyclotomicInteger &b)
{
    return a * b;
}

bool cyc_is_zero(const CyclotomicInteger &a)
{
    return a.is_zero();
}

LaurentPolynomial::LaurentPolynomial(std::vector<LaurentTerm> terms)
{
    std::sort(terms.begin(), terms.end(), [](const auto &x, const auto &y) { return x.exp < y.exp; });
    for (auto &term : terms) {
        if (!terms_.empty() && terms_.back().exp == term.exp) {
            terms_.back().coeff += term.coeff;
            if (terms_.back().coeff.is_zero()) {
                terms_.pop_back();
            }
        } else if (!term.coeff.is_zero()) {
            terms_.push_back(std::move(term));
        }
    }
}

LaurentPolynomial LaurentPolynomial::constant(const BigInt &c)
{
    return monomial(c, 0);
}

LaurentPolynomial LaurentPolynomial::monomial(const BigInt &c, int exp)
{
    LaurentPolynomial r;
    if (!c.is_zero()) {
        r.terms_.push_back({exp, c});
    }
    return r;
}

BigInt LaurentPolynomial::coeff(int exp) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const LaurentTerm &x, int e) { return x.exp < e; });
    if (it != terms_.end() && it->exp == exp) {
        return it->coeff;
    }
    return BigInt();
}

std::string LaurentPolynomial::render() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(terms_[i].exp);
        out += ':';
        out += terms_[i].coeff.to_string();
    }
    out += ']';
    return out;
}

LaurentPolynomial &LaurentPolynomial::scale(const BigInt &k)
{
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.coeff *= k;
    }
    return *this;
}

void LaurentPolynomial::negate()
{
    for (auto &t : terms_) {
        t.coeff.negate();
    }
}

void LaurentPolynomial::shift(int k)
{
    for (auto &t : terms_) {
        t.exp += k;
    }
}

void LaurentPolynomial::add_shifted(const LaurentPolynomial &x, int sign, int k)
{
    if (x.terms_.empty()) {
        return;
    }
    if (&x == this) {
        LaurentPolynomial copy(x);
        add_shifted(copy, sign, k);
        return;
    }
    if (terms_.empty()) {
        terms_ = x.terms_;
        for (auto &t : terms_) {
            t.exp += k;
            if (sign < 0) {
                t.coeff.negate();
            }
        }
        return;
    }
    // Fast path: disjoint and x lies entirely above.
    if (x.terms_.front().exp + k > terms_.back().exp) {
        for (const auto &t : x.terms_) {
            terms_.push_back({t.exp + k, t.coeff});
            if (sign < 0) {
                terms_.back().coeff.negate();
            }
        }
        return;
    }
    thread_local std::vector<LaurentTerm> out;
    out.clear();
    out.reserve(terms_.size() + x.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < x.terms_.size()) {
        if (j == x.terms_.size() || (i < terms_.size() && terms_[i].exp < x.terms_[j].exp + k)) {
            out.push_back(std::move(terms_[i]));
            ++i;
        } else if (i == terms_.size() || terms_[i].exp > x.terms_[j].exp + k) {
            out.push_back({x.terms_[j].exp + k, x.terms_[j].coeff});
            if (sign < 0) {
                out.back().coeff.negate();
            }
            ++j;
        } else {
            BigInt c = std::move(terms_[i].coeff);
            if (sign > 0) {
                c += x.terms_[j].coeff;
            } else {
                c -= x.terms_[j].coeff;
            }
            if (!c.is_zero()) {
                out.push_back({terms_[i].exp, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    terms_.swap(out);
}

void LaurentPolynomial::addmul(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    if (a.terms_.empty() || b.terms_.empty()) {
        return;
    }
    if (a.terms_.size() == 1) {
        LaurentPolynomial tmp(b);
        tmp.scale(a.terms_[0].coeff);
        add_shifted(tmp, 1, a.terms_[0].exp);
        return;
    }
    // Dense accumulation over the product's exponent range.
    const int lo = a.min_exp() + b.min_exp();
    const int hi = a.max_exp() + b.max_exp();
    thread_local std::vector<BigInt> buf;
    buf.assign(static_cast<std::size_t>(hi - lo + 1), BigInt());
    for (const auto &x : a.terms_) {
        for (const auto &y : b.terms_) {
            buf[static_cast<std::size_t>(x.exp + y.exp - lo)].addmul(x.coeff, y.coeff);
        }
    }
    std::vector<LaurentTerm> prod;
    for (std::size_t i = 0; i < buf.size(); ++i) {
        if (!buf[i].is_zero()) {
            prod.push_back({lo + static_cast<int>(i), std::move(buf[i])});
        }
    }
    LaurentPolynomial p;
    p.terms_ = std::move(prod);
    add_shifted(p, 1, 0);
}

LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    LaurentPolynomial r;
    r.addmul(a, b);
    return r;
}

CyclotomicInteger LaurentPolynomial::eval_at_root(int t) const
{
    CyclotomicInteger r(t);
    std::vector<BigInt> full(static_cast<std::size_t>(t));
    for (const auto &term : terms_) {
        long e = term.exp % t;
        if (e < 0) {
            e += t;
        }
        full[static_cast<std::size_t>(e)] += term.coeff;
    }
    return CyclotomicInteger(t, std::move(full));
}

BigInt LaurentPolynomial::eval_at_one() const
{
    BigInt s;
    for (const auto &t : terms_) {
        s += t.coeff;
    }
    return s;
}

LaurentPolynomial laurent_mul(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    return a * b;
}

CyclotomicInteger laurent_eval_at_root(const LaurentPolynomial &a, int t)
{
    return a.eval_at_root(t);
}

} // namespace sptforge
