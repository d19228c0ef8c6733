#pragma once

#include <sptforge/factors.hpp>

#include <optional>
#include <string>
#include <variant>

namespace sptforge {

// How the formal variable z is specialised.
enum class ModeKind { symbolic, root, one };

struct Mode {
    ModeKind kind = ModeKind::symbolic;
    int t = 0;

    static Mode symbolic() { return {ModeKind::symbolic, 0}; }
    static Mode root(int t) { return {ModeKind::root, t}; }
    static Mode one() { return {ModeKind::one, 0}; }
    // "symbolic", "one" or "root(t)"
    static Mode parse(const std::string &s);
    std::string name() const;
    friend bool operator==(const Mode &, const Mode &) = default;
};

using AnySeries = std::variant<IntSeries, CycSeries, LaurentSeries>;

int any_order(const AnySeries &s);
std::string any_render(const AnySeries &s, int n);
std::optional<Mismatch> any_first_mismatch(const AnySeries &a, const AnySeries &b);

// Calls f(ring) with the ring selected by mode; f returns Series<Ring>.
template <class F>
AnySeries with_mode(const Mode &mode, F &&f)
{
    switch (mode.kind) {
    case ModeKind::symbolic:
        return AnySeries(f(LaurentRing{}));
    case ModeKind::root:
        return AnySeries(f(CyclotomicRing{mode.t}));
    case ModeKind::one:
        break;
    }
    return AnySeries(f(IntegerRing{}));
}

// Default truncation orders and the global cap.
inline constexpr int kDefaultOrderTwoVariable = 120;
inline constexpr int kDefaultOrderCyclotomic = 250;
inline constexpr int kDefaultOrderH25 = 600;
inline constexpr int kMaxOrder = 1200;

// Cap from SPTFORGE_MAX_ORDER when set, else kMaxOrder.
int max_order();
// Throws std::out_of_range when order is outside [0, max_order()].
int checked_order(int order);

// (arg; base)_n, or (arg; base)_inf when n is empty.
template <class Ring>
Series<Ring> pochhammer(const Ring &ring, const MonomialSpec &arg, std::optional<int> n, const MonomialSpec &base,
                        int order)
{
    FactorBag bag;
    bag.add_pochhammer(arg, base, n, order);
    return bag.evaluate(ring, order);
}

// (q^a, q^{b-a}; q^b)_inf for 0 < a < b.
IntSeries jacobi_product(int a, int b, int order);

// sum over all integers n of (-1)^{n * alternating} q^{(A n^2 + B n) / 2}
IntSeries theta_sum(int A, int B, bool alternating, int order);

// sum_{n >= 1} q^{a n} / (1 - q^{b n})
IntSeries lambert_sum(int a, int b, int order);

// sum_{n >= 1} E_r(n; m) q^n, where E_r(n; m) counts divisors of n congruent to
// r mod m minus those congruent to -r mod m.
IntSeries divisor_series(int r, int m, int order);

// s += c * q^e / (1 - dsign q^d), with d > 0 and e >= 0.
void add_geometric(IntSeries &s, const BigInt &c, long e, long d, int dsign = 1);

// Term n: csign * (-1)^{n alternating} * wsign^n * q^{(e2 n^2 + e1 n)/ediv + e0}
//         / (1 - dsign q^{d1 n + d0}),
// summed over all integers n (n != 0 when skip_zero). Terms whose
// denominator exponent is negative are rewritten with
// 1/(1 - s q^{-m}) = -s q^m / (1 - s q^m); exponent 0 is a pole.
struct BilateralSpec {
    long e2 = 0, e1 = 0, e0 = 0;
    long ediv = 1;
    bool alternating = false;
    int wsign = 1;
    int csign = 1;
    long d1 = 0, d0 = 0;
    int dsign = 1;
    bool skip_zero = false;
};

IntSeries bilateral_sum(const BilateralSpec &spec, int order);

// V_l(b) = sum_{n != 0} q^{2n^2 + bn} / (1 - q^{4 l n})
IntSeries series_V(int ell, int b, int order);
// q^shift U_l(b), where U_l(b) = sum_n q^{2n^2 + bn} / (1 - q^{4 l n + 2 l}).
// Some U_l(b) only become power series after the shift.
IntSeries series_U(int ell, int b, int order, int shift = 0);
// T(z, w, q^Q) = sum_n (-1)^n Q^{n(n+1)/2} w^n / (1 - z Q^n), z and w
// signed q-monomials.
IntSeries series_T(const MonomialSpec &z, const MonomialSpec &w, int Q, int order, int shift = 0, int csign = 1);
// T*(w, q^Q) = sum_{n != 0} (-1)^n Q^{n(n+1)/2} w^n / (1 - Q^n)
IntSeries series_Tstar(const MonomialSpec &w, int Q, int order, int shift = 0, int csign = 1);
// h(z, q^Q) = T*(z^{-1}, q^Q) + z T(z^2, z, q^Q)
IntSeries series_h(const MonomialSpec &z, int Q, int order);

enum class BilateralKind { V, U, T, Tstar, h };
struct BilateralParams {
    int ell = 0;
    int b = 0;
    MonomialSpec z{};
    MonomialSpec w{};
    int Q = 1;
};
IntSeries bilateral_builder(BilateralKind kind, const BilateralParams &p, int order);

// R(z, q): rank generating function.
template <class Ring>
Series<Ring> rank_series(const Ring &ring, int order);
// C(z, q) = (q; q)_inf / (zq, q/z; q)_inf: crank generating function.
template <class Ring>
Series<Ring> crank_series(const Ring &ring, int order);

AnySeries rank_series(const Mode &mode, int order);
AnySeries crank_series(const Mode &mode, int order);

} // namespace sptforge
