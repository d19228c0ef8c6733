#include <sptforge/sptcrank.hpp>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace sptforge {

namespace {

// (1 - q^e)
MonomialSpec bq(int e)
{
    return qmono(e);
}
// (1 + q^e)
MonomialSpec bqp(int e)
{
    return qmono(e, -1);
}

// sign * q^shift * prod(num) / prod(den)
struct Step {
    int sign = 1;
    int shift = 0;
    std::vector<MonomialSpec> num;
    std::vector<MonomialSpec> den;
};

struct Shape {
    int base = 1;
    Step first;
    std::function<Step(int)> ratio; // term n+1 over term n
    std::function<long(long)> lead; // q exponent of term n
    std::function<void(ProductTerm &)> prefactor;
};

Shape shape(Family f)
{
    Shape s;
    switch (f) {
    case Family::B2:
        s.base = 1;
        s.first = {1, 2, {}, {bq(1)}};
        s.ratio = [](int n) { return Step{1, 2, {}, {bq(n + 1)}}; };
        s.lead = [](long n) { return 2 * n; };
        s.prefactor = [](ProductTerm &t) { t.eta(1); };
        break;
    case Family::F3:
        s.base = 2;
        s.first = {1, 1, {}, {bq(1), bq(2)}};
        s.ratio = [](int n) { return Step{1, 1, {}, {bq(2 * n + 1), bq(2 * n + 2)}}; };
        s.lead = [](long n) { return n; };
        s.prefactor = [](ProductTerm &t) { t.eta(1); };
        break;
    case Family::G4:
    case Family::AG4: {
        const int extra = f == Family::G4 ? 2 : 0;
        s.base = 2;
        s.first = {-1, 1 + extra, {}, {bq(4), bqp(1)}};
        s.ratio = [extra](int n) { return Step{-1, 2 * n + 1 + extra, {}, {bq(4 * n + 4), bqp(2 * n + 1)}}; };
        s.lead = [extra](long n) { return n * n + extra * n; };
        s.prefactor = [](ProductTerm &t) { t.eta(4).poch(1, 2, 1, -1); };
        break;
    }
    case Family::Gstar:
    case Family::Gstarstar: {
        const int extra = f == Family::Gstarstar ? 2 : 0;
        s.base = 2;
        s.first = {1, 1 + extra, {}, {bq(4), bq(1)}};
        s.ratio = [extra](int n) { return Step{1, 2 * n + 1 + extra, {}, {bq(4 * n + 4), bq(2 * n + 1)}}; };
        s.lead = [extra](long n) { return n * n + extra * n; };
        s.prefactor = [](ProductTerm &t) { t.eta(4).poch(1, 2); };
        break;
    }
    case Family::J1:
        s.base = 1;
        s.first = {1, 1, {}, {bq(1), bq(1)}};
        s.ratio = [](int n) { return Step{1, 1, {bq(3 * n)}, {bq(2 * n), bq(2 * n + 1), bq(n + 1)}}; };
        s.lead = [](long n) { return n; };
        s.prefactor = [](ProductTerm &t) { t.eta(1, 2).eta(3, -1); };
        break;
    case Family::J2:
    case Family::J3: {
        const int e = f == Family::J2 ? 1 : 2;
        s.base = 1;
        s.first = {1, e, {}, {bq(1), bq(2)}};
        s.ratio = [e](int n) { return Step{1, e, {bq(3 * n)}, {bq(2 * n + 1), bq(2 * n + 2), bq(n)}}; };
        s.lead = [e](long n) { return e * n; };
        s.prefactor = [](ProductTerm &t) { t.eta(1, 2).eta(3, -1); };
        break;
    }
    }
    return s;
}

template <class Ring>
void apply_step(Series<Ring> &t, const Step &st)
{
    if (st.shift != 0 || st.sign < 0) {
        Series<Ring> shifted(t.ring(), t.order());
        shifted.add_scaled(t, st.sign, 0, st.shift);
        t = std::move(shifted);
    }
    for (const auto &m : st.num) {
        t.mul_binomial(m.sign, m.z_exp, m.q_exp);
    }
    for (const auto &m : st.den) {
        t.div_binomial(m.sign, m.z_exp, m.q_exp);
    }
}

} // namespace

std::string family_name(Family f)
{
    switch (f) {
    case Family::B2:
        return "B2";
    case Family::F3:
        return "F3";
    case Family::G4:
        return "G4";
    case Family::AG4:
        return "AG4";
    case Family::J1:
        return "J1";
    case Family::J2:
        return "J2";
    case Family::J3:
        return "J3";
    case Family::Gstar:
        return "Gstar";
    case Family::Gstarstar:
        break;
    }
    return "Gstarstar";
}

Family parse_family(const std::string &name)
{
    for (Family f : {Family::B2, Family::F3, Family::G4, Family::AG4, Family::J1, Family::J2, Family::J3,
                     Family::Gstar, Family::Gstarstar}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown family: " + name);
}

const std::vector<Family> &spt_families()
{
    static const std::vector<Family> v{Family::B2, Family::F3, Family::G4, Family::AG4,
                                       Family::J1, Family::J2, Family::J3};
    return v;
}

template <class Ring>
Series<Ring> build_spt_crank(const Ring &ring, Family family, int order)
{
    const Shape sh = shape(family);
    const int Q = sh.base;
    Series<Ring> sum(ring, order);
    if (order <= 1) {
        return sum;
    }
    // term 1 over (zQ, z^{-1}Q; Q)_inf
    Series<Ring> t = Series<Ring>::one(ring, order);
    apply_step(t, sh.first);
    for (int j = 1; Q * j < order; ++j) {
        t.div_binomial(1, 1, Q * j);
        t.div_binomial(1, -1, Q * j);
    }
    for (int n = 1; sh.lead(n) < order; ++n) {
        sum += t;
        if (sh.lead(n + 1) >= order) {
            break;
        }
        // (z Q^n; Q)_inf (z^{-1} Q^n; Q)_inf -> the same from n+1
        t.mul_binomial(1, 1, Q * n);
        t.mul_binomial(1, -1, Q * n);
        apply_step(t, sh.ratio(n));
    }
    ProductTerm pre(order);
    sh.prefactor(pre);
    pre.bag.apply(sum);
    return sum;
}

template IntSeries build_spt_crank(const IntegerRing &, Family, int);
template CycSeries build_spt_crank(const CyclotomicRing &, Family, int);
template LaurentSeries build_spt_crank(const LaurentRing &, Family, int);

namespace {

struct CacheKey {
    Family family;
    ModeKind kind;
    int t;
    auto operator<=>(const CacheKey &) const = default;
};

std::mutex cache_mutex;
std::map<CacheKey, std::shared_ptr<const AnySeries>> cache;

} // namespace

AnySeries build_spt_crank(Family family, const Mode &mode, int order)
{
    checked_order(order);
    const CacheKey key{family, mode.kind, mode.kind == ModeKind::root ? mode.t : 0};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end() && any_order(*it->second) >= order) {
            return std::visit([order](const auto &s) { return AnySeries(s.truncated(order)); }, *it->second);
        }
    }
    auto built = std::make_shared<const AnySeries>(
        with_mode(mode, [&](const auto &ring) { return build_spt_crank(ring, family, order); }));
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto &slot = cache[key];
    if (!slot || any_order(*slot) < order) {
        slot = built;
    }
    return *built;
}

void clear_spt_cache()
{
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.clear();
}

IntSeries spt_display(Family family, int order)
{
    IntSeries sum(IntegerRing{}, order);
    const MonomialSpec q1 = qmono(1), q2 = qmono(2), q3 = qmono(3), q4 = qmono(4);
    for (int n = 1; n < order; ++n) {
        ProductTerm t(order);
        switch (family) {
        case Family::B2:
            if (2 * n >= order) {
                return sum;
            }
            t.times(qmono(2 * n)).times_binomial(qmono(n), -2).times_poch(qmono(n + 1), q1, std::nullopt, -1);
            break;
        case Family::J1:
            t.times(qmono(n))
                .times_binomial(qmono(n), -2)
                .times_poch(qmono(n + 1), q1, n - 1, -1)
                .times_poch(qmono(3 * n), q3, std::nullopt, -1);
            break;
        case Family::J2:
        case Family::J3:
            if ((family == Family::J3 ? 2 : 1) * n >= order) {
                return sum;
            }
            t.times(qmono(family == Family::J3 ? 2 * n : n))
                .times_poch(qmono(n), q1, n + 1, -1)
                .times_poch(qmono(3 * n), q3, std::nullopt, -1);
            break;
        case Family::F3:
            t.times(qmono(n))
                .times_poch(qmono(2 * n + 1), q2, std::nullopt)
                .times_binomial(qmono(2 * n), -2)
                .times_poch(qmono(2 * n + 2), q2, std::nullopt, -1);
            break;
        case Family::G4:
        case Family::AG4: {
            const int e = family == Family::G4 ? n * n + 2 * n : n * n;
            if (e >= order) {
                return sum;
            }
            t.times(qmono(e, n % 2 != 0 ? -1 : 1))
                .times_poch(qmono(2 * n + 1, -1), q2, std::nullopt)
                .times_binomial(qmono(2 * n), -2)
                .times_poch(qmono(2 * n + 2), q2, n + 1, -1)
                .times_poch(qmono(2 * n + 2), q2, std::nullopt, -1)
                .times_poch(qmono(4 * n + 6), q4, std::nullopt, -1);
            break;
        }
        case Family::Gstar:
        case Family::Gstarstar:
            throw std::invalid_argument("no one-variable display for " + family_name(family));
        }
        sum += t.evaluate(IntegerRing{});
    }
    return sum;
}

std::vector<BigInt> spt_table(Family family, int n_max)
{
    if (n_max < 0) {
        throw std::invalid_argument("n_max must be nonnegative");
    }
    auto s = std::get<IntSeries>(build_spt_crank(family, Mode::one(), n_max + 1));
    return s.coeffs();
}

LaurentPolynomial crank_coefficient(Family family, int n)
{
    auto s = std::get<LaurentSeries>(build_spt_crank(family, Mode::symbolic(), n + 1));
    return s[n];
}

std::vector<CrankRow> crank_table(Family family, int t, int n_max)
{
    if (t <= 0) {
        throw std::invalid_argument("class modulus must be positive");
    }
    auto s = std::get<LaurentSeries>(build_spt_crank(family, Mode::symbolic(), n_max + 1));
    std::vector<CrankRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        CrankRow row;
        row.n = n;
        row.classes.assign(static_cast<std::size_t>(t), BigInt());
        for (const auto &term : s[n].terms()) {
            int k = term.exp % t;
            if (k < 0) {
                k += t;
            }
            row.classes[static_cast<std::size_t>(k)] += term.coeff;
            row.spt += term.coeff;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CongruenceResult check_congruence(Family family, int p, int b, int n_max)
{
    if (!is_prime(p)) {
        throw std::invalid_argument("congruence modulus must be prime");
    }
    if (b < 0 || b >= p) {
        throw std::invalid_argument("residue must lie in [0, p)");
    }
    CongruenceResult res{family, p, b, n_max, 0, std::nullopt};
    const int order = n_max + 1;
    auto spt = std::get<IntSeries>(build_spt_crank(family, Mode::one(), order));
    auto cyc = std::get<CycSeries>(build_spt_crank(family, Mode::root(p), order));
    auto rows = crank_table(family, p, n_max);
    for (int n = b; n <= n_max; n += p) {
        ++res.checked;
        if (spt[n].mod(p) != 0) {
            res.failure = CongruenceFailure{n, "divisibility", "spt = " + spt[n].to_string()};
            return res;
        }
        if (!cyc[n].is_zero()) {
            res.failure = CongruenceFailure{n, "cyclotomic", "coefficient = " + cyc[n].render()};
            return res;
        }
        const auto &cl = rows[static_cast<std::size_t>(n)].classes;
        for (int k = 1; k < p; ++k) {
            if (!(cl[static_cast<std::size_t>(k)] == cl[0])) {
                std::string d;
                for (int j = 0; j < p; ++j) {
                    d += (j ? "," : "") + cl[static_cast<std::size_t>(j)].to_string();
                }
                res.failure = CongruenceFailure{n, "classes", "M(k," + std::to_string(p) + ") = [" + d + "]"};
                return res;
            }
        }
    }
    return res;
}

std::optional<int> check_vanishing(Family family, int t, int residue, int order)
{
    auto cyc = std::get<CycSeries>(build_spt_crank(family, Mode::root(t), order));
    for (int n = residue; n < order; n += t) {
        if (!cyc[n].is_zero()) {
            return n;
        }
    }
    return std::nullopt;
}

const std::vector<CongruenceSpec> &known_congruences()
{
    static const std::vector<CongruenceSpec> v{
        {Family::F3, 3, 0},  {Family::J1, 3, 2},  {Family::J2, 3, 0},  {Family::J3, 3, 1},
        {Family::B2, 5, 1},  {Family::B2, 5, 4},  {Family::F3, 5, 0},  {Family::F3, 5, 4},
        {Family::G4, 5, 4},  {Family::AG4, 5, 4}, {Family::B2, 7, 1},  {Family::B2, 7, 5},
        {Family::F3, 7, 0},  {Family::F3, 7, 4},  {Family::F3, 7, 6},
    };
    return v;
}

} // namespace sptforge
