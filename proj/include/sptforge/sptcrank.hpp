#pragma once

#include <sptforge/builders.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sptforge {

// Bailey-pair families with an spt-crank-type function. Gstar and Gstarstar
// only appear through the relabelings S_{G*}(z,-q) = S_{AG4}(z,q) and
// S_{G**}(z,-q) = S_{G4}(z,q).
enum class Family { B2, F3, G4, AG4, J1, J2, J3, Gstar, Gstarstar };

std::string family_name(Family f);
// Throws std::invalid_argument for unknown names.
Family parse_family(const std::string &name);
// B2, F3, G4, AG4, J1, J2, J3
const std::vector<Family> &spt_families();

// S_X(z, q) in the pole-cancelled form
// P_X(q) sum_{n>=1} q^{..} beta_n / ((z Q^n; Q)_inf (z^{-1} Q^n; Q)_inf),
// Q = q or q^2 according to the family.
template <class Ring>
Series<Ring> build_spt_crank(const Ring &ring, Family family, int order);

// Memoised by (family, mode, order); larger cached builds are truncated.
AnySeries build_spt_crank(Family family, const Mode &mode, int order);

// S_X(q) from the one-variable display, built without the two-variable form.
IntSeries spt_display(Family family, int order);

// spt_X(n) for 0 <= n <= n_max, read from the z = 1 build.
std::vector<BigInt> spt_table(Family family, int n_max);

// M_X(k, t, n) for 0 <= k < t, read from the symbolic build.
struct CrankRow {
    int n = 0;
    std::vector<BigInt> classes;
    BigInt spt;
};
std::vector<CrankRow> crank_table(Family family, int t, int n_max);

// M_X(m, n) for all m, read from the symbolic build.
LaurentPolynomial crank_coefficient(Family family, int n);

struct CongruenceFailure {
    int n = 0;
    std::string reason;
    std::string detail;
};

struct CongruenceResult {
    Family family{};
    int p = 0;
    int b = 0;
    int n_max = 0;
    int checked = 0;
    std::optional<CongruenceFailure> failure;
    bool holds() const { return !failure.has_value(); }
};

// spt_X(pn+b) = 0 mod p for pn+b <= n_max, together with the vanishing of
// the q^{pn+b} coefficient of S_X(zeta_p, q) and equality of the classes
// M_X(k, p, pn+b). Reports the first failing argument.
CongruenceResult check_congruence(Family family, int p, int b, int n_max);

// First q^{tn+r} coefficient of S_X(zeta_t, q) below order that is nonzero.
std::optional<int> check_vanishing(Family family, int t, int residue, int order);

struct CongruenceSpec {
    Family family;
    int p;
    int b;
};
// The fifteen congruences.
const std::vector<CongruenceSpec> &known_congruences();

void clear_spt_cache();

} // namespace sptforge
