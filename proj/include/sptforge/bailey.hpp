#pragma once

#include <sptforge/factors.hpp>
#include <sptforge/report.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sptforge {

// All pairs are expressed in a variable X with q^base = X^2, so a pair
// relative to (a, q^base) becomes a pair relative to (X^{2h}, X^2). For the
// catalog pairs a = 1 (h = 0); the generic pairs take any h >= 0. Half-integer
// powers of q and sqrt(a) in the lemma variants are integral in X.
struct BaileyPair {
    std::string name;
    int base = 1;
    int h = 0;
    std::function<MonomialSum(int)> alpha;
    // beta_n as a product term; the q shift may be negative.
    std::function<ProductTerm(int n, int order)> beta;

    std::string a_spec() const;
};

// B2 F3 G4 AG4 J1 J2 J3 F1 Gstar Gstarstar GenericStar GenericStarStar
const std::vector<std::string> &bailey_pair_names();
// Throws std::invalid_argument for unknown names, and for h != 0 on a
// catalog pair.
BaileyPair bailey_pair(const std::string &name, int h = 0);
bool is_generic_pair(const std::string &name);

// beta_n = sum_k alpha_k / ((X^2;X^2)_{n-k} (X^{2h+2};X^2)_{n+k}) for n <= n_max,
// both sides multiplied by the power of X that clears negative exponents.
VerificationReport check_pair_relation(const BaileyPair &pair, int n_max, int order);

// Limiting Bailey lemma with rho given in X units; an empty rho is the limit
// rho -> infinity. Computed in the two-variable ring.
VerificationReport check_limiting_lemma(const BaileyPair &pair, std::optional<MonomialSpec> rho1,
                                        std::optional<MonomialSpec> rho2, int order);

// Lemma variants 1..7 for the pair at its h. Variants 3 and 4 use the
// two-variable ring; 5 and 6 are integer identities and are also compared
// with 3 and 4 at z = zeta_3. Throws std::invalid_argument when h is not
// admissible for the variant.
VerificationReport check_lemma_variant(int k, const BaileyPair &pair, int order);
bool lemma_admissible(int k, int h);
// Rescale parameters h checked for each variant.
const std::vector<int> &lemma_rescale_set(int k);

// gamma_n = sum_{j>=n} delta_j / ((q;q)_{j-n} (aq;q)_{j+n}) for the
// conjugate pair with parameter z (in X units) and sqrt(a) = X^h, n <= n_max.
// For h >= 2 the z = omega forms are also compared over Z[zeta_3].
VerificationReport check_conjugate_pair(const MonomialSpec &z, int h, int n_max, int order);

} // namespace sptforge
