#pragma once

#include <string>
#include <vector>

#include "metaplectic/root_data.hpp"

namespace meta {

// Degree <= 4 cohomology of the classifying space with mod-N coefficients
// in the weight-two Tate twist, together with the restriction sequence
// 0 -> H^2(BG) -> H^2(BT) -> H^2(BT_sc) -> H^3(BG) -> 0.
struct BgCohomologyReport {
    FgAbelianGroup h1, h2, h3, h4;
    std::vector<QuadForm> h4_generators;
    // witness of the four-term sequence: kernel and cokernel of the
    // restriction Hom(Lambda, Z/N) -> Hom(Lambda_sc, Z/N)
    IntMatrix restriction;
    FgAbelianGroup restriction_kernel, restriction_cokernel;
    bool sequence_ok = false;
};

BgCohomologyReport bg_cohomology(const BasedRootDatum& rd, const Int& N);

// Kernel of the Schubert-calculus functionals on quadratic forms mod N:
// for each length-two Weyl element w = s1 s2 the degree-two coefficient
// Q -> b(a2, a1) - <a2_root, a1> Q(a2), and for each simple pair against
// each fundamental-group direction Q -> b(lift, a) - <a_root, lift> Q(a).
struct OracleStrict {
    FgAbelianGroup group;
    IntMatrix solutions;  // lattice of coefficient vectors, contains N Z^s
    std::size_t functional_count = 0;
};

OracleStrict chevalley_strictness_oracle(const BasedRootDatum& rd, const Int& N);

// The oracle kernel coincides with enumerate_strict: same invariants and
// every oracle generator is strict.
bool oracle_matches_strict(const BasedRootDatum& rd, const Int& N);

struct CoverHomotopy {
    FgAbelianGroup pi0, pi1, pi2;
    // second route through the restriction sequence
    FgAbelianGroup pi1_fiber, pi2_fiber;
    bool agree = false;
};

CoverHomotopy cover_homotopy(const BasedRootDatum& rd, const Int& N);

// Pairings attached to a strict form: -polarize(Q) on Lambda, and the
// biadditive extension of (a, l) -> -<a_root, l> Q(a) on
// Lambda_sc x Lambda_ad, compatible through Lambda -> Lambda_ad.
struct EquivariancePairings {
    BilinearFormModN int_mu;
    IntMatrix int_mu_sc;  // rows: simple coroots, cols: coweight basis
    bool compatible = false;
};

EquivariancePairings equivariance_pairings(const BasedRootDatum& rd, const QuadForm& q);

}  // namespace meta
