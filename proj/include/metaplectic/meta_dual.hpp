#pragma once

#include <string>
#include <vector>

#include "metaplectic/picard_ext.hpp"
#include "metaplectic/root_data.hpp"

namespace meta {

// The kernel sublattice of the polarization together with the stretched
// coroots ord(Q(alpha)) * alpha.
struct SharpData {
    Int N = 1;
    IntMatrix sharp_basis;                        // columns span Lambda# inside Lambda
    std::vector<std::vector<Int>> sharp_coroots;  // aligned with rd.coroots, Lambda coords
    std::vector<Int> multipliers;                 // additive order of Q(coroot) in Z/N
    std::vector<std::size_t> simple;              // indices of the simple pairs
};

// Requires Q strict; verifies each stretched coroot lies in Lambda# and
// that ord(Q(alpha))^{-1} alpha-check is integral on Lambda#.
SharpData sharp_data(const BasedRootDatum& rd, const QuadForm& q);

// The datum on Lambda# and its dual, both pinned by the inherited simple
// system; zh is Lambda# modulo the span of the stretched coroots.
struct DualPair {
    BasedRootDatum g_sharp;  // written in the sharp basis
    BasedRootDatum h;        // g_sharp with roots and coroots swapped
    std::string coefficient_ring{"E"};
    FgAbelianGroup zh;
};

DualPair dual_root_datum(const BasedRootDatum& rd, const QuadForm& q);

// Quadratic-invariant table of the descended symmetric monoidal data on
// zh.  Free generators are folded to order 2: the values are 2-torsion,
// so the table factors through that quotient.
struct EpsilonData {
    FiniteGroup group;                              // zh, frees folded to order 2
    std::vector<std::vector<Int>> generator_lifts;  // Lambda coords per generator
    std::vector<Int> table;                         // value per group element, in {0, N/2}
    bool coherent = false;                          // built data passed coherence
};

EpsilonData epsilon_invariant(const BasedRootDatum& rd, const QuadForm& q);

// Ground truth for rank-1 data by direct integer scans: every lift of
// every class is evaluated, then all coherent biadditive braidings
// realizing the table are enumerated and their invariants compared.
std::vector<Int> epsilon_rank1_oracle(const BasedRootDatum& rd, const QuadForm& q);

// The Z-linear route: when the integral polarization is even on Lambda#
// the |Lambda#|-graded gerbe is strictly commutative, so its invariant
// vanishes.  Equality with the quadratic route is reported, not asserted.
struct WeissmanReport {
    bool applicable = false;          // integral polarization even on Lambda#
    std::vector<Int> epsilon_prime;   // all zero when applicable
    bool agrees = false;
};

WeissmanReport weissman_comparison(const BasedRootDatum& rd, const QuadForm& q);

// Recomputes everything with the simple system moved by w and compares
// after transport; corrupt_transport uses the identity instead of w as a
// negative control.
struct BorelReport {
    bool ok = false;
    std::string witness;
};

BorelReport borel_independence_check(const BasedRootDatum& rd, const QuadForm& q,
                                     const IntMatrix& w, bool corrupt_transport = false);

// Twisted group algebra of zh with exponents from the built braiding.
GradedTwistedAlgebra zh_twisted_algebra(const BasedRootDatum& rd, const QuadForm& q);

}  // namespace meta
