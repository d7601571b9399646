#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metaplectic/abelian.hpp"
#include "metaplectic/forms.hpp"

namespace meta {

// Based reduced root datum on Lambda = Z^rank.  Coroots live in Lambda,
// roots in the dual; the pairing is the standard dot product.  roots[k]
// is the root attached to coroots[k]; simple lists the indices of the
// simple pairs.
struct BasedRootDatum {
    std::size_t rank = 0;
    std::vector<std::vector<Int>> coroots;
    std::vector<std::vector<Int>> roots;
    std::vector<std::size_t> simple;
    std::string name;

    std::size_t simple_rank() const { return simple.size(); }
    Int pairing(std::size_t root_ix, const std::vector<Int>& lambda) const;
    // s_alpha(lambda) = lambda - <root_k, lambda> coroot_k as a matrix on Lambda.
    IntMatrix reflection(std::size_t k) const;
    // Cartan numbers A(i,j) = <root of simple j, coroot of simple i>.
    IntMatrix cartan_matrix() const;
};

// Empty list means valid.
std::vector<std::string> validate(const BasedRootDatum& rd);

// Catalog names: SL<n>, GL<n>, PGL<n>, Sp<2n>, SO<n>, Spin<n>; Cartan
// types A1..A9, B2.., C2.., D3.., E6..E8, F4, G2 (simply connected),
// with suffix "ad" for the adjoint form; products joined with "x".
// Bases are documented in README.md.
BasedRootDatum catalog(const std::string& name);

struct WeylGroup {
    std::vector<IntMatrix> elements;   // acting on Lambda
    std::vector<int> lengths;          // aligned with elements
    std::vector<std::size_t> simple_index;  // element index of each simple reflection
    // length-2 stratum: element index with all factorizations (i, j)
    // meaning s_i s_j over simple pair indices
    struct Length2 {
        std::size_t element;
        std::vector<std::pair<std::size_t, std::size_t>> factorizations;
    };
    std::vector<Length2> length2;
    bool capped = false;  // only the length <= 2 strata are complete

    std::size_t size() const { return elements.size(); }
    // Bruhat order restricted to lengths <= 2.
    bool bruhat_leq(std::size_t u, std::size_t w) const;
};

WeylGroup weyl_group(const BasedRootDatum& rd, std::size_t cap = 10000);

struct Companions {
    BasedRootDatum sc;   // on the coroot lattice
    BasedRootDatum ad;   // on the coweight lattice of the derived group
    FgAbelianGroup pi1;  // Lambda / Lambda_sc
    IntMatrix pi1_presentation;  // coker of this matrix is pi1
    IntMatrix incl_sc;   // Lambda_sc -> Lambda, columns = lattice basis
    IntMatrix to_ad;     // Lambda -> Lambda_ad, rows = simple roots
};

Companions companions(const BasedRootDatum& rd);

// Pullback Q(w . ) of a quadratic form along an integer matrix.
QuadForm quad_pullback(const QuadForm& q, const IntMatrix& w);

// b(alpha, lambda) = <root, lambda> Q(alpha) for every simple pair and
// lattice basis vector lambda, cross-checked over all of Phi.
bool is_strict(const BasedRootDatum& rd, const QuadForm& q);

struct StrictForms {
    FgAbelianGroup group;
    std::vector<QuadForm> generators;    // images of a lattice basis of solutions
    bool sc_lemma_checked = false;       // only for simply connected data
    bool sc_lemma_ok = false;            // Z/N per simple factor, and
                                         // W-invariant integral forms mod N
                                         // give exactly the strict group
    std::size_t simple_factors = 0;
};

StrictForms enumerate_strict(const BasedRootDatum& rd, const Int& N);

}  // namespace meta
