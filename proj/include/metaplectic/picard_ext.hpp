#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metaplectic/forms.hpp"

namespace meta {

// Two-term complex in degrees [-1, 0] read as a strictly commutative
// Picard groupoid: objects the degree-0 group, automorphisms of 0 the
// kernel of d.
struct PicardGroupoid {
    ChainComplex presentation;

    FgAbelianGroup pi0() const { return presentation.homology(0); }
    FgAbelianGroup pi1() const { return presentation.homology(-1); }
};

PicardGroupoid dictionary(const ChainComplex& c);           // throws outside [-1,0]
ChainComplex dictionary_inverse(const PicardGroupoid& p);   // round trip on presentations

// Symmetrized Heisenberg extension of the lattice by Sym^2: cocycle
// (l1, l2) -> l1 l2.  The dual description by quadratic functions
// restricts to Sym^2 through dual_sign times the natural inclusion.
struct Heisenberg1 {
    std::size_t rank = 0;
    int dual_sign = -1;

    std::size_t sym2_rank() const { return rank * (rank + 1) / 2; }
    // packed Sym^2 coordinates of the product l1 l2
    std::vector<Int> cocycle(const std::vector<Int>& l1, const std::vector<Int>& l2) const;
};

Heisenberg1 heisenberg1(const Lattice& l);

// Central extension of a free or finite base by Z/N with a biadditive
// cocycle given on generators.
struct ExtCocycle {
    bool free_base = true;
    std::size_t rank = 0;        // generator count
    std::vector<Int> orders;     // finite base only, aligned with rank
    Int N = 1;
    IntMatrix sigma;             // sigma(g_i, g_j)

    IntMatrix commutator() const;  // sigma - sigma^T mod N
    Int sigma_at(const std::vector<Int>& x, const std::vector<Int>& y) const;
};

ExtCocycle extension_from_bilinear(std::size_t rank, const Int& N, const IntMatrix& beta);
ExtCocycle extension_from_bilinear(const FiniteGroup& base, const Int& N, const IntMatrix& beta);
ExtCocycle baer_sum(const ExtCocycle& a, const ExtCocycle& b);

// For two cocycles with equal commutator, a quadratic function whose
// polarization is their difference: packed binomial-basis coefficients
// (C(x_i,2) on the diagonal) followed by the linear part.  Always exists
// over a free base; over a finite base only when the value group is big
// enough.
std::optional<std::vector<Int>> coboundary_witness(const ExtCocycle& a, const ExtCocycle& b);
Int coboundary_eval(const std::vector<Int>& coeffs, std::size_t rank, const Int& N,
                    const std::vector<Int>& x);

// Symmetric monoidal extension data of a finite group by Z/N: normalized
// associator and braiding value tables indexed by FiniteGroup element
// indices.
struct SymMonExt {
    FiniteGroup gamma;
    Int N = 1;
    std::vector<Int> associator;  // size^3, index (x * s + y) * s + z
    std::vector<Int> braiding;    // size^2, index x * s + y

    Int a(std::size_t x, std::size_t y, std::size_t z) const;
    Int b(std::size_t x, std::size_t y) const;
    void set_a(std::size_t x, std::size_t y, std::size_t z, const Int& v);
    void set_b(std::size_t x, std::size_t y, const Int& v);
    static SymMonExt trivial(const FiniteGroup& gamma, const Int& N);
};

struct CoherenceReport {
    bool ok = true;
    std::vector<std::string> failures;  // each names the axiom and the tuple
};

// Pentagon, both hexagons, normalization, and the inverse axiom; the
// braided variant skips the inverse axiom.
CoherenceReport check_coherence(const SymMonExt& s, bool braided_only = false);

// Braiding is epsilon = N/2 exactly when both arguments have f = epsilon;
// f must be a homomorphism killing doubles with values in {0, epsilon}.
SymMonExt build_symmon_from_hom(const FiniteGroup& gamma, const std::vector<Int>& f, const Int& N);

// inv(a) = braiding(a, a); checked to be a homomorphism killing doubles.
std::vector<Int> inv(const SymMonExt& s);

SymMonExt baer_sum(const SymMonExt& a, const SymMonExt& b);

// Pullback along the group map sending generator j of source to the
// column j of P in the target's generator coordinates.
SymMonExt pullback_symmon(const SymMonExt& s, const FiniteGroup& source, const IntMatrix& P);

// Twisted group algebra on basis {x_a}: x_a x_b = zeta^{sigma(a,b)} x_{a+b}
// with exponents mod N.
struct GradedTwistedAlgebra {
    FiniteGroup gamma;
    Int N = 1;
    std::vector<Int> exponents;  // size^2, exponent of the product x_a x_b

    Int exponent(std::size_t a, std::size_t b) const;
    bool associative() const;
    // exponent difference in x_a x_b = zeta^t x_b x_a
    Int commutation(std::size_t a, std::size_t b) const;
};

// sigma need not be biadditive here; associativity then detects it.
GradedTwistedAlgebra twist_graded_algebra(const FiniteGroup& gamma, const Int& N,
                                          const std::vector<Int>& sigma_table);
GradedTwistedAlgebra twist_graded_algebra(const ExtCocycle& e);

}  // namespace meta
