#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metaplectic/abelian.hpp"
#include "metaplectic/cosimplicial.hpp"

namespace meta {

struct Lattice {
    std::size_t rank = 0;
    std::string name;
};

// Quadratic form mod N on Z^rank, stored as upper-triangular coefficients
// q_ij for i <= j.  The diagonal keeps its mod-N value: a symmetric matrix
// would lose q_ii mod 2, so forms are never stored that way.
class QuadForm {
public:
    QuadForm() = default;
    QuadForm(std::size_t rank, Int N);

    std::size_t rank() const { return rank_; }
    const Int& modulus() const { return N_; }

    void set(std::size_t i, std::size_t j, const Int& v);
    const Int& coeff(std::size_t i, std::size_t j) const;  // requires i <= j

    // Value at an integer vector, reduced mod N.
    Int eval(const std::vector<Int>& lambda) const;
    // Value of the canonical integer lift (coefficients in [0, N)).
    Int eval_lift(const std::vector<Int>& lambda) const;

    bool operator==(const QuadForm& o) const;
    bool is_zero() const;

    std::string to_string() const;
    std::string to_json() const;
    static QuadForm from_json(const std::string& text);

private:
    std::size_t rank_ = 0;
    Int N_ = 1;
    std::vector<Int> coeffs_;  // packed i <= j, row-major
    std::size_t index(std::size_t i, std::size_t j) const;
};

// Symmetric bilinear form mod N as a full matrix of residues.
struct BilinearFormModN {
    std::size_t rank = 0;
    Int N = 1;
    IntMatrix mat;

    Int eval(const std::vector<Int>& x, const std::vector<Int>& y) const;
    bool is_symmetric() const;
    bool is_zero() const { return mat.is_zero(); }
};

// b(e_i, e_j) = q_ij for i < j and b(e_i, e_i) = 2 q_ii.
BilinearFormModN polarize(const QuadForm& q);

// The square-functor package on Z^rank: connecting maps of the canonical
// diagram of short exact sequences, with exactness verified.
struct SquareFunctorReport {
    std::size_t rank;
    std::size_t sym2_rank, gamma2_rank, wedge2_rank, tensor_rank;

    IntMatrix sym2_to_gamma2;     // polarization
    IntMatrix sym2_to_tensor;     // symmetric even-diagonal lift
    IntMatrix gamma2_to_tensor;   // inclusion of symmetric tensors
    IntMatrix tensor_to_sym2;     // projection
    IntMatrix tensor_to_wedge2;   // antisymmetrization
    IntMatrix wedge2_to_tensor;   // inclusion of antisymmetric tensors
    IntMatrix gamma2_to_mod2;     // diagonal mod 2, target (Z/2)^rank
    // Ant2 is modeled as Z^{wedge2_rank} (+) (Z/2)^rank: the alternating
    // form together with the diagonal-mod-2 function.
    IntMatrix tensor_to_ant2_free;
    IntMatrix tensor_to_ant2_tor;

    bool ok = false;
    std::vector<std::string> failures;
};

SquareFunctorReport functor_apply(std::size_t rank);

// Homology of the four-term truncation of the exchange-coinvariants
// complex [... -> T -> T -> T] on Z^rank, untwisted (ending with the
// antisymmetrizer) or sign-twisted (ending with the symmetrizer).
struct Sigma2HomologyReport {
    std::size_t rank;
    bool twisted;
    FgAbelianGroup h0, hm1, hm2;
    FgAbelianGroup expected_h0, expected_hm1, expected_hm2;
    bool ok;
};

Sigma2HomologyReport sigma2_homology(std::size_t rank, bool twisted);

// --- finite quadratic functions -------------------------------------------

// Element bookkeeping for a finite abelian group given by cyclic orders.
struct FiniteGroup {
    std::vector<Int> orders;  // each >= 1

    std::size_t size() const;
    std::vector<std::vector<Int>> elements() const;
    std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
    std::vector<Int> scale(const Int& k, const std::vector<Int>& a) const;
    std::vector<Int> zero() const { return std::vector<Int>(orders.size(), 0); }
    std::size_t element_index(const std::vector<Int>& a) const;
};

// Function Q : Gamma -> Z/M with Q(0) = 0, stored as a full value table.
struct FiniteQuadFunction {
    FiniteGroup group;
    Int M = 1;
    std::vector<Int> values;  // indexed by FiniteGroup::element_index

    Int eval(const std::vector<Int>& a) const;
    // Q(a+b) - Q(a) - Q(b) mod M
    Int polarization(const std::vector<Int>& a, const std::vector<Int>& b) const;
    bool is_quadratic_refinement_of(const IntMatrix& b_gen) const;
};

struct RefinementResult {
    std::vector<FiniteQuadFunction> refinements;
    // index of a ->  b_half(a, a) when the pairing was given as 2 b'
    std::optional<std::size_t> canonical_index;
    bool value_group_too_small = false;
    std::string error;
};

// All quadratic refinements Q of the symmetric pairing b : Gamma x Gamma
// -> Z/M given by its values b_gen on generator pairs.  When b_half is
// supplied (so b = 2 b_half), the canonical refinement a -> b_half(a, a)
// is flagged.  The refinement set is a torsor under Hom(Gamma, Z/M)
// whenever nonempty.
RefinementResult quadratic_refinements(const FiniteGroup& gamma, const IntMatrix& b_gen,
                                       const Int& M,
                                       const IntMatrix* b_half = nullptr);

// Q(N a) = N Q(a) + C(N,2) b(a,a) mod M for all a: the finite binomial
// theorem for quadratic functions, written additively.
bool binomial_identity_check(const FiniteQuadFunction& q, const Int& N);

// --- theta skeleta --------------------------------------------------------

struct ThetaSkeleton {
    int level;             // 1 or 2
    std::size_t rank;
    Int N;
    FgAbelianGroup pi0, pi1, pi2;
};

struct ThetaSkeletonReport {
    ThetaSkeleton cone_route;      // homotopy pushout as an explicit mapping cone
    ThetaSkeleton triangle_route;  // assembled from the defining triangle
    bool agree;
};

// Both computations of the level-1 or level-2 skeleton over a separably
// closed point (the root-of-(-1) torsor is trivialized; its 2-torsion
// bookkeeping lives in the antisymmetric-square maps).
ThetaSkeletonReport theta_skeleton(std::size_t rank, const Int& N, int level);

}  // namespace meta
