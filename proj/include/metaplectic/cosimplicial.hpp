#pragma once

#include <string>
#include <vector>

#include "metaplectic/abelian.hpp"

namespace meta {

// Quadratic-range functors of a free module L of finite rank.
//   Id       L
//   Tensor2  L (x) L
//   Gamma2   symmetric tensors in L (x) L
//   Wedge2   exterior square
//   Sym2     symmetric quotient of L (x) L
//   Ant2     cokernel of the symmetrization map on L (x) L
//   Hcheck1  quadratic-plus-linear integer functions on the dual of L
enum class FunctorTag { Id, Tensor2, Gamma2, Wedge2, Sym2, Ant2, Hcheck1 };

std::string functor_name(FunctorTag tag);

// Rank of F(Z^m) for the free-valued functors (all but Ant2).
std::size_t functor_rank(FunctorTag tag, std::size_t m);

// Matrix of F(phi) for phi : Z^m -> Z^p given as a p x m matrix.
// Not available for Ant2 (its values are not free); Ant2 is handled
// through its symmetrization presentation.
IntMatrix functor_map(FunctorTag tag, const IntMatrix& phi);

// Symmetrization x(x)y -> x(x)y + y(x)x on Z^m (x) Z^m, and the inclusion
// of the exterior square as antisymmetric tensors (its kernel).
IntMatrix symmetrization_map(std::size_t m);
IntMatrix wedge_to_tensor_map(std::size_t m);

// Coface L^{+k} -> L^{+(k+1)} and codegeneracy L^{+k} -> L^{+(k-1)} of the
// cosimplicial system [n] |-> L^{+n}, L = Z^r, in block coordinates.
IntMatrix coface_map(std::size_t r, std::size_t k, std::size_t i);
IntMatrix codegeneracy_map(std::size_t r, std::size_t k, std::size_t j);

// Normalized cochain complex of [n] |-> F(L^{+n}) in degrees [0, top]:
// degree k carries the joint kernel of the codegeneracies inside F(L^{+k}),
// with the alternating sum of cofaces as differential.  Free-valued
// functors only.
ChainComplex normalized_cosimplicial_complex(FunctorTag tag, std::size_t r, int top);

struct CosimplicialDegreeReport {
    int degree;
    FgAbelianGroup computed;
    FgAbelianGroup expected;
    bool ok;
};

struct CosimplicialReport {
    FunctorTag tag;
    std::size_t rank;
    int max_degree;
    std::vector<CosimplicialDegreeReport> degrees;
    bool ok;
    std::string to_string() const;
};

// Computes the totalization of [n] |-> F(Z^{r (+) n}) degree by degree and
// compares with the closed-form answer.  Requires r >= 1, max_degree >= 3.
CosimplicialReport cosimplicial_limit_check(std::size_t r, FunctorTag tag, int max_degree);

// Closed-form homology of the totalization in the given degree.
FgAbelianGroup cosimplicial_expected(FunctorTag tag, std::size_t r, int degree);

}  // namespace meta
