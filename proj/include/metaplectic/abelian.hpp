#pragma once

#include <map>
#include <string>
#include <vector>

#include "metaplectic/int_matrix.hpp"

namespace meta {

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
struct FgAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> invariants;

    FgAbelianGroup() = default;
    explicit FgAbelianGroup(std::size_t rank, std::vector<Int> divisors = {});

    // Canonical form of a direct sum of cyclic groups; order 0 means Z.
    static FgAbelianGroup from_cyclic_orders(const std::vector<Int>& orders);
    static FgAbelianGroup trivial() { return FgAbelianGroup(); }

    bool operator==(const FgAbelianGroup& o) const {
        return free_rank == o.free_rank && invariants == o.invariants;
    }
    bool operator!=(const FgAbelianGroup& o) const { return !(*this == o); }

    bool is_trivial() const { return free_rank == 0 && invariants.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int torsion_order() const;

    FgAbelianGroup direct_sum(const FgAbelianGroup& o) const;

    std::string to_string() const;
};

// Cokernel of M viewed as a map Z^cols -> Z^rows.
FgAbelianGroup cokernel_group(const IntMatrix& M);

// Hom(A,B) and Ext^1(A,B) in invariant-factor form.
struct HomExt {
    FgAbelianGroup hom;
    FgAbelianGroup ext;
};
HomExt hom_ext(const FgAbelianGroup& A, const FgAbelianGroup& B);

// Bounded complex of free Z-modules with increasing differentials
// d^n : C^n -> C^{n+1}.  Construction checks d o d = 0.
class ChainComplex {
public:
    ChainComplex(int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int degree) const;
    // d^n, a rank(n+1) x rank(n) matrix; zero outside the support.
    IntMatrix differential(int degree) const;

    FgAbelianGroup homology(int degree) const;

private:
    int lo_;
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> diffs_;  // diffs_[i] maps degree lo_+i to lo_+i+1
};

}  // namespace meta
