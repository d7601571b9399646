#include "metaplectic/abelian.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace meta {

FgAbelianGroup::FgAbelianGroup(std::size_t rank, std::vector<Int> divisors)
    : free_rank(rank), invariants(std::move(divisors)) {
    for (std::size_t i = 0; i < invariants.size(); ++i) {
        if (invariants[i] < 2) throw std::invalid_argument("FgAbelianGroup: invariant factors must be >= 2");
        if (i + 1 < invariants.size() && invariants[i + 1] % invariants[i] != 0)
            throw std::invalid_argument("FgAbelianGroup: invariant factors must form a divisor chain");
    }
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(const std::vector<Int>& orders) {
    // Diagonal presentation, canonicalized by Smith reduction.
    IntMatrix d(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 0) throw std::invalid_argument("from_cyclic_orders: negative order");
        d.at(i, i) = orders[i];
    }
    return cokernel_group(d);
}

Int FgAbelianGroup::torsion_order() const {
    Int n = 1;
    for (const Int& d : invariants) n *= d;
    return n;
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup& o) const {
    std::vector<Int> orders = invariants;
    orders.insert(orders.end(), o.invariants.begin(), o.invariants.end());
    FgAbelianGroup g = from_cyclic_orders(orders);
    g.free_rank = free_rank + o.free_rank;
    return g;
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const Int& d : invariants) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FgAbelianGroup cokernel_group(const IntMatrix& M) {
    SmithResult s = smith_normal_form(M);
    FgAbelianGroup g;
    g.free_rank = M.rows() - s.rank;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.D.at(i, i) >= 2) g.invariants.push_back(s.D.at(i, i));
    return g;
}

HomExt hom_ext(const FgAbelianGroup& A, const FgAbelianGroup& B) {
    std::vector<Int> hom_orders, ext_orders;
    // Free part of A contributes Hom(Z, B) = B per copy and no Ext.
    std::size_t hom_rank = A.free_rank * B.free_rank;
    for (std::size_t k = 0; k < A.free_rank; ++k)
        for (const Int& e : B.invariants) hom_orders.push_back(e);
    // Torsion of A: Hom(Z/d, Z^s) = 0, Ext(Z/d, Z^s) = (Z/d)^s,
    // Hom(Z/d, Z/e) = Ext(Z/d, Z/e) = Z/gcd(d, e).
    for (const Int& d : A.invariants) {
        for (std::size_t k = 0; k < B.free_rank; ++k) ext_orders.push_back(d);
        for (const Int& e : B.invariants) {
            Int g = gcd(d, e);
            hom_orders.push_back(g);
            ext_orders.push_back(g);
        }
    }
    HomExt r;
    r.hom = FgAbelianGroup::from_cyclic_orders(hom_orders);
    r.hom.free_rank = hom_rank;
    r.ext = FgAbelianGroup::from_cyclic_orders(ext_orders);
    return r;
}

ChainComplex::ChainComplex(int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials)
    : lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
    if (ranks_.empty()) throw std::invalid_argument("ChainComplex: empty complex");
    if (diffs_.size() + 1 != ranks_.size())
        throw std::invalid_argument("ChainComplex: need one differential per adjacent pair");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].rows() != ranks_[i + 1] || diffs_[i].cols() != ranks_[i])
            throw std::invalid_argument("ChainComplex: differential shape mismatch");
        if (i > 0 && !(diffs_[i] * diffs_[i - 1]).is_zero())
            throw std::invalid_argument("ChainComplex: d o d != 0");
    }
}

std::size_t ChainComplex::rank(int degree) const {
    if (degree < lo_ || degree > hi()) return 0;
    return ranks_[static_cast<std::size_t>(degree - lo_)];
}

IntMatrix ChainComplex::differential(int degree) const {
    if (degree < lo_ || degree >= hi()) return IntMatrix::zero(rank(degree + 1), rank(degree));
    return diffs_[static_cast<std::size_t>(degree - lo_)];
}

FgAbelianGroup ChainComplex::homology(int degree) const {
    const std::size_t cn = rank(degree);
    if (cn == 0) return FgAbelianGroup::trivial();

    IntMatrix out = differential(degree);        // C^n -> C^{n+1}
    IntMatrix in = differential(degree - 1);     // C^{n-1} -> C^n

    SmithResult s = smith_normal_form(out);
    IntMatrix K = kernel_basis(s);               // basis of ker(out), cn x k

    if (K.cols() == 0) return FgAbelianGroup::trivial();
    if (in.cols() == 0) return FgAbelianGroup(K.cols());

    // Express the incoming image in the kernel basis.  Since d o d = 0 the
    // system is solvable, and purity of the kernel keeps it integral.
    IntMatrix rel = solve_exact(K, in);          // k x rank(n-1)
    return cokernel_group(rel);
}

}  // namespace meta
