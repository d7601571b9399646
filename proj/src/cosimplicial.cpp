#include "metaplectic/cosimplicial.hpp"

#include <sstream>
#include <stdexcept>

namespace meta {

namespace {

// Ordered pair lists fixing the bases of the square functors.
std::vector<std::pair<std::size_t, std::size_t>> pairs_leq(std::size_t m) {
    std::vector<std::pair<std::size_t, std::size_t>> v;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) v.emplace_back(i, j);
    return v;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_lt(std::size_t m) {
    std::vector<std::pair<std::size_t, std::size_t>> v;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) v.emplace_back(i, j);
    return v;
}

// Symmetric matrix S_{kl} built from the image of a degree-2 basis tensor.
IntMatrix sym2_map(const IntMatrix& phi) {
    const std::size_t p = phi.rows(), m = phi.cols();
    auto src = pairs_leq(m);
    auto dst = pairs_leq(p);
    IntMatrix f(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        auto [i, j] = src[c];
        for (std::size_t r = 0; r < dst.size(); ++r) {
            auto [k, l] = dst[r];
            if (k == l)
                f.at(r, c) = phi.at(k, i) * phi.at(k, j);
            else
                f.at(r, c) = phi.at(k, i) * phi.at(l, j) + phi.at(l, i) * phi.at(k, j);
        }
    }
    return f;
}

IntMatrix wedge2_map(const IntMatrix& phi) {
    const std::size_t p = phi.rows(), m = phi.cols();
    auto src = pairs_lt(m);
    auto dst = pairs_lt(p);
    IntMatrix f(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        auto [i, j] = src[c];
        for (std::size_t r = 0; r < dst.size(); ++r) {
            auto [k, l] = dst[r];
            f.at(r, c) = phi.at(k, i) * phi.at(l, j) - phi.at(l, i) * phi.at(k, j);
        }
    }
    return f;
}

// Gamma2 basis: e_i (x) e_i, and e_i (x) e_j + e_j (x) e_i for i < j,
// ordered by pairs_leq.
IntMatrix gamma2_map(const IntMatrix& phi) {
    const std::size_t p = phi.rows(), m = phi.cols();
    auto src = pairs_leq(m);
    auto dst = pairs_leq(p);
    IntMatrix f(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        auto [i, j] = src[c];
        // Image as a symmetric p x p tensor.
        IntMatrix t(p, p);
        for (std::size_t k = 0; k < p; ++k)
            for (std::size_t l = 0; l < p; ++l) {
                t.at(k, l) = phi.at(k, i) * phi.at(l, j);
                if (i != j) t.at(k, l) += phi.at(k, j) * phi.at(l, i);
            }
        for (std::size_t r = 0; r < dst.size(); ++r) {
            auto [k, l] = dst[r];
            f.at(r, c) = t.at(k, l);  // diagonal basis vectors carry the diagonal entry
        }
    }
    return f;
}

// Integer-valued quadratic functions on the dual of L, i.e. functions with
// Q(0) = 0 whose polarization is a symmetric bilinear form.  Basis:
// binomials C(u_i, 2), cross monomials u_i u_j (i < j), then linear u_i,
// ordered by pairs_leq followed by the linear slots.  A function is stored
// by its polarization matrix b together with its values q_i on the basis,
// which keeps pullback exact even though the diagonal coefficients are
// half-integral as polynomials.
IntMatrix hcheck1_map(const IntMatrix& phi) {
    const std::size_t p = phi.rows(), m = phi.cols();
    auto src_q = pairs_leq(m);
    auto dst_q = pairs_leq(p);
    const std::size_t sq = src_q.size(), dq = dst_q.size();
    IntMatrix f(dq + p, sq + m);
    IntMatrix w = phi.transpose();  // the dual map on lattice points

    auto eval = [&](const IntMatrix& b, const std::vector<Int>& q, const std::vector<Int>& lam) {
        Int v = 0;
        for (std::size_t i = 0; i < lam.size(); ++i) {
            v += q[i] * lam[i];
            v += b.at(i, i) * (lam[i] * (lam[i] - 1) / 2);
            for (std::size_t j = i + 1; j < lam.size(); ++j) v += b.at(i, j) * lam[i] * lam[j];
        }
        return v;
    };
    auto emit = [&](std::size_t col, const IntMatrix& b, const std::vector<Int>& q) {
        // pull back along w: polarization phi b phi^T, values at images of
        // the target basis vectors
        IntMatrix bp = phi * b * w;
        for (std::size_t r = 0; r < dq; ++r) {
            auto [a, bb] = dst_q[r];
            f.at(r, col) = bp.at(a, bb);
        }
        for (std::size_t a = 0; a < p; ++a)
            f.at(dq + a, col) = eval(b, q, phi.row(a));
    };

    std::vector<Int> zq(m, 0);
    for (std::size_t c = 0; c < sq; ++c) {
        auto [i, j] = src_q[c];
        IntMatrix b(m, m);
        b.at(i, j) = 1;
        if (i != j) b.at(j, i) = 1;
        emit(c, b, zq);
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<Int> q(m, 0);
        q[c] = 1;
        emit(sq + c, IntMatrix::zero(m, m), q);
    }
    return f;
}

}  // namespace

std::string functor_name(FunctorTag tag) {
    switch (tag) {
        case FunctorTag::Id: return "Id";
        case FunctorTag::Tensor2: return "Tensor2";
        case FunctorTag::Gamma2: return "Gamma2";
        case FunctorTag::Wedge2: return "Wedge2";
        case FunctorTag::Sym2: return "Sym2";
        case FunctorTag::Ant2: return "Ant2";
        case FunctorTag::Hcheck1: return "Hcheck1";
    }
    return "?";
}

std::size_t functor_rank(FunctorTag tag, std::size_t m) {
    switch (tag) {
        case FunctorTag::Id: return m;
        case FunctorTag::Tensor2: return m * m;
        case FunctorTag::Gamma2: return m * (m + 1) / 2;
        case FunctorTag::Wedge2: return m * (m - 1) / 2;
        case FunctorTag::Sym2: return m * (m + 1) / 2;
        case FunctorTag::Hcheck1: return m * (m + 1) / 2 + m;
        case FunctorTag::Ant2:
            throw std::invalid_argument("functor_rank: Ant2 values are not free");
    }
    return 0;
}

IntMatrix functor_map(FunctorTag tag, const IntMatrix& phi) {
    switch (tag) {
        case FunctorTag::Id: return phi;
        case FunctorTag::Tensor2: return kronecker(phi, phi);
        case FunctorTag::Gamma2: return gamma2_map(phi);
        case FunctorTag::Wedge2: return wedge2_map(phi);
        case FunctorTag::Sym2: return sym2_map(phi);
        case FunctorTag::Hcheck1: return hcheck1_map(phi);
        case FunctorTag::Ant2:
            throw std::invalid_argument("functor_map: Ant2 values are not free");
    }
    return IntMatrix();
}

IntMatrix symmetrization_map(std::size_t m) {
    IntMatrix s(m * m, m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            s.at(i * m + j, i * m + j) += 1;
            s.at(j * m + i, i * m + j) += 1;
        }
    return s;
}

IntMatrix wedge_to_tensor_map(std::size_t m) {
    auto src = pairs_lt(m);
    IntMatrix f(m * m, src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        auto [i, j] = src[c];
        f.at(i * m + j, c) = 1;
        f.at(j * m + i, c) = -1;
    }
    return f;
}

IntMatrix coface_map(std::size_t r, std::size_t k, std::size_t i) {
    if (i > k + 1) throw std::invalid_argument("coface_map: index out of range");
    IntMatrix d(r * (k + 1), r * k);
    // 1-based blocks: d_0 prepends a zero block, d_{k+1} appends one, and
    // d_i for 1 <= i <= k sends block i to slots i and i+1 (duplication)
    // while later blocks shift up.
    for (std::size_t b = 1; b <= k; ++b) {
        std::vector<std::size_t> slots;
        if (i == 0)
            slots = {b + 1};
        else if (i == k + 1 || b < i)
            slots = {b};
        else if (b == i)
            slots = {b, b + 1};
        else
            slots = {b + 1};
        for (std::size_t s : slots)
            for (std::size_t t = 0; t < r; ++t)
                d.at((s - 1) * r + t, (b - 1) * r + t) = 1;
    }
    return d;
}

IntMatrix codegeneracy_map(std::size_t r, std::size_t k, std::size_t j) {
    if (k == 0 || j >= k) throw std::invalid_argument("codegeneracy_map: index out of range");
    IntMatrix s(r * (k - 1), r * k);
    // Deletes block j (0-based).
    for (std::size_t b = 0; b < k; ++b) {
        if (b == j) continue;
        std::size_t dest = b < j ? b : b - 1;
        for (std::size_t t = 0; t < r; ++t) s.at(dest * r + t, b * r + t) = 1;
    }
    return s;
}

namespace {

// Normalized cochain data for a free-valued functor: bases of the joint
// degeneracy kernels and the induced differentials.
struct NormalizedData {
    std::vector<IntMatrix> basis;  // basis[k]: functor_rank x n_k
    std::vector<IntMatrix> diff;   // diff[k]: normalized degree k -> k+1
};

IntMatrix alternating_coface_sum(FunctorTag tag, std::size_t r, std::size_t k) {
    IntMatrix d = functor_map(tag, coface_map(r, k, 0));
    for (std::size_t i = 1; i <= k + 1; ++i) {
        IntMatrix t = functor_map(tag, coface_map(r, k, i));
        d = (i % 2 == 0) ? d + t : d - t;
    }
    return d;
}

NormalizedData normalized_data(FunctorTag tag, std::size_t r, int top) {
    NormalizedData nd;
    nd.basis.resize(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
        std::size_t fk = functor_rank(tag, r * static_cast<std::size_t>(k));
        if (k == 0) {
            nd.basis[0] = IntMatrix::zero(fk, fk == 0 ? 0 : fk);
            if (fk != 0) nd.basis[0] = IntMatrix::identity(fk);
            continue;
        }
        if (k == 1) {
            nd.basis[1] = IntMatrix::identity(fk);  // only degeneracy lands in F(0) = 0
            continue;
        }
        IntMatrix stacked;
        bool first = true;
        for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
            IntMatrix sj = functor_map(tag, codegeneracy_map(r, static_cast<std::size_t>(k), j));
            stacked = first ? sj : stacked.vstack(sj);
            first = false;
        }
        nd.basis[static_cast<std::size_t>(k)] = kernel_basis(stacked);
    }
    nd.diff.resize(static_cast<std::size_t>(top));
    for (int k = 0; k < top; ++k) {
        IntMatrix full = alternating_coface_sum(tag, r, static_cast<std::size_t>(k));
        IntMatrix img = full * nd.basis[static_cast<std::size_t>(k)];
        nd.diff[static_cast<std::size_t>(k)] =
            solve_exact(nd.basis[static_cast<std::size_t>(k) + 1], img);
    }
    return nd;
}

}  // namespace

ChainComplex normalized_cosimplicial_complex(FunctorTag tag, std::size_t r, int top) {
    if (tag == FunctorTag::Ant2)
        throw std::invalid_argument("normalized_cosimplicial_complex: use the Ant2 resolution path");
    NormalizedData nd = normalized_data(tag, r, top);
    std::vector<std::size_t> ranks;
    for (auto& b : nd.basis) ranks.push_back(b.cols());
    return ChainComplex(0, std::move(ranks), std::move(nd.diff));
}

namespace {

// Ant2 = coker of symmetrization; its normalized complex is computed as
// the total complex of the three-row resolution
//   Wedge2 -> Tensor2 -> Tensor2
// which is exact onto Ant2 level by level.
ChainComplex ant2_total_complex(std::size_t r, int top) {
    NormalizedData nw = normalized_data(FunctorTag::Wedge2, r, top + 3);
    NormalizedData nt = normalized_data(FunctorTag::Tensor2, r, top + 3);

    auto vert_incl = [&](int k) {  // NW[k] -> NT[k]
        IntMatrix full = wedge_to_tensor_map(r * static_cast<std::size_t>(k));
        return solve_exact(nt.basis[k], full * nw.basis[k]);
    };
    auto vert_sym = [&](int k) {  // NT[k] -> NT[k]
        IntMatrix full = symmetrization_map(r * static_cast<std::size_t>(k));
        return solve_exact(nt.basis[k], full * nt.basis[k]);
    };

    auto nwr = [&](int k) { return k <= top + 3 ? nw.basis[k].cols() : 0; };
    auto ntr = [&](int k) { return k <= top + 3 ? nt.basis[k].cols() : 0; };

    auto nwr_s = [&](int k) { return k >= 0 ? nwr(k) : 0; };
    auto ntr_s = [&](int k) { return k >= 0 ? ntr(k) : 0; };

    // Start at total degree -2 so every incoming differential of the
    // degree-0 row is present.
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> diffs;
    for (int m = -2; m <= top; ++m)
        ranks.push_back(nwr_s(m + 2) + ntr_s(m + 1) + ntr_s(m));
    for (int m = -2; m < top; ++m) {
        std::size_t w0 = nwr_s(m + 2), t1 = ntr_s(m + 1), t0 = ntr_s(m);
        std::size_t w0n = nwr_s(m + 3), t1n = ntr_s(m + 2), t0n = ntr_s(m + 1);
        IntMatrix D(w0n + t1n + t0n, w0 + t1 + t0);
        auto put = [&](const IntMatrix& blk, std::size_t r0, std::size_t c0, int sign) {
            for (std::size_t i = 0; i < blk.rows(); ++i)
                for (std::size_t j = 0; j < blk.cols(); ++j)
                    D.at(r0 + i, c0 + j) = sign > 0 ? blk.at(i, j) : -blk.at(i, j);
        };
        if (w0 && w0n) put(nw.diff[m + 2], 0, 0, 1);
        if (w0 && t1n) put(vert_incl(m + 2), w0n, 0, (m + 2) % 2 == 0 ? 1 : -1);
        if (t1 && t1n) put(nt.diff[m + 1], w0n, w0, 1);
        if (t1 && t0n) put(vert_sym(m + 1), w0n + t1n, w0, (m + 1) % 2 == 0 ? 1 : -1);
        if (t0 && t0n) put(nt.diff[m], w0n + t1n, w0 + t1, 1);
        diffs.push_back(std::move(D));
    }
    return ChainComplex(-2, std::move(ranks), std::move(diffs));
}

}  // namespace

FgAbelianGroup cosimplicial_expected(FunctorTag tag, std::size_t r, int degree) {
    auto free_grp = [](std::size_t n) { return FgAbelianGroup(n); };
    const std::size_t wedge = r * (r - 1) / 2, sym = r * (r + 1) / 2;
    switch (tag) {
        case FunctorTag::Id:
            return degree == 1 ? free_grp(r) : FgAbelianGroup::trivial();
        case FunctorTag::Tensor2:
            return degree == 2 ? free_grp(r * r) : FgAbelianGroup::trivial();
        case FunctorTag::Gamma2:
            return degree == 2 ? free_grp(wedge) : FgAbelianGroup::trivial();
        case FunctorTag::Wedge2:
            return degree == 2 ? free_grp(sym) : FgAbelianGroup::trivial();
        case FunctorTag::Sym2: {
            if (degree != 2) return FgAbelianGroup::trivial();
            FgAbelianGroup g(wedge);
            for (std::size_t i = 0; i < r; ++i) g.invariants.push_back(2);
            return g;
        }
        case FunctorTag::Ant2:
            if (degree == 1) {
                FgAbelianGroup g;
                for (std::size_t i = 0; i < r; ++i) g.invariants.push_back(2);
                return g;
            }
            return degree == 2 ? free_grp(sym) : FgAbelianGroup::trivial();
        case FunctorTag::Hcheck1:
            if (degree == 1) return free_grp(r);
            return degree == 2 ? free_grp(wedge) : FgAbelianGroup::trivial();
    }
    return FgAbelianGroup::trivial();
}

std::string CosimplicialReport::to_string() const {
    std::ostringstream os;
    os << "cosimplicial-limit functor=" << functor_name(tag) << " rank=" << rank
       << " max_degree=" << max_degree << " " << (ok ? "OK" : "MISMATCH") << "\n";
    for (const auto& d : degrees)
        os << "  H^" << d.degree << " = " << d.computed.to_string()
           << " expected " << d.expected.to_string() << (d.ok ? "" : "  <-- mismatch") << "\n";
    return os.str();
}

CosimplicialReport cosimplicial_limit_check(std::size_t r, FunctorTag tag, int max_degree) {
    if (r < 1) throw std::invalid_argument("cosimplicial_limit_check: rank must be >= 1");
    if (max_degree < 3) throw std::invalid_argument("cosimplicial_limit_check: max_degree must be >= 3");

    ChainComplex cx = tag == FunctorTag::Ant2
                          ? ant2_total_complex(r, max_degree + 1)
                          : normalized_cosimplicial_complex(tag, r, max_degree + 1);

    CosimplicialReport rep;
    rep.tag = tag;
    rep.rank = r;
    rep.max_degree = max_degree;
    rep.ok = true;
    for (int d = 0; d <= max_degree; ++d) {
        CosimplicialDegreeReport dr;
        dr.degree = d;
        dr.computed = cx.homology(d);
        dr.expected = cosimplicial_expected(tag, r, d);
        dr.ok = dr.computed == dr.expected;
        rep.ok = rep.ok && dr.ok;
        rep.degrees.push_back(std::move(dr));
    }
    return rep;
}

}  // namespace meta
