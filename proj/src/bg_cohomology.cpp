#include "metaplectic/bg_cohomology.hpp"

#include <stdexcept>

namespace meta {

namespace {

Int mod_reduce(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

IntMatrix kernel_mod(const IntMatrix& M, const Int& N) {
    IntMatrix aug(M.rows(), M.cols() + M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, M.cols() + i) = N;
    }
    IntMatrix k = kernel_basis(aug);
    IntMatrix proj(M.cols(), k.cols());
    for (std::size_t i = 0; i < M.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) proj.at(i, j) = k.at(i, j);
    return proj;
}

// subgroup K/N Z^s of (Z/N)^s presented by a solution lattice
FgAbelianGroup lattice_mod_group(const IntMatrix& K, const Int& N) {
    IntMatrix X = solve_exact(K, IntMatrix::identity(K.rows()).scaled(N));
    return cokernel_group(X);
}

// packed coefficient row of Q -> b(x, y) - c * Q(x)
std::vector<Int> functional_row(std::size_t rank, const std::vector<Int>& x,
                                const std::vector<Int>& y, const Int& c) {
    std::vector<Int> row;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i; j < rank; ++j) {
            Int v = 0;
            if (i == j) {
                v += 2 * x[i] * y[i];
                v -= c * x[i] * x[i];
            } else {
                v += x[i] * y[j] + x[j] * y[i];
                v -= c * x[i] * x[j];
            }
            row.push_back(v);
        }
    return row;
}

QuadForm form_from_packed(const std::vector<Int>& c, std::size_t rank, const Int& N) {
    QuadForm q(rank, N);
    std::size_t ix = 0;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i; j < rank; ++j) q.set(i, j, c[ix++]);
    return q;
}

}  // namespace

BgCohomologyReport bg_cohomology(const BasedRootDatum& rd, const Int& N) {
    if (N < 1) throw std::invalid_argument("bg_cohomology: N must be >= 1");
    BgCohomologyReport rep;
    Companions comp = companions(rd);
    FgAbelianGroup zn = FgAbelianGroup::from_cyclic_orders({N});
    HomExt he = hom_ext(comp.pi1, zn);
    rep.h1 = FgAbelianGroup::trivial();
    rep.h2 = he.hom;
    rep.h3 = he.ext;
    StrictForms st = enumerate_strict(rd, N);
    rep.h4 = st.group;
    rep.h4_generators = st.generators;

    // Hom(Lambda, Z/N) -> Hom(Lambda_sc, Z/N) is the transpose of the
    // lattice inclusion.
    rep.restriction = comp.incl_sc.transpose();
    rep.restriction_kernel = lattice_mod_group(kernel_mod(rep.restriction, N), N);
    std::size_t k = rep.restriction.rows();
    rep.restriction_cokernel =
        cokernel_group(rep.restriction.hstack(IntMatrix::identity(k).scaled(N)));
    rep.sequence_ok = rep.restriction_kernel == rep.h2 && rep.restriction_cokernel == rep.h3;
    return rep;
}

OracleStrict chevalley_strictness_oracle(const BasedRootDatum& rd, const Int& N) {
    if (N < 1) throw std::invalid_argument("chevalley_strictness_oracle: N must be >= 1");
    WeylGroup W = weyl_group(rd);
    Companions comp = companions(rd);
    std::size_t r = rd.rank, s = r * (r + 1) / 2;

    std::vector<std::vector<Int>> rows;
    // degree-two Schubert coefficients, one per factorization of each
    // length-two element
    for (const auto& l2 : W.length2)
        for (auto [i, j] : l2.factorizations) {
            const auto& a1 = rd.coroots[rd.simple[i]];
            const auto& a2 = rd.coroots[rd.simple[j]];
            Int c = 0;
            for (std::size_t t = 0; t < r; ++t) c += rd.roots[rd.simple[j]][t] * a1[t];
            rows.push_back(functional_row(r, a2, a1, c));
        }
    // length-one stratum against the fundamental-group directions: the
    // coker generators of the coroot-lattice inclusion, lifted to Lambda
    SmithResult snf = smith_normal_form(comp.incl_sc);
    for (std::size_t t = 0; t < r; ++t) {
        bool in_lattice = t < snf.rank && snf.D.at(t, t) == 1;
        if (in_lattice) continue;
        std::vector<Int> lift(r);
        for (std::size_t i = 0; i < r; ++i) lift[i] = snf.Uinv.at(i, t);
        for (std::size_t sx : rd.simple) {
            Int c = 0;
            for (std::size_t i = 0; i < r; ++i) c += rd.roots[sx][i] * lift[i];
            rows.push_back(functional_row(r, rd.coroots[sx], lift, c));
        }
    }

    OracleStrict out;
    out.functional_count = rows.size();
    IntMatrix M(rows.size(), s);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < s; ++j) M.at(i, j) = rows[i][j];
    out.solutions = rows.empty() ? IntMatrix::identity(s) : kernel_mod(M, N);
    out.group = lattice_mod_group(out.solutions, N);
    return out;
}

bool oracle_matches_strict(const BasedRootDatum& rd, const Int& N) {
    OracleStrict oracle = chevalley_strictness_oracle(rd, N);
    StrictForms st = enumerate_strict(rd, N);
    if (oracle.group != st.group) return false;
    // containment plus equal order gives equality
    for (std::size_t j = 0; j < oracle.solutions.cols(); ++j) {
        std::vector<Int> c(oracle.solutions.rows());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(oracle.solutions.at(i, j), N);
        if (!is_strict(rd, form_from_packed(c, rd.rank, N))) return false;
    }
    return true;
}

CoverHomotopy cover_homotopy(const BasedRootDatum& rd, const Int& N) {
    CoverHomotopy out;
    BgCohomologyReport rep = bg_cohomology(rd, N);
    out.pi0 = rep.h4;
    out.pi1 = rep.h3;
    out.pi2 = rep.h2;
    out.pi1_fiber = rep.restriction_cokernel;
    out.pi2_fiber = rep.restriction_kernel;
    out.agree = rep.sequence_ok && out.pi1 == out.pi1_fiber && out.pi2 == out.pi2_fiber;
    return out;
}

EquivariancePairings equivariance_pairings(const BasedRootDatum& rd, const QuadForm& q) {
    if (!is_strict(rd, q)) throw std::invalid_argument("equivariance_pairings: form is not strict");
    const Int& N = q.modulus();
    EquivariancePairings out;
    out.int_mu = polarize(q);
    for (std::size_t i = 0; i < rd.rank; ++i)
        for (std::size_t j = 0; j < rd.rank; ++j)
            out.int_mu.mat.at(i, j) = mod_reduce(-out.int_mu.mat.at(i, j), N);

    std::size_t k = rd.simple.size();
    out.int_mu_sc = IntMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i)
        out.int_mu_sc.at(i, i) = mod_reduce(-q.eval_lift(rd.coroots[rd.simple[i]]), N);

    // compatibility through Lambda -> Lambda_ad: -b(a_i, e_t) must equal
    // the pairing of a_i with the image of e_t, which is -<a_i_root, e_t> Q(a_i)
    Companions comp = companions(rd);
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t t = 0; t < rd.rank; ++t) {
            std::vector<Int> e(rd.rank, 0);
            e[t] = 1;
            Int lhs = out.int_mu.eval(rd.coroots[rd.simple[i]], e);
            Int rhs = 0;
            for (std::size_t j = 0; j < k; ++j) rhs += out.int_mu_sc.at(i, j) * comp.to_ad.at(j, t);
            if (lhs != mod_reduce(rhs, N)) ok = false;
        }
    out.compatible = ok;
    return out;
}

}  // namespace meta
