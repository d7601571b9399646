#include "metaplectic/meta_dual.hpp"

#include <boost/integer/common_factor.hpp>
#include <stdexcept>

namespace meta {

namespace {

Int mod_reduce(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

// Lattice of vectors x with M x = 0 mod N, as columns; contains N * Z^cols.
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

bool same_lattice(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows() != B.rows()) return false;
    SmithResult sa = smith_normal_form(A), sb = smith_normal_form(B);
    IntMatrix x;
    return try_solve(sa, B, x) && try_solve(sb, A, x);
}

Int additive_order(const Int& v, const Int& N) {
    return N / boost::integer::gcd(mod_reduce(v, N), N);
}

std::vector<Int> scaled_vec(const Int& c, const std::vector<Int>& v) {
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

IntMatrix column_matrix(const std::vector<Int>& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

SharpData sharp_data(const BasedRootDatum& rd, const QuadForm& q) {
    if (q.rank() != rd.rank) throw std::invalid_argument("sharp_data: rank mismatch");
    if (!is_strict(rd, q)) throw std::invalid_argument("sharp_data: form is not strict");
    SharpData out;
    out.N = q.modulus();
    out.simple = rd.simple;
    out.sharp_basis = kernel_mod(polarize(q).mat, out.N);
    SmithResult snf = smith_normal_form(out.sharp_basis);
    IntMatrix sol;
    for (std::size_t k = 0; k < rd.coroots.size(); ++k) {
        Int ord = additive_order(q.eval(rd.coroots[k]), out.N);
        out.multipliers.push_back(ord);
        out.sharp_coroots.push_back(scaled_vec(ord, rd.coroots[k]));
        if (!try_solve(snf, column_matrix(out.sharp_coroots.back()), sol))
            throw std::logic_error("sharp_data: stretched coroot outside the kernel lattice");
        for (std::size_t j = 0; j < out.sharp_basis.cols(); ++j)
            if (dot(rd.roots[k], out.sharp_basis.column(j)) % ord != 0)
                throw std::logic_error("sharp_data: divided root not integral on the kernel");
    }
    return out;
}

DualPair dual_root_datum(const BasedRootDatum& rd, const QuadForm& q) {
    SharpData sd = sharp_data(rd, q);
    SmithResult snf = smith_normal_form(sd.sharp_basis);
    DualPair out;
    out.g_sharp.rank = rd.rank;
    out.g_sharp.simple = rd.simple;
    out.g_sharp.name = rd.name + "#";
    for (std::size_t k = 0; k < rd.coroots.size(); ++k) {
        out.g_sharp.coroots.push_back(
            solve_exact(snf, column_matrix(sd.sharp_coroots[k])).column(0));
        std::vector<Int> root(rd.rank);
        for (std::size_t j = 0; j < rd.rank; ++j)
            root[j] = dot(rd.roots[k], sd.sharp_basis.column(j)) / sd.multipliers[k];
        out.g_sharp.roots.push_back(std::move(root));
    }
    for (const std::string& msg : validate(out.g_sharp))
        throw std::logic_error("dual_root_datum: invalid sharp datum: " + msg);
    out.h.rank = rd.rank;
    out.h.coroots = out.g_sharp.roots;
    out.h.roots = out.g_sharp.coroots;
    out.h.simple = rd.simple;
    out.h.name = rd.name + "-dual";
    for (const std::string& msg : validate(out.h))
        throw std::logic_error("dual_root_datum: invalid dual datum: " + msg);
    IntMatrix span(rd.rank, rd.coroots.size());
    for (std::size_t k = 0; k < rd.coroots.size(); ++k)
        for (std::size_t i = 0; i < rd.rank; ++i) span.at(i, k) = out.g_sharp.coroots[k][i];
    out.zh = cokernel_group(span);
    return out;
}

EpsilonData epsilon_invariant(const BasedRootDatum& rd, const QuadForm& q) {
    const Int& N = q.modulus();
    SharpData sd = sharp_data(rd, q);
    DualPair dp = dual_root_datum(rd, q);
    IntMatrix span(rd.rank, rd.coroots.size());
    for (std::size_t k = 0; k < rd.coroots.size(); ++k)
        for (std::size_t i = 0; i < rd.rank; ++i) span.at(i, k) = dp.g_sharp.coroots[k][i];
    SmithResult snf = smith_normal_form(span);
    EpsilonData out;
    for (std::size_t i = 0; i < rd.rank; ++i) {
        Int order = i < snf.rank ? snf.D.at(i, i) : Int(0);
        if (order == 1) continue;
        if (order == 0) order = 2;  // free generator folded: values are 2-torsion
        out.group.orders.push_back(order);
        std::vector<Int> coords = snf.Uinv.column(i);
        out.generator_lifts.push_back(sd.sharp_basis.apply(coords));
    }
    auto elems = out.group.elements();
    std::vector<std::vector<Int>> lifts(elems.size(), std::vector<Int>(rd.rank, 0));
    for (std::size_t e = 0; e < elems.size(); ++e) {
        for (std::size_t g = 0; g < out.generator_lifts.size(); ++g)
            for (std::size_t i = 0; i < rd.rank; ++i)
                lifts[e][i] += elems[e][g] * out.generator_lifts[g][i];
        out.table.push_back(q.eval(lifts[e]));
    }
    // lift independence and additivity, certified on every pair
    for (std::size_t x = 0; x < elems.size(); ++x)
        for (std::size_t y = 0; y < elems.size(); ++y) {
            std::vector<Int> sum(rd.rank);
            for (std::size_t i = 0; i < rd.rank; ++i) sum[i] = lifts[x][i] + lifts[y][i];
            if (q.eval(sum) != mod_reduce(out.table[x] + out.table[y], N))
                throw std::logic_error("epsilon_invariant: value depends on the lift");
        }
    SymMonExt s = build_symmon_from_hom(out.group, out.table, N);
    out.coherent = check_coherence(s).ok;
    out.table = inv(s);
    return out;
}

std::vector<Int> epsilon_rank1_oracle(const BasedRootDatum& rd, const QuadForm& q) {
    if (rd.rank != 1) throw std::invalid_argument("epsilon_rank1_oracle: rank must be 1");
    const Int& N = q.modulus();
    Int q00 = q.coeff(0, 0);
    // kernel of b mod N by scan
    Int k = 1;
    while (mod_reduce(2 * q00 * k, N) != 0) ++k;
    // span of the stretched coroots by scan
    Int span = 0;
    for (const auto& coroot : rd.coroots) {
        Int qa = mod_reduce(q00 * coroot[0] * coroot[0], N);
        Int ord = 1;
        while (mod_reduce(ord * qa, N) != 0) ++ord;
        Int g = abs(ord * coroot[0]);
        span = span == 0 ? g : boost::integer::gcd(span, g);
    }
    if (span == 0 || span % k != 0)
        throw std::logic_error("epsilon_rank1_oracle: stretched coroots not in the kernel");
    Int d = span / k;
    std::size_t dn = d.convert_to<std::size_t>();
    std::vector<Int> table(dn);
    for (std::size_t j = 0; j < dn; ++j) {
        for (Int t = -3; t <= 3; ++t) {
            Int v = q.eval({k * (Int(j) + t * d)});
            if (t == -3)
                table[j] = v;
            else if (v != table[j])
                throw std::logic_error("epsilon_rank1_oracle: lift dependence detected");
        }
    }
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t j = 0; j < dn; ++j)
            if (mod_reduce(table[i] + table[j], N) != table[(i + j) % dn])
                throw std::logic_error("epsilon_rank1_oracle: table is not additive");
    // every coherent biadditive braiding realizing the table yields it back
    FiniteGroup zd{{d}};
    bool found = false;
    for (Int c = 0; c < N; ++c) {
        if (mod_reduce(2 * c, N) != 0 || mod_reduce(d * c, N) != 0) continue;
        bool matches = true;
        for (std::size_t x = 0; x < dn && matches; ++x)
            matches = mod_reduce(c * Int(x) * Int(x), N) == table[x];
        if (!matches) continue;
        SymMonExt s = SymMonExt::trivial(zd, N);
        for (std::size_t x = 0; x < dn; ++x)
            for (std::size_t y = 0; y < dn; ++y) s.set_b(x, y, mod_reduce(c * Int(x) * Int(y), N));
        if (!check_coherence(s).ok) continue;
        if (inv(s) != table) throw std::logic_error("epsilon_rank1_oracle: invariant disagreement");
        found = true;
    }
    if (!found)
        throw std::logic_error("epsilon_rank1_oracle: no coherent braiding realizes the table");
    return table;
}

WeissmanReport weissman_comparison(const BasedRootDatum& rd, const QuadForm& q) {
    SharpData sd = sharp_data(rd, q);
    EpsilonData ed = epsilon_invariant(rd, q);
    WeissmanReport out;
    // integral polarization of the canonical lift, evaluated on the kernel basis
    IntMatrix b_int(rd.rank, rd.rank);
    for (std::size_t i = 0; i < rd.rank; ++i)
        for (std::size_t j = 0; j < rd.rank; ++j)
            b_int.at(i, j) = i == j ? Int(2 * q.coeff(i, i)) : q.coeff(std::min(i, j), std::max(i, j));
    out.applicable = true;
    for (std::size_t a = 0; a < sd.sharp_basis.cols() && out.applicable; ++a)
        for (std::size_t b = 0; b < sd.sharp_basis.cols() && out.applicable; ++b) {
            Int v = dot(sd.sharp_basis.column(a), b_int.apply(sd.sharp_basis.column(b)));
            if (v % 2 != 0) out.applicable = false;
        }
    if (!out.applicable) return out;
    out.epsilon_prime.assign(ed.table.size(), Int(0));
    out.agrees = ed.table == out.epsilon_prime;
    return out;
}

BorelReport borel_independence_check(const BasedRootDatum& rd, const QuadForm& q,
                                     const IntMatrix& w, bool corrupt_transport) {
    BorelReport rep;
    if (quad_pullback(q, w) != q) {
        rep.witness = "form not invariant under the given element";
        return rep;
    }
    // the moved simple system, located inside Phi
    BasedRootDatum rdw = rd;
    rdw.name += "@w";
    rdw.simple.clear();
    for (std::size_t s : rd.simple) {
        std::vector<Int> img = w.apply(rd.coroots[s]);
        std::size_t ix = rd.coroots.size();
        for (std::size_t k = 0; k < rd.coroots.size(); ++k)
            if (rd.coroots[k] == img) ix = k;
        if (ix == rd.coroots.size()) {
            rep.witness = "element does not permute the coroots";
            return rep;
        }
        rdw.simple.push_back(ix);
    }
    SharpData sd = sharp_data(rd, q), sdw = sharp_data(rdw, q);
    DualPair dp = dual_root_datum(rd, q), dpw = dual_root_datum(rdw, q);
    EpsilonData ed = epsilon_invariant(rd, q), edw = epsilon_invariant(rdw, q);
    IntMatrix T = corrupt_transport ? IntMatrix::identity(rd.rank) : w;
    if (!same_lattice(T * sd.sharp_basis, sdw.sharp_basis)) {
        rep.witness = "transported kernel lattice mismatch";
        return rep;
    }
    for (std::size_t t = 0; t < rd.simple.size(); ++t)
        if (T.apply(sd.sharp_coroots[rd.simple[t]]) != sdw.sharp_coroots[rdw.simple[t]]) {
            rep.witness = "sharp simple labels differ after transport";
            return rep;
        }
    for (std::size_t t = 0; t < rd.simple.size(); ++t)
        if (sd.multipliers[rd.simple[t]] != sdw.multipliers[rdw.simple[t]]) {
            rep.witness = "multiplier mismatch on the simple system";
            return rep;
        }
    if (dp.zh != dpw.zh) {
        rep.witness = "center character group mismatch";
        return rep;
    }
    if (ed.group.orders != edw.group.orders || ed.table != edw.table) {
        rep.witness = "epsilon table mismatch";
        return rep;
    }
    rep.ok = true;
    return rep;
}

GradedTwistedAlgebra zh_twisted_algebra(const BasedRootDatum& rd, const QuadForm& q) {
    EpsilonData ed = epsilon_invariant(rd, q);
    SymMonExt s = build_symmon_from_hom(ed.group, ed.table, q.modulus());
    std::size_t n = ed.group.size();
    std::vector<Int> exponents(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) exponents[x * n + y] = s.b(x, y);
    return twist_graded_algebra(ed.group, q.modulus(), exponents);
}

}  // namespace meta
