#include "metaplectic/forms.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace meta {

namespace {

Int mod_reduce(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

Int binom2(const Int& n) { return n * (n - 1) / 2; }

}  // namespace

QuadForm::QuadForm(std::size_t rank, Int N) : rank_(rank), N_(std::move(N)) {
    if (N_ < 1) throw std::invalid_argument("QuadForm: modulus must be >= 1");
    coeffs_.assign(rank_ * (rank_ + 1) / 2, Int(0));
}

std::size_t QuadForm::index(std::size_t i, std::size_t j) const {
    if (i > j || j >= rank_) throw std::invalid_argument("QuadForm: coefficient index out of range");
    return i * rank_ - i * (i - 1) / 2 + (j - i);
}

void QuadForm::set(std::size_t i, std::size_t j, const Int& v) {
    coeffs_[index(i, j)] = mod_reduce(v, N_);
}

const Int& QuadForm::coeff(std::size_t i, std::size_t j) const { return coeffs_[index(i, j)]; }

Int QuadForm::eval(const std::vector<Int>& lambda) const {
    return mod_reduce(eval_lift(lambda), N_);
}

Int QuadForm::eval_lift(const std::vector<Int>& lambda) const {
    if (lambda.size() != rank_) throw std::invalid_argument("QuadForm::eval: rank mismatch");
    Int v = 0;
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = i; j < rank_; ++j) v += coeff(i, j) * lambda[i] * lambda[j];
    return v;
}

bool QuadForm::operator==(const QuadForm& o) const {
    return rank_ == o.rank_ && N_ == o.N_ && coeffs_ == o.coeffs_;
}

bool QuadForm::is_zero() const {
    for (const Int& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::string QuadForm::to_string() const {
    std::ostringstream os;
    os << "Q mod " << N_ << " [";
    bool first = true;
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = i; j < rank_; ++j) {
            if (coeff(i, j) == 0) continue;
            if (!first) os << " + ";
            os << coeff(i, j) << "*x" << i + 1;
            os << (i == j ? "^2" : "*x" + std::to_string(j + 1));
            first = false;
        }
    if (first) os << "0";
    os << "]";
    return os.str();
}

std::string QuadForm::to_json() const {
    nlohmann::json j;
    j["N"] = N_.convert_to<long long>();
    j["rank"] = rank_;
    nlohmann::json coeffs = nlohmann::json::object();
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t k = i; k < rank_; ++k)
            if (coeff(i, k) != 0)
                coeffs[std::to_string(i) + "," + std::to_string(k)] =
                    coeff(i, k).convert_to<long long>();
    j["coeffs"] = coeffs;
    return j.dump();
}

QuadForm QuadForm::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("N")) throw std::invalid_argument("QuadForm::from_json: missing N");
    Int N = Int(j.at("N").get<long long>());
    std::size_t rank = 0;
    if (j.contains("rank")) rank = j.at("rank").get<std::size_t>();
    auto coeffs = j.value("coeffs", nlohmann::json::object());
    for (auto& [key, val] : coeffs.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("QuadForm::from_json: coefficient key must be \"i,j\"");
        std::size_t i = std::stoul(key.substr(0, comma));
        std::size_t k = std::stoul(key.substr(comma + 1));
        (void)val;
        rank = std::max(rank, std::max(i, k) + 1);
    }
    QuadForm q(rank, N);
    for (auto& [key, val] : coeffs.items()) {
        auto comma = key.find(',');
        std::size_t i = std::stoul(key.substr(0, comma));
        std::size_t k = std::stoul(key.substr(comma + 1));
        if (i > k) throw std::invalid_argument("QuadForm::from_json: coefficients must have i <= j");
        q.set(i, k, Int(val.get<long long>()));
    }
    return q;
}

Int BilinearFormModN::eval(const std::vector<Int>& x, const std::vector<Int>& y) const {
    if (x.size() != rank || y.size() != rank) throw std::invalid_argument("BilinearFormModN::eval: rank mismatch");
    Int v = 0;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) v += mat.at(i, j) * x[i] * y[j];
    return mod_reduce(v, N);
}

bool BilinearFormModN::is_symmetric() const {
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            if (mod_reduce(mat.at(i, j) - mat.at(j, i), N) != 0) return false;
    return true;
}

BilinearFormModN polarize(const QuadForm& q) {
    BilinearFormModN b;
    b.rank = q.rank();
    b.N = q.modulus();
    b.mat = IntMatrix(b.rank, b.rank);
    for (std::size_t i = 0; i < b.rank; ++i) {
        b.mat.at(i, i) = mod_reduce(2 * q.coeff(i, i), b.N);
        for (std::size_t j = i + 1; j < b.rank; ++j)
            b.mat.at(i, j) = b.mat.at(j, i) = q.coeff(i, j);
    }
    return b;
}

namespace {

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

// Lattice of solutions of M x = 0 in the quotient where the last rows are
// read mod `mods`: kernel of the augmented matrix projected to the x-block.
IntMatrix kernel_mod(const IntMatrix& M, const std::vector<Int>& row_mods) {
    IntMatrix aug(M.rows(), M.cols() + M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, M.cols() + i) = row_mods[i];
    }
    IntMatrix k = kernel_basis(aug);
    IntMatrix proj(M.cols(), k.cols());
    for (std::size_t i = 0; i < M.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) proj.at(i, j) = k.at(i, j);
    return proj;
}

// Lattice equality by mutual solvability.
bool same_lattice(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows() != B.rows()) return false;
    SmithResult sa = smith_normal_form(A), sb = smith_normal_form(B);
    IntMatrix x;
    return try_solve(sa, B, x) && try_solve(sb, A, x);
}

}  // namespace

SquareFunctorReport functor_apply(std::size_t rank) {
    SquareFunctorReport rep;
    rep.rank = rank;
    auto leq = pairs_leq(rank);
    auto lt = pairs_lt(rank);
    const std::size_t s = leq.size(), w = lt.size(), t = rank * rank;
    rep.sym2_rank = s;
    rep.gamma2_rank = s;
    rep.wedge2_rank = w;
    rep.tensor_rank = t;

    auto tix = [&](std::size_t i, std::size_t j) { return i * rank + j; };
    auto leq_ix = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        return i * rank - i * (i - 1) / 2 + (j - i);
    };
    auto lt_ix = [&](std::size_t i, std::size_t j) {
        return i * (rank - 1) - i * (i - 1) / 2 + (j - i - 1);  // requires i < j
    };

    rep.sym2_to_gamma2 = IntMatrix(s, s);
    for (std::size_t c = 0; c < s; ++c) {
        auto [i, j] = leq[c];
        rep.sym2_to_gamma2.at(c, c) = (i == j) ? 2 : 1;
    }
    rep.gamma2_to_tensor = IntMatrix(t, s);
    for (std::size_t c = 0; c < s; ++c) {
        auto [i, j] = leq[c];
        rep.gamma2_to_tensor.at(tix(i, j), c) += 1;
        if (i != j) rep.gamma2_to_tensor.at(tix(j, i), c) += 1;
    }
    rep.sym2_to_tensor = rep.gamma2_to_tensor * rep.sym2_to_gamma2;
    rep.tensor_to_sym2 = IntMatrix(s, t);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) rep.tensor_to_sym2.at(leq_ix(i, j), tix(i, j)) = 1;
    rep.tensor_to_wedge2 = IntMatrix(w, t);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            if (i < j) rep.tensor_to_wedge2.at(lt_ix(i, j), tix(i, j)) = 1;
            if (i > j) rep.tensor_to_wedge2.at(lt_ix(j, i), tix(i, j)) = -1;
        }
    rep.wedge2_to_tensor = wedge_to_tensor_map(rank);
    rep.gamma2_to_mod2 = IntMatrix(rank, s);
    for (std::size_t c = 0; c < s; ++c) {
        auto [i, j] = leq[c];
        if (i == j) rep.gamma2_to_mod2.at(i, c) = 1;
    }
    rep.tensor_to_ant2_free = rep.tensor_to_wedge2;
    rep.tensor_to_ant2_tor = IntMatrix(rank, t);
    for (std::size_t i = 0; i < rank; ++i) rep.tensor_to_ant2_tor.at(i, tix(i, i)) = 1;

    rep.ok = true;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };
    auto check_row_exact = [&](const IntMatrix& incl, const IntMatrix& proj, const std::string& name) {
        try {
            ChainComplex cx(0, {incl.cols(), incl.rows(), proj.rows()}, {incl, proj});
            if (!cx.homology(0).is_trivial()) fail(name + ": left map not injective");
            if (!cx.homology(1).is_trivial()) fail(name + ": not exact in the middle");
            if (!cx.homology(2).is_trivial()) fail(name + ": right map not surjective");
        } catch (const std::exception& e) {
            fail(name + ": not a complex (" + e.what() + ")");
        }
    };
    check_row_exact(rep.gamma2_to_tensor, rep.tensor_to_wedge2, "Gamma2 -> T -> Wedge2");
    check_row_exact(rep.wedge2_to_tensor, rep.tensor_to_sym2, "Wedge2 -> T -> Sym2");

    // Sym2 -> Gamma2 -> (Z/2)^rank
    {
        if (kernel_basis(rep.sym2_to_gamma2).cols() != 0) fail("polarization not injective");
        IntMatrix comp = rep.gamma2_to_mod2 * rep.sym2_to_gamma2;
        if (!comp.mod(2).is_zero()) fail("Sym2 -> Gamma2 -> mod2 composite nonzero");
        FgAbelianGroup expect;
        for (std::size_t i = 0; i < rank; ++i) expect.invariants.push_back(2);
        if (cokernel_group(rep.sym2_to_gamma2) != expect) fail("coker(Sym2 -> Gamma2) is not (Z/2)^rank");
        std::vector<Int> mods(rank, Int(2));
        IntMatrix lat = kernel_mod(rep.gamma2_to_mod2, mods);
        if (!same_lattice(lat, rep.sym2_to_gamma2)) fail("ker(Gamma2 -> mod2) != im(Sym2)");
        // surjectivity mod 2: coker of [map | 2I] trivial
        IntMatrix aug = rep.gamma2_to_mod2.hstack(IntMatrix::identity(rank).scaled(2));
        if (!cokernel_group(aug).is_trivial()) fail("Gamma2 -> mod2 not surjective");
    }

    // T -> Ant2 (model): kernel equals the image of the symmetrizer, and
    // the map is onto the model.
    {
        IntMatrix stacked = rep.tensor_to_ant2_free.vstack(rep.tensor_to_ant2_tor);
        std::vector<Int> mods(w + rank, Int(0));
        for (std::size_t i = 0; i < rank; ++i) mods[w + i] = 2;
        IntMatrix lat = kernel_mod(stacked, mods);
        if (!same_lattice(lat, symmetrization_map(rank))) fail("ker(T -> Ant2) != im(Sym)");
        IntMatrix relations(w + rank, rank);
        for (std::size_t i = 0; i < rank; ++i) relations.at(w + i, i) = 2;
        if (!cokernel_group(stacked.hstack(relations)).is_trivial()) fail("T -> Ant2 not surjective");
    }

    return rep;
}

Sigma2HomologyReport sigma2_homology(std::size_t rank, bool twisted) {
    const std::size_t t = rank * rank, w = rank * (rank - 1) / 2, s = rank * (rank + 1) / 2;
    IntMatrix P(t, t);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) P.at(j * rank + i, i * rank + j) = 1;
    IntMatrix A = IntMatrix::identity(t) - P;  // antisymmetrizer
    IntMatrix S = IntMatrix::identity(t) + P;  // symmetrizer

    std::vector<IntMatrix> diffs =
        twisted ? std::vector<IntMatrix>{S, A, S} : std::vector<IntMatrix>{A, S, A};
    ChainComplex cx(-3, {t, t, t, t}, std::move(diffs));

    Sigma2HomologyReport rep;
    rep.rank = rank;
    rep.twisted = twisted;
    rep.h0 = cx.homology(0);
    rep.hm1 = cx.homology(-1);
    rep.hm2 = cx.homology(-2);

    FgAbelianGroup mod2;
    for (std::size_t i = 0; i < rank; ++i) mod2.invariants.push_back(2);
    if (!twisted) {
        rep.expected_h0 = FgAbelianGroup(s);
        rep.expected_hm1 = mod2;
        rep.expected_hm2 = FgAbelianGroup::trivial();
    } else {
        FgAbelianGroup ant2(w);
        ant2.invariants = mod2.invariants;
        rep.expected_h0 = ant2;
        rep.expected_hm1 = FgAbelianGroup::trivial();
        rep.expected_hm2 = mod2;
    }
    rep.ok = rep.h0 == rep.expected_h0 && rep.hm1 == rep.expected_hm1 && rep.hm2 == rep.expected_hm2;
    return rep;
}

// --- finite quadratic functions -------------------------------------------

std::size_t FiniteGroup::size() const {
    Int n = 1;
    for (const Int& d : orders) {
        if (d < 1) throw std::invalid_argument("FiniteGroup: orders must be >= 1");
        n *= d;
    }
    return n.convert_to<std::size_t>();
}

std::vector<std::vector<Int>> FiniteGroup::elements() const {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(orders.size(), 0);
    const std::size_t n = size();
    out.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        out.push_back(cur);
        for (std::size_t i = 0; i < orders.size(); ++i) {
            cur[i] += 1;
            if (cur[i] < orders[i]) break;
            cur[i] = 0;
        }
    }
    return out;
}

std::vector<Int> FiniteGroup::add(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> c(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) c[i] = mod_reduce(a[i] + b[i], orders[i]);
    return c;
}

std::vector<Int> FiniteGroup::scale(const Int& k, const std::vector<Int>& a) const {
    std::vector<Int> c(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) c[i] = mod_reduce(k * a[i], orders[i]);
    return c;
}

std::size_t FiniteGroup::element_index(const std::vector<Int>& a) const {
    std::size_t ix = 0, stride = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        ix += stride * mod_reduce(a[i], orders[i]).convert_to<std::size_t>();
        stride *= orders[i].convert_to<std::size_t>();
    }
    return ix;
}

Int FiniteQuadFunction::eval(const std::vector<Int>& a) const {
    return values[group.element_index(a)];
}

Int FiniteQuadFunction::polarization(const std::vector<Int>& a, const std::vector<Int>& b) const {
    Int v = eval(group.add(a, b)) - eval(a) - eval(b);
    return mod_reduce(v, M);
}

bool FiniteQuadFunction::is_quadratic_refinement_of(const IntMatrix& b_gen) const {
    auto elems = group.elements();
    for (const auto& a : elems)
        for (const auto& b : elems) {
            Int expect = 0;
            for (std::size_t i = 0; i < group.orders.size(); ++i)
                for (std::size_t j = 0; j < group.orders.size(); ++j)
                    expect += b_gen.at(i, j) * a[i] * b[j];
            if (polarization(a, b) != mod_reduce(expect, M)) return false;
        }
    return eval(group.zero()) == 0;
}

RefinementResult quadratic_refinements(const FiniteGroup& gamma, const IntMatrix& b_gen,
                                       const Int& M, const IntMatrix* b_half) {
    RefinementResult out;
    const std::size_t k = gamma.orders.size();
    if (b_gen.rows() != k || b_gen.cols() != k)
        throw std::invalid_argument("quadratic_refinements: pairing size mismatch");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (mod_reduce(b_gen.at(i, j) - b_gen.at(j, i), M) != 0)
                throw std::invalid_argument("quadratic_refinements: pairing not symmetric");
            if (mod_reduce(b_gen.at(i, j) * gamma.orders[i], M) != 0)
                throw std::invalid_argument("quadratic_refinements: pairing not defined on the group");
        }

    // Per generator g_i of order d_i, the value q_i = Q(g_i) must satisfy
    // d_i q_i + C(d_i,2) b_ii = 0 mod M; everything else is forced by the
    // refinement identity.
    std::vector<std::vector<Int>> choices(k);
    for (std::size_t i = 0; i < k; ++i) {
        Int d = gamma.orders[i];
        Int rhs = mod_reduce(-binom2(d) * b_gen.at(i, i), M);
        Int g = gcd(d, M);
        if (rhs % g != 0) {
            out.value_group_too_small = true;
            out.error = "no refinement: the value group has no solution of d*q = -C(d,2)*b(g,g) "
                        "at generator " + std::to_string(i);
            return out;
        }
        // one solution of (d/g) q = rhs/g mod M/g, then all lifts mod M
        Int Mg = M / g, dg = mod_reduce(d / g, Mg), rg = mod_reduce(rhs / g, Mg);
        Int q0 = 0;
        for (Int q = 0; q < Mg; ++q)
            if (mod_reduce(dg * q - rg, Mg) == 0) {
                q0 = q;
                break;
            }
        for (Int tlift = 0; tlift < g; ++tlift) choices[i].push_back(q0 + tlift * Mg);
    }

    std::vector<std::size_t> pick(k, 0);
    auto elems = gamma.elements();
    while (true) {
        FiniteQuadFunction q;
        q.group = gamma;
        q.M = M;
        q.values.resize(elems.size());
        for (const auto& a : elems) {
            Int v = 0;
            for (std::size_t i = 0; i < k; ++i) {
                v += a[i] * choices[i][pick[i]];
                v += binom2(a[i]) * b_gen.at(i, i);
                for (std::size_t j = i + 1; j < k; ++j) v += a[i] * a[j] * b_gen.at(i, j);
            }
            q.values[gamma.element_index(a)] = mod_reduce(v, M);
        }
        out.refinements.push_back(std::move(q));
        std::size_t i = 0;
        for (; i < k; ++i) {
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
        }
        if (i == k) break;
        if (k == 0) break;
    }

    if (b_half) {
        std::vector<Int> canon(elems.size());
        for (const auto& a : elems) {
            Int v = 0;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) v += b_half->at(i, j) * a[i] * a[j];
            canon[gamma.element_index(a)] = mod_reduce(v, M);
        }
        for (std::size_t i = 0; i < out.refinements.size(); ++i)
            if (out.refinements[i].values == canon) {
                out.canonical_index = i;
                break;
            }
    }
    return out;
}

bool binomial_identity_check(const FiniteQuadFunction& q, const Int& N) {
    for (const auto& a : q.group.elements()) {
        Int lhs = q.eval(q.group.scale(N, a));
        Int baa = q.polarization(a, a);
        Int rhs = mod_reduce(N * q.eval(a) + binom2(N) * baa, q.M);
        if (lhs != rhs) return false;
    }
    return true;
}

// --- theta skeleta --------------------------------------------------------

namespace {

// Complex for the mapping cone of incl : X/N -> Y/N between free modules,
// direct-summed with L/N placed in degrees [-(shift+1), -shift].
ChainComplex theta_cone_complex(const IntMatrix& incl, std::size_t x, std::size_t y,
                                std::size_t r, const Int& N, int shift) {
    // cone degrees: -2: X, -1: Y (+) X, 0: Y
    // summand degrees: -(shift+1): L, -shift: L
    int lo = std::min(-2, -(shift + 1));
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> diffs;
    auto cone_rank = [&](int d) -> std::size_t {
        if (d == -2) return x;
        if (d == -1) return y + x;
        if (d == 0) return y;
        return 0;
    };
    auto summand_rank = [&](int d) -> std::size_t {
        return (d == -(shift + 1) || d == -shift) ? r : 0;
    };
    for (int d = lo; d <= 0; ++d) ranks.push_back(cone_rank(d) + summand_rank(d));
    for (int d = lo; d < 0; ++d) {
        IntMatrix D(ranks[d - lo + 1], ranks[d - lo]);
        // cone block
        if (d == -2) {
            for (std::size_t i = 0; i < y; ++i)
                for (std::size_t j = 0; j < x; ++j) D.at(i, j) = incl.at(i, j);
            for (std::size_t j = 0; j < x; ++j) D.at(y + j, j) = -N;
        } else if (d == -1) {
            for (std::size_t i = 0; i < y; ++i) {
                D.at(i, i) = N;
                for (std::size_t j = 0; j < x; ++j) D.at(i, y + j) = incl.at(i, j);
            }
        }
        // shifted L/N block
        if (d == -(shift + 1))
            for (std::size_t i = 0; i < r; ++i) D.at(cone_rank(d + 1) + i, cone_rank(d) + i) = N;
        diffs.push_back(std::move(D));
    }
    return ChainComplex(lo, std::move(ranks), std::move(diffs));
}

FgAbelianGroup mod_n_group(std::size_t rank, const Int& N) {
    return cokernel_group(IntMatrix::identity(rank).scaled(N));
}

// Torsion subgroup M[N] of a free module mod nothing is trivial; what we
// need is Tor_1(coker, Z/N) for a free cokernel, which also vanishes.
}  // namespace

ThetaSkeletonReport theta_skeleton(std::size_t rank, const Int& N, int level) {
    if (level != 1 && level != 2) throw std::invalid_argument("theta_skeleton: level must be 1 or 2");
    if (N < 1) throw std::invalid_argument("theta_skeleton: N must be >= 1");
    const std::size_t w = rank * (rank - 1) / 2, s = rank * (rank + 1) / 2, t = rank * rank;

    SquareFunctorReport sq = functor_apply(rank);

    ThetaSkeletonReport rep;
    if (level == 1) {
        // pushout of L (x) mu_N [1] <- Gamma^2/N -> T/N, the left map
        // trivialized over a separably closed point.
        ChainComplex cx = theta_cone_complex(sq.gamma2_to_tensor, s, t, rank, N, 1);
        rep.cone_route = {1, rank, N, cx.homology(0), cx.homology(-1), cx.homology(-2)};
        // triangle L (x) mu_N [1] -> theta -> Wedge2/N with trivialized
        // connecting maps: pi0 = Wedge2/N, pi1 = L/N (+) Wedge2[N] = L/N.
        rep.triangle_route = {1, rank, N, mod_n_group(w, N), mod_n_group(rank, N),
                              FgAbelianGroup::trivial()};
    } else {
        ChainComplex cx = theta_cone_complex(sq.wedge2_to_tensor, w, t, rank, N, 2);
        rep.cone_route = {2, rank, N, cx.homology(0), cx.homology(-1), cx.homology(-2)};
        rep.triangle_route = {2, rank, N, mod_n_group(s, N), FgAbelianGroup::trivial(),
                              mod_n_group(rank, N)};
    }
    rep.agree = rep.cone_route.pi0 == rep.triangle_route.pi0 &&
                rep.cone_route.pi1 == rep.triangle_route.pi1 &&
                rep.cone_route.pi2 == rep.triangle_route.pi2;
    return rep;
}

}  // namespace meta
