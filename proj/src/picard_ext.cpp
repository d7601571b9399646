#include "metaplectic/picard_ext.hpp"

#include <sstream>
#include <stdexcept>

namespace meta {

namespace {

Int mod_reduce(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

PicardGroupoid dictionary(const ChainComplex& c) {
    if (c.lo() != -1 || c.hi() != 0)
        throw std::invalid_argument("dictionary: complex must live in degrees [-1, 0]");
    return PicardGroupoid{c};
}

ChainComplex dictionary_inverse(const PicardGroupoid& p) { return p.presentation; }

std::vector<Int> Heisenberg1::cocycle(const std::vector<Int>& l1,
                                      const std::vector<Int>& l2) const {
    if (l1.size() != rank || l2.size() != rank)
        throw std::invalid_argument("Heisenberg1::cocycle: rank mismatch");
    std::vector<Int> out;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i; j < rank; ++j)
            out.push_back(i == j ? Int(l1[i] * l2[i]) : Int(l1[i] * l2[j] + l1[j] * l2[i]));
    return out;
}

Heisenberg1 heisenberg1(const Lattice& l) {
    Heisenberg1 h;
    h.rank = l.rank;
    return h;
}

IntMatrix ExtCocycle::commutator() const {
    IntMatrix c = sigma - sigma.transpose();
    return c.mod(N);
}

Int ExtCocycle::sigma_at(const std::vector<Int>& x, const std::vector<Int>& y) const {
    if (x.size() != rank || y.size() != rank)
        throw std::invalid_argument("ExtCocycle::sigma_at: rank mismatch");
    Int v = 0;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) v += sigma.at(i, j) * x[i] * y[j];
    return mod_reduce(v, N);
}

ExtCocycle extension_from_bilinear(std::size_t rank, const Int& N, const IntMatrix& beta) {
    if (beta.rows() != rank || beta.cols() != rank)
        throw std::invalid_argument("extension_from_bilinear: size mismatch");
    ExtCocycle e;
    e.free_base = true;
    e.rank = rank;
    e.N = N;
    e.sigma = beta.mod(N);
    return e;
}

ExtCocycle extension_from_bilinear(const FiniteGroup& base, const Int& N, const IntMatrix& beta) {
    ExtCocycle e = extension_from_bilinear(base.orders.size(), N, beta);
    e.free_base = false;
    e.orders = base.orders;
    for (std::size_t i = 0; i < e.rank; ++i)
        for (std::size_t j = 0; j < e.rank; ++j)
            if (mod_reduce(beta.at(i, j) * base.orders[i], N) != 0 ||
                mod_reduce(beta.at(i, j) * base.orders[j], N) != 0)
                throw std::invalid_argument(
                    "extension_from_bilinear: cocycle not defined on the finite base");
    return e;
}

ExtCocycle baer_sum(const ExtCocycle& a, const ExtCocycle& b) {
    if (a.free_base != b.free_base || a.rank != b.rank || a.orders != b.orders || a.N != b.N)
        throw std::invalid_argument("baer_sum: base mismatch");
    ExtCocycle e = a;
    e.sigma = (a.sigma + b.sigma).mod(a.N);
    return e;
}

std::optional<std::vector<Int>> coboundary_witness(const ExtCocycle& a, const ExtCocycle& b) {
    if (a.free_base != b.free_base || a.rank != b.rank || a.orders != b.orders || a.N != b.N)
        throw std::invalid_argument("coboundary_witness: base mismatch");
    if (a.commutator() != b.commutator()) return std::nullopt;
    IntMatrix d = (a.sigma - b.sigma).mod(a.N);  // symmetric mod N
    const Int& N = a.N;
    // Q(x) = sum_i q_i x_i + sum_i d_ii C(x_i, 2) + sum_{i<j} d_ij x_i x_j
    // has polarization d; packed quadratic part first, then the linear part.
    std::vector<Int> coeffs;
    for (std::size_t i = 0; i < a.rank; ++i)
        for (std::size_t j = i; j < a.rank; ++j) coeffs.push_back(d.at(i, j));
    for (std::size_t i = 0; i < a.rank; ++i) {
        if (a.free_base) {
            coeffs.push_back(0);
            continue;
        }
        // well-definedness on Z/order: order q_i + C(order, 2) d_ii = 0 mod N
        const Int& ord = a.orders[i];
        Int rhs = mod_reduce(-(ord * (ord - 1) / 2) * d.at(i, i), N);
        Int g = gcd(ord, N);
        if (rhs % g != 0) return std::nullopt;
        Int q = 0;
        bool found = false;
        for (Int t = 0; t < N && !found; ++t)
            if (mod_reduce(ord * t - rhs, N) == 0) {
                q = t;
                found = true;
            }
        if (!found) return std::nullopt;
        coeffs.push_back(q);
    }
    return coeffs;
}

Int coboundary_eval(const std::vector<Int>& coeffs, std::size_t rank, const Int& N,
                    const std::vector<Int>& x) {
    std::size_t s = rank * (rank + 1) / 2;
    if (coeffs.size() != s + rank || x.size() != rank)
        throw std::invalid_argument("coboundary_eval: size mismatch");
    Int v = 0;
    std::size_t c = 0;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i; j < rank; ++j, ++c)
            v += i == j ? Int(coeffs[c] * (x[i] * (x[i] - 1) / 2)) : Int(coeffs[c] * x[i] * x[j]);
    for (std::size_t i = 0; i < rank; ++i) v += coeffs[s + i] * x[i];
    return mod_reduce(v, N);
}

Int SymMonExt::a(std::size_t x, std::size_t y, std::size_t z) const {
    std::size_t s = gamma.size();
    return associator[(x * s + y) * s + z];
}

Int SymMonExt::b(std::size_t x, std::size_t y) const { return braiding[x * gamma.size() + y]; }

void SymMonExt::set_a(std::size_t x, std::size_t y, std::size_t z, const Int& v) {
    std::size_t s = gamma.size();
    associator[(x * s + y) * s + z] = mod_reduce(v, N);
}

void SymMonExt::set_b(std::size_t x, std::size_t y, const Int& v) {
    braiding[x * gamma.size() + y] = mod_reduce(v, N);
}

SymMonExt SymMonExt::trivial(const FiniteGroup& gamma, const Int& N) {
    SymMonExt s;
    s.gamma = gamma;
    s.N = N;
    std::size_t n = gamma.size();
    s.associator.assign(n * n * n, Int(0));
    s.braiding.assign(n * n, Int(0));
    return s;
}

CoherenceReport check_coherence(const SymMonExt& s, bool braided_only) {
    CoherenceReport rep;
    std::size_t n = s.gamma.size();
    auto elems = s.gamma.elements();
    auto ix = [&](const std::vector<Int>& v) { return s.gamma.element_index(v); };
    auto fail = [&](const std::string& axiom, std::size_t x, std::size_t y, std::size_t z,
                    bool triple) {
        rep.ok = false;
        if (rep.failures.size() >= 16) return;
        std::ostringstream os;
        os << axiom << " fails at (" << x << ", " << y;
        if (triple) os << ", " << z;
        os << ")";
        rep.failures.push_back(os.str());
    };

    std::size_t zero = ix(s.gamma.zero());
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (s.a(zero, x, y) != 0 || s.a(x, zero, y) != 0 || s.a(x, y, zero) != 0)
                fail("normalization (associator)", x, y, 0, false);
            if (s.b(zero, x) != 0 || s.b(x, zero) != 0) fail("normalization (braiding)", x, 0, 0, false);
        }
    }

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t xy = ix(s.gamma.add(elems[x], elems[y]));
            for (std::size_t z = 0; z < n; ++z) {
                std::size_t yz = ix(s.gamma.add(elems[y], elems[z]));
                // pentagon
                for (std::size_t w = 0; w < n; ++w) {
                    std::size_t zw = ix(s.gamma.add(elems[z], elems[w]));
                    Int p = s.a(y, z, w) - s.a(xy, z, w) + s.a(x, yz, w) - s.a(x, y, zw) +
                            s.a(x, y, z);
                    if (mod_reduce(p, s.N) != 0) {
                        fail("pentagon", x, y, z, true);
                        break;
                    }
                }
                std::size_t xz = ix(s.gamma.add(elems[x], elems[z]));
                Int h1 = s.b(x, yz) - s.b(x, y) - s.b(x, z) -
                         (s.a(x, y, z) - s.a(y, x, z) + s.a(y, z, x));
                if (mod_reduce(h1, s.N) != 0) fail("hexagon 1", x, y, z, true);
                Int h2 = s.b(xy, z) - s.b(x, z) - s.b(y, z) -
                         (-s.a(x, y, z) + s.a(x, z, y) - s.a(z, x, y));
                if (mod_reduce(h2, s.N) != 0) fail("hexagon 2", x, y, z, true);
                (void)xz;
            }
            if (!braided_only && mod_reduce(s.b(x, y) + s.b(y, x), s.N) != 0)
                fail("inverse axiom", x, y, 0, false);
        }
    return rep;
}

SymMonExt build_symmon_from_hom(const FiniteGroup& gamma, const std::vector<Int>& f,
                                const Int& N) {
    std::size_t n = gamma.size();
    if (f.size() != n) throw std::invalid_argument("build_symmon_from_hom: table size mismatch");
    bool nonzero = false;
    for (const Int& v : f) nonzero = nonzero || v != 0;
    if (nonzero && N % 2 != 0)
        throw std::invalid_argument("build_symmon_from_hom: nonzero f needs even N");
    Int eps = N / 2;
    auto elems = gamma.elements();
    for (std::size_t x = 0; x < n; ++x) {
        if (f[x] != 0 && f[x] != eps)
            throw std::invalid_argument("build_symmon_from_hom: f must take values in {0, N/2}");
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t xy = gamma.element_index(gamma.add(elems[x], elems[y]));
            if (mod_reduce(f[x] + f[y] - f[xy], N) != 0)
                throw std::invalid_argument("build_symmon_from_hom: f is not a homomorphism");
        }
        std::size_t dbl = gamma.element_index(gamma.scale(2, elems[x]));
        if (f[dbl] != 0)
            throw std::invalid_argument("build_symmon_from_hom: f must kill doubles");
    }

    SymMonExt s = SymMonExt::trivial(gamma, N);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (f[x] == eps && f[y] == eps && eps != 0) s.set_b(x, y, eps);
    return s;
}

std::vector<Int> inv(const SymMonExt& s) {
    CoherenceReport rep = check_coherence(s);
    if (!rep.ok) throw std::invalid_argument("inv: incoherent data: " + rep.failures[0]);
    std::size_t n = s.gamma.size();
    auto elems = s.gamma.elements();
    std::vector<Int> out(n);
    for (std::size_t x = 0; x < n; ++x) out[x] = s.b(x, x);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t xy = s.gamma.element_index(s.gamma.add(elems[x], elems[y]));
            if (mod_reduce(out[x] + out[y] - out[xy], s.N) != 0)
                throw std::logic_error("inv: not a homomorphism");
        }
        std::size_t dbl = s.gamma.element_index(s.gamma.scale(2, elems[x]));
        if (out[dbl] != 0) throw std::logic_error("inv: does not kill doubles");
    }
    return out;
}

SymMonExt baer_sum(const SymMonExt& a, const SymMonExt& b) {
    if (a.gamma.orders != b.gamma.orders || a.N != b.N)
        throw std::invalid_argument("baer_sum: base mismatch");
    SymMonExt s = a;
    for (std::size_t i = 0; i < s.associator.size(); ++i)
        s.associator[i] = mod_reduce(a.associator[i] + b.associator[i], s.N);
    for (std::size_t i = 0; i < s.braiding.size(); ++i)
        s.braiding[i] = mod_reduce(a.braiding[i] + b.braiding[i], s.N);
    return s;
}

SymMonExt pullback_symmon(const SymMonExt& s, const FiniteGroup& source, const IntMatrix& P) {
    if (P.rows() != s.gamma.orders.size() || P.cols() != source.orders.size())
        throw std::invalid_argument("pullback_symmon: map size mismatch");
    auto apply = [&](const std::vector<Int>& x) {
        std::vector<Int> y(s.gamma.orders.size(), 0);
        for (std::size_t i = 0; i < y.size(); ++i) {
            for (std::size_t j = 0; j < x.size(); ++j) y[i] += P.at(i, j) * x[j];
            y[i] = mod_reduce(y[i], s.gamma.orders[i]);
        }
        return y;
    };
    // the map must be well defined on the source orders
    for (std::size_t j = 0; j < source.orders.size(); ++j) {
        std::vector<Int> e(source.orders.size(), 0);
        e[j] = source.orders[j];
        for (const Int& c : apply(e))
            if (c != 0) throw std::invalid_argument("pullback_symmon: map not well defined");
    }
    SymMonExt out = SymMonExt::trivial(source, s.N);
    auto elems = source.elements();
    std::size_t n = elems.size();
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = s.gamma.element_index(apply(elems[i]));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            out.set_b(x, y, s.b(image[x], image[y]));
            for (std::size_t z = 0; z < n; ++z)
                out.set_a(x, y, z, s.a(image[x], image[y], image[z]));
        }
    return out;
}

Int GradedTwistedAlgebra::exponent(std::size_t a, std::size_t b) const {
    return exponents[a * gamma.size() + b];
}

bool GradedTwistedAlgebra::associative() const {
    auto elems = gamma.elements();
    std::size_t n = elems.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = gamma.element_index(gamma.add(elems[a], elems[b]));
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t bc = gamma.element_index(gamma.add(elems[b], elems[c]));
                Int lhs = exponent(a, b) + exponent(ab, c);
                Int rhs = exponent(b, c) + exponent(a, bc);
                if (mod_reduce(lhs - rhs, N) != 0) return false;
            }
        }
    return true;
}

Int GradedTwistedAlgebra::commutation(std::size_t a, std::size_t b) const {
    return mod_reduce(exponent(a, b) - exponent(b, a), N);
}

GradedTwistedAlgebra twist_graded_algebra(const FiniteGroup& gamma, const Int& N,
                                          const std::vector<Int>& sigma_table) {
    std::size_t n = gamma.size();
    if (sigma_table.size() != n * n)
        throw std::invalid_argument("twist_graded_algebra: table size mismatch");
    GradedTwistedAlgebra alg;
    alg.gamma = gamma;
    alg.N = N;
    alg.exponents.resize(n * n);
    for (std::size_t i = 0; i < n * n; ++i) alg.exponents[i] = mod_reduce(sigma_table[i], N);
    return alg;
}

GradedTwistedAlgebra twist_graded_algebra(const ExtCocycle& e) {
    if (e.free_base) throw std::invalid_argument("twist_graded_algebra: base must be finite");
    FiniteGroup gamma{e.orders};
    auto elems = gamma.elements();
    std::size_t n = elems.size();
    std::vector<Int> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = e.sigma_at(elems[a], elems[b]);
    return twist_graded_algebra(gamma, e.N, table);
}

}  // namespace meta
