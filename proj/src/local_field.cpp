#include "metaplectic/local_field.hpp"

#include <sstream>
#include <stdexcept>

namespace meta {

namespace {

Int mod_reduce(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

Int mod_pow(Int base, Int e, const Int& m) {
    base = mod_reduce(base, m);
    Int out = 1;
    while (e > 0) {
        if (e % 2 == 1) out = mod_reduce(out * base, m);
        base = mod_reduce(base * base, m);
        e /= 2;
    }
    return out;
}

// inverse mod m by extended euclid; requires gcd = 1
Int mod_inverse(const Int& a, const Int& m) {
    Int r0 = m, r1 = mod_reduce(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int qt = r0 / r1;
        Int r2 = r0 - qt * r1, s2 = s0 - qt * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: not a unit");
    return mod_reduce(s0, m);
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::map<Int, Int> factorize(Int n) {
    std::map<Int, Int> out;
    for (Int d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    if (n > 1) ++out[n];
    return out;
}

Int primitive_root(const Int& p) {
    std::map<Int, Int> qs = factorize(p - 1);
    for (Int g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : qs)
            if (mod_pow(g, (p - 1) / q, p) == 1) ok = false;
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

}  // namespace

Place real_place() { return Place{Place::Kind::real, 0, 2}; }

Place padic_place(const Int& p, const Int& N) {
    if (!is_prime(p)) throw std::invalid_argument("padic_place: p must be prime");
    if (p == 2) {
        if (N != 2) throw std::invalid_argument("padic_place: p = 2 requires N = 2");
    } else if ((p - 1) % N != 0) {
        throw std::invalid_argument("padic_place: N must divide p - 1");
    }
    if (N < 1) throw std::invalid_argument("padic_place: N must be positive");
    return Place{Place::Kind::padic, p, N};
}

LocalUnit LocalUnit::from_rational(const Int& num, const Int& den) {
    if (num == 0 || den == 0) throw std::invalid_argument("LocalUnit: zero");
    LocalUnit out;
    out.sign = (num < 0) != (den < 0) ? -1 : 1;
    for (const auto& [p, e] : factorize(abs(num))) out.factors[p] += e;
    for (const auto& [p, e] : factorize(abs(den))) out.factors[p] -= e;
    for (auto it = out.factors.begin(); it != out.factors.end();)
        it = it->second == 0 ? out.factors.erase(it) : std::next(it);
    return out;
}

Int LocalUnit::numerator() const {
    Int out = sign;
    for (const auto& [p, e] : factors)
        for (Int i = 0; i < e; ++i) out *= p;
    return out;
}

Int LocalUnit::denominator() const {
    Int out = 1;
    for (const auto& [p, e] : factors)
        for (Int i = 0; i < -e; ++i) out *= p;
    return out;
}

Int LocalUnit::valuation(const Int& p) const {
    auto it = factors.find(p);
    return it == factors.end() ? Int(0) : it->second;
}

Int LocalUnit::residue_mod(const Int& m, const Int& p) const {
    Int out = mod_reduce(Int(sign), m);
    for (const auto& [q, e] : factors) {
        if (q == p) continue;
        Int base = e < 0 ? mod_inverse(q, m) : mod_reduce(q, m);
        out = mod_reduce(out * mod_pow(base, abs(e), m), m);
    }
    return out;
}

LocalUnit LocalUnit::operator*(const LocalUnit& o) const {
    LocalUnit out;
    out.sign = sign * o.sign;
    out.factors = factors;
    for (const auto& [p, e] : o.factors) out.factors[p] += e;
    for (auto it = out.factors.begin(); it != out.factors.end();)
        it = it->second == 0 ? out.factors.erase(it) : std::next(it);
    return out;
}

LocalUnit LocalUnit::inverse() const {
    LocalUnit out;
    out.sign = sign;
    for (const auto& [p, e] : factors) out.factors[p] = -e;
    return out;
}

std::string LocalUnit::to_string() const {
    std::ostringstream os;
    os << numerator();
    if (denominator() != 1) os << "/" << denominator();
    return os.str();
}

LocalUnit one_minus(const LocalUnit& a) {
    Int n = a.numerator(), d = a.denominator();
    if (n == d) throw std::invalid_argument("one_minus: argument is 1");
    return LocalUnit::from_rational(d - n, d);
}

Int hilbert_symbol(const LocalUnit& a, const LocalUnit& b, const Place& v) {
    if (v.kind == Place::Kind::real)
        return a.sign < 0 && b.sign < 0 ? Int(1) : Int(0);
    const Int& p = v.p;
    Int va = a.valuation(p), vb = b.valuation(p);
    if (p == 2) {
        // classical unit formula via residues mod 8 of the odd parts
        Int u = a.residue_mod(8, 2), w = b.residue_mod(8, 2);
        auto eps = [](const Int& x) { return (x - 1) / 2 % 2; };
        auto omega = [](const Int& x) { return (x * x - 1) / 8 % 2; };
        return mod_reduce(eps(u) * eps(w) + va * omega(w) + vb * omega(u), 2);
    }
    // tame symbol: (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)} reduced mod p, read
    // as an exponent of the fixed generator of mu_N
    Int t = mod_pow(a.residue_mod(p, p), mod_reduce(vb, p - 1), p);
    t = mod_reduce(t * mod_pow(mod_inverse(b.residue_mod(p, p), p), mod_reduce(va, p - 1), p), p);
    if (va * vb % 2 != 0) t = mod_reduce(-t, p);
    Int target = mod_pow(t, (p - 1) / v.N, p);
    Int g = mod_pow(primitive_root(p), (p - 1) / v.N, p);
    for (Int e = 0; e < v.N; ++e)
        if (mod_pow(g, e, p) == target) return e;
    throw std::logic_error("hilbert_symbol: value not in mu_N");
}

SymbolSuiteReport symbol_identity_suite(const Place& v, const std::vector<LocalUnit>& sample) {
    SymbolSuiteReport rep;
    auto fail = [&rep](const std::string& what, const LocalUnit& a, const LocalUnit& b) {
        rep.failures.push_back(what + " at (" + a.to_string() + ", " + b.to_string() + ")");
    };
    const Int& N = v.N;
    for (const LocalUnit& a : sample) {
        LocalUnit minus_one = LocalUnit::from_rational(-1);
        ++rep.checks;
        if (hilbert_symbol(a, minus_one * a, v) != 0) fail("(a,-a) nonzero", a, minus_one * a);
        if (a.numerator() != a.denominator()) {
            ++rep.checks;
            if (hilbert_symbol(a, one_minus(a), v) != 0) fail("steinberg", a, one_minus(a));
        }
        ++rep.checks;
        if (hilbert_symbol(a, a, v) != hilbert_symbol(a, minus_one, v))
            fail("self symbol differs from (a,-1)", a, a);
        for (const LocalUnit& b : sample) {
            ++rep.checks;
            if (mod_reduce(hilbert_symbol(a, b, v) + hilbert_symbol(b, a, v), N) != 0)
                fail("antisymmetry", a, b);
            for (const LocalUnit& c : sample) {
                ++rep.checks;
                if (hilbert_symbol(a * b, c, v) !=
                    mod_reduce(hilbert_symbol(a, c, v) + hilbert_symbol(b, c, v), N))
                    fail("bilinearity in the first slot", a * b, c);
                ++rep.checks;
                if (hilbert_symbol(a, b * c, v) !=
                    mod_reduce(hilbert_symbol(a, b, v) + hilbert_symbol(a, c, v), N))
                    fail("bilinearity in the second slot", a, b * c);
            }
        }
    }
    rep.ok = rep.failures.empty();
    return rep;
}

TorusCoverElement TorusCover::identity() const {
    TorusCoverElement e;
    e.base.assign(rank, LocalUnit::from_rational(1));
    return e;
}

TorusCoverElement TorusCover::mul(const TorusCoverElement& a, const TorusCoverElement& b) const {
    if (a.base.size() != rank || b.base.size() != rank)
        throw std::invalid_argument("TorusCover::mul: rank mismatch");
    TorusCoverElement out;
    Int phase = a.phase + b.phase;
    for (std::size_t i = 0; i < rank; ++i) {
        out.base.push_back(a.base[i] * b.base[i]);
        for (std::size_t j = 0; j < rank; ++j)
            phase += c.at(i, j) * hilbert_symbol(a.base[i], b.base[j], place);
    }
    out.phase = mod_reduce(phase, place.N);
    return out;
}

TorusCoverElement TorusCover::inverse(const TorusCoverElement& a) const {
    TorusCoverElement out;
    for (const LocalUnit& u : a.base) out.base.push_back(u.inverse());
    Int phase = -a.phase;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            phase -= c.at(i, j) * hilbert_symbol(a.base[i], out.base[j], place);
    out.phase = mod_reduce(phase, place.N);
    return out;
}

Int TorusCover::commutator(const std::vector<LocalUnit>& x, const std::vector<LocalUnit>& y) const {
    TorusCoverElement xe{x, 0}, ye{y, 0};
    TorusCoverElement w = mul(mul(mul(xe, ye), inverse(xe)), inverse(ye));
    for (const LocalUnit& u : w.base)
        if (!u.factors.empty()) throw std::logic_error("TorusCover::commutator: base not central");
    return w.phase;
}

TorusCover torus_cover(std::size_t r, const IntMatrix& c, const Place& v) {
    if (c.rows() != r || c.cols() != r) throw std::invalid_argument("torus_cover: shape mismatch");
    return TorusCover{r, c, v};
}

CommutatorConventionReport commutator_conventions(const TorusCover& cover) {
    CommutatorConventionReport rep;
    rep.alternating = (cover.c - cover.c.transpose()).mod(cover.place.N);
    rep.negated = (cover.c.transpose() - cover.c).mod(cover.place.N);
    rep.note =
        "commutator pairing is c - c^T in this library's reading; the opposite "
        "sign appears under the other topological convention and is listed, not asserted";
    return rep;
}

RealSignature real_signature(const QuadForm& q, const std::vector<Int>& tau) {
    if (q.modulus() != 2) throw std::invalid_argument("real_signature: modulus must be 2");
    if (tau.size() != q.rank()) throw std::invalid_argument("real_signature: rank mismatch");
    RealSignature out;
    out.trivial = true;
    for (const Int& t : tau) {
        out.sgn.push_back(mod_reduce(t, 2));
        if (out.sgn.back() != 0) out.trivial = false;
    }
    return out;
}

}  // namespace meta
