#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "metaplectic/local_field.hpp"

using namespace meta;

namespace {

LocalUnit u(const Int& n, const Int& d = 1) { return LocalUnit::from_rational(n, d); }

// quadratic-residue oracle mod an odd prime: membership in the literal
// set of squares, no character theory
bool residue_oracle(const Int& x, const Int& p) {
    std::set<Int> squares;
    for (Int t = 1; t < p; ++t) squares.insert(t * t % p);
    Int r = x % p;
    if (r < 0) r += p;
    return squares.count(r) > 0;
}

// independent mod-2 tame symbol for odd p from the residue oracle
Int tame_oracle(const LocalUnit& a, const LocalUnit& b, const Int& p) {
    Int va = a.valuation(p), vb = b.valuation(p);
    // (-1)^{va vb} a^{vb} b^{-va} as a rational unit evaluated mod p
    LocalUnit unit = LocalUnit::from_rational(va * vb % 2 != 0 ? -1 : 1);
    LocalUnit ap = a, bp = b;
    for (Int i = 0; i < abs(vb); ++i) unit = vb > 0 ? unit * a : unit * a.inverse();
    for (Int i = 0; i < abs(va); ++i) unit = va > 0 ? unit * b.inverse() : unit * b;
    // strip the p-part introduced above
    LocalUnit strip = LocalUnit::from_rational(p);
    Int vp = unit.valuation(p);
    for (Int i = 0; i < abs(vp); ++i) unit = vp > 0 ? unit * strip.inverse() : unit * strip;
    return residue_oracle(unit.numerator() * unit.denominator(), p) ? Int(0) : Int(1);
}

}  // namespace

TEST_CASE("place constraints") {
    CHECK(real_place().N == 2);
    CHECK_NOTHROW(padic_place(7, 2));
    CHECK_NOTHROW(padic_place(7, 3));
    CHECK_NOTHROW(padic_place(7, 6));
    CHECK_NOTHROW(padic_place(5, 4));
    CHECK_NOTHROW(padic_place(2, 2));
    CHECK_THROWS_AS(padic_place(7, 4), std::invalid_argument);
    CHECK_THROWS_AS(padic_place(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(padic_place(6, 2), std::invalid_argument);
}

TEST_CASE("factored rationals") {
    LocalUnit x = u(-12, 20);
    CHECK(x.sign == -1);
    CHECK(x.numerator() == -3);
    CHECK(x.denominator() == 5);
    CHECK(x.valuation(3) == 1);
    CHECK(x.valuation(5) == -1);
    CHECK(x.valuation(2) == 0);
    CHECK((x * x.inverse()).factors.empty());
    CHECK(u(3, 5).residue_mod(7, 7) == 2);  // 3 * 5^{-1} = 3 * 3 = 9 = 2 mod 7
    CHECK_THROWS_AS(u(0), std::invalid_argument);
    CHECK(one_minus(u(3)) == u(-2));
    CHECK(one_minus(u(1, 2)) == u(1, 2));
    CHECK_THROWS_AS(one_minus(u(1)), std::invalid_argument);
}

TEST_CASE("real symbols") {
    Place r = real_place();
    CHECK(hilbert_symbol(u(-1), u(-1), r) == 1);
    CHECK(hilbert_symbol(u(-1), u(2), r) == 0);
    CHECK(hilbert_symbol(u(2), u(3), r) == 0);
    CHECK(hilbert_symbol(u(-2), u(-3), r) == 1);
}

TEST_CASE("tame symbols at p = 7") {
    Place v = padic_place(7, 2);
    CHECK(hilbert_symbol(u(3), u(7), v) == 1);   // 3 is a nonresidue mod 7
    CHECK(hilbert_symbol(u(2), u(7), v) == 0);   // 3^2 = 2 mod 7
    CHECK(hilbert_symbol(u(7), u(7), v) == 1);
    CHECK(hilbert_symbol(u(7), u(-1), v) == 1);
    CHECK(hilbert_symbol(u(2), u(3), v) == 0);   // both units
}

TEST_CASE("tame symbols match the residue-set oracle") {
    for (Int p : {Int(3), Int(5), Int(7), Int(11), Int(13)}) {
        Place v = padic_place(p, 2);
        std::vector<LocalUnit> sample{u(1), u(-1), u(2), u(-2), u(3), u(p), u(1, p), u(2 * p)};
        for (const LocalUnit& a : sample)
            for (const LocalUnit& b : sample) {
                INFO("p=", p, " a=", a.to_string(), " b=", b.to_string());
                CHECK(hilbert_symbol(a, b, v) == tame_oracle(a, b, p));
            }
    }
}

TEST_CASE("order four symbols at p = 5") {
    Place v = padic_place(5, 4);
    CHECK(hilbert_symbol(u(2), u(5), v) == 1);   // 2 is the fixed primitive root
    CHECK(hilbert_symbol(u(5), u(2), v) == 3);   // antisymmetry
    CHECK(hilbert_symbol(u(5), u(5), v) == 2);   // lands on -1
    CHECK(hilbert_symbol(u(5), u(-1), v) == 2);
}

TEST_CASE("dyadic symbols") {
    Place v = padic_place(2, 2);
    CHECK(hilbert_symbol(u(-1), u(-1), v) == 1);
    CHECK(hilbert_symbol(u(2), u(-1), v) == 0);
    CHECK(hilbert_symbol(u(2), u(3), v) == 1);   // 3 = +-3 mod 8
    CHECK(hilbert_symbol(u(2), u(7), v) == 0);   // 7 = -1 mod 8
    CHECK(hilbert_symbol(u(3), u(5), v) == 0);     // 5 = 1 mod 4
    CHECK(hilbert_symbol(u(2), u(2), v) == 0);
    CHECK(hilbert_symbol(u(3, 5), u(2), v) == 0);  // 3/5 = 7 = -1 mod 8
}

TEST_CASE("identity suite across places") {
    std::vector<LocalUnit> reals{u(2), u(-1), u(-2), u(1, 2), u(3), u(-3)};
    CHECK(symbol_identity_suite(real_place(), reals).ok);

    for (Int p = 3; p <= 50; ++p) {
        if (p != 3 && p != 5 && p != 7 && p != 11 && p != 13 && p != 17 && p != 19 && p != 23 &&
            p != 29 && p != 31 && p != 37 && p != 41 && p != 43 && p != 47)
            continue;
        std::vector<LocalUnit> sample{u(1), u(-1), u(2), u(3), u(p), u(1, p), u(-p)};
        SymbolSuiteReport rep = symbol_identity_suite(padic_place(p, 2), sample);
        INFO("p=", p, rep.failures.empty() ? "" : " first: " + rep.failures.front());
        CHECK(rep.ok);
    }
    for (Int p : {Int(5), Int(13)}) {
        std::vector<LocalUnit> sample{u(2), u(p), u(-1)};
        SymbolSuiteReport rep = symbol_identity_suite(padic_place(p, 4), sample);
        INFO("p=", p, rep.failures.empty() ? "" : " first: " + rep.failures.front());
        CHECK(rep.ok);
    }
    SymbolSuiteReport dyadic =
        symbol_identity_suite(padic_place(2, 2), {u(1), u(-1), u(2), u(3), u(5), u(1, 2)});
    CHECK(dyadic.ok);
}

TEST_CASE("torus cover group law") {
    Place v = padic_place(7, 2);
    IntMatrix c(2, 2);
    c.at(0, 1) = 1;  // e1-check tensor e2-check
    TorusCover cover = torus_cover(2, c, v);

    // commutator((x,1),(1,y)) recovers the symbol
    for (const Int& x : {Int(3), Int(7), Int(-1)})
        for (const Int& y : {Int(3), Int(7), Int(-1)})
            CHECK(cover.commutator({u(x), u(1)}, {u(1), u(y)}) ==
                  hilbert_symbol(u(x), u(y), v));

    // associativity on sampled triples
    std::vector<TorusCoverElement> pts{{{u(3), u(7)}, 1}, {{u(-1), u(2)}, 0}, {{u(7), u(1, 7)}, 1}};
    for (const auto& a : pts)
        for (const auto& b : pts)
            for (const auto& d : pts) {
                TorusCoverElement l = cover.mul(cover.mul(a, b), d);
                TorusCoverElement r = cover.mul(a, cover.mul(b, d));
                CHECK(l.phase == r.phase);
            }

    // inverses really invert
    for (const auto& a : pts) {
        TorusCoverElement e = cover.mul(a, cover.inverse(a));
        CHECK(e.phase == 0);
        for (const LocalUnit& x : e.base) CHECK(x.factors.empty());
    }
}

TEST_CASE("commutator sees only the alternating part") {
    Place v = padic_place(7, 2);
    IntMatrix c(2, 2);
    c.at(0, 1) = 1;
    IntMatrix sym = IntMatrix::from_rows({{1, 1}, {1, 1}});
    TorusCover cover = torus_cover(2, c, v);
    TorusCover shifted = torus_cover(2, c + sym, v);
    TorusCover symmetric = torus_cover(2, sym, v);
    TorusCover split = torus_cover(2, IntMatrix(2, 2), v);
    std::vector<std::vector<LocalUnit>> pts{{u(3), u(7)}, {u(-1), u(2)}, {u(7), u(2)}};
    for (const auto& x : pts)
        for (const auto& y : pts) {
            CHECK(cover.commutator(x, y) == shifted.commutator(x, y));
            CHECK(symmetric.commutator(x, y) == 0);
            CHECK(split.commutator(x, y) == 0);
        }
    // split cover multiplies phases additively
    TorusCoverElement a{{u(3), u(7)}, 1}, b{{u(2), u(-1)}, 1};
    CHECK(split.mul(a, b).phase == 0);

    CommutatorConventionReport rep = commutator_conventions(cover);
    CHECK(rep.alternating.at(0, 1) == 1);
    CHECK(rep.negated.at(0, 1) == 1);  // mod 2 the readings coincide
    CHECK_FALSE(rep.note.empty());
}

TEST_CASE("real signature ignores the form") {
    QuadForm q(1, 2);
    q.set(0, 0, 1);
    RealSignature s0 = real_signature(q, {0});
    CHECK(s0.trivial);
    RealSignature s1 = real_signature(q, {1});
    CHECK_FALSE(s1.trivial);
    CHECK(s1.sgn == std::vector<Int>{1});

    QuadForm q2(2, 2);
    RealSignature s2 = real_signature(q2, {1, 0});
    CHECK(s2.sgn == std::vector<Int>{1, 0});
    CHECK_FALSE(s2.trivial);

    QuadForm bad(1, 4);
    CHECK_THROWS_AS(real_signature(bad, {0}), std::invalid_argument);
}
