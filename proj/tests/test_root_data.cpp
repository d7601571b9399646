#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metaplectic/root_data.hpp"

using namespace meta;

TEST_CASE("catalog entries validate") {
    for (const char* name : {"SL2", "SL3", "GL2", "GL3", "PGL2", "PGL3", "Sp4", "Sp6", "SO3",
                             "SO4", "SO5", "SO7", "SO8", "Spin5", "Spin7", "Spin8", "A1", "A2",
                             "B2", "C2", "G2", "A2ad", "B2ad", "A1xA1", "SL2xPGL2"}) {
        INFO(name);
        BasedRootDatum rd = catalog(name);
        CHECK(validate(rd).empty());
    }
    CHECK_THROWS(catalog("XYZ9"));
    CHECK_THROWS(catalog("E9"));
}

TEST_CASE("root counts of small systems") {
    CHECK(catalog("SL2").coroots.size() == 2);
    CHECK(catalog("A2").coroots.size() == 6);
    CHECK(catalog("B2").coroots.size() == 8);
    CHECK(catalog("G2").coroots.size() == 12);
    CHECK(catalog("GL2").coroots.size() == 2);
    CHECK(catalog("SO8").coroots.size() == 24);
    CHECK(catalog("A1xA1").coroots.size() == 4);
}

TEST_CASE("validate reports broken data") {
    BasedRootDatum rd = catalog("SL2");
    rd.coroots[0][0] *= 2;
    auto bad = validate(rd);
    CHECK_FALSE(bad.empty());

    BasedRootDatum a2 = catalog("A2");
    a2.coroots.pop_back();
    a2.roots.pop_back();
    CHECK_FALSE(validate(a2).empty());
}

TEST_CASE("GL2 and PGL2 conventions") {
    BasedRootDatum gl2 = catalog("GL2");
    CHECK(gl2.rank == 2);
    CHECK(gl2.coroots[gl2.simple[0]] == std::vector<Int>{1, -1});
    CHECK(gl2.roots[gl2.simple[0]] == std::vector<Int>{1, -1});

    BasedRootDatum pgl2 = catalog("PGL2");
    CHECK(pgl2.rank == 1);
    CHECK(pgl2.coroots[pgl2.simple[0]] == std::vector<Int>{2});
    CHECK(pgl2.roots[pgl2.simple[0]] == std::vector<Int>{1});
}

TEST_CASE("weyl groups of rank two systems") {
    CHECK(weyl_group(catalog("SL2")).size() == 2);
    CHECK(weyl_group(catalog("A2")).size() == 6);
    CHECK(weyl_group(catalog("B2")).size() == 8);
    CHECK(weyl_group(catalog("G2")).size() == 12);
    CHECK(weyl_group(catalog("A1xA1")).size() == 4);

    WeylGroup W = weyl_group(catalog("A2"));
    std::size_t by_len[3] = {0, 0, 0};
    for (int l : W.lengths)
        if (l <= 2) ++by_len[l];
    CHECK(by_len[0] == 1);
    CHECK(by_len[1] == 2);
    CHECK(by_len[2] == 2);
    CHECK(W.length2.size() == 2);
    for (const auto& l2 : W.length2) CHECK(l2.factorizations.size() == 1);
}

TEST_CASE("orthogonal simple reflections commute and share a length two element") {
    WeylGroup W = weyl_group(catalog("A1xA1"));
    REQUIRE(W.length2.size() == 1);
    CHECK(W.length2[0].factorizations.size() == 2);
}

TEST_CASE("bruhat order on the small strata") {
    WeylGroup W = weyl_group(catalog("A2"));
    std::size_t id = 0;
    for (const auto& l2 : W.length2) {
        CHECK(W.bruhat_leq(id, l2.element));
        for (auto [i, j] : l2.factorizations) {
            CHECK(W.bruhat_leq(W.simple_index[i], l2.element));
            CHECK(W.bruhat_leq(W.simple_index[j], l2.element));
        }
    }
    CHECK_FALSE(W.bruhat_leq(W.simple_index[0], W.simple_index[1]));
}

TEST_CASE("weyl group respects the size cap") {
    WeylGroup W = weyl_group(catalog("G2"), 5);
    CHECK(W.capped);
    CHECK(W.simple_index.size() == 2);
    for (const auto& l2 : W.length2) CHECK(W.lengths[l2.element] == 2);
    // the length <= 2 strata are full: 1 + 2 + 2 for G2
    CHECK(W.size() == 5);
}

TEST_CASE("companions and fundamental groups") {
    Companions gl2 = companions(catalog("GL2"));
    CHECK(gl2.pi1 == FgAbelianGroup(1));
    CHECK(validate(gl2.sc).empty());
    CHECK(validate(gl2.ad).empty());
    CHECK(gl2.sc.rank == 1);

    Companions sl2 = companions(catalog("SL2"));
    CHECK(sl2.pi1.is_trivial());

    Companions pgl2 = companions(catalog("PGL2"));
    CHECK(pgl2.pi1 == FgAbelianGroup::from_cyclic_orders({2}));

    Companions so8 = companions(catalog("SO8"));
    CHECK(so8.pi1 == FgAbelianGroup::from_cyclic_orders({2}));

    Companions sl3 = companions(catalog("PGL3"));
    CHECK(sl3.pi1 == FgAbelianGroup::from_cyclic_orders({3}));
}

TEST_CASE("sc companion is simply connected") {
    for (const char* name : {"GL2", "PGL2", "SO5", "SO8", "GL3", "B2ad"}) {
        INFO(name);
        Companions c = companions(catalog(name));
        CHECK(companions(c.sc).pi1.is_trivial());
        // pi1 of the adjoint companion is the coweight/root quotient,
        // presented by the Cartan matrix
        CHECK(companions(c.ad).pi1 == cokernel_group(c.ad.cartan_matrix()));
    }
}

TEST_CASE("strictness in rank one and for GL2") {
    BasedRootDatum sl2 = catalog("SL2");
    for (Int v = 0; v < 6; ++v) {
        QuadForm q(1, 6);
        q.set(0, 0, v);
        CHECK(is_strict(sl2, q));
    }

    BasedRootDatum gl2 = catalog("GL2");
    for (Int a = 0; a < 3; ++a)
        for (Int b = 0; b < 3; ++b)
            for (Int c = 0; c < 3; ++c) {
                QuadForm q(2, 3);
                q.set(0, 0, a);
                q.set(0, 1, b);
                q.set(1, 1, c);
                CHECK(is_strict(gl2, q) == (a == c));
            }

    QuadForm zero(2, 4);
    CHECK(is_strict(gl2, zero));
    CHECK_THROWS(is_strict(sl2, zero));
}

TEST_CASE("strict groups of the catalog examples") {
    for (Int N : {Int(2), Int(3), Int(5), Int(12)}) {
        INFO("N ", N);
        StrictForms sl2 = enumerate_strict(catalog("SL2"), N);
        CHECK(sl2.group == FgAbelianGroup::from_cyclic_orders({N}));
        CHECK(sl2.sc_lemma_checked);
        CHECK(sl2.sc_lemma_ok);

        StrictForms gl2 = enumerate_strict(catalog("GL2"), N);
        CHECK(gl2.group == FgAbelianGroup::from_cyclic_orders({N, N}));

        StrictForms two = enumerate_strict(catalog("SL2xSL2"), N);
        CHECK(two.group == FgAbelianGroup::from_cyclic_orders({N, N}));
        CHECK(two.sc_lemma_checked);
        CHECK(two.sc_lemma_ok);
        CHECK(two.simple_factors == 2);
    }
}

TEST_CASE("strict generators are strict and form a subgroup") {
    for (const char* name : {"SL2", "GL2", "B2", "G2", "PGL2"}) {
        for (Int N : {Int(2), Int(4), Int(6)}) {
            INFO(name, " N ", N);
            BasedRootDatum rd = catalog(name);
            StrictForms st = enumerate_strict(rd, N);
            QuadForm zero(rd.rank, N);
            CHECK(is_strict(rd, zero));
            for (const QuadForm& g : st.generators) CHECK(is_strict(rd, g));
            // closed under addition
            for (const QuadForm& g : st.generators)
                for (const QuadForm& h : st.generators) {
                    QuadForm sum(rd.rank, N);
                    for (std::size_t i = 0; i < rd.rank; ++i)
                        for (std::size_t j = i; j < rd.rank; ++j)
                            sum.set(i, j, g.coeff(i, j) + h.coeff(i, j));
                    CHECK(is_strict(rd, sum));
                }
        }
    }
}

TEST_CASE("strict implies invariant under the weyl action") {
    for (const char* name : {"SL2", "GL2", "A2", "B2", "G2"}) {
        INFO(name);
        BasedRootDatum rd = catalog(name);
        WeylGroup W = weyl_group(rd);
        for (Int N : {Int(2), Int(3), Int(4)}) {
            StrictForms st = enumerate_strict(rd, N);
            for (const QuadForm& g : st.generators)
                for (const IntMatrix& w : W.elements) CHECK(quad_pullback(g, w) == g);
        }
    }
}

TEST_CASE("invariance does not imply strictness") {
    // Sp4 with N = 2, coroot basis: a^2 + ab is invariant but not strict
    BasedRootDatum sp4 = catalog("Sp4");
    QuadForm q(2, 2);
    q.set(0, 0, 1);
    q.set(0, 1, 1);
    WeylGroup W = weyl_group(sp4);
    for (const IntMatrix& w : W.elements) CHECK(quad_pullback(q, w) == q);
    CHECK_FALSE(is_strict(sp4, q));

    // mod 4: some invariant form is not strict, and doubling always is
    bool found_witness = false;
    for (Int code = 0; code < 64; ++code) {
        QuadForm q4(2, 4);
        Int rem = code;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = i; j < 2; ++j) {
                q4.set(i, j, rem % 4);
                rem /= 4;
            }
        bool invariant = true;
        for (const IntMatrix& w : W.elements)
            invariant = invariant && quad_pullback(q4, w) == q4;
        if (invariant && !is_strict(sp4, q4)) found_witness = true;
    }
    CHECK(found_witness);
}

TEST_CASE("doubling a weyl invariant form is always strict") {
    for (const char* name : {"Sp4", "B2", "G2", "GL2", "B2ad"}) {
        for (Int N : {Int(2), Int(4), Int(6)}) {
            INFO(name, " N ", N);
            BasedRootDatum rd = catalog(name);
            WeylGroup W = weyl_group(rd);
            // scan all forms in small cases, otherwise the strict generators
            std::size_t s = rd.rank * (rd.rank + 1) / 2;
            Int total = 1;
            for (std::size_t i = 0; i < s; ++i) total *= N;
            if (total > 300) continue;
            for (Int code = 0; code < total; ++code) {
                QuadForm q(rd.rank, N);
                Int rem = code;
                for (std::size_t i = 0; i < rd.rank; ++i)
                    for (std::size_t j = i; j < rd.rank; ++j) {
                        q.set(i, j, rem % N);
                        rem /= N;
                    }
                bool invariant = true;
                for (std::size_t sx : rd.simple)
                    invariant = invariant && quad_pullback(q, rd.reflection(sx)) == q;
                if (!invariant) continue;
                QuadForm dq(rd.rank, N);
                for (std::size_t i = 0; i < rd.rank; ++i)
                    for (std::size_t j = i; j < rd.rank; ++j) dq.set(i, j, 2 * q.coeff(i, j));
                CHECK(is_strict(rd, dq));
            }
        }
    }
}
