#include "metaplectic/root_data.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace meta {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int v = 0;
    for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * b[i];
    return v;
}

Int mod_reduce(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

using Pair = std::pair<std::vector<Int>, std::vector<Int>>;  // (coroot, root)

Pair reflect_pair(const Pair& p, const Pair& by) {
    const auto& [c, r] = p;
    const auto& [cb, rb] = by;
    std::vector<Int> nc(c.size()), nr(r.size());
    Int a = dot(rb, c);   // <root_by, coroot>
    Int b = dot(r, cb);   // <root, coroot_by>
    for (std::size_t i = 0; i < c.size(); ++i) nc[i] = c[i] - a * cb[i];
    for (std::size_t i = 0; i < r.size(); ++i) nr[i] = r[i] - b * rb[i];
    return {nc, nr};
}

// Closure of the simple pairs under the simple reflections.
std::vector<Pair> generate_pairs(const std::vector<Pair>& simple) {
    std::set<Pair> seen(simple.begin(), simple.end());
    std::vector<Pair> frontier(simple.begin(), simple.end());
    while (!frontier.empty()) {
        std::vector<Pair> next;
        for (const Pair& p : frontier)
            for (const Pair& s : simple) {
                Pair q = reflect_pair(p, s);
                if (seen.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
        if (seen.size() > 1000) throw std::runtime_error("root system generation did not close");
    }
    return {seen.begin(), seen.end()};
}

BasedRootDatum from_simple_pairs(std::size_t rank, std::vector<Pair> simple, std::string name) {
    BasedRootDatum rd;
    rd.rank = rank;
    rd.name = std::move(name);
    std::vector<Pair> all = generate_pairs(simple);
    for (const Pair& p : all) {
        auto it = std::find(simple.begin(), simple.end(), p);
        if (it != simple.end()) rd.simple.push_back(rd.coroots.size());
        rd.coroots.push_back(p.first);
        rd.roots.push_back(p.second);
    }
    // keep simple indices in the order the simple pairs were given
    std::vector<std::size_t> ordered;
    for (const Pair& s : simple)
        for (std::size_t k = 0; k < rd.coroots.size(); ++k)
            if (rd.coroots[k] == s.first && rd.roots[k] == s.second) ordered.push_back(k);
    rd.simple = std::move(ordered);
    return rd;
}

std::vector<Int> unit(std::size_t n, std::size_t i, const Int& v = 1) {
    std::vector<Int> e(n, 0);
    e[i] = v;
    return e;
}

// Cartan matrices with A(i,j) = value of simple root j on simple coroot i.
IntMatrix cartan_of_type(char type, std::size_t n) {
    auto chain = [&](IntMatrix& A) {
        for (std::size_t i = 0; i < n; ++i) {
            A.at(i, i) = 2;
            if (i + 1 < n) A.at(i, i + 1) = A.at(i + 1, i) = -1;
        }
    };
    IntMatrix A(n, n);
    switch (type) {
        case 'A':
            chain(A);
            return A;
        case 'B':
            if (n < 2) break;
            chain(A);
            A.at(n - 1, n - 2) = -2;
            return A;
        case 'C':
            if (n < 2) break;
            chain(A);
            A.at(n - 2, n - 1) = -2;
            return A;
        case 'D':
            if (n < 3) break;
            chain(A);
            A.at(n - 1, n - 2) = A.at(n - 2, n - 1) = 0;
            A.at(n - 1, n - 3) = A.at(n - 3, n - 1) = -1;
            return A;
        case 'E': {
            if (n < 6 || n > 8) break;
            // chain 0-2-3-4-...-(n-1), node 1 attached to 3
            for (std::size_t i = 0; i < n; ++i) A.at(i, i) = 2;
            auto link = [&](std::size_t i, std::size_t j) { A.at(i, j) = A.at(j, i) = -1; };
            link(0, 2);
            link(1, 3);
            for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
            return A;
        }
        case 'F':
            if (n != 4) break;
            chain(A);
            A.at(2, 1) = -2;
            A.at(1, 2) = -1;
            return A;
        case 'G':
            if (n != 2) break;
            A.at(0, 0) = A.at(1, 1) = 2;
            A.at(0, 1) = -1;
            A.at(1, 0) = -3;
            return A;
    }
    throw std::invalid_argument("no Cartan matrix of type " + std::string(1, type) + std::to_string(n));
}

// Simply connected form: Lambda = coroot lattice with the simple coroots
// as basis; simple root j has coordinates A(., j).
BasedRootDatum sc_from_cartan(const IntMatrix& A, const std::string& name) {
    std::size_t n = A.rows();
    std::vector<Pair> simple;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> root(n);
        for (std::size_t i = 0; i < n; ++i) root[i] = A.at(i, j);
        simple.push_back({unit(n, j), root});
    }
    return from_simple_pairs(n, std::move(simple), name);
}

// Adjoint form: Lambda = coweight lattice with the basis dual to the
// simple roots; simple coroot i has coordinates A(i, .).
BasedRootDatum ad_from_cartan(const IntMatrix& A, const std::string& name) {
    std::size_t n = A.rows();
    std::vector<Pair> simple;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> coroot(n);
        for (std::size_t j = 0; j < n; ++j) coroot[j] = A.at(i, j);
        simple.push_back({coroot, unit(n, i)});
    }
    return from_simple_pairs(n, std::move(simple), name);
}

BasedRootDatum gl_datum(std::size_t n) {
    BasedRootDatum rd;
    rd.rank = n;
    rd.name = "GL" + std::to_string(n);
    std::vector<Pair> simple;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Int> v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        simple.push_back({v, v});
    }
    if (simple.empty()) {
        rd.rank = n;
        return rd;
    }
    return from_simple_pairs(n, std::move(simple), rd.name);
}

BasedRootDatum so_datum(std::size_t m) {
    // standard basis of the maximal torus of SO_m, rank n = floor(m/2)
    std::size_t n = m / 2;
    std::string name = "SO" + std::to_string(m);
    std::vector<Pair> simple;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Int> v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        simple.push_back({v, v});
    }
    if (m % 2 == 1) {
        if (n >= 1) {
            std::vector<Int> c(n, 0), r(n, 0);
            c[n - 1] = 2;
            r[n - 1] = 1;
            simple.push_back({c, r});
        }
    } else {
        if (n >= 2) {
            std::vector<Int> v(n, 0);
            v[n - 2] = 1;
            v[n - 1] = 1;
            simple.push_back({v, v});
        }
    }
    if (simple.empty()) {
        BasedRootDatum rd;
        rd.rank = n;
        rd.name = name;
        return rd;
    }
    return from_simple_pairs(n, std::move(simple), name);
}

BasedRootDatum product(const BasedRootDatum& a, const BasedRootDatum& b);

BasedRootDatum catalog_factor(const std::string& name) {
    auto num_at = [&](std::size_t pos) -> std::size_t {
        if (pos >= name.size()) throw std::invalid_argument("catalog: bad name " + name);
        return std::stoul(name.substr(pos));
    };
    if (name.rfind("SL", 0) == 0) {
        std::size_t n = num_at(2);
        if (n < 2) throw std::invalid_argument("catalog: " + name);
        auto rd = sc_from_cartan(cartan_of_type('A', n - 1), name);
        return rd;
    }
    if (name.rfind("PGL", 0) == 0) {
        std::size_t n = num_at(3);
        if (n < 2) throw std::invalid_argument("catalog: " + name);
        return ad_from_cartan(cartan_of_type('A', n - 1), name);
    }
    if (name.rfind("GL", 0) == 0) return gl_datum(num_at(2));
    if (name.rfind("Spin", 0) == 0) {
        std::size_t m = num_at(4);
        std::size_t n = m / 2;
        char t = m % 2 == 1 ? 'B' : 'D';
        if (m == 3) return sc_from_cartan(cartan_of_type('A', 1), name);
        if (m == 4) {
            auto a1 = sc_from_cartan(cartan_of_type('A', 1), name);
            auto rd = product(a1, a1);
            rd.name = name;
            return rd;
        }
        if (m == 5) return sc_from_cartan(cartan_of_type('C', 2), name);
        if (m == 6) return sc_from_cartan(cartan_of_type('A', 3), name);
        if (m < 7) throw std::invalid_argument("catalog: " + name);
        return sc_from_cartan(cartan_of_type(t, n), name);
    }
    if (name.rfind("Sp", 0) == 0) {
        std::size_t m = num_at(2);
        if (m % 2 != 0 || m < 2) throw std::invalid_argument("catalog: " + name);
        std::size_t n = m / 2;
        auto A = n == 1 ? cartan_of_type('A', 1) : cartan_of_type('C', n);
        return sc_from_cartan(A, name);
    }
    if (name.rfind("SO", 0) == 0) return so_datum(num_at(2));
    // Cartan-type names, simply connected unless suffixed "ad"
    if (!name.empty() && name[0] >= 'A' && name[0] <= 'G') {
        bool adjoint = name.size() > 2 && name.substr(name.size() - 2) == "ad";
        std::string core = adjoint ? name.substr(0, name.size() - 2) : name;
        std::size_t n = std::stoul(core.substr(1));
        IntMatrix A = cartan_of_type(core[0], n);
        return adjoint ? ad_from_cartan(A, name) : sc_from_cartan(A, name);
    }
    throw std::invalid_argument("catalog: unknown name " + name);
}

BasedRootDatum product(const BasedRootDatum& a, const BasedRootDatum& b) {
    BasedRootDatum rd;
    rd.rank = a.rank + b.rank;
    rd.name = a.name + "x" + b.name;
    auto pad = [&](const std::vector<Int>& v, bool left) {
        std::vector<Int> w(rd.rank, 0);
        for (std::size_t i = 0; i < v.size(); ++i) w[left ? i : a.rank + i] = v[i];
        return w;
    };
    for (std::size_t k = 0; k < a.coroots.size(); ++k) {
        rd.coroots.push_back(pad(a.coroots[k], true));
        rd.roots.push_back(pad(a.roots[k], true));
    }
    for (std::size_t k = 0; k < b.coroots.size(); ++k) {
        rd.coroots.push_back(pad(b.coroots[k], false));
        rd.roots.push_back(pad(b.roots[k], false));
    }
    for (std::size_t s : a.simple) rd.simple.push_back(s);
    for (std::size_t s : b.simple) rd.simple.push_back(a.coroots.size() + s);
    return rd;
}

}  // namespace

Int BasedRootDatum::pairing(std::size_t root_ix, const std::vector<Int>& lambda) const {
    return dot(roots[root_ix], lambda);
}

IntMatrix BasedRootDatum::reflection(std::size_t k) const {
    IntMatrix S = IntMatrix::identity(rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) S.at(i, j) -= coroots[k][i] * roots[k][j];
    return S;
}

IntMatrix BasedRootDatum::cartan_matrix() const {
    IntMatrix A(simple.size(), simple.size());
    for (std::size_t i = 0; i < simple.size(); ++i)
        for (std::size_t j = 0; j < simple.size(); ++j)
            A.at(i, j) = pairing(simple[j], coroots[simple[i]]);
    return A;
}

std::vector<std::string> validate(const BasedRootDatum& rd) {
    std::vector<std::string> bad;
    if (rd.coroots.size() != rd.roots.size()) {
        bad.push_back("coroot and root lists have different lengths");
        return bad;
    }
    for (const auto& v : rd.coroots)
        if (v.size() != rd.rank) bad.push_back("coroot has wrong dimension");
    for (const auto& v : rd.roots)
        if (v.size() != rd.rank) bad.push_back("root has wrong dimension");
    if (!bad.empty()) return bad;
    for (std::size_t s : rd.simple)
        if (s >= rd.coroots.size()) bad.push_back("simple index out of range");
    if (!bad.empty()) return bad;

    for (std::size_t k = 0; k < rd.coroots.size(); ++k) {
        Int p = rd.pairing(k, rd.coroots[k]);
        if (p != 2)
            bad.push_back("pair " + std::to_string(k) + " has <root, coroot> = " + p.str() + " != 2");
    }

    std::set<Pair> all;
    for (std::size_t k = 0; k < rd.coroots.size(); ++k) {
        if (!all.insert({rd.coroots[k], rd.roots[k]}).second)
            bad.push_back("duplicate pair " + std::to_string(k));
    }
    for (std::size_t k = 0; k < rd.coroots.size(); ++k) {
        std::vector<Int> twice(rd.rank);
        for (std::size_t i = 0; i < rd.rank; ++i) twice[i] = 2 * rd.coroots[k][i];
        for (std::size_t l = 0; l < rd.coroots.size(); ++l)
            if (rd.coroots[l] == twice) bad.push_back("not reduced at pair " + std::to_string(k));
    }
    for (std::size_t k = 0; k < rd.coroots.size() && bad.size() < 20; ++k) {
        Pair by{rd.coroots[k], rd.roots[k]};
        for (std::size_t l = 0; l < rd.coroots.size(); ++l) {
            Pair im = reflect_pair({rd.coroots[l], rd.roots[l]}, by);
            if (!all.count(im))
                bad.push_back("reflection " + std::to_string(k) + " does not permute the pairs");
        }
    }
    if (bad.empty() && !rd.coroots.empty()) {
        std::vector<Pair> simple_pairs;
        for (std::size_t s : rd.simple) simple_pairs.push_back({rd.coroots[s], rd.roots[s]});
        if (simple_pairs.empty()) {
            bad.push_back("nonempty root system with no simple pairs");
        } else {
            try {
                std::vector<Pair> orbit = generate_pairs(simple_pairs);
                if (std::set<Pair>(orbit.begin(), orbit.end()) != all)
                    bad.push_back("pairs are not the reflection orbit of the simple pairs");
            } catch (const std::exception& e) {
                bad.push_back(e.what());
            }
        }
    }
    return bad;
}

BasedRootDatum catalog(const std::string& name) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : name) {
        if (c == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    BasedRootDatum rd = catalog_factor(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) rd = product(rd, catalog_factor(parts[i]));
    rd.name = name;
    std::vector<std::string> bad = validate(rd);
    if (!bad.empty()) throw std::logic_error("catalog produced invalid datum: " + bad[0]);
    return rd;
}

WeylGroup weyl_group(const BasedRootDatum& rd, std::size_t cap) {
    WeylGroup W;
    std::vector<IntMatrix> gens;
    for (std::size_t s : rd.simple) gens.push_back(rd.reflection(s));

    std::map<std::vector<Int>, std::size_t> index;
    auto key = [&](const IntMatrix& m) {
        std::vector<Int> k;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m.at(i, j));
        return k;
    };
    auto insert = [&](const IntMatrix& m, int len) -> std::size_t {
        auto [it, fresh] = index.insert({key(m), W.elements.size()});
        if (fresh) {
            W.elements.push_back(m);
            W.lengths.push_back(len);
        }
        return it->second;
    };

    insert(IntMatrix::identity(rd.rank), 0);
    std::vector<std::size_t> frontier{0};
    int len = 0;
    while (!frontier.empty() && W.elements.size() <= cap) {
        ++len;
        std::vector<std::size_t> next;
        for (std::size_t ix : frontier)
            for (const IntMatrix& g : gens) {
                IntMatrix m = g * W.elements[ix];
                std::size_t before = W.elements.size();
                std::size_t at = insert(m, len);
                if (at == before) next.push_back(at);
                if (W.elements.size() > cap) {
                    W.capped = true;
                    break;
                }
            }
        frontier = std::move(next);
    }
    if (W.capped) {
        // rebuild only the strata the callers need
        WeylGroup small;
        small.capped = true;
        std::map<std::vector<Int>, std::size_t> ix2;
        auto ins2 = [&](const IntMatrix& m, int l) -> std::size_t {
            auto [it, fresh] = ix2.insert({key(m), small.elements.size()});
            if (fresh) {
                small.elements.push_back(m);
                small.lengths.push_back(l);
            }
            return it->second;
        };
        ins2(IntMatrix::identity(rd.rank), 0);
        for (const IntMatrix& g : gens) ins2(g, 1);
        for (const IntMatrix& g : gens)
            for (const IntMatrix& h : gens) {
                IntMatrix m = g * h;
                if (!ix2.count(key(m))) ins2(m, 2);
            }
        W = std::move(small);
        index = std::move(ix2);
    }

    for (std::size_t i = 0; i < gens.size(); ++i) W.simple_index.push_back(index.at(key(gens[i])));
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> facts;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            std::size_t at = index.at(key(gens[i] * gens[j]));
            if (W.lengths[at] == 2) facts[at].push_back({i, j});
        }
    for (auto& [el, f] : facts) W.length2.push_back({el, std::move(f)});
    return W;
}

bool WeylGroup::bruhat_leq(std::size_t u, std::size_t w) const {
    if (lengths[u] > 2 || lengths[w] > 2)
        throw std::invalid_argument("bruhat_leq: only lengths <= 2 are ordered");
    if (u == w) return true;
    if (lengths[u] >= lengths[w]) return false;
    if (lengths[u] == 0) return true;
    if (lengths[w] == 2) {
        for (const auto& l2 : length2)
            if (l2.element == w)
                for (auto [i, j] : l2.factorizations)
                    if (simple_index[i] == u || simple_index[j] == u) return true;
    }
    return false;
}

Companions companions(const BasedRootDatum& rd) {
    Companions out;
    // lattice basis of the span of the coroots
    IntMatrix C(rd.rank, rd.coroots.size());
    for (std::size_t k = 0; k < rd.coroots.size(); ++k)
        for (std::size_t i = 0; i < rd.rank; ++i) C.at(i, k) = rd.coroots[k][i];
    SmithResult s = smith_normal_form(C);
    IntMatrix UinvD = s.Uinv * s.D;
    out.incl_sc = UinvD.column_range(0, s.rank);
    out.pi1_presentation = out.incl_sc;
    out.pi1 = cokernel_group(out.incl_sc);

    SmithResult sb = smith_normal_form(out.incl_sc);
    out.sc.rank = s.rank;
    out.sc.name = rd.name + ".sc";
    for (std::size_t k = 0; k < rd.coroots.size(); ++k) {
        IntMatrix col(rd.rank, 1);
        for (std::size_t i = 0; i < rd.rank; ++i) col.at(i, 0) = rd.coroots[k][i];
        IntMatrix x = solve_exact(sb, col);
        std::vector<Int> c(s.rank), r(s.rank);
        for (std::size_t i = 0; i < s.rank; ++i) c[i] = x.at(i, 0);
        for (std::size_t i = 0; i < s.rank; ++i) {
            Int v = 0;
            for (std::size_t t = 0; t < rd.rank; ++t) v += rd.roots[k][t] * out.incl_sc.at(t, i);
            r[i] = v;
        }
        out.sc.coroots.push_back(std::move(c));
        out.sc.roots.push_back(std::move(r));
    }
    out.sc.simple = rd.simple;

    out.to_ad = IntMatrix(rd.simple.size(), rd.rank);
    for (std::size_t i = 0; i < rd.simple.size(); ++i)
        for (std::size_t t = 0; t < rd.rank; ++t) out.to_ad.at(i, t) = rd.roots[rd.simple[i]][t];
    out.ad = rd.simple.empty() ? BasedRootDatum{}
                               : ad_from_cartan(rd.cartan_matrix(), rd.name + ".ad");
    out.ad.name = rd.name + ".ad";
    return out;
}

namespace {

// integer pullback of packed upper-triangular coefficients along w
std::vector<Int> pullback_coeffs(const std::vector<Int>& coeffs, std::size_t rank,
                                 const IntMatrix& w) {
    auto eval = [&](const std::vector<Int>& v) {
        Int acc = 0;
        std::size_t c = 0;
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = i; j < rank; ++j) acc += coeffs[c++] * v[i] * v[j];
        return acc;
    };
    std::vector<std::vector<Int>> img(rank, std::vector<Int>(rank));
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t i = 0; i < rank; ++i) img[k][i] = w.at(i, k);
    std::vector<Int> out;
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t l = k; l < rank; ++l) {
            if (k == l) {
                out.push_back(eval(img[k]));
            } else {
                std::vector<Int> sum(rank);
                for (std::size_t i = 0; i < rank; ++i) sum[i] = img[k][i] + img[l][i];
                out.push_back(eval(sum) - eval(img[k]) - eval(img[l]));
            }
        }
    return out;
}

std::vector<Int> packed_coeffs(const QuadForm& q) {
    std::vector<Int> c;
    for (std::size_t i = 0; i < q.rank(); ++i)
        for (std::size_t j = i; j < q.rank(); ++j) c.push_back(q.coeff(i, j));
    return c;
}

QuadForm form_from_packed(const std::vector<Int>& c, std::size_t rank, const Int& N) {
    QuadForm q(rank, N);
    std::size_t ix = 0;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i; j < rank; ++j) q.set(i, j, c[ix++]);
    return q;
}

// rows of the strictness system: one row per (simple pair, basis vector)
IntMatrix strictness_matrix(const BasedRootDatum& rd) {
    std::size_t r = rd.rank, s = r * (r + 1) / 2;
    IntMatrix M(rd.simple.size() * r, s);
    std::size_t row = 0;
    for (std::size_t sx : rd.simple) {
        const auto& c = rd.coroots[sx];
        const auto& rt = rd.roots[sx];
        for (std::size_t t = 0; t < r; ++t, ++row) {
            std::size_t col = 0;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = i; j < r; ++j, ++col) {
                    Int v = 0;
                    if (i == j) {
                        if (i == t) v += 2 * c[i];
                        v -= rt[t] * c[i] * c[i];
                    } else {
                        if (j == t) v += c[i];
                        if (i == t) v += c[j];
                        v -= rt[t] * c[i] * c[j];
                    }
                    M.at(row, col) = v;
                }
        }
    }
    return M;
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

bool same_lattice(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows() != B.rows()) return false;
    SmithResult sa = smith_normal_form(A), sb = smith_normal_form(B);
    IntMatrix x;
    return try_solve(sa, B, x) && try_solve(sb, A, x);
}

std::size_t dynkin_components(const IntMatrix& A) {
    std::size_t n = A.rows();
    std::vector<std::size_t> comp(n, n);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] != n) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = count;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v)
                if (comp[v] == n && A.at(u, v) != 0) {
                    comp[v] = count;
                    stack.push_back(v);
                }
        }
        ++count;
    }
    return count;
}

}  // namespace

QuadForm quad_pullback(const QuadForm& q, const IntMatrix& w) {
    if (w.rows() != q.rank() || w.cols() != q.rank())
        throw std::invalid_argument("quad_pullback: size mismatch");
    return form_from_packed(pullback_coeffs(packed_coeffs(q), q.rank(), w), q.rank(), q.modulus());
}

bool is_strict(const BasedRootDatum& rd, const QuadForm& q) {
    if (q.rank() != rd.rank) throw std::invalid_argument("is_strict: lattice mismatch");
    const Int& N = q.modulus();
    auto holds_at = [&](std::size_t k) {
        const auto& alpha = rd.coroots[k];
        Int qa = q.eval_lift(alpha);
        BilinearFormModN b = polarize(q);
        for (std::size_t t = 0; t < rd.rank; ++t) {
            std::vector<Int> e(rd.rank, 0);
            e[t] = 1;
            Int lhs = b.eval(alpha, e);
            Int rhs = mod_reduce(rd.roots[k][t] * qa, N);
            if (lhs != rhs) return false;
        }
        return true;
    };
    bool simple_ok = true;
    for (std::size_t s : rd.simple) simple_ok = simple_ok && holds_at(s);
    bool all_ok = true;
    for (std::size_t k = 0; k < rd.coroots.size(); ++k) all_ok = all_ok && holds_at(k);
    if (simple_ok != all_ok)
        throw std::logic_error("is_strict: simple pairs do not determine the condition on Phi");
    return simple_ok;
}

StrictForms enumerate_strict(const BasedRootDatum& rd, const Int& N) {
    if (N < 1) throw std::invalid_argument("enumerate_strict: N must be >= 1");
    StrictForms out;
    std::size_t s = rd.rank * (rd.rank + 1) / 2;
    IntMatrix M = strictness_matrix(rd);
    IntMatrix K = kernel_mod(M, N);
    IntMatrix X = solve_exact(K, IntMatrix::identity(s).scaled(N));
    out.group = cokernel_group(X);
    for (std::size_t j = 0; j < K.cols(); ++j) {
        std::vector<Int> c(s);
        for (std::size_t i = 0; i < s; ++i) c[i] = mod_reduce(K.at(i, j), N);
        QuadForm q = form_from_packed(c, rd.rank, N);
        if (!q.is_zero()) out.generators.push_back(std::move(q));
    }

    if (rd.simple.empty()) return out;
    Companions comp = companions(rd);
    if (!comp.pi1.is_trivial()) return out;

    out.sc_lemma_checked = true;
    IntMatrix A = rd.cartan_matrix();
    out.simple_factors = dynkin_components(A);
    std::vector<Int> orders(out.simple_factors, N);
    bool ok = out.group == FgAbelianGroup::from_cyclic_orders(orders);

    // W-invariant integral forms, via invariance under the simple reflections
    IntMatrix stacked(0, s);
    bool first = true;
    for (std::size_t sx : rd.simple) {
        IntMatrix w = rd.reflection(sx);
        IntMatrix P(s, s);
        for (std::size_t j = 0; j < s; ++j) {
            std::vector<Int> basis(s, 0);
            basis[j] = 1;
            std::vector<Int> img = pullback_coeffs(basis, rd.rank, w);
            for (std::size_t i = 0; i < s; ++i) P.at(i, j) = img[i];
        }
        IntMatrix PmI = P - IntMatrix::identity(s);
        stacked = first ? PmI : stacked.vstack(PmI);
        first = false;
    }
    IntMatrix Kw = kernel_basis(stacked);
    ok = ok && Kw.cols() == out.simple_factors;
    for (std::size_t j = 0; j < Kw.cols(); ++j) {
        std::vector<Int> c(s);
        for (std::size_t i = 0; i < s; ++i) c[i] = Kw.at(i, j);
        ok = ok && is_strict(rd, form_from_packed(c, rd.rank, N));
    }
    ok = ok && same_lattice(Kw.hstack(IntMatrix::identity(s).scaled(N)), K);
    out.sc_lemma_ok = ok;
    return out;
}

}  // namespace meta
