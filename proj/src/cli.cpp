#include "metaplectic/cli.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "metaplectic/cosimplicial.hpp"
#include "metaplectic/picard_ext.hpp"

#include <CLI11.hpp>

namespace meta::cli {

namespace {

Int mod_reduce(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

std::string vec_str(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    return os.str();
}

std::string vecvec_str(const std::vector<std::vector<Int>>& vs) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? ", " : "") << vec_str(vs[i]);
    os << "]";
    return os.str();
}

std::string matrix_cols_str(const IntMatrix& m) {
    std::vector<std::vector<Int>> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return vecvec_str(cols);
}

// single-line value scanner with column tracking
struct LineScanner {
    const std::string& s;
    std::size_t line, pos = 0;

    void skip_space() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line, pos + 1, what); }
    void expect(char c) {
        skip_space();
        if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    bool peek(char c) {
        skip_space();
        return pos < s.size() && s[pos] == c;
    }
    Int integer() {
        skip_space();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected an integer");
        return Int(s.substr(start, pos - start));
    }
    std::vector<Int> int_vector() {
        expect('[');
        std::vector<Int> out;
        if (!peek(']'))
            while (true) {
                out.push_back(integer());
                if (peek(']')) break;
                expect(',');
            }
        expect(']');
        return out;
    }
    std::vector<std::vector<Int>> vector_list() {
        expect('[');
        std::vector<std::vector<Int>> out;
        if (!peek(']'))
            while (true) {
                out.push_back(int_vector());
                if (peek(']')) break;
                expect(',');
            }
        expect(']');
        return out;
    }
    void end() {
        skip_space();
        if (pos < s.size()) fail("trailing characters");
    }
};

std::string report_header(const std::string& command) {
    return "metaplectic-report v1\ncommand: " + command + "\n";
}

std::string finish(std::string body, bool ok) {
    body += std::string("result: ") + (ok ? "pass" : "fail") + "\n";
    return body;
}

}  // namespace

BasedRootDatum parse_root_datum(const std::string& text) {
    BasedRootDatum rd;
    bool have_name = false, have_rank = false, have_coroots = false, have_roots = false,
         have_simple = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool any = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        any = true;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, 1, "expected 'key: value'");
        std::string key = line.substr(0, colon);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        std::string value = line.substr(colon + 1);
        LineScanner sc{value, lineno};
        if (key == "name") {
            std::size_t a = value.find_first_not_of(" \t");
            rd.name = a == std::string::npos ? "" : value.substr(a);
            rd.name.erase(rd.name.find_last_not_of(" \t\r") + 1);
            have_name = true;
        } else if (key == "rank") {
            rd.rank = sc.integer().convert_to<std::size_t>();
            sc.end();
            have_rank = true;
        } else if (key == "coroots") {
            rd.coroots = sc.vector_list();
            sc.end();
            have_coroots = true;
        } else if (key == "roots") {
            rd.roots = sc.vector_list();
            sc.end();
            have_roots = true;
        } else if (key == "simple") {
            for (const Int& v : sc.int_vector()) {
                if (v < 0) throw ParseError(lineno, 1, "simple indices must be nonnegative");
                rd.simple.push_back(v.convert_to<std::size_t>());
            }
            sc.end();
            have_simple = true;
        } else {
            throw ParseError(lineno, 1, "unknown field '" + key + "'");
        }
    }
    if (!any) throw ParseError(1, 1, "empty file");
    if (!have_name || !have_rank || !have_coroots || !have_roots || !have_simple)
        throw ParseError(lineno, 1, "missing field (need name, rank, coroots, roots, simple)");
    return rd;
}

std::string dump_root_datum(const BasedRootDatum& rd) {
    std::ostringstream os;
    os << "name: " << rd.name << "\n";
    os << "rank: " << rd.rank << "\n";
    os << "coroots: " << vecvec_str(rd.coroots) << "\n";
    os << "roots: " << vecvec_str(rd.roots) << "\n";
    std::vector<Int> simple;
    for (std::size_t s : rd.simple) simple.push_back(Int(s));
    os << "simple: " << vec_str(simple) << "\n";
    return os.str();
}

QuadForm parse_quad_form(const std::string& spec, std::size_t rank, const Int& N) {
    QuadForm q(rank, N);
    std::string s;
    for (char c : spec)
        if (c != ' ' && c != '*') s.push_back(c);
    if (s.empty()) throw ParseError(1, 1, "empty form");
    if (s.front() == '[') {
        LineScanner sc{s, 1};
        std::vector<Int> coeffs = sc.int_vector();
        sc.end();
        std::size_t expected = rank * (rank + 1) / 2;
        if (coeffs.size() != expected)
            throw ParseError(1, 1, "expected " + std::to_string(expected) + " coefficients");
        std::size_t c = 0;
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = i; j < rank; ++j) q.set(i, j, coeffs[c++]);
        return q;
    }
    // monomial shorthand over the variables x, y, z, w
    std::size_t pos = 0;
    auto var_index = [rank](char c) -> std::size_t {
        std::string vars = "xyzw";
        std::size_t ix = vars.find(c);
        if (ix == std::string::npos || ix >= rank) return rank;
        return ix;
    };
    while (pos < s.size()) {
        Int sign = 1;
        if (s[pos] == '+') ++pos;
        else if (s[pos] == '-') {
            sign = -1;
            ++pos;
        }
        std::size_t start = pos;
        Int coeff = 1;
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits.push_back(s[pos++]);
        if (!digits.empty()) coeff = Int(digits);
        std::vector<std::size_t> degree(rank, 0);
        std::size_t total = 0;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            std::size_t ix = var_index(s[pos]);
            if (ix == rank) throw ParseError(1, pos + 1, "unknown variable");
            ++pos;
            std::size_t e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                    throw ParseError(1, pos + 1, "expected an exponent");
                e = s[pos++] - '0';
            }
            degree[ix] += e;
            total += e;
        }
        if (total != 2) throw ParseError(1, start + 1, "each monomial must have degree 2");
        std::size_t i = rank, j = rank;
        for (std::size_t t = 0; t < rank; ++t)
            for (std::size_t rep = 0; rep < degree[t]; ++rep) (i == rank ? i : j) = t;
        q.set(i, j, q.coeff(i, j) + sign * coeff);
    }
    return q;
}

Place parse_place(const std::string& spec, const Int& N) {
    if (spec == "R" || spec == "real") {
        if (N != 2) throw ParseError(1, 1, "the real place requires N = 2");
        return real_place();
    }
    return padic_place(Int(spec), N);
}

LocalUnit parse_unit(const std::string& spec) {
    std::size_t slash = spec.find('/');
    if (slash == std::string::npos) return LocalUnit::from_rational(Int(spec));
    return LocalUnit::from_rational(Int(spec.substr(0, slash)), Int(spec.substr(slash + 1)));
}

Report cmd_validate(const std::string& file_text) {
    std::string body = report_header("validate");
    try {
        BasedRootDatum rd = parse_root_datum(file_text);
        body += dump_root_datum(rd);
        std::vector<std::string> errs = validate(rd);
        for (const std::string& e : errs) body += "violation: " + e + "\n";
        return Report{finish(body, errs.empty()), errs.empty()};
    } catch (const ParseError& e) {
        body += std::string("parse-error: ") + e.what() + "\n";
        return Report{finish(body, false), false};
    }
}

Report cmd_classify(const BasedRootDatum& rd, const Int& N) {
    std::string body = report_header("classify");
    body += "datum: " + rd.name + "\nN: " + N.str() + "\n";
    BgCohomologyReport bg = bg_cohomology(rd, N);
    body += "h1: " + bg.h1.to_string() + "\n";
    body += "h2: " + bg.h2.to_string() + "\n";
    body += "h3: " + bg.h3.to_string() + "\n";
    body += "h4: " + bg.h4.to_string() + "\n";
    body += "strict-generators:\n";
    for (const QuadForm& g : bg.h4_generators) body += "  " + g.to_string() + "\n";
    bool oracle = oracle_matches_strict(rd, N);
    body += std::string("oracle-equivalence: ") + (oracle ? "pass" : "fail") + "\n";
    CoverHomotopy ch = cover_homotopy(rd, N);
    body += "pi0: " + ch.pi0.to_string() + "\n";
    body += "pi1: " + ch.pi1.to_string() + "\n";
    body += "pi2: " + ch.pi2.to_string() + "\n";
    body += std::string("routes-agree: ") + (ch.agree ? "pass" : "fail") + "\n";
    body += std::string("sequence: ") + (bg.sequence_ok ? "pass" : "fail") + "\n";
    bool ok = oracle && ch.agree && bg.sequence_ok;
    return Report{finish(body, ok), ok};
}

Report cmd_dualize(const BasedRootDatum& rd, const Int& N, const std::string& q_spec) {
    std::string body = report_header("dualize");
    body += "datum: " + rd.name + "\nN: " + N.str() + "\n";
    QuadForm q;
    try {
        q = parse_quad_form(q_spec, rd.rank, N);
    } catch (const ParseError& e) {
        body += std::string("parse-error: ") + e.what() + "\n";
        return Report{finish(body, false), false};
    }
    body += "Q: " + q.to_string() + "\n";
    // strictness with the violated instance named
    BilinearFormModN b = polarize(q);
    for (std::size_t s : rd.simple)
        for (std::size_t t = 0; t < rd.rank; ++t) {
            std::vector<Int> e(rd.rank, 0);
            e[t] = 1;
            Int lhs = b.eval(rd.coroots[s], e);
            Int rhs = mod_reduce(rd.roots[s][t] * q.eval(rd.coroots[s]), N);
            if (lhs != rhs) {
                body += "strict: no\n";
                body += "violation: alpha = " + vec_str(rd.coroots[s]) + ", lambda = e" +
                        std::to_string(t) + ", b(alpha, lambda) = " + lhs.str() +
                        ", <alpha-check, lambda> Q(alpha) = " + rhs.str() + "\n";
                return Report{finish(body, false), false};
            }
        }
    body += "strict: yes\n";
    SharpData sd = sharp_data(rd, q);
    body += "sharp-basis: " + matrix_cols_str(sd.sharp_basis) + "\n";
    body += "multipliers: " + vec_str(sd.multipliers) + "\n";
    DualPair dp = dual_root_datum(rd, q);
    body += "dual:\n" + dump_root_datum(dp.h);
    body += "coefficient-ring: " + dp.coefficient_ring + "\n";
    body += "zh: " + dp.zh.to_string() + "\n";
    EpsilonData ed = epsilon_invariant(rd, q);
    body += "epsilon-orders: " + vec_str(ed.group.orders) + "\n";
    body += "epsilon: " + vec_str(ed.table) + "\n";
    body += std::string("epsilon-coherent: ") + (ed.coherent ? "pass" : "fail") + "\n";
    WeissmanReport wr = weissman_comparison(rd, q);
    body += std::string("linear-route-applicable: ") + (wr.applicable ? "yes" : "no") + "\n";
    if (wr.applicable)
        body += std::string("linear-route-agrees: ") + (wr.agrees ? "yes" : "no") + "\n";
    WeylGroup wg = weyl_group(rd);
    bool borel_ok = true;
    body += "borel:\n";
    for (std::size_t i = 0; i < wg.size(); ++i) {
        BorelReport br = borel_independence_check(rd, q, wg.elements[i]);
        body += "  w" + std::to_string(i) + " (length " + std::to_string(wg.lengths[i]) +
                "): " + (br.ok ? "ok" : "mismatch: " + br.witness) + "\n";
        borel_ok = borel_ok && br.ok;
    }
    if (wg.capped) body += "borel-note: Weyl enumeration capped\n";
    body += std::string("borel-ok: ") + (borel_ok ? "pass" : "fail") + "\n";
    bool ok = ed.coherent && borel_ok;
    return Report{finish(body, ok), ok};
}

Report cmd_theta(std::size_t rank, const Int& N) {
    std::string body = report_header("theta");
    body += "rank: " + std::to_string(rank) + "\nN: " + N.str() + "\n";
    bool ok = true;
    for (int level : {1, 2}) {
        ThetaSkeletonReport rep = theta_skeleton(rank, N, level);
        body += "level" + std::to_string(level) + "-pi0: " + rep.cone_route.pi0.to_string() + "\n";
        body += "level" + std::to_string(level) + "-pi1: " + rep.cone_route.pi1.to_string() + "\n";
        body += "level" + std::to_string(level) + "-pi2: " + rep.cone_route.pi2.to_string() + "\n";
        body += "level" + std::to_string(level) +
                "-routes-agree: " + (rep.agree ? "pass" : "fail") + "\n";
        ok = ok && rep.agree;
    }
    return Report{finish(body, ok), ok};
}

Report cmd_hilbert(const Place& v, const std::string& a, const std::string& b) {
    std::string body = report_header("hilbert");
    LocalUnit ua = parse_unit(a), ub = parse_unit(b);
    body += "a: " + ua.to_string() + "\nb: " + ub.to_string() + "\n";
    body += "place: " + (v.kind == Place::Kind::real ? std::string("R") : v.p.str()) + "\n";
    body += "N: " + v.N.str() + "\n";
    body += "symbol-exponent: " + hilbert_symbol(ua, ub, v).str() + "\n";
    return Report{finish(body, true), true};
}

Report cmd_symbol_suite(const Place& v, const std::vector<std::string>& sample) {
    std::string body = report_header("symbol-suite");
    std::vector<LocalUnit> units;
    for (const std::string& s : sample) units.push_back(parse_unit(s));
    SymbolSuiteReport rep = symbol_identity_suite(v, units);
    body += "sample-size: " + std::to_string(units.size()) + "\n";
    body += "checks: " + std::to_string(rep.checks) + "\n";
    for (const std::string& f : rep.failures) body += "failure: " + f + "\n";
    return Report{finish(body, rep.ok), rep.ok};
}

Report cmd_torus_cover(std::size_t rank, const IntMatrix& c, const Place& v) {
    std::string body = report_header("torus-cover");
    TorusCover cover = torus_cover(rank, c, v);
    body += "rank: " + std::to_string(rank) + "\n";
    body += "N: " + v.N.str() + "\n";
    body += "cocycle: " + matrix_cols_str(c) + "\n";
    CommutatorConventionReport conv = commutator_conventions(cover);
    body += "alternating: " + matrix_cols_str(conv.alternating) + "\n";
    body += "alternating-negated: " + matrix_cols_str(conv.negated) + "\n";
    body += "note: " + conv.note + "\n";
    body += std::string("abelian: ") + (conv.alternating.is_zero() ? "yes" : "no") + "\n";
    // deterministic sample commutators on coordinate test points
    std::vector<LocalUnit> probes{LocalUnit::from_rational(-1),
                                  v.kind == Place::Kind::real ? LocalUnit::from_rational(2)
                                                              : LocalUnit::from_rational(v.p)};
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            for (std::size_t pa = 0; pa < probes.size(); ++pa)
                for (std::size_t pb = 0; pb < probes.size(); ++pb) {
                    std::vector<LocalUnit> x(rank, LocalUnit::from_rational(1));
                    std::vector<LocalUnit> y(rank, LocalUnit::from_rational(1));
                    x[i] = probes[pa];
                    y[j] = probes[pb];
                    body += "commutator[e" + std::to_string(i) + "=" + probes[pa].to_string() +
                            ", e" + std::to_string(j) + "=" + probes[pb].to_string() +
                            "]: " + cover.commutator(x, y).str() + "\n";
                }
    return Report{finish(body, true), true};
}

namespace {

using Check = std::pair<std::string, bool>;

std::vector<Check> suite_linear_algebra() {
    std::vector<Check> out;
    for (std::size_t r = 1; r <= 4; ++r) {
        out.push_back({"functor-diagram rank " + std::to_string(r), functor_apply(r).ok});
        for (bool tw : {false, true})
            out.push_back({"sigma2 rank " + std::to_string(r) + (tw ? " twisted" : " untwisted"),
                           sigma2_homology(r, tw).ok});
    }
    for (std::size_t r = 1; r <= 2; ++r)
        for (FunctorTag tag : {FunctorTag::Id, FunctorTag::Tensor2, FunctorTag::Gamma2,
                               FunctorTag::Wedge2, FunctorTag::Sym2, FunctorTag::Hcheck1})
            out.push_back({"cosimplicial " + functor_name(tag) + " rank " + std::to_string(r),
                           cosimplicial_limit_check(r, tag, 4).ok});
    return out;
}

std::vector<Check> suite_theta() {
    std::vector<Check> out;
    for (std::size_t r = 1; r <= 3; ++r)
        for (Int N : {Int(2), Int(3), Int(4), Int(6)})
            for (int level : {1, 2})
                out.push_back({"theta rank " + std::to_string(r) + " N " + N.str() + " level " +
                                   std::to_string(level),
                               theta_skeleton(r, N, level).agree});
    return out;
}

std::vector<std::vector<Int>> half_homs(const FiniteGroup& gamma, const Int& N) {
    std::vector<std::vector<Int>> out;
    if (N % 2 != 0) return {std::vector<Int>(gamma.size(), Int(0))};
    Int eps = N / 2;
    std::size_t k = gamma.orders.size();
    auto elems = gamma.elements();
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        std::vector<Int> gen_vals(k, 0);
        bool valid = true;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t(1) << i)) {
                gen_vals[i] = eps;
                if ((gamma.orders[i] * eps) % N != 0) valid = false;
            }
        if (!valid) continue;
        std::vector<Int> table(elems.size());
        for (std::size_t e = 0; e < elems.size(); ++e) {
            Int v = 0;
            for (std::size_t i = 0; i < k; ++i) v += elems[e][i] * gen_vals[i];
            table[e] = mod_reduce(v, N);
            if (table[e] != 0 && table[e] != eps) valid = false;
        }
        if (valid) out.push_back(std::move(table));
    }
    return out;
}

std::vector<Check> suite_coherence() {
    std::vector<Check> out;
    std::vector<std::vector<Int>> groups{{},           {Int(2)},        {Int(3)}, {Int(4)},
                                         {Int(5)},     {Int(6)},        {Int(7)}, {Int(8)},
                                         {Int(2), Int(2)}, {Int(2), Int(4)}, {Int(2), Int(2), Int(2)}};
    for (const auto& orders : groups)
        for (Int N : {Int(1), Int(2), Int(3), Int(4)}) {
            FiniteGroup gamma{orders};
            bool ok = true;
            for (const auto& f : half_homs(gamma, N)) {
                SymMonExt s = build_symmon_from_hom(gamma, f, N);
                ok = ok && check_coherence(s).ok && inv(s) == f;
            }
            std::string label = "inv roundtrip orders " + vec_str(orders) + " N " + N.str();
            out.push_back({label, ok});
        }
    // negative control: a corrupted braiding is caught with a witness
    FiniteGroup z2{{Int(2)}};
    SymMonExt bad = build_symmon_from_hom(z2, {Int(0), Int(1)}, 2);
    bad.set_b(0, 1, 1);
    CoherenceReport rep = check_coherence(bad);
    out.push_back({"corrupted braiding detected", !rep.ok && !rep.failures.empty()});
    return out;
}

std::vector<Check> suite_schubert() {
    std::vector<Check> out;
    for (const char* name : {"A1", "A1xA1", "A2", "B2", "G2", "GL2", "PGL2"})
        for (Int N : {Int(2), Int(3), Int(4), Int(5), Int(6), Int(12)})
            out.push_back({std::string("oracle ") + name + " N " + N.str(),
                           oracle_matches_strict(catalog(name), N)});
    return out;
}

std::vector<Check> suite_symbols() {
    std::vector<Check> out;
    std::vector<std::string> base;
    for (int k = 1; k <= 10; ++k) {
        base.push_back(std::to_string(k));
        base.push_back(std::to_string(-k));
    }
    auto run_place = [&](const Place& v, const std::string& label, const std::string& extra) {
        std::vector<LocalUnit> sample;
        for (const std::string& s : base) sample.push_back(parse_unit(s));
        if (!extra.empty()) sample.push_back(parse_unit(extra));
        out.push_back({"symbols " + label, symbol_identity_suite(v, sample).ok});
    };
    run_place(real_place(), "R", "");
    for (Int p = 3; p <= 50; p += 2)
        if ([&p] {
                for (Int d = 3; d * d <= p; d += 2)
                    if (p % d == 0) return false;
                return true;
            }())
            run_place(padic_place(p, 2), "p=" + p.str() + " N=2", p.str());
    run_place(padic_place(5, 4), "p=5 N=4", "5");
    run_place(padic_place(13, 4), "p=13 N=4", "13");
    return out;
}

std::vector<Check> suite_dual() {
    std::vector<Check> out;
    // frozen rank-one conclusions
    BasedRootDatum sl2 = catalog("SL2");
    QuadForm q1(1, 2), q0(1, 2);
    q1.set(0, 0, 1);
    DualPair d1 = dual_root_datum(sl2, q1), d0 = dual_root_datum(sl2, q0);
    out.push_back({"SL2 N=2 Q=1 gives SL2-type dual with Z/2 center characters",
                   companions(d1.h).pi1.is_trivial() &&
                       d1.zh == FgAbelianGroup::from_cyclic_orders({2})});
    out.push_back({"SL2 N=2 Q=0 gives PGL2-type dual",
                   companions(d0.h).pi1 == FgAbelianGroup::from_cyclic_orders({2}) &&
                       d0.zh.is_trivial()});
    // rank-one exhaustive epsilon oracle
    for (const char* name : {"SL2", "PGL2"})
        for (Int N : {Int(2), Int(3), Int(4)}) {
            BasedRootDatum rd = catalog(name);
            bool ok = true;
            StrictForms sf = enumerate_strict(rd, N);
            for (Int c = 0; c < N; ++c) {
                QuadForm q(1, N);
                for (const QuadForm& g : sf.generators) q.set(0, 0, q.coeff(0, 0) + c * g.coeff(0, 0));
                if (!is_strict(rd, q)) continue;
                ok = ok && epsilon_invariant(rd, q).table == epsilon_rank1_oracle(rd, q);
            }
            out.push_back({std::string("epsilon oracle ") + name + " N " + N.str(), ok});
        }
    // Borel independence across the rank <= 2 catalog
    for (const char* name : {"SL2", "PGL2", "GL2", "SL2xSL2", "SL3", "PGL3", "Sp4", "SO5", "G2"})
        for (Int N : {Int(2), Int(3), Int(4)}) {
            BasedRootDatum rd = catalog(name);
            WeylGroup wg = weyl_group(rd);
            StrictForms sf = enumerate_strict(rd, N);
            bool ok = true;
            // iterate all combinations of the strict generators mod N
            std::size_t g = sf.generators.size(), n = N.convert_to<std::size_t>();
            std::vector<std::size_t> cc(g, 0);
            while (true) {
                QuadForm q(rd.rank, N);
                for (std::size_t i = 0; i < rd.rank; ++i)
                    for (std::size_t j = i; j < rd.rank; ++j) {
                        Int v = 0;
                        for (std::size_t t = 0; t < g; ++t)
                            v += Int(cc[t]) * sf.generators[t].coeff(i, j);
                        q.set(i, j, v);
                    }
                for (const IntMatrix& w : wg.elements)
                    ok = ok && borel_independence_check(rd, q, w).ok;
                std::size_t kk = 0;
                while (kk < g && ++cc[kk] == n) cc[kk++] = 0;
                if (kk == g) break;
            }
            out.push_back({std::string("borel ") + name + " N " + N.str(), ok});
        }
    return out;
}

}  // namespace

Report cmd_verify(const std::string& suite) {
    std::string body = report_header("verify");
    body += "suite: " + suite + "\n";
    std::vector<Check> checks;
    auto append = [&checks](const std::vector<Check>& more) {
        checks.insert(checks.end(), more.begin(), more.end());
    };
    if (suite == "linear-algebra") append(suite_linear_algebra());
    else if (suite == "theta") append(suite_theta());
    else if (suite == "coherence") append(suite_coherence());
    else if (suite == "schubert") append(suite_schubert());
    else if (suite == "symbols") append(suite_symbols());
    else if (suite == "dual") append(suite_dual());
    else if (suite == "all") {
        append(suite_linear_algebra());
        append(suite_theta());
        append(suite_coherence());
        append(suite_schubert());
        append(suite_symbols());
        append(suite_dual());
    } else {
        body += "error: unknown suite '" + suite + "'\n";
        return Report{finish(body, false), false};
    }
    bool ok = true;
    for (const Check& c : checks) {
        body += "check " + c.first + ": " + (c.second ? "pass" : "fail") + "\n";
        ok = ok && c.second;
    }
    return Report{finish(body, ok), ok};
}

int run(int argc, const char* const* argv) {
    CLI::App app{"metaplectic cover classification toolkit"};
    app.require_subcommand(1);

    std::string file, name, q_spec, place_spec = "R", suite, unit_a, unit_b, cocycle_file;
    std::vector<std::string> sample;
    std::string n_str = "2";
    std::size_t rank = 1;

    auto load_datum = [&file, &name]() -> BasedRootDatum {
        if (!name.empty()) return catalog(name);
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_root_datum(ss.str());
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "parse and check a root datum file");
    validate_cmd->add_option("file", file)->required();

    CLI::App* classify_cmd = app.add_subcommand("classify", "cover classification data");
    classify_cmd->add_option("file", file);
    classify_cmd->add_option("--name", name);
    classify_cmd->add_option("--N", n_str)->required();

    CLI::App* dualize_cmd = app.add_subcommand("dualize", "metaplectic dual datum");
    dualize_cmd->add_option("file", file);
    dualize_cmd->add_option("--name", name);
    dualize_cmd->add_option("--N", n_str)->required();
    dualize_cmd->add_option("--Q", q_spec)->required();

    CLI::App* theta_cmd = app.add_subcommand("theta", "theta skeleton double computation");
    theta_cmd->add_option("--rank", rank)->required();
    theta_cmd->add_option("--N", n_str)->required();

    CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol");
    hilbert_cmd->add_option("--place", place_spec)->required();
    hilbert_cmd->add_option("--N", n_str)->required();
    hilbert_cmd->add_option("a", unit_a)->required();
    hilbert_cmd->add_option("b", unit_b)->required();

    CLI::App* suite_cmd = app.add_subcommand("symbol-suite", "symbol identity suite");
    suite_cmd->add_option("--place", place_spec)->required();
    suite_cmd->add_option("--N", n_str)->required();
    suite_cmd->add_option("--sample", sample)->required();

    CLI::App* cover_cmd = app.add_subcommand("torus-cover", "torus cover commutators");
    cover_cmd->add_option("--rank", rank)->required();
    cover_cmd->add_option("--cocycle", cocycle_file)->required();
    cover_cmd->add_option("--place", place_spec)->required();
    cover_cmd->add_option("--N", n_str)->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
    verify_cmd->add_option("--suite", suite)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        Int N(n_str);
        Report rep;
        if (validate_cmd->parsed()) {
            std::ifstream in(file);
            if (!in) throw std::runtime_error("cannot open " + file);
            std::stringstream ss;
            ss << in.rdbuf();
            rep = cmd_validate(ss.str());
        } else if (classify_cmd->parsed()) {
            rep = cmd_classify(load_datum(), N);
        } else if (dualize_cmd->parsed()) {
            rep = cmd_dualize(load_datum(), N, q_spec);
        } else if (theta_cmd->parsed()) {
            rep = cmd_theta(rank, N);
        } else if (hilbert_cmd->parsed()) {
            rep = cmd_hilbert(parse_place(place_spec, N), unit_a, unit_b);
        } else if (suite_cmd->parsed()) {
            rep = cmd_symbol_suite(parse_place(place_spec, N), sample);
        } else if (cover_cmd->parsed()) {
            std::ifstream in(cocycle_file);
            if (!in) throw std::runtime_error("cannot open " + cocycle_file);
            std::stringstream ss;
            ss << in.rdbuf();
            std::string text = ss.str();
            std::string stripped;
            for (char ch : text)
                if (ch != '\n' && ch != '\r' && ch != '\t') stripped.push_back(ch);
            LineScanner sc{stripped, 1};
            std::vector<std::vector<Int>> rows = sc.vector_list();
            rep = cmd_torus_cover(rank, IntMatrix::from_rows(rows), parse_place(place_spec, N));
        } else if (verify_cmd->parsed()) {
            rep = cmd_verify(suite);
        }
        std::fputs(rep.text.c_str(), stdout);
        return rep.ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::fputs((report_header("error") + "error: " + e.what() + "\nresult: fail\n").c_str(),
                   stdout);
        return 1;
    }
}

}  // namespace meta::cli
