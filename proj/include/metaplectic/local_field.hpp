#pragma once

#include <map>
#include <string>
#include <vector>

#include "metaplectic/forms.hpp"

namespace meta {

// Real place with N = 2, or Q_p with the tame constraint N | p-1 for odd
// p, plus the classical p = 2, N = 2 case.
struct Place {
    enum class Kind { real, padic };
    Kind kind = Kind::real;
    Int p = 0;  // prime when padic
    Int N = 2;
};

Place real_place();
Place padic_place(const Int& p, const Int& N);

// Nonzero rational stored as a sign and a factored numerator/denominator.
struct LocalUnit {
    int sign = 1;                // +1 or -1
    std::map<Int, Int> factors;  // prime -> exponent, negative for the denominator

    static LocalUnit from_rational(const Int& num, const Int& den = 1);

    Int numerator() const;    // signed
    Int denominator() const;  // positive
    Int valuation(const Int& p) const;
    // residue of the p-free part modulo m (m a power of a prime not
    // dividing the p-free part), via modular inverses
    Int residue_mod(const Int& m, const Int& p) const;

    LocalUnit operator*(const LocalUnit& o) const;
    LocalUnit inverse() const;
    bool operator==(const LocalUnit& o) const { return sign == o.sign && factors == o.factors; }
    std::string to_string() const;
};

// 1 - a as a LocalUnit; throws when a = 1.
LocalUnit one_minus(const LocalUnit& a);

// Nth Hilbert symbol as an exponent of the fixed root of unity: the
// smallest positive primitive root mod p raised to (p-1)/N, or -1 at the
// real place.
Int hilbert_symbol(const LocalUnit& a, const LocalUnit& b, const Place& v);

// Bilinearity, antisymmetry, (a,-a) = 0, the Steinberg relation
// (a,1-a) = 0, and the self-symbol identity (a,a) = (a,-1), over all
// pairs from the sample.
struct SymbolSuiteReport {
    bool ok = false;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

SymbolSuiteReport symbol_identity_suite(const Place& v, const std::vector<LocalUnit>& sample);

struct TorusCoverElement {
    std::vector<LocalUnit> base;
    Int phase = 0;  // in Z/N
};

// Central extension of the split r-torus by mu_N with cocycle
// sum c_ij (x_i, y_j)_v.
struct TorusCover {
    std::size_t rank = 0;
    IntMatrix c;
    Place place;

    TorusCoverElement identity() const;
    TorusCoverElement mul(const TorusCoverElement& a, const TorusCoverElement& b) const;
    TorusCoverElement inverse(const TorusCoverElement& a) const;
    // phase of the group commutator of the standard lifts of x and y
    Int commutator(const std::vector<LocalUnit>& x, const std::vector<LocalUnit>& y) const;
};

TorusCover torus_cover(std::size_t r, const IntMatrix& c, const Place& v);

// Both sign readings of the commutator pairing; which one matches an
// external topological convention is reported, never asserted.
struct CommutatorConventionReport {
    IntMatrix alternating;  // c - c^T mod N
    IntMatrix negated;
    std::string note;
};

CommutatorConventionReport commutator_conventions(const TorusCover& cover);

// Signature of a real double cover of a split torus presented by a
// quadratic form and a character tau; the form contributes nothing.
struct RealSignature {
    std::vector<Int> sgn;
    bool trivial = false;
};

RealSignature real_signature(const QuadForm& q, const std::vector<Int>& tau);

}  // namespace meta
