#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "metaplectic/bg_cohomology.hpp"
#include "metaplectic/local_field.hpp"
#include "metaplectic/meta_dual.hpp"

namespace meta::cli {

// Structured-text report with a versioned schema header; ok mirrors the
// process exit status.
struct Report {
    std::string text;
    bool ok = false;
};

struct ParseError : std::runtime_error {
    std::size_t line, column;
    ParseError(std::size_t l, std::size_t c, const std::string& what)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " +
                             what),
          line(l),
          column(c) {}
};

// Root-datum file grammar: `key: value` lines for name, rank, coroots,
// roots, simple; integers in decimal, vectors bracketed and
// comma-separated, comments introduced by '#'.
BasedRootDatum parse_root_datum(const std::string& text);
std::string dump_root_datum(const BasedRootDatum& rd);

// Either a packed upper-triangular coefficient list "[1,0,1]" or monomial
// shorthand such as "x^2+xy" with variables x, y, z, w.
QuadForm parse_quad_form(const std::string& spec, std::size_t rank, const Int& N);

// "R" or a prime; rationals as "n" or "n/d".
Place parse_place(const std::string& spec, const Int& N);
LocalUnit parse_unit(const std::string& spec);

Report cmd_validate(const std::string& file_text);
Report cmd_classify(const BasedRootDatum& rd, const Int& N);
Report cmd_dualize(const BasedRootDatum& rd, const Int& N, const std::string& q_spec);
Report cmd_theta(std::size_t rank, const Int& N);
Report cmd_hilbert(const Place& v, const std::string& a, const std::string& b);
Report cmd_symbol_suite(const Place& v, const std::vector<std::string>& sample);
Report cmd_torus_cover(std::size_t rank, const IntMatrix& c, const Place& v);
Report cmd_verify(const std::string& suite);

// Full argv dispatch; returns the process exit status.
int run(int argc, const char* const* argv);

}  // namespace meta::cli
