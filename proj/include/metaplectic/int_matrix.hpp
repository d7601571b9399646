#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace meta {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries, row-major storage.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const;
    bool is_zero() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Int& c) const;
    IntMatrix mod(const Int& m) const;

    // Columns [c0, c1) as a new matrix.
    IntMatrix column_range(std::size_t c0, std::size_t c1) const;
    std::vector<Int> column(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;

    // Stacks this on top of o (column counts must agree).
    IntMatrix vstack(const IntMatrix& o) const;
    // Places o to the right of this (row counts must agree).
    IntMatrix hstack(const IntMatrix& o) const;

    std::vector<Int> apply(const std::vector<Int>& v) const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// U * M * V = D with U, V unimodular and D diagonal, diagonal entries
// nonnegative and forming a divisor chain d1 | d2 | ... .  Uinv and Vinv
// are the inverse transforms, maintained alongside so callers can solve
// and extract kernels without a separate inversion step.
struct SmithResult {
    IntMatrix U, D, V, Uinv, Vinv;
    std::size_t rank = 0;  // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& M);

// Basis of the integer kernel of M, returned as columns.  The span is a
// pure sublattice, so reductions mod m stay faithful.
IntMatrix kernel_basis(const IntMatrix& M);
IntMatrix kernel_basis(const SmithResult& s);

// Solves M * X = B over the integers.  Returns false when some column of
// B is not in the image lattice.
bool try_solve(const SmithResult& snf, const IntMatrix& B, IntMatrix& X);
IntMatrix solve_exact(const SmithResult& snf, const IntMatrix& B);
IntMatrix solve_exact(const IntMatrix& M, const IntMatrix& B);

}  // namespace meta
