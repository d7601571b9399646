#include "metaplectic/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace meta {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix::operator*: shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += x * o.at(k, j);
        }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix::operator+: shape mismatch");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix::operator-: shape mismatch");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = -a_[i];
    return s;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = c * a_[i];
    return s;
}

IntMatrix IntMatrix::mod(const Int& m) const {
    if (m <= 0) throw std::invalid_argument("IntMatrix::mod: modulus must be positive");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) {
        Int r = a_[i] % m;
        if (r < 0) r += m;
        s.a_[i] = r;
    }
    return s;
}

IntMatrix IntMatrix::column_range(std::size_t c0, std::size_t c1) const {
    if (c0 > c1 || c1 > cols_) throw std::invalid_argument("IntMatrix::column_range: bad range");
    IntMatrix m(rows_, c1 - c0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = c0; j < c1; ++j) m.at(i, j - c0) = at(i, j);
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("IntMatrix::vstack: column mismatch");
    IntMatrix m(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
    return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("IntMatrix::hstack: row mismatch");
    IntMatrix m(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
    std::vector<Int> w(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) w[i] += at(i, j) * v[j];
    return w;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            os << at(i, j);
            if (j + 1 < cols_) os << ", ";
        }
        os << "]";
        if (i + 1 < rows_) os << "; ";
    }
    os << "]";
    return os.str();
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return k;
}

namespace {

struct SnfWork {
    IntMatrix D, U, V, Uinv, Vinv;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D.at(i, c), D.at(j, c));
        for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
        for (std::size_t r = 0; r < Uinv.rows(); ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D.at(r, i), D.at(r, j));
        for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
        for (std::size_t c = 0; c < Vinv.cols(); ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
    }
    // row j += k * row i
    void add_row(std::size_t j, std::size_t i, const Int& k) {
        if (k == 0) return;
        for (std::size_t c = 0; c < D.cols(); ++c) D.at(j, c) += k * D.at(i, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U.at(j, c) += k * U.at(i, c);
        for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv.at(r, i) -= k * Uinv.at(r, j);
    }
    // col j += k * col i
    void add_col(std::size_t j, std::size_t i, const Int& k) {
        if (k == 0) return;
        for (std::size_t r = 0; r < D.rows(); ++r) D.at(r, j) += k * D.at(r, i);
        for (std::size_t r = 0; r < V.rows(); ++r) V.at(r, j) += k * V.at(r, i);
        for (std::size_t c = 0; c < Vinv.cols(); ++c) Vinv.at(i, c) -= k * Vinv.at(j, c);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < D.cols(); ++c) D.at(i, c) = -D.at(i, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
        for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv.at(r, i) = -Uinv.at(r, i);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& M) {
    const std::size_t m = M.rows(), n = M.cols();
    SnfWork w{M, IntMatrix::identity(m), IntMatrix::identity(n),
              IntMatrix::identity(m), IntMatrix::identity(n)};

    std::size_t t = 0;
    const std::size_t steps = std::min(m, n);
    while (t < steps) {
        // Pivot: smallest nonzero absolute value in the trailing block,
        // row-major on ties.
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                Int v = abs(w.D.at(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
            Int q = w.D.at(i, t) / w.D.at(t, t);
            w.add_row(i, t, -q);
            if (w.D.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            Int q = w.D.at(t, j) / w.D.at(t, t);
            w.add_col(j, t, -q);
            if (w.D.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        // Divisibility: fold in any entry the pivot fails to divide.
        bool redo = false;
        for (std::size_t i = t + 1; i < m && !redo; ++i)
            for (std::size_t j = t + 1; j < n && !redo; ++j)
                if (w.D.at(i, j) % w.D.at(t, t) != 0) {
                    w.add_col(t, j, 1);
                    redo = true;
                }
        if (redo) continue;

        if (w.D.at(t, t) < 0) w.negate_row(t);
        ++t;
    }

    SmithResult r;
    r.rank = t;
    r.D = std::move(w.D);
    r.U = std::move(w.U);
    r.V = std::move(w.V);
    r.Uinv = std::move(w.Uinv);
    r.Vinv = std::move(w.Vinv);
    return r;
}

IntMatrix kernel_basis(const SmithResult& s) {
    return s.V.column_range(s.rank, s.V.cols());
}

IntMatrix kernel_basis(const IntMatrix& M) {
    return kernel_basis(smith_normal_form(M));
}

bool try_solve(const SmithResult& snf, const IntMatrix& B, IntMatrix& X) {
    if (B.rows() != snf.D.rows()) throw std::invalid_argument("try_solve: shape mismatch");
    IntMatrix C = snf.U * B;
    IntMatrix Y(snf.D.cols(), B.cols());
    for (std::size_t i = 0; i < snf.D.rows(); ++i) {
        if (i < snf.rank) {
            const Int& d = snf.D.at(i, i);
            for (std::size_t j = 0; j < B.cols(); ++j) {
                if (C.at(i, j) % d != 0) return false;
                Y.at(i, j) = C.at(i, j) / d;
            }
        } else {
            for (std::size_t j = 0; j < B.cols(); ++j)
                if (C.at(i, j) != 0) return false;
        }
    }
    X = snf.V * Y;
    return true;
}

IntMatrix solve_exact(const SmithResult& snf, const IntMatrix& B) {
    IntMatrix X;
    if (!try_solve(snf, B, X)) throw std::domain_error("solve_exact: system has no integral solution");
    return X;
}

IntMatrix solve_exact(const IntMatrix& M, const IntMatrix& B) {
    return solve_exact(smith_normal_form(M), B);
}

}  // namespace meta
