#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace limtop {

/// Dense arbitrary-precision integer matrix, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static IntegerMatrix identity(int n) {
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    IntegerMatrix operator*(const IntegerMatrix& o) const {
        IntegerMatrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    if (o.at(k, j) != 0) out.at(i, j) += x * o.at(k, j);
            }
        return out;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        std::vector<Int> out(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0 && x[j] != 0) out[i] += at(i, j) * x[j];
        return out;
    }

    IntegerMatrix transposed() const {
        IntegerMatrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    std::vector<Int> col(int j) const {
        std::vector<Int> out(rows_);
        for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
        return out;
    }

    void set_col(int j, const std::vector<Int>& v) {
        for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    /// Horizontal concatenation [this | o].
    IntegerMatrix hcat(const IntegerMatrix& o) const {
        IntegerMatrix out(rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const IntegerMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            os << (i ? "\n[" : "[");
            for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
            os << "]";
        }
        return os.str();
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// U * A * V = D with U, V unimodular and D diagonal, each diagonal entry
/// nonnegative and dividing the next. Inverses are tracked alongside.
struct SmithForm {
    IntegerMatrix d;
    IntegerMatrix u, uinv;
    IntegerMatrix v, vinv;
    std::vector<Int> invariants; // nonzero diagonal entries, divisibility chain

    int rank() const { return static_cast<int>(invariants.size()); }
};

namespace detail {

struct SmithOps {
    IntegerMatrix* d;
    IntegerMatrix* u;
    IntegerMatrix* uinv;
    IntegerMatrix* v;
    IntegerMatrix* vinv;

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d->cols(); ++c) std::swap(d->at(i, c), d->at(j, c));
        for (int c = 0; c < u->cols(); ++c) std::swap(u->at(i, c), u->at(j, c));
        for (int r = 0; r < uinv->rows(); ++r)
            std::swap(uinv->at(r, i), uinv->at(r, j));
    }

    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d->rows(); ++r) std::swap(d->at(r, i), d->at(r, j));
        for (int r = 0; r < v->rows(); ++r) std::swap(v->at(r, i), v->at(r, j));
        for (int c = 0; c < vinv->cols(); ++c)
            std::swap(vinv->at(i, c), vinv->at(j, c));
    }

    void row_negate(int i) {
        for (int c = 0; c < d->cols(); ++c) d->at(i, c) = -d->at(i, c);
        for (int c = 0; c < u->cols(); ++c) u->at(i, c) = -u->at(i, c);
        for (int r = 0; r < uinv->rows(); ++r) uinv->at(r, i) = -uinv->at(r, i);
    }

    // row_i += q * row_j
    void row_add(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < d->cols(); ++c)
            if (d->at(j, c) != 0) d->at(i, c) += q * d->at(j, c);
        for (int c = 0; c < u->cols(); ++c)
            if (u->at(j, c) != 0) u->at(i, c) += q * u->at(j, c);
        for (int r = 0; r < uinv->rows(); ++r)
            if (uinv->at(r, i) != 0) uinv->at(r, j) -= q * uinv->at(r, i);
    }

    // col_i += q * col_j
    void col_add(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < d->rows(); ++r)
            if (d->at(r, j) != 0) d->at(r, i) += q * d->at(r, j);
        for (int r = 0; r < v->rows(); ++r)
            if (v->at(r, j) != 0) v->at(r, i) += q * v->at(r, j);
        for (int c = 0; c < vinv->cols(); ++c)
            if (vinv->at(i, c) != 0) vinv->at(j, c) -= q * vinv->at(i, c);
    }
};

} // namespace detail

/// Smith normal form via the smallest-nonzero-entry pivot strategy with
/// remainder reduction along the pivot row and column.
inline SmithForm smith_normal_form(const IntegerMatrix& a) {
    SmithForm s;
    s.d = a;
    s.u = IntegerMatrix::identity(a.rows());
    s.uinv = IntegerMatrix::identity(a.rows());
    s.v = IntegerMatrix::identity(a.cols());
    s.vinv = IntegerMatrix::identity(a.cols());
    detail::SmithOps ops{&s.d, &s.u, &s.uinv, &s.v, &s.vinv};

    const int m = a.rows(), n = a.cols();
    int t = 0;
    while (t < m && t < n) {
        // Locate the smallest nonzero entry of the trailing submatrix.
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                const Int& x = s.d.at(i, j);
                if (x == 0) continue;
                Int ax = abs_int(x);
                if (pi < 0 || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        ops.row_swap(t, pi);
        ops.col_swap(t, pj);

        bool clean = true;
        for (int i = t + 1; i < m; ++i) {
            if (s.d.at(i, t) == 0) continue;
            Int q = s.d.at(i, t) / s.d.at(t, t);
            ops.row_add(i, t, -q);
            if (s.d.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < n; ++j) {
            if (s.d.at(t, j) == 0) continue;
            Int q = s.d.at(t, j) / s.d.at(t, t);
            ops.col_add(j, t, -q);
            if (s.d.at(t, j) != 0) clean = false;
        }
        if (!clean) continue; // smaller remainders appeared; re-pick pivot

        // Pivot must divide every remaining entry; if not, mix that row in.
        const Int& p = s.d.at(t, t);
        int bi = -1, bj = -1;
        for (int i = t + 1; i < m && bi < 0; ++i)
            for (int j = t + 1; j < n; ++j)
                if (s.d.at(i, j) % p != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
        if (bi >= 0) {
            ops.row_add(t, bi, 1);
            continue;
        }
        if (s.d.at(t, t) < 0) ops.row_negate(t);
        ++t;
    }

    for (int i = 0; i < t; ++i) s.invariants.push_back(s.d.at(i, i));
    return s;
}

/// Basis of the integer kernel of a, as columns. Columns of V beyond the
/// rank of the Smith form span ker(a) over Z.
inline IntegerMatrix kernel_basis(const SmithForm& s) {
    int n = s.v.cols();
    int r = s.rank();
    IntegerMatrix out(n, n - r);
    for (int j = r; j < n; ++j)
        for (int i = 0; i < n; ++i) out.at(i, j - r) = s.v.at(i, j);
    return out;
}

/// One integer solution x of a*x = b, if any.
inline std::optional<std::vector<Int>> solve_integer(const SmithForm& s,
                                                     const std::vector<Int>& b) {
    std::vector<Int> ub = s.u.apply(b);
    int n = s.v.rows();
    std::vector<Int> y(n);
    int r = s.rank();
    for (int i = 0; i < static_cast<int>(ub.size()); ++i) {
        if (i < r) {
            if (ub[i] % s.invariants[i] != 0) return std::nullopt;
            if (i < n) y[i] = ub[i] / s.invariants[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v.apply(y);
}

inline std::optional<std::vector<Int>> solve_integer(const IntegerMatrix& a,
                                                     const std::vector<Int>& b) {
    return solve_integer(smith_normal_form(a), b);
}

} // namespace limtop
