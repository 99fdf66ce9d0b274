#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "cartanlab/errors.hpp"
#include "cartanlab/scalar_ops.hpp"

namespace cartanlab {

/// Dense n-by-n matrix over an exact scalar domain or double.  SL_n group
/// elements are validated (det = 1) where they enter the system: generator
/// sets, inverses, explicit checks in tests.
template <class S>
class SquareMatrix {
public:
    SquareMatrix(int n, const S& fill) : n_(check_dim(n)), e_(static_cast<std::size_t>(n) * n, fill) {}

    static SquareMatrix identity(int n, const S& like) {
        SquareMatrix m(n, scalar_zero(like));
        for (int i = 0; i < n; ++i) m.at(i, i) = scalar_one(like);
        return m;
    }

    static SquareMatrix identity_like(const SquareMatrix& proto) {
        return identity(proto.dim(), proto.at(0, 0));
    }

    int dim() const { return n_; }

    S& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const S& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    SquareMatrix operator*(const SquareMatrix& o) const {
        if (n_ != o.n_) {
            throw DimensionError("matrix product of " + std::to_string(n_) + "x" + std::to_string(n_) +
                                 " with " + std::to_string(o.n_) + "x" + std::to_string(o.n_));
        }
        SquareMatrix r(n_, scalar_zero(e_[0]));
        for (int i = 0; i < n_; ++i) {
            for (int k = 0; k < n_; ++k) {
                const S& a = at(i, k);
                if (scalar_is_zero(a)) continue;
                for (int j = 0; j < n_; ++j) {
                    r.at(i, j) = r.at(i, j) + a * o.at(k, j);
                }
            }
        }
        return r;
    }

    SquareMatrix transpose() const {
        SquareMatrix r(n_, scalar_zero(e_[0]));
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        }
        return r;
    }

    /// Determinant by cofactor expansion; exact in exact domains.  Fine for
    /// the small dimensions this library works at.
    S det() const {
        std::vector<int> cols(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) cols[static_cast<std::size_t>(j)] = j;
        return det_rec(0, cols);
    }

    /// Adjugate, so that adj(A) * A = det(A) * I; entries stay in the domain.
    SquareMatrix adjugate() const {
        SquareMatrix r(n_, scalar_zero(e_[0]));
        if (n_ == 1) {
            r.at(0, 0) = scalar_one(e_[0]);
            return r;
        }
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                std::vector<int> cols;
                cols.reserve(static_cast<std::size_t>(n_) - 1);
                for (int c = 0; c < n_; ++c) {
                    if (c != i) cols.push_back(c);
                }
                const S minor = minor_det(j, cols);
                r.at(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
            }
        }
        return r;
    }

    /// Inverse of an SL matrix via the adjugate.  Throws DeterminantError if
    /// det != 1, so entries always stay inside the coefficient domain.
    SquareMatrix inverse() const {
        if (!scalar_is_one(det())) throw DeterminantError("inverse requires det = 1");
        return adjugate();
    }

    bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

    /// Canonical key: dimension plus canonically reduced entries, row-major.
    std::string key() const {
        std::string k = std::to_string(n_);
        for (const S& x : e_) {
            k += ';';
            k += scalar_key(x);
        }
        return k;
    }

    std::size_t bit_size() const {
        std::size_t total = 0;
        for (const S& x : e_) total += scalar_bit_size(x);
        return total;
    }

    const std::vector<S>& entries() const { return e_; }

private:
    static int check_dim(int n) {
        if (n < 1) throw DimensionError("matrix dimension must be >= 1");
        return n;
    }

    // Determinant of the submatrix using rows [row..n) and the given columns.
    S det_rec(int row, const std::vector<int>& cols) const {
        if (cols.size() == 1) return at(row, cols[0]);
        S acc = scalar_zero(e_[0]);
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const S& head = at(row, cols[j]);
            if (scalar_is_zero(head)) continue;
            rest.clear();
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (c != j) rest.push_back(cols[c]);
            }
            const S term = head * det_rec(row + 1, rest);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    }

    // Determinant of the submatrix that skips `skip_row` and uses `cols`.
    S minor_det(int skip_row, const std::vector<int>& cols) const {
        std::vector<int> rows;
        rows.reserve(static_cast<std::size_t>(n_) - 1);
        for (int r = 0; r < n_; ++r) {
            if (r != skip_row) rows.push_back(r);
        }
        return sub_det(rows, cols);
    }

    S sub_det(const std::vector<int>& rows, const std::vector<int>& cols) const {
        if (rows.size() == 1) return at(rows[0], cols[0]);
        S acc = scalar_zero(e_[0]);
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        std::vector<int> tail(rows.begin() + 1, rows.end());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const S& head = at(rows[0], cols[j]);
            if (scalar_is_zero(head)) continue;
            rest.clear();
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (c != j) rest.push_back(cols[c]);
            }
            const S term = head * sub_det(tail, rest);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    }

    int n_;
    std::vector<S> e_;

public:
    /// Determinant of the submatrix on the given rows and columns (minors
    /// oracle support).  Index lists must be strictly increasing.
    S submatrix_det(const std::vector<int>& rows, const std::vector<int>& cols) const {
        return sub_det(rows, cols);
    }
};

using MatrixQ = SquareMatrix<Rational>;
using MatrixL = SquareMatrix<LaurentPoly>;
using MatrixD = SquareMatrix<double>;

inline MatrixD to_real(const MatrixQ& m) {
    MatrixD r(m.dim(), 0.0);
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(i, j).to_double();
    }
    return r;
}

/// Relative det-near-1 check for real matrices: |det - 1| <= tol * scale,
/// where scale is a Hadamard bound.  Exact domains use det() == 1 instead.
bool det_near_one(const MatrixD& m, double tol = 1e-9);

} // namespace cartanlab
