/*
   Copyright 2026 The qrules Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Exact Gauss-Jordan elimination over a field.

#ifndef QRULES_LINSOLVE_HPP
#define QRULES_LINSOLVE_HPP

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "qrules/ring.hpp"

namespace qrules {

/// Dense row-major matrix of ring elements.
class Matrix {
public:
    Matrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

    const Ring& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transposed() const {
        Matrix t(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t.at(j, i) = at(i, j);
            }
        }
        return t;
    }

private:
    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

using Vector = std::vector<Elem>;

struct UniqueSolution {
    Vector x;
};

/// particular + span(nullspace); the nullspace basis comes from the free
/// columns of the reduced row echelon form.
struct AffineSpace {
    Vector particular;
    std::vector<Vector> nullspace;
};

/// A row combination c with c^T A = 0 and c^T b != 0.
struct Inconsistent {
    Vector certificate;
};

using LinsolveResult = std::variant<UniqueSolution, AffineSpace, Inconsistent>;

inline Vector mat_vec(const Matrix& a, const Vector& x) {
    if (x.size() != a.cols()) {
        throw Error(Errc::DimensionMismatch, "matrix-vector product with mismatched sizes");
    }
    const Ring& r = a.ring();
    Vector out(a.rows(), r.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!r.is_zero(a.at(i, j)) && !r.is_zero(x[j])) {
                r.add_mul(out[i], a.at(i, j), x[j]);
            }
        }
        r.reduce(out[i]);
    }
    return out;
}

inline bool vec_equal(const Ring& r, const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!r.equal(a[i], b[i])) {
            return false;
        }
    }
    return true;
}

namespace detail {

struct Echelon {
    std::vector<std::vector<Elem>> rows; // augmented rows, reduced
    std::vector<std::size_t> pivot_cols; // pivot column of rows[k]
};

/// Gauss-Jordan on [A | b]; pivots are scaled to 1.
inline Echelon rref(const Matrix& a, const Vector& b) {
    const Ring& r = a.ring();
    const std::size_t n = a.cols();
    std::vector<std::vector<Elem>> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<Elem> row(n + 1);
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = a.at(i, j);
            any = any || !r.is_zero(row[j]);
        }
        row[n] = b[i];
        any = any || !r.is_zero(row[n]);
        if (any) {
            rows.push_back(std::move(row));
        }
    }

    Echelon out;
    std::size_t next = 0;
    for (std::size_t col = 0; col < n && next < rows.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < rows.size() && r.is_zero(rows[pivot][col])) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[pivot]);
        auto& prow = rows[next];
        const Elem inv = r.inverse(prow[col]);
        std::vector<std::size_t> support;
        for (std::size_t j = col; j <= n; ++j) {
            if (!r.is_zero(prow[j])) {
                prow[j] = r.mul(prow[j], inv);
                support.push_back(j);
            }
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next || r.is_zero(rows[i][col])) {
                continue;
            }
            const Elem factor = rows[i][col];
            for (std::size_t j : support) {
                rows[i][j] = r.sub(rows[i][j], r.mul(factor, prow[j]));
            }
        }
        out.pivot_cols.push_back(col);
        ++next;
    }
    out.rows = std::move(rows);
    return out;
}

} // namespace detail

/// Solves A x = b exactly over a field.
inline LinsolveResult linsolve_exact(const Matrix& a, const Vector& b) {
    const Ring& r = a.ring();
    if (!r.is_field()) {
        throw Error(Errc::RequiresField, "linear solve over " + r.name());
    }
    if (b.size() != a.rows()) {
        throw Error(Errc::DimensionMismatch, "right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                                                 std::to_string(a.rows()) + " rows");
    }
    const std::size_t n = a.cols();
    auto ech = detail::rref(a, b);
    const std::size_t rank = ech.pivot_cols.size();

    for (std::size_t i = rank; i < ech.rows.size(); ++i) {
        if (!r.is_zero(ech.rows[i][n])) {
            // Certificate: solve A^T c = 0, b^T c = 1.
            Matrix at = a.transposed();
            Matrix sys(r, n + 1, a.rows());
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < a.rows(); ++k) {
                    sys.at(j, k) = at.at(j, k);
                }
            }
            for (std::size_t k = 0; k < a.rows(); ++k) {
                sys.at(n, k) = b[k];
            }
            Vector rhs(n + 1, r.zero());
            rhs[n] = r.one();
            auto cert = detail::rref(sys, rhs);
            Vector c(a.rows(), r.zero());
            for (std::size_t k = 0; k < cert.pivot_cols.size(); ++k) {
                c[cert.pivot_cols[k]] = cert.rows[k][a.rows()];
            }
            return Inconsistent{std::move(c)};
        }
    }

    Vector particular(n, r.zero());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t k = 0; k < rank; ++k) {
        particular[ech.pivot_cols[k]] = ech.rows[k][n];
        is_pivot[ech.pivot_cols[k]] = true;
    }
    if (rank == n) {
        return UniqueSolution{std::move(particular)};
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector v(n, r.zero());
        v[free] = r.one();
        for (std::size_t k = 0; k < rank; ++k) {
            v[ech.pivot_cols[k]] = r.neg(ech.rows[k][free]);
        }
        basis.push_back(std::move(v));
    }
    return AffineSpace{std::move(particular), std::move(basis)};
}

/// c^T A = 0 and c^T b != 0.
inline bool certificate_holds(const Matrix& a, const Vector& b, const Vector& c) {
    const Ring& r = a.ring();
    if (c.size() != a.rows()) {
        return false;
    }
    Vector lhs = mat_vec(a.transposed(), c);
    for (const auto& e : lhs) {
        if (!r.is_zero(e)) {
            return false;
        }
    }
    Elem dot = r.zero();
    for (std::size_t i = 0; i < c.size(); ++i) {
        r.add_mul(dot, c[i], b[i]);
    }
    r.reduce(dot);
    return !r.is_zero(dot);
}

} // namespace qrules

#endif // QRULES_LINSOLVE_HPP
