#pragma once

// Dense exact rational matrices with rank, kernel and solve via Gaussian
// elimination. All matrices of operators in this library are built in
// canonical monomial bases, so ranks are reproducible bit-for-bit.

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace liouville {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static RationalMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& columns) {
        RationalMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows)
                throw Error("matrix", "column " + std::to_string(j) + " has wrong length");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    RationalVector column(std::size_t j) const {
        RationalVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
    }

    std::size_t nonzeros() const {
        return static_cast<std::size_t>(
            std::count_if(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) != 0; }));
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix", "product dimension mismatch");
        RationalMatrix c(a.rows_, b.cols_);
        Rational t;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (sgn(b(k, j)) == 0) continue;
                    t = aik * b(k, j);
                    c(i, j) += t;
                }
            }
        return c;
    }

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix", "sum dimension mismatch");
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
        return a;
    }

    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix", "difference dimension mismatch");
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }

    friend RationalMatrix operator*(const Rational& s, RationalMatrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }

    RationalVector apply(std::span<const Rational> v) const {
        if (v.size() != cols_) throw Error("matrix", "apply dimension mismatch");
        RationalVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> reduce_rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        Rational factor, t;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && sgn((*this)(p, c)) == 0) ++p;
            if (p == rows_) continue;
            swap_rows(p, r);
            Rational inv = 1 / (*this)(r, c);
            for (std::size_t j = c; j < cols_; ++j)
                if (sgn((*this)(r, j)) != 0) (*this)(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || sgn((*this)(i, c)) == 0) continue;
                factor = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j) {
                    if (sgn((*this)(r, j)) == 0) continue;
                    t = factor * (*this)(r, j);
                    (*this)(i, j) -= t;
                }
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    /// Row echelon form in place (no back substitution); returns the rank.
    std::size_t reduce_echelon() {
        std::size_t r = 0;
        Rational factor, t;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && sgn((*this)(p, c)) == 0) ++p;
            if (p == rows_) continue;
            swap_rows(p, r);
            const Rational inv = 1 / (*this)(r, c);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (sgn((*this)(i, c)) == 0) continue;
                factor = (*this)(i, c) * inv;
                for (std::size_t j = c; j < cols_; ++j) {
                    if (sgn((*this)(r, j)) == 0) continue;
                    t = factor * (*this)(r, j);
                    (*this)(i, j) -= t;
                }
            }
            ++r;
        }
        return r;
    }

    std::size_t rank() const {
        // Eliminate along the shorter side.
        RationalMatrix m = rows_ <= cols_ ? *this : transpose();
        return m.reduce_echelon();
    }

    /// Basis of { v : A v = 0 }, one vector per free column, in RREF normal form.
    std::vector<RationalVector> kernel_basis() const {
        RationalMatrix m = *this;
        const auto pivots = m.reduce_rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<RationalVector> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            RationalVector v(cols_);
            v[free] = 1;
            for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Some solution x of A x = b, or nullopt when b is not in the column space.
    std::optional<RationalVector> solve(std::span<const Rational> b) const {
        if (b.size() != rows_) throw Error("matrix", "solve dimension mismatch");
        RationalMatrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        const auto pivots = aug.reduce_rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        RationalVector x(cols_);
        for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, cols_);
        return x;
    }

    std::optional<RationalMatrix> inverse() const {
        if (rows_ != cols_) throw Error("matrix", "inverse of a non-square matrix");
        const std::size_t n = rows_;
        RationalMatrix aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
            aug(i, n + i) = 1;
        }
        const auto pivots = aug.reduce_rref();
        if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
        RationalMatrix inv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
        return inv;
    }

    Rational determinant() const {
        if (rows_ != cols_) throw Error("matrix", "determinant of a non-square matrix");
        RationalMatrix m = *this;
        Rational det = 1, factor, t;
        const std::size_t n = rows_;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && sgn(m(p, c)) == 0) ++p;
            if (p == n) return 0;
            if (p != c) {
                m.swap_rows(p, c);
                det = -det;
            }
            det *= m(c, c);
            for (std::size_t i = c + 1; i < n; ++i) {
                if (sgn(m(i, c)) == 0) continue;
                factor = m(i, c) / m(c, c);
                for (std::size_t j = c; j < n; ++j) {
                    t = factor * m(c, j);
                    m(i, j) -= t;
                }
            }
        }
        return det;
    }

    /// Sparse triplet text export: one "row col value" line per nonzero entry,
    /// preceded by a "rows cols nnz" header line.
    void write_triplets(std::ostream& os) const {
        os << rows_ << ' ' << cols_ << ' ' << nonzeros() << '\n';
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn((*this)(i, j)) != 0) os << i << ' ' << j << ' ' << (*this)(i, j).get_str() << '\n';
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// True when the column spans of `a` and `b` (same row count) coincide.
inline bool same_column_space(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw Error("matrix", "span comparison with different ambient dimension");
    RationalMatrix joined(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) joined(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) joined(i, a.cols() + j) = b(i, j);
    }
    const auto r = joined.rank();
    return a.rank() == r && b.rank() == r;
}

} // namespace liouville
