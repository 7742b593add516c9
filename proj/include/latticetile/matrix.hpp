#ifndef LATTICETILE_MATRIX_HPP
#define LATTICETILE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "latticetile/rational.hpp"

namespace latticetile {

// Small dense matrices, row-major. These carry lattice bases and the
// half-open cell geometry; dimensions stay in the single digits.
template <typename Scalar>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows)
            for (const auto& v : r) entries_.push_back(v);
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    std::vector<Scalar> row(std::size_t i) const {
        return std::vector<Scalar>(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    }
    std::vector<Scalar> col(std::size_t j) const {
        std::vector<Scalar> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swapRows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swapCols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    const std::vector<Scalar>& entries() const { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

using RMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Int>;

RMatrix operator*(const RMatrix& a, const RMatrix& b);
ZMatrix operator*(const ZMatrix& a, const ZMatrix& b);
RVector operator*(const RMatrix& a, const RVector& x);
ZVector operator*(const ZMatrix& a, const ZVector& x);

// Exact determinant via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix. Throws NonSquareError.
Rational det(const RMatrix& m);
Int det(const ZMatrix& m);

// Exact inverse; throws SingularMatrixError / NonSquareError.
RMatrix inverse(const RMatrix& m);

RMatrix toRational(const ZMatrix& m);

// Clears denominators: returns (z, d) with m = z / d and d = lcm of all entry
// denominators (d >= 1).
std::pair<ZMatrix, Int> clearDenominators(const RMatrix& m);

RMatrix scaleMatrix(const ZMatrix& z, const Int& denom);

Matrix<double> toDouble(const RMatrix& m);

} // namespace latticetile

#endif
