#include "latticetile/matrix.hpp"

#include "latticetile/errors.hpp"

namespace latticetile {

namespace {

template <typename Scalar>
Matrix<Scalar> mul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    if (a.cols() != b.rows()) throw DimensionMismatchError("matrix product shape mismatch");
    Matrix<Scalar> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

template <typename Scalar>
std::vector<Scalar> mulVec(const Matrix<Scalar>& a, const std::vector<Scalar>& x) {
    if (a.cols() != x.size()) throw DimensionMismatchError("matrix-vector shape mismatch");
    std::vector<Scalar> out(a.rows(), Scalar(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
    return out;
}

} // namespace

RMatrix operator*(const RMatrix& a, const RMatrix& b) { return mul(a, b); }
ZMatrix operator*(const ZMatrix& a, const ZMatrix& b) { return mul(a, b); }
RVector operator*(const RMatrix& a, const RVector& x) { return mulVec(a, x); }
ZVector operator*(const ZMatrix& a, const ZVector& x) { return mulVec(a, x); }

Int det(const ZMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquareError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    ZMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swapRows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                // Bareiss: division by the previous pivot is exact.
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Rational det(const RMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquareError("determinant of non-square matrix");
    auto [z, d] = clearDenominators(m);
    Rational result(det(z));
    Rational scale(d);
    for (std::size_t i = 0; i < m.rows(); ++i) result /= scale;
    return result;
}

RMatrix inverse(const RMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquareError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RMatrix a = m;
    RMatrix inv = RMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw SingularMatrixError("matrix is singular");
        if (p != k) {
            a.swapRows(k, p);
            inv.swapRows(k, p);
        }
        Rational piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

RMatrix toRational(const ZMatrix& m) {
    RMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

std::pair<ZMatrix, Int> clearDenominators(const RMatrix& m) {
    Int l = 1;
    for (const auto& q : m.entries()) {
        Int g;
        mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        l = g;
    }
    ZMatrix z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational scaled = m(i, j) * Rational(l);
            z(i, j) = scaled.get_num(); // denominator is 1 by construction
        }
    return {z, l};
}

RMatrix scaleMatrix(const ZMatrix& z, const Int& denom) {
    RMatrix out(z.rows(), z.cols());
    for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j) {
            Rational q(z(i, j), denom);
            q.canonicalize();
            out(i, j) = q;
        }
    return out;
}

Matrix<double> toDouble(const RMatrix& m) {
    Matrix<double> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
    return out;
}

} // namespace latticetile
