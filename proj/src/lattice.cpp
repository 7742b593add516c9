#include "latticetile/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "latticetile/errors.hpp"

namespace latticetile {

namespace {

constexpr std::size_t kCosetCap = 1u << 20;

Matrix<double> doubleInverse(const Matrix<double>& m) {
    const std::size_t n = m.rows();
    Matrix<double> a = m;
    Matrix<double> inv = Matrix<double>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(a(i, k)) > std::fabs(a(p, k))) p = i;
        if (std::fabs(a(p, k)) < 1e-12) throw SingularMatrixError("approximate basis is numerically singular");
        if (p != k) {
            a.swapRows(k, p);
            inv.swapRows(k, p);
        }
        double piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            double f = a(i, k);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

bool lexLess(const RVector& a, const RVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

// Builds the lattice generated by the rows of `rows` (each row a generator).
// Requires the row lattice to be full rank in R^dim.
RMatrix canonicalBasisFromRows(const RMatrix& rows, std::size_t dim) {
    auto [z, denom] = clearDenominators(rows);
    HnfResult res = hnf(z);
    std::vector<ZVector> nonzero;
    for (std::size_t i = 0; i < res.h.rows(); ++i) {
        ZVector r = res.h.row(i);
        bool allZero = std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
        if (!allZero) nonzero.push_back(std::move(r));
    }
    if (nonzero.size() != dim) throw SingularMatrixError("generators do not span a full-rank lattice");
    ZMatrix h(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) h(i, j) = nonzero[i][j];
    // rows are generators; transpose back to column convention
    return scaleMatrix(h.transposed(), denom);
}

} // namespace

Lattice Lattice::fromExactBasis(RMatrix basis) {
    if (basis.rows() != basis.cols()) throw NonSquareError("lattice basis must be square");
    if (basis.rows() == 0) throw DimensionMismatchError("empty basis");
    Lattice l;
    l.dim_ = basis.rows();
    l.flavor_ = Flavor::Exact;
    l.inv_ = inverse(basis); // throws SingularMatrixError when det = 0
    l.basis_ = std::move(basis);
    return l;
}

Lattice Lattice::fromApproxBasis(Matrix<double> basis) {
    if (basis.rows() != basis.cols()) throw NonSquareError("lattice basis must be square");
    if (basis.rows() == 0) throw DimensionMismatchError("empty basis");
    Lattice l;
    l.dim_ = basis.rows();
    l.flavor_ = Flavor::Approximate;
    l.finv_ = doubleInverse(basis);
    l.fbasis_ = std::move(basis);
    return l;
}

Lattice Lattice::fromExactRows(const RMatrix& rows) {
    return fromExactBasis(rows.transposed());
}

Lattice Lattice::standard(std::size_t dim) {
    return fromExactBasis(RMatrix::identity(dim));
}

const RMatrix& Lattice::basis() const {
    if (!isExact()) throw FlavorMismatchError("exact basis requested from approximate lattice");
    return basis_;
}

const RMatrix& Lattice::basisInverse() const {
    if (!isExact()) throw FlavorMismatchError("exact basis requested from approximate lattice");
    return inv_;
}

const Matrix<double>& Lattice::approxBasis() const {
    if (isExact()) throw FlavorMismatchError("approximate basis requested from exact lattice");
    return fbasis_;
}

const Matrix<double>& Lattice::approxBasisInverse() const {
    if (isExact()) throw FlavorMismatchError("approximate basis requested from exact lattice");
    return finv_;
}

Matrix<double> Lattice::basisAsDouble() const {
    return isExact() ? toDouble(basis_) : fbasis_;
}

Rational volume(const Lattice& lattice) {
    return abs(det(lattice.basis()));
}

double volumeApprox(const Lattice& lattice) {
    if (lattice.isExact()) return volume(lattice).get_d();
    const auto& b = lattice.approxBasis();
    // expand along first row; dimensions are tiny
    std::function<double(const Matrix<double>&)> d = [&](const Matrix<double>& m) -> double {
        if (m.rows() == 1) return m(0, 0);
        double s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Matrix<double> minor(m.rows() - 1, m.cols() - 1);
            for (std::size_t i = 1; i < m.rows(); ++i) {
                std::size_t cc = 0;
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    if (c == j) continue;
                    minor(i - 1, cc++) = m(i, c);
                }
            }
            s += ((j % 2) ? -1.0 : 1.0) * m(0, j) * d(minor);
        }
        return s;
    };
    return std::fabs(d(b));
}

std::optional<ZVector> contains(const Lattice& lattice, const RVector& point) {
    if (point.size() != lattice.dim()) throw DimensionMismatchError("point dimension mismatch");
    RVector t = lattice.basisInverse() * point;
    ZVector coords(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!isInteger(t[i])) return std::nullopt;
        coords[i] = t[i].get_num();
    }
    return coords;
}

ZVector latticeCoordsOf(const Lattice& lattice, const RVector& point) {
    auto c = contains(lattice, point);
    if (!c) throw MathError("point is not a lattice member");
    return *c;
}

RMatrix canonicalBasis(const Lattice& lattice) {
    return canonicalBasisFromRows(lattice.basis().transposed(), lattice.dim());
}

bool sameLattice(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) return false;
    return canonicalBasis(a) == canonicalBasis(b);
}

bool isSublattice(const Lattice& sub, const Lattice& ambient) {
    if (sub.dim() != ambient.dim()) return false;
    for (std::size_t j = 0; j < sub.dim(); ++j)
        if (!contains(ambient, sub.basis().col(j))) return false;
    return true;
}

Lattice sum(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("lattice dimension mismatch");
    const std::size_t d = a.dim();
    RMatrix rows(2 * d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            rows(j, i) = a.basis()(i, j);
            rows(d + j, i) = b.basis()(i, j);
        }
    return Lattice::fromExactBasis(canonicalBasisFromRows(rows, d));
}

Lattice intersect(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("lattice dimension mismatch");
    const std::size_t d = a.dim();
    // Integer kernel of [A | -B]: solutions of A x = B y.
    RMatrix k(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            k(i, j) = a.basis()(i, j);
            k(i, d + j) = -b.basis()(i, j);
        }
    auto [kz, denom] = clearDenominators(k);
    SnfResult s = snf(kz);
    std::vector<std::size_t> kernelCols;
    for (std::size_t j = 0; j < 2 * d; ++j) {
        bool zero = j >= std::min(kz.rows(), kz.cols()) || s.d(j, j) == 0;
        if (zero) kernelCols.push_back(j);
    }
    if (kernelCols.size() != d)
        throw InternalError("rational lattice intersection must have full rank");
    // x-parts of the kernel basis, mapped through A.
    RMatrix x(d, d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t i = 0; i < d; ++i) x(i, c) = Rational(s.v(i, kernelCols[c]));
    RMatrix gens = a.basis() * x;
    (void)denom;
    return Lattice::fromExactBasis(canonicalBasisFromRows(gens.transposed(), d));
}

Int index(const Lattice& lattice, const Lattice& sub) {
    if (!isSublattice(sub, lattice)) throw NotSublatticeError("index of a non-sublattice");
    RMatrix t = lattice.basisInverse() * sub.basis();
    ZMatrix tz(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            if (!isInteger(t(i, j))) throw InternalError("sublattice coordinates not integral");
            tz(i, j) = t(i, j).get_num();
        }
    Int k = det(tz);
    if (k < 0) k = -k;
    if (k == 0) throw InternalError("index of rank-deficient sublattice");
    return k;
}

std::vector<LatticePoint> cosetRepresentatives(const Lattice& lattice, const Lattice& sub) {
    if (!isSublattice(sub, lattice)) throw NotSublatticeError("coset representatives of a non-sublattice");
    const std::size_t d = lattice.dim();
    RMatrix t = lattice.basisInverse() * sub.basis();
    ZMatrix tz(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) tz(i, j) = t(i, j).get_num();
    SnfResult s = snf(tz);
    Int total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= s.d(i, i);
    if (total > long(kCosetCap)) throw CapExceededError("coset count " + toString(total) + " exceeds cap");

    // In the basis lattice.basis() * u^{-1} the quotient splits as a direct
    // sum of cyclic groups of the invariant-factor orders.
    RMatrix splitBasis = lattice.basis() * inverse(toRational(s.u));
    std::vector<LatticePoint> reps;
    ZVector counter(d, 0);
    while (true) {
        RVector p(d, Rational(0));
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i) p[i] += splitBasis(i, j) * Rational(counter[j]);
        // Reduce into the cornered fundamental parallelepiped of `sub`.
        RVector hc = sub.basisInverse() * p;
        for (std::size_t j = 0; j < d; ++j) {
            Int f = floorOf(hc[j]);
            if (f == 0) continue;
            for (std::size_t i = 0; i < d; ++i) p[i] -= sub.basis()(i, j) * Rational(f);
        }
        reps.push_back(LatticePoint{p, latticeCoordsOf(lattice, p)});
        // mixed-radix increment over the invariant factors
        std::size_t pos = 0;
        while (pos < d) {
            counter[pos] += 1;
            if (counter[pos] < s.d(pos, pos)) break;
            counter[pos] = 0;
            ++pos;
        }
        if (pos == d) break;
    }
    std::sort(reps.begin(), reps.end(), [&](const LatticePoint& x, const LatticePoint& y) {
        return lexLess(sub.basisInverse() * x.coords, sub.basisInverse() * y.coords);
    });
    return reps;
}

SublatticeDecomposition adaptedBasis(const Lattice& lattice, const RMatrix& subBasis) {
    const std::size_t d = lattice.dim();
    const std::size_t r = subBasis.cols();
    if (subBasis.rows() != d || r == 0 || r > d) throw DimensionMismatchError("sublattice basis shape");
    RMatrix t = lattice.basisInverse() * subBasis;
    ZMatrix tz(d, r);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (!isInteger(t(i, j))) throw NotSublatticeError("columns are not members of the lattice");
            tz(i, j) = t(i, j).get_num();
        }
    SnfResult s = snf(tz);
    ZVector factors(r);
    Int idx = 1;
    for (std::size_t i = 0; i < r; ++i) {
        factors[i] = s.d(i, i);
        if (factors[i] == 0) throw NotSublatticeError("sublattice basis is rank deficient");
        idx *= factors[i];
    }
    RMatrix base = lattice.basis() * inverse(toRational(s.u));
    // Move the r columns that support the sublattice to the end.
    RMatrix adapted(d, d);
    for (std::size_t j = 0; j < d - r; ++j)
        for (std::size_t i = 0; i < d; ++i) adapted(i, j) = base(i, r + j);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < d; ++i) adapted(i, d - r + j) = base(i, j);
    return SublatticeDecomposition{lattice, subBasis, idx, adapted, factors, r};
}

RMatrix SublatticeDecomposition::complementBasis() const {
    const std::size_t d = adaptedBasis.rows();
    RMatrix out(d, d - rank);
    for (std::size_t j = 0; j < d - rank; ++j)
        for (std::size_t i = 0; i < d; ++i) out(i, j) = adaptedBasis(i, j);
    return out;
}

RMatrix SublatticeDecomposition::subBasisFromAdapted() const {
    const std::size_t d = adaptedBasis.rows();
    RMatrix out(d, rank);
    for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t i = 0; i < d; ++i)
            out(i, j) = adaptedBasis(i, d - rank + j) * Rational(invariantFactors[j]);
    return out;
}

} // namespace latticetile
