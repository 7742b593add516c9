#include "latticetile/normal_form.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>

#include "latticetile/errors.hpp"

namespace latticetile {

namespace {

void xgcd(const Int& a, const Int& b, Int& g, Int& p, Int& q) {
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Left-multiplies rows (r, i) of m and u by the unimodular matrix
// [[p, q], [-b/g, a/g]] where a = m(r,c), b = m(i,c), g = gcd(a,b).
// Afterwards m(r,c) = g and m(i,c) = 0.
void combineRows(ZMatrix& m, ZMatrix& u, std::size_t r, std::size_t i, std::size_t c) {
    Int a = m(r, c), b = m(i, c), g, p, q;
    xgcd(a, b, g, p, q);
    Int ag = a / g, bg = b / g;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Int mr = m(r, j), mi = m(i, j);
        m(r, j) = p * mr + q * mi;
        m(i, j) = ag * mi - bg * mr;
    }
    for (std::size_t j = 0; j < u.cols(); ++j) {
        Int ur = u(r, j), ui = u(i, j);
        u(r, j) = p * ur + q * ui;
        u(i, j) = ag * ui - bg * ur;
    }
}

void combineCols(ZMatrix& m, ZMatrix& v, std::size_t r, std::size_t j, std::size_t c) {
    Int a = m(c, r), b = m(c, j), g, p, q;
    xgcd(a, b, g, p, q);
    Int ag = a / g, bg = b / g;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int mr = m(i, r), mj = m(i, j);
        m(i, r) = p * mr + q * mj;
        m(i, j) = ag * mj - bg * mr;
    }
    for (std::size_t i = 0; i < v.rows(); ++i) {
        Int vr = v(i, r), vj = v(i, j);
        v(i, r) = p * vr + q * vj;
        v(i, j) = ag * vj - bg * vr;
    }
}

void negateRow(ZMatrix& m, ZMatrix& u, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) = -u(i, j);
}

// Standard upper-echelon row HNF: pivots positive, first nonzero of their
// row, entries above a pivot in [0, pivot), zero rows at the bottom.
HnfResult hnfUpper(const ZMatrix& m) {
    ZMatrix a = m;
    ZMatrix u = ZMatrix::identity(m.rows());
    std::size_t r = 0;
    for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
        std::size_t p = r;
        while (p < a.rows() && a(p, j) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            a.swapRows(r, p);
            u.swapRows(r, p);
        }
        for (std::size_t i = r + 1; i < a.rows(); ++i)
            if (a(i, j) != 0) combineRows(a, u, r, i, j);
        if (a(r, j) < 0) negateRow(a, u, r);
        for (std::size_t i = 0; i < r; ++i) {
            Int f = floorDiv(a(i, j), a(r, j));
            if (f == 0) continue;
            for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
            for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) -= f * u(r, k);
        }
        ++r;
    }
    return {a, u};
}

ZMatrix reverseCols(const ZMatrix& m) {
    ZMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, m.cols() - 1 - j);
    return out;
}

ZMatrix reverseRows(const ZMatrix& m) {
    ZMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(m.rows() - 1 - i, j);
    return out;
}

} // namespace

HnfResult hnf(const ZMatrix& m) {
    // Lower-triangular form is the column mirror of the upper-echelon form.
    HnfResult up = hnfUpper(reverseCols(m));
    return {reverseRows(reverseCols(up.h)), reverseRows(up.u)};
}

SnfResult snf(const ZMatrix& m) {
    ZMatrix a = m;
    ZMatrix u = ZMatrix::identity(m.rows());
    ZMatrix v = ZMatrix::identity(m.cols());
    const std::size_t k = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < k; ++t) {
        // Pick the nonzero entry of smallest magnitude as pivot.
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (a(i, j) == 0) continue;
                if (!pivot || mpz_cmpabs(a(i, j).get_mpz_t(), a(pivot->first, pivot->second).get_mpz_t()) < 0)
                    pivot = {i, j};
            }
        if (!pivot) break;
        if (pivot->first != t) {
            a.swapRows(t, pivot->first);
            u.swapRows(t, pivot->first);
        }
        if (pivot->second != t) {
            a.swapCols(t, pivot->second);
            v.swapCols(t, pivot->second);
        }

        while (true) {
            // Plain reductions when the pivot divides the entry (these never
            // touch the pivot row/column), gcd combines otherwise (these
            // strictly shrink |pivot|); together this terminates.
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                if (a(i, t) % a(t, t) == 0) {
                    Int f = a(i, t) / a(t, t);
                    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= f * a(t, c);
                    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= f * u(t, c);
                } else {
                    combineRows(a, u, t, i, t);
                }
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                if (a(t, j) % a(t, t) == 0) {
                    Int f = a(t, j) / a(t, t);
                    for (std::size_t rI = 0; rI < a.rows(); ++rI) a(rI, j) -= f * a(rI, t);
                    for (std::size_t rI = 0; rI < v.rows(); ++rI) v(rI, j) -= f * v(rI, t);
                } else {
                    combineCols(a, v, t, j, t);
                }
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i)
                if (a(i, t) != 0) clean = false;
            for (std::size_t j = t + 1; j < a.cols(); ++j)
                if (a(t, j) != 0) clean = false;
            if (!clean) continue;

            // Divisibility: the pivot must divide the whole remaining block.
            bool fixed = true;
            for (std::size_t i = t + 1; i < a.rows() && fixed; ++i)
                for (std::size_t j = t + 1; j < a.cols() && fixed; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        for (std::size_t c = 0; c < a.cols(); ++c) a(t, c) += a(i, c);
                        for (std::size_t c = 0; c < u.cols(); ++c) u(t, c) += u(i, c);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (a(t, t) < 0) negateRow(a, u, t);
    }
    return {a, u, v};
}

bool inRowLattice(const ZMatrix& h, const ZVector& row) {
    if (row.size() != h.cols()) throw DimensionMismatchError("row length mismatch");
    // Pivot of a nonzero row is its last nonzero entry; pivot columns are
    // distinct, so eliminate from the largest pivot column down.
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (pivot col, row index)
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t c = h.cols();
        for (std::size_t j = h.cols(); j-- > 0;)
            if (h(i, j) != 0) {
                c = j;
                break;
            }
        if (c != h.cols()) pivots.emplace_back(c, i);
    }
    std::sort(pivots.begin(), pivots.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    ZVector w = row;
    for (const auto& [c, i] : pivots) {
        if (w[c] == 0) continue;
        if (w[c] % h(i, c) != 0) return false;
        Int f = w[c] / h(i, c);
        for (std::size_t j = 0; j < h.cols(); ++j) w[j] -= f * h(i, j);
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

} // namespace latticetile
