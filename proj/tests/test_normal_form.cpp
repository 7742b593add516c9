#include <doctest.h>

#include "latticetile/normal_form.hpp"
#include "test_util.hpp"

using namespace latticetile;
using namespace latticetile::testutil;

namespace {

bool isLowerTriangularHnf(const ZMatrix& h) {
    // nonzero rows: pivot = last nonzero entry, positive; entries below a
    // pivot reduced into [0, pivot)
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t c = h.cols();
        for (std::size_t j = h.cols(); j-- > 0;)
            if (h(i, j) != 0) {
                c = j;
                break;
            }
        if (c == h.cols()) continue;
        if (h(i, c) <= 0) return false;
        for (const auto& [pc, pi] : pivots)
            if (pc >= c) return false; // pivot columns must strictly increase
        for (std::size_t i2 = i + 1; i2 < h.rows(); ++i2)
            if (h(i2, c) < 0 || h(i2, c) >= h(i, c)) return false;
        pivots.emplace_back(c, i);
    }
    return true;
}

ZMatrix mulZ(const ZMatrix& a, const ZMatrix& b) { return a * b; }

} // namespace

TEST_CASE("hnf examples") {
    {
        auto [h, u] = hnf(zmat({{1, 0}, {1, 1}}));
        CHECK(h == ZMatrix::identity(2));
        CHECK(mulZ(u, zmat({{1, 0}, {1, 1}})) == h);
    }
    {
        auto [h, u] = hnf(zmat({{2, 0}, {0, 3}}));
        CHECK(h == zmat({{2, 0}, {0, 3}}));
    }
    {
        // a single row cannot be reduced by the {+-1} unimodular group
        auto [h, u] = hnf(zmat({{4, 6}}));
        CHECK(h == zmat({{4, 6}}));
    }
    {
        // negative single row is normalized by sign
        auto [h, u] = hnf(zmat({{-4, -6}}));
        CHECK(h == zmat({{4, 6}}));
    }
}

TEST_CASE("hnf properties on random matrices") {
    Rng rng(11);
    for (int n = 0; n < 60; ++n) {
        std::size_t rows = std::size_t(rng.uniformInt(1, 5));
        std::size_t cols = std::size_t(rng.uniformInt(1, 4));
        ZMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniformInt(-6, 6);
        auto [h, u] = hnf(m);
        CHECK(mulZ(u, m) == h);
        CHECK(isLowerTriangularHnf(h));
        Int ud = det(u);
        CHECK((ud == 1 || ud == -1));
        // Same row lattice: h = u m with |det u| = 1 gives rowlat(h) within
        // rowlat(m); membership of every m row in rowlat(h) gives the other
        // inclusion.
        for (std::size_t i = 0; i < rows; ++i) CHECK(inRowLattice(h, m.row(i)));
    }
}

TEST_CASE("snf examples") {
    {
        auto [d, u, v] = snf(zmat({{2, 0}, {0, 3}}));
        CHECK(d == zmat({{1, 0}, {0, 6}}));
        CHECK(mulZ(mulZ(u, zmat({{2, 0}, {0, 3}})), v) == d);
    }
    {
        auto [d, u, v] = snf(ZMatrix::identity(3));
        CHECK(d == ZMatrix::identity(3));
    }
    {
        auto [d, u, v] = snf(zmat({{2, 0}, {0, 2}}));
        CHECK(d == zmat({{2, 0}, {0, 2}}));
    }
}

TEST_CASE("snf properties on random matrices") {
    Rng rng(13);
    for (int n = 0; n < 60; ++n) {
        std::size_t rows = std::size_t(rng.uniformInt(1, 4));
        std::size_t cols = std::size_t(rng.uniformInt(1, 4));
        ZMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniformInt(-7, 7);
        auto [d, u, v] = snf(m);
        CHECK(mulZ(mulZ(u, m), v) == d);
        CHECK(abs(det(u)) == 1);
        CHECK(abs(det(v)) == 1);
        // diagonal, nonnegative, divisibility chain
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(d(i, j) == 0);
        for (std::size_t i = 0; i + 1 < std::min(rows, cols); ++i) {
            CHECK(d(i, i) >= 0);
            if (d(i, i) != 0) CHECK(d(i + 1, i + 1) % d(i, i) == 0);
            if (d(i, i) == 0) CHECK(d(i + 1, i + 1) == 0);
        }
        if (rows == cols) {
            Int prod = 1;
            for (std::size_t i = 0; i < rows; ++i) prod *= d(i, i);
            CHECK(prod == abs(det(m)));
        }
    }
}
