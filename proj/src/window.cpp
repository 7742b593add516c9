#include "latticetile/window.hpp"

#include <cmath>

#include "latticetile/errors.hpp"

namespace latticetile {

namespace {

// Per-coordinate integer ranges covering { c : basis * c in [lo, hi] },
// derived from interval arithmetic on the inverse basis rows.
template <typename Scalar, typename ToLongLo, typename ToLongHi>
std::vector<std::pair<long, long>> coordRanges(const Matrix<Scalar>& inv,
                                               const std::vector<Scalar>& lo,
                                               const std::vector<Scalar>& hi, ToLongLo ceilOf,
                                               ToLongHi floorOfFn) {
    const std::size_t d = inv.rows();
    std::vector<std::pair<long, long>> ranges(d);
    for (std::size_t i = 0; i < d; ++i) {
        Scalar lowest = Scalar(0), highest = Scalar(0);
        for (std::size_t j = 0; j < d; ++j) {
            Scalar a = inv(i, j) * lo[j];
            Scalar b = inv(i, j) * hi[j];
            lowest += std::min(a, b);
            highest += std::max(a, b);
        }
        ranges[i] = {ceilOf(lowest), floorOfFn(highest)};
    }
    return ranges;
}

std::size_t rangeCount(const std::vector<std::pair<long, long>>& ranges) {
    double total = 1;
    for (const auto& [a, b] : ranges) {
        if (b < a) return 0;
        total *= double(b - a) + 1.0;
        if (total > 1e18) return std::size_t(-1);
    }
    return std::size_t(total);
}

template <typename Body>
void iterateBox(const std::vector<std::pair<long, long>>& ranges, const Body& body) {
    const std::size_t d = ranges.size();
    std::vector<long> c(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (ranges[i].second < ranges[i].first) return;
        c[i] = ranges[i].first;
    }
    while (true) {
        body(c);
        std::size_t pos = 0;
        while (pos < d) {
            if (c[pos] < ranges[pos].second) {
                ++c[pos];
                break;
            }
            c[pos] = ranges[pos].first;
            ++pos;
        }
        if (pos == d) return;
    }
}

} // namespace

PointWindow latticePointsInBox(const Lattice& lattice, double radius, std::size_t cap) {
    if (radius <= 0) throw MathError("window radius must be positive");
    const std::size_t d = lattice.dim();
    PointWindow window{lattice, radius, {}};

    if (lattice.isExact()) {
        Rational r;
        // exact radius when it is representable; callers pass small values
        r = Rational(radius);
        RVector lo(d, -r), hi(d, r);
        auto pts = latticePointsInRationalBox(lattice, lo, hi, cap);
        window.points.reserve(pts.size());
        for (auto& p : pts) window.points.push_back(WindowPoint{toDouble(p.coords), p.latticeCoords});
        return window;
    }

    const auto& inv = lattice.approxBasisInverse();
    DVector lo(d, -radius), hi(d, radius);
    auto ranges = coordRanges(
        inv, lo, hi, [](double v) { return long(std::ceil(v - 1e-9)); },
        [](double v) { return long(std::floor(v + 1e-9)); });
    if (rangeCount(ranges) > cap * 8)
        throw WindowTooLargeError("window candidate box exceeds cap");
    const auto& basis = lattice.approxBasis();
    iterateBox(ranges, [&](const std::vector<long>& c) {
        DVector p(d, 0.0);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i) p[i] += basis(i, j) * double(c[j]);
        for (double v : p)
            if (std::fabs(v) > radius) return;
        ZVector zc(d);
        for (std::size_t i = 0; i < d; ++i) zc[i] = c[i];
        window.points.push_back(WindowPoint{std::move(p), std::move(zc)});
        if (window.points.size() > cap) throw WindowTooLargeError("window point count exceeds cap");
    });
    return window;
}

std::vector<LatticePoint> latticePointsInRationalBox(const Lattice& lattice, const RVector& lo,
                                                     const RVector& hi, std::size_t cap) {
    if (!lattice.isExact()) throw FlavorMismatchError("exact box enumeration needs an exact lattice");
    const std::size_t d = lattice.dim();
    const RMatrix& inv = lattice.basisInverse();
    auto ceilR = [](const Rational& q) {
        Int c;
        mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
        return long(c.get_si());
    };
    auto floorR = [](const Rational& q) { return long(floorOf(q).get_si()); };
    auto ranges = coordRanges(inv, lo, hi, ceilR, floorR);
    if (rangeCount(ranges) > cap * 8)
        throw WindowTooLargeError("window candidate box exceeds cap");
    std::vector<LatticePoint> out;
    iterateBox(ranges, [&](const std::vector<long>& c) {
        RVector p(d, Rational(0));
        for (std::size_t j = 0; j < d; ++j) {
            if (c[j] == 0) continue;
            for (std::size_t i = 0; i < d; ++i) p[i] += lattice.basis()(i, j) * Rational(long(c[j]));
        }
        for (std::size_t i = 0; i < d; ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return;
        ZVector zc(d);
        for (std::size_t i = 0; i < d; ++i) zc[i] = c[i];
        out.push_back(LatticePoint{std::move(p), std::move(zc)});
        if (out.size() > cap) throw WindowTooLargeError("window point count exceeds cap");
    });
    return out;
}

} // namespace latticetile
