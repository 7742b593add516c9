#ifndef LATTICETILE_HALFOPEN_HPP
#define LATTICETILE_HALFOPEN_HPP

#include <optional>
#include <vector>

#include "latticetile/lattice.hpp"
#include "latticetile/matrix.hpp"

namespace latticetile {

enum class Convention { Cornered, Centered };

// One half-open slab: lo <= normal . x < hi.
struct Slab {
    RVector normal;
    Rational lo;
    Rational hi;

    bool operator==(const Slab& o) const = default;
};

using SlabSystem = std::vector<Slab>;

// Half-open parallelepiped anchor + basis * box, where box is [0,1)^d
// (cornered) or [-1/2,1/2)^d (centered). Membership is exact.
struct HalfOpenParallelepiped {
    RMatrix basis;
    RVector anchor;
    Convention convention = Convention::Cornered;

    std::size_t dim() const { return basis.rows(); }
    bool contains(const RVector& x) const;
    SlabSystem slabs() const;
    // 2^d corner points of the closure.
    std::vector<RVector> corners() const;

    bool operator==(const HalfOpenParallelepiped& o) const = default;
};

HalfOpenParallelepiped makeCell(const RMatrix& basis, Convention convention);
HalfOpenParallelepiped makeCell(const RMatrix& basis, Convention convention, RVector anchor);

bool contains(const SlabSystem& s, const RVector& x);
SlabSystem translated(const SlabSystem& s, const RVector& v);
SlabSystem concatenated(const SlabSystem& a, const SlabSystem& b);

// Exact feasibility of the half-open system (Fourier-Motzkin with
// strictness tracking). Intended for modest dimensions.
bool feasible(const SlabSystem& s);

// A point of the half-open set, when one exists.
std::optional<RVector> witnessPoint(const SlabSystem& s);

// Vertices of the closed polytope {lo <= n.x <= hi}. The system must be
// bounded. Deduplicated, no particular order.
std::vector<RVector> closedVertices(const SlabSystem& s);

// Exact Lebesgue volume of the closed polytope for dim <= 3 (empty or
// lower-dimensional sets give 0). Throws DimensionUnsupportedError above 3.
Rational exactVolume(const SlabSystem& s, std::size_t dim);

// Monte Carlo volume estimate for higher dimensions.
struct VolumeEstimate {
    double value = 0;
    double standardError = 0;
};
VolumeEstimate monteCarloVolume(const SlabSystem& s, std::size_t dim, std::size_t samples,
                                std::uint64_t seed);

struct BBox {
    RVector lo;
    RVector hi;
    bool empty = true;
};

BBox bboxOfPoints(const std::vector<RVector>& pts);
BBox bboxOfSlabs(const SlabSystem& s);
bool bboxOverlap(const BBox& a, const BBox& b); // closed-interval test

// Counterclockwise vertex cycle of a 2-d polytope (closure); for rendering.
std::vector<RVector> polygon2D(const SlabSystem& s);

// Fast integer membership test for points of the form basisForPoints * (a / scale)
// with integer vector a. Falls back to invalid when coefficients do not fit
// the guarded 128-bit evaluation.
class CompiledMembership {
public:
    bool valid() const { return valid_; }
    bool contains(const std::vector<long long>& a) const;

    struct Row {
        std::vector<long long> n;
        __int128 lo; // inclusive, pre-scaled
        __int128 hi; // inclusive
    };

    static CompiledMembership compile(const SlabSystem& s, const RMatrix& basisForPoints,
                                      const Int& scale);

private:
    bool valid_ = false;
    std::vector<Row> rows_;
};

} // namespace latticetile

#endif
