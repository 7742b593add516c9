#ifndef LATTICETILE_PIECE_HPP
#define LATTICETILE_PIECE_HPP

#include "latticetile/halfopen.hpp"

namespace latticetile {

// One piece of an equidecomposition: a half-open polytope (slab list)
// together with its group translation g = l + m, l in L and m in M.
struct Piece {
    SlabSystem constraints;
    RVector l;
    RVector m;
    ZVector gLatticeCoords; // coordinates of l + m in the sum lattice

    RVector translation() const { return l + m; }
    bool containsPoint(const RVector& x) const { return contains(constraints, x); }

    bool operator==(const Piece& o) const = default;
};

// Exact volume for dim <= 3; Monte Carlo with standard error above.
struct PieceVolume {
    bool exact = true;
    Rational value;          // exact mode
    VolumeEstimate estimate; // Monte Carlo mode
};

PieceVolume pieceVolume(const Piece& p, std::size_t dim);

} // namespace latticetile

#endif
