#ifndef LATTICETILE_WINDOW_HPP
#define LATTICETILE_WINDOW_HPP

#include <cstdint>
#include <vector>

#include "latticetile/lattice.hpp"

namespace latticetile {

// A lattice point inside a finite window, with double coordinates for the
// matching pipelines and the exact integer basis coordinates for bookkeeping.
struct WindowPoint {
    DVector coords;
    ZVector latticeCoords;
};

struct PointWindow {
    Lattice lattice;
    double radius = 0;
    std::vector<WindowPoint> points;
};

inline constexpr std::size_t kDefaultWindowCap = 1'000'000;

// Complete enumeration of the lattice points with sup-norm <= radius.
// Exact lattices are filtered with exact comparisons, approximate ones with
// strict double comparisons. Throws WindowTooLargeError past the cap.
PointWindow latticePointsInBox(const Lattice& lattice, double radius,
                               std::size_t cap = kDefaultWindowCap);

// Exact enumeration of lattice points p with lo <= p <= hi componentwise
// (closed box). Exact lattices only.
std::vector<LatticePoint> latticePointsInRationalBox(const Lattice& lattice, const RVector& lo,
                                                     const RVector& hi,
                                                     std::size_t cap = kDefaultWindowCap);

} // namespace latticetile

#endif
