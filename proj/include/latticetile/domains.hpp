#ifndef LATTICETILE_DOMAINS_HPP
#define LATTICETILE_DOMAINS_HPP

#include <optional>
#include <vector>

#include "latticetile/halfopen.hpp"
#include "latticetile/lattice.hpp"
#include "latticetile/piece.hpp"

namespace latticetile {

// A bounded candidate (common) fundamental domain: translates of a base cell
// by a finite offset set, plus optional polytope pieces. The represented set
// is the union of all components, which must be pairwise disjoint.
struct FundamentalDomainSet {
    std::optional<HalfOpenParallelepiped> baseCell;
    std::vector<RVector> offsets;
    std::vector<Piece> pieces;

    std::size_t dim() const;
    // One slab system per component (offset copies of the base cell first,
    // then the pieces).
    std::vector<SlabSystem> components() const;
    bool containsPoint(const RVector& x) const;
    BBox boundingBox() const;
    Rational totalVolume() const; // dim <= 3

    bool operator==(const FundamentalDomainSet& o) const = default;
};

HalfOpenParallelepiped fundamentalParallelepiped(const Lattice& lattice, Convention convention);

struct ReducedPoint {
    RVector rep;    // representative inside the cell
    LatticePoint l; // x = rep + l
};

// Unique decomposition x = rep + l with rep in the (origin-anchored)
// fundamental parallelepiped of the lattice under the given convention.
ReducedPoint reduceMod(const RVector& x, const Lattice& lattice, Convention convention);

// Shared data of an equal-volume commensurable pair: H = L n M, the sum
// lattice S = L + M, the coset representatives, and the finite offset set
// F1 = { l_i + m_i } paired in canonical order.
struct CommensurablePair {
    Lattice meet; // H
    Lattice join; // S = L + M
    Int k;        // [L : H] = [M : H]
    std::vector<LatticePoint> lReps;
    std::vector<LatticePoint> mReps;
    std::vector<RVector> f1;
};

CommensurablePair analyzeCommensurablePair(const Lattice& l, const Lattice& m);

// Bounded common fundamental domain of an equal-volume exact pair:
// the cornered cell of L + M translated by F1. Throws VolumeMismatchError
// when the volumes differ.
FundamentalDomainSet commonFDCommensurable(const Lattice& l, const Lattice& m);

} // namespace latticetile

#endif
