#ifndef LATTICETILE_EQUIDECOMPOSE_HPP
#define LATTICETILE_EQUIDECOMPOSE_HPP

#include <cstdint>
#include <vector>

#include "latticetile/domains.hpp"

namespace latticetile {

// An exact (L+M)-equidecomposition of two fundamental parallelepipeds:
// the pieces partition the source literally, and the translated pieces
// partition the target literally.
struct Equidecomposition {
    HalfOpenParallelepiped source; // P_L
    HalfOpenParallelepiped target; // P_M
    std::vector<Piece> pieces;
};

// Decomposes P_L into half-open polytope pieces whose translates by elements
// of L + M partition P_M. P_L / P_M must be fundamental parallelepipeds of
// L / M (any basis of the same lattice). Throws VolumeMismatchError when the
// volumes differ.
Equidecomposition equidecompose(const Lattice& l, const Lattice& m,
                                const HalfOpenParallelepiped& pl,
                                const HalfOpenParallelepiped& pm);

// Convenience: centered fundamental parallelepipeds of the given bases.
Equidecomposition equidecompose(const Lattice& l, const Lattice& m,
                                Convention convention = Convention::Centered);

// Assembles the bounded common fundamental domain F = union of (S_i + l_i).
// Throws OverlapError if the translated pieces fail to be pairwise disjoint.
FundamentalDomainSet commonFDFromEquidecomposition(const std::vector<Piece>& pieces);
FundamentalDomainSet commonFDFromEquidecomposition(const Equidecomposition& e);

// Exact sum of all piece volumes (dim <= 3).
Rational pieceVolumeSum(const Equidecomposition& e);

// Test hook: true iff each of `samples` exact points of the source lies in
// exactly one piece and each sampled target point lies in exactly one
// translated piece.
bool isExactPartition(const Equidecomposition& e, std::size_t samples, std::uint64_t seed);

} // namespace latticetile

#endif
