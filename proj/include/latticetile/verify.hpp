#ifndef LATTICETILE_VERIFY_HPP
#define LATTICETILE_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "latticetile/domains.hpp"

namespace latticetile {

struct TilingReport {
    enum class Mode { Exact, MonteCarlo };

    Mode mode = Mode::Exact;
    bool tiles = false;
    // multiplicity -> number of sampled (or discovered) points with it
    std::map<long, std::size_t> histogram;
    std::vector<RVector> witnesses; // points with multiplicity != 1 (at most 10)
    std::size_t sampleCount = 0;
    std::uint64_t seed = 0;
    // "exact" (volume + disjointness certified), "statistical-exact" (point
    // checks exact but no volume leg, dim > 3), or "monte-carlo".
    std::string evidence;
    bool disjoint = true;
    bool volumeMatches = true;
};

inline constexpr std::size_t kDefaultTilingSamples = 10000;

// Certifies or refutes that the candidate set tiles R^d by translations of
// the lattice: reduces every component modulo the lattice, then checks
// pairwise disjointness of the chunks, the exact volume identity (dim <= 3),
// and per-point multiplicity on exact dyadic samples.
TilingReport verifyExactTiling(const FundamentalDomainSet& f, const Lattice& lattice,
                               std::size_t samples = kDefaultTilingSamples, std::uint64_t seed = 0);

// Sampling-only verdict for a membership predicate with a known bound.
// Points are exact rationals, so each individual check is exact.
TilingReport verifyMonteCarloTiling(const std::function<bool(const RVector&)>& membership,
                                    const BBox& bound, const Lattice& lattice, std::size_t samples,
                                    std::uint64_t seed);

TilingReport verifyMonteCarloTiling(const FundamentalDomainSet& f, const Lattice& lattice,
                                    std::size_t samples, std::uint64_t seed);

} // namespace latticetile

#endif
