#ifndef LATTICETILE_MATCHING_HPP
#define LATTICETILE_MATCHING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "latticetile/matrix.hpp"
#include "latticetile/window.hpp"

namespace latticetile {

// Maximum-cardinality bipartite matching (Hopcroft-Karp). adj[a] lists the
// B-side neighbours of A-side vertex a.
struct MatchingResult {
    std::vector<int> matchA; // index into B or -1
    std::vector<int> matchB;
    std::size_t size = 0;
};
MatchingResult maximumBipartiteMatching(const std::vector<std::vector<int>>& adj, std::size_t bCount);

// A matching of the smaller side into the larger one minimizing the largest
// matched distance.
struct BoundedBijection {
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // (index into A, index into B)
    double bound = 0;        // max Euclidean distance over the pairs
    std::size_t deficiency = 0; // unmatched points on the A side
    bool swapped = false;    // true when B was the smaller side internally
};

inline constexpr std::size_t kMatchingCap = 4096;

// Bottleneck matching via binary search over the sorted pairwise distances,
// with a Hopcroft-Karp feasibility test at each candidate threshold. When
// |A| > |B| the sides are swapped internally and the pairs are inverted;
// deficiency is then |A| - |B|.
BoundedBijection bottleneckMatching(const std::vector<DVector>& a, const std::vector<DVector>& b,
                                    std::size_t cap = kMatchingCap);

struct HallReport {
    std::size_t matchingSize = 0;
    std::size_t deficiency = 0;              // |A| - matching size
    std::vector<std::size_t> violatingSet;   // S subset of A with |N(S)| < |S| (when deficient)
    std::vector<std::size_t> neighbourhood;  // N(S)
};

// Deficiency of A against B in the distance-threshold bipartite graph;
// extracts a Hall violator from the alternating-path forest when deficient.
HallReport hallDeficiency(const std::vector<DVector>& a, const std::vector<DVector>& b,
                          double threshold);

// Windowed direct-sum construction: match the L-window into a padded
// M-window and emit F1 = { l - phi(l) }.
struct WindowReport {
    double radius = 0;
    double margin = 0;
    double bottleneck = 0;
    std::size_t sourceCount = 0;
    std::size_t targetCount = 0;
    std::size_t deficiency = 0;
    std::vector<DVector> f1Points;
    double maxObserved = 0; // max norm over f1Points
    double boundLimit = 0;  // certified comparison bound (bottleneck + r for the split form)
};

// margin <= 0 selects the default 2 * max basis column norm. With
// requireEqualVolumes the volume precondition is enforced up front;
// otherwise unequal volumes are allowed and surface as growing deficiency,
// which is the windowed signature of the obstruction.
WindowReport directSumCommonFDWindow(const Lattice& l, const Lattice& m, double radius,
                                     double margin = -1, std::size_t cap = kMatchingCap,
                                     bool requireEqualVolumes = false);

// Split-form construction for L = Z^d, M = [[B,0],[C,I_r]] Z^d with
// |det B| = 1: project the M_1 window, bottleneck-match it into Z^{d-r},
// and pull each point back with a rounded correction in {0}^{d-r} x Z^r.
// Every emitted point has norm <= bottleneck + r.
WindowReport splitFormCommonFDWindow(const Matrix<double>& blockB, const Matrix<double>& blockC,
                                     double radius, double margin = -1,
                                     std::size_t cap = kMatchingCap);

} // namespace latticetile

#endif
