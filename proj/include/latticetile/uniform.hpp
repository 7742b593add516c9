#ifndef LATTICETILE_UNIFORM_HPP
#define LATTICETILE_UNIFORM_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "latticetile/lattice.hpp"

namespace latticetile {

// Empirical probe of orbit density on a torus R^d / H: for sampled base
// points x and each k, counts the orbit points sum(n_i * g_i) + x,
// n_i in {0..k-1}, that land in the target set, and reports the minimum of
// count / k^r over the samples. A positive, k-stable ratio is evidence that
// the set meets every translated orbit window at the expected rate.
struct GUniformityReport {
    std::vector<std::size_t> kValues;
    std::map<std::size_t, double> minDensity; // k -> min over samples of count / k^r
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<DVector> generators;
    std::size_t rank = 0; // number of generators (finite part treated as trivial)
};

// `target` receives points reduced into the cornered cell of H.
GUniformityReport gUniformProbe(const std::function<bool(const DVector&)>& target,
                                const Lattice& torus, const std::vector<DVector>& generators,
                                const std::vector<std::size_t>& kValues, std::size_t samples,
                                std::uint64_t seed);

// Ball of the given radius around `center` in torus metric (nearest image).
std::function<bool(const DVector&)> torusBall(const Lattice& torus, DVector center, double radius);

} // namespace latticetile

#endif
