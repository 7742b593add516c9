#include "latticetile/uniform.hpp"

#include <cmath>

#include "latticetile/errors.hpp"
#include "latticetile/rng.hpp"

namespace latticetile {

namespace {

// Reduce x into the cornered fundamental cell of the torus lattice.
DVector reduceToCell(const Matrix<double>& basis, const Matrix<double>& inv, const DVector& x) {
    const std::size_t d = x.size();
    DVector t(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) t[i] += inv(i, j) * x[j];
    for (auto& v : t) v -= std::floor(v);
    DVector out(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out[i] += basis(i, j) * t[j];
    return out;
}

} // namespace

GUniformityReport gUniformProbe(const std::function<bool(const DVector&)>& target,
                                const Lattice& torus, const std::vector<DVector>& generators,
                                const std::vector<std::size_t>& kValues, std::size_t samples,
                                std::uint64_t seed) {
    if (generators.empty()) throw MathError("at least one generator is required");
    const std::size_t d = torus.dim();
    for (const auto& g : generators)
        if (g.size() != d) throw DimensionMismatchError("generator dimension mismatch");
    const std::size_t r = generators.size();

    Matrix<double> basis = torus.basisAsDouble();
    Matrix<double> inv(d, d);
    {
        // reuse the lattice's exact or approximate inverse
        if (torus.isExact()) {
            RMatrix ri = torus.basisInverse();
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) inv(i, j) = ri(i, j).get_d();
        } else {
            inv = torus.approxBasisInverse();
        }
    }

    GUniformityReport report;
    report.kValues = kValues;
    report.samples = samples;
    report.seed = seed;
    report.generators = generators;
    report.rank = r;

    for (std::size_t k : kValues) {
        double minRatio = -1;
        for (std::size_t s = 0; s < samples; ++s) {
            Rng rng(Rng::derive(seed, s)); // per-sample stream, order-independent
            DVector x(d, 0.0);
            {
                DVector t(d);
                for (auto& ti : t) ti = rng.uniform01();
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) x[i] += basis(i, j) * t[j];
            }
            // orbit points sum n_i g_i + x over the k^r grid
            std::vector<std::size_t> n(r, 0);
            std::size_t count = 0;
            while (true) {
                DVector p = x;
                for (std::size_t gi = 0; gi < r; ++gi)
                    for (std::size_t i = 0; i < d; ++i) p[i] += double(n[gi]) * generators[gi][i];
                if (target(reduceToCell(basis, inv, p))) ++count;
                std::size_t pos = 0;
                while (pos < r) {
                    if (++n[pos] < k) break;
                    n[pos] = 0;
                    ++pos;
                }
                if (pos == r) break;
            }
            double ratio = double(count) / std::pow(double(k), double(r));
            if (minRatio < 0 || ratio < minRatio) minRatio = ratio;
        }
        report.minDensity[k] = minRatio;
    }
    return report;
}

std::function<bool(const DVector&)> torusBall(const Lattice& torus, DVector center, double radius) {
    Matrix<double> basis = torus.basisAsDouble();
    Matrix<double> inv(basis.rows(), basis.cols());
    if (torus.isExact()) {
        RMatrix ri = torus.basisInverse();
        for (std::size_t i = 0; i < basis.rows(); ++i)
            for (std::size_t j = 0; j < basis.cols(); ++j) inv(i, j) = ri(i, j).get_d();
    } else {
        inv = torus.approxBasisInverse();
    }
    const std::size_t d = basis.rows();
    return [=](const DVector& x) {
        // nearest-image distance: reduce x - center with rounding
        DVector diff(d);
        for (std::size_t i = 0; i < d; ++i) diff[i] = x[i] - center[i];
        DVector t(d, 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) t[i] += inv(i, j) * diff[j];
        for (auto& v : t) v -= std::round(v);
        DVector back(d, 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) back[i] += basis(i, j) * t[j];
        return euclidNorm(back) <= radius;
    };
}

} // namespace latticetile
