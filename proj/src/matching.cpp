#include "latticetile/matching.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "latticetile/errors.hpp"

namespace latticetile {

MatchingResult maximumBipartiteMatching(const std::vector<std::vector<int>>& adj,
                                        std::size_t bCount) {
    const int nA = int(adj.size());
    const int nB = int(bCount);
    MatchingResult res;
    res.matchA.assign(nA, -1);
    res.matchB.assign(nB, -1);

    std::vector<int> dist(nA);
    const int INF = std::numeric_limits<int>::max();

    auto bfs = [&]() {
        std::queue<int> q;
        for (int a = 0; a < nA; ++a) {
            if (res.matchA[a] == -1) {
                dist[a] = 0;
                q.push(a);
            } else {
                dist[a] = INF;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b : adj[a]) {
                int a2 = res.matchB[b];
                if (a2 == -1) {
                    found = true;
                } else if (dist[a2] == INF) {
                    dist[a2] = dist[a] + 1;
                    q.push(a2);
                }
            }
        }
        return found;
    };

    std::function<bool(int)> dfs = [&](int a) {
        for (int b : adj[a]) {
            int a2 = res.matchB[b];
            if (a2 == -1 || (dist[a2] == dist[a] + 1 && dfs(a2))) {
                res.matchA[a] = b;
                res.matchB[b] = a;
                return true;
            }
        }
        dist[a] = std::numeric_limits<int>::max();
        return false;
    };

    while (bfs()) {
        for (int a = 0; a < nA; ++a)
            if (res.matchA[a] == -1 && dfs(a)) ++res.size;
    }
    return res;
}

namespace {

double sq(double x) { return x * x; }

double squaredDistance(const DVector& a, const DVector& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += sq(a[i] - b[i]);
    return s;
}

std::vector<std::vector<int>> thresholdAdjacency(const std::vector<std::vector<double>>& d2,
                                                 double threshold) {
    std::vector<std::vector<int>> adj(d2.size());
    for (std::size_t i = 0; i < d2.size(); ++i)
        for (std::size_t j = 0; j < d2[i].size(); ++j)
            if (d2[i][j] <= threshold) adj[i].push_back(int(j));
    return adj;
}

} // namespace

BoundedBijection bottleneckMatching(const std::vector<DVector>& a, const std::vector<DVector>& b,
                                    std::size_t cap) {
    if (a.size() > cap || b.size() > cap)
        throw CapExceededError("matching instance exceeds cap of " + std::to_string(cap));
    if (a.size() > b.size()) {
        BoundedBijection inner = bottleneckMatching(b, a, cap);
        BoundedBijection out;
        out.swapped = true;
        out.bound = inner.bound;
        out.pairs.reserve(inner.pairs.size());
        for (auto [i, j] : inner.pairs) out.pairs.emplace_back(j, i);
        std::sort(out.pairs.begin(), out.pairs.end());
        out.deficiency = a.size() - inner.pairs.size();
        return out;
    }

    BoundedBijection out;
    if (a.empty()) return out;

    std::vector<std::vector<double>> d2(a.size(), std::vector<double>(b.size()));
    std::vector<double> values;
    values.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            d2[i][j] = squaredDistance(a[i], b[j]);
            values.push_back(d2[i][j]);
        }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    auto feasibleAt = [&](double t) {
        return maximumBipartiteMatching(thresholdAdjacency(d2, t), b.size()).size == a.size();
    };

    std::size_t lo = 0, hi = values.size() - 1;
    if (!feasibleAt(values[hi]))
        throw InternalError("complete bipartite matching infeasible");
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasibleAt(values[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    double best = values[lo];
    MatchingResult m = maximumBipartiteMatching(thresholdAdjacency(d2, best), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.pairs.emplace_back(i, std::size_t(m.matchA[i]));
    out.bound = std::sqrt(best);
    out.deficiency = 0;
    return out;
}

HallReport hallDeficiency(const std::vector<DVector>& a, const std::vector<DVector>& b,
                          double threshold) {
    std::vector<std::vector<int>> adj(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (squaredDistance(a[i], b[j]) <= threshold * threshold) adj[i].push_back(int(j));
    MatchingResult m = maximumBipartiteMatching(adj, b.size());

    HallReport report;
    report.matchingSize = m.size;
    report.deficiency = a.size() - m.size;
    if (report.deficiency == 0) return report;

    // Koenig: A-vertices reachable from the exposed ones by alternating paths
    // form a maximal Hall violator.
    std::vector<bool> inS(a.size(), false), inN(b.size(), false);
    std::queue<int> q;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (m.matchA[i] == -1) {
            inS[i] = true;
            q.push(int(i));
        }
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x]) {
            if (inN[y]) continue;
            inN[y] = true;
            int x2 = m.matchB[y];
            if (x2 != -1 && !inS[x2]) {
                inS[x2] = true;
                q.push(x2);
            }
        }
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (inS[i]) report.violatingSet.push_back(i);
    for (std::size_t j = 0; j < b.size(); ++j)
        if (inN[j]) report.neighbourhood.push_back(j);
    return report;
}

namespace {

double maxColumnNorm(const Matrix<double>& m) {
    double best = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) s += sq(m(i, j));
        best = std::max(best, std::sqrt(s));
    }
    return best;
}

} // namespace

WindowReport directSumCommonFDWindow(const Lattice& l, const Lattice& m, double radius,
                                     double margin, std::size_t cap, bool requireEqualVolumes) {
    if (l.dim() != m.dim()) throw DimensionMismatchError("lattice dimension mismatch");
    if (requireEqualVolumes) {
        if (l.isExact() && m.isExact()) {
            if (volume(l) != volume(m)) throw VolumeMismatchError("lattice volumes differ");
        } else if (std::fabs(volumeApprox(l) - volumeApprox(m)) >
                   1e-9 * std::max(volumeApprox(l), volumeApprox(m))) {
            throw VolumeMismatchError("lattice volumes differ beyond tolerance");
        }
    }
    if (margin <= 0) margin = 2 * maxColumnNorm(m.basisAsDouble());

    PointWindow wl = latticePointsInBox(l, radius);
    PointWindow wm = latticePointsInBox(m, radius + margin);

    std::vector<DVector> src, dst;
    src.reserve(wl.points.size());
    dst.reserve(wm.points.size());
    for (const auto& p : wl.points) src.push_back(p.coords);
    for (const auto& p : wm.points) dst.push_back(p.coords);

    BoundedBijection phi = bottleneckMatching(src, dst, cap);

    WindowReport report;
    report.radius = radius;
    report.margin = margin;
    report.bottleneck = phi.bound;
    report.sourceCount = src.size();
    report.targetCount = dst.size();
    report.deficiency = phi.deficiency;
    report.f1Points.reserve(phi.pairs.size());
    double maxNorm = 0;
    for (auto [i, j] : phi.pairs) {
        DVector v(src[i].size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = src[i][k] - dst[j][k];
        maxNorm = std::max(maxNorm, euclidNorm(v));
        report.f1Points.push_back(std::move(v));
    }
    report.maxObserved = maxNorm;
    report.boundLimit = phi.bound;
    return report;
}

WindowReport splitFormCommonFDWindow(const Matrix<double>& blockB, const Matrix<double>& blockC,
                                     double radius, double margin, std::size_t cap) {
    const std::size_t q = blockB.rows();
    const std::size_t r = blockC.rows();
    if (blockB.cols() != q || blockC.cols() != q)
        throw DimensionMismatchError("block shapes must be (q x q) and (r x q)");

    {
        Lattice probe = Lattice::fromApproxBasis(blockB);
        double vol = volumeApprox(probe);
        if (std::fabs(vol - 1.0) > 1e-9)
            throw DetNotOneError("top-left block must be unimodular (|det| = 1), got " +
                                 std::to_string(vol));
    }
    if (margin <= 0) margin = 2 * maxColumnNorm(blockB);

    // Window of M_1 = { (Bx, Cx) : x in Z^q }, truncated by the projection.
    PointWindow wm = latticePointsInBox(Lattice::fromApproxBasis(blockB), radius, cap);
    PointWindow wz = latticePointsInBox(Lattice::standard(q), radius + margin, cap);

    std::vector<DVector> src, dst;
    for (const auto& p : wm.points) src.push_back(p.coords); // already the projections Bx
    for (const auto& p : wz.points) dst.push_back(p.coords);

    BoundedBijection phi = bottleneckMatching(src, dst, cap);

    WindowReport report;
    report.radius = radius;
    report.margin = margin;
    report.bottleneck = phi.bound;
    report.sourceCount = src.size();
    report.targetCount = dst.size();
    report.deficiency = phi.deficiency;
    report.boundLimit = phi.bound + double(r);

    double maxNorm = 0;
    for (auto [i, j] : phi.pairs) {
        const ZVector& x = wm.points[i].latticeCoords;
        DVector c(r, 0.0);
        for (std::size_t row = 0; row < r; ++row)
            for (std::size_t col = 0; col < q; ++col)
                c[row] += blockC(row, col) * x[col].get_d();
        DVector v(q + r, 0.0);
        for (std::size_t k = 0; k < q; ++k) v[k] = dst[j][k] - src[i][k];
        for (std::size_t k = 0; k < r; ++k) {
            double rounded = std::ceil(c[k] - 0.5); // ties toward -infinity
            v[q + k] = rounded - c[k];
        }
        double norm = euclidNorm(v);
        maxNorm = std::max(maxNorm, norm);
        if (norm > report.boundLimit + 1e-9)
            throw InternalError("split-form output exceeded the bottleneck + r bound");
        report.f1Points.push_back(std::move(v));
    }
    report.maxObserved = maxNorm;
    return report;
}

} // namespace latticetile
