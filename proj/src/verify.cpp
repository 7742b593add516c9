#include "latticetile/verify.hpp"

#include <algorithm>

#include "latticetile/errors.hpp"
#include "latticetile/rng.hpp"
#include "latticetile/window.hpp"

namespace latticetile {

namespace {

constexpr unsigned kDyadicBits = 21;

bool spansFullRank(const SlabSystem& s, std::size_t d) {
    RMatrix m(s.size(), d);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = s[i].normal[j];
    // rank via Gaussian elimination
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < s.size(); ++col) {
        std::size_t p = rank;
        while (p < s.size() && m(p, col) == 0) ++p;
        if (p == s.size()) continue;
        m.swapRows(rank, p);
        for (std::size_t i = rank + 1; i < s.size(); ++i) {
            if (m(i, col) == 0) continue;
            Rational f = m(i, col) / m(rank, col);
            for (std::size_t j = col; j < d; ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank == d;
}

struct Chunk {
    SlabSystem sys;
    BBox box;
};

void recordWitness(TilingReport& report, const RVector& point, long multiplicity) {
    report.histogram[multiplicity] += 1;
    if (report.witnesses.size() < 10) report.witnesses.push_back(point);
}

} // namespace

TilingReport verifyExactTiling(const FundamentalDomainSet& f, const Lattice& lattice,
                               std::size_t samples, std::uint64_t seed) {
    if (!lattice.isExact()) throw FlavorMismatchError("exact verification needs an exact lattice");
    const std::size_t d = lattice.dim();
    if (f.dim() != d && !(f.pieces.empty() && f.offsets.empty()))
        throw DimensionMismatchError("candidate set dimension mismatch");

    TilingReport report;
    report.mode = TilingReport::Mode::Exact;
    report.seed = seed;
    report.evidence = d <= 3 ? "exact" : "statistical-exact";

    HalfOpenParallelepiped cell = fundamentalParallelepiped(lattice, Convention::Cornered);
    const SlabSystem cellSlabs = cell.slabs();
    const BBox cellBox = bboxOfPoints(cell.corners());

    // Cut every component along the lattice-cell boundaries and translate the
    // chunks into the cornered cell.
    std::vector<Chunk> chunks;
    for (const auto& comp : f.components()) {
        if (!spansFullRank(comp, d)) throw NotBoundedError("component is not a bounded polytope");
        BBox compBox = bboxOfSlabs(comp);
        if (compBox.empty) continue;
        auto translates =
            latticePointsInRationalBox(lattice, compBox.lo - cellBox.hi, compBox.hi - cellBox.lo);
        for (const auto& lambda : translates) {
            SlabSystem sys = concatenated(translated(comp, -lambda.coords), cellSlabs);
            if (!feasible(sys)) continue;
            chunks.push_back(Chunk{std::move(sys), {}});
        }
    }
    for (auto& c : chunks) c.box = bboxOfSlabs(c.sys);

    // Volume identity (the measure-theoretic leg), exact for dim <= 3.
    if (d <= 3) {
        Rational total = 0;
        for (const auto& c : chunks) total += exactVolume(c.sys, d);
        report.volumeMatches = (total == volume(lattice));
    }

    // Literal pairwise disjointness of the reduced chunks.
    auto multiplicityOf = [&](const RVector& x) {
        long count = 0;
        for (const auto& c : chunks)
            if (contains(c.sys, x)) ++count;
        return count;
    };
    for (std::size_t i = 0; i < chunks.size() && report.witnesses.size() < 10; ++i)
        for (std::size_t j = i + 1; j < chunks.size() && report.witnesses.size() < 10; ++j) {
            if (!bboxOverlap(chunks[i].box, chunks[j].box)) continue;
            auto w = witnessPoint(concatenated(chunks[i].sys, chunks[j].sys));
            if (!w) continue;
            report.disjoint = false;
            recordWitness(report, *w, multiplicityOf(*w));
            report.sampleCount += 1;
        }

    // Exact point samples in the cornered cell.
    std::vector<CompiledMembership> compiled;
    compiled.reserve(chunks.size());
    const Int scale = Int(1) << kDyadicBits;
    for (const auto& c : chunks) compiled.push_back(CompiledMembership::compile(c.sys, cell.basis, scale));
    Rng rng(seed);
    bool allOne = true;
    std::vector<long long> raw(d);
    RVector t(d);
    for (std::size_t n = 0; n < samples; ++n) {
        for (std::size_t i = 0; i < d; ++i) {
            raw[i] = static_cast<long long>(rng.next() >> (64 - kDyadicBits));
            t[i] = Rational(static_cast<long>(raw[i]), 1);
            t[i] /= Rational(scale);
        }
        long count = 0;
        bool needExact = false;
        for (std::size_t c = 0; c < chunks.size(); ++c) {
            if (compiled[c].valid()) {
                if (compiled[c].contains(raw)) ++count;
            } else {
                needExact = true;
                break;
            }
        }
        if (needExact) {
            RVector x = cell.basis * t;
            count = multiplicityOf(x);
        }
        report.histogram[count] += 1;
        report.sampleCount += 1;
        if (count != 1) {
            allOne = false;
            if (report.witnesses.size() < 10) report.witnesses.push_back(cell.basis * t);
        }
    }

    report.tiles = report.disjoint && report.volumeMatches && allOne;
    return report;
}

TilingReport verifyMonteCarloTiling(const std::function<bool(const RVector&)>& membership,
                                    const BBox& bound, const Lattice& lattice, std::size_t samples,
                                    std::uint64_t seed) {
    if (!lattice.isExact()) throw FlavorMismatchError("rational-sample verification needs an exact lattice");
    if (bound.empty) throw NotBoundedError("candidate set has an empty bounding box");
    const std::size_t d = lattice.dim();

    TilingReport report;
    report.mode = TilingReport::Mode::MonteCarlo;
    report.seed = seed;
    report.evidence = "monte-carlo";

    HalfOpenParallelepiped cell = fundamentalParallelepiped(lattice, Convention::Cornered);
    const BBox cellBox = bboxOfPoints(cell.corners());
    auto translates =
        latticePointsInRationalBox(lattice, cellBox.lo - bound.hi, cellBox.hi - bound.lo);

    Rng rng(seed);
    bool allOne = true;
    RVector t(d);
    for (std::size_t n = 0; n < samples; ++n) {
        for (auto& ti : t) ti = rng.dyadic(kDyadicBits);
        RVector x = cell.basis * t;
        long count = 0;
        for (const auto& lambda : translates)
            if (membership(x - lambda.coords)) ++count;
        report.histogram[count] += 1;
        report.sampleCount += 1;
        if (count != 1) {
            allOne = false;
            if (report.witnesses.size() < 10) report.witnesses.push_back(x);
        }
    }
    report.tiles = allOne;
    return report;
}

TilingReport verifyMonteCarloTiling(const FundamentalDomainSet& f, const Lattice& lattice,
                                    std::size_t samples, std::uint64_t seed) {
    const std::size_t d = lattice.dim();
    BBox bound = f.boundingBox();
    if (bound.empty) throw NotBoundedError("candidate set is empty");

    // Pre-compile x in comp + lambda for each candidate translate.
    HalfOpenParallelepiped cell = fundamentalParallelepiped(lattice, Convention::Cornered);
    const BBox cellBox = bboxOfPoints(cell.corners());
    auto translates =
        latticePointsInRationalBox(lattice, cellBox.lo - bound.hi, cellBox.hi - bound.lo);
    const auto comps = f.components();
    const Int scale = Int(1) << kDyadicBits;

    struct PerTranslate {
        std::vector<CompiledMembership> compiled;
        std::vector<SlabSystem> systems;
        bool allValid = true;
    };
    std::vector<PerTranslate> table(translates.size());
    for (std::size_t li = 0; li < translates.size(); ++li) {
        for (const auto& comp : comps) {
            SlabSystem shifted = translated(comp, translates[li].coords);
            auto cm = CompiledMembership::compile(shifted, cell.basis, scale);
            if (!cm.valid()) table[li].allValid = false;
            table[li].compiled.push_back(std::move(cm));
            table[li].systems.push_back(std::move(shifted));
        }
    }

    TilingReport report;
    report.mode = TilingReport::Mode::MonteCarlo;
    report.seed = seed;
    report.evidence = "monte-carlo";

    Rng rng(seed);
    bool allOne = true;
    std::vector<long long> raw(d);
    RVector t(d);
    for (std::size_t n = 0; n < samples; ++n) {
        for (std::size_t i = 0; i < d; ++i) {
            raw[i] = static_cast<long long>(rng.next() >> (64 - kDyadicBits));
            t[i] = Rational(static_cast<long>(raw[i]), 1);
            t[i] /= Rational(scale);
        }
        long count = 0;
        std::optional<RVector> x; // computed lazily for the exact fallback
        for (const auto& pt : table) {
            bool hit = false;
            if (pt.allValid) {
                for (const auto& cm : pt.compiled)
                    if (cm.contains(raw)) {
                        hit = true;
                        break;
                    }
            } else {
                if (!x) x = cell.basis * t;
                for (const auto& sys : pt.systems)
                    if (contains(sys, *x)) {
                        hit = true;
                        break;
                    }
            }
            if (hit) ++count;
        }
        report.histogram[count] += 1;
        report.sampleCount += 1;
        if (count != 1) {
            allOne = false;
            if (report.witnesses.size() < 10) report.witnesses.push_back(cell.basis * t);
        }
    }
    report.tiles = allOne;
    return report;
}

} // namespace latticetile
