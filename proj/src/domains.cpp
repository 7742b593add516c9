#include "latticetile/domains.hpp"

#include "latticetile/errors.hpp"

namespace latticetile {

std::size_t FundamentalDomainSet::dim() const {
    if (baseCell) return baseCell->dim();
    if (!pieces.empty() && !pieces.front().constraints.empty())
        return pieces.front().constraints.front().normal.size();
    return 0;
}

std::vector<SlabSystem> FundamentalDomainSet::components() const {
    std::vector<SlabSystem> out;
    if (baseCell) {
        SlabSystem cell = baseCell->slabs();
        for (const auto& f : offsets) out.push_back(translated(cell, f));
    }
    for (const auto& p : pieces) out.push_back(p.constraints);
    return out;
}

bool FundamentalDomainSet::containsPoint(const RVector& x) const {
    for (const auto& c : components())
        if (contains(c, x)) return true;
    return false;
}

BBox FundamentalDomainSet::boundingBox() const {
    std::vector<RVector> pts;
    if (baseCell) {
        for (const auto& f : offsets)
            for (const auto& c : baseCell->corners()) pts.push_back(c + f);
    }
    for (const auto& p : pieces)
        for (const auto& v : closedVertices(p.constraints)) pts.push_back(v);
    return bboxOfPoints(pts);
}

Rational FundamentalDomainSet::totalVolume() const {
    Rational vol = 0;
    const std::size_t d = dim();
    for (const auto& c : components()) vol += exactVolume(c, d);
    return vol;
}

HalfOpenParallelepiped fundamentalParallelepiped(const Lattice& lattice, Convention convention) {
    return makeCell(lattice.basis(), convention);
}

ReducedPoint reduceMod(const RVector& x, const Lattice& lattice, Convention convention) {
    RVector t = lattice.basisInverse() * x;
    ZVector f(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        f[i] = convention == Convention::Cornered ? floorOf(t[i]) : floorOf(t[i] + Rational(1, 2));
    RVector l = lattice.basis() * toRational(f);
    return ReducedPoint{x - l, LatticePoint{l, f}};
}

CommensurablePair analyzeCommensurablePair(const Lattice& l, const Lattice& m) {
    if (!l.isExact() || !m.isExact()) throw FlavorMismatchError("commensurable analysis needs exact lattices");
    if (l.dim() != m.dim()) throw DimensionMismatchError("lattice dimension mismatch");
    CommensurablePair pair{intersect(l, m), sum(l, m), 0, {}, {}, {}};
    pair.k = index(l, pair.meet);
    Int km = index(m, pair.meet);
    if (pair.k != km) throw InternalError("coset counts of L and M over their intersection differ");
    pair.lReps = cosetRepresentatives(l, pair.meet);
    pair.mReps = cosetRepresentatives(m, pair.meet);
    pair.f1.reserve(pair.lReps.size());
    for (std::size_t i = 0; i < pair.lReps.size(); ++i)
        pair.f1.push_back(pair.lReps[i].coords + pair.mReps[i].coords);
    return pair;
}

FundamentalDomainSet commonFDCommensurable(const Lattice& l, const Lattice& m) {
    if (!l.isExact() || !m.isExact())
        throw FlavorMismatchError("exact construction requires exact lattices; use the windowed matcher instead");
    if (volume(l) != volume(m))
        throw VolumeMismatchError("vol(L) = " + toString(volume(l)) + " differs from vol(M) = " +
                                  toString(volume(m)) +
                                  "; no bounded common fundamental domain exists "
                                  "(the coset counts [S:L] and [S:M] over any common superlattice S differ)");
    CommensurablePair pair = analyzeCommensurablePair(l, m);
    FundamentalDomainSet fd;
    fd.baseCell = makeCell(canonicalBasis(pair.join), Convention::Cornered);
    fd.offsets = pair.f1;
    return fd;
}

} // namespace latticetile
