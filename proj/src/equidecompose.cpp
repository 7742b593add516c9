#include "latticetile/equidecompose.hpp"

#include <algorithm>

#include "latticetile/errors.hpp"
#include "latticetile/rng.hpp"
#include "latticetile/window.hpp"

namespace latticetile {

namespace {

bool lexLessZ(const ZVector& a, const ZVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

struct Chunk {
    HalfOpenParallelepiped cell;
    RVector offset;
};

BBox cellBBox(const HalfOpenParallelepiped& cell) {
    return bboxOfPoints(cell.corners());
}

} // namespace

Equidecomposition equidecompose(const Lattice& l, const Lattice& m,
                                const HalfOpenParallelepiped& pl,
                                const HalfOpenParallelepiped& pm) {
    if (!l.isExact() || !m.isExact())
        throw FlavorMismatchError("equidecomposition requires exact lattices");
    if (l.dim() != m.dim()) throw DimensionMismatchError("lattice dimension mismatch");
    if (volume(l) != volume(m))
        throw VolumeMismatchError("vol(L) = " + toString(volume(l)) + " differs from vol(M) = " +
                                  toString(volume(m)) +
                                  "; translates of one cell cannot partition the other");
    if (!sameLattice(Lattice::fromExactBasis(pl.basis), l))
        throw MathError("source cell basis does not generate L");
    if (!sameLattice(Lattice::fromExactBasis(pm.basis), m))
        throw MathError("target cell basis does not generate M");

    const std::size_t d = l.dim();
    const bool identical = sameLattice(l, m);
    const Lattice join = identical ? l : sum(l, m);

    // Intermediate common fundamental domain F, as a list of disjoint
    // half-open chunks. For L = M the target cell itself serves; otherwise
    // the finite-coset construction provides P_{L+M} + F1.
    std::vector<Chunk> chunks;
    if (identical) {
        chunks.push_back(Chunk{pm, RVector(d, Rational(0))});
    } else {
        CommensurablePair pair = analyzeCommensurablePair(l, m);
        HalfOpenParallelepiped ps = makeCell(canonicalBasis(pair.join), Convention::Cornered);
        for (const auto& f : pair.f1) chunks.push_back(Chunk{ps, f});
    }

    BBox fBox;
    {
        std::vector<RVector> pts;
        for (const auto& c : chunks)
            for (const auto& v : c.cell.corners()) pts.push_back(v + c.offset);
        fBox = bboxOfPoints(pts);
    }
    const BBox plBox = cellBBox(pl);
    const BBox pmBox = cellBBox(pm);

    const SlabSystem plSlabs = pl.slabs();
    const SlabSystem pmSlabs = pm.slabs();

    // Step 1 candidates: l with P_L meeting F - l.
    RVector lLo = fBox.lo - plBox.hi, lHi = fBox.hi - plBox.lo;
    std::vector<LatticePoint> lCandidates = latticePointsInRationalBox(l, lLo, lHi);

    std::vector<Piece> pieces;
    for (const auto& lp : lCandidates) {
        for (const auto& chunk : chunks) {
            // x in P_L with x + l inside the chunk
            SlabSystem sys1 = concatenated(
                plSlabs, translated(chunk.cell.slabs(), chunk.offset - lp.coords));
            if (!feasible(sys1)) continue;
            BBox sys1Box = bboxOfSlabs(sys1);
            // Step 2 candidates: m with x + l - m in P_M for some x in sys1.
            RVector mLo = sys1Box.lo + lp.coords - pmBox.hi;
            RVector mHi = sys1Box.hi + lp.coords - pmBox.lo;
            for (const auto& mp : latticePointsInRationalBox(m, mLo, mHi)) {
                RVector g = lp.coords - mp.coords;
                SlabSystem sys = concatenated(sys1, translated(pmSlabs, -g));
                if (!feasible(sys)) continue;
                Piece piece;
                piece.constraints = std::move(sys);
                piece.l = lp.coords;
                piece.m = -mp.coords;
                piece.gLatticeCoords = latticeCoordsOf(join, g);
                pieces.push_back(std::move(piece));
            }
        }
    }

    std::stable_sort(pieces.begin(), pieces.end(), [&](const Piece& a, const Piece& b) {
        if (a.gLatticeCoords != b.gLatticeCoords) return lexLessZ(a.gLatticeCoords, b.gLatticeCoords);
        ZVector la = latticeCoordsOf(l, a.l), lb = latticeCoordsOf(l, b.l);
        return lexLessZ(la, lb);
    });
    return Equidecomposition{pl, pm, std::move(pieces)};
}

Equidecomposition equidecompose(const Lattice& l, const Lattice& m, Convention convention) {
    return equidecompose(l, m, fundamentalParallelepiped(l, convention),
                         fundamentalParallelepiped(m, convention));
}

FundamentalDomainSet commonFDFromEquidecomposition(const std::vector<Piece>& pieces) {
    FundamentalDomainSet fd;
    fd.pieces.reserve(pieces.size());
    for (const auto& p : pieces) {
        Piece shifted = p;
        shifted.constraints = translated(p.constraints, p.l);
        fd.pieces.push_back(std::move(shifted));
    }
    std::vector<BBox> boxes;
    boxes.reserve(fd.pieces.size());
    for (const auto& p : fd.pieces) boxes.push_back(bboxOfSlabs(p.constraints));
    for (std::size_t i = 0; i < fd.pieces.size(); ++i)
        for (std::size_t j = i + 1; j < fd.pieces.size(); ++j) {
            if (!bboxOverlap(boxes[i], boxes[j])) continue;
            if (feasible(concatenated(fd.pieces[i].constraints, fd.pieces[j].constraints)))
                throw OverlapError("translated pieces " + std::to_string(i) + " and " +
                                   std::to_string(j) + " overlap");
        }
    return fd;
}

FundamentalDomainSet commonFDFromEquidecomposition(const Equidecomposition& e) {
    return commonFDFromEquidecomposition(e.pieces);
}

Rational pieceVolumeSum(const Equidecomposition& e) {
    Rational total = 0;
    const std::size_t d = e.source.dim();
    for (const auto& p : e.pieces) total += exactVolume(p.constraints, d);
    return total;
}

PieceVolume pieceVolume(const Piece& p, std::size_t dim) {
    PieceVolume v;
    if (dim <= 3) {
        v.exact = true;
        v.value = exactVolume(p.constraints, dim);
    } else {
        v.exact = false;
        v.estimate = monteCarloVolume(p.constraints, dim, 200000, 12345);
    }
    return v;
}

bool isExactPartition(const Equidecomposition& e, std::size_t samples, std::uint64_t seed) {
    const std::size_t d = e.source.dim();
    Rng rng(seed);
    for (std::size_t side = 0; side < 2; ++side) {
        const HalfOpenParallelepiped& cell = side == 0 ? e.source : e.target;
        for (std::size_t n = 0; n < samples; ++n) {
            RVector t(d);
            for (auto& ti : t) {
                ti = rng.dyadic(21);
                if (cell.convention == Convention::Centered) ti -= Rational(1, 2);
            }
            RVector x = cell.basis * t + cell.anchor;
            std::size_t count = 0;
            for (const auto& p : e.pieces) {
                const RVector probe = side == 0 ? x : x - p.translation();
                if (p.containsPoint(probe)) ++count;
            }
            if (count != 1) return false;
        }
    }
    return true;
}

} // namespace latticetile
