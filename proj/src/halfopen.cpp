#include "latticetile/halfopen.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>

#include "latticetile/errors.hpp"

namespace latticetile {

namespace {

std::pair<Rational, Rational> boxBounds(Convention c) {
    if (c == Convention::Cornered) return {Rational(0), Rational(1)};
    return {Rational(-1, 2), Rational(1, 2)};
}

} // namespace

bool HalfOpenParallelepiped::contains(const RVector& x) const {
    RVector t = inverse(basis) * (x - anchor);
    auto [lo, hi] = boxBounds(convention);
    for (const auto& ti : t)
        if (ti < lo || ti >= hi) return false;
    return true;
}

SlabSystem HalfOpenParallelepiped::slabs() const {
    RMatrix inv = inverse(basis);
    auto [lo, hi] = boxBounds(convention);
    SlabSystem out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        RVector n = inv.row(i);
        Rational shift = dot(n, anchor);
        out.push_back(Slab{n, lo + shift, hi + shift});
    }
    return out;
}

std::vector<RVector> HalfOpenParallelepiped::corners() const {
    auto [lo, hi] = boxBounds(convention);
    const std::size_t d = dim();
    std::vector<RVector> out;
    out.reserve(std::size_t(1) << d);
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        RVector p = anchor;
        for (std::size_t j = 0; j < d; ++j) {
            const Rational& t = (mask >> j & 1) ? hi : lo;
            for (std::size_t i = 0; i < d; ++i) p[i] += basis(i, j) * t;
        }
        out.push_back(std::move(p));
    }
    return out;
}

HalfOpenParallelepiped makeCell(const RMatrix& basis, Convention convention) {
    return makeCell(basis, convention, RVector(basis.rows(), Rational(0)));
}

HalfOpenParallelepiped makeCell(const RMatrix& basis, Convention convention, RVector anchor) {
    if (basis.rows() != basis.cols()) throw NonSquareError("cell basis must be square");
    if (det(basis) == 0) throw SingularMatrixError("cell basis is singular");
    return HalfOpenParallelepiped{basis, std::move(anchor), convention};
}

bool contains(const SlabSystem& s, const RVector& x) {
    for (const auto& slab : s) {
        Rational v = dot(slab.normal, x);
        if (v < slab.lo || v >= slab.hi) return false;
    }
    return true;
}

SlabSystem translated(const SlabSystem& s, const RVector& v) {
    SlabSystem out = s;
    for (auto& slab : out) {
        Rational shift = dot(slab.normal, v);
        slab.lo += shift;
        slab.hi += shift;
    }
    return out;
}

SlabSystem concatenated(const SlabSystem& a, const SlabSystem& b) {
    SlabSystem out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

namespace {

// Row of a Fourier-Motzkin system: coeffs . x <= rhs (strict or weak).
struct FmRow {
    RVector coeffs;
    Rational rhs;
    bool strict;
};

// Returns false when a trivially violated row is found; merged rows keep the
// tightest bound per direction.
bool normalizeRows(std::vector<FmRow>& rows) {
    std::map<std::vector<Rational>, std::pair<Rational, bool>> best;
    for (auto& r : rows) {
        std::size_t first = r.coeffs.size();
        for (std::size_t i = 0; i < r.coeffs.size(); ++i)
            if (r.coeffs[i] != 0) {
                first = i;
                break;
            }
        if (first == r.coeffs.size()) {
            if (r.rhs < 0 || (r.rhs == 0 && r.strict)) return false;
            continue;
        }
        Rational scale = abs(r.coeffs[first]);
        RVector c(r.coeffs.size());
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) c[i] = r.coeffs[i] / scale;
        Rational b = r.rhs / scale;
        auto it = best.find(c);
        if (it == best.end())
            best.emplace(std::move(c), std::make_pair(b, r.strict));
        else if (b < it->second.first || (b == it->second.first && r.strict))
            it->second = {b, r.strict};
    }
    rows.clear();
    for (auto& [c, rb] : best) rows.push_back(FmRow{c, rb.first, rb.second});
    return true;
}

// Eliminates variable `k`; rows must only involve variables 0..k.
std::optional<std::vector<FmRow>> eliminate(const std::vector<FmRow>& rows, std::size_t k) {
    std::vector<FmRow> lower, upper, rest;
    for (const auto& r : rows) {
        if (r.coeffs[k] > 0)
            upper.push_back(r);
        else if (r.coeffs[k] < 0)
            lower.push_back(r);
        else
            rest.push_back(r);
    }
    for (const auto& l : lower)
        for (const auto& u : upper) {
            // (l scaled by 1/-l_k) gives x_k >= c.x' - beta_l,
            // (u scaled by 1/u_k) gives x_k <= beta_u - d.x'.
            Rational ls = -l.coeffs[k], us = u.coeffs[k];
            FmRow combined;
            combined.coeffs.resize(rows[0].coeffs.size(), Rational(0));
            for (std::size_t i = 0; i < k; ++i)
                combined.coeffs[i] = l.coeffs[i] / ls + u.coeffs[i] / us;
            combined.rhs = l.rhs / ls + u.rhs / us;
            combined.strict = l.strict || u.strict;
            rest.push_back(std::move(combined));
        }
    if (!normalizeRows(rest)) return std::nullopt;
    return rest;
}

std::vector<FmRow> rowsFromSlabs(const SlabSystem& s) {
    std::vector<FmRow> rows;
    rows.reserve(2 * s.size());
    for (const auto& slab : s) {
        rows.push_back(FmRow{-slab.normal, -slab.lo, false});
        rows.push_back(FmRow{slab.normal, slab.hi, true});
    }
    return rows;
}

// Levels of the elimination: levels[k] involves variables 0..k.
std::optional<std::vector<std::vector<FmRow>>> eliminationLevels(const SlabSystem& s,
                                                                 std::size_t dim) {
    std::vector<std::vector<FmRow>> levels(dim);
    std::vector<FmRow> cur = rowsFromSlabs(s);
    if (!normalizeRows(cur)) return std::nullopt;
    for (std::size_t k = dim; k-- > 0;) {
        levels[k] = cur;
        if (k == 0) break;
        auto next = eliminate(cur, k);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return levels;
}

struct Interval {
    std::optional<Rational> lo, hi;
    bool loStrict = false, hiStrict = false;
    bool violated = false;
};

// Bounds on x_k from level-k rows, at already chosen x_0..x_{k-1}.
Interval boundsAt(const std::vector<FmRow>& rows, std::size_t k, const RVector& chosen) {
    Interval iv;
    for (const auto& r : rows) {
        if (r.coeffs[k] == 0) continue;
        Rational partial = 0;
        for (std::size_t i = 0; i < k; ++i) partial += r.coeffs[i] * chosen[i];
        Rational bound = (r.rhs - partial) / abs(r.coeffs[k]);
        if (r.coeffs[k] > 0) {
            if (!iv.hi || bound < *iv.hi || (bound == *iv.hi && r.strict)) {
                iv.hi = bound;
                iv.hiStrict = r.strict;
            }
        } else {
            Rational lo = -bound;
            if (!iv.lo || lo > *iv.lo || (lo == *iv.lo && r.strict)) {
                iv.lo = lo;
                iv.loStrict = r.strict;
            }
        }
    }
    return iv;
}

std::optional<Rational> pickFromInterval(const Interval& iv) {
    if (!iv.lo && !iv.hi) return Rational(0);
    if (iv.lo && !iv.hi) return iv.loStrict ? *iv.lo + 1 : *iv.lo;
    if (!iv.lo && iv.hi) return iv.hiStrict ? *iv.hi - 1 : *iv.hi;
    if (*iv.lo > *iv.hi) return std::nullopt;
    if (*iv.lo == *iv.hi) {
        if (iv.loStrict || iv.hiStrict) return std::nullopt;
        return *iv.lo;
    }
    return (*iv.lo + *iv.hi) / 2;
}

} // namespace

bool feasible(const SlabSystem& s) {
    return witnessPoint(s).has_value();
}

std::optional<RVector> witnessPoint(const SlabSystem& s) {
    if (s.empty()) return RVector{};
    const std::size_t dim = s.front().normal.size();
    auto levels = eliminationLevels(s, dim);
    if (!levels) return std::nullopt;
    RVector x;
    x.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        Interval iv = boundsAt((*levels)[k], k, x);
        auto v = pickFromInterval(iv);
        if (!v) return std::nullopt;
        x.push_back(*v);
    }
    return x;
}

namespace {

std::optional<RVector> solveSquare(const RMatrix& a, const RVector& b) {
    const std::size_t n = a.rows();
    RMatrix m = a;
    RVector rhs = b;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != k) {
            m.swapRows(k, p);
            std::swap(rhs[k], rhs[p]);
        }
        Rational piv = m(k, k);
        for (std::size_t j = k; j < n; ++j) m(k, j) /= piv;
        rhs[k] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            Rational f = m(i, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    return rhs;
}

struct Plane {
    RVector normal;
    Rational offset;
};

// Canonical key so that (n, c) and (-n, -c) coincide.
std::vector<Plane> dedupPlanes(const SlabSystem& s) {
    std::map<std::pair<std::vector<Rational>, Rational>, Plane> seen;
    for (const auto& slab : s) {
        for (int side = 0; side < 2; ++side) {
            RVector n = slab.normal;
            Rational c = side == 0 ? slab.lo : slab.hi;
            std::size_t first = n.size();
            for (std::size_t i = 0; i < n.size(); ++i)
                if (n[i] != 0) {
                    first = i;
                    break;
                }
            if (first == n.size()) continue;
            Rational scale = n[first];
            RVector key(n.size());
            for (std::size_t i = 0; i < n.size(); ++i) key[i] = n[i] / scale;
            Rational kc = c / scale;
            seen.emplace(std::make_pair(key, kc), Plane{key, kc});
        }
    }
    std::vector<Plane> out;
    out.reserve(seen.size());
    for (auto& [k, p] : seen) out.push_back(std::move(p));
    return out;
}

bool closedFeasible(const SlabSystem& s, const RVector& x) {
    for (const auto& slab : s) {
        Rational v = dot(slab.normal, x);
        if (v < slab.lo || v > slab.hi) return false;
    }
    return true;
}

void enumerateSubsets(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                      std::size_t start, const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == k) {
        f(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        enumerateSubsets(n, k, cur, i + 1, f);
        cur.pop_back();
    }
}

} // namespace

std::vector<RVector> closedVertices(const SlabSystem& s) {
    if (s.empty()) return {};
    const std::size_t dim = s.front().normal.size();
    std::vector<Plane> planes = dedupPlanes(s);
    std::vector<RVector> verts;
    std::vector<std::size_t> cur;
    enumerateSubsets(planes.size(), dim, cur, 0, [&](const std::vector<std::size_t>& idx) {
        RMatrix a(dim, dim);
        RVector b(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) a(r, c) = planes[idx[r]].normal[c];
            b[r] = planes[idx[r]].offset;
        }
        auto x = solveSquare(a, b);
        if (!x || !closedFeasible(s, *x)) return;
        verts.push_back(std::move(*x));
    });
    std::sort(verts.begin(), verts.end(), [](const RVector& a, const RVector& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (a[i] > b[i]) return false;
        }
        return false;
    });
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

namespace {

RVector centroid(const std::vector<RVector>& pts) {
    RVector c(pts.front().size(), Rational(0));
    for (const auto& p : pts) c = c + p;
    Rational n(static_cast<long>(pts.size()));
    for (auto& v : c) v /= n;
    return c;
}

Rational cross2(const RVector& a, const RVector& b) {
    return a[0] * b[1] - a[1] * b[0];
}

// Exact counterclockwise angular order around `center`.
void sortAround(std::vector<RVector>& pts, const RVector& center) {
    auto half = [&](const RVector& p) {
        RVector d = p - center;
        return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const RVector& a, const RVector& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        return cross2(a - center, b - center) > 0;
    });
}

Rational polygonArea(std::vector<RVector> pts) {
    if (pts.size() < 3) return 0;
    sortAround(pts, centroid(pts));
    Rational area = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const RVector& a = pts[i];
        const RVector& b = pts[(i + 1) % pts.size()];
        area += cross2(a, b);
    }
    return abs(area) / 2;
}

Rational det3(const RVector& a, const RVector& b, const RVector& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Rational volume3(const SlabSystem& s, const std::vector<RVector>& verts) {
    const RVector g = centroid(verts);
    Rational vol = 0;
    for (const auto& plane : dedupPlanes(s)) {
        std::vector<RVector> face;
        for (const auto& v : verts)
            if (dot(plane.normal, v) == plane.offset) face.push_back(v);
        if (face.size() < 3) continue;
        // 2-d coordinates inside the face via two independent edge vectors.
        const RVector& p0 = face[0];
        RVector u = face[1] - p0;
        std::size_t wi = 2;
        RVector w;
        for (; wi < face.size(); ++wi) {
            w = face[wi] - p0;
            // independent iff some 2x2 minor of [u w] is nonzero
            bool indep = false;
            for (std::size_t i = 0; i < 3 && !indep; ++i)
                for (std::size_t j = i + 1; j < 3 && !indep; ++j)
                    if (u[i] * w[j] - u[j] * w[i] != 0) indep = true;
            if (indep) break;
        }
        if (wi == face.size()) continue; // degenerate face
        // Solve v - p0 = s*u + t*w using two rows with nonzero minor.
        std::size_t r1 = 0, r2 = 1;
        bool found = false;
        for (std::size_t i = 0; i < 3 && !found; ++i)
            for (std::size_t j = i + 1; j < 3 && !found; ++j)
                if (u[i] * w[j] - u[j] * w[i] != 0) {
                    r1 = i;
                    r2 = j;
                    found = true;
                }
        Rational d0 = u[r1] * w[r2] - u[r2] * w[r1];
        std::vector<RVector> flat;
        flat.reserve(face.size());
        for (const auto& v : face) {
            RVector dv = v - p0;
            Rational sc = (dv[r1] * w[r2] - dv[r2] * w[r1]) / d0;
            Rational tc = (u[r1] * dv[r2] - u[r2] * dv[r1]) / d0;
            flat.push_back(RVector{sc, tc});
        }
        std::vector<std::size_t> order(face.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        RVector fc = centroid(flat);
        auto half = [&](const RVector& p) {
            RVector dd = p - fc;
            return (dd[1] > 0 || (dd[1] == 0 && dd[0] > 0)) ? 0 : 1;
        };
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            int ha = half(flat[a]), hb = half(flat[b]);
            if (ha != hb) return ha < hb;
            return cross2(flat[a] - fc, flat[b] - fc) > 0;
        });
        for (std::size_t i = 1; i + 1 < order.size(); ++i) {
            const RVector& a = face[order[0]];
            const RVector& b = face[order[i]];
            const RVector& c = face[order[i + 1]];
            vol += abs(det3(a - g, b - g, c - g));
        }
    }
    return vol / 6;
}

} // namespace

Rational exactVolume(const SlabSystem& s, std::size_t dim) {
    if (dim > 3) throw DimensionUnsupportedError("exact volume limited to dimension <= 3");
    std::vector<RVector> verts = closedVertices(s);
    if (verts.size() < dim + 1) return 0;
    if (dim == 0) return 1;
    if (dim == 1) {
        Rational lo = verts.front()[0], hi = verts.front()[0];
        for (const auto& v : verts) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        return hi - lo;
    }
    if (dim == 2) return polygonArea(verts);
    return volume3(s, verts);
}

VolumeEstimate monteCarloVolume(const SlabSystem& s, std::size_t dim, std::size_t samples,
                                std::uint64_t seed) {
    BBox box = bboxOfSlabs(s);
    if (box.empty || samples == 0) return {0.0, 0.0};
    std::mt19937_64 rng(seed);
    DVector lo = toDouble(box.lo), hi = toDouble(box.hi);
    double boxVol = 1;
    for (std::size_t i = 0; i < dim; ++i) boxVol *= hi[i] - lo[i];
    std::size_t hits = 0;
    RVector x(dim);
    for (std::size_t n = 0; n < samples; ++n) {
        for (std::size_t i = 0; i < dim; ++i) {
            double u = double(rng() >> 11) * 0x1p-53;
            double xi = lo[i] + u * (hi[i] - lo[i]);
            x[i] = Rational(xi);
        }
        if (contains(s, x)) ++hits;
    }
    double p = double(hits) / double(samples);
    double se = boxVol * std::sqrt(std::max(p * (1 - p), 0.0) / double(samples));
    return {boxVol * p, se};
}

BBox bboxOfPoints(const std::vector<RVector>& pts) {
    BBox box;
    for (const auto& p : pts) {
        if (box.empty) {
            box.lo = p;
            box.hi = p;
            box.empty = false;
            continue;
        }
        for (std::size_t i = 0; i < p.size(); ++i) {
            box.lo[i] = std::min(box.lo[i], p[i]);
            box.hi[i] = std::max(box.hi[i], p[i]);
        }
    }
    return box;
}

BBox bboxOfSlabs(const SlabSystem& s) {
    return bboxOfPoints(closedVertices(s));
}

bool bboxOverlap(const BBox& a, const BBox& b) {
    if (a.empty || b.empty) return false;
    for (std::size_t i = 0; i < a.lo.size(); ++i)
        if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return false;
    return true;
}

std::vector<RVector> polygon2D(const SlabSystem& s) {
    std::vector<RVector> verts = closedVertices(s);
    if (verts.size() < 3) return verts;
    sortAround(verts, centroid(verts));
    return verts;
}

bool CompiledMembership::contains(const std::vector<long long>& a) const {
    for (const auto& row : rows_) {
        __int128 acc = 0;
        for (std::size_t i = 0; i < row.n.size(); ++i)
            acc += static_cast<__int128>(row.n[i]) * a[i];
        if (acc < row.lo || acc > row.hi) return false;
    }
    return true;
}

CompiledMembership CompiledMembership::compile(const SlabSystem& s, const RMatrix& basisForPoints,
                                               const Int& scale) {
    CompiledMembership out;
    const Int limit = Int(1) << 62;
    RMatrix bt = basisForPoints.transposed();
    for (const auto& slab : s) {
        RVector n = bt * slab.normal; // evaluate against raw integer coords
        Int denom = 1;
        for (const auto& q : n) {
            Int l;
            mpz_lcm(l.get_mpz_t(), denom.get_mpz_t(), q.get_den().get_mpz_t());
            denom = l;
        }
        Row row;
        row.n.resize(n.size());
        for (std::size_t i = 0; i < n.size(); ++i) {
            Rational scaled = n[i] * Rational(denom);
            Int v = scaled.get_num();
            if (abs(v) >= limit) return out; // out.valid_ stays false
            row.n[i] = static_cast<long long>(v.get_si());
            if (Int(static_cast<long>(row.n[i])) != v) return out;
        }
        // lo <= n.x < hi  with x = B a / scale  becomes
        // ceil(lo * scale * denom) <= N.a <= ceil(hi * scale * denom) - 1
        Rational qlo = slab.lo * Rational(scale) * Rational(denom);
        Rational qhi = slab.hi * Rational(scale) * Rational(denom);
        Int ilo, ihi;
        mpz_cdiv_q(ilo.get_mpz_t(), qlo.get_num().get_mpz_t(), qlo.get_den().get_mpz_t());
        mpz_cdiv_q(ihi.get_mpz_t(), qhi.get_num().get_mpz_t(), qhi.get_den().get_mpz_t());
        ihi -= 1;
        const Int bigLimit = Int(1) << 120;
        if (abs(ilo) >= bigLimit || abs(ihi) >= bigLimit) return out;
        auto toI128 = [](const Int& v) {
            __int128 r = 0;
            bool neg = v < 0;
            Int a = abs(v);
            // value fits in 120 bits, peel 60 bits at a time
            Int high = a >> 60;
            Int low = a - (high << 60);
            r = (static_cast<__int128>(high.get_ui()) << 60) + static_cast<__int128>(low.get_ui());
            return neg ? -r : r;
        };
        row.lo = toI128(ilo);
        row.hi = toI128(ihi);
        out.rows_.push_back(std::move(row));
    }
    out.valid_ = true;
    return out;
}

} // namespace latticetile
