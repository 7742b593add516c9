#include "latticetile/render.hpp"

#include <cmath>
#include <cstdio>

#include "latticetile/errors.hpp"
#include "latticetile/window.hpp"

namespace latticetile {

namespace {

std::string fmt(double v) {
    char buf[48];
    // normalize negative zero for stable output
    if (v == 0) v = 0;
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace

const std::vector<std::string>& piecePalette() {
    static const std::vector<std::string> palette = {
        "#4878cf", "#d65f5f", "#6acc65", "#ee854a", "#956cb4", "#8c613c", "#dc7ec0", "#797979"};
    return palette;
}

SvgScene::SvgScene(RenderSpec spec) : spec_(spec) {
    if (spec_.xmax <= spec_.xmin || spec_.ymax <= spec_.ymin)
        throw MathError("degenerate view box");
}

std::pair<double, double> SvgScene::map(double x, double y) const {
    return {(x - spec_.xmin) * spec_.pixelsPerUnit, (spec_.ymax - y) * spec_.pixelsPerUnit};
}

void SvgScene::addDot(double x, double y, double radius, const std::string& color) {
    auto [px, py] = map(x, y);
    body_ += "<circle cx=\"" + fmt(px) + "\" cy=\"" + fmt(py) + "\" r=\"" +
             fmt(radius * spec_.pixelsPerUnit) + "\" fill=\"" + color + "\"/>\n";
}

void SvgScene::addArrow(double x0, double y0, double x1, double y1, const std::string& color) {
    auto [px0, py0] = map(x0, y0);
    auto [px1, py1] = map(x1, y1);
    body_ += "<line x1=\"" + fmt(px0) + "\" y1=\"" + fmt(py0) + "\" x2=\"" + fmt(px1) +
             "\" y2=\"" + fmt(py1) + "\" stroke=\"" + color +
             "\" stroke-width=\"2\" marker-end=\"url(#arrowhead)\"/>\n";
}

void SvgScene::addLattice(const Lattice& lattice, const std::string& color) {
    if (lattice.dim() != 2) throw DimensionUnsupportedError("rendering supports dimension 2 only");
    double radius = std::max({std::fabs(spec_.xmin), std::fabs(spec_.xmax), std::fabs(spec_.ymin),
                              std::fabs(spec_.ymax)}) *
                    std::sqrt(2.0);
    PointWindow window = latticePointsInBox(lattice, radius);
    for (const auto& p : window.points) {
        if (p.coords[0] < spec_.xmin || p.coords[0] > spec_.xmax || p.coords[1] < spec_.ymin ||
            p.coords[1] > spec_.ymax)
            continue;
        addDot(p.coords[0], p.coords[1], spec_.latticeDotRadius, color);
    }
}

void SvgScene::addPolytope(const SlabSystem& s, const std::string& fill, double opacity,
                           const std::string& stroke) {
    if (s.empty() || s.front().normal.size() != 2)
        throw DimensionUnsupportedError("rendering supports dimension 2 only");
    std::vector<RVector> poly = polygon2D(s);
    if (poly.size() < 3) return;
    std::string pts;
    for (const auto& v : poly) {
        auto [px, py] = map(v[0].get_d(), v[1].get_d());
        pts += fmt(px) + "," + fmt(py) + " ";
    }
    if (!fill.empty())
        body_ += "<polygon points=\"" + pts + "\" fill=\"" + fill + "\" fill-opacity=\"" +
                 fmt(opacity) + "\" stroke=\"none\"/>\n";
    // edge style: solid on closed (lower) faces, dashed on open (upper) faces
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const RVector& a = poly[i];
        const RVector& b = poly[(i + 1) % poly.size()];
        RVector mid = a + b;
        for (auto& q : mid) q /= 2;
        bool open = false;
        for (const auto& slab : s) {
            Rational v = dot(slab.normal, mid);
            if (v == slab.hi) {
                open = true;
                break;
            }
        }
        auto [ax, ay] = map(a[0].get_d(), a[1].get_d());
        auto [bx, by] = map(b[0].get_d(), b[1].get_d());
        body_ += "<line x1=\"" + fmt(ax) + "\" y1=\"" + fmt(ay) + "\" x2=\"" + fmt(bx) +
                 "\" y2=\"" + fmt(by) + "\" stroke=\"" + stroke + "\" stroke-width=\"1.5\"";
        if (open) body_ += " stroke-dasharray=\"6 4\"";
        body_ += "/>\n";
    }
}

void SvgScene::addCell(const HalfOpenParallelepiped& cell, const std::string& color) {
    addPolytope(cell.slabs(), "", 0.0, color);
}

void SvgScene::addFundamentalDomain(const FundamentalDomainSet& fd, const std::string& fill,
                                    const std::string& stroke) {
    if (fd.baseCell) {
        SlabSystem cell = fd.baseCell->slabs();
        for (const auto& f : fd.offsets) addPolytope(translated(cell, f), fill, 0.45, stroke);
    }
    for (const auto& p : fd.pieces) addPolytope(p.constraints, fill, 0.45, stroke);
}

void SvgScene::addEquidecompositionPieces(const std::vector<Piece>& pieces, bool arrows) {
    const auto& palette = piecePalette();
    for (std::size_t i = 0; i < pieces.size(); ++i)
        addPolytope(pieces[i].constraints, palette[i % palette.size()], 0.55, "#333333");
    if (!arrows) return;
    for (const auto& p : pieces) {
        std::vector<RVector> poly = polygon2D(p.constraints);
        if (poly.size() < 3) continue;
        RVector c(2, Rational(0));
        for (const auto& v : poly) c = c + v;
        for (auto& q : c) q /= Rational(long(poly.size()));
        RVector g = p.translation();
        if (g[0] == 0 && g[1] == 0) continue;
        addArrow(c[0].get_d(), c[1].get_d(), c[0].get_d() + g[0].get_d(),
                 c[1].get_d() + g[1].get_d(), "#222222");
    }
}

std::string SvgScene::document() const {
    double w = (spec_.xmax - spec_.xmin) * spec_.pixelsPerUnit;
    double h = (spec_.ymax - spec_.ymin) * spec_.pixelsPerUnit;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(w) +
           "\" height=\"" + fmt(h) + "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
    out += "<defs><marker id=\"arrowhead\" markerWidth=\"8\" markerHeight=\"6\" refX=\"8\" "
           "refY=\"3\" orient=\"auto\"><polygon points=\"0 0, 8 3, 0 6\" fill=\"#222222\"/>"
           "</marker></defs>\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += body_;
    out += "</svg>\n";
    return out;
}

} // namespace latticetile
