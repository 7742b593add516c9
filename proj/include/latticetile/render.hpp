#ifndef LATTICETILE_RENDER_HPP
#define LATTICETILE_RENDER_HPP

#include <string>
#include <vector>

#include "latticetile/domains.hpp"

namespace latticetile {

// 2-d scenes only. Coordinates are mapped deterministically, so identical
// inputs produce byte-identical documents.
struct RenderSpec {
    double xmin = -2, ymin = -2, xmax = 2, ymax = 2;
    double pixelsPerUnit = 120;
    double latticeDotRadius = 0.035;
};

class SvgScene {
public:
    explicit SvgScene(RenderSpec spec);

    void addLattice(const Lattice& lattice, const std::string& color);
    void addCell(const HalfOpenParallelepiped& cell, const std::string& color);
    // Filled convex polytope; closed edges solid, open (upper) edges dashed.
    void addPolytope(const SlabSystem& s, const std::string& fill, double opacity,
                     const std::string& stroke);
    void addFundamentalDomain(const FundamentalDomainSet& fd, const std::string& fill,
                              const std::string& stroke);
    void addEquidecompositionPieces(const std::vector<Piece>& pieces, bool arrows);
    void addDot(double x, double y, double radius, const std::string& color);
    void addArrow(double x0, double y0, double x1, double y1, const std::string& color);

    std::string document() const;

private:
    std::pair<double, double> map(double x, double y) const;
    RenderSpec spec_;
    std::string body_;
};

// Default piece fill palette (cycled).
const std::vector<std::string>& piecePalette();

} // namespace latticetile

#endif
