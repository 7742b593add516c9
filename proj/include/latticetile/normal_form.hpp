#ifndef LATTICETILE_NORMAL_FORM_HPP
#define LATTICETILE_NORMAL_FORM_HPP

#include "latticetile/matrix.hpp"

namespace latticetile {

struct HnfResult {
    ZMatrix h; // h = u * m
    ZMatrix u; // unimodular
};

// Row-style Hermite normal form, lower-triangular convention: pivots are the
// last nonzero entry of their row, positive, and entries below a pivot are
// reduced into [0, pivot). Zero rows come first. For square nonsingular
// input, h is lower triangular with positive diagonal.
HnfResult hnf(const ZMatrix& m);

struct SnfResult {
    ZMatrix d; // d = u * m * v, diagonal, d1 | d2 | ... | dk >= 0
    ZMatrix u;
    ZMatrix v;
};

SnfResult snf(const ZMatrix& m);

// Membership of a row vector in the row lattice of an HNF matrix h
// (back-substitution against the pivots).
bool inRowLattice(const ZMatrix& h, const ZVector& row);

} // namespace latticetile

#endif
