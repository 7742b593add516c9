#ifndef LATTICETILE_LATTICE_HPP
#define LATTICETILE_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "latticetile/matrix.hpp"
#include "latticetile/normal_form.hpp"

namespace latticetile {

enum class Flavor { Exact, Approximate };

// A full-rank lattice basis * Z^d. Columns of the basis matrix are the
// generators. Exact lattices carry rational entries and support the whole
// algebraic toolbox; approximate lattices carry doubles and only feed the
// windowed constructions.
class Lattice {
public:
    static Lattice fromExactBasis(RMatrix basis);
    static Lattice fromApproxBasis(Matrix<double> basis);
    // Basis vectors given as rows (the file-format convention).
    static Lattice fromExactRows(const RMatrix& rows);
    static Lattice standard(std::size_t dim); // Z^d

    std::size_t dim() const { return dim_; }
    Flavor flavor() const { return flavor_; }
    bool isExact() const { return flavor_ == Flavor::Exact; }

    const RMatrix& basis() const;          // exact only
    const RMatrix& basisInverse() const;   // exact only
    const Matrix<double>& approxBasis() const;
    const Matrix<double>& approxBasisInverse() const;
    Matrix<double> basisAsDouble() const;

private:
    Lattice() = default;
    std::size_t dim_ = 0;
    Flavor flavor_ = Flavor::Exact;
    RMatrix basis_, inv_;
    Matrix<double> fbasis_, finv_;
};

struct LatticePoint {
    RVector coords;        // ambient coordinates (exact flavor)
    ZVector latticeCoords; // basis * latticeCoords == coords
};

// Basis of a lattice adapted to a sublattice: the last `rank` columns,
// scaled by the invariant factors, form a basis of the sublattice's span
// intersected with the ambient lattice structure.
struct SublatticeDecomposition {
    Lattice ambient;
    RMatrix subBasis; // columns; may have rank < dim
    Int index;        // product of the invariant factors
    RMatrix adaptedBasis;
    ZVector invariantFactors;
    std::size_t rank = 0; // rank of the sublattice

    RMatrix complementBasis() const;     // first dim - rank columns
    RMatrix subBasisFromAdapted() const; // last rank columns * invariant factors
};

// |det(basis)|
Rational volume(const Lattice& lattice);
double volumeApprox(const Lattice& lattice);

// Lattice membership. Returns the integer coordinates when the point lies in
// the lattice.
std::optional<ZVector> contains(const Lattice& lattice, const RVector& point);

// Canonical basis: lower-triangular-HNF generators (as columns). Two lattices
// are equal iff their canonical bases coincide.
RMatrix canonicalBasis(const Lattice& lattice);
bool sameLattice(const Lattice& a, const Lattice& b);

bool isSublattice(const Lattice& sub, const Lattice& ambient);

Lattice sum(const Lattice& a, const Lattice& b);
Lattice intersect(const Lattice& a, const Lattice& b);

// [L : H] = vol(H) / vol(L). Throws NotSublatticeError.
Int index(const Lattice& lattice, const Lattice& sub);

// One point of `lattice` per class of lattice/sub, all lying in the cornered
// fundamental parallelepiped of `sub`, in lexicographic order of their
// sub-basis coordinates.
std::vector<LatticePoint> cosetRepresentatives(const Lattice& lattice, const Lattice& sub);

// Adapted basis for a (possibly lower-rank) sublattice given by the columns
// of subBasis. Throws NotSublatticeError.
SublatticeDecomposition adaptedBasis(const Lattice& lattice, const RMatrix& subBasis);

// Integer coordinates of a lattice point (throws if not a member).
ZVector latticeCoordsOf(const Lattice& lattice, const RVector& point);

} // namespace latticetile

#endif
