#ifndef LATTICETILE_RATIONAL_HPP
#define LATTICETILE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace latticetile {

// Exact arbitrary-precision scalars. GMP keeps rationals in canonical form
// (positive denominator, reduced), which is exactly the invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

using ZVector = std::vector<Int>;
using RVector = std::vector<Rational>;
using DVector = std::vector<double>;

// Canonical text form: "p/q", or just "p" when q = 1. Sign on the numerator.
std::string toString(const Rational& q);
std::string toString(const Int& z);

// Parses "p/q" or "p" (optionally signed). Throws MalformedInputError.
Rational parseRational(const std::string& s);

// floor(a/b) with b > 0 semantics for any sign of a.
Int floorDiv(const Int& a, const Int& b);

// Largest integer <= q.
Int floorOf(const Rational& q);

// Nearest integer, ties broken toward -infinity.
Int roundHalfDown(const Rational& q);

bool isInteger(const Rational& q);

RVector toRational(const ZVector& v);
DVector toDouble(const RVector& v);

RVector operator+(const RVector& a, const RVector& b);
RVector operator-(const RVector& a, const RVector& b);
RVector operator-(const RVector& a);

Rational dot(const RVector& a, const RVector& b);

// sup norm
Rational supNorm(const RVector& v);
double supNorm(const DVector& v);
double euclidNorm(const DVector& v);

} // namespace latticetile

#endif
