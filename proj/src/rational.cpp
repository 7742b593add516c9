#include "latticetile/rational.hpp"

#include <cctype>
#include <cmath>

#include "latticetile/errors.hpp"

namespace latticetile {

std::string toString(const Rational& q) {
    return q.get_str();
}

std::string toString(const Int& z) {
    return z.get_str();
}

namespace {

bool isIntegerToken(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parseRational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!isIntegerToken(s)) throw MalformedInputError("not a rational: '" + s + "'");
        return Rational(Int(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!isIntegerToken(num) || !isIntegerToken(den))
        throw MalformedInputError("not a rational: '" + s + "'");
    Int d(den);
    if (d == 0) throw MalformedInputError("zero denominator: '" + s + "'");
    Rational q(Int(num), d);
    q.canonicalize();
    return q;
}

Int floorDiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floorOf(const Rational& q) {
    return floorDiv(q.get_num(), q.get_den());
}

Int roundHalfDown(const Rational& q) {
    // ceil(q - 1/2) = -floor(1/2 - q)
    Rational shifted = Rational(1, 2) - q;
    return -floorOf(shifted);
}

bool isInteger(const Rational& q) {
    return q.get_den() == 1;
}

RVector toRational(const ZVector& v) {
    RVector out;
    out.reserve(v.size());
    for (const auto& z : v) out.emplace_back(z);
    return out;
}

DVector toDouble(const RVector& v) {
    DVector out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(q.get_d());
    return out;
}

RVector operator+(const RVector& a, const RVector& b) {
    RVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RVector operator-(const RVector& a, const RVector& b) {
    RVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RVector operator-(const RVector& a) {
    RVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

Rational dot(const RVector& a, const RVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational supNorm(const RVector& v) {
    Rational m = 0;
    for (const auto& q : v) {
        Rational a = abs(q);
        if (a > m) m = a;
    }
    return m;
}

double supNorm(const DVector& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

double euclidNorm(const DVector& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

} // namespace latticetile
