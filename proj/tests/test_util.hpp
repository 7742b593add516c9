#ifndef LATTICETILE_TEST_UTIL_HPP
#define LATTICETILE_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "latticetile/domains.hpp"
#include "latticetile/errors.hpp"
#include "latticetile/lattice.hpp"
#include "latticetile/rng.hpp"

namespace latticetile::testutil {

inline Rational q(const std::string& s) { return parseRational(s); }

inline RVector rvec(std::initializer_list<std::string> entries) {
    RVector out;
    for (const auto& e : entries) out.push_back(parseRational(e));
    return out;
}

inline RMatrix rmat(std::initializer_list<std::initializer_list<std::string>> rows) {
    std::size_t r = rows.size();
    std::size_t c = rows.begin()->size();
    RMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const auto& e : row) m(i, j++) = parseRational(e);
        ++i;
    }
    return m;
}

inline ZMatrix zmat(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = rows.begin()->size();
    ZMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const auto& e : row) m(i, j++) = e;
        ++i;
    }
    return m;
}

// Lattice from basis-vector rows, matching the file-format convention.
inline Lattice latFromRows(std::initializer_list<std::initializer_list<std::string>> rows) {
    return Lattice::fromExactRows(rmat(rows));
}

inline Lattice halfByTwo() {
    // generated by (1/2, 0) and (0, 2)
    return latFromRows({{"1/2", "0"}, {"0", "2"}});
}

inline Lattice shearedZ2() {
    // generated by (1, 1) and (0, 1); equals Z^2
    return latFromRows({{"1", "1"}, {"0", "1"}});
}

// Random nonsingular integer matrix with entries in [-bound, bound].
inline ZMatrix randomUnimodularish(Rng& rng, std::size_t d, long bound) {
    while (true) {
        ZMatrix m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.uniformInt(-bound, bound);
        if (det(m) != 0) return m;
    }
}

// Random unimodular matrix as a short product of elementary operations.
inline ZMatrix randomUnimodular(Rng& rng, std::size_t d, int ops = 6) {
    ZMatrix u = ZMatrix::identity(d);
    for (int n = 0; n < ops; ++n) {
        std::size_t i = std::size_t(rng.uniformInt(0, long(d - 1)));
        std::size_t j = std::size_t(rng.uniformInt(0, long(d - 1)));
        if (i == j) continue;
        long f = rng.uniformInt(-2, 2);
        for (std::size_t c = 0; c < d; ++c) u(i, c) += f * u(j, c);
    }
    return u;
}

// Random exact lattice with small rational entries; entries p/q with
// |p| <= pBound, q <= qBound.
inline Lattice randomLattice(Rng& rng, std::size_t d, long pBound, long qBound) {
    while (true) {
        RMatrix m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Rational e(rng.uniformInt(-pBound, pBound), rng.uniformInt(1, qBound));
                e.canonicalize();
                m(i, j) = e;
            }
        try {
            return Lattice::fromExactBasis(m);
        } catch (const SingularMatrixError&) {
        }
    }
}

// Equal-volume commensurable partner: M-basis = L-basis * U * D with U
// unimodular and D a det +-1 rational diagonal.
inline Lattice equalVolumePartner(Rng& rng, const Lattice& l) {
    const std::size_t d = l.dim();
    while (true) {
        ZMatrix u = randomUnimodular(rng, d);
        RMatrix ud = l.basis() * toRational(u);
        static const std::vector<std::pair<long, long>> ratios = {{1, 1}, {2, 1}, {3, 2}, {1, 2}, {3, 1}};
        Rational scale = 1;
        for (std::size_t j = 0; j + 1 < d; ++j) {
            auto [p, qd] = ratios[std::size_t(rng.uniformInt(0, long(ratios.size() - 1)))];
            Rational f(p, qd);
            f.canonicalize();
            scale *= f;
            for (std::size_t i = 0; i < d; ++i) ud(i, j) *= f;
        }
        // last column restores the volume
        for (std::size_t i = 0; i < d; ++i) ud(i, d - 1) /= scale;
        // keep entries small enough to be interesting but bounded
        bool ok = true;
        for (const auto& e : ud.entries())
            if (abs(e.get_num()) > 64 || e.get_den() > 64) ok = false;
        if (!ok) continue;
        try {
            Lattice m = Lattice::fromExactBasis(ud);
            if (volume(m) == volume(l)) return m;
        } catch (const SingularMatrixError&) {
        }
    }
}

} // namespace latticetile::testutil

#endif
