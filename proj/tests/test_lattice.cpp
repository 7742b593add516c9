#include <doctest.h>

#include "latticetile/errors.hpp"
#include "latticetile/lattice.hpp"
#include "test_util.hpp"

using namespace latticetile;
using namespace latticetile::testutil;

TEST_CASE("volume") {
    CHECK(volume(Lattice::standard(2)) == 1);
    CHECK(volume(halfByTwo()) == 1);
    CHECK(volume(latFromRows({{"2", "0"}, {"0", "3"}})) == 6);
}

TEST_CASE("membership") {
    Lattice z2 = Lattice::standard(2);
    auto c = contains(z2, rvec({"1", "0"}));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == 0);

    Lattice m = halfByTwo();
    auto c2 = contains(m, rvec({"1", "0"}));
    REQUIRE(c2.has_value());
    CHECK((*c2)[0] == 2);
    CHECK((*c2)[1] == 0);
    CHECK(!contains(m, rvec({"0", "1"})).has_value());
}

TEST_CASE("lattice equality via canonical bases") {
    CHECK(sameLattice(Lattice::standard(2), shearedZ2()));
    CHECK(!sameLattice(Lattice::standard(2), halfByTwo()));
    // basis order / sign does not matter
    CHECK(sameLattice(latFromRows({{"0", "-1"}, {"1", "0"}}), Lattice::standard(2)));
}

TEST_CASE("sum") {
    Lattice z2 = Lattice::standard(2);
    CHECK(sameLattice(sum(z2, z2), z2));
    CHECK(sameLattice(sum(z2, latFromRows({{"2", "0"}, {"0", "2"}})), z2));
    Lattice s = sum(z2, halfByTwo());
    CHECK(sameLattice(s, latFromRows({{"1/2", "0"}, {"0", "1"}})));
    CHECK(volume(s) == Rational(1, 2));
}

TEST_CASE("intersect") {
    Lattice z2 = Lattice::standard(2);
    CHECK(sameLattice(intersect(z2, z2), z2));
    Lattice three = latFromRows({{"3", "0"}, {"0", "3"}});
    CHECK(sameLattice(intersect(z2, three), three));

    Lattice h = intersect(z2, halfByTwo());
    CHECK(sameLattice(h, latFromRows({{"1", "0"}, {"0", "2"}})));
    CHECK(volume(h) == 2);

    // brute-force cross-check on grid points in [-3,3]^2
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) {
            RVector p = rvec({std::to_string(x), std::to_string(y)});
            bool inBoth = contains(z2, p).has_value() && contains(halfByTwo(), p).has_value();
            CHECK(inBoth == contains(h, p).has_value());
        }
}

TEST_CASE("index") {
    Lattice z2 = Lattice::standard(2);
    Lattice zx2z = latFromRows({{"1", "0"}, {"0", "2"}});
    CHECK(index(z2, zx2z) == 2);
    CHECK(index(z2, z2) == 1);
    CHECK(index(z2, latFromRows({{"3", "0"}, {"0", "3"}})) == 9);
    CHECK_THROWS_AS(index(zx2z, z2), NotSublatticeError);
}

TEST_CASE("coset representatives") {
    Lattice z2 = Lattice::standard(2);
    Lattice zx2z = latFromRows({{"1", "0"}, {"0", "2"}});
    {
        auto reps = cosetRepresentatives(z2, zx2z);
        REQUIRE(reps.size() == 2);
        CHECK(reps[0].coords == rvec({"0", "0"}));
        CHECK(reps[1].coords == rvec({"0", "1"}));
    }
    {
        auto reps = cosetRepresentatives(halfByTwo(), zx2z);
        REQUIRE(reps.size() == 2);
        CHECK(reps[0].coords == rvec({"0", "0"}));
        CHECK(reps[1].coords == rvec({"1/2", "0"}));
    }
    {
        auto reps = cosetRepresentatives(z2, z2);
        REQUIRE(reps.size() == 1);
        CHECK(reps[0].coords == rvec({"0", "0"}));
    }
}

TEST_CASE("coset representatives lie in the sub cell and are inequivalent") {
    Rng rng(17);
    for (int n = 0; n < 25; ++n) {
        std::size_t d = std::size_t(rng.uniformInt(1, 3));
        Lattice l = randomLattice(rng, d, 3, 3);
        // random full-rank sublattice via an integer matrix with nonzero det
        ZMatrix t = randomUnimodularish(rng, d, 2);
        Lattice h = Lattice::fromExactBasis(l.basis() * toRational(t));
        Int k = index(l, h);
        auto reps = cosetRepresentatives(l, h);
        CHECK(Int(long(reps.size())) == k);
        for (const auto& r : reps) {
            RVector t2 = h.basisInverse() * r.coords;
            for (const auto& c : t2) {
                CHECK(c >= 0);
                CHECK(c < 1);
            }
            CHECK(contains(l, r.coords).has_value());
        }
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK(!contains(h, reps[i].coords - reps[j].coords).has_value());
    }
}

TEST_CASE("adapted basis") {
    Lattice z2 = Lattice::standard(2);
    {
        auto dec = adaptedBasis(z2, rmat({{"1", "0"}, {"0", "2"}}));
        CHECK(dec.rank == 2);
        CHECK(dec.index == 2);
        REQUIRE(dec.invariantFactors.size() == 2);
        CHECK(dec.invariantFactors[0] == 1);
        CHECK(dec.invariantFactors[1] == 2);
        // adapted columns generate L
        CHECK(sameLattice(Lattice::fromExactBasis(dec.adaptedBasis), z2));
        // scaled trailing columns generate H
        CHECK(sameLattice(Lattice::fromExactBasis(dec.subBasisFromAdapted()),
                          latFromRows({{"1", "0"}, {"0", "2"}})));
    }
    {
        // rank-1 sublattice {0} x Z
        RMatrix sub(2, 1);
        sub(0, 0) = 0;
        sub(1, 0) = 1;
        auto dec = adaptedBasis(z2, sub);
        CHECK(dec.rank == 1);
        CHECK(dec.index == 1);
        RMatrix comp = dec.complementBasis();
        REQUIRE(comp.cols() == 1);
        // complement spans the x-axis direction within Z^2
        CHECK(comp(1, 0) == 0);
        CHECK(abs(comp(0, 0)) == 1);
    }
    {
        auto dec = adaptedBasis(z2, z2.basis());
        CHECK(dec.index == 1);
        CHECK(dec.rank == 2);
    }
    CHECK_THROWS_AS(adaptedBasis(z2, rmat({{"1/2"}, {"0"}})), NotSublatticeError);
}

TEST_CASE("volume identity and inclusions on random pairs") {
    Rng rng(23);
    for (int n = 0; n < 40; ++n) {
        std::size_t d = std::size_t(rng.uniformInt(1, 3));
        Lattice l = randomLattice(rng, d, 4, 4);
        Lattice m = randomLattice(rng, d, 4, 4);
        Lattice s = sum(l, m), h = intersect(l, m);
        CHECK(volume(l) * volume(m) == volume(s) * volume(h));
        CHECK(isSublattice(h, l));
        CHECK(isSublattice(h, m));
        CHECK(isSublattice(l, s));
        CHECK(isSublattice(m, s));
        CHECK(sameLattice(sum(m, l), s));
        CHECK(sameLattice(intersect(m, l), h));
    }
}
