#include <doctest.h>

#include "latticetile/errors.hpp"
#include "latticetile/halfopen.hpp"
#include "test_util.hpp"

using namespace latticetile;
using namespace latticetile::testutil;

TEST_CASE("cell membership honors half-open boundaries") {
    HalfOpenParallelepiped cornered = makeCell(RMatrix::identity(2), Convention::Cornered);
    CHECK(cornered.contains(rvec({"0", "0"})));
    CHECK(cornered.contains(rvec({"1/2", "3/4"})));
    CHECK(!cornered.contains(rvec({"1", "0"})));
    CHECK(!cornered.contains(rvec({"0", "1"})));

    HalfOpenParallelepiped centered = makeCell(RMatrix::identity(2), Convention::Centered);
    CHECK(centered.contains(rvec({"-1/2", "-1/2"})));
    CHECK(!centered.contains(rvec({"1/2", "0"})));

    // sheared cell: basis columns (1,1), (0,1)
    HalfOpenParallelepiped sheared = makeCell(rmat({{"1", "0"}, {"1", "1"}}), Convention::Centered);
    CHECK(sheared.contains(rvec({"0", "0"})));
    CHECK(sheared.contains(rvec({"1/4", "1/2"})));
    CHECK(!sheared.contains(rvec({"1/2", "1"})));
}

TEST_CASE("slab systems match cell membership") {
    HalfOpenParallelepiped sheared = makeCell(rmat({{"1", "0"}, {"1", "1"}}), Convention::Centered);
    SlabSystem slabs = sheared.slabs();
    Rng rng(3);
    for (int n = 0; n < 200; ++n) {
        RVector p = rvec({"0", "0"});
        p[0] = rng.dyadic(10) * 4 - 2;
        p[1] = rng.dyadic(10) * 4 - 2;
        CHECK(sheared.contains(p) == contains(slabs, p));
    }
}

TEST_CASE("feasibility is exact on half-open systems") {
    HalfOpenParallelepiped unit = makeCell(RMatrix::identity(2), Convention::Cornered);
    SlabSystem a = unit.slabs();

    // adjacent translate: closed polytopes touch, half-open sets do not
    SlabSystem b = translated(a, rvec({"1", "0"}));
    CHECK(feasible(a));
    CHECK(feasible(b));
    CHECK(!feasible(concatenated(a, b)));

    // genuine overlap
    SlabSystem c = translated(a, rvec({"1/2", "0"}));
    CHECK(feasible(concatenated(a, c)));

    // corner contact through opposing closed faces: the flipped cell
    // (-1,0] x (-1,0] shares exactly the origin with [0,1)^2
    RMatrix neg = rmat({{"-1", "0"}, {"0", "-1"}});
    SlabSystem flipped = makeCell(neg, Convention::Cornered).slabs();
    auto w = witnessPoint(concatenated(a, flipped));
    REQUIRE(w.has_value());
    CHECK((*w) == rvec({"0", "0"}));
}

TEST_CASE("witness points satisfy their systems") {
    Rng rng(5);
    for (int n = 0; n < 100; ++n) {
        RMatrix basis(2, 2);
        do {
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    basis(i, j) = Rational(rng.uniformInt(-3, 3), rng.uniformInt(1, 3));
        } while (det(basis) == 0);
        SlabSystem sys = makeCell(basis, Convention::Centered).slabs();
        RVector shift = rvec({"0", "0"});
        shift[0] = rng.dyadic(6) * 2 - 1;
        shift[1] = rng.dyadic(6) * 2 - 1;
        SlabSystem sys2 = translated(makeCell(RMatrix::identity(2), Convention::Cornered).slabs(), shift);
        SlabSystem joint = concatenated(sys, sys2);
        auto w = witnessPoint(joint);
        if (w) {
            CHECK(contains(joint, *w));
        } else {
            // cross-check emptiness against a dense rational grid
            for (long x = -8; x <= 8; ++x)
                for (long y = -8; y <= 8; ++y) {
                    RVector p{Rational(x, 4), Rational(y, 4)};
                    CHECK(!contains(joint, p));
                }
        }
    }
}

TEST_CASE("closed vertices and exact volume in 2d") {
    HalfOpenParallelepiped unit = makeCell(RMatrix::identity(2), Convention::Cornered);
    auto verts = closedVertices(unit.slabs());
    CHECK(verts.size() == 4);
    CHECK(exactVolume(unit.slabs(), 2) == 1);

    HalfOpenParallelepiped sheared = makeCell(rmat({{"1", "0"}, {"1", "1"}}), Convention::Centered);
    CHECK(exactVolume(sheared.slabs(), 2) == 1);

    // triangle-ish intersection
    SlabSystem tri = concatenated(unit.slabs(),
                                  {Slab{rvec({"1", "1"}), Rational(-10), Rational(1)}});
    CHECK(exactVolume(tri, 2) == Rational(1, 2));

    // empty and degenerate systems
    SlabSystem far = translated(unit.slabs(), rvec({"5", "5"}));
    CHECK(exactVolume(concatenated(unit.slabs(), far), 2) == 0);
}

TEST_CASE("exact volume in 1d and 3d") {
    HalfOpenParallelepiped seg = makeCell(rmat({{"3/2"}}), Convention::Cornered);
    CHECK(exactVolume(seg.slabs(), 1) == Rational(3, 2));

    RMatrix b3 = rmat({{"1", "0", "0"}, {"0", "2", "0"}, {"0", "0", "1/2"}});
    CHECK(exactVolume(makeCell(b3, Convention::Cornered).slabs(), 3) == 1);

    // sheared 3d cell has the same volume as its determinant
    RMatrix shear = rmat({{"1", "1", "0"}, {"0", "1", "1"}, {"0", "0", "1"}});
    CHECK(exactVolume(makeCell(shear, Convention::Centered).slabs(), 3) == 1);

    // corner cut by a diagonal halfspace: tetrahedron of volume 1/6
    SlabSystem cube = makeCell(RMatrix::identity(3), Convention::Cornered).slabs();
    SlabSystem tetra = concatenated(
        cube, {Slab{rvec({"1", "1", "1"}), Rational(-10), Rational(1)}});
    CHECK(exactVolume(tetra, 3) == Rational(1, 6));
}

TEST_CASE("compiled membership agrees with exact membership") {
    RMatrix basis = rmat({{"1/2", "0"}, {"1/3", "1"}});
    SlabSystem sys = translated(makeCell(basis, Convention::Cornered).slabs(), rvec({"-1/4", "1/6"}));
    const Int scale = Int(1) << 12;
    RMatrix pointBasis = rmat({{"1", "1/7"}, {"0", "1"}});
    auto cm = CompiledMembership::compile(sys, pointBasis, scale);
    REQUIRE(cm.valid());
    Rng rng(9);
    for (int n = 0; n < 500; ++n) {
        std::vector<long long> raw = {(long long)rng.uniformInt(-6000, 6000),
                                      (long long)rng.uniformInt(-6000, 6000)};
        RVector t{Rational(long(raw[0])), Rational(long(raw[1]))};
        for (auto& v : t) v /= Rational(scale);
        RVector x = pointBasis * t;
        CHECK(cm.contains(raw) == contains(sys, x));
    }
}

TEST_CASE("bounding boxes") {
    HalfOpenParallelepiped sheared = makeCell(rmat({{"1", "0"}, {"1", "1"}}), Convention::Centered);
    BBox box = bboxOfSlabs(sheared.slabs());
    REQUIRE(!box.empty);
    CHECK(box.lo == rvec({"-1/2", "-1"}));
    CHECK(box.hi == rvec({"1/2", "1"}));
    CHECK(bboxOverlap(box, box));
}
