#include <doctest.h>

#include "latticetile/errors.hpp"
#include "latticetile/matrix.hpp"
#include "test_util.hpp"

using namespace latticetile;
using namespace latticetile::testutil;

TEST_CASE("rational parsing and printing") {
    CHECK(toString(q("3/6")) == "1/2");
    CHECK(toString(q("-4/2")) == "-2");
    CHECK(toString(q("7")) == "7");
    CHECK(q("-3/4") == Rational(-3, 4));
    CHECK_THROWS_AS(parseRational("1/0"), MalformedInputError);
    CHECK_THROWS_AS(parseRational("x"), MalformedInputError);
    CHECK_THROWS_AS(parseRational("1.5"), MalformedInputError);
}

TEST_CASE("rational rounding helpers") {
    CHECK(floorOf(q("3/2")) == 1);
    CHECK(floorOf(q("-1/4")) == -1);
    CHECK(floorOf(q("2")) == 2);
    CHECK(roundHalfDown(q("1/2")) == 0);   // tie toward -infinity
    CHECK(roundHalfDown(q("3/2")) == 1);
    CHECK(roundHalfDown(q("-1/2")) == -1);
    CHECK(roundHalfDown(q("7/10")) == 1);
    CHECK(roundHalfDown(q("-7/10")) == -1);
}

TEST_CASE("determinant") {
    CHECK(det(RMatrix::identity(2)) == 1);
    CHECK(det(rmat({{"1", "0"}, {"1", "1"}})) == 1);
    CHECK(det(rmat({{"1/2", "0"}, {"0", "2"}})) == 1);
    CHECK(det(rmat({{"2", "0"}, {"0", "3"}})) == 6);
    CHECK(det(rmat({{"1", "2"}, {"2", "4"}})) == 0);
    CHECK_THROWS_AS(det(RMatrix(2, 3)), NonSquareError);

    // Bareiss on a 4x4 with mixed signs
    RMatrix m = rmat({{"2", "-1", "0", "3"},
                      {"1", "1", "-2", "0"},
                      {"0", "5", "1", "-1"},
                      {"-3", "0", "2", "1"}});
    CHECK(det(m) == q("92"));
}

TEST_CASE("inverse") {
    CHECK(inverse(RMatrix::identity(3)) == RMatrix::identity(3));
    CHECK(inverse(rmat({{"1", "0"}, {"1", "1"}})) == rmat({{"1", "0"}, {"-1", "1"}}));
    CHECK(inverse(rmat({{"1/2", "0"}, {"0", "2"}})) == rmat({{"2", "0"}, {"0", "1/2"}}));
    CHECK_THROWS_AS(inverse(rmat({{"1", "2"}, {"2", "4"}})), SingularMatrixError);

    Rng rng(7);
    for (int n = 0; n < 20; ++n) {
        std::size_t d = std::size_t(rng.uniformInt(1, 4));
        ZMatrix z = randomUnimodularish(rng, d, 5);
        RMatrix m = toRational(z);
        RMatrix inv = inverse(m);
        CHECK(m * inv == RMatrix::identity(d));
        CHECK(det(inv) == 1 / det(m));
    }
}
