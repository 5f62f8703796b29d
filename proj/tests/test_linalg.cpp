#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "orthant/linalg.hpp"

using namespace orthant;

namespace {

Mat random_matrix(std::mt19937& rng, size_t rows, size_t cols, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::uniform_int_distribution<int> den(1, 3);
    Mat m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(d(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rref on the pinned examples") {
    SECTION("identity") {
        RrefResult r = rref(Mat::identity(3));
        CHECK(r.reduced == Mat::identity(3));
        CHECK(r.pivot_cols == std::vector<size_t>{0, 1, 2});
        CHECK(r.rank == 3);
    }
    SECTION("zero") {
        RrefResult r = rref(Mat(2, 2));
        CHECK(r.reduced == Mat(2, 2));
        CHECK(r.pivot_cols.empty());
        CHECK(r.rank == 0);
    }
    SECTION("[[2,4],[1,2]] has rank 1 with pivot column 0") {
        Mat m(2, 2);
        m.at(0, 0) = 2;
        m.at(0, 1) = 4;
        m.at(1, 0) = 1;
        m.at(1, 1) = 2;
        RrefResult r = rref(m);
        CHECK(r.rank == 1);
        CHECK(r.pivot_cols == std::vector<size_t>{0});
        // Hand row reduction: R = [[1,2],[0,0]].
        Mat want(2, 2);
        want.at(0, 0) = 1;
        want.at(0, 1) = 2;
        CHECK(r.reduced == want);
    }
}

TEST_CASE("rref transform certificate reproduces the reduction") {
    std::mt19937 rng(1);
    for (int k = 0; k < 50; ++k) {
        Mat m = random_matrix(rng, 2 + k % 4, 2 + (k / 2) % 4);
        RrefResult r = rref(m);
        CHECK(r.transform * m == r.reduced);
        CHECK(!det(r.transform).is_zero());
    }
}

TEST_CASE("kernel basis on the pinned examples") {
    CHECK(kernel_basis(Mat::identity(4)).empty());
    SECTION("single relation [[1,1]]") {
        Mat m(1, 2);
        m.at(0, 0) = 1;
        m.at(0, 1) = 1;
        auto k = kernel_basis(m);
        REQUIRE(k.size() == 1);
        CHECK(k[0] == Vec{1, -1});
    }
}

TEST_CASE("kernel vectors satisfy m v = 0 and count cols - rank") {
    std::mt19937 rng(2);
    for (int k = 0; k < 60; ++k) {
        Mat m = random_matrix(rng, 1 + k % 4, 1 + (k / 3) % 5);
        auto kb = kernel_basis(m);
        CHECK(kb.size() == m.cols - rref(m).rank);
        for (const Vec& v : kb) {
            CHECK(m.apply(v).is_zero());
            CHECK(v.is_integral());  // saturation clears denominators
        }
    }
}

TEST_CASE("unimodularity") {
    CHECK(is_unimodular(Mat::identity(5)));
    Mat shear(2, 2);
    shear.at(0, 0) = 1;
    shear.at(0, 1) = 1;
    shear.at(1, 1) = 1;
    CHECK(is_unimodular(shear));
    Mat scale(2, 2);
    scale.at(0, 0) = 2;
    scale.at(1, 1) = 1;
    CHECK(!is_unimodular(scale));
    Mat frac(1, 1);
    frac.at(0, 0) = Rational(1, 2);
    CHECK_THROWS_AS(is_unimodular(frac), InvalidInput);
}

TEST_CASE("det and inverse agree on random invertible matrices") {
    std::mt19937 rng(3);
    int checked = 0;
    while (checked < 30) {
        Mat m = random_matrix(rng, 3, 3);
        if (det(m).is_zero()) continue;
        ++checked;
        CHECK(m * inverse(m) == Mat::identity(3));
        CHECK(det(inverse(m)) == det(m).reciprocal());
    }
    CHECK_THROWS_AS(inverse(Mat(2, 2)), InvalidInput);
}

TEST_CASE("saturate gives a primitive integer vector, first entry positive") {
    Vec v{Rational(-2, 3), Rational(4, 3), Rational(0)};
    CHECK(saturate(v) == Vec{1, -2, 0});
    CHECK(saturate(zero_vec(3)) == zero_vec(3));
}

TEST_CASE("same_span compares subspaces not bases") {
    std::vector<Vec> a{Vec{1, 1, 0}, Vec{0, 0, 1}};
    std::vector<Vec> b{Vec{2, 2, 2}, Vec{0, 0, -5}};
    std::vector<Vec> c{Vec{1, 0, 0}, Vec{0, 0, 1}};
    CHECK(same_span(a, b, 3));
    CHECK(!same_span(a, c, 3));
}
