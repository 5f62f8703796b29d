#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "orthant/catalog.hpp"
#include "orthant/realization.hpp"

using namespace orthant;

TEST_CASE("coxeter system structural validation") {
    CHECK_NOTHROW(make_system({"s", "t"}, {{1, 3}, {3, 1}}));
    CHECK_THROWS_AS(make_system({"s", "t"}, {{1, 3}, {4, 1}}), InvalidInput);   // asymmetric
    CHECK_THROWS_AS(make_system({"s", "t"}, {{2, 3}, {3, 1}}), InvalidInput);   // diagonal
    CHECK_THROWS_AS(make_system({"s", "t"}, {{1, 1}, {1, 1}}), InvalidInput);   // m_st < 2
    CHECK_THROWS_AS(make_system({"s", "s"}, {{1, 3}, {3, 1}}), InvalidInput);   // duplicate name
}

TEST_CASE("standard geometric realization pairings") {
    SECTION("A2: m = 3 gives pairing -1") {
        Realization r = standard_geometric_realization(dihedral_system(3));
        CHECK(r.pairing(0, r.roots[1]) == Rational(-1));
        CHECK(validate(r).ok());
    }
    SECTION("A1 x A1: m = 2 gives pairing 0") {
        Realization r = standard_geometric_realization(dihedral_system(2));
        CHECK(r.pairing(0, r.roots[1]) == Rational(0));
        CHECK(validate(r).ok());
    }
    SECTION("affine A1: m = infinity gives pairing -2") {
        Realization r = standard_geometric_realization(dihedral_system(0));
        CHECK(r.pairing(0, r.roots[1]) == Rational(-2));
        CHECK(validate(r).ok());
    }
    SECTION("irrational cosines are refused") {
        CHECK_THROWS_AS(standard_geometric_realization(dihedral_system(4)),
                        UnsupportedCoxeterMatrix);
        CHECK_THROWS_AS(standard_geometric_realization(dihedral_system(5)),
                        UnsupportedCoxeterMatrix);
    }
}

TEST_CASE("word matrices") {
    Realization r = fixtures::perm(3);
    SECTION("empty word is the identity") {
        CHECK(word_matrix(r, {}).is_identity());
    }
    SECTION("single generator of S2 is the swap") {
        Realization s2 = fixtures::perm(2);
        Mat swap(2, 2);
        swap.at(0, 1) = 1;
        swap.at(1, 0) = 1;
        CHECK(word_matrix(s2, {0}) == swap);
    }
    SECTION("ss is the identity") {
        CHECK(word_matrix(r, {0, 0}).is_identity());
        CHECK(word_matrix(r, {1, 1}).is_identity());
    }
    SECTION("monoid homomorphism on random words") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> gen(0, 1), len(0, 5);
        for (int k = 0; k < 40; ++k) {
            Word u, v;
            for (int i = len(rng); i > 0; --i) u.push_back(gen(rng));
            for (int i = len(rng); i > 0; --i) v.push_back(gen(rng));
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            CHECK(word_matrix(r, uv) == word_matrix(r, u) * word_matrix(r, v));
        }
    }
    SECTION("(st)^m_st is the identity on validated realizations") {
        for (const std::string& name : {"perm(4)", "affine_perm(3)", "sl_weight(3)"}) {
            Realization real = catalog(name).realization;
            for (size_t s = 0; s < real.system.rank(); ++s)
                for (size_t t = s + 1; t < real.system.rank(); ++t) {
                    if (!real.system.finite_order(s, t)) continue;
                    Word w;
                    for (int k = 0; k < real.system.order(s, t); ++k) {
                        w.push_back(static_cast<int>(s));
                        w.push_back(static_cast<int>(t));
                    }
                    CHECK(word_matrix(real, w).is_identity());
                }
        }
    }
}

TEST_CASE("enumeration of group elements") {
    SECTION("S3 with max_len 6: 6 elements, complete") {
        Enumeration e = enumerate_elements(fixtures::perm(3), 6);
        CHECK(e.elements.size() == 6);
        CHECK(e.complete);
    }
    SECTION("S2 with max_len 1: 2 elements, complete") {
        Enumeration e = enumerate_elements(fixtures::perm(2), 1);
        CHECK(e.elements.size() == 2);
        CHECK(e.complete);
    }
    SECTION("affine A1 with max_len 4: translates accumulate, not complete") {
        // Words of length <= 4 in the infinite dihedral group are pairwise
        // distinct on V: e, s, t, st, ts, sts, tst, stst, tsts.
        Enumeration e = enumerate_elements(fixtures::affine_perm(2), 4);
        CHECK(e.elements.size() == 9);
        CHECK(!e.complete);
    }
    SECTION("S_n is complete with n! elements at max_len n(n-1)/2") {
        for (int n = 2; n <= 5; ++n) {
            Enumeration e = enumerate_elements(fixtures::perm(n), n * (n - 1) / 2);
            size_t fact = 1;
            for (int k = 2; k <= n; ++k) fact *= k;
            CHECK(e.elements.size() == fact);
            CHECK(e.complete);
        }
    }
    SECTION("negative max_len is rejected") {
        CHECK_THROWS_AS(enumerate_elements(fixtures::perm(2), -1), InvalidInput);
    }
}
