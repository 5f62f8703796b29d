#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "orthant/catalog.hpp"

using namespace orthant;

namespace {

Vec random_vec(std::mt19937& rng, size_t n) {
    std::uniform_int_distribution<int> d(-5, 5);
    Vec v(n);
    for (size_t i = 0; i < n; ++i) v[i] = d(rng);
    return v;
}

}  // namespace

TEST_CASE("validation of the classical examples") {
    SECTION("permutation realization of S3 passes") {
        CHECK(validate(fixtures::perm(3)).ok());
    }
    SECTION("affine permutation realization of A~2 passes, coroot alpha0 = eps3 - eps1") {
        Realization r = fixtures::affine_perm(3);
        CHECK(validate(r).ok());
        size_t s0 = r.system.generator_index("s0");
        CHECK(r.coroots[s0] == Vec{-1, 0, 1, 0});
    }
    SECTION("scaled coroot breaks condition (1)") {
        Realization r = fixtures::perm(2);
        r.coroots[0] = Rational(2) * r.coroots[0];  // pairing becomes 4
        ValidationReport rep = validate(r);
        CHECK(!rep.ok());
        bool found = false;
        for (const auto& c : rep.results)
            if (!c.pass && c.condition.find("(1)") != std::string::npos) {
                found = true;
                CHECK(c.detail.find("4") != std::string::npos);
            }
        CHECK(found);
    }
    SECTION("structural mismatch throws InvalidInput") {
        Realization r = fixtures::perm(2);
        r.roots[0].e.resize(3);
        CHECK_THROWS_AS(validate(r), InvalidInput);
    }
    SECTION("condition (2): zero pairing with m_st != 2 is rejected") {
        Realization r = fixtures::perm(3);
        // Break the s1-s2 interaction: make alpha_2 orthogonal to coroot_1.
        r.roots[1] = Vec{0, 0, 1};
        r.coroots[1] = Vec{0, 0, 2};
        ValidationReport rep = validate(r);
        CHECK(!rep.ok());
    }
}

TEST_CASE("invariant vectors") {
    SECTION("hbar is invariant in the affine permutation realization") {
        Realization r = fixtures::affine_perm(3);
        CHECK(is_invariant_vector(r, Vec{0, 0, 0, 1}));
    }
    SECTION("x1 is not invariant in perm(2), x1 + x2 is") {
        Realization r = fixtures::perm(2);
        CHECK(!is_invariant_vector(r, Vec{1, 0}));
        CHECK(is_invariant_vector(r, Vec{1, 1}));
    }
    SECTION("pairing criterion agrees with matrix fixing on random vectors") {
        std::mt19937 rng(11);
        for (const std::string& name : {"perm(4)", "affine_perm(3)", "sl_weight(3)"}) {
            Realization r = catalog(name).realization;
            std::vector<Mat> gens;
            for (size_t s = 0; s < r.system.rank(); ++s) gens.push_back(reflection_matrix(r, s));
            for (int k = 0; k < 200; ++k) {
                Vec v = random_vec(rng, r.rank);
                bool fixed = true;
                for (const Mat& m : gens) fixed = fixed && m.apply(v) == v;
                CHECK(is_invariant_vector(r, v) == fixed);
            }
        }
    }
}

TEST_CASE("reflection structure") {
    for (const std::string& name :
         {"perm(4)", "affine_perm(3)", "sl_weight(2)", "q_scaled_A1(2)", "twin_A1_identified_hbar"}) {
        Realization r = catalog(name).realization;
        for (size_t s = 0; s < r.system.rank(); ++s) {
            Mat m = reflection_matrix(r, s);
            INFO(name << " generator " << r.system.generators[s]);
            CHECK((m * m).is_identity());
            // Each reflection fixes a corank-1 subspace.
            Mat diff = m;
            for (size_t i = 0; i < r.rank; ++i) diff.at(i, i) -= 1;
            CHECK(rank(diff) == 1);
            if (r.ring == LatticeRing::Z) CHECK(m.is_integral());
        }
    }
}

TEST_CASE("catalog golden entries") {
    SECTION("perm(3) is S3 on Z^3") {
        NamedExample ex = catalog("perm(3)");
        CHECK(ex.realization.rank == 3);
        CHECK(ex.realization.ring == LatticeRing::Z);
        CHECK(ex.realization.system.generators == std::vector<std::string>{"s1", "s2"});
    }
    SECTION("sl_weight(2): s(varpi) = -varpi") {
        NamedExample ex = catalog("sl_weight(2)");
        CHECK(ex.realization.rank == 1);
        CHECK(reflection_matrix(ex.realization, 0).at(0, 0) == Rational(-1));
    }
    SECTION("q_scaled_A1(2): s(x) = y and t(y) = 2x") {
        NamedExample ex = catalog("q_scaled_A1(2)");
        Mat ms = reflection_matrix(ex.realization, 0);
        Mat mt = reflection_matrix(ex.realization, 1);
        CHECK(ms.apply(Vec{1, 0}) == Vec{0, 1});
        CHECK(mt.apply(Vec{0, 1}) == Vec{2, 0});
    }
    SECTION("nonfaithful fixture acts as (12), (13), (14)") {
        NamedExample ex = catalog("nonfaithful_affine_A2_to_S4");
        Mat ms = reflection_matrix(ex.realization, 0);
        CHECK(ms.apply(Vec{1, 0, 0, 0}) == Vec{0, 1, 0, 0});
        Mat mu = reflection_matrix(ex.realization, 2);
        CHECK(mu.apply(Vec{1, 0, 0, 0}) == Vec{0, 0, 0, 1});
    }
    SECTION("every cataloged example validates") {
        for (const std::string& name : catalog_names()) {
            INFO(name);
            CHECK(validate(catalog(name).realization).ok());
        }
    }
    SECTION("unknown names throw NotFound") {
        CHECK_THROWS_AS(catalog("perm(99)"), NotFound);
        CHECK_THROWS_AS(catalog("no_such_example"), NotFound);
        CHECK_THROWS_AS(catalog("q_scaled_A1(-1)"), NotFound);
    }
}

TEST_CASE("direct sums and basis changes") {
    SECTION("direct sum of perm(2) and perm(3) validates and commutes across blocks") {
        Realization r = direct_sum(fixtures::perm(2), fixtures::perm(3));
        CHECK(validate(r).ok());
        CHECK(r.rank == 5);
        CHECK(r.system.order(0, 1) == 2);  // cross pair
        Mat a = reflection_matrix(r, 0), b = reflection_matrix(r, 1);
        CHECK(a * b == b * a);
    }
    SECTION("name collisions get primes") {
        Realization r = direct_sum(fixtures::perm(2), fixtures::perm(2));
        CHECK(r.system.generators == std::vector<std::string>{"s1", "s1'"});
    }
    SECTION("change of basis preserves validity, non-unimodular over Z is rejected") {
        Mat p(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i; j < 3; ++j) p.at(i, j) = 1;
        Realization r = change_of_basis(fixtures::perm(3), p);
        CHECK(validate(r).ok());
        Mat bad = Mat::identity(3);
        bad.at(0, 0) = 2;
        CHECK_THROWS_AS(change_of_basis(fixtures::perm(3), bad), InvalidInput);
    }
}
