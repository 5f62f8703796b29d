#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixture_helpers.hpp"
#include "orthant/decompose.hpp"
#include "orthant/oracle.hpp"

using namespace orthant;

TEST_CASE("full-group orthant oracle agrees with the generator check") {
    SECTION("pinned examples") {
        NamedExample p4 = catalog("perm(4)");
        CHECK(oracle::bruteforce_orthant_check(p4.realization, p4.basis));
        CHECK(oracle::compare_orthant_check(p4.realization, p4.basis).agree);

        NamedExample sl2 = catalog("sl_weight(2)");
        CHECK(!oracle::bruteforce_orthant_check(sl2.realization, sl2.basis));
        CHECK(oracle::compare_orthant_check(sl2.realization, sl2.basis).agree);

        NamedExample scrambled = catalog("perm3_scrambled");
        std::string ce;
        CHECK(!oracle::bruteforce_orthant_check(scrambled.realization, scrambled.basis, &ce));
        CHECK(!ce.empty());
        CHECK(oracle::compare_orthant_check(scrambled.realization, scrambled.basis).agree);
    }
    SECTION("infinite groups are unsupported") {
        NamedExample aff = catalog("affine_perm(2)");
        CHECK_THROWS_AS(oracle::bruteforce_orthant_check(aff.realization, aff.basis),
                        Unsupported);
    }
    SECTION("agreement on every finite-group fixture") {
        for (const std::string& name : testing::finite_group_fixtures()) {
            NamedExample ex = catalog(name);
            INFO(name);
            CHECK(oracle::compare_orthant_check(ex.realization, ex.basis).agree);
        }
    }
    SECTION("agreement on randomized valid bases (500 cases)") {
        std::mt19937 rng(47);
        std::vector<std::string> small{"perm(2)", "perm(3)", "perm(4)", "perm3_plus_fixed_line",
                                       "dihedral6_on_perm3"};
        for (int k = 0; k < 500; ++k) {
            NamedExample ex = catalog(small[k % small.size()]);
            Realization r = k % 2 == 0 ? ex.realization : with_ring(ex.realization, LatticeRing::Q);
            AlmostOrthantBasis b = testing::perturb_basis(rng, r, ex.basis);
            INFO(ex.name << " trial " << k);
            CHECK(oracle::compare_orthant_check(r, b).agree);
        }
    }
}

TEST_CASE("quadruple oracle agrees with the proof-driven extraction") {
    SECTION("pinned examples, asserted equal") {
        for (const std::string& name : {"perm(3)", "affine_perm(4)", "q_scaled_A1(2)"}) {
            NamedExample ex = catalog(name);
            INFO(name);
            CHECK(oracle::compare_quadruples(ex.realization, ex.basis).agree);
        }
    }
    SECTION("agreement on randomized perturbations (500 cases)") {
        std::mt19937 rng(48);
        auto names = testing::preserving_fixtures();
        for (int k = 0; k < 500; ++k) {
            NamedExample ex = catalog(names[k % names.size()]);
            AlmostOrthantBasis b = testing::perturb_basis(rng, ex.realization, ex.basis);
            INFO(ex.name << " trial " << k);
            CHECK(oracle::compare_quadruples(ex.realization, b).agree);
        }
    }
}

TEST_CASE("kernel oracle: independent elimination order") {
    SECTION("pinned examples") {
        CHECK(oracle::bruteforce_kernel(Mat::identity(4)).empty());
        DecompositionResult twin =
            decompose(catalog("twin_A1_identified_hbar").realization,
                      catalog("twin_A1_identified_hbar").basis);
        auto brute = oracle::bruteforce_kernel(twin.psi.psi);
        CHECK(brute.size() == 2);
        CHECK(same_span(brute, twin.psi.kernel, twin.psi.layout.total));
        DecompositionResult p3 = decompose(catalog("perm(3)").realization,
                                           catalog("perm(3)").basis);
        CHECK(oracle::bruteforce_kernel(p3.psi.psi).empty());
    }
    SECTION("agreement on 500 random matrices") {
        std::mt19937 rng(49);
        std::uniform_int_distribution<int> dim(1, 5), entry(-4, 4), den(1, 3);
        for (int k = 0; k < 500; ++k) {
            Mat m(dim(rng), dim(rng));
            for (size_t i = 0; i < m.rows; ++i)
                for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = Rational(entry(rng), den(rng));
            INFO("trial " << k);
            CHECK(oracle::compare_kernel(m).agree);
            for (const Vec& v : oracle::bruteforce_kernel(m)) CHECK(m.apply(v).is_zero());
        }
    }
}
