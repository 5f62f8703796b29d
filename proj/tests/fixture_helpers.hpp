#pragma once

// Shared helpers for the unit and acceptance suites: deterministic random
// perturbations of almost-orthant bases and small utilities.

#include <random>
#include <string>
#include <vector>

#include "orthant/catalog.hpp"

namespace orthant::testing {

inline Rational random_positive_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 6), den(1, 6);
    return Rational(num(rng), den(rng));
}

/// Rescales each x in X by a positive rational (Q only) and adds a random
/// integer combination of H. Both moves keep the spanned almost-orthant,
/// so preservation and the transposition graph are unchanged while the
/// extracted quadruples pick up nontrivial b and shifts.
inline AlmostOrthantBasis perturb_basis(std::mt19937& rng, const Realization& r,
                                        const AlmostOrthantBasis& basis) {
    std::uniform_int_distribution<int> shift(-2, 2);
    AlmostOrthantBasis out = basis;
    for (Vec& x : out.X) {
        if (r.ring == LatticeRing::Q) x = random_positive_rational(rng) * x;
        for (const Vec& h : basis.H) x = x + Rational(shift(rng)) * h;
    }
    return out;
}

/// The catalog fixtures that preserve their almost-orthant.
inline std::vector<std::string> preserving_fixtures() {
    return {
        "perm(2)", "perm(3)", "perm(4)", "perm(5)", "perm(6)",
        "affine_perm(2)", "affine_perm(3)", "affine_perm(4)", "affine_perm(5)",
        "nonfaithful_affine_A2_to_S4",
        "q_scaled_A1(2)", "q_scaled_A1(1/2)", "q_scaled_A1(1)",
        "twin_A1_identified_hbar",
        "triple_edge", "double_edge_plus_edge",
        "perm3_plus_fixed_line", "dihedral6_on_perm3",
    };
}

/// Preserving fixtures whose classification has no forbidden component.
inline std::vector<std::string> normalizable_fixtures() {
    return {
        "perm(2)", "perm(3)", "perm(4)", "perm(5)", "perm(6)",
        "affine_perm(2)", "affine_perm(3)", "affine_perm(4)", "affine_perm(5)",
        "q_scaled_A1(2)", "q_scaled_A1(1/2)", "q_scaled_A1(1)",
        "twin_A1_identified_hbar", "perm3_plus_fixed_line", "dihedral6_on_perm3",
    };
}

/// Fixtures with a finite group image (|W| <= 720), for full-group oracles.
inline std::vector<std::string> finite_group_fixtures() {
    return {
        "perm(2)", "perm(3)", "perm(4)", "perm(5)", "perm(6)",
        "sl_weight(2)", "sl_weight(3)",
        "dihedral_geometric(2)", "dihedral_geometric(3)", "dihedral_geometric(4)",
        "nonfaithful_affine_A2_to_S4", "perm3_scrambled", "perm3_plus_fixed_line",
        "dihedral6_on_perm3",
    };
}

}  // namespace orthant::testing
