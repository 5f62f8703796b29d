#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthant/almost_orthant.hpp"

namespace orthant {

/// What the classifier must reproduce for a named example (golden data).
struct ExpectedOutcome {
    bool preserves = false;                // with the example's basis
    std::vector<std::string> components;   // labels, in classification order
    std::string group;                     // "S4", "A~2", "A~1 x A~1", "-"
    std::optional<bool> faithful;          // only meaningful when preserves
};

struct NamedExample {
    std::string name;
    Realization realization;
    AlmostOrthantBasis basis;
    ExpectedOutcome expected;
};

namespace fixtures {

/// Permutation realization of S_n on Z^n: roots x_i - x_{i+1}, coroots
/// eps_i - eps_{i+1}.
inline Realization perm(int n) {
    if (n < 2 || n > 6) throw NotFound("perm(n) is cataloged for 2 <= n <= 6");
    Realization r;
    r.system = symmetric_group_system(n);
    r.rank = n;
    r.ring = LatticeRing::Z;
    for (int i = 0; i + 1 < n; ++i) {
        Vec root(n);
        root[i] = 1;
        root[i + 1] = -1;
        r.roots.push_back(root);
        r.coroots.push_back(root);
    }
    return r;
}

/// Affine permutation realization of A~_{n-1} on Z^{n+1} with basis
/// {x_1..x_n, hbar}: s_i swaps x_i, x_{i+1}; s_0 sends x_n to x_1 - hbar.
/// Roots alpha_i = x_i - x_{i+1} and alpha_0 = x_n - x_1 + hbar; coroots
/// eps_i - eps_{i+1} and eps_n - eps_1.
inline Realization affine_perm(int n) {
    if (n < 2 || n > 6) throw NotFound("affine_perm(n) is cataloged for 2 <= n <= 6");
    Realization r;
    r.system = affine_symmetric_group_system(n);
    r.rank = n + 1;
    r.ring = LatticeRing::Z;
    for (int i = 0; i + 1 < n; ++i) {
        Vec root(n + 1), coroot(n + 1);
        root[i] = coroot[i] = 1;
        root[i + 1] = coroot[i + 1] = -1;
        r.roots.push_back(root);
        r.coroots.push_back(coroot);
    }
    Vec root0(n + 1), coroot0(n + 1);
    root0[n - 1] = 1;
    root0[0] = -1;
    root0[n] = 1;  // + hbar
    coroot0[n - 1] = 1;
    coroot0[0] = -1;
    r.roots.push_back(root0);
    r.coroots.push_back(coroot0);
    return r;
}

/// Weight lattice of SL_n (n = 2, 3) in the fundamental-weight basis.
inline Realization sl_weight(int n) {
    Realization r;
    r.ring = LatticeRing::Z;
    if (n == 2) {
        r.system = symmetric_group_system(2);
        r.rank = 1;
        r.roots.push_back(Vec{2});    // alpha = 2 varpi
        r.coroots.push_back(Vec{1});  // alpha_vee(varpi) = 1
    } else if (n == 3) {
        r.system = symmetric_group_system(3);
        r.rank = 2;
        r.roots.push_back(Vec{2, -1});
        r.roots.push_back(Vec{-1, 2});
        r.coroots.push_back(Vec{1, 0});
        r.coroots.push_back(Vec{0, 1});
    } else {
        throw NotFound("sl_weight(n) is cataloged for n in {2, 3}");
    }
    return r;
}

/// Dihedral realizations: exact Tits representation for m in {2, 3, 0};
/// for m = 4 the crystallographic B2 root datum (asymmetric rational Gram
/// pairing -2 / -1), since cos(pi/4) is irrational.
inline Realization dihedral_geometric(int m) {
    if (m == 2 || m == 3 || m == CoxeterSystem::infinite_order)
        return standard_geometric_realization(dihedral_system(m));
    if (m == 4) {
        Realization r;
        r.system = dihedral_system(4);
        r.rank = 2;
        r.ring = LatticeRing::Z;
        r.roots.push_back(Vec{1, 0});
        r.roots.push_back(Vec{0, 1});
        r.coroots.push_back(Vec{2, -2});
        r.coroots.push_back(Vec{-1, 2});
        return r;
    }
    throw NotFound("dihedral_geometric(m) is cataloged for m in {2, 3, 4, 0}");
}

/// The three simple reflections of A~2 acting on Z^4 as the transpositions
/// (12), (13), (14): a valid but non-faithful realization whose graph is a
/// star of three edges at x_1. The image of W is S_4.
inline Realization nonfaithful_affine_a2_to_s4() {
    Realization r;
    r.system = make_system({"s", "t", "u"}, {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
    r.rank = 4;
    r.ring = LatticeRing::Z;
    for (int other = 1; other <= 3; ++other) {
        Vec root(4);
        root[0] = 1;
        root[other] = -1;
        r.roots.push_back(root);
        r.coroots.push_back(root);
    }
    return r;
}

/// Faithful A~1 realization over Q on the plain orthant: s(x) = y and
/// t(y) = q x for a positive rational q (q = 1 degenerates to a non-faithful
/// action where s and t agree on V).
inline Realization q_scaled_a1(const Rational& q) {
    if (!q.is_positive()) throw NotFound("q_scaled_A1(q) needs q > 0");
    Realization r;
    r.system = dihedral_system(CoxeterSystem::infinite_order);
    r.rank = 2;
    r.ring = LatticeRing::Q;
    r.roots.push_back(Vec{1, -1});
    r.coroots.push_back(Vec{1, -1});
    r.roots.push_back(Vec{-q, 1});
    r.coroots.push_back(Vec{-q.reciprocal(), 1});
    return r;
}

/// Direct sum of two affine permutation representations of A~1 with their
/// invariant vectors identified: basis {x_1, x_2, x_3, x_4, hbar}, double
/// edges on {x_1, x_2} (s, t) and {x_3, x_4} (u, v), both shifted by the
/// same hbar.
inline Realization twin_a1_identified_hbar() {
    Realization r;
    int inf = CoxeterSystem::infinite_order;
    r.system = make_system({"s", "t", "u", "v"},
                           {{1, inf, 2, 2}, {inf, 1, 2, 2}, {2, 2, 1, inf}, {2, 2, inf, 1}});
    r.rank = 5;
    r.ring = LatticeRing::Z;
    r.roots.push_back(Vec{1, -1, 0, 0, 0});
    r.coroots.push_back(Vec{1, -1, 0, 0, 0});
    r.roots.push_back(Vec{-1, 1, 0, 0, 1});
    r.coroots.push_back(Vec{-1, 1, 0, 0, 0});
    r.roots.push_back(Vec{0, 0, 1, -1, 0});
    r.coroots.push_back(Vec{0, 0, 1, -1, 0});
    r.roots.push_back(Vec{0, 0, -1, 1, 1});
    r.coroots.push_back(Vec{0, 0, -1, 1, 0});
    return r;
}

/// Three generators all swapping x and y with independent shifts h1, h2, h3:
/// a triple edge, hence not faithful over Z.
inline Realization triple_edge() {
    Realization r;
    int inf = CoxeterSystem::infinite_order;
    r.system = make_system({"s", "t", "u"}, {{1, inf, inf}, {inf, 1, inf}, {inf, inf, 1}});
    r.rank = 5;
    r.ring = LatticeRing::Z;
    for (int k = 0; k < 3; ++k) {
        Vec root(5);
        root[0] = 1;
        root[1] = -1;
        root[2 + k] = -1;  // s(x) = y + h_{k+1}
        r.roots.push_back(root);
        r.coroots.push_back(Vec{1, -1, 0, 0, 0});
    }
    return r;
}

/// A double edge {s, t} on {x, y} (t shifted by h) meeting a plain edge u on
/// {x, z}: forbidden over Z.
inline Realization double_edge_plus_edge() {
    Realization r;
    int inf = CoxeterSystem::infinite_order;
    r.system = make_system({"s", "t", "u"}, {{1, inf, 3}, {inf, 1, 3}, {3, 3, 1}});
    r.rank = 4;
    r.ring = LatticeRing::Z;
    r.roots.push_back(Vec{1, -1, 0, 0});
    r.coroots.push_back(Vec{1, -1, 0, 0});
    r.roots.push_back(Vec{1, -1, 0, -1});  // t(x) = y + h
    r.coroots.push_back(Vec{1, -1, 0, 0});
    r.roots.push_back(Vec{1, 0, -1, 0});
    r.coroots.push_back(Vec{1, 0, -1, 0});
    return r;
}

/// perm(3) rewritten in the scrambled Z-basis f1 = x1, f2 = x1 + x2,
/// f3 = x1 + x2 + x3. The standard orthant of the f-basis is not preserved;
/// the orthant search recovers the permuted basis.
inline Realization perm3_scrambled() {
    Mat p(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i; j < 3; ++j) p.at(i, j) = 1;
    return change_of_basis(perm(3), p);
}

/// S_3 permutation realization padded with one coordinate fixed by W, kept
/// inside X: classification is Line(3) + Line(1), psi is an isomorphism.
inline Realization perm3_plus_fixed_line() {
    Realization r = perm(3);
    r.rank = 4;
    for (auto& v : r.roots) v.e.resize(4);
    for (auto& v : r.coroots) v.e.resize(4);
    return r;
}

/// I_2(6) acting through S_3 as (12), (23) on Z^3: every pair order on V is
/// 3 while m_st = 6, so the action is valid but not faithful.
inline Realization dihedral6_on_perm3() {
    Realization r;
    r.system = dihedral_system(6);
    r.rank = 3;
    r.ring = LatticeRing::Z;
    r.roots.push_back(Vec{1, -1, 0});
    r.coroots.push_back(Vec{1, -1, 0});
    r.roots.push_back(Vec{0, 1, -1});
    r.coroots.push_back(Vec{0, 1, -1});
    return r;
}

}  // namespace fixtures

inline std::vector<std::string> catalog_names() {
    return {
        "perm(2)", "perm(3)", "perm(4)", "perm(5)", "perm(6)",
        "affine_perm(2)", "affine_perm(3)", "affine_perm(4)", "affine_perm(5)",
        "sl_weight(2)", "sl_weight(3)",
        "dihedral_geometric(2)", "dihedral_geometric(3)", "dihedral_geometric(4)",
        "dihedral_geometric(0)",
        "nonfaithful_affine_A2_to_S4",
        "q_scaled_A1(2)", "q_scaled_A1(1/2)", "q_scaled_A1(1)",
        "twin_A1_identified_hbar",
        "triple_edge", "double_edge_plus_edge",
        "perm3_scrambled", "perm3_plus_fixed_line",
        "dihedral6_on_perm3",
    };
}

/// Looks up a named example; q_scaled_A1 accepts any positive rational
/// argument, the other parametrized families the documented ranges.
inline NamedExample catalog(const std::string& name) {
    auto parse_arg = [&](const std::string& head) -> std::optional<std::string> {
        if (name.size() <= head.size() + 2) return std::nullopt;
        if (name.compare(0, head.size(), head) != 0) return std::nullopt;
        if (name[head.size()] != '(' || name.back() != ')') return std::nullopt;
        return name.substr(head.size() + 1, name.size() - head.size() - 2);
    };
    auto int_arg = [&](const std::optional<std::string>& a) -> std::optional<int> {
        if (!a) return std::nullopt;
        try {
            size_t used = 0;
            int v = std::stoi(*a, &used);
            if (used != a->size()) return std::nullopt;
            return v;
        } catch (...) {
            return std::nullopt;
        }
    };

    NamedExample ex;
    ex.name = name;
    if (auto n = int_arg(parse_arg("perm"))) {
        ex.realization = fixtures::perm(*n);
        ex.basis = standard_orthant(*n);
        ex.expected = {true, {"Line(" + std::to_string(*n) + ")"}, "S" + std::to_string(*n), true};
        return ex;
    }
    if (auto n = int_arg(parse_arg("affine_perm"))) {
        ex.realization = fixtures::affine_perm(*n);
        ex.basis = standard_orthant(*n + 1);
        ex.basis.H.push_back(ex.basis.X.back());
        ex.basis.X.pop_back();
        ex.expected = {true,
                       {*n == 2 ? "LoneDoubleEdge" : "Circle(" + std::to_string(*n) + ")"},
                       "A~" + std::to_string(*n - 1),
                       true};
        return ex;
    }
    if (auto n = int_arg(parse_arg("sl_weight"))) {
        ex.realization = fixtures::sl_weight(*n);
        ex.basis = standard_orthant(ex.realization.rank);
        ex.expected = {false, {}, "-", std::nullopt};
        return ex;
    }
    if (auto m = int_arg(parse_arg("dihedral_geometric"))) {
        ex.realization = fixtures::dihedral_geometric(*m);
        ex.basis = standard_orthant(2);
        ex.expected = {false, {}, "-", std::nullopt};
        return ex;
    }
    if (auto q = parse_arg("q_scaled_A1")) {
        Rational qv = Rational::parse(*q);
        ex.realization = fixtures::q_scaled_a1(qv);
        ex.basis = standard_orthant(2);
        ex.expected = {true, {"LoneDoubleEdge"}, "A~1", qv != Rational(1)};
        return ex;
    }
    if (name == "nonfaithful_affine_A2_to_S4") {
        ex.realization = fixtures::nonfaithful_affine_a2_to_s4();
        ex.basis = standard_orthant(4);
        ex.expected = {true, {"Forbidden(Valence3Star)"}, "-", false};
        return ex;
    }
    if (name == "twin_A1_identified_hbar") {
        ex.realization = fixtures::twin_a1_identified_hbar();
        ex.basis = standard_orthant(5);
        ex.basis.H.push_back(ex.basis.X.back());
        ex.basis.X.pop_back();
        ex.expected = {true, {"LoneDoubleEdge", "LoneDoubleEdge"}, "A~1 x A~1", true};
        return ex;
    }
    if (name == "triple_edge") {
        ex.realization = fixtures::triple_edge();
        ex.basis = standard_orthant(5);
        ex.basis.H.assign(ex.basis.X.begin() + 2, ex.basis.X.end());
        ex.basis.X.resize(2);
        ex.expected = {true, {"Forbidden(TripleEdge)"}, "-", false};
        return ex;
    }
    if (name == "double_edge_plus_edge") {
        ex.realization = fixtures::double_edge_plus_edge();
        ex.basis = standard_orthant(4);
        ex.basis.H.assign(ex.basis.X.begin() + 3, ex.basis.X.end());
        ex.basis.X.resize(3);
        ex.expected = {true, {"Forbidden(DoubleEdgePlusEdge)"}, "-", false};
        return ex;
    }
    if (name == "perm3_scrambled") {
        ex.realization = fixtures::perm3_scrambled();
        ex.basis = standard_orthant(3);
        ex.expected = {false, {}, "-", std::nullopt};
        return ex;
    }
    if (name == "perm3_plus_fixed_line") {
        ex.realization = fixtures::perm3_plus_fixed_line();
        ex.basis = standard_orthant(4);
        ex.expected = {true, {"Line(3)", "Line(1)"}, "S3 x S1", true};
        return ex;
    }
    if (name == "dihedral6_on_perm3") {
        ex.realization = fixtures::dihedral6_on_perm3();
        ex.basis = standard_orthant(3);
        ex.expected = {true, {"Line(3)"}, "S3", false};
        return ex;
    }
    throw NotFound("unknown catalog name: " + name + " (see `orthant catalog` for the list)");
}

}  // namespace orthant
