#pragma once

#include <string>
#include <vector>

#include "orthant/errors.hpp"

namespace orthant {

/// Coxeter system (W, S): generator names plus the Coxeter matrix.
/// m_ss = 1; off-diagonal entries are >= 2, with 0 encoding infinity
/// (the same convention used in the JSON schema).
struct CoxeterSystem {
    static constexpr int infinite_order = 0;

    std::vector<std::string> generators;
    std::vector<std::vector<int>> matrix;

    size_t rank() const { return generators.size(); }
    int order(size_t s, size_t t) const { return matrix[s][t]; }
    bool finite_order(size_t s, size_t t) const { return matrix[s][t] != infinite_order; }

    /// Structural validation: square, symmetric, 1 on the diagonal,
    /// >= 2 or 0 elsewhere. Throws InvalidInput.
    void check() const {
        size_t n = generators.size();
        if (n == 0) throw InvalidInput("coxeter system with no generators");
        if (matrix.size() != n) throw InvalidInput("coxeter matrix row count != generator count");
        for (size_t i = 0; i < n; ++i) {
            if (matrix[i].size() != n) throw InvalidInput("coxeter matrix is not square");
            if (matrix[i][i] != 1) throw InvalidInput("coxeter matrix diagonal entry != 1");
            for (size_t j = 0; j < n; ++j) {
                if (matrix[i][j] != matrix[j][i]) throw InvalidInput("coxeter matrix not symmetric");
                if (i != j && matrix[i][j] != infinite_order && matrix[i][j] < 2)
                    throw InvalidInput("off-diagonal coxeter entry < 2");
            }
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (generators[i] == generators[j])
                    throw InvalidInput("duplicate generator name " + generators[i]);
    }

    size_t generator_index(const std::string& name) const {
        for (size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) return i;
        throw NotFound("no generator named " + name);
    }
};

/// A word in the generators, as a sequence of generator indices.
/// Words need not be reduced.
using Word = std::vector<int>;

inline std::string word_str(const CoxeterSystem& sys, const Word& w) {
    if (w.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += sys.generators[w[i]];
    }
    return s;
}

/// Builds a system from generator names and an initializer-style matrix.
inline CoxeterSystem make_system(std::vector<std::string> names,
                                 std::vector<std::vector<int>> matrix) {
    CoxeterSystem sys{std::move(names), std::move(matrix)};
    sys.check();
    return sys;
}

/// The symmetric group S_n as the type A_{n-1} system on generators s1..s{n-1}.
inline CoxeterSystem symmetric_group_system(int n) {
    if (n < 2) throw InvalidInput("symmetric_group_system needs n >= 2");
    size_t r = n - 1;
    std::vector<std::string> names(r);
    std::vector<std::vector<int>> m(r, std::vector<int>(r, 2));
    for (size_t i = 0; i < r; ++i) {
        names[i] = "s" + std::to_string(i + 1);
        m[i][i] = 1;
        if (i + 1 < r) m[i][i + 1] = m[i + 1][i] = 3;
    }
    return make_system(std::move(names), std::move(m));
}

/// The affine Weyl group of type A~_{n-1} on generators s1..s{n-1}, s0.
/// For n = 2 this is the infinite dihedral group (m_{s1 s0} = infinity).
inline CoxeterSystem affine_symmetric_group_system(int n) {
    if (n < 2) throw InvalidInput("affine_symmetric_group_system needs n >= 2");
    size_t r = n;  // generators s1..s{n-1} then s0
    std::vector<std::string> names(r);
    for (size_t i = 0; i + 1 < r; ++i) names[i] = "s" + std::to_string(i + 1);
    names[r - 1] = "s0";
    std::vector<std::vector<int>> m(r, std::vector<int>(r, 2));
    for (size_t i = 0; i < r; ++i) m[i][i] = 1;
    if (n == 2) {
        m[0][1] = m[1][0] = CoxeterSystem::infinite_order;
    } else {
        for (size_t i = 0; i + 1 < r; ++i) m[i][i + 1] = m[i + 1][i] = 3;
        m[0][r - 1] = m[r - 1][0] = 3;  // s0 closes the circle
    }
    return make_system(std::move(names), std::move(m));
}

/// The dihedral system I_2(m) on generators s, t; m = 0 means infinity.
inline CoxeterSystem dihedral_system(int m) {
    if (m != CoxeterSystem::infinite_order && m < 2)
        throw InvalidInput("dihedral order must be >= 2 or 0 (infinity)");
    return make_system({"s", "t"}, {{1, m}, {m, 1}});
}

}  // namespace orthant
