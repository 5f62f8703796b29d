#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthant/almost_orthant.hpp"

namespace orthant {
namespace oracle {

/// Outcome of running a fast check against its brute-force twin.
struct OracleReport {
    std::string check;
    bool agree = false;
    std::string counterexample;  // first disagreement, deterministic order
};

/// Full-group orthant check: every element of W maps every x in X into the
/// almost-orthant. Requires the image of W to be finite (enumeration closes);
/// otherwise throws Unsupported.
inline bool bruteforce_orthant_check(const Realization& r, const AlmostOrthantBasis& basis,
                                     std::string* counterexample = nullptr) {
    CoordSystem cs = coord_system(r, basis);
    auto group = enumerate_until_complete(r);
    if (!group.has_value())
        throw Unsupported("group image not verified finite; brute-force check unavailable");
    for (const Mat& m : *group) {
        for (size_t j = 0; j < basis.X.size(); ++j) {
            Vec c = cs.coords(m.apply(basis.X[j]));
            for (size_t k = 0; k < cs.nx; ++k) {
                if (c[k].is_negative()) {
                    if (counterexample)
                        *counterexample = "element maps X[" + std::to_string(j) +
                                          "] to coordinate " + std::to_string(k) + " = " +
                                          c[k].str();
                    return false;
                }
            }
        }
        for (const Vec& h : basis.H) {
            if (m.apply(h) != h) {
                if (counterexample) *counterexample = "element moves a vector of H";
                return false;
            }
        }
    }
    return true;
}

/// Reads the quadruple directly off the columns of the reflection matrix in
/// (X, H) coordinates, independently of the proof-driven extraction.
inline GeneratorAction bruteforce_quadruple(const Realization& r,
                                            const AlmostOrthantBasis& basis, size_t s) {
    CoordSystem cs = coord_system(r, basis);
    Mat action = cs.basis_inv * reflection_matrix(r, s) * cs.basis;  // (X,H) coordinates

    std::vector<size_t> moved;
    for (size_t j = 0; j < cs.nx; ++j)
        if (action.col(j) != unit_vec(r.rank, j)) moved.push_back(j);
    if (moved.empty()) return {};
    if (moved.size() != 2)
        throw TheoremViolation("matrix moves " + std::to_string(moved.size()) +
                               " basis vectors of X");

    size_t x = moved[0], y = moved[1];
    RescaledShiftedTransposition t;
    t.x = x;
    t.y = y;
    t.b = action.at(y, x);  // s(x) = b y + hbar
    if (!t.b.is_positive()) throw TheoremViolation("column does not have quadruple shape");
    t.shift_h = Vec(cs.nh);
    for (size_t j = 0; j < cs.nh; ++j) t.shift_h[j] = action.at(cs.nx + j, x);
    // Column structure sanity: x column touches only y and H, y column only
    // x and H with the inverse scale.
    for (size_t i = 0; i < cs.nx; ++i) {
        if (i != y && !action.at(i, x).is_zero())
            throw TheoremViolation("column does not have quadruple shape");
        if (i != x && !action.at(i, y).is_zero())
            throw TheoremViolation("column does not have quadruple shape");
    }
    if (action.at(x, y) != t.b.reciprocal())
        throw TheoremViolation("partner column scale is not b^-1");
    return {t};
}

/// Kernel by an independent elimination order: pivots are chosen scanning
/// columns from the right. Spans must agree with kernel_basis.
inline std::vector<Vec> bruteforce_kernel(const Mat& m) {
    Mat r = m;
    std::vector<size_t> pivot_col;  // per eliminated row, in elimination order
    std::vector<size_t> pivot_row;
    std::vector<bool> row_used(m.rows, false);
    for (size_t cc = 0; cc < m.cols; ++cc) {
        size_t c = m.cols - 1 - cc;  // right-to-left
        size_t piv = m.rows;
        for (size_t i = 0; i < m.rows; ++i) {
            if (!row_used[i] && !r.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == m.rows) continue;
        row_used[piv] = true;
        Rational inv = r.at(piv, c).reciprocal();
        for (size_t j = 0; j < m.cols; ++j) r.at(piv, j) *= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == piv || r.at(i, c).is_zero()) continue;
            Rational f = r.at(i, c);
            for (size_t j = 0; j < m.cols; ++j) r.at(i, j) -= f * r.at(piv, j);
        }
        pivot_col.push_back(c);
        pivot_row.push_back(piv);
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols);
        v[f] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -r.at(pivot_row[i], f);
        basis.push_back(saturate(v));
    }
    return basis;
}

inline OracleReport compare_orthant_check(const Realization& r, const AlmostOrthantBasis& basis) {
    OracleReport rep;
    rep.check = "almost-orthant invariance (generators vs full group)";
    OrthantCheck fast = preserves_almost_orthant(r, basis);
    std::string ce;
    bool brute = bruteforce_orthant_check(r, basis, &ce);
    rep.agree = fast.preserved == brute;
    if (!rep.agree)
        rep.counterexample = fast.preserved ? "generator check true, full group found: " + ce
                                            : "full group true, generator check failed";
    return rep;
}

inline OracleReport compare_quadruples(const Realization& r, const AlmostOrthantBasis& basis) {
    OracleReport rep;
    rep.check = "generator action extraction (proof vs column read-off)";
    rep.agree = true;
    for (size_t s = 0; s < r.system.rank(); ++s) {
        GeneratorAction a = extract_generator_action(r, basis, s);
        GeneratorAction b = bruteforce_quadruple(r, basis, s);
        if (!(a == b)) {
            rep.agree = false;
            rep.counterexample = "generator " + r.system.generators[s];
            return rep;
        }
    }
    return rep;
}

inline OracleReport compare_kernel(const Mat& psi) {
    OracleReport rep;
    rep.check = "kernel basis (left-to-right vs right-to-left elimination)";
    std::vector<Vec> a = kernel_basis(psi);
    std::vector<Vec> b = bruteforce_kernel(psi);
    rep.agree = a.size() == b.size() && same_span(a, b, psi.cols);
    if (!rep.agree) rep.counterexample = "spans differ";
    return rep;
}

}  // namespace oracle
}  // namespace orthant
