#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orthant/coxeter.hpp"
#include "orthant/linalg.hpp"

namespace orthant {

enum class LatticeRing { Z, Q };

inline std::string ring_str(LatticeRing r) { return r == LatticeRing::Z ? "Z" : "Q"; }

/// A realization of (W, S): a rank-n free module with a simple root alpha_s
/// (ambient coordinates) and a simple coroot alpha_s_vee (dual coordinates)
/// per generator. Each generator acts by s(x) = x - alpha_s_vee(x) alpha_s.
struct Realization {
    CoxeterSystem system;
    size_t rank = 0;
    std::vector<Vec> roots;
    std::vector<Vec> coroots;
    LatticeRing ring = LatticeRing::Z;

    Rational pairing(size_t s, const Vec& v) const { return pair(coroots[s], v); }
};

inline Mat reflection_matrix(const Realization& r, size_t s) {
    Mat m = Mat::identity(r.rank);
    for (size_t i = 0; i < r.rank; ++i)
        for (size_t j = 0; j < r.rank; ++j) m.at(i, j) -= r.roots[s][i] * r.coroots[s][j];
    return m;
}

/// Action matrix of a word; the empty word gives the identity.
/// word_matrix(uv) = word_matrix(u) * word_matrix(v).
inline Mat word_matrix(const Realization& r, const Word& w) {
    Mat m = Mat::identity(r.rank);
    for (int s : w) m = m * reflection_matrix(r, s);
    return m;
}

struct ConditionResult {
    std::string condition;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ConditionResult> results;
    bool ok() const {
        for (const auto& c : results)
            if (!c.pass) return false;
        return true;
    }
};

/// Checks the defining conditions of a realization:
///   (1) alpha_s_vee(alpha_s) = 2,
///   (2) for s != t, alpha_s_vee(alpha_t) = 0 iff m_st = 2,
///   (3) (s t)^{m_st} acts as the identity whenever m_st is finite,
///   (L) when the lattice ring is Z, every reflection matrix is integral.
/// Structural problems (wrong vector lengths, bad Coxeter matrix) throw
/// InvalidInput; condition failures are reported, not thrown.
inline ValidationReport validate(const Realization& r) {
    r.system.check();
    size_t n = r.system.rank();
    if (r.rank < 1) throw InvalidInput("realization rank must be >= 1");
    if (r.roots.size() != n || r.coroots.size() != n)
        throw InvalidInput("realization needs one root and one coroot per generator");
    for (size_t s = 0; s < n; ++s) {
        if (r.roots[s].size() != r.rank || r.coroots[s].size() != r.rank)
            throw InvalidInput("root/coroot length differs from rank (generator " +
                               r.system.generators[s] + ")");
    }

    ValidationReport rep;
    for (size_t s = 0; s < n; ++s) {
        Rational v = r.pairing(s, r.roots[s]);
        rep.results.push_back({"(1) alpha_vee(alpha) = 2", v == Rational(2),
                               r.system.generators[s] + ": " + v.str()});
    }
    for (size_t s = 0; s < n; ++s) {
        for (size_t t = 0; t < n; ++t) {
            if (s == t) continue;
            Rational v = r.pairing(s, r.roots[t]);
            bool want_zero = r.system.order(s, t) == 2;
            rep.results.push_back({"(2) pairing zero iff m_st = 2", v.is_zero() == want_zero,
                                   "(" + r.system.generators[s] + "," + r.system.generators[t] +
                                       "): " + v.str()});
        }
    }
    for (size_t s = 0; s < n; ++s) {
        for (size_t t = s + 1; t < n; ++t) {
            if (!r.system.finite_order(s, t)) continue;  // m = infinity imposes no relation
            Mat st = reflection_matrix(r, s) * reflection_matrix(r, t);
            bool holds = mat_power(st, r.system.order(s, t)).is_identity();
            rep.results.push_back({"(3) (st)^m = id", holds,
                                   "(" + r.system.generators[s] + "," + r.system.generators[t] +
                                       "), m = " + std::to_string(r.system.order(s, t))});
        }
    }
    if (r.ring == LatticeRing::Z) {
        for (size_t s = 0; s < n; ++s) {
            rep.results.push_back({"(L) Z-lattice preserved", reflection_matrix(r, s).is_integral(),
                                   r.system.generators[s]});
        }
    }
    return rep;
}

/// Throws InvalidInput unless the realization validates cleanly.
inline const Realization& require_valid(const Realization& r) {
    ValidationReport rep = validate(r);
    if (!rep.ok()) {
        for (const auto& c : rep.results)
            if (!c.pass)
                throw InvalidInput("invalid realization: " + c.condition + " at " + c.detail);
    }
    return r;
}

/// v is W-invariant iff alpha_s_vee(v) = 0 for every s (roots are nonzero on
/// a validated realization). Cross-checked against the reflections fixing v.
inline bool is_invariant_vector(const Realization& r, const Vec& v) {
    if (v.size() != r.rank) throw InvalidInput("vector length differs from rank");
    bool by_pairing = true;
    for (size_t s = 0; s < r.system.rank(); ++s)
        if (!r.pairing(s, v).is_zero()) by_pairing = false;
    bool by_matrices = true;
    for (size_t s = 0; s < r.system.rank(); ++s)
        if (reflection_matrix(r, s).apply(v) != v) by_matrices = false;
    if (by_pairing != by_matrices)
        throw TheoremViolation("invariance checks disagree; realization not validated?");
    return by_pairing;
}

struct Enumeration {
    std::vector<Mat> elements;  // sorted, deterministic
    bool complete = false;      // the set is closed under the generators
};

/// Distinct action matrices of all words of length <= max_len. Completeness
/// means the set is closed under left multiplication by every generator, in
/// which case it is the whole image of W.
inline Enumeration enumerate_elements(const Realization& r, int max_len) {
    if (max_len < 0) throw InvalidInput("max_len must be >= 0");
    std::vector<Mat> gens;
    for (size_t s = 0; s < r.system.rank(); ++s) gens.push_back(reflection_matrix(r, s));
    std::set<Mat> seen{Mat::identity(r.rank)};
    std::vector<Mat> frontier{Mat::identity(r.rank)};
    bool complete = false;
    for (int len = 1; len <= max_len && !complete; ++len) {
        std::vector<Mat> next;
        for (const Mat& m : frontier)
            for (const Mat& g : gens) {
                Mat p = g * m;
                if (seen.insert(p).second) next.push_back(p);
            }
        complete = next.empty();
        frontier = std::move(next);
    }
    if (!complete) {
        complete = true;
        for (const Mat& m : seen) {
            for (const Mat& g : gens) {
                if (!seen.count(g * m)) {
                    complete = false;
                    break;
                }
            }
            if (!complete) break;
        }
    }
    return {std::vector<Mat>(seen.begin(), seen.end()), complete};
}

/// BFS until the generated set closes, up to the given caps. Returns nullopt
/// if the image is not verified finite within the caps.
inline std::optional<std::vector<Mat>> enumerate_until_complete(const Realization& r,
                                                                size_t max_size = 5000,
                                                                int max_len = 64) {
    std::vector<Mat> gens;
    for (size_t s = 0; s < r.system.rank(); ++s) gens.push_back(reflection_matrix(r, s));
    std::set<Mat> seen{Mat::identity(r.rank)};
    std::vector<Mat> frontier{Mat::identity(r.rank)};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Mat> next;
        for (const Mat& m : frontier)
            for (const Mat& g : gens) {
                Mat p = g * m;
                if (seen.insert(p).second) next.push_back(p);
                if (seen.size() > max_size) return std::nullopt;
            }
        if (next.empty()) return std::vector<Mat>(seen.begin(), seen.end());
        frontier = std::move(next);
    }
    return std::nullopt;
}

/// Tits representation with exact rational Gram entries. Only m_st in
/// {1, 2, 3, infinity} has a rational -2cos(pi/m_st) (2, 0, -1, -2); any
/// other entry is refused. Realizations of systems with other entries can
/// still be supplied directly as rational root/coroot data.
inline Realization standard_geometric_realization(const CoxeterSystem& sys) {
    sys.check();
    size_t n = sys.rank();
    Realization r;
    r.system = sys;
    r.rank = n;
    r.ring = LatticeRing::Z;
    for (size_t s = 0; s < n; ++s) {
        r.roots.push_back(unit_vec(n, s));
        Vec co(n);
        for (size_t t = 0; t < n; ++t) {
            int m = sys.order(s, t);
            if (s == t)
                co[t] = 2;
            else if (m == 2)
                co[t] = 0;
            else if (m == 3)
                co[t] = -1;
            else if (m == CoxeterSystem::infinite_order)
                co[t] = -2;
            else
                throw UnsupportedCoxeterMatrix(
                    "m = " + std::to_string(m) + " has an irrational cosine; supply the " +
                    "realization as explicit rational root/coroot data instead");
        }
        r.coroots.push_back(co);
    }
    return r;
}

/// Block sum of two realizations. Cross pairs commute (m = 2); generator
/// names colliding with the left side get a prime appended.
inline Realization direct_sum(const Realization& a, const Realization& b) {
    Realization r;
    size_t na = a.system.rank(), nb = b.system.rank();
    r.rank = a.rank + b.rank;
    r.ring = (a.ring == LatticeRing::Q || b.ring == LatticeRing::Q) ? LatticeRing::Q
                                                                    : LatticeRing::Z;
    std::vector<std::string> names = a.system.generators;
    for (const std::string& g : b.system.generators) {
        std::string name = g;
        while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
        names.push_back(name);
    }
    std::vector<std::vector<int>> m(na + nb, std::vector<int>(na + nb, 2));
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j) m[i][j] = a.system.matrix[i][j];
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < nb; ++j) m[na + i][na + j] = b.system.matrix[i][j];
    r.system = make_system(std::move(names), std::move(m));

    auto pad = [&](const Vec& v, bool left) {
        Vec out(r.rank);
        for (size_t i = 0; i < v.size(); ++i) out[left ? i : a.rank + i] = v[i];
        return out;
    };
    for (size_t s = 0; s < na; ++s) {
        r.roots.push_back(pad(a.roots[s], true));
        r.coroots.push_back(pad(a.coroots[s], true));
    }
    for (size_t s = 0; s < nb; ++s) {
        r.roots.push_back(pad(b.roots[s], false));
        r.coroots.push_back(pad(b.coroots[s], false));
    }
    return r;
}

/// Rewrites the realization in the basis whose vectors are the columns of
/// new_basis (expressed in the old coordinates). Over Z the change of basis
/// must be unimodular.
inline Realization change_of_basis(const Realization& r, const Mat& new_basis) {
    if (new_basis.rows != r.rank || new_basis.cols != r.rank)
        throw InvalidInput("change of basis must be rank x rank");
    if (r.ring == LatticeRing::Z && !is_unimodular(new_basis))
        throw InvalidInput("change of basis over Z must be unimodular");
    Mat p_inv = inverse(new_basis);
    Mat p_t = new_basis.transpose();
    Realization out = r;
    for (size_t s = 0; s < r.system.rank(); ++s) {
        out.roots[s] = p_inv.apply(r.roots[s]);
        out.coroots[s] = p_t.apply(r.coroots[s]);
    }
    return out;
}

inline Realization with_ring(Realization r, LatticeRing ring) {
    r.ring = ring;
    return r;
}

}  // namespace orthant
