#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "orthant/realization.hpp"

namespace orthant {

/// Ordered partition (X, H) of a lattice basis, in ambient coordinates.
/// The almost-orthant it spans is { sum a_i x_i + sum c_j h_j : a_i >= 0 }.
/// An orthant is the case H = {}.
struct AlmostOrthantBasis {
    std::vector<Vec> X;
    std::vector<Vec> H;

    size_t size() const { return X.size() + H.size(); }
};

inline AlmostOrthantBasis standard_orthant(size_t rank) {
    AlmostOrthantBasis b;
    for (size_t i = 0; i < rank; ++i) b.X.push_back(unit_vec(rank, i));
    return b;
}

/// (X, H) coordinates: B has the X vectors then the H vectors as columns.
struct CoordSystem {
    Mat basis;
    Mat basis_inv;
    size_t nx = 0, nh = 0;

    Vec coords(const Vec& ambient) const { return basis_inv.apply(ambient); }
};

/// Validates the basis invariants and builds the coordinate change.
/// Throws InvalidBasis if X u H is not a lattice basis (unimodular over Z,
/// invertible over Q) or some h in H is not W-invariant.
inline CoordSystem coord_system(const Realization& r, const AlmostOrthantBasis& b) {
    if (b.size() != r.rank) throw InvalidBasis("|X| + |H| must equal the rank");
    std::vector<Vec> cols = b.X;
    cols.insert(cols.end(), b.H.begin(), b.H.end());
    for (const Vec& v : cols)
        if (v.size() != r.rank) throw InvalidBasis("basis vector length differs from rank");
    CoordSystem cs;
    cs.nx = b.X.size();
    cs.nh = b.H.size();
    cs.basis = Mat::from_columns(cols);
    if (r.ring == LatticeRing::Z) {
        if (!cs.basis.is_integral() || !is_unimodular(cs.basis))
            throw InvalidBasis("X u H is not a unimodular Z-basis");
    } else if (det(cs.basis).is_zero()) {
        throw InvalidBasis("X u H is not linearly independent");
    }
    cs.basis_inv = inverse(cs.basis);
    for (const Vec& h : b.H)
        if (!is_invariant_vector(r, h)) throw InvalidBasis("H contains a non-invariant vector");
    return cs;
}

struct OrthantViolation {
    size_t generator = 0;
    size_t x_index = 0;      // the x in X that leaves the almost-orthant
    size_t coord_index = 0;  // which X-coordinate of s(x) is negative
    Rational value;
};

struct OrthantCheck {
    bool preserved = false;
    std::optional<OrthantViolation> violation;
};

/// Generator-only decision procedure: W preserves the almost-orthant iff for
/// every generator s and every x in X the X-coordinates of s(x) are
/// nonnegative. (Each s is an involution, so s maps the almost-orthant into
/// itself iff it maps it onto itself, and invariance under the generators
/// gives invariance under all of W. H is fixed pointwise by the basis
/// invariant.) Vacuously true when X is empty.
inline OrthantCheck preserves_almost_orthant(const Realization& r,
                                             const AlmostOrthantBasis& b) {
    CoordSystem cs = coord_system(r, b);
    for (size_t s = 0; s < r.system.rank(); ++s) {
        Mat m = reflection_matrix(r, s);
        for (size_t j = 0; j < b.X.size(); ++j) {
            Vec c = cs.coords(m.apply(b.X[j]));
            for (size_t k = 0; k < cs.nx; ++k) {
                if (c[k].is_negative()) return {false, OrthantViolation{s, j, k, c[k]}};
            }
        }
    }
    return {true, std::nullopt};
}

/// The quadruple (x, y, b, hbar) of a generator acting as a rescaled shifted
/// transposition: s(x) = b y + hbar with b > 0 invertible and hbar in
/// span(H), s fixing every other element of X. Canonical orientation has
/// index(x) < index(y); shift_h holds the coefficients of hbar over H.
struct RescaledShiftedTransposition {
    size_t x = 0, y = 0;
    Rational b;
    Vec shift_h;

    Vec shift_ambient(const AlmostOrthantBasis& basis) const {
        Vec v = basis.H.empty() ? zero_vec(basis.X.empty() ? 0 : basis.X[0].size())
                                : zero_vec(basis.H[0].size());
        for (size_t j = 0; j < basis.H.size(); ++j) v = v + shift_h[j] * basis.H[j];
        return v;
    }

    friend bool operator==(const RescaledShiftedTransposition& a,
                           const RescaledShiftedTransposition& b2) {
        return a.x == b2.x && a.y == b2.y && a.b == b2.b && a.shift_h == b2.shift_h;
    }
};

/// Theorem symmetry (x, y, b, hbar) <-> (y, x, b^-1, -b^-1 hbar); an involution.
inline RescaledShiftedTransposition symmetry_flip(const RescaledShiftedTransposition& t) {
    Rational binv = t.b.reciprocal();
    return {t.y, t.x, binv, (-binv) * t.shift_h};
}

/// Either the generator acts trivially on V, or it is a rescaled shifted
/// transposition. On a validated realization over Q the trivial case cannot
/// occur: alpha_s_vee(alpha_s) = 2 forces s(alpha_s) = -alpha_s != 0.
struct GeneratorAction {
    std::optional<RescaledShiftedTransposition> transposition;

    bool trivial() const { return !transposition.has_value(); }
    friend bool operator==(const GeneratorAction& a, const GeneratorAction& b) {
        return a.transposition == b.transposition;
    }
};

namespace detail {

inline RescaledShiftedTransposition canonical_orientation(RescaledShiftedTransposition t) {
    return t.x < t.y ? t : symmetry_flip(t);
}

}  // namespace detail

/// Constructive extraction following the theorem's proof: find x in X moved
/// by s (scan order is internal), normalize the sign of lambda =
/// alpha_s_vee(x) by the (-X, H) reflection trick, expand s(x) = x - lambda
/// alpha_s in (X, H) coordinates, read off (y, b, hbar), and verify s fixes
/// the rest of X. Structure failures throw TheoremViolation: they cannot
/// happen when preserves_almost_orthant holds.
inline GeneratorAction extract_generator_action(const Realization& r,
                                                const AlmostOrthantBasis& basis, size_t s,
                                                const std::vector<size_t>& scan_order = {}) {
    CoordSystem cs = coord_system(r, basis);
    std::vector<size_t> order = scan_order;
    if (order.empty())
        for (size_t j = 0; j < basis.X.size(); ++j) order.push_back(j);

    // s moves x iff alpha_s_vee(x) != 0 (roots are nonzero once validated).
    std::optional<size_t> moved;
    for (size_t j : order) {
        if (!r.pairing(s, basis.X[j]).is_zero()) {
            moved = j;
            break;
        }
    }
    if (!moved.has_value()) return {};  // trivial on span X, hence on V

    size_t xj = *moved;
    Rational lambda = r.pairing(s, basis.X[xj]);
    // The proof replaces X by -X when lambda < 0 so that lambda > 0. In
    // (X, H) coordinates that flip leaves the X-part of the expansion of
    // s(x) unchanged and negates the H-part twice on the way back to the
    // caller's frame, so the read-off below is literally frame-independent.
    Vec image = basis.X[xj] - lambda * r.roots[s];  // s(x) by the defining formula
    Vec c = cs.coords(image);

    if (!c[xj].is_zero())
        throw TheoremViolation("s(x) has a nonzero x-coefficient; orthant not preserved?");
    std::optional<size_t> yk;
    for (size_t k = 0; k < cs.nx; ++k) {
        if (k == xj || c[k].is_zero()) continue;
        if (yk.has_value())
            throw TheoremViolation("s(x) touches two other basis elements of X");
        yk = k;
    }
    if (!yk.has_value()) throw TheoremViolation("s(x) lies in span(H) yet s moves x");

    RescaledShiftedTransposition t;
    t.x = xj;
    t.y = *yk;
    t.b = c[*yk];
    if (!t.b.is_positive()) throw TheoremViolation("rescale factor b is not positive");
    if (r.ring == LatticeRing::Z && t.b != Rational(1))
        throw TheoremViolation("b != 1 on a Z-lattice");
    t.shift_h = Vec(cs.nh);
    for (size_t j = 0; j < cs.nh; ++j) t.shift_h[j] = c[cs.nx + j];

    // Proof's final step: every other z in X is fixed, and the involution
    // sends y back consistently.
    for (size_t z = 0; z < cs.nx; ++z) {
        if (z == t.x || z == t.y) continue;
        if (!r.pairing(s, basis.X[z]).is_zero())
            throw TheoremViolation("a third basis element moves under s");
    }
    Vec y_image = basis.X[t.y] - r.pairing(s, basis.X[t.y]) * r.roots[s];
    Vec expected = t.b.reciprocal() * (basis.X[t.x] - t.shift_ambient(basis));
    if (y_image != expected) throw TheoremViolation("involution consistency failed");

    return {detail::canonical_orientation(t)};
}

/// Result of the bounded search for an invariant orthant. An empty basis
/// means none exists with primitive integer vectors of coordinates bounded
/// by `bound` (bounded-incomplete: not a proof that none exists at all).
struct OrthantSearchResult {
    std::optional<AlmostOrthantBasis> basis;
    int bound = 0;
};

/// Searches for a basis permuted by W (sound for Z-lattices: preserving an
/// orthant forces W to permute a basis). Enumerates primitive integer
/// vectors with coordinates in [-bound, bound], groups them into W-orbits,
/// and looks for a union of orbits forming a basis (unimodular over Z).
/// Deterministic: orbits are scanned in lexicographic order and the first
/// witness found is returned with its vectors sorted.
inline OrthantSearchResult find_invariant_orthant(const Realization& r, int bound) {
    if (bound < 1) throw InvalidInput("search bound must be >= 1");
    auto group = enumerate_until_complete(r);
    if (!group.has_value())
        throw Unsupported("group image not verified finite; orthant search needs a finite group");

    // All primitive integer candidate vectors, lexicographically ordered.
    std::set<Vec> candidates;
    Vec cur(r.rank);
    auto emit = [&](auto&& self, size_t pos) -> void {
        if (pos == r.rank) {
            Vec sat = cur;
            if (sat.is_zero()) return;
            mpz_class g = 0;
            for (const Rational& x : sat.e) g = gcd(g, x.num());
            if (g != 1) return;
            candidates.insert(sat);
            return;
        }
        for (int v = -bound; v <= bound; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    emit(emit, 0);

    // Orbits keyed by their lexicographically least element.
    std::map<Vec, std::vector<Vec>> orbits;
    std::set<Vec> claimed;
    for (const Vec& v : candidates) {
        if (claimed.count(v)) continue;
        std::set<Vec> orbit;
        for (const Mat& m : *group) orbit.insert(m.apply(v));
        for (const Vec& w : orbit) claimed.insert(w);
        if (orbit.size() > r.rank) continue;  // cannot fit inside a basis
        orbits.emplace(*orbit.begin(), std::vector<Vec>(orbit.begin(), orbit.end()));
    }
    std::vector<std::vector<Vec>> pool;
    for (auto& [key, orb] : orbits) pool.push_back(orb);

    std::vector<Vec> chosen;
    std::optional<AlmostOrthantBasis> found;
    auto dfs = [&](auto&& self, size_t next) -> bool {
        if (chosen.size() == r.rank) {
            std::vector<Vec> sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            Mat b = Mat::from_columns(sorted);
            bool ok = r.ring == LatticeRing::Z ? is_unimodular(b) : !det(b).is_zero();
            if (ok) found = AlmostOrthantBasis{sorted, {}};
            return ok;
        }
        for (size_t i = next; i < pool.size(); ++i) {
            if (chosen.size() + pool[i].size() > r.rank) continue;
            size_t before = chosen.size();
            chosen.insert(chosen.end(), pool[i].begin(), pool[i].end());
            if (self(self, i + 1)) return true;
            chosen.resize(before);
        }
        return false;
    };
    dfs(dfs, 0);
    return {found, bound};
}

}  // namespace orthant
