#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthant/transposition_graph.hpp"

namespace orthant {

/// One basis replacement y -> b y + hbar performed while normalizing.
struct Replacement {
    size_t vertex = 0;
    Rational b;
    Vec shift_h;  // coefficients over H
};

struct ComponentRecord {
    ComponentType::Shape shape = ComponentType::Shape::Line;
    bool affine = false;                 // circle or lone double edge
    std::vector<size_t> vertices;        // traversal order; x'_i = X'[vertices[i]]
    std::vector<size_t> chain;           // generators with s_i(x'_i) = x'_{i+1}
    std::optional<size_t> closing;       // affine only
    Rational q = Rational(1);            // closing rescale; 1 over Z
    Vec hbar_ambient;                    // affine only: closing shift, in span(H)
    Vec hbar_h_coeffs;                   // same shift, coefficients over H (v_C)
    std::vector<Replacement> replacements;

    std::vector<size_t> generators() const {
        std::vector<size_t> gens = chain;
        if (closing) gens.push_back(*closing);
        return gens;
    }
    size_t domain_rank() const { return vertices.size() + (affine ? 1 : 0); }
};

/// Basis rewritten so that each chain edge acts as a plain transposition:
/// s_i(x'_i) = x'_{i+1}, and on affine components s_0(x'_n) = q x'_1 - hbar_C
/// with hbar_C in span(H) (q = 1 over Z). H is never changed, and (X', H)
/// spans the same almost-orthant as (X, H).
struct NormalizedBasis {
    AlmostOrthantBasis basis;
    std::vector<ComponentRecord> components;
};

/// Exact sum of the simple roots attached to the edges of a component.
inline Vec sum_of_roots(const Realization& r, const Component& c) {
    Vec acc(r.rank);
    for (size_t s : c.generators) acc = acc + r.roots[s];
    return acc;
}

inline NormalizedBasis normalize(
    const Realization& r, const AlmostOrthantBasis& basis, const TranspositionGraph& g,
    const std::vector<std::pair<Component, ComponentType>>& classification) {
    for (const auto& [c, type] : classification)
        if (type.shape == ComponentType::Shape::Forbidden)
            throw NotNormalizable("cannot normalize a forbidden component: " + type.label());

    NormalizedBasis out;
    out.basis = basis;
    for (const auto& [c, type] : classification) {
        detail::ComponentWalk walk = detail::component_walk(g, c, type);
        ComponentRecord rec;
        rec.shape = type.shape;
        rec.affine = type.shape != ComponentType::Shape::Line;
        rec.vertices = walk.vertices;
        rec.chain = walk.chain;
        rec.closing = walk.closing;

        // Chain pass: replace x'_{i+1} by s_i(x'_i). Each replacement is of
        // the allowed form y -> b y + hbar, read off in the current basis.
        for (size_t i = 0; i + 1 < rec.vertices.size(); ++i) {
            size_t vnext = rec.vertices[i + 1];
            CoordSystem cs = coord_system(r, out.basis);
            Vec image = reflection_matrix(r, rec.chain[i]).apply(out.basis.X[rec.vertices[i]]);
            Vec coords = cs.coords(image);
            Replacement rep;
            rep.vertex = vnext;
            rep.b = coords[vnext];
            rep.shift_h = Vec(cs.nh);
            for (size_t j = 0; j < cs.nh; ++j) rep.shift_h[j] = coords[cs.nx + j];
            if (!rep.b.is_positive())
                throw TheoremViolation("normalization replacement with non-positive b");
            rec.replacements.push_back(rep);
            out.basis.X[vnext] = image;
        }

        if (rec.affine) {
            // Closing edge: s_0(x'_n) = q x'_1 - hbar_C.
            CoordSystem cs = coord_system(r, out.basis);
            Vec image = reflection_matrix(r, *rec.closing).apply(out.basis.X[rec.vertices.back()]);
            Vec coords = cs.coords(image);
            size_t first = rec.vertices.front();
            for (size_t k = 0; k < cs.nx; ++k) {
                if (k == first) continue;
                if (!coords[k].is_zero())
                    throw TheoremViolation("closing edge image is not q x'_1 + span(H)");
            }
            rec.q = coords[first];
            if (!rec.q.is_positive()) throw TheoremViolation("closing rescale not positive");
            if (r.ring == LatticeRing::Z && rec.q != Rational(1))
                throw TheoremViolation("closing rescale != 1 over Z");
            rec.hbar_ambient = rec.q * out.basis.X[first] - image;
            Vec hc = cs.coords(rec.hbar_ambient);
            for (size_t k = 0; k < cs.nx; ++k)
                if (!hc[k].is_zero()) throw TheoremViolation("closing shift not in span(H)");
            rec.hbar_h_coeffs = Vec(cs.nh);
            for (size_t j = 0; j < cs.nh; ++j) rec.hbar_h_coeffs[j] = hc[cs.nx + j];
        } else {
            rec.hbar_ambient = zero_vec(r.rank);
            rec.hbar_h_coeffs = Vec(basis.H.size());
        }
        out.components.push_back(std::move(rec));
    }
    return out;
}

/// Slot layout of the domain Z (+) sum_C P_C: the Z slots come first (one
/// per element of H), then per component its x slots followed by the h_C
/// slot when the component is affine.
struct DomainLayout {
    size_t nz = 0;
    std::vector<size_t> comp_base;  // first slot of each component
    size_t total = 0;

    size_t z_slot(size_t j) const { return j; }
    size_t x_slot(size_t comp, size_t i) const { return comp_base[comp] + i; }
};

/// The decomposition data built around psi : Z (+) sum_C P_C -> V.
struct PsiDecomposition {
    NormalizedBasis normalized;
    DomainLayout layout;
    Mat psi;
    bool surjective = false;
    std::vector<Vec> kernel;            // computed basis (saturated, canonical)
    std::vector<Vec> predicted_kernel;  // k_C = h_C - v_C, one per affine component
    std::vector<Vec> component_root_sums;
};

/// Builds psi: Z maps isomorphically onto span(H), the x_i of each P_C map
/// to the normalized component basis, and h_C maps to the closing shift
/// hbar_C (over Z this equals the component's root sum, which is exposed for
/// comparison). The computed kernel must match { k_C = h_C - v_C } where v_C
/// is the preimage of hbar_C in Z; a mismatch throws TheoremViolation.
inline PsiDecomposition build_psi(const Realization& r, const NormalizedBasis& nb) {
    PsiDecomposition res;
    res.normalized = nb;
    res.layout.nz = nb.basis.H.size();
    res.layout.total = res.layout.nz;
    for (const auto& rec : nb.components) {
        res.layout.comp_base.push_back(res.layout.total);
        res.layout.total += rec.domain_rank();
    }

    res.psi = Mat(r.rank, res.layout.total);
    auto set_col = [&](size_t slot, const Vec& v) {
        for (size_t i = 0; i < r.rank; ++i) res.psi.at(i, slot) = v[i];
    };
    for (size_t j = 0; j < nb.basis.H.size(); ++j) set_col(res.layout.z_slot(j), nb.basis.H[j]);
    for (size_t ci = 0; ci < nb.components.size(); ++ci) {
        const ComponentRecord& rec = nb.components[ci];
        for (size_t i = 0; i < rec.vertices.size(); ++i)
            set_col(res.layout.x_slot(ci, i), nb.basis.X[rec.vertices[i]]);
        if (rec.affine) set_col(res.layout.x_slot(ci, rec.vertices.size()), rec.hbar_ambient);
    }

    res.surjective = rank(res.psi) == r.rank;
    if (!res.surjective) throw TheoremViolation("psi is not surjective");
    res.kernel = kernel_basis(res.psi);

    for (size_t ci = 0; ci < nb.components.size(); ++ci) {
        const ComponentRecord& rec = nb.components[ci];
        res.component_root_sums.push_back(sum_of_roots(r, Component{rec.vertices, rec.generators()}));
        if (!rec.affine) continue;
        Vec k(res.layout.total);
        k[res.layout.x_slot(ci, rec.vertices.size())] = 1;
        for (size_t j = 0; j < nb.basis.H.size(); ++j)
            k[res.layout.z_slot(j)] = -rec.hbar_h_coeffs[j];
        res.predicted_kernel.push_back(k);
    }

    if (res.kernel.size() != res.predicted_kernel.size())
        throw TheoremViolation("kernel dimension differs from the affine component count");
    for (const Vec& k : res.predicted_kernel)
        if (!res.psi.apply(k).is_zero())
            throw TheoremViolation("predicted kernel vector not in kernel");
    if (!same_span(res.kernel, res.predicted_kernel, res.layout.total))
        throw TheoremViolation("kernel does not match the predicted generators");
    return res;
}

/// Action of a generator on the domain Z (+) sum_C P_C: trivial on Z and on
/// other components; on its own component the (affine, possibly q-deformed)
/// permutation action with s_0(x_n) = q x_1 - h_C.
inline Mat domain_generator_matrix(const PsiDecomposition& res, size_t s) {
    const NormalizedBasis& nb = res.normalized;
    Mat m = Mat::identity(res.layout.total);
    for (size_t ci = 0; ci < nb.components.size(); ++ci) {
        const ComponentRecord& rec = nb.components[ci];
        for (size_t i = 0; i + 1 < rec.vertices.size(); ++i) {
            if (rec.chain[i] != s) continue;
            size_t a = res.layout.x_slot(ci, i), b = res.layout.x_slot(ci, i + 1);
            m.at(a, a) = 0;
            m.at(b, b) = 0;
            m.at(a, b) = 1;
            m.at(b, a) = 1;
            return m;
        }
        if (rec.affine && *rec.closing == s) {
            size_t first = res.layout.x_slot(ci, 0);
            size_t last = res.layout.x_slot(ci, rec.vertices.size() - 1);
            size_t h = res.layout.x_slot(ci, rec.vertices.size());
            // s0(x_n) = q x_1 - h_C and s0(x_1) = q^-1 (x_n + h_C).
            m.at(first, first) = 0;
            m.at(last, last) = 0;
            m.at(first, last) = rec.q;
            m.at(h, last) = -1;
            m.at(last, first) = rec.q.reciprocal();
            m.at(h, first) = rec.q.reciprocal();
            return m;
        }
    }
    return m;  // trivial generator: identity
}

/// Roots and coroots of the domain realization, per generator of a
/// component: chain edges carry x_i - x_{i+1} with coroot eps_i - eps_{i+1};
/// the closing edge carries x_n - q x_1 + h_C with coroot eps_n - q^-1 eps_1.
inline std::optional<std::pair<Vec, Vec>> domain_root_coroot(const PsiDecomposition& res,
                                                             size_t s) {
    const NormalizedBasis& nb = res.normalized;
    for (size_t ci = 0; ci < nb.components.size(); ++ci) {
        const ComponentRecord& rec = nb.components[ci];
        for (size_t i = 0; i + 1 < rec.vertices.size(); ++i) {
            if (rec.chain[i] != s) continue;
            Vec root(res.layout.total), coroot(res.layout.total);
            root[res.layout.x_slot(ci, i)] = 1;
            root[res.layout.x_slot(ci, i + 1)] = -1;
            coroot[res.layout.x_slot(ci, i)] = 1;
            coroot[res.layout.x_slot(ci, i + 1)] = -1;
            return std::make_pair(root, coroot);
        }
        if (rec.affine && *rec.closing == s) {
            Vec root(res.layout.total), coroot(res.layout.total);
            size_t first = res.layout.x_slot(ci, 0);
            size_t last = res.layout.x_slot(ci, rec.vertices.size() - 1);
            size_t h = res.layout.x_slot(ci, rec.vertices.size());
            root[last] = 1;
            root[first] = -rec.q;
            root[h] = 1;
            coroot[last] = 1;
            coroot[first] = -rec.q.reciprocal();
            return std::make_pair(root, coroot);
        }
    }
    return std::nullopt;
}

/// (a) psi maps each domain root to the matching root of V, and (b) the
/// domain coroots agree with the V coroots pulled back through psi (hence
/// kill the kernel and descend to the quotient).
inline bool verify_root_coroot_compat(const Realization& r, const PsiDecomposition& res) {
    for (size_t s = 0; s < r.system.rank(); ++s) {
        auto rc = domain_root_coroot(res, s);
        if (!rc.has_value()) continue;  // trivial generator
        if (res.psi.apply(rc->first) != r.roots[s]) return false;
        for (size_t slot = 0; slot < res.layout.total; ++slot) {
            Vec e(res.layout.total);
            e[slot] = 1;
            if (rc->second[slot] != pair(r.coroots[s], res.psi.apply(e))) return false;
        }
        for (const Vec& k : res.predicted_kernel)
            if (!pair(r.coroots[s], res.psi.apply(k)).is_zero()) return false;
    }
    return true;
}

/// rank(V) = rank(Z) + sum_C rank(P_C) - #affine components.
inline bool rank_identity_holds(const Realization& r, const PsiDecomposition& res) {
    return r.rank == res.layout.total - res.predicted_kernel.size();
}

/// Full pipeline: orthant check, graph, classification, normalization, psi,
/// faithfulness verdict.
struct DecompositionResult {
    TranspositionGraph graph;
    std::vector<std::pair<Component, ComponentType>> classification;
    PsiDecomposition psi;
    FaithfulnessVerdict faithfulness;
};

inline DecompositionResult decompose(const Realization& r, const AlmostOrthantBasis& basis) {
    OrthantCheck chk = preserves_almost_orthant(r, basis);
    if (!chk.preserved) throw InvalidInput("realization does not preserve the almost-orthant");
    DecompositionResult res;
    res.graph = build_graph(r, basis);
    res.classification = classify_components(res.graph, r);
    res.psi = build_psi(r, normalize(r, basis, res.graph, res.classification));
    res.faithfulness = faithfulness_verdict(r, res.graph, res.classification);
    return res;
}

}  // namespace orthant
