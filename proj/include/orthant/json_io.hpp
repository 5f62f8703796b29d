#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "orthant/decompose.hpp"
#include "orthant/oracle.hpp"

namespace orthant {

using Json = nlohmann::ordered_json;

// --- writers ---------------------------------------------------------------

inline Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const Rational& x : v.e) a.push_back(x.str());
    return a;
}

inline Json to_json(const Mat& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline Json to_json(const std::vector<Vec>& vs) {
    Json a = Json::array();
    for (const Vec& v : vs) a.push_back(to_json(v));
    return a;
}

inline Json to_json(const Realization& r) {
    Json j;
    j["rank"] = r.rank;
    j["generators"] = r.system.generators;
    j["coxeter_matrix"] = r.system.matrix;
    j["roots"] = to_json(r.roots);
    j["coroots"] = to_json(r.coroots);
    j["lattice_ring"] = ring_str(r.ring);
    return j;
}

inline Json to_json(const AlmostOrthantBasis& b) {
    Json j;
    j["X"] = to_json(b.X);
    j["H"] = to_json(b.H);
    return j;
}

inline Json to_json(const ValidationReport& rep) {
    Json arr = Json::array();
    for (const auto& c : rep.results) {
        Json j;
        j["condition"] = c.condition;
        j["pass"] = c.pass;
        j["detail"] = c.detail;
        arr.push_back(j);
    }
    return arr;
}

inline Json to_json(const OrthantCheck& c, const Realization& r) {
    Json j;
    j["preserved"] = c.preserved;
    if (c.violation) {
        Json v;
        v["generator"] = r.system.generators[c.violation->generator];
        v["x_index"] = c.violation->x_index;
        v["coordinate_index"] = c.violation->coord_index;
        v["value"] = c.violation->value.str();
        j["certificate"] = v;
    } else {
        j["certificate"] = nullptr;
    }
    return j;
}

inline Json to_json(const GeneratorAction& a) {
    Json j;
    j["trivial"] = a.trivial();
    if (!a.trivial()) {
        j["x"] = a.transposition->x;
        j["y"] = a.transposition->y;
        j["b"] = a.transposition->b.str();
        j["shift_h"] = to_json(a.transposition->shift_h);
    }
    return j;
}

inline Json to_json(const FaithfulnessWitness& w, const CoxeterSystem& sys) {
    Json j;
    j["reason"] = reason_str(w.reason);
    j["word"] = word_str(sys, w.word);
    return j;
}

inline Json to_json(const std::vector<std::pair<Component, ComponentType>>& classification,
                    const CoxeterSystem& sys) {
    Json arr = Json::array();
    for (const auto& [c, type] : classification) {
        Json j;
        j["vertices"] = c.vertices;
        Json gens = Json::array();
        for (size_t g : c.generators) gens.push_back(sys.generators[g]);
        j["generators"] = gens;
        j["type"] = type.label();
        j["group"] = type.group();
        if (type.witness) j["witness"] = to_json(*type.witness, sys);
        arr.push_back(j);
    }
    return arr;
}

inline Json to_json(const FaithfulnessVerdict& v, const CoxeterSystem& sys) {
    Json j;
    j["faithful"] = v.faithful;
    if (v.witness) j["witness"] = to_json(*v.witness, sys);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline Json to_json(const WitnessVerification& v) {
    Json j;
    j["identity_on_v"] = v.identity_on_v;
    j["reference"] = v.reference == ReferenceCheck::NontrivialConfirmed ? "nontrivial-confirmed"
                     : v.reference == ReferenceCheck::TrivialInReference ? "trivial-in-reference"
                                                                         : "lemma-asserted";
    j["ok"] = v.ok();
    return j;
}

inline Json to_json(const oracle::OracleReport& rep) {
    Json j;
    j["check"] = rep.check;
    j["agree"] = rep.agree;
    if (!rep.agree) j["counterexample"] = rep.counterexample;
    return j;
}

inline Json to_json(const DecompositionResult& d, const Realization& r) {
    Json j;
    j["components"] = Json::array();
    const auto& nb = d.psi.normalized;
    for (size_t ci = 0; ci < nb.components.size(); ++ci) {
        const ComponentRecord& rec = nb.components[ci];
        Json c;
        c["type"] = d.classification[ci].second.label();
        c["group"] = d.classification[ci].second.group();
        c["vertices"] = rec.vertices;
        Json gens = Json::array();
        for (size_t g : rec.generators()) gens.push_back(r.system.generators[g]);
        c["generators"] = gens;
        c["affine"] = rec.affine;
        if (rec.affine) {
            c["q"] = rec.q.str();
            c["hbar"] = to_json(rec.hbar_ambient);
            c["hbar_over_H"] = to_json(rec.hbar_h_coeffs);
        }
        c["root_sum"] = to_json(d.psi.component_root_sums[ci]);
        Json reps = Json::array();
        for (const Replacement& rep : rec.replacements) {
            Json rj;
            rj["vertex"] = rep.vertex;
            rj["b"] = rep.b.str();
            rj["shift_over_H"] = to_json(rep.shift_h);
            reps.push_back(rj);
        }
        c["replacements"] = reps;
        j["components"].push_back(c);
    }
    j["normalized_X"] = to_json(nb.basis.X);
    j["H"] = to_json(nb.basis.H);
    j["psi"] = to_json(d.psi.psi);
    j["surjective"] = d.psi.surjective;
    j["kernel"] = to_json(d.psi.kernel);
    j["predicted_kernel"] = to_json(d.psi.predicted_kernel);
    Json rk;
    rk["rank_V"] = r.rank;
    rk["rank_Z"] = d.psi.layout.nz;
    rk["domain_rank"] = d.psi.layout.total;
    rk["affine_components"] = d.psi.predicted_kernel.size();
    rk["holds"] = rank_identity_holds(r, d.psi);
    j["rank_identity"] = rk;
    j["root_to_root"] = verify_root_coroot_compat(r, d.psi);
    j["faithfulness"] = to_json(d.faithfulness, r.system);
    return j;
}

// --- readers ---------------------------------------------------------------

namespace detail {

inline const Json& field(const Json& j, const std::string& name) {
    if (!j.contains(name)) throw InvalidInput("missing field '" + name + "'");
    return j.at(name);
}

}  // namespace detail

inline Vec vec_from_json(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidInput(what + " must be an array of rational strings");
    Vec v(j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        const Json& x = j.at(i);
        if (x.is_number_integer())
            v[i] = Rational(static_cast<long>(x.get<long>()));
        else if (x.is_string())
            v[i] = Rational::parse(x.get<std::string>());
        else
            throw InvalidInput(what + "[" + std::to_string(i) + "] must be a rational string");
    }
    return v;
}

inline std::vector<Vec> vecs_from_json(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidInput(what + " must be an array");
    std::vector<Vec> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(vec_from_json(j.at(i), what + "[" + std::to_string(i) + "]"));
    return out;
}

/// Realization schema: rank, coxeter_matrix (0 encodes infinity), roots,
/// coroots (arrays of rational strings), lattice_ring "Z" | "Q", and
/// optional generator names.
inline Realization realization_from_json(const Json& j) {
    Realization r;
    if (!detail::field(j, "rank").is_number_unsigned()) throw InvalidInput("'rank' must be >= 1");
    r.rank = detail::field(j, "rank").get<size_t>();
    const Json& cm = detail::field(j, "coxeter_matrix");
    if (!cm.is_array() || cm.empty()) throw InvalidInput("'coxeter_matrix' must be a square array");
    for (const auto& row : cm) {
        if (!row.is_array() || row.size() != cm.size())
            throw InvalidInput("'coxeter_matrix' must be a square array");
        r.system.matrix.push_back(row.get<std::vector<int>>());
    }
    if (j.contains("generators")) {
        r.system.generators = j.at("generators").get<std::vector<std::string>>();
        if (r.system.generators.size() != cm.size())
            throw InvalidInput("'generators' length differs from the coxeter matrix");
    } else {
        for (size_t s = 0; s < cm.size(); ++s)
            r.system.generators.push_back("s" + std::to_string(s + 1));
    }
    r.roots = vecs_from_json(detail::field(j, "roots"), "roots");
    r.coroots = vecs_from_json(detail::field(j, "coroots"), "coroots");
    std::string ring = detail::field(j, "lattice_ring").get<std::string>();
    if (ring == "Z")
        r.ring = LatticeRing::Z;
    else if (ring == "Q")
        r.ring = LatticeRing::Q;
    else
        throw InvalidInput("'lattice_ring' must be \"Z\" or \"Q\"");
    r.system.check();
    return r;
}

inline AlmostOrthantBasis basis_from_json(const Json& j) {
    AlmostOrthantBasis b;
    b.X = vecs_from_json(detail::field(j, "X"), "X");
    if (j.contains("H")) b.H = vecs_from_json(j.at("H"), "H");
    return b;
}

}  // namespace orthant
