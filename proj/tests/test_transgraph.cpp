#include <catch2/catch_amalgamated.hpp>

#include "fixture_helpers.hpp"
#include "orthant/transposition_graph.hpp"

using namespace orthant;

namespace {

struct Loaded {
    Realization r;
    AlmostOrthantBasis b;
    TranspositionGraph g;
    std::vector<std::pair<Component, ComponentType>> cls;
};

Loaded load(const std::string& name) {
    NamedExample ex = catalog(name);
    Loaded l{ex.realization, ex.basis, {}, {}};
    l.g = build_graph(l.r, l.b);
    l.cls = classify_components(l.g, l.r);
    return l;
}

std::vector<std::string> labels(const Loaded& l) {
    std::vector<std::string> out;
    for (const auto& [c, t] : l.cls) out.push_back(t.label());
    return out;
}

}  // namespace

TEST_CASE("graph shapes of the classical examples") {
    SECTION("perm(4) is a path on 4 vertices with 3 edges") {
        Loaded l = load("perm(4)");
        CHECK(l.g.n_vertices == 4);
        CHECK(l.g.edges.size() == 3);
        CHECK(labels(l) == std::vector<std::string>{"Line(4)"});
        CHECK(l.cls[0].second.group() == "S4");
    }
    SECTION("affine_perm(3) is a 3-cycle") {
        Loaded l = load("affine_perm(3)");
        CHECK(l.g.n_vertices == 3);
        CHECK(l.g.edges.size() == 3);
        CHECK(labels(l) == std::vector<std::string>{"Circle(3)"});
        CHECK(l.cls[0].second.group() == "A~2");
    }
    SECTION("affine_perm(2) is a lone double edge") {
        Loaded l = load("affine_perm(2)");
        CHECK(l.g.n_vertices == 2);
        CHECK(l.g.edges.size() == 2);
        CHECK(labels(l) == std::vector<std::string>{"LoneDoubleEdge"});
        CHECK(l.cls[0].second.group() == "A~1");
    }
    SECTION("block realization affine_perm(4) + perm(2) gives Circle(4), Line(2)") {
        Realization sum = direct_sum(fixtures::affine_perm(4), fixtures::perm(2));
        AlmostOrthantBasis b;
        // X: the four affine x's and the two permutation coordinates; H: hbar.
        for (size_t i = 0; i < 4; ++i) b.X.push_back(unit_vec(7, i));
        b.X.push_back(unit_vec(7, 5));
        b.X.push_back(unit_vec(7, 6));
        b.H.push_back(unit_vec(7, 4));
        REQUIRE(preserves_almost_orthant(sum, b).preserved);
        TranspositionGraph g = build_graph(sum, b);
        auto cls = classify_components(g, sum);
        REQUIRE(cls.size() == 2);
        CHECK(cls[0].second.label() == "Circle(4)");
        CHECK(cls[1].second.label() == "Line(2)");
    }
    SECTION("classification golden: perm(n) lines, affine circles") {
        for (int n = 2; n <= 6; ++n)
            CHECK(labels(load("perm(" + std::to_string(n) + ")")) ==
                  std::vector<std::string>{"Line(" + std::to_string(n) + ")"});
        for (int n = 3; n <= 5; ++n)
            CHECK(labels(load("affine_perm(" + std::to_string(n) + ")")) ==
                  std::vector<std::string>{"Circle(" + std::to_string(n) + ")"});
    }
}

TEST_CASE("order prediction from edge overlaps") {
    SECTION("perm(4): disjoint edges commute, adjacent edges give order 3") {
        Loaded l = load("perm(4)");
        OrderReport disjoint = predict_order(l.r, l.g, 0, 2);
        CHECK(disjoint.predicted == PredictedOrder::CommuteOrder1Or2);
        CHECK(disjoint.measured == 2);
        CHECK(disjoint.consistent);
        OrderReport adjacent = predict_order(l.r, l.g, 0, 1);
        CHECK(adjacent.predicted == PredictedOrder::Order3);
        CHECK(adjacent.measured == 3);
        CHECK(adjacent.consistent);
    }
    SECTION("affine_perm(2): double edge exceeds the cutoff, translation criterion fires") {
        Loaded l = load("affine_perm(2)");
        OrderReport rep = predict_order(l.r, l.g, 0, 1);
        CHECK(rep.predicted == PredictedOrder::TrivialOrInfinite);
        CHECK(!rep.measured.has_value());  // beyond cutoff 12
        REQUIRE(rep.exact_infinite.has_value());
        CHECK(*rep.exact_infinite);  // shifts differ: genuine translation
        CHECK(rep.consistent);
    }
    SECTION("q_scaled_A1(2): the b_s != b_t criterion fires") {
        Loaded l = load("q_scaled_A1(2)");
        OrderReport rep = predict_order(l.r, l.g, 0, 1);
        REQUIRE(rep.exact_infinite.has_value());
        CHECK(*rep.exact_infinite);
        CHECK(rep.consistent);
    }
    SECTION("q_scaled_A1(1): st acts trivially, exact criterion says so") {
        Loaded l = load("q_scaled_A1(1)");
        OrderReport rep = predict_order(l.r, l.g, 0, 1);
        REQUIRE(rep.exact_infinite.has_value());
        CHECK(!*rep.exact_infinite);
        CHECK(rep.measured == 1);
        CHECK(rep.consistent);
    }
    SECTION("prediction is consistent on every pair of every preserving fixture") {
        for (const std::string& name : testing::preserving_fixtures()) {
            Loaded l = load(name);
            for (size_t s = 0; s < l.r.system.rank(); ++s)
                for (size_t t = s + 1; t < l.r.system.rank(); ++t) {
                    INFO(name << " pair (" << l.r.system.generators[s] << ","
                              << l.r.system.generators[t] << ")");
                    CHECK(predict_order(l.r, l.g, s, t).consistent);
                }
        }
    }
    SECTION("generators in different components commute") {
        Loaded l = load("twin_A1_identified_hbar");
        for (size_t s : {0u, 1u})
            for (size_t t : {2u, 3u}) {
                Mat st = word_matrix(l.r, {static_cast<int>(s), static_cast<int>(t)});
                Mat ts = word_matrix(l.r, {static_cast<int>(t), static_cast<int>(s)});
                CHECK(st == ts);
            }
    }
}

TEST_CASE("forbidden configurations produce verified witnesses") {
    SECTION("valence-3 star: (stsu)^2") {
        Loaded l = load("nonfaithful_affine_A2_to_S4");
        REQUIRE(l.cls.size() == 1);
        CHECK(l.cls[0].second.label() == "Forbidden(Valence3Star)");
        const FaithfulnessWitness& w = *l.cls[0].second.witness;
        CHECK(word_str(l.r.system, w.word) == "s t s u s t s u");
        WitnessVerification v = verify_witness(l.r, w);
        CHECK(v.identity_on_v);
        CHECK(v.reference == ReferenceCheck::NontrivialConfirmed);
        CHECK(v.ok());
    }
    SECTION("triple edge: sust (stsu)^-1") {
        Loaded l = load("triple_edge");
        REQUIRE(l.cls.size() == 1);
        CHECK(l.cls[0].second.label() == "Forbidden(TripleEdge)");
        const FaithfulnessWitness& w = *l.cls[0].second.witness;
        CHECK(word_str(l.r.system, w.word) == "s u s t u s t s");
        WitnessVerification v = verify_witness(l.r, w);
        CHECK(v.identity_on_v);
        CHECK(v.reference == ReferenceCheck::NontrivialConfirmed);
    }
    SECTION("double edge plus edge: commutator of st and ustu") {
        Loaded l = load("double_edge_plus_edge");
        REQUIRE(l.cls.size() == 1);
        CHECK(l.cls[0].second.label() == "Forbidden(DoubleEdgePlusEdge)");
        const FaithfulnessWitness& w = *l.cls[0].second.witness;
        CHECK(word_str(l.r.system, w.word) == "s t u s t u t s u t s u");
        WitnessVerification v = verify_witness(l.r, w);
        CHECK(v.identity_on_v);
        CHECK(v.reference == ReferenceCheck::NontrivialConfirmed);
    }
    SECTION("every forbidden verdict ships a witness that verifies") {
        for (const std::string& name : testing::preserving_fixtures()) {
            Loaded l = load(name);
            for (const auto& [c, type] : l.cls) {
                if (type.shape != ComponentType::Shape::Forbidden) continue;
                INFO(name);
                CHECK(verify_witness(l.r, *type.witness).ok());
            }
        }
    }
}

TEST_CASE("faithfulness verdicts") {
    SECTION("clean fixtures are faithful") {
        for (const std::string& name :
             {"perm(5)", "affine_perm(3)", "twin_A1_identified_hbar", "q_scaled_A1(2)"}) {
            Loaded l = load(name);
            CHECK(faithfulness_verdict(l.r, l.g, l.cls).faithful);
        }
    }
    SECTION("I2(6) through S3: order conflict witness (st)^3, lemma-asserted") {
        Loaded l = load("dihedral6_on_perm3");
        FaithfulnessVerdict v = faithfulness_verdict(l.r, l.g, l.cls);
        REQUIRE(!v.faithful);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->reason == WitnessReason::TranslationOrderConflict);
        CHECK(word_str(l.r.system, v.witness->word) == "s t s t s t");
        WitnessVerification wv = verify_witness(l.r, *v.witness);
        CHECK(wv.identity_on_v);
        CHECK(wv.reference == ReferenceCheck::LemmaAsserted);  // m = 6 has no exact Tits form
        CHECK(wv.ok());
    }
    SECTION("q_scaled_A1(1): s and t agree on V, witness st") {
        Loaded l = load("q_scaled_A1(1)");
        FaithfulnessVerdict v = faithfulness_verdict(l.r, l.g, l.cls);
        REQUIRE(!v.faithful);
        CHECK(word_str(l.r.system, v.witness->word) == "s t");
        CHECK(verify_witness(l.r, *v.witness).ok());
    }
    SECTION("circle with zero closing shift collapses to S_n") {
        // A~2 acting on Z^3 as (12), (23), (13): a triangle whose closing
        // shift is zero, so the translation word acts trivially.
        Realization r;
        r.system = make_system({"s1", "s2", "s0"}, {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
        r.rank = 3;
        r.ring = LatticeRing::Z;
        r.roots.push_back(Vec{1, -1, 0});
        r.coroots.push_back(Vec{1, -1, 0});
        r.roots.push_back(Vec{0, 1, -1});
        r.coroots.push_back(Vec{0, 1, -1});
        r.roots.push_back(Vec{-1, 0, 1});
        r.coroots.push_back(Vec{-1, 0, 1});
        REQUIRE(validate(r).ok());
        AlmostOrthantBasis b = standard_orthant(3);
        REQUIRE(preserves_almost_orthant(r, b).preserved);
        TranspositionGraph g = build_graph(r, b);
        auto cls = classify_components(g, r);
        REQUIRE(cls.size() == 1);
        CHECK(cls[0].second.label() == "Circle(3)");
        FaithfulnessVerdict v = faithfulness_verdict(r, g, cls);
        REQUIRE(!v.faithful);
        CHECK(v.witness->reason == WitnessReason::TranslationOrderConflict);
        WitnessVerification wv = verify_witness(r, *v.witness);
        CHECK(wv.identity_on_v);
        CHECK(wv.reference == ReferenceCheck::NontrivialConfirmed);
    }
}

TEST_CASE("every catalog entry reproduces its expected outcome") {
    for (const std::string& name : catalog_names()) {
        NamedExample ex = catalog(name);
        INFO(name);
        OrthantCheck chk = preserves_almost_orthant(ex.realization, ex.basis);
        CHECK(chk.preserved == ex.expected.preserves);
        if (!chk.preserved) continue;
        TranspositionGraph g = build_graph(ex.realization, ex.basis);
        auto cls = classify_components(g, ex.realization);
        std::vector<std::string> got;
        std::string group;
        bool forbidden = false;
        for (const auto& [c, type] : cls) {
            got.push_back(type.label());
            forbidden = forbidden || type.shape == ComponentType::Shape::Forbidden;
            group += (group.empty() ? "" : " x ") + type.group();
        }
        CHECK(got == ex.expected.components);
        CHECK((forbidden ? "-" : group) == ex.expected.group);
        if (ex.expected.faithful)
            CHECK(faithfulness_verdict(ex.realization, g, cls).faithful == *ex.expected.faithful);
    }
}

TEST_CASE("DOT export names vertices and labels edges by generator") {
    Loaded l = load("affine_perm(2)");
    std::string dot = to_dot(l.g, l.r.system);
    CHECK(dot.find("graph transposition {") != std::string::npos);
    CHECK(dot.find("x1 -- x2 [label=\"s1\"]") != std::string::npos);
    CHECK(dot.find("x1 -- x2 [label=\"s0\"]") != std::string::npos);
}
