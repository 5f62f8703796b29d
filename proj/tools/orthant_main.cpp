// Command-line front end: load realizations and bases from JSON or the
// fixture catalog, run validation / orthant checks / classification /
// decomposition / the orthant search / ring demos, and emit human-readable
// or structured JSON reports.
//
// Exit codes: 0 success or true verdict, 1 false verdict, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orthant/all.hpp"

namespace {

using namespace orthant;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;

struct InputOptions {
    std::string catalog_name;
    std::string realization_path;
    std::string basis_path;
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool basis_relevant = true) {
    cmd->add_option("--catalog", in.catalog_name, "named example from the fixture catalog");
    cmd->add_option("--input", in.realization_path, "realization JSON file");
    if (basis_relevant)
        cmd->add_option("--basis", in.basis_path,
                        "basis JSON file {\"X\": [...], \"H\": [...]}; defaults to the "
                        "standard orthant (or the catalog example's basis)");
}

Json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open " + path);
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput("JSON parse error in " + path + ": " + e.what());
    }
}

std::pair<Realization, AlmostOrthantBasis> load_input(const InputOptions& in) {
    if (!in.catalog_name.empty() && !in.realization_path.empty())
        throw InvalidInput("give either --catalog or --input, not both");
    Realization r;
    AlmostOrthantBasis b;
    if (!in.catalog_name.empty()) {
        NamedExample ex = catalog(in.catalog_name);
        r = ex.realization;
        b = ex.basis;
    } else if (!in.realization_path.empty()) {
        r = realization_from_json(load_json_file(in.realization_path));
        b = standard_orthant(r.rank);
    } else {
        throw InvalidInput("one of --catalog or --input is required");
    }
    if (!in.basis_path.empty()) b = basis_from_json(load_json_file(in.basis_path));
    return {r, b};
}

void emit(const Json& j, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

int run_validate(const InputOptions& in, bool as_json) {
    auto [r, b] = load_input(in);
    ValidationReport rep = validate(r);
    Json j;
    j["command"] = "validate";
    j["ok"] = rep.ok();
    j["report"] = to_json(rep);
    std::ostringstream os;
    for (const auto& c : rep.results)
        os << (c.pass ? "  pass  " : "  FAIL  ") << c.condition << "  " << c.detail << "\n";
    os << (rep.ok() ? "realization is valid\n" : "realization is NOT valid\n");
    emit(j, as_json, os.str());
    return rep.ok() ? kExitTrue : kExitFalse;
}

int run_check_orthant(const InputOptions& in, bool as_json, bool with_oracle) {
    auto [r, b] = load_input(in);
    require_valid(r);
    OrthantCheck chk = preserves_almost_orthant(r, b);
    Json j;
    j["command"] = "check-orthant";
    Json body = to_json(chk, r);
    j["preserved"] = body["preserved"];
    j["certificate"] = body["certificate"];
    std::ostringstream os;
    if (chk.preserved) {
        os << "W preserves the almost-orthant\n";
    } else {
        os << "W does not preserve the almost-orthant: generator "
           << r.system.generators[chk.violation->generator] << " sends X["
           << chk.violation->x_index << "] to coordinate " << chk.violation->coord_index << " = "
           << chk.violation->value.str() << "\n";
    }
    if (with_oracle) {
        oracle::OracleReport rep = oracle::compare_orthant_check(r, b);
        j["oracle"] = to_json(rep);
        os << "oracle (" << rep.check << "): " << (rep.agree ? "agree" : "DISAGREE") << "\n";
        if (!rep.agree) {
            emit(j, as_json, os.str());
            return kExitInputError;
        }
    }
    emit(j, as_json, os.str());
    return chk.preserved ? kExitTrue : kExitFalse;
}

int run_extract(const InputOptions& in, bool as_json, bool with_oracle) {
    auto [r, b] = load_input(in);
    require_valid(r);
    OrthantCheck chk = preserves_almost_orthant(r, b);
    if (!chk.preserved)
        throw InvalidInput("almost-orthant not preserved; nothing to extract");
    Json j;
    j["command"] = "extract";
    j["actions"] = Json::array();
    std::ostringstream os;
    for (size_t s = 0; s < r.system.rank(); ++s) {
        GeneratorAction a = extract_generator_action(r, b, s);
        Json ja = to_json(a);
        ja["generator"] = r.system.generators[s];
        j["actions"].push_back(ja);
        os << r.system.generators[s] << ": ";
        if (a.trivial()) {
            os << "acts trivially\n";
        } else {
            const auto& t = *a.transposition;
            os << "x = X[" << t.x << "], y = X[" << t.y << "], b = " << t.b.str()
               << ", shift over H = " << t.shift_h.str() << "\n";
        }
    }
    if (with_oracle) {
        oracle::OracleReport rep = oracle::compare_quadruples(r, b);
        j["oracle"] = to_json(rep);
        os << "oracle (" << rep.check << "): " << (rep.agree ? "agree" : "DISAGREE") << "\n";
        if (!rep.agree) {
            emit(j, as_json, os.str());
            return kExitInputError;
        }
    }
    emit(j, as_json, os.str());
    return kExitTrue;
}

int run_classify(const InputOptions& in, bool as_json, bool dot, int cutoff) {
    auto [r, b] = load_input(in);
    require_valid(r);
    OrthantCheck chk = preserves_almost_orthant(r, b);
    if (!chk.preserved)
        throw InvalidInput("almost-orthant not preserved; the transposition graph needs it");
    TranspositionGraph g = build_graph(r, b);
    auto classification = classify_components(g, r);
    FaithfulnessVerdict verdict = faithfulness_verdict(r, g, classification);
    Json j;
    j["command"] = "classify";
    j["components"] = to_json(classification, r.system);
    j["pair_orders"] = Json::array();
    std::ostringstream orders;
    for (size_t s = 0; s < r.system.rank(); ++s) {
        for (size_t t = s + 1; t < r.system.rank(); ++t) {
            OrderReport rep = predict_order(r, g, s, t, cutoff);
            Json jo;
            jo["pair"] = r.system.generators[s] + " " + r.system.generators[t];
            jo["predicted"] = predicted_str(rep.predicted);
            if (rep.measured)
                jo["measured"] = *rep.measured;
            else
                jo["measured"] = "infinite-or-large";
            if (rep.exact_infinite) jo["exact_infinite"] = *rep.exact_infinite;
            jo["consistent"] = rep.consistent;
            j["pair_orders"].push_back(jo);
            orders << "  (" << r.system.generators[s] << "," << r.system.generators[t]
                   << "): predicted " << predicted_str(rep.predicted) << ", measured "
                   << (rep.measured ? std::to_string(*rep.measured) : "infinite-or-large")
                   << (rep.consistent ? "" : " INCONSISTENT") << "\n";
        }
    }
    j["faithfulness"] = to_json(verdict, r.system);
    if (dot) j["dot"] = to_dot(g, r.system);
    std::ostringstream os;
    for (const auto& [c, type] : classification) {
        os << type.label() << "  group " << type.group() << "  vertices {";
        for (size_t i = 0; i < c.vertices.size(); ++i) os << (i ? "," : "") << c.vertices[i];
        os << "}\n";
        if (type.witness)
            os << "  witness (" << reason_str(type.witness->reason) << "): "
               << word_str(r.system, type.witness->word) << "\n";
    }
    os << "pair orders:\n" << orders.str();
    os << (verdict.faithful ? "action is faithful\n"
                            : "action is NOT faithful: " + verdict.note + "\n");
    if (verdict.witness && !verdict.faithful)
        os << "  witness word: " << word_str(r.system, verdict.witness->word) << "\n";
    if (dot) os << to_dot(g, r.system);
    emit(j, as_json, os.str());
    return kExitTrue;
}

int run_decompose(const InputOptions& in, bool as_json, bool with_oracle) {
    auto [r, b] = load_input(in);
    require_valid(r);
    DecompositionResult d = decompose(r, b);
    Json j;
    j["command"] = "decompose";
    Json body = to_json(d, r);
    for (auto& [k, v] : body.items()) j[k] = v;
    std::ostringstream os;
    os << "components:";
    for (const auto& [c, type] : d.classification) os << " " << type.label();
    os << "\ndomain rank " << d.psi.layout.total << " = Z rank " << d.psi.layout.nz
       << " + components; kernel rank " << d.psi.kernel.size() << "\n";
    for (const Vec& k : d.psi.predicted_kernel) os << "  kernel generator " << k.str() << "\n";
    os << "psi surjective: " << (d.psi.surjective ? "yes" : "no")
       << ", root-to-root and coroot checks: "
       << (verify_root_coroot_compat(r, d.psi) ? "pass" : "fail") << "\n";
    os << (d.faithfulness.faithful ? "action is faithful\n" : "action is NOT faithful\n");
    if (with_oracle) {
        oracle::OracleReport rep = oracle::compare_kernel(d.psi.psi);
        j["oracle"] = to_json(rep);
        os << "oracle (" << rep.check << "): " << (rep.agree ? "agree" : "DISAGREE") << "\n";
        if (!rep.agree) {
            emit(j, as_json, os.str());
            return kExitInputError;
        }
    }
    emit(j, as_json, os.str());
    return kExitTrue;
}

int run_search(const InputOptions& in, bool as_json, int bound) {
    auto [r, b] = load_input(in);
    require_valid(r);
    OrthantSearchResult res = find_invariant_orthant(r, bound);
    Json j;
    j["command"] = "search-orthant";
    j["bound"] = res.bound;
    j["found"] = res.basis.has_value();
    j["basis"] = res.basis ? to_json(*res.basis) : Json(nullptr);
    if (!res.basis) j["note"] = "bounded-incomplete: no witness with coordinates up to the bound";
    std::ostringstream os;
    if (res.basis) {
        os << "invariant orthant found, basis:\n";
        for (const Vec& v : res.basis->X) os << "  " << v.str() << "\n";
    } else {
        os << "none up to bound " << bound << " (bounded-incomplete)\n";
    }
    emit(j, as_json, os.str());
    return res.basis ? kExitTrue : kExitFalse;
}

int run_rings_demo(const std::string& catalog_name, const std::string& expr,
                   const std::string& word_text, int sln_n, int sln_box, bool as_json) {
    Json j;
    j["command"] = "rings-demo";
    std::ostringstream os;

    NamedExample ex = catalog(catalog_name.empty() ? "affine_perm(3)" : catalog_name);
    const Realization& r = ex.realization;
    bool affine = !ex.basis.H.empty();
    size_t n = ex.basis.X.size();
    if (affine && ex.basis.H.size() != 1)
        throw InvalidInput("rings-demo supports perm(n) and affine_perm(n) fixtures");
    j["fixture"] = ex.name;

    Poly f = parse_poly(expr.empty() ? "x1 - x2" : expr, n, affine);
    GroupAlgebraElem ef = epsilon(f);
    j["expr"] = print_poly(f);
    j["epsilon"] = print_laurent(ef, n, affine);
    os << "epsilon(" << print_poly(f) << ") = " << print_laurent(ef, n, affine) << "\n";

    Word w;
    if (!word_text.empty()) {
        std::istringstream ws(word_text);
        std::string name;
        while (ws >> name) w.push_back(static_cast<int>(r.system.generator_index(name)));
    }
    if (!w.empty()) {
        GroupAlgebraElem wf = w_action_K(r, w, ef);
        j["word"] = word_str(r.system, w);
        j["word_action"] = print_laurent(wf, n, affine);
        os << word_str(r.system, w) << " . epsilon = " << print_laurent(wf, n, affine) << "\n";
    }

    Localization loc = localize_membership(ef, n);
    Json lj;
    lj["N"] = loc.N;
    lj["p_N_times_f"] = print_laurent(loc.shifted, n, affine);
    j["localization"] = lj;
    os << "minimal N with p^N f polynomial: " << loc.N << ", p^N f = "
       << print_laurent(loc.shifted, n, affine) << "\n";

    // s0(y_n) = q y1 in the affine fixture; p is invariant up to q.
    if (affine) {
        size_t s0 = r.system.generator_index("s0");
        GroupAlgebraElem yn =
            GroupAlgebraElem::monomial([&] {
                detail::ExpVec e(n + 1, 0);
                e[n - 1] = 1;
                return e;
            }(), 1);
        GroupAlgebraElem s0yn = w_action_K(r, {static_cast<int>(s0)}, yn);
        j["s0_on_yn"] = print_laurent(s0yn, n, affine);
        GroupAlgebraElem s0p = w_action_K(r, {static_cast<int>(s0)}, p_element(n, affine));
        j["s0_on_p"] = print_laurent(s0p, n, affine);
        os << "s0(y" << n << ") = " << print_laurent(s0yn, n, affine) << "\n";
        os << "s0(p) = " << print_laurent(s0p, n, affine) << "\n";
    }

    if (sln_n > 0) {
        bool full = sln_orbit_span_full(sln_n, sln_box);
        Json sj;
        sj["n"] = sln_n;
        sj["box"] = sln_box;
        sj["spans_box"] = full;
        j["sln_orbit_span"] = sj;
        os << "SL_" << sln_n << " orbit of varpi spans box " << sln_box << ": "
           << (full ? "yes" : "no") << "\n";
    }
    emit(j, as_json, os.str());
    return kExitTrue;
}

int run_catalog(const std::string& name, bool as_json) {
    if (name.empty()) {
        Json j;
        j["command"] = "catalog";
        j["names"] = catalog_names();
        std::ostringstream os;
        for (const std::string& n : catalog_names()) os << n << "\n";
        emit(j, as_json, os.str());
        return kExitTrue;
    }
    NamedExample ex = catalog(name);
    Json j;
    j["command"] = "catalog";
    j["name"] = ex.name;
    j["realization"] = to_json(ex.realization);
    j["basis"] = to_json(ex.basis);
    Json exp;
    exp["preserves_almost_orthant"] = ex.expected.preserves;
    exp["components"] = ex.expected.components;
    exp["group"] = ex.expected.group;
    if (ex.expected.faithful) exp["faithful"] = *ex.expected.faithful;
    j["expected"] = exp;
    std::ostringstream os;
    os << ex.name << ": rank " << ex.realization.rank << ", ring "
       << ring_str(ex.realization.ring) << ", |X| = " << ex.basis.X.size()
       << ", |H| = " << ex.basis.H.size() << "\n";
    emit(j, as_json, os.str());
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for reflection actions preserving almost-orthants"};
    app.require_subcommand(1);
    bool as_json = false;
    bool with_oracle = false;
    auto common_flags = [&](CLI::App* cmd, bool oracle_relevant = false) {
        cmd->add_flag("--json", as_json, "emit a structured JSON report on stdout");
        if (oracle_relevant)
            cmd->add_flag("--oracle", with_oracle, "also run the brute-force oracle and compare");
    };

    InputOptions in;
    auto* validate_cmd = app.add_subcommand("validate", "check the realization conditions");
    add_input_options(validate_cmd, in, false);
    common_flags(validate_cmd);

    auto* check_cmd = app.add_subcommand("check-orthant",
                                         "decide whether W preserves the almost-orthant");
    add_input_options(check_cmd, in);
    common_flags(check_cmd, true);

    auto* extract_cmd =
        app.add_subcommand("extract", "extract the rescaled shifted transposition per generator");
    add_input_options(extract_cmd, in);
    common_flags(extract_cmd, true);

    bool dot = false;
    int cutoff = 12;
    auto* classify_cmd =
        app.add_subcommand("classify", "transposition graph components and faithfulness");
    add_input_options(classify_cmd, in);
    common_flags(classify_cmd);
    classify_cmd->add_flag("--dot", dot, "include DOT output of the transposition graph");
    classify_cmd->add_option("--cutoff", cutoff, "power cutoff when measuring pair orders")
        ->default_val(12);

    auto* decompose_cmd =
        app.add_subcommand("decompose", "normalize the basis and build psi with its kernel");
    add_input_options(decompose_cmd, in);
    common_flags(decompose_cmd, true);

    int bound = 2;
    auto* search_cmd =
        app.add_subcommand("search-orthant", "bounded search for an invariant orthant");
    add_input_options(search_cmd, in);
    common_flags(search_cmd);
    search_cmd->add_option("--bound", bound, "coordinate bound for candidate vectors")
        ->default_val(2);

    std::string expr, word_text, rings_catalog;
    int sln_n = 0, sln_box = 2;
    auto* rings_cmd = app.add_subcommand("rings-demo",
                                         "epsilon map, W-action, localization, SL_n orbit span");
    common_flags(rings_cmd);
    rings_cmd->add_option("--catalog", rings_catalog,
                          "perm(n) or affine_perm(n) fixture (default affine_perm(3))");
    rings_cmd->add_option("--expr", expr, "polynomial in x1..xn (and h), default \"x1 - x2\"");
    rings_cmd->add_option("--word", word_text, "space-separated generators to act with");
    rings_cmd->add_option("--sln", sln_n, "run the SL_n orbit-span check (n = 2 or 3)");
    rings_cmd->add_option("--box", sln_box, "box radius for the orbit-span check")->default_val(2);

    std::string catalog_name;
    auto* catalog_cmd = app.add_subcommand("catalog", "list fixtures or show one");
    common_flags(catalog_cmd);
    catalog_cmd->add_option("--name", catalog_name, "fixture to show");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return run_validate(in, as_json);
        if (check_cmd->parsed()) return run_check_orthant(in, as_json, with_oracle);
        if (extract_cmd->parsed()) return run_extract(in, as_json, with_oracle);
        if (classify_cmd->parsed()) return run_classify(in, as_json, dot, cutoff);
        if (decompose_cmd->parsed()) return run_decompose(in, as_json, with_oracle);
        if (search_cmd->parsed()) return run_search(in, as_json, bound);
        if (rings_cmd->parsed())
            return run_rings_demo(rings_catalog, expr, word_text, sln_n, sln_box, as_json);
        if (catalog_cmd->parsed()) return run_catalog(catalog_name, as_json);
    } catch (const InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InvalidBasis& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NotFound& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const UnsupportedCoxeterMatrix& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Unsupported& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
