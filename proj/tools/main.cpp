#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sethom/cases.hpp"
#include "sethom/census.hpp"
#include "sethom/groups.hpp"
#include "sethom/homtest.hpp"
#include "sethom/hypergraph.hpp"
#include "sethom/reconstruct.hpp"
#include "sethom/relations.hpp"
#include "sethom/tournament.hpp"
#include "sethom/trees.hpp"

using namespace sethom;
using nlohmann::json;

namespace {

// Every run is described by one flat config; defaults keep reruns of the
// same command line byte-identical.
struct RunConfig {
    std::string family = "M3";
    int k = 3;
    int degree = 7;
    int n = 12;
    int core = 6;
    int trials = 100;
    std::uint64_t seed = 0;
    std::string cores_text;
    std::string required_text;
    std::string input;
    std::string fixture;
    std::string out;
    std::string format = "json";
    bool drop_cycle = false;
    bool perturb = false;
    bool verify = false;
};

void emit(const std::string& path, std::string text) {
    if (text.empty() || text.back() != '\n') text += '\n';
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path);
    file << text;
}

// Reports carry a status and, on failure, the violated invariants with
// witnesses; the exit code mirrors the status.
int finish(const std::string& out, json report, const std::vector<json>& failures) {
    report["status"] = failures.empty() ? "pass" : "fail";
    if (!failures.empty()) report["failures"] = failures;
    emit(out, report.dump(2));
    return failures.empty() ? 0 : 1;
}

json failure(const std::string& invariant, json witness) {
    return json{{"invariant", invariant}, {"witness", std::move(witness)}};
}

Family parse_family(const std::string& text) {
    std::string up;
    for (char c : text) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (up == "M3") return Family::M3;
    if (up == "N3") return Family::N3;
    if (up == "M4") return Family::M4;
    if (up == "N4") return Family::N4;
    if (up == "M6") return Family::M6;
    throw std::invalid_argument("unknown family: " + text);
}

Carrier make_carrier(Family f, int n, std::uint64_t seed) {
    switch (f) {
        case Family::M3:
        case Family::M4: return random_rooted_fragment(n, 2, seed);
        case Family::M6: return random_unrooted_fragment(n, 3, seed);
        case Family::N4: return random_unrooted_fragment(n, 4, seed);
        case Family::N3: return build_circle_config(n, 997, seed);
    }
    throw std::invalid_argument("unknown family");
}

json carrier_json(const Carrier& c) {
    if (const auto* t = std::get_if<LeafTree>(&c)) return json{{"rooted_tree", t->to_text()}};
    if (const auto* t = std::get_if<UnrootedLeafTree>(&c))
        return json{{"unrooted_tree", t->to_json()}};
    return json{{"circle", std::get<CircleConfig>(c).to_json()}};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

std::string fixture_path(const std::string& name) {
    return std::string(SETHOM_FIXTURE_DIR) + "/" + name;
}

json load_json(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot read " + path);
    json j;
    file >> j;
    return j;
}

int edges_within(const KHypergraph& h, const std::vector<int>& subset) {
    int count = 0;
    for (const auto& e : h.edges()) {
        bool inside = true;
        for (int v : e)
            if (std::find(subset.begin(), subset.end(), v) == subset.end()) inside = false;
        if (inside) ++count;
    }
    return count;
}

// ---- subcommands ----

int cmd_tables(const RunConfig& cfg) {
    if (cfg.k != 3 && cfg.k != 4) throw std::invalid_argument("tables support k = 3 or 4");
    RealizationTable table = realization_table(cfg.k);
    if (cfg.format == "json") {
        emit(cfg.out, table.to_json().dump(2));
    } else {
        emit(cfg.out, table.to_csv(cfg.k == 4));
    }
    return 0;
}

int cmd_solve(const RunConfig& cfg) {
    if (cfg.k != 3 && cfg.k != 4) throw std::invalid_argument("solve supports k = 3 or 4");
    std::set<Label> required;
    if (cfg.required_text.empty()) {
        for (int a = 1; a <= cfg.k + 1; ++a)
            for (int b = 1; b <= cfg.k + 1; ++b)
                if (a != b && std::abs(a - b) >= 2) required.insert(Label::s(a, b));
        if (cfg.k == 4)
            for (int m = 1; m <= 4; ++m) required.insert(Label::t(m));
    } else {
        std::stringstream ss(cfg.required_text);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) required.insert(Label::parse(item));
    }
    for (const Label& label : required) {
        if (!label_valid(label, cfg.k))
            throw std::invalid_argument("label out of range: " + label.text());
    }
    json out = json::array();
    for (const CaseAssignment& a : solve_cover(cfg.k, required)) out.push_back(a.to_json());
    emit(cfg.out, out.dump(2));
    return 0;
}

int cmd_fragment(const RunConfig& cfg) {
    Family f = parse_family(cfg.family);
    Carrier carrier = make_carrier(f, cfg.n, cfg.seed);
    json report{{"family", family_name(f)},
                {"n", cfg.n},
                {"seed", cfg.seed},
                {"carrier", carrier_json(carrier)}};
    emit(cfg.out, report.dump(2));
    return 0;
}

int cmd_edges(const RunConfig& cfg) {
    Family f = parse_family(cfg.family);
    Carrier carrier = make_carrier(f, cfg.n, cfg.seed);
    KHypergraph h = derive_edges(f, carrier);
    auto dist = edge_distribution(h, h.arity() + 1);
    json windows = json::object();
    for (const auto& [edges, count] : dist) windows[std::to_string(edges)] = count;
    json report{{"family", family_name(f)},
                {"n", cfg.n},
                {"seed", cfg.seed},
                {"carrier", carrier_json(carrier)},
                {"hypergraph", h.to_json()},
                {"window_edge_counts", windows}};
    emit(cfg.out, report.dump(2));
    return 0;
}

int cmd_reconstruct(const RunConfig& cfg) {
    Family f = parse_family(cfg.family);
    if (f == Family::M6)
        throw std::invalid_argument("no recovery formulas cover M6");
    Carrier carrier = make_carrier(f, cfg.n, cfg.seed);
    if (f == Family::M3) carrier = witness_closure(std::get<LeafTree>(carrier)).tree;

    KHypergraph ambient = derive_edges(f, carrier);
    const int total = ambient.vertex_count();
    if (cfg.core < 2 || cfg.core > total)
        throw std::invalid_argument("core size must lie in [2, ambient size]");
    std::vector<int> core(cfg.core);
    for (int i = 0; i < cfg.core; ++i)
        core[i] = static_cast<int>(static_cast<long long>(i) * total / cfg.core);
    AmbientCore ac = make_ambient_core(f, carrier, core);

    std::vector<json> failures;
    json relations = json::object();
    auto add = [&](const std::string& name, const PartialRelation& rel) {
        ValidationReport v = validate_recovery(ac, rel);
        relations[name] = json{{"partial", rel.to_json()}, {"validation", v.to_json()}};
        if (v.disagree != 0)
            failures.push_back(failure("recovered " + name + " agrees with the carrier",
                                       v.to_json()));
    };
    if (f == Family::M3) {
        PartialRelation order = recover_order_m3(ac);
        add("order", order);
        add("c", recover_c(f, ac, order));
    } else if (f == Family::M4) {
        add("c", recover_c(f, ac));
    } else if (f == Family::N3) {
        add("r", recover_r_n3(ac));
    } else {
        add("d", recover_d_n4(ac));
    }
    json report{{"family", family_name(f)},
                {"seed", cfg.seed},
                {"ambient_size", total},
                {"core", ac.core},
                {"relations", relations}};
    return finish(cfg.out, std::move(report), failures);
}

int cmd_homreport(const RunConfig& cfg) {
    KHypergraph h(0, 3);
    json source;
    if (!cfg.input.empty()) {
        h = KHypergraph::from_json(load_json(cfg.input));
        source = json{{"input", cfg.input}};
    } else if (!cfg.fixture.empty()) {
        if (cfg.fixture != "example52")
            throw std::invalid_argument("unknown fixture: " + cfg.fixture);
        h = KHypergraph::from_json(load_json(fixture_path("example52_edges.json")));
        source = json{{"fixture", cfg.fixture}};
    } else {
        Family f = parse_family(cfg.family);
        h = derive_edges(f, make_carrier(f, cfg.n, cfg.seed));
        source = json{{"family", family_name(f)}, {"n", cfg.n}, {"seed", cfg.seed}};
    }
    PermGroup aut = automorphism_group(StructuredSet(h), {RelTag::Edge});
    HomReport report = homogeneity_report(h, aut);
    json out{{"source", source},
             {"aut_order", aut.order()},
             {"report", report.to_json()}};
    emit(cfg.out, out.dump(2));
    return 0;
}

int cmd_keylemma(const RunConfig& cfg) {
    Family f = parse_family(cfg.family);
    std::vector<int> cores = parse_int_list(cfg.cores_text);
    if (cores.empty()) {
        if (f == Family::M6)
            cores = {4, 5, 6, 7};
        else if (f == Family::N4)
            cores = {4, 5};
        else
            cores = {3, 4, 5, 6};
    }
    KeyLemmaReport report = key_lemma_trial(f, cores, cfg.trials, cfg.seed);
    json out = report.to_json();
    out["seed"] = cfg.seed;
    std::vector<json> failures;
    if (!report.violations.empty())
        failures.push_back(failure("hypergraph isomorphism coincides with structure isomorphism",
                                   json{{"violations", out["violations"]}}));
    return finish(cfg.out, std::move(out), failures);
}

int cmd_tournament(const RunConfig& cfg) {
    TournamentSearchResult result = tournament_forcing_search(!cfg.drop_cycle);
    json model = json::array();
    for (const auto& [u, v] : result.model) model.push_back(json::array({u, v}));
    json report{{"forbid_in_neighbourhood_cycles", !cfg.drop_cycle},
                {"unsat", result.unsat},
                {"trace", result.trace},
                {"model", model}};
    std::vector<json> failures;
    if (!cfg.drop_cycle && !result.unsat)
        failures.push_back(failure("constrained orientation search is unsatisfiable",
                                   json{{"model", model}}));
    if (cfg.drop_cycle && result.unsat)
        failures.push_back(failure("relaxed orientation search completes a tournament",
                                   json{{"unsat", true}}));
    return finish(cfg.out, std::move(report), failures);
}

int cmd_census(const RunConfig& cfg) {
    auto entries = census_orbit_unions(cfg.degree);
    std::vector<json> failures;
    if (cfg.verify) {
        for (const CensusEntry& e : entries) {
            HomReport check = homogeneity_report(e.hypergraph);
            if (check.set_homogeneous != e.set_homogeneous ||
                check.homogeneous != e.homogeneous)
                failures.push_back(failure("census flags match the direct report",
                                           e.to_json()));
        }
    }
    if (cfg.format == "text") {
        std::string table = census_table(entries);
        if (!failures.empty()) table += "flag verification failed\n";
        emit(cfg.out, table);
        return failures.empty() ? 0 : 1;
    }
    json list = json::array();
    for (const CensusEntry& e : entries) list.push_back(e.to_json());
    json report{{"degree", cfg.degree}, {"entries", list}};
    return finish(cfg.out, std::move(report), failures);
}

int cmd_axioms(const RunConfig& cfg) {
    Family f = parse_family(cfg.family);
    if (f == Family::N3)
        throw std::invalid_argument("axioms cover the C and D tree relations");
    Carrier carrier = make_carrier(f, cfg.n, cfg.seed);

    std::vector<AxiomReport> reports;
    json perturbed;
    std::mt19937_64 rng(cfg.seed);
    auto pick_distinct = [&](int count) {
        std::vector<int> tuple;
        while (static_cast<int>(tuple.size()) < count) {
            int v = static_cast<int>(rng() % static_cast<unsigned long long>(cfg.n));
            if (std::find(tuple.begin(), tuple.end(), v) == tuple.end()) tuple.push_back(v);
        }
        return tuple;
    };

    if (f == Family::M3 || f == Family::M4) {
        TernaryRel rel = c_of_leaves(std::get<LeafTree>(carrier)).first;
        if (cfg.perturb) {
            auto t = pick_distinct(3);
            perturbed = t;
            TernaryRel base = rel;
            rel = TernaryRel(cfg.n, [base, t](int x, int y, int z) {
                bool v = base.holds(x, y, z);
                return (x == t[0] && y == t[1] && z == t[2]) ? !v : v;
            });
        }
        reports = check_c_axioms(rel, {CAxiom::C1, CAxiom::C2, CAxiom::C3, CAxiom::C4});
    } else {
        QuaternaryRel rel = d_of_leaves(std::get<UnrootedLeafTree>(carrier));
        if (cfg.perturb) {
            auto t = pick_distinct(4);
            perturbed = t;
            QuaternaryRel base = rel;
            rel = QuaternaryRel(cfg.n, [base, t](int x, int y, int z, int w) {
                bool v = base.holds(x, y, z, w);
                return (x == t[0] && y == t[1] && z == t[2] && w == t[3]) ? !v : v;
            });
        }
        reports = check_d_axioms(rel, {DAxiom::D1, DAxiom::D2, DAxiom::D3, DAxiom::D4});
    }

    json list = json::array();
    bool any_failed = false;
    for (const AxiomReport& r : reports) {
        list.push_back(r.to_json());
        if (r.status == "fail") any_failed = true;
    }
    json report{{"family", family_name(f)},
                {"n", cfg.n},
                {"seed", cfg.seed},
                {"axioms", list}};
    std::vector<json> failures;
    if (cfg.perturb) {
        report["perturbed"] = perturbed;
        if (!any_failed)
            failures.push_back(failure("a flipped tuple is detected by the axiom suite",
                                       json{{"tuple", perturbed}}));
    } else if (any_failed) {
        failures.push_back(failure("derived relations satisfy their axioms", list));
    }
    return finish(cfg.out, std::move(report), failures);
}

int cmd_example52(const RunConfig& cfg) {
    std::vector<json> failures;
    json checks = json::array();
    auto check = [&](const std::string& name, const json& expected, const json& actual) {
        bool pass = expected == actual;
        checks.push_back(json{{"name", name}, {"expected", expected}, {"actual", actual},
                              {"pass", pass}});
        if (!pass) failures.push_back(failure(name, json{{"expected", expected},
                                                         {"actual", actual}}));
    };

    PermGroup g = named_group("agl1(7)");
    check("group order", 42, g.order());

    auto orbits = orbits_on_subsets(g, 3);
    std::vector<std::size_t> sizes;
    for (const auto& orbit : orbits) sizes.push_back(orbit.size());
    std::sort(sizes.begin(), sizes.end());
    check("orbit sizes on 3-subsets", json::array({14, 21}), json(sizes));

    KHypergraph m(7, 3);
    for (const auto& orbit : orbits) {
        if (orbit.size() != 14) continue;
        for (const auto& e : orbit) m.add_edge(e);
    }
    for (const std::vector<int>& member :
         {std::vector<int>{0, 1, 3}, {0, 2, 6}, {0, 2, 3}, {0, 4, 5}}) {
        check("orbit of size 14 contains " + std::to_string(member[0]) +
                  std::to_string(member[1]) + std::to_string(member[2]),
              true, m.has_edge(member));
    }

    KHypergraph fixture = KHypergraph::from_json(load_json(fixture_path("example52_edges.json")));
    check("edge list matches the stored fixture", true, m.edges() == fixture.edges());

    PermGroup aut = automorphism_group(StructuredSet(m), {RelTag::Edge});
    check("automorphism group order", 42, aut.order());

    HomReport report = homogeneity_report(m, aut);
    check("set-homogeneous", true, report.set_homogeneous);
    check("homogeneous", false, report.homogeneous);
    check("extension failure certificate present", true,
          report.extension_certificate.has_value());

    check("edges inside {2,4,5,6}", 1, edges_within(m, {2, 4, 5, 6}));
    check("edges inside {3,4,5,6}", 2, edges_within(m, {3, 4, 5, 6}));
    StructuredSet whole(m);
    bool quads_isomorphic =
        find_isomorphism(whole.induced({2, 4, 5, 6}), whole.induced({3, 4, 5, 6}),
                         {RelTag::Edge})
            .has_value();
    check("the two quadruples are non-isomorphic", false, quads_isomorphic);

    json out{{"checks", checks}, {"report", report.to_json()}};
    return finish(cfg.out, std::move(out), failures);
}

int cmd_fano(const RunConfig& cfg) {
    std::vector<json> failures;
    json checks = json::array();
    auto check = [&](const std::string& name, const json& expected, const json& actual) {
        bool pass = expected == actual;
        checks.push_back(json{{"name", name}, {"expected", expected}, {"actual", actual},
                              {"pass", pass}});
        if (!pass) failures.push_back(failure(name, json{{"expected", expected},
                                                         {"actual", actual}}));
    };
    KHypergraph fano(7, 3);
    for (int i = 0; i < 7; ++i) fano.add_edge({i, (i + 1) % 7, (i + 3) % 7});
    PermGroup aut = automorphism_group(StructuredSet(fano), {RelTag::Edge});
    check("automorphism group order", 168, aut.order());
    HomReport report = homogeneity_report(fano, aut);
    check("homogeneous", true, report.homogeneous);
    check("set-homogeneous", true, report.set_homogeneous);
    json out{{"checks", checks}, {"report", report.to_json()}};
    return finish(cfg.out, std::move(out), failures);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"derive, recover, and verify finite fragments of set-homogeneous hypergraphs"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<int()> runner;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "write the artifact to a file instead of stdout");
    };

    // Tables are primarily consumed as CSV, so that is the format default;
    // census below treats anything other than "text" as JSON.
    cfg.format = "csv";
    auto* tables = app.add_subcommand("tables", "emit a realization table");
    tables->add_option("--k", cfg.k, "edge arity, 3 or 4");
    tables->add_option("--format", cfg.format, "json or csv");
    add_common(tables);
    tables->callback([&] { runner = [&] { return cmd_tables(cfg); }; });

    auto* solve = app.add_subcommand("solve", "search case assignments covering required labels");
    solve->add_option("--k", cfg.k, "edge arity, 3 or 4");
    solve->add_option("--required", cfg.required_text,
                      "comma-separated labels; defaults to the full obstruction set");
    add_common(solve);
    solve->callback([&] { runner = [&] { return cmd_solve(cfg); }; });

    auto* fragment = app.add_subcommand("fragment", "sample a carrier for a family");
    fragment->add_option("--family", cfg.family, "M3, N3, M4, N4, or M6");
    fragment->add_option("--n", cfg.n, "carrier size");
    fragment->add_option("--seed", cfg.seed, "sampling seed");
    add_common(fragment);
    fragment->callback([&] { runner = [&] { return cmd_fragment(cfg); }; });

    auto* edges = app.add_subcommand("edges", "derive the edge set of a sampled carrier");
    edges->add_option("--family", cfg.family, "M3, N3, M4, N4, or M6");
    edges->add_option("--n", cfg.n, "carrier size");
    edges->add_option("--seed", cfg.seed, "sampling seed");
    add_common(edges);
    edges->callback([&] { runner = [&] { return cmd_edges(cfg); }; });

    auto* reconstruct = app.add_subcommand(
        "reconstruct", "recover hidden relations from derived edges and validate them");
    reconstruct->add_option("--family", cfg.family, "M3, M4, N3, or N4");
    reconstruct->add_option("--n", cfg.n, "carrier size before closure");
    reconstruct->add_option("--core", cfg.core, "number of core vertices");
    reconstruct->add_option("--seed", cfg.seed, "sampling seed");
    add_common(reconstruct);
    reconstruct->callback([&] { runner = [&] { return cmd_reconstruct(cfg); }; });

    auto* homreport = app.add_subcommand("homreport", "homogeneity report for a hypergraph");
    homreport->add_option("--input", cfg.input, "hypergraph JSON file");
    homreport->add_option("--fixture", cfg.fixture, "named built-in input: example52");
    homreport->add_option("--family", cfg.family, "sampled family when no input is given");
    homreport->add_option("--n", cfg.n, "carrier size");
    homreport->add_option("--seed", cfg.seed, "sampling seed");
    add_common(homreport);
    homreport->callback([&] { runner = [&] { return cmd_homreport(cfg); }; });

    auto* keylemma = app.add_subcommand(
        "keylemma", "sample core pairs and compare edge and structure isomorphism");
    keylemma->add_option("--family", cfg.family, "M3, N3, M4, N4, or M6");
    keylemma->add_option("--cores", cfg.cores_text, "comma-separated core sizes");
    keylemma->add_option("--trials", cfg.trials, "sampled carriers");
    keylemma->add_option("--seed", cfg.seed, "sampling seed");
    add_common(keylemma);
    keylemma->callback([&] { runner = [&] { return cmd_keylemma(cfg); }; });

    auto* tournament = app.add_subcommand(
        "tournament", "run the seven-vertex orientation forcing search");
    tournament->add_flag("--drop-cycle-constraint", cfg.drop_cycle,
                         "allow directed triangles inside in-neighbourhoods");
    add_common(tournament);
    tournament->callback([&] { runner = [&] { return cmd_tournament(cfg); }; });

    auto* census = app.add_subcommand(
        "census", "classify orbit unions of the minimal 2-transitive groups");
    census->add_option("--degree", cfg.degree, "number of vertices, 3 to 8");
    census->add_option("--format", cfg.format, "json or text");
    census->add_flag("--verify", cfg.verify, "recheck flags through the direct report");
    add_common(census);
    census->callback([&] { runner = [&] { return cmd_census(cfg); }; });

    auto* axioms = app.add_subcommand("axioms", "check relation axioms on a sampled carrier");
    axioms->add_option("--family", cfg.family, "M3 or M4 for C; N4 or M6 for D");
    axioms->add_option("--n", cfg.n, "carrier size");
    axioms->add_option("--seed", cfg.seed, "sampling seed");
    axioms->add_flag("--perturb", cfg.perturb, "flip one tuple and expect detection");
    add_common(axioms);
    axioms->callback([&] { runner = [&] { return cmd_axioms(cfg); }; });

    auto* example52 = app.add_subcommand(
        "example52", "verify the seven-vertex set-homogeneous example end to end");
    add_common(example52);
    example52->callback([&] { runner = [&] { return cmd_example52(cfg); }; });

    auto* fano = app.add_subcommand("fano", "verify the Fano plane report");
    add_common(fano);
    fano->callback([&] { runner = [&] { return cmd_fano(cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return runner();
    } catch (const std::exception& e) {
        json error{{"status", "error"}, {"message", e.what()}};
        std::cerr << error.dump(2) << "\n";
        return 2;
    }
}
