#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "hke/counting.hpp"
#include "hke/graph.hpp"
#include "hke/iso.hpp"
#include "hke/maximal.hpp"
#include "hke/sweep.hpp"
#include "hke/verify.hpp"

namespace hke::cli {

namespace {

using nlohmann::json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SetFamily load_family(const std::string& path) { return parse_family(read_input(path)); }
Graph load_graph(const std::string& path) { return parse_graph(read_input(path)); }

std::vector<std::string> split_labels(const std::string& text) {
    std::istringstream in(text);
    return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

json members_json(const SetFamily& family, const Selector& sel) {
    json out = json::array();
    for (std::size_t i : sel.positions()) out.push_back(family.table().labels_of(family[i]));
    return out;
}

json verdict_json(const SetFamily& family, const HkeVerdict& v) {
    json out{{"holds", v.holds}, {"mode", mode_name(v.mode)}};
    out["alpha"] = v.alpha ? json(*v.alpha) : json(nullptr);
    if (const auto* g = std::get_if<GammaWitness>(&v.witness)) {
        out["witness"] = {{"gamma", members_json(family, g->gamma)}, {"positions", g->gamma.positions()}};
    } else if (const auto* p = std::get_if<PairWitness>(&v.witness)) {
        out["witness"] = {{"gamma1", members_json(family, p->gamma1)},
                          {"gamma2", members_json(family, p->gamma2)},
                          {"positions1", p->gamma1.positions()},
                          {"positions2", p->gamma2.positions()}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json pairs_json(const ElementTable& table, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    json out = json::array();
    for (const auto& [x, y] : pairs) out.push_back({table.label(x), table.label(y)});
    return out;
}

json family_json(const SetFamily& family) { return family.as_labels(); }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int verdict_code(bool holds) { return holds ? kHolds : kFails; }

// ---------------------------------------------------------------- commands

int cmd_verify(const std::string& path, const std::string& mode_text, std::ostream& out) {
    const SetFamily family = load_family(path);
    const CheckMode mode = mode_from_name(mode_text);
    if (mode != CheckMode::Partition) {
        if (auto pair = irrelevant_pair(family)) {
            emit(out, {{"holds", false},
                       {"mode", mode_name(mode)},
                       {"alpha", nullptr},
                       {"witness", nullptr},
                       {"reason", "members " + std::to_string(pair->first) + " and " + std::to_string(pair->second) +
                                      " differ in size"}});
            return kFails;
        }
    }
    HkeVerdict v;
    switch (mode) {
    case CheckMode::Ke: v = check_ke(family); break;
    case CheckMode::Definition: v = check_hke_definition(family); break;
    case CheckMode::Pairwise: v = check_hke_pairwise(family); break;
    case CheckMode::Partition: v = check_hke_partition(family); break;
    }
    emit(out, verdict_json(family, v));
    return verdict_code(v.holds);
}

int cmd_typical(std::size_t alpha, std::ostream& out) {
    out << render_family(typical_collection(alpha));
    return kHolds;
}

int cmd_extend(const std::string& path, std::size_t base, const std::string& subset, std::ostream& out) {
    const SetFamily family = load_family(path);
    const ElementSet e = family.table().set_of(split_labels(subset));
    const Extension ext = extend(family, base, e);
    const SetFamily grown = ext.extended();
    out << "# added member:";
    for (const auto& l : grown.table().labels_of(ext.added)) out << ' ' << l;
    out << '\n' << render_family(grown);
    return kHolds;
}

int cmd_complete(const std::string& path, std::ostream& out) {
    const Completion c = complete_to_maximal(load_family(path));
    out << "# " << c.original_size << " original members, " << c.family.size() - c.original_size << " added, "
        << c.fresh_labels << " fresh labels" << (c.core_stripped ? ", common core cleared first" : "") << '\n';
    out << render_family(c.family);
    return kHolds;
}

int cmd_dual(const std::string& path, std::ostream& out) {
    const SetFamily family = load_family(path);
    const auto pairs = dual_relation(family);
    const bool maximal = is_maximal(family);
    emit(out, {{"alpha", family[0].count()}, {"maximal", maximal}, {"classes", pairs_json(family.table(), pairs)}});
    if (maximal) as_dual_pairing(family);
    return verdict_code(maximal);
}

json bijection_json(const std::optional<FamilyBijection>& g) {
    if (!g) return nullptr;
    return g->forward;
}

int cmd_iso(const std::string& p1, const std::string& p2, std::ostream& out) {
    const SetFamily f1 = load_family(p1);
    const SetFamily f2 = load_family(p2);
    std::optional<FamilyBijection> g;
    std::string method = "search";
    const bool both_maximal = !irrelevant_pair(f1) && !irrelevant_pair(f2) && is_hke(f1) && is_hke(f2) &&
                              is_maximal(f1) && is_maximal(f2) && f1[0].count() == f2[0].count();
    if (both_maximal) {
        g = maximal_iso(f1, f2);
        method = "dual-pairing";
    } else {
        g = are_isomorphic(f1, f2);
    }
    emit(out, {{"isomorphic", g.has_value()}, {"method", method}, {"bijection", bijection_json(g)}});
    return verdict_code(g.has_value());
}

int cmd_graph_of(const std::string& path, std::ostream& out) {
    out << render_graph(graph_of(load_family(path)));
    return kHolds;
}

int cmd_omega(const std::string& path, std::ostream& out) {
    const SetFamily omega = max_independent_sets(load_graph(path));
    out << "# alpha " << omega[0].count() << ", " << omega.size() << " maximum independent sets\n";
    out << render_family(omega);
    return kHolds;
}

json matching_json(const Graph& g, const Matching& m) {
    json out = json::array();
    for (const auto& [u, v] : m.edges) out.push_back({g.table().label(u), g.table().label(v)});
    return out;
}

int cmd_matching(const std::string& path, std::ostream& out) {
    const Graph g = load_graph(path);
    for (const auto& [u, v] : maximum_matching(g).edges) {
        out << "m " << g.table().label(u) << ' ' << g.table().label(v) << '\n';
    }
    return kHolds;
}

int cmd_ke(const std::string& path, const std::string& method, std::ostream& out) {
    const Graph g = load_graph(path);
    json report{{"order", g.order()}, {"method", method}};
    std::optional<bool> direct, theorem;
    if (method == "direct" || method == "both") {
        const Matching m = maximum_matching(g);
        const std::size_t alpha = independence_number(g);
        direct = alpha + m.size() == g.order();
        report["direct"] = {{"ke", *direct}, {"alpha", alpha}, {"mu", m.size()}, {"matching", matching_json(g, m)}};
    }
    if (method == "theorem" || method == "both") {
        const TheoremKeVerdict v = is_ke_via_theorem(g);
        theorem = v.holds;
        json t{{"ke", v.holds}};
        if (v.holds) {
            const SetFamily omega = max_independent_sets(g);
            json gamma = json::array();
            for (std::size_t p : v.gamma) gamma.push_back(omega.table().labels_of(omega[p]));
            t["gamma"] = gamma;
            t["matching"] = matching_json(g, v.matching);
        }
        report["theorem"] = t;
    }
    if (direct && theorem && *direct != *theorem) {
        throw Error(Errc::TheoremViolation, "direct and theorem KE tests disagree");
    }
    const bool ke = direct ? *direct : *theorem;
    report["ke"] = ke;
    emit(out, report);
    return verdict_code(ke);
}

int cmd_wellcovered(const std::string& path, bool roundtrip, std::ostream& out) {
    const Graph g = load_graph(path);
    const bool wc = is_well_covered(g);
    json report{{"well_covered", wc}};
    if (!roundtrip) {
        emit(out, report);
        return verdict_code(wc);
    }
    const bool rt = wellcovered_roundtrip(g);
    report["roundtrip"] = rt;
    emit(out, report);
    return verdict_code(rt);
}

int cmd_bipartite(const std::string& path, std::ostream& out) {
    const bool holds = bipartite_check_and_theorem(load_graph(path));
    emit(out, {{"perfect_matching_graph", holds}, {"omega_maximal_hke", holds}});
    return verdict_code(holds);
}

int cmd_old_ke(const std::string& path, std::ostream& out) {
    const SetFamily family = load_family(path);
    const bool holds = old_ke_equivalence(family);
    const OldKeReport r = old_ke_report(family);
    json embedding = json::object();
    for (const auto& [from, onto] : r.embedding) embedding[from] = onto;
    emit(out, {{"hke", r.hke},
               {"embeds_in_typical", r.embeds_in_typical},
               {"in_omega_of_ke_graph", r.in_omega_of_ke_graph},
               {"old_sense_ke", r.old_sense_ke},
               {"embedding", r.embeds_in_typical ? embedding : json(nullptr)}});
    return verdict_code(holds);
}

int cmd_count(std::size_t alpha, std::size_t n, bool search, bool formula, const std::string& witness_path,
              std::ostream& out) {
    const std::uint64_t value = a_formula(alpha, n);
    json report{{"alpha", alpha}, {"n", n}, {"formula_value", value}};
    bool agrees = true;
    std::optional<SetFamily> witness;
    if (search) {
        const CountResult r = a_search(alpha, n);
        report["max_size"] = r.max_size;
        agrees = r.max_size == value;
        witness = r.witness;
    } else {
        report["max_size"] = nullptr;
    }
    if (formula) {
        const SetFamily construction = padded_typical(alpha, n);
        report["construction_size"] = construction.size();
        agrees = agrees && construction.size() == value && is_hke(construction);
        if (!witness) witness = construction;
    }
    report["witness"] = family_json(*witness);
    report["agrees"] = agrees;
    emit(out, report);
    if (!witness_path.empty()) {
        std::ofstream file(witness_path, std::ios::binary);
        if (!file) throw Error(Errc::ParseError, "cannot write '" + witness_path + "'");
        file << render_family(*witness);
    }
    return verdict_code(agrees);
}

int cmd_cn(std::size_t n, std::ostream& out) {
    json report{{"n", n}, {"c", c_of(n)}, {"convention", "floor(n/2)"}};
    if (n <= 7) {
        const CountResult r = c_search(n);
        report["search"] = {{"max_size", r.max_size}, {"alpha", r.alpha}, {"witness", family_json(r.witness)}};
    } else {
        report["search"] = nullptr;
    }
    emit(out, report);
    return kHolds;
}

int cmd_sweep(const SweepConfig& config, std::ostream& out) {
    const SweepReport r = run_sweep(config);
    emit(out, {{"max_vertices", config.max_vertices},
               {"samples", config.samples},
               {"seed", config.seed},
               {"exhaustive", r.exhaustive},
               {"sampled", r.sampled},
               {"ke_graphs", r.ke_graphs},
               {"roundtrips_checked", r.roundtrips_checked},
               {"theorem_failures", r.theorem_failures},
               {"omega_failures", r.omega_failures},
               {"alpha_failures", r.alpha_failures},
               {"roundtrip_failures", r.roundtrip_failures},
               {"failing_graphs", r.failing_graphs},
               {"ok", r.ok()}});
    return verdict_code(r.ok());
}

int cmd_omega_iso(const std::string& p1, const std::string& p2, std::ostream& out) {
    const SetFamily o1 = max_independent_sets(load_graph(p1));
    const SetFamily o2 = max_independent_sets(load_graph(p2));
    const auto g = are_isomorphic(o1, o2);
    emit(out, {{"omega_isomorphic", g.has_value()}, {"bijection", bijection_json(g)}});
    return verdict_code(g.has_value());
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hereditary König-Egerváry set collections and their graphs", "hke"};
    app.require_subcommand(1);

    std::string file, file2, graph, graph2, mode = "definition", subset, method = "both", witness_path;
    std::size_t alpha = 0, n = 0, base = 0;
    bool json_flag = false, roundtrip = false, search = false, formula = false, both = false;
    SweepConfig sweep;

    auto* verify = app.add_subcommand("verify", "Check the hke property; prints a JSON verdict");
    verify->add_option("-f,--file", file, "Family file ('-' for stdin)")->required();
    verify->add_option("--mode", mode, "ke, definition, pairwise or partition")
        ->check(CLI::IsMember({"ke", "definition", "pairwise", "partition"}));
    verify->add_flag("--json", json_flag, "JSON output (always on)");

    auto* typical = app.add_subcommand("typical", "Print the typical collection for alpha");
    typical->add_option("--alpha", alpha)->required();

    auto* ext = app.add_subcommand("extend", "Add a member D with A∩D = E, A the base member");
    ext->add_option("-f,--file", file)->required();
    ext->add_option("--base", base, "Position of A, counted from 0")->required();
    ext->add_option("--subset", subset, "Labels of E, space separated")->required();

    auto* complete = app.add_subcommand("complete", "Grow an hke family to 2^alpha members");
    complete->add_option("-f,--file", file)->required();

    auto* dual = app.add_subcommand("dual", "Dual relation classes of an hke family");
    dual->add_option("-f,--file", file)->required();

    auto* iso = app.add_subcommand("iso", "Isomorphism test between two families");
    iso->add_option("-f,--file", file)->required();
    iso->add_option("-g,--other", file2)->required();

    auto* gof = app.add_subcommand("graph-of", "Graph of a relevant family");
    gof->add_option("-f,--file", file)->required();

    auto* omega = app.add_subcommand("omega", "All maximum independent sets of a graph");
    omega->add_option("-G,--graph", graph)->required();

    auto* matching = app.add_subcommand("matching", "A maximum matching, one 'm u v' line per edge");
    matching->add_option("-G,--graph", graph)->required();

    auto* ke = app.add_subcommand("ke", "König-Egerváry test");
    ke->add_option("-G,--graph", graph)->required();
    ke->add_option("--method", method)->check(CLI::IsMember({"direct", "theorem", "both"}));

    auto* wc = app.add_subcommand("wellcovered", "Well-coveredness test");
    wc->add_option("-G,--graph", graph)->required();
    wc->add_flag("--roundtrip", roundtrip, "Also check that the graph of Omega(G) is G");

    auto* bip = app.add_subcommand("bipartite", "Perfect-matching graph vs maximal hke Omega(G)");
    bip->add_option("-G,--graph", graph)->required();

    auto* oldke = app.add_subcommand("old-ke", "The four equivalent old-sense KE conditions");
    oldke->add_option("-f,--file", file)->required();

    auto* count = app.add_subcommand("count", "Largest hke family for alpha and n");
    count->add_option("--alpha", alpha)->required();
    count->add_option("--n", n)->required();
    auto* f_search = count->add_flag("--search", search, "Exhaustive search only");
    auto* f_formula = count->add_flag("--formula", formula, "Closed form and padded construction only");
    auto* f_both = count->add_flag("--both", both, "Search and closed form (default)");
    f_search->excludes(f_formula)->excludes(f_both);
    f_formula->excludes(f_both);
    count->add_option("-o,--output", witness_path, "Write the witness family here");

    auto* cn = app.add_subcommand("cn", "Largest hke family on n elements");
    cn->add_option("--n", n)->required();

    auto* sw = app.add_subcommand("sweep", "Cross-check the graph theorems on many graphs");
    sw->add_option("--max-vertices", sweep.max_vertices)->capture_default_str();
    sw->add_option("--samples", sweep.samples)->capture_default_str();
    sw->add_option("--seed", sweep.seed)->capture_default_str();

    auto* oiso = app.add_subcommand("omega-iso", "Experimental: are Omega(G) and Omega(H) isomorphic");
    oiso->add_option("-G,--graph", graph)->required();
    oiso->add_option("-H,--other-graph", graph2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kError;
    }

    try {
        if (verify->parsed()) return cmd_verify(file, mode, out);
        if (typical->parsed()) return cmd_typical(alpha, out);
        if (ext->parsed()) return cmd_extend(file, base, subset, out);
        if (complete->parsed()) return cmd_complete(file, out);
        if (dual->parsed()) return cmd_dual(file, out);
        if (iso->parsed()) return cmd_iso(file, file2, out);
        if (gof->parsed()) return cmd_graph_of(file, out);
        if (omega->parsed()) return cmd_omega(graph, out);
        if (matching->parsed()) return cmd_matching(graph, out);
        if (ke->parsed()) return cmd_ke(graph, method, out);
        if (wc->parsed()) return cmd_wellcovered(graph, roundtrip, out);
        if (bip->parsed()) return cmd_bipartite(graph, out);
        if (oldke->parsed()) return cmd_old_ke(file, out);
        if (count->parsed()) {
            if (!search && !formula) search = formula = true;
            return cmd_count(alpha, n, search, formula, witness_path, out);
        }
        if (cn->parsed()) return cmd_cn(n, out);
        if (sw->parsed()) return cmd_sweep(sweep, out);
        if (oiso->parsed()) return cmd_omega_iso(graph, graph2, out);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    err << "usage error: no command\n";
    return kError;
}

} // namespace hke::cli
