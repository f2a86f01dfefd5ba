#include "hke/sweep.hpp"

#include <algorithm>

namespace hke {

namespace {

constexpr std::size_t kKeptFailures = 5;

} // namespace

Graph graph_from_bits(std::size_t n, std::uint64_t edge_bits) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    Graph g{ElementTable(labels)};
    std::size_t k = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v, ++k) {
            if (k < 64 && ((edge_bits >> k) & 1U)) g.add_edge(u, v);
        }
    }
    return g;
}

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    Graph g{ElementTable(labels)};
    std::uint64_t bits = 0;
    std::size_t left = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (left == 0) {
                bits = rng();
                left = 64;
            }
            if (bits & 1U) g.add_edge(u, v);
            bits >>= 1;
            --left;
        }
    }
    return g;
}

void check_graph(const Graph& graph, SweepReport& report) {
    bool failed = false;
    const bool ke = is_ke(graph);
    if (ke != is_ke_via_theorem(graph).holds) {
        ++report.theorem_failures;
        failed = true;
    }
    if (ke) {
        ++report.ke_graphs;
        if (!omega_is_hke(graph)) {
            ++report.omega_failures;
            failed = true;
        }
    }
    const SetFamily omega = max_independent_sets(graph);
    if (omega[0].count() > independence_number(graph_of(omega))) {
        ++report.alpha_failures;
        failed = true;
    }
    if (is_well_covered(graph) && omega.union_all() == graph.vertices()) {
        ++report.roundtrips_checked;
        if (!wellcovered_roundtrip(graph)) {
            ++report.roundtrip_failures;
            failed = true;
        }
    }
    if (failed && report.failing_graphs.size() < kKeptFailures) report.failing_graphs.push_back(render_graph(graph));
}

SweepReport run_sweep(const SweepConfig& config) {
    const std::size_t k = config.max_vertices;
    if (k < 1) throw Error(Errc::PreconditionFailed, "sweep needs at least one vertex");
    if (k > kMaxTheoremVertices) throw Error(Errc::TooLarge, "sweep supports at most 16 vertices");

    SweepReport report;
    for (std::size_t n = 1; n <= std::min(k, kExhaustiveSweepVertices); ++n) {
        const std::uint64_t edge_slots = n * (n - 1) / 2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << edge_slots); ++bits) {
            check_graph(graph_from_bits(n, bits), report);
            ++report.exhaustive;
        }
    }

    std::mt19937_64 rng(config.seed);
    const std::size_t lo = k > kExhaustiveSweepVertices ? kExhaustiveSweepVertices + 1 : 1;
    for (std::size_t s = 0; s < config.samples; ++s) {
        const std::size_t n = lo + static_cast<std::size_t>(rng() % (k - lo + 1));
        check_graph(random_graph(n, rng), report);
        ++report.sampled;
    }
    return report;
}

} // namespace hke
