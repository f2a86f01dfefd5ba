#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hke/graph.hpp"

namespace hke {

struct SweepConfig {
    std::size_t max_vertices = 8;
    std::size_t samples = 500;
    std::uint64_t seed = 0;
};

/// Tallies of the graph-side cross-checks; every *_failures field must be 0.
struct SweepReport {
    std::size_t exhaustive = 0;          // all labelled graphs on 1..min(K, 5) vertices
    std::size_t sampled = 0;             // random graphs on 6..K vertices (1..K when K < 6)
    std::size_t ke_graphs = 0;
    std::size_t roundtrips_checked = 0;  // well-covered graphs with V = corona
    std::size_t theorem_failures = 0;    // is_ke != is_ke_via_theorem
    std::size_t omega_failures = 0;      // KE graph whose Ω is not hke
    std::size_t alpha_failures = 0;      // α(Ω) > α(G(Ω))
    std::size_t roundtrip_failures = 0;
    std::vector<std::string> failing_graphs; // first few offenders, rendered

    bool ok() const { return theorem_failures + omega_failures + alpha_failures + roundtrip_failures == 0; }
};

inline constexpr std::size_t kExhaustiveSweepVertices = 5;

/// Graph on "1".."n" whose edges are indexed by bits of `edge_bits` in
/// (u, v) order with u < v.
Graph graph_from_bits(std::size_t n, std::uint64_t edge_bits);

/// Erdős–Rényi graph, edge probability 1/2, on "1".."n".
Graph random_graph(std::size_t n, std::mt19937_64& rng);

/// Runs every check on one graph and adds the outcome to `report`.
void check_graph(const Graph& graph, SweepReport& report);

/// Exhaustive part, then `samples` random graphs from `seed`. K ≤ 16.
SweepReport run_sweep(const SweepConfig& config);

} // namespace hke
