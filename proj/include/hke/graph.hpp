#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hke/family.hpp"
#include "hke/verify.hpp"

namespace hke {

/// Simple undirected graph over labelled vertices; adjacency is symmetric
/// and irreflexive.
class Graph {
public:
    Graph() = default;
    explicit Graph(ElementTable vertices);

    /// Throws SelfLoop / DuplicateEdge / IndexOutOfRange.
    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const { return adj_.at(u).test(v); }

    const ElementTable& table() const { return table_; }
    std::size_t order() const { return table_.size(); }
    std::size_t size() const; // edge count
    const ElementSet& neighbours(std::size_t v) const { return adj_.at(v); }
    ElementSet vertices() const { return ElementSet::prefix(order()); }
    /// Edges as (u, v) with u < v, ordered by u then v.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Same vertex labels and same edges between labels.
    bool operator==(const Graph& o) const;

private:
    ElementTable table_;
    std::vector<ElementSet> adj_;
};

struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t size() const { return edges.size(); }
};

/// "v <lbl> ..." vertex declarations, "e <u> <v>" edges, '#' comments.
Graph parse_graph(std::string_view text);
std::string render_graph(const Graph& graph);

/// Vertices ⋃F, edge uv exactly when no member holds both.
Graph graph_of(const SetFamily& family);

inline constexpr std::size_t kMaxExactVertices = 32;
inline constexpr std::size_t kMaxTheoremVertices = 16;

std::size_t independence_number(const Graph& graph);
/// Ω(G): all maximum independent sets, lexicographic, over the graph's table.
SetFamily max_independent_sets(const Graph& graph);
/// ⋃Ω(G).
ElementSet corona(const Graph& graph);
/// Exact maximum matching, deterministic witness.
Matching maximum_matching(const Graph& graph);
/// Whether `m` is a matching of `graph` (edges present, vertex-disjoint).
bool is_matching(const Graph& graph, const Matching& m);

/// α(G) + μ(G) = |V(G)|.
bool is_ke(const Graph& graph);

struct TheoremKeVerdict {
    bool holds = false;
    std::vector<std::size_t> gamma;  // positions in Ω(G)
    ElementSet gamma_union;
    ElementSet gamma_intersection;
    Matching matching;               // V − ⋃Γ into ⋂Γ, pairs (outside, inside)
};

/// KE test through the hke-subcollection characterisation: some hke Γ ⊆ Ω(G)
/// admits a matching of V − ⋃Γ into ⋂Γ. Γ is searched by increasing mask.
TheoremKeVerdict is_ke_via_theorem(const Graph& graph);

/// Whether Ω(G) is an hke collection.
bool omega_is_hke(const Graph& graph);

/// Every maximal independent set is maximum.
bool is_well_covered(const Graph& graph);

/// graph_of(Ω(G)) == G, for well-covered G with V(G) = corona(G).
bool wellcovered_roundtrip(const Graph& graph);

/// Perfect matching on "1".."2α" with edges {i, i+α}. 1 ≤ α ≤ 16.
Graph typical_ke_graph(std::size_t alpha);

/// For V(G) = corona(G): G ≅ typical_ke_graph(α(G)) iff Ω(G) is maximal hke.
/// Both sides are computed; disagreement throws TheoremViolation.
bool bipartite_check_and_theorem(const Graph& graph);

struct OldKeReport {
    bool hke = false;              // definition checker
    bool embeds_in_typical = false;
    bool in_omega_of_ke_graph = false;
    bool old_sense_ke = false;
    std::vector<std::pair<std::string, std::string>> embedding; // label -> typical label
    std::size_t graphs_searched = 0; // negative-side search size
};

/// Evaluates the four equivalent conditions separately; requires agreement.
OldKeReport old_ke_report(const SetFamily& family);
bool old_ke_equivalence(const SetFamily& family);

} // namespace hke
