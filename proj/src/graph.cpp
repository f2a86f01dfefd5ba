#include "hke/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace hke {

// ---------------------------------------------------------------- Graph

Graph::Graph(ElementTable vertices) : table_(std::move(vertices)), adj_(table_.size()) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= order() || v >= order()) throw Error(Errc::IndexOutOfRange, "edge endpoint out of range");
    if (u == v) throw Error(Errc::SelfLoop, "self-loop at '" + table_.label(u) + "'");
    if (adj_[u].test(v)) {
        throw Error(Errc::DuplicateEdge, "edge " + table_.label(u) + "-" + table_.label(v) + " given twice");
    }
    adj_[u].set(v);
    adj_[v].set(u);
}

std::size_t Graph::size() const {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.count();
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < order(); ++u) {
        adj_[u].for_each([&](std::size_t v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

bool Graph::operator==(const Graph& o) const {
    if (order() != o.order()) return false;
    std::vector<std::size_t> to(order());
    for (std::size_t v = 0; v < order(); ++v) {
        const auto j = o.table_.find(table_.label(v));
        if (!j) return false;
        to[v] = *j;
    }
    if (size() != o.size()) return false;
    for (const auto& [u, v] : edges()) {
        if (!o.has_edge(to[u], to[v])) return false;
    }
    return true;
}

Graph parse_graph(std::string_view text) {
    ElementTable table;
    struct PendingEdge {
        std::size_t u, v, line;
    };
    std::vector<PendingEdge> pending;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::pair<std::string_view, std::size_t>> tokens;
        for (std::size_t i = 0; i < line.size();) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) tokens.emplace_back(line.substr(start, i - start), start + 1);
        }
        if (tokens.empty()) continue;
        auto where = [&](std::size_t col) {
            return "line " + std::to_string(line_no) + ", column " + std::to_string(col);
        };
        const auto [kind, col] = tokens.front();
        if (kind == "v") {
            for (std::size_t t = 1; t < tokens.size(); ++t) table.intern(tokens[t].first);
        } else if (kind == "e") {
            if (tokens.size() != 3) throw Error(Errc::ParseError, where(col) + ": edge line needs exactly two labels");
            const std::size_t u = table.intern(tokens[1].first);
            const std::size_t v = table.intern(tokens[2].first);
            if (u == v) throw Error(Errc::SelfLoop, where(tokens[2].second) + ": self-loop at '" + table.label(u) + "'");
            pending.push_back({u, v, line_no});
        } else {
            throw Error(Errc::ParseError, where(col) + ": expected 'v' or 'e', got '" + std::string(kind) + "'");
        }
    }
    Graph g(table);
    for (const auto& e : pending) {
        if (g.has_edge(e.u, e.v)) {
            throw Error(Errc::DuplicateEdge, "line " + std::to_string(e.line) + ": edge " + table.label(e.u) + "-" +
                                                 table.label(e.v) + " given twice");
        }
        g.add_edge(e.u, e.v);
    }
    return g;
}

std::string render_graph(const Graph& graph) {
    std::ostringstream out;
    out << 'v';
    for (const auto& l : graph.table().labels()) out << ' ' << l;
    out << '\n';
    for (const auto& [u, v] : graph.edges()) out << "e " << graph.table().label(u) << ' ' << graph.table().label(v) << '\n';
    return out.str();
}

Graph graph_of(const SetFamily& family) {
    alpha_of(family);
    const ElementSet ground = family.union_all();
    ElementTable table;
    std::vector<std::size_t> to_local(family.table().size(), 0);
    const auto verts = family.table().canonical_indices(ground);
    for (std::size_t i : verts) to_local[i] = table.intern(family.table().label(i));

    Graph g(table);
    for (std::size_t a = 0; a < verts.size(); ++a) {
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            const bool together = std::any_of(family.members().begin(), family.members().end(), [&](const ElementSet& m) {
                return m.test(verts[a]) && m.test(verts[b]);
            });
            if (!together) g.add_edge(to_local[verts[a]], to_local[verts[b]]);
        }
    }
    return g;
}

// ---------------------------------------------------------------- small-graph kernels

namespace {

using Mask = std::uint32_t;

Mask bit(std::size_t v) { return Mask{1} << v; }
std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }
std::size_t lowest(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

Mask all_of(std::size_t n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<Mask> small_adjacency(const Graph& g, std::size_t limit) {
    if (g.order() > limit) {
        throw Error(Errc::TooLarge, "graph has " + std::to_string(g.order()) + " vertices, limit is " +
                                        std::to_string(limit));
    }
    if (g.order() == 0) throw Error(Errc::PreconditionFailed, "graph has no vertices");
    std::vector<Mask> adj(g.order(), 0);
    for (std::size_t v = 0; v < g.order(); ++v) {
        g.neighbours(v).for_each([&](std::size_t u) { adj[v] |= bit(u); });
    }
    return adj;
}

ElementSet to_set(Mask m) {
    ElementSet s;
    for (; m != 0; m &= m - 1) s.set(lowest(m));
    return s;
}

// All maximum independent sets by include/exclude branching with a greedy
// clique-cover bound.
class MaxIndependentSets {
public:
    explicit MaxIndependentSets(const std::vector<Mask>& adj) : adj_(adj) {}

    std::vector<Mask> run() {
        go(0, all_of(adj_.size()), 0);
        return found_;
    }

private:
    std::size_t clique_cover(Mask p) const {
        std::size_t cliques = 0;
        while (p != 0) {
            Mask cand = p & adj_[lowest(p)];
            p &= ~bit(lowest(p));
            while (cand != 0) {
                const std::size_t w = lowest(cand);
                p &= ~bit(w);
                cand &= adj_[w];
            }
            ++cliques;
        }
        return cliques;
    }

    void go(Mask r, Mask p, std::size_t size) {
        if (p == 0) {
            if (size > best_) {
                best_ = size;
                found_.clear();
            }
            if (size == best_) found_.push_back(r);
            return;
        }
        if (size + clique_cover(p) < best_) return;
        const std::size_t v = lowest(p);
        go(r | bit(v), p & ~adj_[v] & ~bit(v), size + 1);
        // Leaving v out only pays off if a neighbour of v can still be taken.
        if ((adj_[v] & p) != 0) go(r, p & ~bit(v), size);
    }

    const std::vector<Mask>& adj_;
    std::size_t best_ = 0;
    std::vector<Mask> found_;
};

class MaxMatching {
public:
    explicit MaxMatching(const std::vector<Mask>& adj) : adj_(adj) {}

    std::vector<std::pair<std::size_t, std::size_t>> run() {
        // Greedy maximal matching seeds the lower bound.
        Mask free = all_of(adj_.size());
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            if (!(free & bit(v))) continue;
            if (Mask c = adj_[v] & free & ~bit(v); c != 0) {
                best_.emplace_back(v, lowest(c));
                free &= ~bit(v) & ~bit(lowest(c));
            }
        }
        go(all_of(adj_.size()));
        return best_;
    }

private:
    // μ ≤ |any vertex cover| and μ ≤ ⌊k/2⌋ over the k non-isolated vertices.
    std::size_t upper(Mask rem) const {
        Mask live = 0;
        for (Mask m = rem; m != 0; m &= m - 1) {
            if (adj_[lowest(m)] & rem) live |= bit(lowest(m));
        }
        std::size_t cover = 0;
        Mask left = live;
        for (;;) {
            std::size_t best_v = 0, best_d = 0;
            for (Mask m = left; m != 0; m &= m - 1) {
                const std::size_t d = popcount(adj_[lowest(m)] & left);
                if (d > best_d) {
                    best_d = d;
                    best_v = lowest(m);
                }
            }
            if (best_d == 0) break;
            left &= ~bit(best_v);
            ++cover;
        }
        return std::min(cover, popcount(live) / 2);
    }

    void go(Mask rem) {
        std::size_t v = adj_.size();
        for (Mask m = rem; m != 0; m &= m - 1) {
            if (adj_[lowest(m)] & rem) {
                v = lowest(m);
                break;
            }
        }
        if (v == adj_.size()) {
            if (cur_.size() > best_.size()) best_ = cur_;
            return;
        }
        if (cur_.size() + upper(rem) <= best_.size()) return;
        for (Mask c = adj_[v] & rem; c != 0; c &= c - 1) {
            const std::size_t u = lowest(c);
            cur_.emplace_back(v, u);
            go(rem & ~bit(v) & ~bit(u));
            cur_.pop_back();
        }
        go(rem & ~bit(v));
    }

    const std::vector<Mask>& adj_;
    std::vector<std::pair<std::size_t, std::size_t>> cur_, best_;
};

// Augmenting-path matching of every vertex in `left` into `right`.
bool match_into(const std::vector<Mask>& adj, Mask left, Mask right,
                std::vector<std::pair<std::size_t, std::size_t>>& out) {
    if (popcount(left) > popcount(right)) return false;
    std::vector<int> owner(adj.size(), -1);
    std::function<bool(std::size_t, Mask&)> augment = [&](std::size_t l, Mask& seen) {
        for (Mask c = adj[l] & right & ~seen; c != 0; c &= c - 1) {
            const std::size_t r = lowest(c);
            if (seen & bit(r)) continue;
            seen |= bit(r);
            if (owner[r] < 0 || augment(static_cast<std::size_t>(owner[r]), seen)) {
                owner[r] = static_cast<int>(l);
                return true;
            }
        }
        return false;
    };
    for (Mask m = left; m != 0; m &= m - 1) {
        Mask seen = 0;
        if (!augment(lowest(m), seen)) return false;
    }
    out.clear();
    for (Mask m = right; m != 0; m &= m - 1) {
        const std::size_t r = lowest(m);
        if (owner[r] >= 0) out.emplace_back(static_cast<std::size_t>(owner[r]), r);
    }
    std::sort(out.begin(), out.end());
    return true;
}

std::vector<Mask> omega_masks(const std::vector<Mask>& adj) {
    auto sets = MaxIndependentSets(adj).run();
    std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) { return lex_less(to_set(a), to_set(b)); });
    return sets;
}

} // namespace

std::size_t independence_number(const Graph& graph) {
    const auto adj = small_adjacency(graph, kMaxExactVertices);
    return popcount(MaxIndependentSets(adj).run().front());
}

SetFamily max_independent_sets(const Graph& graph) {
    const auto adj = small_adjacency(graph, kMaxExactVertices);
    std::vector<ElementSet> members;
    for (Mask m : omega_masks(adj)) members.push_back(to_set(m));
    return SetFamily(graph.table(), std::move(members));
}

ElementSet corona(const Graph& graph) { return max_independent_sets(graph).union_all(); }

Matching maximum_matching(const Graph& graph) {
    const auto adj = small_adjacency(graph, kMaxExactVertices);
    Matching m;
    for (auto [u, v] : MaxMatching(adj).run()) m.edges.emplace_back(std::min(u, v), std::max(u, v));
    return m;
}

bool is_matching(const Graph& graph, const Matching& m) {
    ElementSet used;
    for (const auto& [u, v] : m.edges) {
        if (u >= graph.order() || v >= graph.order() || !graph.has_edge(u, v)) return false;
        if (used.test(u) || used.test(v)) return false;
        used.set(u);
        used.set(v);
    }
    return true;
}

bool is_ke(const Graph& graph) {
    return independence_number(graph) + maximum_matching(graph).size() == graph.order();
}

TheoremKeVerdict is_ke_via_theorem(const Graph& graph) {
    const auto adj = small_adjacency(graph, kMaxTheoremVertices);
    const auto omega = omega_masks(adj);
    const std::size_t alpha = popcount(omega.front());
    const std::size_t n = graph.order();
    const Mask everything = all_of(n);
    TheoremKeVerdict verdict;
    // An hke Γ has |⋃Γ| + |⋂Γ| = 2α, so V − ⋃Γ fits into ⋂Γ only if n ≤ 2α.
    if (n > 2 * alpha) return verdict;

    std::vector<ElementSet> gamma;
    std::vector<std::size_t> positions;
    auto test = [&]() {
        Mask u = 0, x = everything;
        for (std::size_t p : positions) {
            u |= omega[p];
            x &= omega[p];
        }
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        if (!match_into(adj, everything & ~u, x, pairs)) return false;
        verdict.holds = true;
        verdict.gamma = positions;
        std::sort(verdict.gamma.begin(), verdict.gamma.end());
        verdict.gamma_union = to_set(u);
        verdict.gamma_intersection = to_set(x);
        verdict.matching.edges = std::move(pairs);
        return true;
    };
    // Leaves in increasing mask order: bit b-1 is decided before bit b-2,
    // "absent" before "present".
    std::function<bool(std::size_t)> explore = [&](std::size_t b) {
        if (b == 0) return test();
        if (explore(b - 1)) return true;
        const ElementSet d = to_set(omega[b - 1]);
        if (detail::can_add_unchecked(gamma, 0, d, alpha, n)) {
            gamma.push_back(d);
            positions.push_back(b - 1);
            const bool hit = explore(b - 1);
            gamma.pop_back();
            positions.pop_back();
            if (hit) return true;
        }
        return false;
    };
    for (std::size_t top = 0; top < omega.size(); ++top) {
        gamma.assign(1, to_set(omega[top]));
        positions.assign(1, top);
        if (explore(top)) return verdict;
    }
    return verdict;
}

bool omega_is_hke(const Graph& graph) {
    if (graph.order() > kMaxTheoremVertices) throw Error(Errc::TooLarge, "omega_is_hke supports at most 16 vertices");
    const SetFamily omega = max_independent_sets(graph);
    if (omega.size() <= kMaxEnumeratedMembers) return check_hke_definition(omega).holds;
    return is_hke(omega);
}

bool is_well_covered(const Graph& graph) {
    const auto adj = small_adjacency(graph, kMaxExactVertices);
    const std::size_t n = adj.size();
    const std::size_t alpha = popcount(MaxIndependentSets(adj).run().front());
    std::vector<Mask> co(n);
    for (std::size_t v = 0; v < n; ++v) co[v] = all_of(n) & ~adj[v] & ~bit(v);

    // Bron–Kerbosch with pivoting over the complement: maximal independent sets.
    std::function<bool(std::size_t, Mask, Mask)> all_maximum = [&](std::size_t r, Mask p, Mask x) {
        if (p == 0 && x == 0) return r == alpha;
        std::size_t pivot = lowest(p | x), best = 0;
        for (Mask m = p | x; m != 0; m &= m - 1) {
            if (const std::size_t d = popcount(p & co[lowest(m)]); d >= best) {
                best = d;
                pivot = lowest(m);
            }
        }
        for (Mask c = p & ~co[pivot]; c != 0; c &= c - 1) {
            const std::size_t v = lowest(c);
            if (!all_maximum(r + 1, p & co[v], x & co[v])) return false;
            p &= ~bit(v);
            x |= bit(v);
        }
        return true;
    };
    return all_maximum(0, all_of(n), 0);
}

bool wellcovered_roundtrip(const Graph& graph) {
    if (!is_well_covered(graph)) throw Error(Errc::PreconditionFailed, "graph is not well-covered");
    const SetFamily omega = max_independent_sets(graph);
    if (omega.union_all() != graph.vertices()) throw Error(Errc::PreconditionFailed, "corona(G) != V(G)");
    return graph_of(omega) == graph;
}

Graph typical_ke_graph(std::size_t alpha) {
    if (alpha < 1 || alpha > 16) throw Error(Errc::AlphaOutOfRange, "typical KE graph needs 1 <= alpha <= 16");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= 2 * alpha; ++i) labels.push_back(std::to_string(i));
    Graph g{ElementTable(labels)};
    for (std::size_t i = 0; i < alpha; ++i) g.add_edge(i, i + alpha);
    return g;
}

bool bipartite_check_and_theorem(const Graph& graph) {
    if (graph.order() > kMaxTheoremVertices) {
        throw Error(Errc::TooLarge, "bipartite check supports at most 16 vertices");
    }
    const SetFamily omega = max_independent_sets(graph);
    if (omega.union_all() != graph.vertices()) throw Error(Errc::PreconditionFailed, "corona(G) != V(G)");

    // αK2 is exactly the graph in which every vertex has degree one.
    bool graph_side = true;
    for (std::size_t v = 0; v < graph.order(); ++v) graph_side = graph_side && graph.neighbours(v).count() == 1;

    const std::size_t alpha = omega[0].count();
    const bool family_side = is_hke(omega) && alpha < 63 && omega.size() == (std::size_t{1} << alpha);
    if (graph_side != family_side) {
        throw Error(Errc::TheoremViolation, "perfect-matching test and maximal-hke test of Omega disagree");
    }
    return graph_side;
}

// ---------------------------------------------------------------- old-sense KE

namespace {

// Injective map of ⋃F into 0..2α-1 such that no member image holds both i and i+α.
bool embed_in_typical(const SetFamily& family, std::size_t alpha, std::vector<std::size_t>& image) {
    const auto elems = family.union_all().indices();
    if (elems.size() > 2 * alpha) return false;
    image.assign(family.table().size(), 0);
    std::vector<bool> used(2 * alpha, false);
    std::vector<ElementSet> partial(family.size());

    std::function<bool(std::size_t)> place = [&](std::size_t k) {
        if (k == elems.size()) return true;
        const std::size_t x = elems[k];
        for (std::size_t t = 0; t < 2 * alpha; ++t) {
            if (used[t]) continue;
            const std::size_t dual = t < alpha ? t + alpha : t - alpha;
            bool ok = true;
            for (std::size_t j = 0; j < family.size() && ok; ++j) {
                ok = !(family[j].test(x) && partial[j].test(dual));
            }
            if (!ok) continue;
            used[t] = true;
            image[x] = t;
            for (std::size_t j = 0; j < family.size(); ++j) {
                if (family[j].test(x)) partial[j].set(t);
            }
            if (place(k + 1)) return true;
            for (std::size_t j = 0; j < family.size(); ++j) {
                if (family[j].test(x)) partial[j].reset(t);
            }
            used[t] = false;
        }
        return false;
    };
    return place(0);
}

bool members_in(const SetFamily& family, const SetFamily& omega) {
    const auto have = omega.as_labels();
    for (const auto& m : family.as_labels()) {
        if (std::find(have.begin(), have.end(), m) == have.end()) return false;
    }
    return true;
}

} // namespace

OldKeReport old_ke_report(const SetFamily& family) {
    OldKeReport report;
    if (irrelevant_pair(family)) return report; // none of the four can hold
    const std::size_t alpha = family[0].count();
    const ElementSet ground = family.union_all();
    if (alpha > 4 || ground.count() > 12) {
        throw Error(Errc::TooLarge, "old-sense KE comparison needs alpha <= 4 and |union| <= 12");
    }
    const std::size_t twice = ground.count() + family.intersection_all().count();

    report.hke = check_hke_definition(family).holds;

    std::vector<std::size_t> image;
    report.embeds_in_typical = embed_in_typical(family, alpha, image);
    if (report.embeds_in_typical) {
        // Typical KE graph with the embedded elements carrying their own labels.
        ElementTable names = family.table();
        std::vector<std::string> labels(2 * alpha);
        std::vector<bool> taken(2 * alpha, false);
        ground.for_each([&](std::size_t x) {
            labels[image[x]] = family.table().label(x);
            taken[image[x]] = true;
            report.embedding.emplace_back(family.table().label(x), std::to_string(image[x] + 1));
        });
        for (std::size_t t = 0; t < 2 * alpha; ++t) {
            if (!taken[t]) labels[t] = names.label(names.add_fresh(1).lowest());
        }
        Graph g{ElementTable(labels)};
        for (std::size_t i = 0; i < alpha; ++i) g.add_edge(i, i + alpha);
        const bool inside = members_in(family, max_independent_sets(g));
        report.in_omega_of_ke_graph = inside && is_ke(g);
        report.old_sense_ke = inside && twice == 2 * independence_number(g);
    } else {
        // No witness from the embedding; search graphs on ⋃F whose edges avoid
        // every co-member pair (a requirement of F ⊆ Ω(G)).
        const Graph top = graph_of(family);
        const auto candidates = top.edges();
        if (candidates.size() <= 12) {
            for (std::uint32_t pick = 0; pick < (1U << candidates.size()); ++pick) {
                Graph g(top.table());
                for (std::size_t k = 0; k < candidates.size(); ++k) {
                    if ((pick >> k) & 1U) g.add_edge(candidates[k].first, candidates[k].second);
                }
                ++report.graphs_searched;
                if (!members_in(family, max_independent_sets(g))) continue;
                if (is_ke(g)) report.in_omega_of_ke_graph = true;
                if (twice == 2 * independence_number(g)) report.old_sense_ke = true;
            }
        }
    }
    return report;
}

bool old_ke_equivalence(const SetFamily& family) {
    const OldKeReport r = old_ke_report(family);
    if (r.hke != r.embeds_in_typical || r.hke != r.in_omega_of_ke_graph || r.hke != r.old_sense_ke) {
        throw Error(Errc::TheoremViolation, "the four old-sense KE conditions disagree");
    }
    return r.hke;
}

} // namespace hke
