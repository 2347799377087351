#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "colorfix/coloring.hpp"
#include "colorfix/cycles.hpp"
#include "colorfix/graph.hpp"

namespace colorfix {

// Color identical pairs: vertices sharing a class in every coloring with
// exactly k classes. Evaluated over partitions, so the result is free of
// color-permutation artifacts, and adjacent pairs can never qualify.
inline std::vector<std::pair<int, int>> ci_pairs(const Graph& g, int k) {
    if (chromatic_number(g) != k)
        throw domain_error("ci_pairs: graph is not " + std::to_string(k) + "-chromatic");
    int n = g.vertex_count();
    std::vector<vertex_set> same(static_cast<size_t>(n), full_set(n));
    for_each_coloring(g, k, [&](const std::vector<vertex_set>& classes) {
        for (vertex_set c : classes)
            for (int v : set_vertices(c)) same[v] &= c;
        return true;
    });
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : set_vertices(same[u] & ~full_set(u + 1)))
            out.emplace_back(u, v);
    return out;
}

// Independent decision procedure for one pair: adding the edge must push
// the chromatic number past k.
inline bool ci_pair_oracle(const Graph& g, int k, int u, int v) {
    if (u == v) throw domain_error("ci_pair_oracle: vertices must differ");
    if (chromatic_number(g) != k)
        throw domain_error("ci_pair_oracle: graph is not " + std::to_string(k) + "-chromatic");
    if (g.has_edge(u, v)) return false;
    return !is_colorable(g.with_edge(u, v), k);
}

// Def-3 color fixation between two disjoint vertex sets: in every coloring
// with exactly k classes, the classes meeting r and the classes meeting s
// are disjoint and together exhaust all k classes.
inline bool is_color_fixed(const Graph& g, int k, vertex_set r, vertex_set s) {
    if (!r || !s) throw domain_error("is_color_fixed: sets must be non-empty");
    if (r & s) throw domain_error("is_color_fixed: sets must be disjoint");
    if ((r | s) & ~g.vertices()) throw domain_error("is_color_fixed: set member out of range");
    if (chromatic_number(g) != k)
        throw domain_error("is_color_fixed: graph is not " + std::to_string(k) + "-chromatic");
    bool fixed = true;
    for_each_coloring(g, k, [&](const std::vector<vertex_set>& classes) {
        std::uint64_t cr = 0, cs = 0;
        for (size_t c = 0; c < classes.size(); ++c) {
            if (classes[c] & r) cr |= std::uint64_t{1} << c;
            if (classes[c] & s) cs |= std::uint64_t{1} << c;
        }
        std::uint64_t all = (classes.size() >= 64) ? ~std::uint64_t{0}
                                                   : (std::uint64_t{1} << classes.size()) - 1;
        if ((cr & cs) != 0 || (cr | cs) != all) {
            fixed = false;
            return false;
        }
        return true;
    });
    return fixed;
}

// Content of the coloring-constraint scope that is pinned rigid: vertices
// whose pinned color, and edges whose pinned color pair, agree across all
// Def-4 labelings for the reference cycle.
struct FixedSet {
    std::vector<std::pair<int, int>> fixed_vertices;  // (vertex, color)
    struct FixedEdge {
        int u, v;                 // u < v
        int color_lo, color_hi;   // unordered pair, sorted
        bool operator==(const FixedEdge&) const = default;
    };
    std::vector<FixedEdge> fixed_edges;
};

inline FixedSet fixed_elements(const Graph& g, const CycleRef& r, int k) {
    std::vector<PinnedLabeling> labs = pinned_labelings(g, r, k);
    FixedSet out;
    if (labs.empty()) return out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = labs[0].color[v];
        bool same = std::all_of(labs.begin(), labs.end(),
                                [&](const PinnedLabeling& l) { return l.color[v] == c; });
        if (same) out.fixed_vertices.emplace_back(v, c);
    }
    for (auto [u, v] : g.edges()) {
        int lo = std::min(labs[0].color[u], labs[0].color[v]);
        int hi = std::max(labs[0].color[u], labs[0].color[v]);
        bool same = std::all_of(labs.begin(), labs.end(), [&](const PinnedLabeling& l) {
            return std::minmax(l.color[u], l.color[v]) == std::minmax(lo, hi);
        });
        if (same) out.fixed_edges.push_back({u, v, lo, hi});
    }
    return out;
}

// Witness for why a pair is color identical: neighbor subsets X of u and
// Y of v, each of size >= k-1, that meet the same k-1 classes in every
// coloring. Searched in ascending size, then lexicographic order, for a
// deterministic minimal witness.
inline std::optional<std::pair<vertex_set, vertex_set>> ci_condition_witness(const Graph& g,
                                                                             int k, int u,
                                                                             int v) {
    std::vector<std::pair<int, int>> pairs = ci_pairs(g, k);
    std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    if (std::find(pairs.begin(), pairs.end(), key) == pairs.end())
        throw domain_error("ci_condition_witness: {" + std::to_string(u) + "," +
                           std::to_string(v) + "} is not a CI pair");

    std::vector<Coloring> colorings = enumerate_colorings(g, k);

    // Signature of a vertex set: per coloring, the bitmask of classes it meets.
    auto signature = [&](vertex_set s, std::vector<std::uint64_t>& sig) {
        sig.clear();
        for (const Coloring& col : colorings) {
            std::uint64_t cm = 0;
            for (size_t c = 0; c < col.classes.size(); ++c)
                if (col.classes[c] & s) cm |= std::uint64_t{1} << c;
            if (std::popcount(cm) != k - 1) return false;
            sig.push_back(cm);
        }
        return true;
    };

    auto subsets_of_size = [](const std::vector<int>& pool, int size) {
        std::vector<vertex_set> out;
        int p = static_cast<int>(pool.size());
        if (size > p) return out;
        std::vector<int> idx(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            vertex_set s = 0;
            for (int i : idx) s |= vbit(pool[i]);
            out.push_back(s);
            int i = size - 1;
            while (i >= 0 && idx[i] == p - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        return out;
    };

    std::vector<int> nu = set_vertices(g.neighbors(u));
    std::vector<int> nv = set_vertices(g.neighbors(v));
    std::vector<std::uint64_t> sig_x, sig_y;
    for (int sx = k - 1; sx <= static_cast<int>(nu.size()); ++sx) {
        for (vertex_set x : subsets_of_size(nu, sx)) {
            if (!signature(x, sig_x)) continue;
            for (int sy = k - 1; sy <= static_cast<int>(nv.size()); ++sy) {
                for (vertex_set y : subsets_of_size(nv, sy)) {
                    if (!signature(y, sig_y)) continue;
                    if (sig_x == sig_y) return std::make_pair(x, y);
                }
            }
        }
    }
    return std::nullopt;
}

// -------- fixation incidence and chains --------

// (vertex, odd cycle) with the vertex off the cycle and adjacent to all of it.
struct FixationPair {
    int vertex;
    CycleRef cycle;
    bool operator==(const FixationPair&) const = default;
    auto operator<=>(const FixationPair&) const = default;
};

struct FixationIncidence {
    std::vector<FixationPair> pairs;  // sorted by (vertex, cycle)
};

inline FixationIncidence fixation_incidence(const Graph& g, int max_cycle_len = -1) {
    FixationIncidence out;
    for (const CycleRef& c : enumerate_cycles(g, max_cycle_len, CycleParity::odd)) {
        for (int v : set_vertices(common_neighbors(g, c.vertex_mask())))
            out.pairs.push_back({v, c});
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

// Alternating sequence of vertex nodes and the odd cycles that fix each
// consecutive pair; extra cycles incident to a vertex node attach as
// branches.
struct CFChain {
    std::vector<int> vertex_nodes;
    std::vector<CycleRef> cycle_nodes;  // one fewer than vertex_nodes
    std::vector<std::pair<int, CycleRef>> branches;

    std::string to_string() const {
        std::string s = std::to_string(vertex_nodes[0]);
        for (size_t i = 0; i < cycle_nodes.size(); ++i)
            s += " -" + cycle_nodes[i].to_string() + "- " + std::to_string(vertex_nodes[i + 1]);
        return s;
    }
};

struct ChainExtraction {
    std::vector<CFChain> chains;
    // Cycles fixing more than two vertices: in a planar host these breach
    // the two-common-neighbor bound, so they are findings, never links.
    std::vector<FixationPair> crowded;
    // Links that would close a chain into a loop.
    std::vector<std::pair<std::pair<int, int>, CycleRef>> loop_links;
};

inline ChainExtraction extract_chains(const FixationIncidence& inc) {
    ChainExtraction out;

    std::map<CycleRef, std::vector<int>> by_cycle;
    for (const FixationPair& p : inc.pairs) by_cycle[p.cycle].push_back(p.vertex);

    struct Link {
        int u, v;
        CycleRef cycle;
    };
    std::vector<Link> links;
    std::map<int, std::vector<size_t>> links_at;
    std::map<int, std::vector<CycleRef>> incident_cycles;
    for (auto& [cycle, vs] : by_cycle) {
        std::sort(vs.begin(), vs.end());
        for (int v : vs) incident_cycles[v].push_back(cycle);
        if (vs.size() == 2) {
            links_at[vs[0]].push_back(links.size());
            links_at[vs[1]].push_back(links.size());
            links.push_back({vs[0], vs[1], cycle});
        } else if (vs.size() > 2) {
            for (int v : vs) out.crowded.push_back({v, cycle});
        }
    }

    // Loop detection: a link inside a cycle of the link multigraph stays
    // connected to itself when removed.
    for (size_t li = 0; li < links.size(); ++li) {
        std::set<int> seen = {links[li].u};
        std::vector<int> todo = {links[li].u};
        bool reach = false;
        while (!todo.empty() && !reach) {
            int x = todo.back();
            todo.pop_back();
            for (size_t lj : links_at[x]) {
                if (lj == li) continue;
                const Link& l = links[lj];
                int y = (l.u == x) ? l.v : l.u;
                if (y == links[li].v) {
                    reach = true;
                    break;
                }
                if (seen.insert(y).second) todo.push_back(y);
            }
        }
        if (reach)
            out.loop_links.push_back({{links[li].u, links[li].v}, links[li].cycle});
    }

    // Maximal simple paths in the link multigraph; chains keep vertex and
    // cycle nodes distinct, so loops are cut open rather than followed.
    // Parallel links are distinct chains, so cycle nodes are part of the key.
    std::set<std::pair<std::vector<int>, std::vector<CycleRef>>> seen_chains;
    auto extendable = [&](const std::vector<size_t>& used, const std::set<int>& on, int end) {
        for (size_t lj : links_at[end]) {
            if (std::find(used.begin(), used.end(), lj) != used.end()) continue;
            int y = (links[lj].u == end) ? links[lj].v : links[lj].u;
            if (!on.count(y)) return true;
        }
        return false;
    };

    std::vector<int> path;
    std::vector<size_t> used_links;
    std::set<int> on_path;
    auto grow = [&](auto&& self) -> void {
        int end = path.back();
        bool extended = false;
        for (size_t lj : links_at[end]) {
            if (std::find(used_links.begin(), used_links.end(), lj) != used_links.end()) continue;
            int y = (links[lj].u == end) ? links[lj].v : links[lj].u;
            if (on_path.count(y)) continue;
            extended = true;
            path.push_back(y);
            used_links.push_back(lj);
            on_path.insert(y);
            self(self);
            on_path.erase(y);
            used_links.pop_back();
            path.pop_back();
        }
        if (!extended && path.size() >= 2 && !extendable(used_links, on_path, path.front())) {
            bool flip = path.back() < path.front();
            std::vector<int> key_nodes = path;
            std::vector<size_t> ordered = used_links;
            if (flip) {
                std::reverse(key_nodes.begin(), key_nodes.end());
                std::reverse(ordered.begin(), ordered.end());
            }
            std::vector<CycleRef> key_cycles;
            for (size_t lj : ordered) key_cycles.push_back(links[lj].cycle);
            if (seen_chains.insert({key_nodes, key_cycles}).second) {
                CFChain chain;
                chain.vertex_nodes = key_nodes;
                chain.cycle_nodes = key_cycles;
                for (int vn : chain.vertex_nodes) {
                    for (const CycleRef& c : incident_cycles[vn]) {
                        bool in_chain = std::find(chain.cycle_nodes.begin(), chain.cycle_nodes.end(),
                                                  c) != chain.cycle_nodes.end();
                        bool is_crowded = by_cycle[c].size() > 2;
                        if (!in_chain && !is_crowded) chain.branches.emplace_back(vn, c);
                    }
                }
                out.chains.push_back(std::move(chain));
            }
        }
    };

    std::vector<int> nodes;
    for (auto& [v, ls] : links_at) nodes.push_back(v);
    for (int s : nodes) {
        path = {s};
        on_path = {s};
        used_links.clear();
        grow(grow);
    }
    std::sort(out.chains.begin(), out.chains.end(), [](const CFChain& a, const CFChain& b) {
        return a.vertex_nodes < b.vertex_nodes;
    });
    return out;
}

}  // namespace colorfix
