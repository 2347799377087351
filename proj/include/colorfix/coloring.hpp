#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "colorfix/cycles.hpp"
#include "colorfix/graph.hpp"

namespace colorfix {

// A coloring is a proper partition of the vertex set, not a labeling:
// classes are independent sets, listed in order of their minimum member.
struct Coloring {
    std::vector<vertex_set> classes;

    int class_count() const { return static_cast<int>(classes.size()); }

    int class_of(int v) const {
        for (size_t i = 0; i < classes.size(); ++i)
            if (set_contains(classes[i], v)) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const Coloring&) const = default;

    std::string to_string() const {
        std::string s;
        for (vertex_set c : classes) {
            s += "{";
            bool first = true;
            for (int v : set_vertices(c)) {
                if (!first) s += ",";
                s += std::to_string(v);
                first = false;
            }
            s += "}";
        }
        return s;
    }
};

// Backtracking over restricted-growth assignments: vertex v may open class
// j+1 only when classes 1..j are already in use, so every proper partition
// with at most k classes is produced exactly once, classes ordered by
// minimum member. The visitor returns false to stop the enumeration.
template <typename Visitor>
bool for_each_coloring(const Graph& g, int k, Visitor&& visit) {
    if (k < 1) throw domain_error("coloring needs at least one class");
    int n = g.vertex_count();
    std::vector<vertex_set> classes;
    classes.reserve(static_cast<size_t>(std::min(n, k)));

    auto assign = [&](auto&& self, int v) -> bool {
        if (v == n) return visit(static_cast<const std::vector<vertex_set>&>(classes));
        vertex_set nb = g.neighbors(v);
        for (size_t c = 0; c < classes.size(); ++c) {
            if ((classes[c] & nb) == 0) {
                classes[c] |= vbit(v);
                if (!self(self, v + 1)) return false;
                classes[c] &= ~vbit(v);
            }
        }
        if (static_cast<int>(classes.size()) < k) {
            classes.push_back(vbit(v));
            if (!self(self, v + 1)) return false;
            classes.pop_back();
        }
        return true;
    };
    return assign(assign, 0);
}

// All proper partitions with at most k classes, in enumeration order.
inline std::vector<Coloring> enumerate_colorings(const Graph& g, int k) {
    std::vector<Coloring> out;
    for_each_coloring(g, k, [&](const std::vector<vertex_set>& classes) {
        out.push_back(Coloring{classes});
        return true;
    });
    return out;
}

inline bool is_colorable(const Graph& g, int k) {
    if (g.vertex_count() == 0) return true;
    if (k < 1) return false;
    bool found = false;
    for_each_coloring(g, k, [&](const std::vector<vertex_set>&) {
        found = true;
        return false;
    });
    return found;
}

inline int chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (is_colorable(g, k)) return k;
}

// k-chromatic and every edge contributes to the color demand.
inline bool is_k_critical(const Graph& g, int k) {
    if (k < 1) throw domain_error("criticality order must be at least 1");
    if (chromatic_number(g) != k) return false;
    for (auto [u, v] : g.edges())
        if (chromatic_number(g.without_edge(u, v)) != k - 1) return false;
    return true;
}

inline long count_colorings(const Graph& g, int k, long limit = -1) {
    long count = 0;
    for_each_coloring(g, k, [&](const std::vector<vertex_set>&) {
        ++count;
        return limit < 0 || count < limit;
    });
    return count;
}

inline bool is_uniquely_k_colorable(const Graph& g, int k) {
    return count_colorings(g, k, 2) == 1;
}

// Planar 3-tree recognition: repeatedly delete the least degree-3 vertex
// whose neighborhood induces a triangle; accept iff the residue is K3.
// K4 reduces in one step; K3 is accepted as the base triangle.
inline bool is_apollonian(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    std::vector<vertex_set> adj(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    vertex_set alive = g.vertices();

    auto is_triangle_nbhd = [&](vertex_set nb) {
        std::vector<int> t = set_vertices(nb);
        return adj[t[0]] >> t[1] & 1 && adj[t[0]] >> t[2] & 1 && adj[t[1]] >> t[2] & 1;
    };

    while (set_size(alive) > 3) {
        int pick = -1;
        for (int v : set_vertices(alive)) {
            vertex_set nb = adj[v] & alive;
            if (set_size(nb) == 3 && is_triangle_nbhd(nb)) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return false;
        alive &= ~vbit(pick);
    }
    std::vector<int> rest = set_vertices(alive);
    return adj[rest[0]] >> rest[1] & 1 && adj[rest[0]] >> rest[2] & 1 &&
           adj[rest[1]] >> rest[2] & 1;
}

// A labeling pinned to a coloring reference graph: colors 1..k with the
// reference vertices carrying exactly 1..k-1.
struct PinnedLabeling {
    std::vector<int> color;  // per vertex, 1-based

    bool operator==(const PinnedLabeling&) const = default;
};

// Def-4 pinning for k = 4 with an odd cycle as the (k-1)-critical reference.
// Each coloring in which the reference spans exactly k-1 classes yields one
// labeling: those classes take colors 1..k-1 ordered by the least reference
// vertex they contain, the remaining class takes color k. Colorings where
// the reference spans k classes are excluded.
inline std::vector<PinnedLabeling> pinned_labelings(const Graph& g, const CycleRef& r, int k) {
    if (k < 2) throw domain_error("pinning needs at least two colors");
    if (!is_cycle_of(g, r) || r.length() % 2 == 0)
        throw domain_error("reference " + r.to_string() + " is not an odd cycle of the graph");
    if (chromatic_number(g) != k)
        throw domain_error("graph is not " + std::to_string(k) + "-chromatic");

    vertex_set rset = r.vertex_mask();
    std::vector<PinnedLabeling> out;
    for_each_coloring(g, k, [&](const std::vector<vertex_set>& classes) {
        std::vector<std::pair<int, size_t>> ref_classes;  // (least r-vertex, class index)
        std::vector<size_t> rest;
        for (size_t c = 0; c < classes.size(); ++c) {
            vertex_set meet = classes[c] & rset;
            if (meet)
                ref_classes.emplace_back(lowest_vertex(meet), c);
            else
                rest.push_back(c);
        }
        if (static_cast<int>(ref_classes.size()) != k - 1 || rest.size() != 1) return true;
        std::sort(ref_classes.begin(), ref_classes.end());
        PinnedLabeling lab{std::vector<int>(static_cast<size_t>(g.vertex_count()), 0)};
        for (size_t i = 0; i < ref_classes.size(); ++i)
            for (int v : set_vertices(classes[ref_classes[i].second]))
                lab.color[v] = static_cast<int>(i) + 1;
        for (int v : set_vertices(classes[rest[0]])) lab.color[v] = k;
        out.push_back(std::move(lab));
        return true;
    });
    return out;
}

}  // namespace colorfix
