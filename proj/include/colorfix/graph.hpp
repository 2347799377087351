#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "colorfix/errors.hpp"

namespace colorfix {

// Vertex sets are 64-bit masks, which caps graphs at 64 vertices. That is
// far beyond the exhaustive-corpus range this tool works at.
constexpr int kMaxVertices = 64;

using vertex_set = std::uint64_t;

inline vertex_set vbit(int v) { return vertex_set{1} << v; }

inline int set_size(vertex_set s) { return std::popcount(s); }

inline bool set_contains(vertex_set s, int v) { return (s >> v) & 1; }

inline int lowest_vertex(vertex_set s) { return std::countr_zero(s); }

inline std::vector<int> set_vertices(vertex_set s) {
    std::vector<int> out;
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

inline vertex_set make_set(const std::vector<int>& vs) {
    vertex_set s = 0;
    for (int v : vs) {
        if (v < 0 || v >= kMaxVertices)
            throw domain_error("vertex id out of range: " + std::to_string(v));
        s |= vbit(v);
    }
    return s;
}

inline vertex_set full_set(int n) {
    return n == 0 ? 0 : (~vertex_set{0} >> (kMaxVertices - n));
}

// Finite simple undirected graph with dense 0-based vertex ids.
// Immutable value type: edge additions and deletions return new graphs.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
        if (n < 0 || n > kMaxVertices)
            throw domain_error("vertex count out of range: " + std::to_string(n));
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_internal(u, v);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    vertex_set vertices() const { return full_set(n_); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return set_contains(adj_[u], v);
    }

    vertex_set neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return set_size(neighbors(v)); }

    // Edges in lexicographic (u, v) order with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n_; ++u) {
            vertex_set rest = adj_[u] & ~(full_set(u + 1));
            for (int v : set_vertices(rest)) out.emplace_back(u, v);
        }
        return out;
    }

    Graph with_edge(int u, int v) const {
        Graph g = *this;
        g.add_edge_internal(u, v);
        return g;
    }

    Graph without_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        Graph g = *this;
        if (set_contains(g.adj_[u], v)) {
            g.adj_[u] &= ~vbit(v);
            g.adj_[v] &= ~vbit(u);
            --g.m_;
        }
        return g;
    }

    // Subgraph induced on `keep`, with vertices renumbered densely in
    // increasing order of their old ids.
    Graph compacted(vertex_set keep) const {
        std::vector<int> old_ids = set_vertices(keep & vertices());
        std::vector<int> new_id(static_cast<size_t>(n_), -1);
        for (size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<int>(i);
        Graph g(static_cast<int>(old_ids.size()));
        for (int u : old_ids)
            for (int v : set_vertices(adj_[u] & keep))
                if (u < v) g.add_edge_internal(new_id[u], new_id[v]);
        return g;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        vertex_set seen = vbit(0);
        vertex_set frontier = vbit(0);
        while (frontier) {
            vertex_set next = 0;
            for (int v : set_vertices(frontier)) next |= adj_[v];
            frontier = next & ~seen;
            seen |= frontier;
        }
        return seen == vertices();
    }

    std::vector<vertex_set> components() const {
        std::vector<vertex_set> out;
        vertex_set left = vertices();
        while (left) {
            int s = lowest_vertex(left);
            vertex_set comp = vbit(s);
            vertex_set frontier = comp;
            while (frontier) {
                vertex_set next = 0;
                for (int v : set_vertices(frontier)) next |= adj_[v];
                frontier = next & ~comp;
                comp |= frontier;
            }
            out.push_back(comp);
            left &= ~comp;
        }
        return out;
    }

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw domain_error("vertex id out of range: " + std::to_string(v));
    }

    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw domain_error("self-loop at vertex " + std::to_string(u));
        if (!set_contains(adj_[u], v)) {
            adj_[u] |= vbit(v);
            adj_[v] |= vbit(u);
            ++m_;
        }
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<vertex_set> adj_;
};

// Vertices outside `s` adjacent to every member of `s`.
inline vertex_set common_neighbors(const Graph& g, vertex_set s) {
    if (s & ~g.vertices())
        throw domain_error("common_neighbors: set member out of range");
    vertex_set acc = g.vertices();
    for (int v : set_vertices(s)) acc &= g.neighbors(v);
    return acc & ~s;
}

}  // namespace colorfix
