#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "colorfix/graph.hpp"

namespace colorfix {

// A simple cycle, stored in canonical orientation: the lexicographically
// least of all rotations and reflections that start at the minimum vertex.
struct CycleRef {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    vertex_set vertex_mask() const { return make_set(vertices); }

    bool operator==(const CycleRef&) const = default;
    auto operator<=>(const CycleRef&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < vertices.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(vertices[i]);
        }
        return s + ")";
    }
};

inline CycleRef canonical_cycle(std::vector<int> vs) {
    auto mn = std::min_element(vs.begin(), vs.end());
    std::rotate(vs.begin(), mn, vs.end());
    if (vs.size() > 2 && vs[1] > vs.back()) {
        std::reverse(vs.begin() + 1, vs.end());
    }
    return CycleRef{std::move(vs)};
}

// Distinct vertices, length >= 3, consecutive pairs adjacent, closing edge present.
inline bool is_cycle_of(const Graph& g, const CycleRef& c) {
    int len = c.length();
    if (len < 3) return false;
    if (set_size(c.vertex_mask()) != len) return false;
    for (int v : c.vertices)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (int i = 0; i < len; ++i)
        if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % len])) return false;
    return true;
}

enum class CycleParity { any, odd };

// All simple cycles of length <= max_len, each once, sorted by vertex
// sequence. Pass max_len = -1 for "all lengths", allowed only for n <= 12
// since cycle counts grow exponentially.
inline std::vector<CycleRef> enumerate_cycles(const Graph& g, int max_len = -1,
                                              CycleParity parity = CycleParity::any) {
    int n = g.vertex_count();
    if (max_len < 0) {
        if (n > 12)
            throw domain_error("enumerate_cycles: explicit max_len required for n > 12");
        max_len = std::max(n, 3);
    }
    if (max_len < 3) throw domain_error("enumerate_cycles: max_len must be at least 3");

    std::vector<CycleRef> out;
    std::vector<int> path;
    vertex_set on_path = 0;

    // Cycles are rooted at their minimum vertex s; all other path vertices
    // stay above s, and requiring path[1] < path.back() picks one of the two
    // orientations, which is exactly the canonical one.
    auto extend = [&](auto&& self, int s) -> void {
        int v = path.back();
        if (static_cast<int>(path.size()) >= 3 && path[1] < v && g.has_edge(v, s)) {
            if (parity == CycleParity::any || (path.size() % 2) == 1)
                out.push_back(CycleRef{path});
        }
        if (static_cast<int>(path.size()) == max_len) return;
        vertex_set cand = g.neighbors(v) & ~on_path & ~full_set(s + 1);
        for (int w : set_vertices(cand)) {
            path.push_back(w);
            on_path |= vbit(w);
            self(self, s);
            on_path &= ~vbit(w);
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path = vbit(s);
        extend(extend, s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace colorfix
