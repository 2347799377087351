#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "colorfix/graph.hpp"

namespace colorfix {

inline Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g = g.with_edge(u, v);
    return g;
}

inline Graph make_cycle(int n) {
    if (n < 3) throw domain_error("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g = g.with_edge(v, (v + 1) % n);
    return g;
}

// Rim 0..rim_len-1, hub rim_len.
inline Graph make_wheel(int rim_len) {
    if (rim_len < 3) throw domain_error("wheel rim needs at least 3 vertices");
    Graph g(rim_len + 1);
    for (int v = 0; v < rim_len; ++v) {
        g = g.with_edge(v, (v + 1) % rim_len);
        g = g.with_edge(v, rim_len);
    }
    return g;
}

inline Graph make_k4_minus_e() { return make_complete(4).without_edge(2, 3); }

inline Graph make_k5_minus_e() { return make_complete(5).without_edge(3, 4); }

// The six-vertex fixture a..f -> 0..5 with a K4 on {a,b,c,d} and the
// triangle {c,e,f} plus d adjacent to e and f. It has exactly two
// 4-colorings, which differ only by swapping e and f.
inline Graph make_fig6() {
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                     {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

// Chain of m K5-minus-an-edge units glued at shared vertex nodes:
// vertex nodes v_0..v_m are 0..m, triangle T_i occupies
// m+1+3(i-1) .. m+3i-1, and v_{i-1}, v_i are both adjacent to all of T_i.
inline Graph make_cf_chain(int m) {
    if (m < 1) throw domain_error("cf_chain needs at least one unit");
    Graph g(4 * m + 1);
    for (int i = 1; i <= m; ++i) {
        int t0 = m + 1 + 3 * (i - 1);
        g = g.with_edge(t0, t0 + 1).with_edge(t0, t0 + 2).with_edge(t0 + 1, t0 + 2);
        for (int d = 0; d < 3; ++d) {
            g = g.with_edge(i - 1, t0 + d);
            g = g.with_edge(i, t0 + d);
        }
    }
    return g;
}

// One central vertex node (0) fixing `fan` disjoint triangles, each triangle
// also fixed by its own outer vertex node.
inline Graph make_branch_chain(int fan) {
    if (fan < 1) throw domain_error("branch_chain needs at least one triangle");
    Graph g(1 + 4 * fan);
    for (int i = 0; i < fan; ++i) {
        int t0 = 1 + 4 * i;
        int outer = t0 + 3;
        g = g.with_edge(t0, t0 + 1).with_edge(t0, t0 + 2).with_edge(t0 + 1, t0 + 2);
        for (int d = 0; d < 3; ++d) {
            g = g.with_edge(0, t0 + d);
            g = g.with_edge(outer, t0 + d);
        }
    }
    return g;
}

namespace gen_detail {

struct Xorshift64 {
    std::uint64_t state;
    explicit Xorshift64(std::uint64_t seed) : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {
        if (state == 0) state = 0x9e3779b97f4a7c15ULL;
    }
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
};

}  // namespace gen_detail

// Apollonian network: start from K4 and repeatedly pick a triangular face
// (seeded, deterministic) and subdivide it with a new vertex.
inline Graph make_apollonian(int steps, std::uint64_t seed) {
    if (steps < 0) throw domain_error("apollonian steps must be non-negative");
    if (4 + steps > kMaxVertices) throw domain_error("apollonian network too large");
    Graph g = make_complete(4);
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    gen_detail::Xorshift64 rng(seed);
    for (int s = 0; s < steps; ++s) {
        size_t f = static_cast<size_t>(rng.next() % faces.size());
        auto [a, b, c] = faces[f];
        int x = g.vertex_count();
        Graph h(x + 1);
        for (auto [u, v] : g.edges()) h = h.with_edge(u, v);
        g = h.with_edge(x, a).with_edge(x, b).with_edge(x, c);
        faces[f] = {a, b, x};
        faces.push_back({a, c, x});
        faces.push_back({b, c, x});
    }
    return g;
}

// Family expressions: "fig6", "wheel(5)", "apollonian(3,7)", ...
inline Graph generate(const std::string& family_expr) {
    std::string name = family_expr;
    std::vector<long> args;
    if (size_t open = family_expr.find('('); open != std::string::npos) {
        if (family_expr.back() != ')')
            throw domain_error("malformed family expression: " + family_expr);
        name = family_expr.substr(0, open);
        std::string body = family_expr.substr(open + 1, family_expr.size() - open - 2);
        size_t pos = 0;
        while (pos < body.size()) {
            size_t comma = body.find(',', pos);
            size_t end = (comma == std::string::npos) ? body.size() : comma;
            std::string tok = body.substr(pos, end - pos);
            size_t b = tok.find_first_not_of(" \t");
            size_t e = tok.find_last_not_of(" \t");
            if (b == std::string::npos) throw domain_error("empty family parameter in " + family_expr);
            tok = tok.substr(b, e - b + 1);
            try {
                args.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw domain_error("bad family parameter \"" + tok + "\" in " + family_expr);
            }
            pos = (comma == std::string::npos) ? body.size() : comma + 1;
        }
    }

    auto want = [&](size_t k) {
        if (args.size() != k)
            throw domain_error("family " + name + " expects " + std::to_string(k) +
                               " parameter(s), got " + std::to_string(args.size()));
    };

    if (name == "complete") { want(1); return make_complete(static_cast<int>(args[0])); }
    if (name == "cycle") { want(1); return make_cycle(static_cast<int>(args[0])); }
    if (name == "wheel") { want(1); return make_wheel(static_cast<int>(args[0])); }
    if (name == "k4_minus_e") { want(0); return make_k4_minus_e(); }
    if (name == "k5_minus_e") { want(0); return make_k5_minus_e(); }
    if (name == "fig6") { want(0); return make_fig6(); }
    if (name == "cf_chain") { want(1); return make_cf_chain(static_cast<int>(args[0])); }
    if (name == "branch_chain") { want(1); return make_branch_chain(static_cast<int>(args[0])); }
    if (name == "apollonian") {
        if (args.size() == 1) return make_apollonian(static_cast<int>(args[0]), 0);
        want(2);
        return make_apollonian(static_cast<int>(args[0]), static_cast<std::uint64_t>(args[1]));
    }
    throw domain_error("unknown graph family: " + name);
}

}  // namespace colorfix
