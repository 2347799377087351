#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "colorfix/cycles.hpp"
#include "colorfix/graph.hpp"

namespace colorfix {

// Combinatorial planar embedding: a rotation system (cyclic neighbor order
// per vertex) plus the face walks it induces. A face walk [v0,...,vL-1]
// stands for the directed edges (v0,v1),...,(vL-1,v0); every edge appears
// in exactly two walks, once per direction.
struct Embedding {
    std::vector<std::vector<int>> rotation;
    std::vector<std::vector<int>> faces;

    int face_count() const { return static_cast<int>(faces.size()); }
};

namespace planar_detail {

// Blocks (biconnected components) as edge lists, by DFS lowpoint.
inline std::vector<std::vector<std::pair<int, int>>> blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<std::pair<int, int>>> out;
    int timer = 0;

    auto dfs = [&](auto&& self, int u, int parent) -> void {
        disc[u] = low[u] = timer++;
        for (int v : set_vertices(g.neighbors(u))) {
            if (v == parent) {
                parent = -1;  // skip the tree edge once; simple graphs have no parallels
                continue;
            }
            if (disc[v] == -1) {
                stack.emplace_back(u, v);
                self(self, v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    std::vector<std::pair<int, int>> comp;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        comp.push_back(e);
                        if (e == std::make_pair(u, v)) break;
                    }
                    out.push_back(std::move(comp));
                }
            } else if (disc[v] < disc[u]) {
                stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };

    for (int s = 0; s < n; ++s)
        if (disc[s] == -1) dfs(dfs, s, -1);
    return out;
}

// Demoucron-Malgrange-Pertuiset embedding of one biconnected block:
// start from a cycle, then repeatedly route a path of some unembedded
// fragment through a face containing all of the fragment's attachments.
// Faces of a biconnected plane graph are simple cycles, which keeps the
// face representation a plain vertex list.
struct DmpResult {
    bool planar = false;
    std::vector<std::vector<int>> faces;
};

inline DmpResult dmp_embed_block(const Graph& g, const std::vector<std::pair<int, int>>& block) {
    DmpResult res;
    std::vector<vertex_set> adj(static_cast<size_t>(g.vertex_count()), 0);
    vertex_set verts = 0;
    int m = static_cast<int>(block.size());
    for (auto [u, v] : block) {
        adj[u] |= vbit(v);
        adj[v] |= vbit(u);
        verts |= vbit(u) | vbit(v);
    }
    int nb = set_size(verts);
    if (m > 3 * nb - 6) return res;  // Euler bound; also caps the work below

    // Initial cycle: recursive DFS from the least vertex; in an undirected
    // DFS every non-tree edge runs to an ancestor, so the first one found
    // closes a cycle along the parent chain.
    std::vector<int> cyc;
    {
        std::vector<int> parent(static_cast<size_t>(g.vertex_count()), -2);
        std::vector<int> depth(static_cast<size_t>(g.vertex_count()), 0);
        int root = lowest_vertex(verts);
        parent[root] = -1;
        int back_u = -1, back_v = -1;
        auto dfs = [&](auto&& self, int u) -> bool {
            for (int v : set_vertices(adj[u])) {
                if (v == parent[u]) continue;
                if (parent[v] != -2) {
                    if (depth[v] < depth[u]) {
                        back_u = u;
                        back_v = v;
                        return true;
                    }
                    continue;
                }
                parent[v] = u;
                depth[v] = depth[u] + 1;
                if (self(self, v)) return true;
            }
            return false;
        };
        dfs(dfs, root);
        cyc.push_back(back_u);
        for (int x = back_u; x != back_v;) {
            x = parent[x];
            cyc.push_back(x);
        }
    }

    std::vector<std::vector<int>> faces = {cyc, {cyc[0]}};
    for (size_t i = cyc.size(); i-- > 1;) faces[1].push_back(cyc[i]);
    std::vector<vertex_set> face_mask = {make_set(faces[0]), make_set(faces[1])};

    vertex_set in_h = make_set(cyc);
    std::vector<vertex_set> emb(static_cast<size_t>(g.vertex_count()), 0);
    auto embed_edge = [&](int u, int v) {
        emb[u] |= vbit(v);
        emb[v] |= vbit(u);
    };
    int embedded = static_cast<int>(cyc.size());
    for (size_t i = 0; i < cyc.size(); ++i)
        embed_edge(cyc[i], cyc[(i + 1) % cyc.size()]);

    struct Fragment {
        vertex_set attachments = 0;
        vertex_set interior = 0;  // empty for a chord
        int cu = -1, cv = -1;     // chord endpoints
    };

    while (embedded < m) {
        // Fragments: chords between embedded vertices, then bridge
        // components of unembedded vertices, both in id order.
        std::vector<Fragment> frags;
        for (int u : set_vertices(verts & in_h)) {
            for (int v : set_vertices(adj[u] & in_h & ~emb[u] & ~full_set(u + 1))) {
                Fragment f;
                f.attachments = vbit(u) | vbit(v);
                f.cu = u;
                f.cv = v;
                frags.push_back(f);
            }
        }
        vertex_set outside = verts & ~in_h;
        while (outside) {
            int s = lowest_vertex(outside);
            vertex_set comp = vbit(s), frontier = vbit(s);
            while (frontier) {
                vertex_set next = 0;
                for (int v : set_vertices(frontier)) next |= adj[v] & ~in_h;
                frontier = next & ~comp;
                comp |= frontier;
            }
            Fragment f;
            f.interior = comp;
            for (int v : set_vertices(comp)) f.attachments |= adj[v] & in_h;
            frags.push_back(f);
            outside &= ~comp;
        }

        // Admissible faces per fragment; any fragment without one kills
        // planarity, a fragment with exactly one is forced. When every
        // fragment has two or more choices, any fragment and any admissible
        // face preserve extendability, so take the first.
        std::vector<int> first_face(frags.size(), -1);
        std::vector<int> adm_count(frags.size(), 0);
        for (size_t i = 0; i < frags.size(); ++i) {
            for (size_t f = 0; f < faces.size(); ++f) {
                if ((frags[i].attachments & ~face_mask[f]) == 0) {
                    if (first_face[i] < 0) first_face[i] = static_cast<int>(f);
                    ++adm_count[i];
                }
            }
            if (adm_count[i] == 0) return res;
        }
        int chosen = 0;
        for (size_t i = 0; i < frags.size(); ++i) {
            if (adm_count[i] == 1) {
                chosen = static_cast<int>(i);
                break;
            }
        }
        int chosen_face = first_face[static_cast<size_t>(chosen)];
        const Fragment& fr = frags[static_cast<size_t>(chosen)];

        // Path through the fragment between two distinct attachments.
        std::vector<int> path;
        if (fr.cu >= 0) {
            path = {fr.cu, fr.cv};
        } else {
            int a = lowest_vertex(fr.attachments);
            std::vector<int> parent(static_cast<size_t>(g.vertex_count()), -2);
            std::vector<int> queue = {a};
            parent[a] = -1;
            int hit = -1;
            for (size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
                int u = queue[qi];
                vertex_set targets = adj[u] & fr.attachments & ~vbit(a);
                if (u != a && targets) {
                    hit = lowest_vertex(targets);
                    path.push_back(hit);
                    for (int x = u; x != -1; x = parent[x]) path.push_back(x);
                    std::reverse(path.begin(), path.end());
                    break;
                }
                for (int v : set_vertices(adj[u] & fr.interior)) {
                    if (parent[v] == -2) {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
        }

        // Split the face along the path.
        std::vector<int>& face = faces[static_cast<size_t>(chosen_face)];
        int a = path.front(), b = path.back();
        size_t ia = 0, ib = 0;
        for (size_t i = 0; i < face.size(); ++i) {
            if (face[i] == a) ia = i;
            if (face[i] == b) ib = i;
        }
        std::vector<int> arc1, arc2;
        for (size_t i = ia;; i = (i + 1) % face.size()) {
            arc1.push_back(face[i]);
            if (i == ib) break;
        }
        for (size_t i = ib;; i = (i + 1) % face.size()) {
            arc2.push_back(face[i]);
            if (i == ia) break;
        }
        std::vector<int> f1 = arc1, f2 = arc2;
        for (size_t i = path.size() - 1; i-- > 1;) f1.push_back(path[i]);
        for (size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);

        faces[static_cast<size_t>(chosen_face)] = f1;
        faces.push_back(f2);
        face_mask[static_cast<size_t>(chosen_face)] = make_set(f1);
        face_mask.push_back(make_set(f2));

        for (size_t i = 0; i + 1 < path.size(); ++i) embed_edge(path[i], path[i + 1]);
        embedded += static_cast<int>(path.size()) - 1;
        for (size_t i = 1; i + 1 < path.size(); ++i) in_h |= vbit(path[i]);
    }

    res.planar = true;
    res.faces = std::move(faces);
    return res;
}

// Rotation system of one block from its face set. In the convention used
// throughout, the walk successor of directed edge (u,v) is (v, sigma_v(u)),
// so each face corner (u,v,w) pins sigma_v(u) = w.
inline void block_rotations(const std::vector<std::vector<int>>& faces, int n,
                            std::vector<std::vector<int>>& rotation) {
    std::vector<std::vector<std::pair<int, int>>> sigma(static_cast<size_t>(n));
    for (const auto& f : faces) {
        size_t L = f.size();
        for (size_t i = 0; i < L; ++i) {
            int u = f[i], v = f[(i + 1) % L], w = f[(i + 2) % L];
            sigma[v].emplace_back(u, w);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (sigma[v].empty()) continue;
        std::sort(sigma[v].begin(), sigma[v].end());
        int start = sigma[v][0].first;
        std::vector<int> order;
        int cur = start;
        do {
            order.push_back(cur);
            auto it = std::lower_bound(sigma[v].begin(), sigma[v].end(),
                                       std::make_pair(cur, -1));
            cur = it->second;
        } while (cur != start);
        rotation[v].insert(rotation[v].end(), order.begin(), order.end());
    }
}

inline std::vector<std::vector<int>> trace_faces(const std::vector<std::vector<int>>& rotation) {
    int n = static_cast<int>(rotation.size());
    std::vector<std::vector<int>> pos(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n), -1));
    for (int v = 0; v < n; ++v)
        for (size_t i = 0; i < rotation[v].size(); ++i) pos[v][rotation[v][i]] = static_cast<int>(i);

    std::vector<std::vector<char>> used(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) used[v].assign(rotation[v].size(), 0);

    std::vector<std::vector<int>> faces;
    for (int u = 0; u < n; ++u) {
        for (size_t i = 0; i < rotation[u].size(); ++i) {
            if (used[u][i]) continue;
            std::vector<int> walk;
            int cu = u, cv = rotation[u][i];
            while (true) {
                used[cu][static_cast<size_t>(pos[cu][cv])] = 1;
                walk.push_back(cu);
                int next = rotation[cv][(static_cast<size_t>(pos[cv][cu]) + 1) % rotation[cv].size()];
                cu = cv;
                cv = next;
                if (cu == u && cv == rotation[u][i]) break;
            }
            faces.push_back(std::move(walk));
        }
    }
    return faces;
}

}  // namespace planar_detail

// Deterministic planarity test: per-block DMP path insertion.
inline bool is_planar(const Graph& g) {
    for (const auto& block : planar_detail::blocks(g)) {
        if (block.size() <= 2) continue;
        if (!planar_detail::dmp_embed_block(g, block).planar) return false;
    }
    return true;
}

struct KuratowskiWitness {
    KuratowskiKind kind;
    std::vector<std::pair<int, int>> edges;
};

// For a non-planar graph, an edge-minimal non-planar subgraph, which by
// Kuratowski's theorem is a K5 or K3,3 subdivision. A single descending
// pass suffices: once an edge becomes critical it stays critical.
inline KuratowskiWitness kuratowski_witness(const Graph& g) {
    if (is_planar(g)) throw domain_error("kuratowski_witness: graph is planar");
    Graph h = g;
    std::vector<std::pair<int, int>> es = h.edges();
    for (auto it = es.rbegin(); it != es.rend(); ++it) {
        Graph cand = h.without_edge(it->first, it->second);
        if (!is_planar(cand)) h = cand;
    }
    // A K5 subdivision has exactly five degree-4 branch vertices; a K3,3
    // subdivision has six of degree 3 and none of degree 4.
    int branch4 = 0;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == 4) ++branch4;
    KuratowskiKind kind = (branch4 == 5) ? KuratowskiKind::k5 : KuratowskiKind::k33;
    return KuratowskiWitness{kind, h.edges()};
}

// Planar embedding of a connected graph: DMP faces per block, block
// rotations spliced at cut vertices, faces re-traced from the result.
inline Embedding embed(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw domain_error("embed: empty graph");
    if (!g.is_connected()) throw domain_error("embed: graph must be connected");
    if (!is_planar(g)) {
        KuratowskiWitness w = kuratowski_witness(g);
        throw nonplanar_error("embed: graph is not planar", w.kind, w.edges);
    }

    Embedding e;
    e.rotation.assign(static_cast<size_t>(n), {});
    if (n == 1) {
        e.faces = {{0}};  // the lone vertex sits in the single face
        return e;
    }

    for (const auto& block : planar_detail::blocks(g)) {
        if (block.size() == 1) {
            auto [u, v] = block[0];
            e.rotation[u].push_back(v);
            e.rotation[v].push_back(u);
        } else {
            auto r = planar_detail::dmp_embed_block(g, block);
            planar_detail::block_rotations(r.faces, n, e.rotation);
        }
    }
    e.faces = planar_detail::trace_faces(e.rotation);

    long f = e.face_count();
    if (n - g.edge_count() + f != 2)
        throw domain_error("embed: internal error, Euler check failed");
    return e;
}

// The two sides of a cycle under an embedding. Sides are an unordered
// pair; side_a is the one holding the smallest off-cycle vertex.
struct SideClassification {
    vertex_set on = 0;
    vertex_set side_a = 0;
    vertex_set side_b = 0;
};

inline SideClassification cycle_sides(const Graph& g, const Embedding& emb, const CycleRef& x) {
    if (!is_cycle_of(g, x)) throw domain_error("cycle_sides: not a cycle of the graph");
    int n = g.vertex_count();

    std::vector<std::vector<int>> face_of(static_cast<size_t>(n),
                                          std::vector<int>(static_cast<size_t>(n), -1));
    for (size_t f = 0; f < emb.faces.size(); ++f) {
        const auto& walk = emb.faces[f];
        if (walk.size() < 2) continue;
        for (size_t i = 0; i < walk.size(); ++i)
            face_of[walk[i]][walk[(i + 1) % walk.size()]] = static_cast<int>(f);
    }

    vertex_set on = x.vertex_mask();
    std::vector<char> cyc_edge(static_cast<size_t>(n * n), 0);
    for (int i = 0; i < x.length(); ++i) {
        int u = x.vertices[i], v = x.vertices[(i + 1) % x.length()];
        cyc_edge[static_cast<size_t>(u * n + v)] = cyc_edge[static_cast<size_t>(v * n + u)] = 1;
    }

    // Union faces across every edge not on the cycle; the cycle's Jordan
    // curve is what remains to separate the two groups.
    std::vector<int> parent(emb.faces.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (auto [u, v] : g.edges()) {
        if (cyc_edge[static_cast<size_t>(u * n + v)]) continue;
        int fa = find(face_of[u][v]), fb = find(face_of[v][u]);
        parent[fa] = fb;
    }

    std::vector<int> roots;
    for (size_t f = 0; f < emb.faces.size(); ++f) {
        int r = find(static_cast<int>(f));
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    if (roots.size() != 2)
        throw domain_error("cycle_sides: internal error, cycle does not split the embedding in two");

    SideClassification out;
    out.on = on;
    for (int v : set_vertices(g.vertices() & ~on)) {
        int w = lowest_vertex(g.neighbors(v));
        int side = find(face_of[v][w]);
        if (side == roots[0])
            out.side_a |= vbit(v);
        else
            out.side_b |= vbit(v);
    }
    if (out.side_a == 0 || (out.side_b != 0 && lowest_vertex(out.side_b) < lowest_vertex(out.side_a)))
        std::swap(out.side_a, out.side_b);
    return out;
}

// Def-1 adjaceability, decided through the planarity of g + uv.
inline bool adjaceable(const Graph& g, int u, int v) {
    if (u == v) throw domain_error("adjaceable: vertices must differ");
    if (!is_planar(g)) throw domain_error("adjaceable: host graph must be planar");
    if (g.has_edge(u, v)) return false;
    return is_planar(g.with_edge(u, v));
}

// Structural check results used by the audit harness.
struct StructuralCheck {
    long instances = 0;
    std::vector<std::string> violations;
};

// For every cycle: at most two common neighbors, and two common neighbors
// must land on opposite sides of the cycle.
inline StructuralCheck theorem1_check(const Graph& g, int max_len = -1) {
    if (!is_planar(g)) throw domain_error("theorem1_check: graph must be planar");
    Embedding emb = embed(g);
    StructuralCheck out;
    for (const CycleRef& x : enumerate_cycles(g, max_len)) {
        ++out.instances;
        vertex_set u = common_neighbors(g, x.vertex_mask());
        int cnt = set_size(u);
        if (cnt > 2) {
            out.violations.push_back("cycle " + x.to_string() + " has " + std::to_string(cnt) +
                                     " common neighbors");
            continue;
        }
        if (cnt == 2) {
            SideClassification sides = cycle_sides(g, emb, x);
            std::vector<int> pq = set_vertices(u);
            bool split = (set_contains(sides.side_a, pq[0]) && set_contains(sides.side_b, pq[1])) ||
                         (set_contains(sides.side_b, pq[0]) && set_contains(sides.side_a, pq[1]));
            if (!split)
                out.violations.push_back("cycle " + x.to_string() + " has common neighbors " +
                                         std::to_string(pq[0]) + "," + std::to_string(pq[1]) +
                                         " on the same side");
        }
    }
    return out;
}

// For cycles X, Y with a vertex off both but adjacent to all of both, Y's
// off-X vertices may not straddle the two sides of X. On-X vertices of Y
// are side-neutral since the cycles may intersect.
inline StructuralCheck theorem2_check(const Graph& g, int max_len = -1) {
    if (!is_planar(g)) throw domain_error("theorem2_check: graph must be planar");
    Embedding emb = embed(g);
    StructuralCheck out;
    std::vector<CycleRef> cycles = enumerate_cycles(g, max_len);
    std::vector<vertex_set> universal(cycles.size());
    for (size_t i = 0; i < cycles.size(); ++i)
        universal[i] = common_neighbors(g, cycles[i].vertex_mask());

    std::vector<char> have_sides(cycles.size(), 0);
    std::vector<SideClassification> sides(cycles.size());
    auto side_of = [&](size_t i) -> const SideClassification& {
        if (!have_sides[i]) {
            sides[i] = cycle_sides(g, emb, cycles[i]);
            have_sides[i] = 1;
        }
        return sides[i];
    };

    auto check_one = [&](size_t xi, size_t yi, int w) {
        ++out.instances;
        const SideClassification& sc = side_of(xi);
        vertex_set y_off = cycles[yi].vertex_mask() & ~sc.on;
        if ((y_off & sc.side_a) && (y_off & sc.side_b))
            out.violations.push_back("vertex " + std::to_string(w) + " sees cycles " +
                                     cycles[xi].to_string() + " and " + cycles[yi].to_string() +
                                     " yet the second straddles the first");
    };

    for (size_t i = 0; i < cycles.size(); ++i) {
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            vertex_set both = universal[i] & universal[j] & ~cycles[i].vertex_mask() &
                              ~cycles[j].vertex_mask();
            for (int w : set_vertices(both)) {
                check_one(i, j, w);
                check_one(j, i, w);
            }
        }
    }
    return out;
}

}  // namespace colorfix
