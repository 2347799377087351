#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "colorfix/coloring.hpp"
#include "colorfix/fixation.hpp"
#include "colorfix/generate.hpp"
#include "colorfix/graph.hpp"
#include "colorfix/io.hpp"
#include "colorfix/planarity.hpp"

namespace colorfix {

// -------- corpora --------

namespace audit_detail {

// Canonical form: minimum upper-triangle bit code over all vertex
// permutations, packed most-significant-first in (0,1),(0,2),...,(0,n-1),
// (1,2),... order. Brute force, which is why exhaustive corpora stop at n=7.
inline std::uint64_t canonical_code(const Graph& g) {
    int n = g.vertex_count();
    std::vector<vertex_set> adj(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                code = (code << 1) | ((adj[perm[i]] >> perm[j]) & 1);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
    int bits = n * (n - 1) / 2;
    Graph g(n);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            if ((code >> (bits - 1 - idx)) & 1) g = g.with_edge(i, j);
    return g;
}

// All graphs on n vertices up to isomorphism, by augmenting every
// (n-1)-vertex representative with one new vertex in all 2^(n-1) ways.
inline const std::vector<Graph>& all_graphs_upto_iso(int n) {
    static std::map<int, std::vector<Graph>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    auto build = [&](auto&& self, int k) -> const std::vector<Graph>& {
        if (auto it = cache.find(k); it != cache.end()) return it->second;
        std::vector<Graph> out;
        if (k == 1) {
            out.emplace_back(1);
        } else {
            const std::vector<Graph>& parents = self(self, k - 1);
            std::set<std::uint64_t> codes;
            for (const Graph& p : parents) {
                for (vertex_set mask = 0; mask < vbit(k - 1); ++mask) {
                    Graph child(k);
                    for (auto [u, v] : p.edges()) child = child.with_edge(u, v);
                    for (int v : set_vertices(mask)) child = child.with_edge(v, k - 1);
                    codes.insert(canonical_code(child));
                }
            }
            for (std::uint64_t c : codes) out.push_back(graph_from_code(k, c));
        }
        return cache.emplace(k, std::move(out)).first->second;
    };
    return build(build, n);
}

}  // namespace audit_detail

struct CorpusFilters {
    bool connected = false;
    bool planar = false;
    std::optional<int> chromatic;

    bool pass(const Graph& g) const {
        if (connected && !g.is_connected()) return false;
        if (planar && !is_planar(g)) return false;
        if (chromatic && chromatic_number(g) != *chromatic) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        if (connected) s += " connected";
        if (planar) s += " planar";
        if (chromatic) s += " chromatic=" + std::to_string(*chromatic);
        return s.empty() ? "none" : s.substr(1);
    }
};

struct CorpusSpec {
    enum class Source { exhaustive, ingest, family };
    Source source = Source::exhaustive;
    int n = 0;                          // exhaustive
    std::string path;                   // ingest
    std::vector<std::string> families;  // family expressions
    CorpusFilters filters;

    static CorpusSpec exhaustive(int n) {
        CorpusSpec s;
        s.source = Source::exhaustive;
        s.n = n;
        return s;
    }
    static CorpusSpec ingest(std::string path) {
        CorpusSpec s;
        s.source = Source::ingest;
        s.path = std::move(path);
        return s;
    }
    static CorpusSpec family(std::vector<std::string> families) {
        CorpusSpec s;
        s.source = Source::family;
        s.families = std::move(families);
        return s;
    }

    std::string to_string() const {
        std::string s;
        switch (source) {
            case Source::exhaustive: s = "exhaustive(" + std::to_string(n) + ")"; break;
            case Source::ingest: s = "ingest(" + path + ")"; break;
            case Source::family: {
                s = "family(";
                for (size_t i = 0; i < families.size(); ++i) s += (i ? "," : "") + families[i];
                s += ")";
                break;
            }
        }
        return s;
    }
};

// Deterministic stream of corpus graphs. Exhaustive corpora are the
// connected graphs on n vertices up to isomorphism, ordered by canonical
// code; filters apply in declared order (connected, planar, chromatic).
inline std::vector<Graph> corpus(const CorpusSpec& spec) {
    std::vector<Graph> raw;
    switch (spec.source) {
        case CorpusSpec::Source::exhaustive: {
            if (spec.n < 1 || spec.n > 7)
                throw domain_error("exhaustive corpus is bounded to 1 <= n <= 7, got " +
                                   std::to_string(spec.n));
            for (const Graph& g : audit_detail::all_graphs_upto_iso(spec.n))
                if (g.is_connected()) raw.push_back(g);
            break;
        }
        case CorpusSpec::Source::ingest: {
            std::ifstream in(spec.path);
            if (!in) throw domain_error("cannot open corpus file: " + spec.path);
            std::string line;
            int line_no = 0;
            long offset = 0;
            while (std::getline(in, line)) {
                ++line_no;
                long here = offset;
                offset += static_cast<long>(line.size()) + 1;
                std::string t = line;
                while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
                    t.pop_back();
                if (t.empty()) continue;
                raw.push_back(parse_graph6(t, line_no, here));
            }
            break;
        }
        case CorpusSpec::Source::family: {
            for (const std::string& f : spec.families) raw.push_back(generate(f));
            break;
        }
    }
    std::vector<Graph> out;
    for (const Graph& g : raw)
        if (spec.filters.pass(g)) out.push_back(g);
    return out;
}

// -------- counterexample minimization --------

// Greedy shrink to a 1-minimal witness: delete edges in descending
// lexicographic order while the predicate holds, repeating to a fixed
// point, then drop isolated vertices.
inline Graph minimize(const Graph& g, const std::function<bool(const Graph&)>& predicate) {
    if (!predicate(g)) throw domain_error("minimize: predicate is false on the input graph");
    Graph h = g;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<int, int>> es = h.edges();
        for (auto it = es.rbegin(); it != es.rend(); ++it) {
            Graph cand = h.without_edge(it->first, it->second);
            if (predicate(cand)) {
                h = cand;
                changed = true;
            }
        }
    }
    for (int v = h.vertex_count() - 1; v >= 0; --v) {
        if (v < h.vertex_count() && h.degree(v) == 0) {
            Graph cand = h.compacted(h.vertices() & ~vbit(v));
            if (predicate(cand)) h = cand;
        }
    }
    return h;
}

// -------- claim registry --------

enum class ClaimId { T1, T2, T3, T4, L1, L2, L3, L4, L5, CI_COND, FOWLER };

inline const std::vector<std::pair<ClaimId, std::string>>& claim_names() {
    static const std::vector<std::pair<ClaimId, std::string>> names = {
        {ClaimId::T1, "T1"}, {ClaimId::T2, "T2"}, {ClaimId::T3, "T3"}, {ClaimId::T4, "T4"},
        {ClaimId::L1, "L1"}, {ClaimId::L2, "L2"}, {ClaimId::L3, "L3"}, {ClaimId::L4, "L4"},
        {ClaimId::L5, "L5"}, {ClaimId::CI_COND, "CI_COND"}, {ClaimId::FOWLER, "FOWLER"}};
    return names;
}

inline std::string claim_name(ClaimId id) {
    for (const auto& [cid, name] : claim_names())
        if (cid == id) return name;
    throw domain_error("unknown claim id");
}

inline ClaimId parse_claim(const std::string& name) {
    for (const auto& [cid, cname] : claim_names())
        if (cname == name) return cid;
    throw domain_error("unknown claim: " + name);
}

struct AuditConfig {
    int k = 4;
    int max_cycle_len = 12;
    int jobs = 1;
};

namespace audit_detail {

struct InstanceOutcome {
    long units = 0;
    std::vector<std::string> witnesses;
};

inline std::vector<CycleRef> triangles_of(const Graph& g) {
    if (g.vertex_count() < 3) return {};
    return enumerate_cycles(g, 3);
}

// Color set an odd cycle carries in one pinned labeling.
inline unsigned cycle_color_set(const CycleRef& c, const PinnedLabeling& lab) {
    unsigned s = 0;
    for (int v : c.vertices) s |= 1u << lab.color[v];
    return s;
}

inline bool cycle_is_fixed(const CycleRef& c, const std::vector<PinnedLabeling>& labs) {
    unsigned first = cycle_color_set(c, labs[0]);
    for (const PinnedLabeling& lab : labs)
        if (cycle_color_set(c, lab) != first) return false;
    return true;
}

}  // namespace audit_detail

inline bool claim_hypothesis(ClaimId claim, const Graph& g, const AuditConfig& cfg) {
    switch (claim) {
        case ClaimId::T1:
        case ClaimId::T2:
            return g.is_connected() && is_planar(g);
        case ClaimId::T3:
            return is_planar(g) && is_k_critical(g, cfg.k);
        case ClaimId::T4:
        case ClaimId::L5:
            return is_planar(g) && chromatic_number(g) == cfg.k;
        case ClaimId::L1:
        case ClaimId::L2:
        case ClaimId::L3:
            return chromatic_number(g) == 4 && !audit_detail::triangles_of(g).empty();
        case ClaimId::L4:
            return chromatic_number(g) == 4;
        case ClaimId::CI_COND:
            return chromatic_number(g) == cfg.k;
        case ClaimId::FOWLER:
            return is_planar(g) && g.vertex_count() >= 3;
    }
    throw domain_error("unknown claim id");
}

// One corpus instance against one claim: checked units plus witness strings
// for every violation found. The harness asserts nothing beyond the finite
// instances it ran; violations are findings, not errors.
inline audit_detail::InstanceOutcome claim_check(ClaimId claim, const Graph& g,
                                                 const AuditConfig& cfg) {
    using audit_detail::InstanceOutcome;
    InstanceOutcome out;
    int L = cfg.max_cycle_len;

    switch (claim) {
        case ClaimId::T1: {
            StructuralCheck c = theorem1_check(g, L);
            out.units = c.instances;
            out.witnesses = c.violations;
            return out;
        }
        case ClaimId::T2: {
            StructuralCheck c = theorem2_check(g, L);
            out.units = c.instances;
            out.witnesses = c.violations;
            return out;
        }
        case ClaimId::T3: {
            for (auto [x, y] : g.edges()) {
                ++out.units;
                Graph h = g.without_edge(x, y);
                std::string edge = std::to_string(x) + "-" + std::to_string(y);
                if (chromatic_number(h) != cfg.k - 1) {
                    out.witnesses.push_back("deleting " + edge + " does not drop the chromatic number to " +
                                            std::to_string(cfg.k - 1));
                    continue;
                }
                std::vector<std::pair<int, int>> ci = ci_pairs(h, cfg.k - 1);
                std::pair<int, int> key{std::min(x, y), std::max(x, y)};
                if (std::find(ci.begin(), ci.end(), key) == ci.end())
                    out.witnesses.push_back("endpoints of " + edge + " are not a CI_" +
                                            std::to_string(cfg.k - 1) + " pair after deletion");
                else if (!adjaceable(h, x, y))
                    out.witnesses.push_back("endpoints of " + edge + " are not adjaceable after deletion");
            }
            return out;
        }
        case ClaimId::T4: {
            for (auto [u, v] : ci_pairs(g, cfg.k)) {
                ++out.units;
                if (adjaceable(g, u, v))
                    out.witnesses.push_back("adjaceable CI pair {" + std::to_string(u) + "," +
                                            std::to_string(v) + "}");
            }
            return out;
        }
        case ClaimId::L1: {
            for (const CycleRef& r : audit_detail::triangles_of(g)) {
                FixedSet fs = fixed_elements(g, r, 4);
                for (const auto& e : fs.fixed_edges) {
                    ++out.units;
                    bool supported = false;
                    for (const auto& zw : fs.fixed_edges) {
                        if (zw == e) continue;
                        vertex_set both = g.neighbors(zw.u) & g.neighbors(zw.v);
                        if (set_contains(both, e.u) && set_contains(both, e.v)) {
                            supported = true;
                            break;
                        }
                    }
                    if (!supported)
                        out.witnesses.push_back("ref " + r.to_string() + ": fixed edge " +
                                                std::to_string(e.u) + "-" + std::to_string(e.v) +
                                                " has no fixed supporting edge");
                }
            }
            return out;
        }
        case ClaimId::L2:
        case ClaimId::L3: {
            std::vector<CycleRef> odd = enumerate_cycles(g, L, CycleParity::odd);
            for (const CycleRef& r : audit_detail::triangles_of(g)) {
                std::vector<PinnedLabeling> labs = pinned_labelings(g, r, 4);
                if (labs.empty()) continue;
                FixedSet fs = fixed_elements(g, r, 4);
                vertex_set fixed_vs = 0;
                for (auto [v, c] : fs.fixed_vertices) fixed_vs |= vbit(v);

                std::vector<const CycleRef*> fixed_cycles;
                for (const CycleRef& c : odd)
                    if (audit_detail::cycle_is_fixed(c, labs)) fixed_cycles.push_back(&c);

                if (claim == ClaimId::L2) {
                    for (auto [x, color] : fs.fixed_vertices) {
                        ++out.units;
                        bool found = false;
                        for (const CycleRef* c : fixed_cycles) {
                            if (!set_contains(c->vertex_mask(), x) &&
                                (common_neighbors(g, c->vertex_mask()) & vbit(x))) {
                                found = true;
                                break;
                            }
                        }
                        if (!found)
                            out.witnesses.push_back("ref " + r.to_string() + ": fixed vertex " +
                                                    std::to_string(x) +
                                                    " has no fixed universal odd cycle");
                    }
                } else {
                    for (const CycleRef* c : fixed_cycles) {
                        ++out.units;
                        vertex_set universal = common_neighbors(g, c->vertex_mask());
                        if (!(universal & fixed_vs))
                            out.witnesses.push_back("ref " + r.to_string() + ": fixed odd cycle " +
                                                    c->to_string() +
                                                    " has no fixed universal vertex");
                    }
                }
            }
            return out;
        }
        case ClaimId::L4: {
            std::vector<std::pair<int, int>> ci = ci_pairs(g, 4);
            ChainExtraction ext = extract_chains(fixation_incidence(g, L));
            std::set<std::pair<int, int>> co_chain;
            for (const CFChain& chain : ext.chains)
                for (size_t i = 0; i < chain.vertex_nodes.size(); ++i)
                    for (size_t j = i + 1; j < chain.vertex_nodes.size(); ++j) {
                        int a = chain.vertex_nodes[i], b = chain.vertex_nodes[j];
                        co_chain.insert({std::min(a, b), std::max(a, b)});
                    }
            std::set<std::pair<int, int>> ci_set(ci.begin(), ci.end());
            int n = g.vertex_count();
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    ++out.units;
                    bool in_ci = ci_set.count({u, v});
                    bool in_chain = co_chain.count({u, v});
                    if (in_ci && !in_chain)
                        out.witnesses.push_back("CI pair {" + std::to_string(u) + "," +
                                                std::to_string(v) + "} shares no fixation chain");
                    else if (!in_ci && in_chain)
                        out.witnesses.push_back("chain pair {" + std::to_string(u) + "," +
                                                std::to_string(v) + "} is not color identical");
                }
            }
            return out;
        }
        case ClaimId::L5: {
            ChainExtraction ext = extract_chains(fixation_incidence(g, L));
            for (const CFChain& chain : ext.chains) {
                for (size_t i = 0; i < chain.vertex_nodes.size(); ++i) {
                    for (size_t j = i + 1; j < chain.vertex_nodes.size(); ++j) {
                        ++out.units;
                        int u = chain.vertex_nodes[i], v = chain.vertex_nodes[j];
                        if (adjaceable(g, u, v))
                            out.witnesses.push_back("adjaceable vertex nodes {" + std::to_string(u) +
                                                    "," + std::to_string(v) + "} in chain " +
                                                    chain.to_string());
                    }
                }
            }
            return out;
        }
        case ClaimId::CI_COND: {
            for (auto [u, v] : ci_pairs(g, cfg.k)) {
                ++out.units;
                if (!ci_condition_witness(g, cfg.k, u, v))
                    out.witnesses.push_back("CI pair {" + std::to_string(u) + "," +
                                            std::to_string(v) +
                                            "} has no neighbor-subset witness");
            }
            return out;
        }
        case ClaimId::FOWLER: {
            out.units = 1;
            bool unique = is_uniquely_k_colorable(g, 4);
            bool apollonian = is_apollonian(g);
            if (unique != apollonian)
                out.witnesses.push_back(std::string("uniquely 4-colorable=") +
                                        (unique ? "yes" : "no") + " but apollonian=" +
                                        (apollonian ? "yes" : "no"));
            return out;
        }
    }
    throw domain_error("unknown claim id");
}

// -------- reports --------

struct AuditViolation {
    std::string graph6;
    std::string witness;
    std::string minimized_graph6;
};

struct AuditReport {
    std::string claim;
    std::string corpus;
    std::string filters;
    int k = 4;
    int max_cycle_len = 12;
    int jobs = 1;
    long graphs_checked = 0;
    long instances_checked = 0;
    long skipped = 0;
    std::vector<AuditViolation> violations;
    long runtime_ms = 0;
};

inline nlohmann::json report_json(const AuditReport& r) {
    nlohmann::json j;
    j["claim"] = r.claim;
    j["config"] = {{"corpus", r.corpus},
                   {"filters", r.filters},
                   {"k", r.k},
                   {"max_cycle_len", r.max_cycle_len},
                   {"jobs", r.jobs}};
    j["graphs_checked"] = r.graphs_checked;
    j["instances_checked"] = r.instances_checked;
    j["skipped"] = r.skipped;
    j["violations"] = nlohmann::json::array();
    for (const AuditViolation& v : r.violations)
        j["violations"].push_back({{"graph6", v.graph6},
                                   {"witness", v.witness},
                                   {"minimized_graph6", v.minimized_graph6}});
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

inline std::string report_text(const AuditReport& r) {
    std::ostringstream out;
    out << "claim " << r.claim << ": " << r.instances_checked << " instance(s) over "
        << r.graphs_checked << " graph(s), " << r.skipped << " skipped, "
        << r.violations.size() << " violation(s), " << r.runtime_ms << " ms\n";
    for (const AuditViolation& v : r.violations)
        out << "  violation [" << v.graph6 << "] " << v.witness << " (minimized: "
            << v.minimized_graph6 << ")\n";
    return out.str();
}

inline AuditReport run_audit(ClaimId claim, const CorpusSpec& spec, const AuditConfig& cfg = {}) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Graph> graphs = corpus(spec);

    struct ItemResult {
        bool skipped = false;
        long units = 0;
        std::vector<std::string> witnesses;
        std::string minimized;
    };
    std::vector<ItemResult> results(graphs.size());

    auto process = [&](size_t i) {
        const Graph& g = graphs[i];
        ItemResult& r = results[i];
        if (!claim_hypothesis(claim, g, cfg)) {
            r.skipped = true;
            return;
        }
        audit_detail::InstanceOutcome oc = claim_check(claim, g, cfg);
        r.units = oc.units;
        r.witnesses = std::move(oc.witnesses);
        if (!r.witnesses.empty()) {
            Graph shrunk = minimize(g, [&](const Graph& h) {
                return claim_hypothesis(claim, h, cfg) && !claim_check(claim, h, cfg).witnesses.empty();
            });
            r.minimized = emit_graph6(shrunk);
        }
    };

    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || graphs.size() <= 1) {
        for (size_t i = 0; i < graphs.size(); ++i) process(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&] {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= graphs.size()) break;
                    process(i);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }

    AuditReport report;
    report.claim = claim_name(claim);
    report.corpus = spec.to_string();
    report.filters = spec.filters.to_string();
    report.k = cfg.k;
    report.max_cycle_len = cfg.max_cycle_len;
    report.jobs = jobs;
    for (size_t i = 0; i < graphs.size(); ++i) {
        const ItemResult& r = results[i];
        if (r.skipped) {
            ++report.skipped;
            continue;
        }
        ++report.graphs_checked;
        report.instances_checked += r.units;
        for (const std::string& w : r.witnesses)
            report.violations.push_back({emit_graph6(graphs[i]), w, r.minimized});
    }
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

// A stored violation re-verifies when re-running the claim on its graph
// reproduces the same witness and the minimized graph still violates.
inline bool reverify_violation(ClaimId claim, const AuditViolation& v,
                               const AuditConfig& cfg = {}) {
    Graph g = parse_graph6(v.graph6);
    if (!claim_hypothesis(claim, g, cfg)) return false;
    audit_detail::InstanceOutcome oc = claim_check(claim, g, cfg);
    if (std::find(oc.witnesses.begin(), oc.witnesses.end(), v.witness) == oc.witnesses.end())
        return false;
    if (!v.minimized_graph6.empty()) {
        Graph m = parse_graph6(v.minimized_graph6);
        if (!claim_hypothesis(claim, m, cfg)) return false;
        if (claim_check(claim, m, cfg).witnesses.empty()) return false;
    }
    return true;
}

}  // namespace colorfix
