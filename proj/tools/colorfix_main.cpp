// colorfix: audit the coloring-constraint structure of small graphs.
//
// Subcommands: chroma, colorings, critical, ci, fix, chains, adjaceable,
// gen, convert, audit. Exit codes: 0 success, 1 an audit or cross-check
// found violations, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "colorfix/colorfix.hpp"

namespace {

using namespace colorfix;

struct InputOptions {
    std::string gen;
    std::string edges;
    std::string path;
    std::string format = "edge-list";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* g = cmd->add_option("--gen", in.gen, "generate a family, e.g. fig6 or wheel(5)");
    auto* e = cmd->add_option("--edges", in.edges, "inline edge list, e.g. \"0-1,1-2,0-2\"");
    auto* f = cmd->add_option("--in", in.path, "input file");
    g->excludes(e);
    g->excludes(f);
    e->excludes(f);
    cmd->add_option("--format", in.format, "input format: edge-list or graph6")
        ->check(CLI::IsMember({"edge-list", "graph6"}));
}

Graph parse_inline_edges(const std::string& text) {
    std::string norm;
    for (char c : text) norm.push_back(c == '-' ? ' ' : (c == ',' ? '\n' : c));
    return parse_edge_list(norm);
}

Graph load_graph(const InputOptions& in) {
    if (!in.gen.empty()) return generate(in.gen);
    if (!in.edges.empty()) return parse_inline_edges(in.edges);
    if (!in.path.empty()) {
        std::ifstream f(in.path);
        if (!f) throw domain_error("cannot open input file: " + in.path);
        std::stringstream buf;
        buf << f.rdbuf();
        return parse_graph(buf.str(), parse_format_name(in.format));
    }
    throw domain_error("no input graph: use --gen, --edges or --in");
}

struct OutputTarget {
    std::string path;

    bool json() const { return path.size() > 5 && path.substr(path.size() - 5) == ".json"; }

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw domain_error("cannot open output file: " + path);
        out << text;
    }
};

int cmd_chroma(const InputOptions& in, const OutputTarget& out) {
    out.write(std::to_string(chromatic_number(load_graph(in))) + "\n");
    return 0;
}

int cmd_colorings(const InputOptions& in, int k, bool list, const OutputTarget& out) {
    Graph g = load_graph(in);
    std::vector<Coloring> cols = enumerate_colorings(g, k);
    std::ostringstream text;
    text << cols.size() << "\n";
    if (list)
        for (const Coloring& c : cols) text << c.to_string() << "\n";
    out.write(text.str());
    return 0;
}

int cmd_critical(const InputOptions& in, int k, const OutputTarget& out) {
    out.write(is_k_critical(load_graph(in), k) ? "true\n" : "false\n");
    return 0;
}

int cmd_ci(const InputOptions& in, int k, const OutputTarget& out) {
    Graph g = load_graph(in);
    std::vector<std::pair<int, int>> pairs = ci_pairs(g, k);
    bool agree = true;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v)) continue;
            bool enumerated =
                std::find(pairs.begin(), pairs.end(), std::make_pair(u, v)) != pairs.end();
            if (enumerated != ci_pair_oracle(g, k, u, v)) agree = false;
        }
    }
    if (out.json()) {
        nlohmann::json j;
        j["pairs"] = nlohmann::json::array();
        for (auto [u, v] : pairs) j["pairs"].push_back({u, v});
        j["oracle_agreement"] = agree;
        out.write(j.dump(2) + "\n");
    } else {
        std::ostringstream text;
        for (auto [u, v] : pairs) text << u << " " << v << "\n";
        text << (pairs.empty() ? "no CI pairs" : "") << (pairs.empty() ? "\n" : "");
        text << "oracle agreement: " << (agree ? "yes" : "NO") << "\n";
        out.write(text.str());
    }
    return agree ? 0 : 1;
}

CycleRef parse_triangle(const std::string& s) {
    std::vector<int> vs;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) vs.push_back(std::stoi(tok));
    return CycleRef{vs};
}

CycleRef default_reference(const Graph& g) {
    std::vector<CycleRef> tris = enumerate_cycles(g, 3);
    if (tris.empty()) throw domain_error("graph has no triangle to use as coloring reference");
    return tris.front();
}

vertex_set parse_vertex_set(const std::string& s) {
    std::vector<int> vs;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) vs.push_back(std::stoi(tok));
    return make_set(vs);
}

int cmd_fix(const InputOptions& in, int k, const std::string& cr, const std::string& rs,
            const std::string& ss, const OutputTarget& out) {
    Graph g = load_graph(in);
    std::ostringstream text;
    if (!rs.empty() || !ss.empty()) {
        if (rs.empty() || ss.empty()) throw domain_error("--r and --s must be given together");
        bool fixed = is_color_fixed(g, k, parse_vertex_set(rs), parse_vertex_set(ss));
        out.write(fixed ? "true\n" : "false\n");
        return 0;
    }
    CycleRef r = cr.empty() ? default_reference(g) : parse_triangle(cr);
    FixedSet fs = fixed_elements(g, r, k);
    if (out.json()) {
        nlohmann::json j;
        j["reference"] = r.vertices;
        j["fixed_vertices"] = nlohmann::json::array();
        for (auto [v, c] : fs.fixed_vertices) j["fixed_vertices"].push_back({{"vertex", v}, {"color", c}});
        j["fixed_edges"] = nlohmann::json::array();
        for (const auto& e : fs.fixed_edges)
            j["fixed_edges"].push_back(
                {{"edge", {e.u, e.v}}, {"colors", {e.color_lo, e.color_hi}}});
        out.write(j.dump(2) + "\n");
        return 0;
    }
    text << "reference " << r.to_string() << "\n";
    for (auto [v, c] : fs.fixed_vertices) text << "vertex " << v << " -> color " << c << "\n";
    for (const auto& e : fs.fixed_edges)
        text << "edge " << e.u << "-" << e.v << " -> colors {" << e.color_lo << "," << e.color_hi
             << "}\n";
    out.write(text.str());
    return 0;
}

int cmd_chains(const InputOptions& in, int max_len, const OutputTarget& out) {
    Graph g = load_graph(in);
    FixationIncidence inc = fixation_incidence(g, max_len);
    ChainExtraction ext = extract_chains(inc);
    if (out.json()) {
        nlohmann::json j;
        j["incidence"] = nlohmann::json::array();
        for (const FixationPair& p : inc.pairs)
            j["incidence"].push_back({{"vertex", p.vertex}, {"cycle", p.cycle.vertices}});
        j["chains"] = nlohmann::json::array();
        for (const CFChain& c : ext.chains) {
            nlohmann::json jc;
            // alternating vertex node, cycle (as vertex sequence), vertex node, ...
            jc["nodes"] = nlohmann::json::array();
            jc["nodes"].push_back(c.vertex_nodes[0]);
            for (size_t i = 0; i < c.cycle_nodes.size(); ++i) {
                jc["nodes"].push_back(c.cycle_nodes[i].vertices);
                jc["nodes"].push_back(c.vertex_nodes[i + 1]);
            }
            jc["branches"] = nlohmann::json::array();
            for (const auto& [v, cy] : c.branches)
                jc["branches"].push_back({{"vertex", v}, {"cycle", cy.vertices}});
            j["chains"].push_back(jc);
        }
        j["crowded_cycles"] = nlohmann::json::array();
        for (const FixationPair& p : ext.crowded)
            j["crowded_cycles"].push_back({{"vertex", p.vertex}, {"cycle", p.cycle.vertices}});
        j["loop_links"] = nlohmann::json::array();
        for (const auto& [uv, cy] : ext.loop_links)
            j["loop_links"].push_back({{"vertices", {uv.first, uv.second}}, {"cycle", cy.vertices}});
        out.write(j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream text;
    text << inc.pairs.size() << " incidence pair(s)\n";
    for (const FixationPair& p : inc.pairs)
        text << "  vertex " << p.vertex << " fixes cycle " << p.cycle.to_string() << "\n";
    text << ext.chains.size() << " chain(s)\n";
    for (const CFChain& c : ext.chains) {
        text << "  " << c.to_string() << "\n";
        for (const auto& [v, cy] : c.branches)
            text << "    branch at " << v << ": " << cy.to_string() << "\n";
    }
    for (const FixationPair& p : ext.crowded)
        text << "anomaly: cycle " << p.cycle.to_string() << " fixes more than two vertices (incl. "
             << p.vertex << ")\n";
    for (const auto& [uv, cy] : ext.loop_links)
        text << "anomaly: loop link " << uv.first << "-" << uv.second << " via "
             << cy.to_string() << "\n";
    out.write(text.str());
    return 0;
}

int cmd_adjaceable(const InputOptions& in, int u, int v, const OutputTarget& out) {
    Graph g = load_graph(in);
    bool a = adjaceable(g, u, v);
    if (out.json()) {
        nlohmann::json j;
        j["adjaceable"] = a;
        if (!a && !g.has_edge(u, v)) {
            KuratowskiWitness w = kuratowski_witness(g.with_edge(u, v));
            j["kuratowski_kind"] = (w.kind == KuratowskiKind::k5) ? "K5" : "K3,3";
            j["kuratowski_edges"] = nlohmann::json::array();
            for (auto [a2, b2] : w.edges) j["kuratowski_edges"].push_back({a2, b2});
        }
        out.write(j.dump(2) + "\n");
    } else {
        out.write(a ? "true\n" : "false\n");
    }
    return 0;
}

// graph6 is a line format: the bare encoding gets its newline here.
std::string emitted(const Graph& g, const std::string& to) {
    GraphFormat fmt = parse_format_name(to);
    std::string text = emit_graph(g, fmt);
    if (fmt == GraphFormat::graph6) text += "\n";
    return text;
}

int cmd_gen(const std::string& family, const std::string& to, const OutputTarget& out) {
    out.write(emitted(generate(family), to));
    return 0;
}

int cmd_convert(const InputOptions& in, const std::string& to, const OutputTarget& out) {
    out.write(emitted(load_graph(in), to));
    return 0;
}

int cmd_audit(const std::vector<std::string>& claims, int exhaustive, const std::string& ingest,
              const std::vector<std::string>& families, bool f_connected, bool f_planar,
              int f_chromatic, const AuditConfig& cfg, const OutputTarget& out) {
    CorpusSpec spec;
    int sources = (exhaustive > 0) + !ingest.empty() + !families.empty();
    if (sources != 1)
        throw domain_error("audit needs exactly one corpus source: --exhaustive, --ingest or --family");
    if (exhaustive > 0)
        spec = CorpusSpec::exhaustive(exhaustive);
    else if (!ingest.empty())
        spec = CorpusSpec::ingest(ingest);
    else
        spec = CorpusSpec::family(families);
    spec.filters.connected = f_connected;
    spec.filters.planar = f_planar;
    if (f_chromatic > 0) spec.filters.chromatic = f_chromatic;

    std::vector<ClaimId> ids;
    for (const std::string& c : claims) {
        if (c == "all") {
            for (const auto& [cid, name] : claim_names()) ids.push_back(cid);
        } else {
            ids.push_back(parse_claim(c));
        }
    }

    std::vector<AuditReport> reports;
    for (ClaimId id : ids) reports.push_back(run_audit(id, spec, cfg));

    bool any_violation = false;
    std::ostringstream text;
    nlohmann::json jall = nlohmann::json::array();
    for (const AuditReport& r : reports) {
        any_violation = any_violation || !r.violations.empty();
        text << report_text(r);
        jall.push_back(report_json(r));
    }
    if (out.json())
        out.write((reports.size() == 1 ? report_json(reports[0]).dump(2) : jall.dump(2)) + "\n");
    else
        out.write(text.str());
    return any_violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph coloring constraint auditor"};
    app.require_subcommand(1);

    InputOptions in;
    OutputTarget out;
    int k = 4;
    bool list = false;
    int u = 0, v = 0;
    std::string cr, rset, sset, family, to = "edge-list";
    int max_len = 12;
    std::vector<std::string> claims;
    int exhaustive = 0, f_chromatic = 0;
    std::string ingest;
    std::vector<std::string> families;
    bool f_connected = false, f_planar = false;
    AuditConfig cfg;

    auto* chroma = app.add_subcommand("chroma", "chromatic number");
    add_input_options(chroma, in);
    chroma->add_option("--out", out.path);

    auto* colorings = app.add_subcommand("colorings", "count or list proper partitions");
    add_input_options(colorings, in);
    colorings->add_option("--k", k, "number of colors")->required();
    colorings->add_flag("--list", list, "list the partitions");
    colorings->add_option("--out", out.path);

    auto* critical = app.add_subcommand("critical", "test k-criticality");
    add_input_options(critical, in);
    critical->add_option("--k", k)->required();
    critical->add_option("--out", out.path);

    auto* ci = app.add_subcommand("ci", "color identical pairs, cross-checked against the edge oracle");
    add_input_options(ci, in);
    ci->add_option("--k", k)->required();
    ci->add_option("--out", out.path);

    auto* fix = app.add_subcommand("fix", "Def-3 fixation query or pinned fixed elements");
    add_input_options(fix, in);
    fix->add_option("--k", k);
    fix->add_option("--cr", cr, "reference triangle, e.g. 0,1,2");
    fix->add_option("--r", rset, "first vertex set for a Def-3 query");
    fix->add_option("--s", sset, "second vertex set for a Def-3 query");
    fix->add_option("--out", out.path);

    auto* chains = app.add_subcommand("chains", "fixation incidence and CF chains");
    add_input_options(chains, in);
    chains->add_option("--max-cycle-len", max_len);
    chains->add_option("--out", out.path);

    auto* adj = app.add_subcommand("adjaceable", "test adjaceability of two vertices");
    add_input_options(adj, in);
    adj->add_option("--u", u)->required();
    adj->add_option("--v", v)->required();
    adj->add_option("--out", out.path);

    auto* gen = app.add_subcommand("gen", "emit a generated family");
    gen->add_option("family", family, "family expression, e.g. cf_chain(3)")->required();
    gen->add_option("--to", to, "output format: edge-list, graph6 or dot");
    gen->add_option("--out", out.path);

    auto* convert = app.add_subcommand("convert", "convert between graph formats");
    add_input_options(convert, in);
    convert->add_option("--to", to)->required();
    convert->add_option("--out", out.path);

    auto* audit = app.add_subcommand("audit", "run claim audits over a corpus");
    audit->add_option("claims", claims, "claim ids (T1..T4, L1..L5, CI_COND, FOWLER) or 'all'")
        ->required();
    audit->add_option("--exhaustive", exhaustive, "connected graphs on n vertices up to isomorphism");
    audit->add_option("--ingest", ingest, "graph6 file, one graph per line");
    audit->add_option("--family", families, "family fixture (repeatable)");
    audit->add_flag("--connected", f_connected, "filter: connected");
    audit->add_flag("--planar", f_planar, "filter: planar");
    audit->add_option("--chromatic", f_chromatic, "filter: chromatic number equals k");
    audit->add_option("--k", cfg.k, "audit color count (default 4)");
    audit->add_option("--max-cycle-len", cfg.max_cycle_len, "cycle length cap (default 12)");
    audit->add_option("--jobs", cfg.jobs, "worker threads over corpus items");
    audit->add_option("--out", out.path, "output file; *.json switches to JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (chroma->parsed()) return cmd_chroma(in, out);
        if (colorings->parsed()) return cmd_colorings(in, k, list, out);
        if (critical->parsed()) return cmd_critical(in, k, out);
        if (ci->parsed()) return cmd_ci(in, k, out);
        if (fix->parsed()) return cmd_fix(in, k, cr, rset, sset, out);
        if (chains->parsed()) return cmd_chains(in, max_len, out);
        if (adj->parsed()) return cmd_adjaceable(in, u, v, out);
        if (gen->parsed()) return cmd_gen(family, to, out);
        if (convert->parsed()) return cmd_convert(in, to, out);
        if (audit->parsed())
            return cmd_audit(claims, exhaustive, ingest, families, f_connected, f_planar,
                             f_chromatic, cfg, out);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
