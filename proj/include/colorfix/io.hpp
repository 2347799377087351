#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "colorfix/graph.hpp"

namespace colorfix {

enum class GraphFormat { edge_list, graph6, dot };

inline GraphFormat parse_format_name(const std::string& name) {
    if (name == "edge-list" || name == "edgelist" || name == "el") return GraphFormat::edge_list;
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "dot") return GraphFormat::dot;
    throw domain_error("unknown graph format: " + name);
}

namespace io_detail {

struct Line {
    std::string text;
    int number;        // 1-based
    long byte_offset;  // offset of the first byte of the line
};

inline std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    long offset = 0;
    int number = 1;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        size_t end = (nl == std::string_view::npos) ? text.size() : nl;
        lines.push_back({std::string(text.substr(pos, end - pos)), number, offset});
        if (nl == std::string_view::npos) break;
        offset += static_cast<long>(end - pos) + 1;
        pos = end + 1;
        ++number;
    }
    return lines;
}

inline bool parse_int(const std::string& tok, long& out) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = std::stol(tok);
    return true;
}

}  // namespace io_detail

// Edge-list: lines "u v" with 0-based ids, '#' starts a comment, blank lines
// ignored. An optional leading header "n <count>" fixes the vertex count so
// trailing isolated vertices survive a round trip.
inline Graph parse_edge_list(const std::string& text) {
    using io_detail::Line;
    std::vector<Line> lines = io_detail::split_lines(text);

    long declared_n = -1;
    std::vector<std::pair<long, long>> edges;
    std::vector<Line> edge_lines;
    bool first_data_line = true;
    long max_id = -1;

    for (const Line& line : lines) {
        std::string data = line.text;
        if (size_t hash = data.find('#'); hash != std::string::npos) data.resize(hash);
        std::istringstream in(data);
        std::vector<std::string> toks;
        std::string tok;
        while (in >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (first_data_line && toks.size() == 2 && toks[0] == "n") {
            if (!io_detail::parse_int(toks[1], declared_n) || declared_n > kMaxVertices)
                throw parse_error("bad vertex count header", line.number, line.byte_offset);
            first_data_line = false;
            continue;
        }
        first_data_line = false;
        long u, v;
        if (toks.size() != 2 || !io_detail::parse_int(toks[0], u) || !io_detail::parse_int(toks[1], v))
            throw parse_error("expected \"u v\", got \"" + line.text + "\"", line.number,
                              line.byte_offset);
        if (u == v)
            throw parse_error("self-loop at vertex " + std::to_string(u), line.number,
                              line.byte_offset);
        if (u >= kMaxVertices || v >= kMaxVertices)
            throw parse_error("vertex id exceeds the 64-vertex bound", line.number,
                              line.byte_offset);
        edges.emplace_back(u, v);
        edge_lines.push_back(line);
        max_id = std::max({max_id, u, v});
    }

    long n = declared_n >= 0 ? declared_n : max_id + 1;
    Graph g(static_cast<int>(n));
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u >= n || v >= n)
            throw parse_error("vertex id " + std::to_string(std::max(u, v)) +
                                  " not below declared count " + std::to_string(n),
                              edge_lines[i].number, edge_lines[i].byte_offset);
        g = g.with_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

// graph6: standard ASCII encoding, one graph per line. Bits of the upper
// triangle are taken column by column ((0,1),(0,2),(1,2),(0,3),...), packed
// into 6-bit chunks offset by 63.
inline Graph parse_graph6(const std::string& line_in, int line_number = 1, long byte_offset = 0) {
    std::string line = line_in;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw parse_error("empty graph6 line", line_number, byte_offset);

    size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() < 4 || static_cast<unsigned char>(line[1]) == 126)
            throw parse_error("unsupported graph6 size header", line_number, byte_offset);
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            int c = static_cast<unsigned char>(line[i]) - 63;
            if (c < 0 || c > 63)
                throw parse_error("graph6 byte out of range", line_number, byte_offset);
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        n = static_cast<unsigned char>(line[0]) - 63;
        if (n < 0) throw parse_error("graph6 byte out of range", line_number, byte_offset);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw parse_error("graph6 order " + std::to_string(n) + " exceeds the 64-vertex bound",
                          line_number, byte_offset);

    long bits = n * (n - 1) / 2;
    long need = (bits + 5) / 6;
    if (static_cast<long>(line.size()) - static_cast<long>(pos) != need)
        throw parse_error("graph6 body has wrong length", line_number, byte_offset);

    Graph g(static_cast<int>(n));
    long k = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++k) {
            int byte = static_cast<unsigned char>(line[pos + static_cast<size_t>(k / 6)]) - 63;
            if (byte < 0 || byte > 63)
                throw parse_error("graph6 byte out of range", line_number, byte_offset);
            if ((byte >> (5 - k % 6)) & 1) g = g.with_edge(row, col);
        }
    }
    return g;
}

inline Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::edge_list:
            return parse_edge_list(text);
        case GraphFormat::graph6: {
            // first non-blank line
            for (const auto& line : io_detail::split_lines(text)) {
                std::string t = line.text;
                while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
                if (!t.empty()) return parse_graph6(t, line.number, line.byte_offset);
            }
            throw parse_error("no graph6 line found", 1, 0);
        }
        case GraphFormat::dot:
            throw domain_error("dot is an output-only format");
    }
    throw domain_error("unreachable");
}

inline std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

inline std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline std::string emit_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string emit_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::edge_list:
            return emit_edge_list(g);
        case GraphFormat::graph6:
            return emit_graph6(g);
        case GraphFormat::dot:
            return emit_dot(g);
    }
    throw domain_error("unreachable");
}

}  // namespace colorfix
