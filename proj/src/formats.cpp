#include "curv/formats.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <optional>
#include <fstream>
#include <sstream>

namespace curv {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kMaxGraph6Order = 258047;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

int graph6_value(char c) {
    if (c < 63 || c > 126) {
        throw FormatError(fmt::format("graph6: invalid character code {}", static_cast<int>(static_cast<unsigned char>(c))));
    }
    return c - 63;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto pos = text.find('\n');
        lines.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return lines;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(kGraph6Header)) {
        text.remove_prefix(kGraph6Header.size());
    }
    if (text.empty()) {
        throw FormatError("graph6: empty input");
    }
    std::size_t pos = 0;
    int n = 0;
    if (text[0] != '~') {
        n = graph6_value(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~') {
            throw FormatError("graph6: orders above 258047 are not supported");
        }
        if (text.size() < 4) {
            throw FormatError("graph6: truncated order field");
        }
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | graph6_value(text[i]);
        pos = 4;
    }
    if (n < 1) {
        throw FormatError("graph6: graph must have at least one vertex");
    }
    const std::size_t total_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t needed = (total_bits + 5) / 6;
    std::string_view payload = text.substr(pos);
    if (payload.size() != needed) {
        throw FormatError(fmt::format("graph6: expected {} payload characters for n = {}, got {}", needed, n, payload.size()));
    }
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            int chunk = graph6_value(payload[bit / 6]);
            if ((chunk >> (5 - bit % 6)) & 1) edges.push_back({i, j});
        }
    }
    // Padding bits must be zero.
    if (needed > 0) {
        int last = graph6_value(payload.back());
        int pad = static_cast<int>(needed * 6 - total_bits);
        if ((last & ((1 << pad) - 1)) != 0) {
            throw FormatError("graph6: nonzero padding bits");
        }
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxGraph6Order) {
        throw FormatError("graph6: order too large");
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    }
    return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> graphs;
    for (auto line : split_lines(text)) {
        line = trim(line);
        if (!line.empty()) graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

Graph parse_edgelist(std::string_view text) {
    std::optional<int> declared;
    std::vector<Edge> edges;
    int line_no = 0;
    int max_vertex = -1;
    bool seen_content = false;
    for (auto line : split_lines(text)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream in{std::string(line)};
        std::string first;
        in >> first;
        if (first == "n") {
            if (seen_content) {
                throw FormatError(fmt::format("edgelist line {}: header must precede edges", line_no));
            }
            int count = 0;
            if (!(in >> count) || count < 1) {
                throw FormatError(fmt::format("edgelist line {}: malformed header", line_no));
            }
            declared = count;
            seen_content = true;
            continue;
        }
        seen_content = true;
        int u = 0;
        int v = 0;
        auto [p, ec] = std::from_chars(first.data(), first.data() + first.size(), u);
        std::string rest;
        if (ec != std::errc{} || p != first.data() + first.size() || !(in >> v) || (in >> rest)) {
            throw FormatError(fmt::format("edgelist line {}: expected two vertex indices", line_no));
        }
        if (u < 0 || v < 0) {
            throw FormatError(fmt::format("edgelist line {}: negative vertex index", line_no));
        }
        edges.push_back({u, v});
        max_vertex = std::max({max_vertex, u, v});
    }
    int n = declared.value_or(max_vertex + 1);
    if (declared && max_vertex >= *declared) {
        throw FormatError(fmt::format("edgelist: vertex {} out of range for n = {}", max_vertex, *declared));
    }
    if (n < 1) {
        throw FormatError("edgelist: empty graph (add an 'n <count>' header)");
    }
    try {
        return Graph(n, edges);
    } catch (const GraphError& e) {
        throw FormatError(fmt::format("edgelist: {}", e.what()));
    }
}

std::string emit_edgelist(const Graph& g) {
    std::string out = fmt::format("n {}\n", g.order());
    for (const Edge& e : g.edges()) out += fmt::format("{} {}\n", e.u, e.v);
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError(fmt::format("cannot open '{}'", path));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace curv
