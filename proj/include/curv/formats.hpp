#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "curv/graph.hpp"

namespace curv {

class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Decodes one graph6 string. An optional ">>graph6<<" header and trailing
/// newline are accepted.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// One graph6 string per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// Edge list text: "u v" per line, '#' comments and blank lines ignored,
/// optional leading "n <count>" header. Without the header the order is
/// one more than the largest endpoint.
Graph parse_edgelist(std::string_view text);
/// Always writes the "n <count>" header, then edges sorted by (u, v).
std::string emit_edgelist(const Graph& g);

std::string read_text_file(const std::string& path);

}  // namespace curv
