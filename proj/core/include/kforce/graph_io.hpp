#pragma once

#include "kforce/graph.hpp"

#include <string>
#include <string_view>

namespace kforce {

/// Short-form graph6 (n <= 62). The input must be exactly one encoded
/// graph: no newline, no ">>graph6<<" prefix.
/// Throws Error{MalformedHeader, BadCharacter, TrailingData}.
Graph parse_graph6(std::string_view text);

/// Throws Error{TooLarge} for n > 62.
std::string serialize_graph6(const Graph & g);

/// "n m" on the first line, then m lines "u v" (0-based).
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph & g);

enum class GraphFormat { Auto, Graph6, EdgeList };

GraphFormat parse_format(std::string_view name);

/// Parses a whole file's contents. Auto picks graph6 when the first byte
/// is printable graph6 (63..126) and the first line decodes; otherwise
/// edge list.
Graph read_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

}  // namespace kforce
