#pragma once

#include <string>
#include <string_view>

#include "covbetti/graph.hpp"

namespace covbetti {

enum class GraphFormat { graph6, edge_list };

/// graph6: size prefix then the upper triangle in column order
/// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte offset by
/// 63. An optional ">>graph6<<" header and a trailing newline are accepted.
[[nodiscard]] Graph parse_graph6(std::string_view text);
[[nodiscard]] std::string to_graph6(const Graph& g);

/// Edge list: a header line "n m" followed by m lines "u v". Blank lines
/// are ignored.
[[nodiscard]] Graph parse_edge_list(std::string_view text);
[[nodiscard]] std::string to_edge_list(const Graph& g);

/// Edge list when the first non-blank byte is a digit, graph6 otherwise.
[[nodiscard]] GraphFormat detect_format(std::string_view text);
[[nodiscard]] Graph parse_graph(std::string_view text);
[[nodiscard]] std::string emit_graph(const Graph& g, GraphFormat format);

}  // namespace covbetti
