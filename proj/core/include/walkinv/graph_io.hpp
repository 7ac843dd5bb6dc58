#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "walkinv/graph.hpp"

namespace walkinv {

// Edge-list text format: a header line "n m", then m lines "u v" with
// 0-indexed ASCII decimal endpoints separated by a space.

/// Throws ParseError (message carries the 1-based line number) on malformed
/// text, and the Graph construction errors on invalid graphs.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(const std::filesystem::path& file);

/// Inverse of parse_edge_list, LF line endings, edges in canonical order.
std::string format_edge_list(const Graph& g);

}  // namespace walkinv
