#include "walkinv/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <tuple>
#include <vector>

#include "walkinv/error.hpp"

namespace walkinv {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

/// Splits on spaces/tabs and parses exactly two unsigned decimals.
std::pair<std::size_t, std::size_t> parse_pair(std::string_view text, std::size_t line) {
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  if (tokens.size() != 2) fail(line, "expected two integers, got '" + std::string(text) + "'");
  std::size_t values[2];
  for (int k = 0; k < 2; ++k) {
    const auto token = tokens[k];
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), values[k]);
    if (ec != std::errc() || end != token.data() + token.size()) {
      fail(line, "not a non-negative integer: '" + std::string(token) + "'");
    }
  }
  return {values[0], values[1]};
}

bool blank(std::string_view text) { return text.find_first_not_of(" \t\r") == std::string_view::npos; }

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  while (std::getline(in, text)) {
    ++line_no;
    if (!have_header) {
      std::tie(n, m) = parse_pair(text, line_no);
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) {
      if (!blank(text)) fail(line_no, "more edge lines than the declared m = " + std::to_string(m));
      continue;
    }
    const auto [u, v] = parse_pair(text, line_no);
    edges.push_back({u, v});
  }
  if (!have_header) fail(1, "missing header 'n m'");
  if (edges.size() != m) {
    fail(line_no + 1, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph read_edge_list(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + file.string());
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace walkinv
