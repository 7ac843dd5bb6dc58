#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "walkinv/error.hpp"
#include "walkinv/graph.hpp"
#include "walkinv/graph_io.hpp"

using namespace walkinv;

namespace {

Error parse_error(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error: " << text;
  return Error(ErrorCode::ParseError, "none");
}

}  // namespace

TEST(EdgeList, ParsesPath) { EXPECT_EQ(parse_edge_list("3 2\n0 1\n1 2\n"), path(3)); }

TEST(EdgeList, ToleratesTabsCarriageReturnsAndTrailingBlankLines) {
  EXPECT_EQ(parse_edge_list("3 3\r\n0\t1\r\n1  2\r\n2 0\r\n\n  \n"), complete(3));
}

TEST(EdgeList, RoundTripsEveryConnectedGraphOnFiveVertices) {
  for (const Graph& g : all_connected_graphs(5)) ASSERT_EQ(parse_edge_list(format_edge_list(g)), g);
}

TEST(EdgeList, FormatIsCanonical) { EXPECT_EQ(format_edge_list(Graph(3, {{2, 1}, {1, 0}})), "3 2\n0 1\n1 2\n"); }

TEST(EdgeList, MalformedLineReportsLineNumber) {
  const Error e = parse_error("3 2\n0 1\na b\n");
  EXPECT_EQ(e.code(), ErrorCode::ParseError);
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
}

TEST(EdgeList, StructuralErrors) {
  EXPECT_EQ(parse_error("").code(), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("3\n0 1\n").code(), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("3 2\n0 1\n").code(), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("3 1\n0 1\n1 2\n").code(), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("3 2\n0 1 2\n1 2\n").code(), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("3 2\n0 -1\n1 2\n").code(), ErrorCode::ParseError);
}

TEST(EdgeList, GraphValidationErrorsPassThrough) {
  EXPECT_EQ(parse_error("4 2\n0 1\n2 3\n").code(), ErrorCode::Disconnected);
  EXPECT_EQ(parse_error("3 2\n0 1\n0 1\n").code(), ErrorCode::DuplicateEdge);
  EXPECT_EQ(parse_error("3 2\n0 0\n1 2\n").code(), ErrorCode::SelfLoop);
  EXPECT_EQ(parse_error("3 2\n0 1\n1 5\n").code(), ErrorCode::VertexOutOfRange);
}

TEST(EdgeList, ReadsFromFile) {
  const auto file = std::filesystem::temp_directory_path() / "walkinv_graph_io_test.txt";
  {
    std::ofstream out(file);
    out << format_edge_list(star(5));
  }
  EXPECT_EQ(read_edge_list(file), star(5));
  std::filesystem::remove(file);
  EXPECT_THROW(read_edge_list(file), Error);
}
