#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "triameter/error.hpp"
#include "triameter/io.hpp"

namespace triameter {
namespace {

Errc code_of(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return Errc::Empty;
}

void expect_matches_reference(const Graph& g, const std::string& text) {
  auto ref = oracle::decode_graph6(text);
  ASSERT_EQ(ref.n, g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v)
      if (u != v) EXPECT_EQ(ref.adj[u][v], g.adjacent(u, v)) << text << " " << u << "," << v;
}

TEST(Graph6Test, KnownStrings) {
  auto k3 = parse_graph6("Bw");
  EXPECT_EQ(k3, Graph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}}));
  expect_matches_reference(k3, "Bw");

  auto k4 = parse_graph6("C~");
  EXPECT_EQ(k4.size(), 6);
  expect_matches_reference(k4, "C~");

  auto k1 = parse_graph6("@");
  EXPECT_EQ(k1.order(), 1);
  EXPECT_EQ(k1.size(), 0);
}

TEST(Graph6Test, WriteKnownGraphs) {
  EXPECT_EQ(write_graph6(Graph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}})), "Bw");
  EXPECT_EQ(write_graph6(Graph::from_edge_list(1, {})), "@");
  auto p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(write_graph6(p4), "Ch");
  expect_matches_reference(parse_graph6("Ch"), "Ch");
}

TEST(Graph6Test, HeaderAndLineEndings) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\r\n").size(), 3);
  EXPECT_EQ(code_of(">>sparse6<<Bw"), Errc::BadHeader);
}

TEST(Graph6Test, Errors) {
  EXPECT_EQ(code_of("B w"), Errc::BadChar);
  EXPECT_EQ(code_of("C"), Errc::TruncatedPayload);
  EXPECT_EQ(code_of("Bww"), Errc::TruncatedPayload);
  EXPECT_EQ(code_of(""), Errc::TruncatedPayload);
  EXPECT_EQ(code_of("~?"), Errc::TruncatedPayload);
  EXPECT_EQ(code_of("?"), Errc::Empty);
}

TEST(Graph6Test, MultiByteOrder) {
  std::mt19937_64 rng(7);
  auto g = oracle::random_graph(100, 0.05, rng);
  auto text = write_graph6(g);
  EXPECT_EQ(static_cast<unsigned char>(text[0]), 126);
  EXPECT_EQ(parse_graph6(text), g);
  expect_matches_reference(g, text);
}

TEST(Graph6Test, RoundTripRandomGraphs) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> order(1, 62);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    auto g = oracle::random_graph(order(rng), density(rng), rng);
    auto text = write_graph6(g);
    ASSERT_EQ(parse_graph6(text), g) << text;
    if (trial % 50 == 0) expect_matches_reference(g, text);
  }
}

TEST(EdgeListTest, ReadsSeveralGraphsWithComments) {
  std::istringstream in("# two graphs\n3 2\n0 1\n1 2\n\n2 1\n0 1\n");
  auto graphs = read_graphs(in, GraphFormat::EdgeList);
  ASSERT_EQ(graphs.size(), 2U);
  EXPECT_EQ(graphs[0], Graph::from_edge_list(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(graphs[1].size(), 1);
}

TEST(EdgeListTest, WriteThenRead) {
  auto g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(write_edge_list(g), "4 4\n0 1\n0 3\n1 2\n2 3\n");
  std::istringstream in(write_edge_list(g));
  EXPECT_EQ(read_graphs(in, GraphFormat::EdgeList).front(), g);
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  std::istringstream missing("3 2\n0 1\n");
  try {
    read_graphs(missing, GraphFormat::EdgeList);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SourceParse);
  }
  std::istringstream bad("3 1\n\n0 7\n");
  try {
    read_graphs(bad, GraphFormat::EdgeList);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::istringstream g6("Bw\nB!\n");
  try {
    read_graphs(g6, GraphFormat::Graph6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SourceParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(FormatTest, Sniffing) {
  EXPECT_EQ(sniff_format("4 3"), GraphFormat::EdgeList);
  EXPECT_EQ(sniff_format("  12 0"), GraphFormat::EdgeList);
  EXPECT_EQ(sniff_format("Bw"), GraphFormat::Graph6);
  EXPECT_EQ(sniff_format(">>graph6<<Bw"), GraphFormat::Graph6);
}

} // namespace
} // namespace triameter
