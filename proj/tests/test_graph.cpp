#include "doctest.h"

#include <set>

#include "amg/graph.hpp"
#include "amg/sequences.hpp"
#include "oracles.hpp"

using namespace amg;

namespace {
BitString B(const char* s) { return BitString::parse(s); }
}  // namespace

TEST_CASE("small graphs") {
  const Graph m3 = build_graph(Family::circular_run_constrained, 3);
  CHECK(m3.order() == 4);
  CHECK(edge_count(m3) == 3);
  const VertexId hub = *m3.index_of(B("000"));
  CHECK(m3.adjacency[hub].size() == 3);

  const Graph m4 = build_graph(Family::circular_run_constrained, 4);
  CHECK(m4.order() == 5);
  CHECK(edge_count(m4) == 4);

  const Graph r3 = build_graph(Family::run_constrained, 3);
  CHECK(r3.order() == 2);
  CHECK(edge_count(r3) == 1);

  CHECK(build_graph(Family::circular_run_constrained, 0).order() == 0);
  const Graph m1 = build_graph(Family::circular_run_constrained, 1);
  REQUIRE(m1.order() == 1);
  CHECK(m1.label(0).str() == "0");
}

TEST_CASE("edge counts") {
  CHECK(edge_count(build_graph(Family::circular_run_constrained, 5)) == 15);
  CHECK(edge_count(build_graph(Family::circular_run_constrained, 6)) == 24);
  CHECK(edge_count(build_graph(Family::circular_run_constrained, 2)) == 0);
  CHECK(edge_count_R_recursive(4) == 2);
  CHECK(edge_count_R_recursive(3) == 1);
  CHECK(edge_count_R_recursive(10) == 28 * 1 + 46 * 2);
  CHECK(edge_count_M_recursive(5) == 15);
  CHECK(edge_count_M_recursive(7) == 49);
  CHECK(edge_count_M_recursive(12) == 912);
}

TEST_CASE("edge counts agree three ways") {
  for (int n = 0; n <= 20; ++n) {
    const auto em = edge_count(build_graph(Family::circular_run_constrained, n));
    CHECK(BigInt(em) == edge_count_M_closed(n));
    if (n >= 5) CHECK(em == edge_count_M_recursive(n));
    const auto er = edge_count(build_graph(Family::run_constrained, n));
    CHECK(er == edge_count_R_recursive(n));
    if (n >= 8) CHECK(BigInt(er) == edge_count_R_closed(n));
  }
}

TEST_CASE("edges match a pairwise Hamming audit") {
  for (Family f : {Family::fibonacci, Family::lucas, Family::run_constrained, Family::circular_run_constrained}) {
    for (int n = 1; n <= 10; ++n) {
      const Graph g = build_graph(f, n);
      std::set<std::pair<std::string, std::string>> listed;
      std::size_t degree_sum = 0;
      for (VertexId u = 0; u < g.order(); ++u) {
        degree_sum += g.adjacency[u].size();
        for (VertexId v : g.adjacency[u]) {
          CHECK(u != v);
          CHECK(hamming(g.label(u), g.label(v)) == 1);
          CHECK(g.adjacent(v, u));
          listed.insert({g.label(u).str(), g.label(v).str()});
        }
      }
      CHECK(degree_sum == 2 * edge_count(g));
      CHECK(listed.size() == degree_sum);
      std::vector<std::string> words;
      for (const auto& w : g.vertices.members) words.push_back(w.str());
      CHECK(edge_count(g) == oracle::edge_count(words));
    }
  }
}

TEST_CASE("hypercube and Fibonacci cube sizes") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(edge_count(build_graph(Family::hypercube, n)) == static_cast<std::uint64_t>(n) << (n - 1));
  }
  // |E(Gamma_n)| for n = 1..8
  const std::vector<std::uint64_t> fib_cube{1, 2, 5, 10, 20, 38, 71, 130};
  for (int n = 1; n <= 8; ++n) CHECK(edge_count(build_graph(Family::fibonacci, n)) == fib_cube[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("degree sequences") {
  CHECK(degree_sequence(build_graph(Family::circular_run_constrained, 4)) == std::vector<int>{4, 1, 1, 1, 1});
  CHECK(degree_sequence(build_graph(Family::circular_run_constrained, 3)) == std::vector<int>{3, 1, 1, 1});
  CHECK(degree_sequence(build_graph(Family::circular_run_constrained, 2)) == std::vector<int>{0});
}

TEST_CASE("R_n sits inside M_n as an induced subgraph") {
  for (int n = 1; n <= 14; ++n) {
    const Graph m = build_graph(Family::circular_run_constrained, n);
    const Graph r = build_graph(Family::run_constrained, n);
    std::size_t inside = 0;
    for (VertexId u = 0; u < m.order(); ++u) {
      if (!is_member(Family::run_constrained, m.label(u))) continue;
      for (VertexId v : m.adjacency[u]) {
        if (v > u && is_member(Family::run_constrained, m.label(v))) ++inside;
      }
    }
    CHECK(inside == edge_count(r));
  }
}

TEST_CASE("class neighbour structure") {
  for (int n = 3; n <= 14; ++n) {
    const auto report = verify_class_neighbors(n);
    CHECK(report.passed);
    CHECK(report.violations.empty());
    CHECK(report.non_member_reductions.empty());
  }
}

TEST_CASE("class neighbours of the M_3 star") {
  const auto report = verify_class_neighbors(3);
  CHECK(report.passed);
  // Each leaf of block 1 reaches 000 in block 0 and nothing else.
  const Graph g = build_graph(Family::circular_run_constrained, 3);
  for (const char* leaf : {"001", "010", "100"}) {
    const VertexId v = *g.index_of(B(leaf));
    REQUIRE(g.adjacency[v].size() == 1);
    CHECK(g.label(g.adjacency[v][0]).str() == "000");
  }
}

TEST_CASE("DOT export") {
  CHECK(export_dot(build_graph(Family::circular_run_constrained, 2)) == "graph circular_run_constrained_2 {\n  \"00\";\n}\n");
  CHECK(export_dot(build_graph(Family::circular_run_constrained, 0)) == "graph circular_run_constrained_0 {\n}\n");
  const std::string m3 = export_dot(build_graph(Family::circular_run_constrained, 3));
  CHECK(m3 ==
        "graph circular_run_constrained_3 {\n"
        "  \"000\";\n  \"001\";\n  \"010\";\n  \"100\";\n"
        "  \"000\" -- \"001\";\n  \"000\" -- \"010\";\n  \"000\" -- \"100\";\n"
        "}\n");
  CHECK(export_dot(build_graph(Family::circular_run_constrained, 9)) == export_dot(build_graph(Family::circular_run_constrained, 9)));
}
