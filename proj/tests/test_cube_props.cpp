#include "doctest.h"

#include <random>

#include "amg/cube_props.hpp"
#include "amg/metrics.hpp"
#include "oracles.hpp"

using namespace amg;

namespace {

BitString B(const char* s) { return BitString::parse(s); }

// All-pairs isometry by string BFS.
bool oracle_isometric(int n) {
  const auto words = oracle::all_words(n, oracle::circular_run_word);
  for (const auto& u : words) {
    for (const auto& [v, d] : oracle::bfs(words, u)) {
      if (d != oracle::hamming(u, v)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("natural embedding isometry") {
  CHECK(is_isometric_subgraph(build_graph(Family::circular_run_constrained, 8)).isometric);
  CHECK(is_isometric_subgraph(build_graph(Family::circular_run_constrained, 3)).isometric);
  for (int n = 3; n <= 12; ++n) {
    const auto r = is_isometric_subgraph(build_graph(Family::circular_run_constrained, n));
    CHECK(r.isometric == (n <= 8));
    CHECK(r.witness.has_value() == !r.isometric);
    if (r.witness) {
      CHECK(r.witness_distance > r.witness_hamming);
      CHECK(hamming(r.witness->first, r.witness->second) == r.witness_hamming);
    }
  }
  for (int n = 3; n <= 9; ++n) CHECK(oracle_isometric(n) == (n <= 8));
}

TEST_CASE("the n = 9 witness") {
  const Graph g = build_graph(Family::circular_run_constrained, 9);
  const auto r = is_isometric_subgraph(g);
  REQUIRE(r.witness);
  CHECK(r.witness->first.str() == "111100000");
  CHECK(r.witness->second.str() == "100100000");
  CHECK(r.witness_hamming == 2);
  CHECK(r.witness_distance > 2);
  // Neither intermediate word is a vertex.
  CHECK_FALSE(g.index_of(B("101100000")));
  CHECK_FALSE(g.index_of(B("110100000")));
  const auto d = distances_from(g, *g.index_of(B("111100000")));
  CHECK(d[*g.index_of(B("100100000"))] == r.witness_distance);
}

TEST_CASE("other families") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(is_isometric_subgraph(build_graph(Family::fibonacci, n)).isometric);
    CHECK(is_isometric_subgraph(build_graph(Family::lucas, n)).isometric);
  }
}

TEST_CASE("majority") {
  CHECK(majority(B("1110000"), B("1000000"), B("0010000")).str() == "1010000");
  CHECK(majority(B("10110"), B("10110"), B("10110")).str() == "10110");
  CHECK(majority(B("000"), B("011"), B("101")).str() == "001");
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::uint64_t> pick(0, (1U << 10) - 1);
  for (int t = 0; t < 300; ++t) {
    const BitString a(pick(rng), 10), b(pick(rng), 10), c(pick(rng), 10);
    const BitString m = majority(a, b, c);
    CHECK(m == majority(b, c, a));
    CHECK(m == majority(c, a, b));
    CHECK(m == majority(b, a, c));
    CHECK(majority(a, a, b) == a);
    for (int i = 0; i < 10; ++i) CHECK(m.at(i) == ((a.at(i) + b.at(i) + c.at(i)) >= 2 ? 1 : 0));
  }
}

TEST_CASE("median closure") {
  CHECK(*is_median_closed(build_graph(Family::circular_run_constrained, 5)).median_closed);
  CHECK(*is_median_closed(build_graph(Family::circular_run_constrained, 4)).median_closed);

  const Graph m7 = build_graph(Family::circular_run_constrained, 7);
  const auto r = is_median_closed(m7);
  CHECK_FALSE(*r.median_closed);
  REQUIRE(r.witness);
  REQUIRE(r.witness->majority);
  CHECK_FALSE(m7.index_of(*r.witness->majority));
  // The triple from the boundary argument also fails.
  const BitString eta = majority(B("1110000"), B("1000000"), B("0010000"));
  for (const char* s : {"1110000", "1000000", "0010000"}) CHECK(m7.index_of(B(s)));
  CHECK(eta.str() == "1010000");
  CHECK_FALSE(m7.index_of(eta));
}

TEST_CASE("median graph oracle") {
  CHECK_FALSE(*is_median_graph(build_graph(Family::circular_run_constrained, 7)).median_graph);
  CHECK(*is_median_graph(build_graph(Family::circular_run_constrained, 6)).median_graph);
  CHECK(*is_median_graph(build_graph(Family::circular_run_constrained, 4)).median_graph);
  for (int n = 3; n <= 10; ++n) {
    const Graph g = build_graph(Family::circular_run_constrained, n);
    const auto oracle = is_median_graph(g);
    CHECK(*oracle.median_graph == (n <= 6));
    CHECK(oracle.witness.has_value() == !*oracle.median_graph);
    const auto closure = is_median_closed(g);
    CHECK(closure.advisory_only == !is_isometric_subgraph(g).isometric);
    if (!closure.advisory_only) CHECK(*closure.median_closed == *oracle.median_graph);
  }
}

TEST_CASE("median witness counts") {
  const auto r = is_median_graph(build_graph(Family::circular_run_constrained, 7));
  REQUIRE(r.witness);
  CHECK(r.witness->median_count != 1);
}

TEST_CASE("hypercubes are median") {
  for (int n = 1; n <= 6; ++n) {
    const Graph q = build_graph(Family::hypercube, n);
    CHECK(*is_median_closed(q).median_closed);
    CHECK(*is_median_graph(q).median_graph);
  }
}

TEST_CASE("Fibonacci cubes are median") {
  for (int n = 1; n <= 8; ++n) CHECK(*is_median_graph(build_graph(Family::fibonacci, n)).median_graph);
}
