#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amg/families.hpp"

namespace amg {

using VertexId = std::uint32_t;

/// Subgraph of Q_n induced by a vertex set: u ~ v iff hamming(u, v) == 1.
/// Vertices are indexed in canonical order; adjacency lists are sorted.
struct Graph {
  Family family = Family::hypercube;
  int n = 0;
  VertexSet vertices;
  std::vector<std::vector<VertexId>> adjacency;

  std::size_t order() const { return vertices.size(); }
  std::size_t size() const;
  const BitString& label(VertexId v) const { return vertices.members[v]; }
  std::optional<VertexId> index_of(const BitString& s) const;
  bool adjacent(VertexId u, VertexId v) const;
};

Graph build_graph(Family f, int n);
/// Induced subgraph on an arbitrary canonical vertex set (all words of equal length).
Graph induced_graph(VertexSet vertices);

std::uint64_t edge_count(const Graph& g);

/// Degrees sorted descending.
std::vector<int> degree_sequence(const Graph& g);

/// Fibonacci-run edge count from the block recursion, base 0, 0, 0, 1, 2 for n = 0..4.
std::uint64_t edge_count_R_recursive(int n);

/// Associated Mersenne edge count from the block recursion (n >= 5),
/// tabulated 0, 0, 0, 3, 4 below that.
std::uint64_t edge_count_M_recursive(int n);

struct ClassNeighborViolation {
  BitString vertex;
  int block = 0;
  int lower_neighbors = 0;  // neighbours in blocks j < block
  int expected = 0;
};

struct ClassNeighborReport {
  int n = 0;
  bool passed = true;
  std::vector<ClassNeighborViolation> violations;
  // Words of the two one-bit-cleared rotation families that failed membership.
  std::vector<BitString> non_member_reductions;
  // Vertices of block i >= 1 with a neighbour in some block j > i (informational).
  std::size_t upward_neighbors = 0;
};

/// For every vertex of rotation block i >= 1 of M_n, counts neighbours in
/// blocks j < i; passes iff that count is 2 for i > 1 and 1 for i = 1, and
/// every word of ->1^(i-1) 0 0^(i+1) R_{n-2i-1}-> and ->0 1^(i-1) 0^(i+1) R_{n-2i-1}->
/// is a member of M_n.
ClassNeighborReport verify_class_neighbors(int n);

/// Undirected DOT text, graph name "<family>_<n>", byte-deterministic.
std::string export_dot(const Graph& g);

}  // namespace amg
