#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "amg/graph.hpp"

namespace amg {

/// c_k = number of induced subgraphs isomorphic to Q_k, low to high.
/// Empty for the empty graph.
struct CubePolynomial {
  std::vector<std::uint64_t> coefficients;

  std::int64_t evaluate(std::int64_t x) const;
};

/// Counts coordinate subcubes {base xor S : S subset of a k-set of
/// coordinates} lying entirely in V(g), level by level.
CubePolynomial cube_polynomial(const Graph& g);

/// Number of 4-cycles of g by common-neighbour pairs; works for any simple
/// graph and does not use the labels.
std::uint64_t count_four_cycles(const Graph& g);

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

struct HamiltonicityResult {
  Family family = Family::hypercube;
  int n = 0;
  bool has_path = false;
  bool has_cycle = false;
  // True when the question was settled (witness found, or the search space /
  // a structural obstruction ruled it out). False means the step budget ran
  // out and the answer is unknown.
  bool exhausted = false;
  std::vector<BitString> witness;
  std::uint64_t steps = 0;
  std::string reason;

  bool indeterminate() const { return !exhausted; }
};

/// Backtracking search with degree, bipartition-balance, connectivity and
/// dead-end pruning. A returned witness has been re-validated.
HamiltonicityResult hamiltonian_path(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);
HamiltonicityResult hamiltonian_cycle(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

/// Checks a vertex sequence visits every vertex once along edges (and closes
/// when `closed`).
bool is_hamiltonian_walk(const Graph& g, const std::vector<BitString>& walk, bool closed);

struct DegreeRow {
  int n = 0;
  std::size_t order = 0;
  std::uint64_t edges = 0;
  std::map<int, std::size_t> counts;  // degree -> number of vertices
};

std::vector<DegreeRow> degree_distribution_report(Family f, int n_lo, int n_hi);

}  // namespace amg
