#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "amg/graph.hpp"

namespace amg {

/// Eccentricities and the derived radius / diameter / center / periphery.
struct MetricSummary {
  Family family = Family::hypercube;
  int n = 0;
  std::vector<int> eccentricity;  // indexed by VertexId
  int radius = 0;
  int diameter = 0;
  std::vector<BitString> center;
  std::vector<BitString> periphery;

  std::map<int, std::size_t> eccentricity_histogram() const;
};

/// Breadth-first distances from `source`. Throws DisconnectedGraph if some
/// vertex is unreachable.
std::vector<int> distances_from(const Graph& g, VertexId source);

/// Row-major |V| x |V| distance table.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const { return order_; }
  int operator()(VertexId u, VertexId v) const { return dist_[static_cast<std::size_t>(u) * order_ + v]; }

 private:
  std::size_t order_ = 0;
  std::vector<std::uint16_t> dist_;
};

/// Exact summary from one traversal per vertex. Throws std::invalid_argument
/// on the empty graph and DisconnectedGraph when g is not connected.
MetricSummary metric_summary(const Graph& g);

/// A vertex of M_n whose Hamming distance from nu is at least
/// w(nu) + ceil((n - w(nu)) / 2) - 1, built block by block from the 0-run
/// parities of nu. nu must be a member of length >= 3.
BitString far_vertex(const BitString& nu);

/// Walk alpha -> 0^n -> beta of length w(alpha) + w(beta) through M_n.
/// Ones are cleared run by run in cyclic order, starting from the first run
/// start at or after position 1 (a run wrapping past position n is cleared
/// from its start); beta's ones are set in the reverse of that order.
std::vector<BitString> monotone_path(const BitString& alpha, const BitString& beta);

/// (ceil(n/2) - 1, {0^n}).
std::pair<int, std::vector<BitString>> predicted_center(int n);

/// (2 (ceil(n/2) - 1), union of the rotation classes of the closed-form periphery).
std::pair<int, std::vector<BitString>> predicted_periphery(int n);

}  // namespace amg
