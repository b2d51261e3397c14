#pragma once

#include <array>
#include <optional>
#include <utility>

#include "amg/graph.hpp"

namespace amg {

struct IsometryReport {
  int n = 0;
  bool isometric = true;
  // Present iff !isometric: a pair with graph distance > Hamming distance.
  std::optional<std::pair<BitString, BitString>> witness;
  int witness_hamming = 0;
  int witness_distance = 0;
};

/// Natural-embedding isometry: d_g(u, v) == hamming(u, v) for all pairs.
/// The witness has minimal Hamming distance; ties go to the pair whose larger
/// endpoint is greatest in canonical order, then the greatest partner.
IsometryReport is_isometric_subgraph(const Graph& g);

BitString majority(const BitString& u, const BitString& v, const BitString& w);

struct MedianWitness {
  std::array<BitString, 3> triple;
  std::optional<BitString> majority;  // set by the majority-closure check
  std::size_t median_count = 0;       // set by the distance oracle
};

struct MedianReport {
  int n = 0;
  std::optional<bool> median_closed;
  std::optional<bool> median_graph;
  // The majority check only decides medianity for isometric subgraphs.
  bool advisory_only = false;
  // First failing triple in canonical order (i < j < k).
  std::optional<MedianWitness> witness;
};

/// Every vertex triple's coordinatewise majority is again a vertex.
MedianReport is_median_closed(const Graph& g);

/// Distance oracle: every triple has exactly one vertex lying on shortest
/// paths between all three pairs.
MedianReport is_median_graph(const Graph& g);

}  // namespace amg
