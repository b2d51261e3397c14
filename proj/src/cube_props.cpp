#include "amg/cube_props.hpp"

#include <stdexcept>

#include "amg/metrics.hpp"

namespace amg {

IsometryReport is_isometric_subgraph(const Graph& g) {
  IsometryReport report;
  report.n = g.n;
  const DistanceMatrix dist(g);
  const auto order = static_cast<VertexId>(g.order());
  for (VertexId u = order; u-- > 0;) {
    for (VertexId v = u; v-- > 0;) {
      const int h = hamming(g.label(u), g.label(v));
      const int d = dist(u, v);
      if (d == h) continue;
      if (!report.witness || h < report.witness_hamming) {
        report.isometric = false;
        report.witness = std::pair{g.label(u), g.label(v)};
        report.witness_hamming = h;
        report.witness_distance = d;
      }
    }
  }
  return report;
}

BitString majority(const BitString& u, const BitString& v, const BitString& w) {
  if (u.size() != v.size() || u.size() != w.size()) throw std::invalid_argument("majority: length mismatch");
  const std::uint64_t a = u.value(), b = v.value(), c = w.value();
  return BitString((a & b) | (a & c) | (b & c), u.size());
}

MedianReport is_median_closed(const Graph& g) {
  MedianReport report;
  report.n = g.n;
  report.median_closed = true;
  report.advisory_only = !is_isometric_subgraph(g).isometric;
  const auto order = static_cast<VertexId>(g.order());
  for (VertexId i = 0; i < order; ++i) {
    for (VertexId j = i + 1; j < order; ++j) {
      for (VertexId k = j + 1; k < order; ++k) {
        const BitString m = majority(g.label(i), g.label(j), g.label(k));
        if (!g.index_of(m)) {
          report.median_closed = false;
          report.witness = MedianWitness{{g.label(i), g.label(j), g.label(k)}, m, 0};
          return report;
        }
      }
    }
  }
  return report;
}

MedianReport is_median_graph(const Graph& g) {
  MedianReport report;
  report.n = g.n;
  report.median_graph = true;
  const DistanceMatrix d(g);
  const auto order = static_cast<VertexId>(g.order());
  for (VertexId i = 0; i < order; ++i) {
    for (VertexId j = i + 1; j < order; ++j) {
      for (VertexId k = j + 1; k < order; ++k) {
        std::size_t medians = 0;
        for (VertexId m = 0; m < order && medians < 2; ++m) {
          if (d(i, m) + d(m, j) == d(i, j) && d(i, m) + d(m, k) == d(i, k) && d(j, m) + d(m, k) == d(j, k)) {
            ++medians;
          }
        }
        if (medians != 1) {
          report.median_graph = false;
          // Exact count for the report; the scan above stops at two.
          if (medians > 1) {
            medians = 0;
            for (VertexId m = 0; m < order; ++m) {
              if (d(i, m) + d(m, j) == d(i, j) && d(i, m) + d(m, k) == d(i, k) && d(j, m) + d(m, k) == d(j, k)) {
                ++medians;
              }
            }
          }
          report.witness = MedianWitness{{g.label(i), g.label(j), g.label(k)}, std::nullopt, medians};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace amg
