#pragma once

#include "json.hpp"

#include "amg/cube_props.hpp"
#include "amg/explore.hpp"
#include "amg/graph.hpp"
#include "amg/metrics.hpp"

namespace amg {

using Json = nlohmann::ordered_json;

// {"family", "n", "members": [...]}
Json to_json(const VertexSet& vs);
// {"family", "n", "order", "size", "edges": [[u, v], ...]}, u < v, pairs sorted.
Json to_json(const Graph& g);
// {"n", "radius", "diameter", "center", "periphery", "eccentricity_histogram"}
// plus "eccentricity": {label: e} when verbose.
Json to_json(const MetricSummary& m, const Graph& g, bool verbose = false);
Json to_json(const IsometryReport& r);
Json to_json(const MedianReport& r);
Json to_json(const ClassNeighborReport& r);
Json to_json(const CubePolynomial& p);
Json to_json(const HamiltonicityResult& r);

}  // namespace amg
