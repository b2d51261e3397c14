#include "amg/serialize.hpp"

namespace amg {

namespace {

Json labels(const std::vector<BitString>& words) {
  Json out = Json::array();
  for (const BitString& s : words) out.push_back(s.str());
  return out;
}

}  // namespace

Json to_json(const VertexSet& vs) {
  return Json{{"family", family_name(vs.family)}, {"n", vs.n}, {"members", labels(vs.members)}};
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v : g.adjacency[u]) {
      if (v > u) edges.push_back(Json::array({g.label(u).str(), g.label(v).str()}));
    }
  }
  return Json{{"family", family_name(g.family)},
              {"n", g.n},
              {"order", g.order()},
              {"size", edge_count(g)},
              {"edges", std::move(edges)}};
}

Json to_json(const MetricSummary& m, const Graph& g, bool verbose) {
  Json hist = Json::object();
  for (auto [e, count] : m.eccentricity_histogram()) hist[std::to_string(e)] = count;
  Json out{{"n", m.n},
           {"radius", m.radius},
           {"diameter", m.diameter},
           {"center", labels(m.center)},
           {"periphery", labels(m.periphery)},
           {"eccentricity_histogram", std::move(hist)}};
  if (verbose) {
    Json ecc = Json::object();
    for (VertexId v = 0; v < g.order(); ++v) ecc[g.label(v).str()] = m.eccentricity[v];
    out["eccentricity"] = std::move(ecc);
  }
  return out;
}

Json to_json(const IsometryReport& r) {
  Json out{{"n", r.n}, {"isometric", r.isometric}};
  if (r.witness) {
    out["witness"] = Json::array({r.witness->first.str(), r.witness->second.str()});
    out["witness_hamming"] = r.witness_hamming;
    out["witness_distance"] = r.witness_distance;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const MedianReport& r) {
  Json out{{"n", r.n}};
  out["median_closed"] = r.median_closed ? Json(*r.median_closed) : Json(nullptr);
  out["median_graph"] = r.median_graph ? Json(*r.median_graph) : Json(nullptr);
  out["advisory_only"] = r.advisory_only;
  if (r.witness) {
    Json w{{"triple", labels({r.witness->triple.begin(), r.witness->triple.end()})}};
    if (r.witness->majority) w["majority"] = r.witness->majority->str();
    if (r.median_graph) w["median_count"] = r.witness->median_count;
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const ClassNeighborReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(
        Json{{"vertex", v.vertex.str()}, {"block", v.block}, {"lower_neighbors", v.lower_neighbors}, {"expected", v.expected}});
  }
  return Json{{"n", r.n},
              {"passed", r.passed},
              {"violations", std::move(violations)},
              {"non_member_reductions", labels(r.non_member_reductions)},
              {"upward_neighbors", r.upward_neighbors}};
}

Json to_json(const CubePolynomial& p) { return Json{{"coefficients", p.coefficients}}; }

Json to_json(const HamiltonicityResult& r) {
  return Json{{"family", family_name(r.family)},
              {"n", r.n},
              {"has_path", r.has_path},
              {"has_cycle", r.has_cycle},
              {"exhausted", r.exhausted},
              {"steps", r.steps},
              {"reason", r.reason},
              {"witness", labels(r.witness)}};
}

}  // namespace amg
