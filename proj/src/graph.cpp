#include "amg/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "amg/sequences.hpp"

namespace amg {

std::size_t Graph::size() const { return static_cast<std::size_t>(edge_count(*this)); }

std::optional<VertexId> Graph::index_of(const BitString& s) const {
  const auto& m = vertices.members;
  auto it = std::lower_bound(m.begin(), m.end(), s);
  if (it == m.end() || *it != s) return std::nullopt;
  return static_cast<VertexId>(it - m.begin());
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nb = adjacency[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph induced_graph(VertexSet vertices) {
  Graph g;
  g.family = vertices.family;
  g.n = vertices.n;
  g.vertices = std::move(vertices);
  const auto& members = g.vertices.members;
  std::unordered_map<std::uint64_t, VertexId> index;
  index.reserve(members.size() * 2);
  for (VertexId i = 0; i < members.size(); ++i) index.emplace(members[i].value(), i);

  g.adjacency.resize(members.size());
  for (VertexId i = 0; i < members.size(); ++i) {
    const std::uint64_t v = members[i].value();
    for (int b = 0; b < g.n; ++b) {
      if (auto it = index.find(v ^ (std::uint64_t{1} << b)); it != index.end()) g.adjacency[i].push_back(it->second);
    }
    std::sort(g.adjacency[i].begin(), g.adjacency[i].end());
  }
  return g;
}

Graph build_graph(Family f, int n) { return induced_graph(enumerate(f, n)); }

std::uint64_t edge_count(const Graph& g) {
  std::uint64_t degree_sum = 0;
  for (const auto& nb : g.adjacency) degree_sum += nb.size();
  return degree_sum / 2;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  out.reserve(g.order());
  for (const auto& nb : g.adjacency) out.push_back(static_cast<int>(nb.size()));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::uint64_t edge_count_R_recursive(int n) {
  if (n < 0) throw std::invalid_argument("edge_count_R_recursive: negative n");
  std::vector<std::uint64_t> edges = {0, 0, 0, 1, 2};
  for (int m = 5; m <= n; ++m) {
    const int top = (m + 1) / 2 - 1;
    std::uint64_t e = 0;
    for (int i = 0; i <= top; ++i) e += edges[static_cast<std::size_t>(m - 2 * i - 1)];
    e += run_constrained_count(m - 3);
    for (int i = 2; i <= top; ++i) e += 2 * run_constrained_count(m - 2 * i - 1);
    edges.push_back(e);
  }
  return edges[static_cast<std::size_t>(n)];
}

std::uint64_t edge_count_M_recursive(int n) {
  if (n < 0) throw std::invalid_argument("edge_count_M_recursive: negative n");
  static constexpr std::uint64_t kSmall[] = {0, 0, 0, 3, 4};
  if (n < 5) return kSmall[n];
  const int top = (n + 1) / 2 - 1;
  std::uint64_t e = 0;
  for (int i = 0; i <= top; ++i) e += static_cast<std::uint64_t>(2 * i + 1) * edge_count_R_recursive(n - 2 * i - 1);
  e += 3 * run_constrained_count(n - 3);
  for (int i = 2; i <= top; ++i) e += 2 * static_cast<std::uint64_t>(2 * i + 1) * run_constrained_count(n - 2 * i - 1);
  return e;
}

ClassNeighborReport verify_class_neighbors(int n) {
  if (n < 3) throw std::invalid_argument("verify_class_neighbors: requires n >= 3");
  ClassNeighborReport report;
  report.n = n;
  const auto blocks = decompose_M(n);
  const Graph g = build_graph(Family::circular_run_constrained, n);

  std::vector<int> block_of(g.order(), -1);
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
    for (const BitString& s : blocks[static_cast<std::size_t>(i)]) {
      const auto id = g.index_of(s);
      if (!id) throw std::logic_error("decomposition word missing from M_n: " + s.str());
      block_of[*id] = i;
    }
  }

  for (VertexId v = 0; v < g.order(); ++v) {
    const int i = block_of[v];
    if (i < 1) continue;
    int lower = 0;
    bool upward = false;
    for (VertexId u : g.adjacency[v]) {
      if (block_of[u] < i) ++lower;
      if (block_of[u] > i) upward = true;
    }
    if (upward) ++report.upward_neighbors;
    const int expected = i == 1 ? 1 : 2;
    if (lower != expected) report.violations.push_back({g.label(v), i, lower, expected});
  }

  for (int i = 1; i <= (n + 1) / 2 - 1; ++i) {
    const int m = n - 2 * i - 1;
    const VertexSet inner = m == 0 ? VertexSet{Family::run_constrained, 0, {BitString{}}} : enumerate(Family::run_constrained, m);
    const BitString head_cleared = BitString::repeat(1, i - 1) + BitString::repeat(0, i + 2);
    const BitString tail_cleared = BitString::repeat(0, 1) + BitString::repeat(1, i - 1) + BitString::repeat(0, i + 1);
    for (const BitString& anchor : {head_cleared, tail_cleared}) {
      for (const BitString& s : rotation_closure(anchor, inner.members)) {
        if (!is_member(Family::circular_run_constrained, s)) report.non_member_reductions.push_back(s);
      }
    }
  }
  canonicalize(report.non_member_reductions);
  report.passed = report.violations.empty() && report.non_member_reductions.empty();
  return report;
}

std::string export_dot(const Graph& g) {
  std::string out = "graph " + std::string(family_name(g.family)) + "_" + std::to_string(g.n) + " {\n";
  for (const BitString& s : g.vertices.members) out += "  \"" + s.str() + "\";\n";
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v : g.adjacency[u]) {
      if (v > u) out += "  \"" + g.label(u).str() + "\" -- \"" + g.label(v).str() + "\";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace amg
