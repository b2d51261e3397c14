#include "amg/metrics.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "amg/errors.hpp"

namespace amg {

namespace {

int ceil_half(int n) { return (n + 1) / 2; }

BitString word(std::initializer_list<std::pair<int, int>> pieces) {
  BitString out;
  for (auto [symbol, count] : pieces) out = out + BitString::repeat(symbol, count);
  return out;
}

void require_member(const BitString& s, const char* what) {
  if (!is_member(Family::circular_run_constrained, s)) {
    throw std::invalid_argument(std::string(what) + ": " + s.str() + " is not run-constrained circularly");
  }
}

// Positions of the ones of s in the order they can be cleared one at a
// time without leaving M_n: run by run, each run from its cyclic start.
std::vector<int> clearing_order(const BitString& s) {
  const int n = s.size();
  int start = 0;
  if (n > 0 && s.at(0) == 1 && s.at(n - 1) == 1) {
    start = n - 1;
    while (s.at(start - 1) == 1) --start;
  }
  std::vector<int> order;
  for (int k = 0; k < n; ++k) {
    const int p = (start + k) % n;
    if (s.at(p) == 1) order.push_back(p);
  }
  return order;
}

}  // namespace

std::map<int, std::size_t> MetricSummary::eccentricity_histogram() const {
  std::map<int, std::size_t> h;
  for (int e : eccentricity) ++h[e];
  return h;
}

std::vector<int> distances_from(const Graph& g, VertexId source) {
  if (source >= g.order()) throw std::out_of_range("distances_from: source out of range");
  std::vector<int> dist(g.order(), -1);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : g.adjacency[v]) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  for (VertexId v = 0; v < dist.size(); ++v) {
    if (dist[v] < 0) {
      throw DisconnectedGraph("vertex " + g.label(v).str() + " unreachable from " + g.label(source).str());
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : order_(g.order()), dist_(order_ * order_) {
  for (VertexId u = 0; u < order_; ++u) {
    const auto row = distances_from(g, u);
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(u * order_));
  }
}

MetricSummary metric_summary(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("metric_summary: empty graph");
  MetricSummary out;
  out.family = g.family;
  out.n = g.n;
  out.eccentricity.resize(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto dist = distances_from(g, v);
    out.eccentricity[v] = *std::max_element(dist.begin(), dist.end());
  }
  out.radius = *std::min_element(out.eccentricity.begin(), out.eccentricity.end());
  out.diameter = *std::max_element(out.eccentricity.begin(), out.eccentricity.end());
  for (VertexId v = 0; v < g.order(); ++v) {
    if (out.eccentricity[v] == out.radius) out.center.push_back(g.label(v));
    if (out.eccentricity[v] == out.diameter) out.periphery.push_back(g.label(v));
  }
  return out;
}

BitString far_vertex(const BitString& nu) {
  require_member(nu, "far_vertex");
  const int n = nu.size();
  if (n < 3) throw std::invalid_argument("far_vertex: requires n >= 3");
  if (weight(nu) == 0) return word({{1, ceil_half(n) - 1}, {0, n - ceil_half(n) + 1}});

  // Rotate to the form 1^r1 0^s1 ... 1^rt 0^st.
  int shift = 0;
  while (!(nu.at(shift) == 1 && nu.at((shift + n - 1) % n) == 0)) ++shift;
  const auto blocks = runs(nu.rotated_left(shift));

  struct Block {
    int ones;
    int zeros;
  };
  std::vector<Block> parts;
  for (std::size_t j = 0; j + 1 < blocks.size(); j += 2) parts.push_back({blocks[j].length, blocks[j + 1].length});

  enum class Kind { even, single_odd, pair_first, pair_inner, pair_last };
  std::vector<Kind> kind(parts.size(), Kind::even);
  std::vector<std::size_t> odd;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].zeros % 2 == 1) odd.push_back(j);
  }
  // Consecutive odd blocks pair up; the leftover one (odd count) stands alone.
  for (std::size_t q = 0; q + 1 < odd.size(); q += 2) {
    kind[odd[q]] = Kind::pair_first;
    for (std::size_t j = odd[q] + 1; j < odd[q + 1]; ++j) kind[j] = Kind::pair_inner;
    kind[odd[q + 1]] = Kind::pair_last;
  }
  if (odd.size() % 2 == 1) kind[odd.back()] = Kind::single_odd;

  BitString mu;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const int r = parts[j].ones;
    const int s = parts[j].zeros;
    switch (kind[j]) {
      case Kind::even: mu = mu + word({{0, r}, {1, s / 2}, {0, s / 2}}); break;
      case Kind::single_odd: mu = mu + word({{0, r}, {1, (s - 1) / 2}, {0, (s + 1) / 2}}); break;
      case Kind::pair_first: mu = mu + word({{0, r}, {1, (s + 1) / 2}, {0, (s - 1) / 2}}); break;
      case Kind::pair_inner: mu = mu + word({{0, r + 1}, {1, s / 2}, {0, s / 2 - 1}}); break;
      case Kind::pair_last: mu = mu + word({{0, r + 1}, {1, (s - 1) / 2}, {0, (s - 1) / 2}}); break;
    }
  }
  return mu.rotated_left(-shift);
}

std::vector<BitString> monotone_path(const BitString& alpha, const BitString& beta) {
  require_member(alpha, "monotone_path");
  require_member(beta, "monotone_path");
  if (alpha.size() != beta.size()) throw std::invalid_argument("monotone_path: length mismatch");
  std::vector<BitString> path{alpha};
  BitString cur = alpha;
  for (int p : clearing_order(alpha)) {
    cur = cur.with_bit(p, 0);
    path.push_back(cur);
  }
  const auto order = clearing_order(beta);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    cur = cur.with_bit(*it, 1);
    path.push_back(cur);
  }
  return path;
}

std::pair<int, std::vector<BitString>> predicted_center(int n) {
  if (n < 3) throw std::invalid_argument("predicted_center: requires n >= 3");
  return {ceil_half(n) - 1, {BitString::zeros(n)}};
}

std::pair<int, std::vector<BitString>> predicted_periphery(int n) {
  if (n < 3) throw std::invalid_argument("predicted_periphery: requires n >= 3");
  const int diameter = 2 * (ceil_half(n) - 1);
  std::vector<BitString> anchors;
  if (n % 2 == 1) {
    anchors.push_back(word({{1, ceil_half(n) - 1}, {0, ceil_half(n)}}));
  } else if (n % 4 == 0) {
    const int t = n / 4;
    anchors.push_back(word({{1, 1}, {0, 2}, {1, 2 * t - 2}, {0, 2 * t - 1}}));
    anchors.push_back(word({{1, t - 1}, {0, t}, {1, t}, {0, t + 1}}));
    anchors.push_back(word({{1, 2 * t - 1}, {0, 2 * t + 1}}));
  } else {
    const int t = (n - 2) / 4;
    anchors.push_back(word({{1, 1}, {0, 2}, {1, 2 * t - 1}, {0, 2 * t}}));
    anchors.push_back(word({{1, t - 1}, {0, t}, {1, t + 1}, {0, t + 2}}));
    anchors.push_back(word({{1, t}, {0, t + 1}, {1, t}, {0, t + 1}}));
    anchors.push_back(word({{1, 2 * t}, {0, 2 * t + 2}}));
  }
  std::vector<BitString> out;
  const BitString null_word;
  for (const BitString& a : anchors) {
    auto rot = rotation_closure(a, std::span<const BitString>(&null_word, 1));
    out.insert(out.end(), rot.begin(), rot.end());
  }
  canonicalize(out);
  return {diameter, out};
}

}  // namespace amg
