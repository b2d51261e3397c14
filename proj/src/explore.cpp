#include "amg/explore.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <unordered_map>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace amg {

std::int64_t CubePolynomial::evaluate(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + static_cast<std::int64_t>(*it);
  return acc;
}

CubePolynomial cube_polynomial(const Graph& g) {
  CubePolynomial out;
  if (g.order() == 0) return out;
  if (g.n > 32) throw std::invalid_argument("cube_polynomial: n > 32");
  // key = mask << 32 | base, base zero on the mask coordinates.
  std::unordered_set<std::uint64_t> level;
  for (const BitString& s : g.vertices.members) level.insert(s.value());
  while (!level.empty()) {
    out.coefficients.push_back(level.size());
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t key : level) {
      const std::uint64_t base = key & 0xFFFFFFFFULL;
      const std::uint64_t mask = key >> 32;
      const int first = mask == 0 ? 0 : std::bit_width(mask);
      for (int c = first; c < g.n; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (base & bit) continue;
        if (level.contains((mask << 32) | base | bit)) next.insert(((mask | bit) << 32) | base);
      }
    }
    level = std::move(next);
  }
  return out;
}

std::uint64_t count_four_cycles(const Graph& g) {
  // Each 4-cycle has two diagonals; each diagonal pair {u, w} with c common
  // neighbours closes c(c-1)/2 cycles.
  std::uint64_t twice = 0;
  std::vector<std::uint32_t> common(g.order(), 0);
  for (VertexId u = 0; u < g.order(); ++u) {
    std::fill(common.begin(), common.end(), 0);
    for (VertexId v : g.adjacency[u]) {
      for (VertexId w : g.adjacency[v]) {
        if (w > u) ++common[w];
      }
    }
    for (VertexId w = u + 1; w < g.order(); ++w) twice += std::uint64_t{common[w]} * (common[w] - 1) / 2;
  }
  return twice / 2;
}

namespace {

// Edge-constraint search for a Hamiltonian cycle. Each edge is undecided,
// required or deleted. Propagation: a vertex with two live edges requires
// both, a vertex with two required edges loses the rest, and an edge that
// would close a required path into a short cycle is deleted.
class CycleSolver {
 public:
  explicit CycleSolver(std::vector<std::vector<VertexId>> adjacency) : adj_(std::move(adjacency)) {
    const auto n = static_cast<VertexId>(adj_.size());
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v : adj_[u]) {
        if (u < v) {
          ids_.emplace(key(u, v), static_cast<std::uint32_t>(ends_.size()));
          ends_.push_back({u, v});
        }
      }
    }
    incident_.resize(n);
    for (std::uint32_t e = 0; e < ends_.size(); ++e) {
      incident_[ends_[e][0]].push_back(e);
      incident_[ends_[e][1]].push_back(e);
    }
    tie_.resize(ends_.size());
    std::iota(tie_.begin(), tie_.end(), 0);
  }

  void reseed(std::uint64_t seed) {
    std::iota(tie_.begin(), tie_.end(), 0);
    if (seed != 0) {
      std::mt19937_64 rng(seed);
      std::shuffle(tie_.begin(), tie_.end(), rng);
    }
  }

  void set_limit(std::uint64_t limit) {
    limit_ = limit;
    budget_hit_ = false;
  }
  bool budget_hit() const { return budget_hit_; }
  std::uint64_t steps() const { return steps_; }

  // Returns true and fills `cycle` with a vertex order if one exists.
  bool solve(std::vector<VertexId>& cycle) {
    const std::size_t n = adj_.size();
    State st;
    st.edge.assign(ends_.size(), kOpen);
    st.live.resize(n);
    st.req.assign(n, 0);
    st.other.resize(n);
    st.length.assign(n, 1);
    for (VertexId v = 0; v < n; ++v) {
      st.live[v] = static_cast<int>(incident_[v].size());
      st.other[v] = v;
    }
    std::vector<VertexId> queue(n);
    std::iota(queue.begin(), queue.end(), 0);
    if (!propagate(st, queue)) return false;
    if (!search(st)) return false;
    cycle = trace(*solution_);
    return true;
  }

 private:
  static constexpr char kOpen = 0, kRequired = 1, kDeleted = 2;

  struct State {
    std::vector<char> edge;
    std::vector<int> live;  // incident edges not deleted
    std::vector<int> req;   // incident required edges
    // For an endpoint of a required path: the path's other endpoint, and the
    // number of vertices on it. A vertex with no required edge is its own path.
    std::vector<VertexId> other;
    std::vector<std::uint32_t> length;
    std::size_t required = 0;
  };

  static std::uint64_t key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t{u} << 32) | v;
  }

  VertexId far_end(std::uint32_t e, VertexId u) const { return ends_[e][0] == u ? ends_[e][1] : ends_[e][0]; }

  bool remove(State& st, std::uint32_t e, std::vector<VertexId>& queue) {
    if (st.edge[e] == kRequired) return false;
    if (st.edge[e] == kDeleted) return true;
    st.edge[e] = kDeleted;
    for (VertexId x : ends_[e]) {
      --st.live[x];
      queue.push_back(x);
    }
    return true;
  }

  bool require(State& st, std::uint32_t e, std::vector<VertexId>& queue) {
    if (st.edge[e] == kRequired) return true;
    if (st.edge[e] == kDeleted) return false;
    const VertexId u = ends_[e][0];
    const VertexId v = ends_[e][1];
    if (st.req[u] == 2 || st.req[v] == 2) return false;
    const std::size_t n = adj_.size();
    const VertexId a = st.other[u];
    const VertexId b = st.other[v];
    st.edge[e] = kRequired;
    ++st.req[u];
    ++st.req[v];
    ++st.required;
    queue.push_back(u);
    queue.push_back(v);
    if (a == v) return st.required == n;  // closes the path into a cycle
    const std::uint32_t len = st.length[u] + st.length[v];
    st.other[a] = b;
    st.other[b] = a;
    st.length[a] = st.length[b] = len;
    if (len < n) {
      if (auto it = ids_.find(key(a, b)); it != ids_.end() && it->second != e) {
        if (!remove(st, it->second, queue)) return false;
      }
    }
    return true;
  }

  bool propagate(State& st, std::vector<VertexId>& queue) {
    while (!queue.empty()) {
      const VertexId x = queue.back();
      queue.pop_back();
      if (st.live[x] < 2) return false;
      if (st.req[x] == 2 && st.live[x] > 2) {
        for (std::uint32_t e : incident_[x]) {
          if (st.edge[e] == kOpen && !remove(st, e, queue)) return false;
        }
      } else if (st.live[x] == 2 && st.req[x] < 2) {
        for (std::uint32_t e : incident_[x]) {
          if (st.edge[e] == kOpen && !require(st, e, queue)) return false;
        }
      }
    }
    return true;
  }

  bool connected_live(const State& st) {
    const std::size_t n = adj_.size();
    seen_.assign(n, 0);
    stack_.assign(1, 0);
    seen_[0] = 1;
    std::size_t count = 1;
    while (!stack_.empty()) {
      const VertexId x = stack_.back();
      stack_.pop_back();
      for (std::uint32_t e : incident_[x]) {
        if (st.edge[e] == kDeleted) continue;
        const VertexId y = far_end(e, x);
        if (!seen_[y]) {
          seen_[y] = 1;
          ++count;
          stack_.push_back(y);
        }
      }
    }
    return count == n;
  }

  bool search(State& st) {
    if (st.required == adj_.size()) {
      solution_ = st;
      return true;
    }
    if (++steps_ > limit_) {
      budget_hit_ = true;
      return false;
    }
    if (!connected_live(st)) return false;

    // Branch on an open edge at the most constrained unsaturated vertex.
    VertexId pick = 0;
    int best = std::numeric_limits<int>::max();
    for (VertexId x = 0; x < adj_.size(); ++x) {
      if (st.req[x] < 2 && st.live[x] < best) {
        best = st.live[x];
        pick = x;
      }
    }
    std::uint32_t chosen = 0;
    bool found = false;
    for (std::uint32_t e : incident_[pick]) {
      if (st.edge[e] != kOpen) continue;
      if (!found || tie_[e] < tie_[chosen]) chosen = e;
      found = true;
    }
    if (!found) return false;

    std::vector<VertexId> queue;
    {
      State branch = st;
      if (require(branch, chosen, queue) && propagate(branch, queue) && search(branch)) return true;
      if (budget_hit_) return false;
    }
    queue.clear();
    if (!remove(st, chosen, queue) || !propagate(st, queue)) return false;
    return search(st);
  }

  std::vector<VertexId> trace(const State& st) const {
    std::vector<VertexId> cycle{0};
    VertexId prev = 0;
    VertexId cur = 0;
    while (cycle.size() < adj_.size()) {
      for (std::uint32_t e : incident_[cur]) {
        const VertexId y = far_end(e, cur);
        if (st.edge[e] == kRequired && y != prev && !(cycle.size() > 1 && y == 0)) {
          prev = cur;
          cur = y;
          break;
        }
      }
      cycle.push_back(cur);
    }
    return cycle;
  }

  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::array<VertexId, 2>> ends_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::unordered_map<std::uint64_t, std::uint32_t> ids_;
  std::vector<std::uint32_t> tie_;
  std::optional<State> solution_;
  std::vector<char> seen_;
  std::vector<VertexId> stack_;
  std::uint64_t steps_ = 0;
  std::uint64_t limit_ = 0;
  bool budget_hit_ = false;
};

bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : g.adjacency[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == g.order();
}

HamiltonicityResult settle(HamiltonicityResult r, std::string reason) {
  r.exhausted = true;
  r.reason = std::move(reason);
  return r;
}

HamiltonicityResult search(const Graph& g, bool closed, std::uint64_t budget) {
  HamiltonicityResult r;
  r.family = g.family;
  r.n = g.n;
  const std::size_t order = g.order();
  if (order == 0) throw std::invalid_argument("hamiltonian search: empty graph");

  if (order == 1) {
    r.witness = {g.label(0)};
    r.has_path = true;
    if (closed) return settle(r, "a single vertex has no cycle");
    return settle(r, "single vertex");
  }
  if (closed && order < 3) return settle(r, "fewer than three vertices");
  if (!connected(g)) return settle(r, "graph is disconnected");

  // Hypercube subgraphs are bipartite by weight parity.
  std::size_t even = 0;
  std::size_t leaves = 0;
  for (VertexId v = 0; v < order; ++v) {
    if (weight(g.label(v)) % 2 == 0) ++even;
    if (g.adjacency[v].size() == 1) ++leaves;
  }
  const std::size_t odd = order - even;
  const std::size_t imbalance = even > odd ? even - odd : odd - even;
  if (closed) {
    if (imbalance != 0) return settle(r, "bipartition imbalance " + std::to_string(imbalance));
    if (leaves > 0) return settle(r, "vertex of degree 1");
  } else {
    if (imbalance > 1) return settle(r, "bipartition imbalance " + std::to_string(imbalance));
    if (leaves > 2) return settle(r, std::to_string(leaves) + " vertices of degree 1");
  }

  // A path in g is a cycle through an extra vertex joined to everything.
  std::vector<std::vector<VertexId>> adjacency = g.adjacency;
  const auto hub = static_cast<VertexId>(order);
  if (!closed) {
    adjacency.emplace_back();
    // With one extra vertex on a side, both path ends lie on that side.
    for (VertexId v = 0; v < order; ++v) {
      if (imbalance == 1 && (weight(g.label(v)) % 2 == 0) != (even > odd)) continue;
      adjacency[v].push_back(hub);
      adjacency[hub].push_back(v);
    }
  }

  // Attempt k reshuffles the branching order and gets a step limit of
  // kFirstAttempt * 2^k (the last one takes whatever budget is left). An
  // attempt that finishes within its limit is exhaustive.
  constexpr std::uint64_t kFirstAttempt = 10'000;
  CycleSolver solver(std::move(adjacency));
  std::uint64_t attempt_limit = kFirstAttempt;
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t used = solver.steps();
    const std::uint64_t left = budget - std::min(budget, used);
    const std::uint64_t allowance = attempt_limit * 2 >= left ? left : attempt_limit;
    solver.reseed(attempt);
    solver.set_limit(used + allowance);
    std::vector<VertexId> cycle;
    const bool found = solver.solve(cycle);
    r.steps = solver.steps();
    if (found) {
      if (!closed) {
        const auto at = std::find(cycle.begin(), cycle.end(), hub);
        std::rotate(cycle.begin(), at, cycle.end());
        cycle.erase(cycle.begin());
      }
      for (VertexId v : cycle) r.witness.push_back(g.label(v));
      if (!is_hamiltonian_walk(g, r.witness, closed)) throw std::logic_error("hamiltonian search produced an invalid witness");
      r.has_path = true;
      r.has_cycle = closed;
      return settle(r, "witness found");
    }
    if (!solver.budget_hit()) return settle(r, "exhaustive search");
    if (allowance == left) {
      r.reason = "search budget exhausted";
      return r;
    }
    attempt_limit *= 2;
  }
}

}  // namespace

HamiltonicityResult hamiltonian_path(const Graph& g, std::uint64_t budget) { return search(g, false, budget); }

HamiltonicityResult hamiltonian_cycle(const Graph& g, std::uint64_t budget) { return search(g, true, budget); }

bool is_hamiltonian_walk(const Graph& g, const std::vector<BitString>& walk, bool closed) {
  if (walk.size() != g.order()) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const auto id = g.index_of(walk[i]);
    if (!id || seen[*id]) return false;
    seen[*id] = 1;
    if (i > 0 && hamming(walk[i - 1], walk[i]) != 1) return false;
  }
  if (closed) return walk.size() >= 3 && hamming(walk.front(), walk.back()) == 1;
  return true;
}

std::vector<DegreeRow> degree_distribution_report(Family f, int n_lo, int n_hi) {
  if (n_lo > n_hi) throw std::invalid_argument("degree_distribution_report: empty range");
  std::vector<DegreeRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const Graph g = build_graph(f, n);
    DegreeRow row{n, g.order(), edge_count(g), {}};
    for (const auto& nb : g.adjacency) ++row.counts[static_cast<int>(nb.size())];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace amg
