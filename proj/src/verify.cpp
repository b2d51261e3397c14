#include "amg/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "amg/cube_props.hpp"
#include "amg/errors.hpp"
#include "amg/metrics.hpp"
#include "amg/sequences.hpp"

namespace amg {

namespace {

CheckOutcome outcome(bool ok, std::string detail) { return {ok ? Status::pass : Status::fail, std::move(detail)}; }

std::string str(const BigInt& v) { return v.str(); }

template <typename A, typename B>
std::string compare_text(const A& lhs, const B& rhs) {
  std::ostringstream os;
  os << lhs << (lhs == rhs ? " == " : " != ") << rhs;
  return os.str();
}

int ceil_half(int n) { return (n + 1) / 2; }

CheckOutcome check_order(int n) {
  const auto brute = enumerate(Family::circular_run_constrained, n).size();
  const BigInt expected = assoc_mersenne(n);
  return outcome(BigInt(brute) == expected, "|V| " + compare_text(str(BigInt(brute)), str(expected)));
}

CheckOutcome check_bijection(int n) {
  const VertexSet m = enumerate(Family::circular_run_constrained, n);
  std::vector<BitString> image;
  bool round_trip = true;
  for (const BitString& s : m.members) {
    const BitString t = phi(s);
    image.push_back(t);
    round_trip = round_trip && phi_inverse(t) == s;
  }
  const std::size_t raw = image.size();
  canonicalize(image);
  const bool injective = image.size() == raw;
  const bool onto = image == lucas_restricted(n).members;
  return outcome(injective && onto && round_trip, "injective=" + std::to_string(injective) +
                                                      " image==L'=" + std::to_string(onto) +
                                                      " round-trip=" + std::to_string(round_trip));
}

CheckOutcome check_lucas_relation(int n) {
  const BigInt m = assoc_mersenne(n);
  const BigInt via_lucas = lucas(n) - 1 - (n % 2 == 0 ? 1 : -1);
  return outcome(m == via_lucas, "M_n " + compare_text(str(m), str(via_lucas)));
}

CheckOutcome check_lucas_from_fib(int n) {
  const BigInt l = lucas(n);
  for (int k = 1; k <= n; ++k) {
    if (lucas_from_fib(n, k) != l) return outcome(false, "k=" + std::to_string(k) + " gives " + str(lucas_from_fib(n, k)));
  }
  return outcome(true, "all k in 1.." + std::to_string(n) + " give L_n=" + str(l));
}

CheckOutcome check_run_order(int n) {
  const auto brute = enumerate(Family::run_constrained, n).size();
  return outcome(BigInt(brute) == fib(n), "|R_n| " + compare_text(str(BigInt(brute)), str(fib(n))));
}

CheckOutcome check_run_partition(int n) {
  const bool ok = build_R_recursive(n) == enumerate(Family::run_constrained, n);
  return outcome(ok, ok ? "block recursion reproduces R_n" : "block recursion differs from R_n");
}

CheckOutcome check_run_edges_recursive(int n) {
  const auto brute = edge_count(build_graph(Family::run_constrained, n));
  return outcome(brute == edge_count_R_recursive(n), "|E| " + compare_text(brute, edge_count_R_recursive(n)));
}

CheckOutcome check_run_edges_closed(int n) {
  const auto brute = edge_count(build_graph(Family::run_constrained, n));
  const BigInt closed = edge_count_R_closed(n);
  return outcome(BigInt(brute) == closed, "|E| " + compare_text(str(BigInt(brute)), str(closed)));
}

CheckOutcome check_decomposition(int n) {
  try {
    const bool ok = build_M_recursive(n) == enumerate(Family::circular_run_constrained, n);
    return outcome(ok, ok ? "disjoint rotation blocks reproduce M_n" : "rotation blocks differ from M_n");
  } catch (const VerificationFailure& e) {
    return outcome(false, e.what());
  }
}

CheckOutcome check_block_sizes(int n) {
  const BigInt total = rotation_block_total(n);
  const BigInt m = assoc_mersenne(n);
  bool ok = total == m;
  std::string detail = "sum (2i+1)|R_(n-2i-1)| " + compare_text(str(total), str(m));
  if (n % 2 == 0) {
    BigInt fib_form = 0;
    for (int i = 0; i <= ceil_half(n) - 1; ++i) fib_form += BigInt(2 * i + 1) * fib(n - 2 * i - 1);
    ok = ok && fib_form == m;
    detail += "; Fibonacci form " + compare_text(str(fib_form), str(m));
  } else {
    detail += "; Fibonacci form not applicable at odd n (|R_0| = 1 but F_0 = 0)";
  }
  if (n <= 20) {
    const auto blocks = decompose_M(n);
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
      const auto want = static_cast<std::size_t>(2 * i + 1) * run_constrained_count(n - 2 * i - 1);
      ok = ok && blocks[static_cast<std::size_t>(i)].size() == want;
    }
    detail += "; block sizes checked";
  }
  return outcome(ok, detail);
}

CheckOutcome check_class_neighbors(int n) {
  const auto r = verify_class_neighbors(n);
  return outcome(r.passed, std::to_string(r.violations.size()) + " count violations, " +
                               std::to_string(r.non_member_reductions.size()) + " non-member reductions, " +
                               std::to_string(r.upward_neighbors) + " vertices with upward neighbours");
}

CheckOutcome check_edges_recursive(int n) {
  const auto brute = edge_count(build_graph(Family::circular_run_constrained, n));
  return outcome(brute == edge_count_M_recursive(n), "|E| " + compare_text(brute, edge_count_M_recursive(n)));
}

CheckOutcome check_edges_closed(int n) {
  const auto brute = edge_count(build_graph(Family::circular_run_constrained, n));
  const BigInt closed = edge_count_M_closed(n);
  return outcome(BigInt(brute) == closed, "|E| " + compare_text(str(BigInt(brute)), str(closed)));
}

CheckOutcome check_edge_gf(int n) {
  const BigInt coeff = edge_gf_coeffs(n).back();
  const BigInt closed = edge_count_M_closed(n);
  return outcome(coeff == closed, "[x^n] " + compare_text(str(coeff), str(closed)));
}

CheckOutcome check_eccentricity_bound(int n) {
  const Graph g = build_graph(Family::circular_run_constrained, n);
  const MetricSummary m = metric_summary(g);
  std::size_t bad_ecc = 0, bad_witness = 0, strong = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    const BitString& nu = g.label(v);
    const int w = weight(nu);
    const int bound = w + ceil_half(n - w) - 1;
    if (m.eccentricity[v] < bound) ++bad_ecc;
    const BitString mu = far_vertex(nu);
    const int h = hamming(nu, mu);
    if (!g.index_of(mu) || h < bound) ++bad_witness;
    if (h >= bound + 1) ++strong;
  }
  return outcome(bad_ecc == 0 && bad_witness == 0,
                 std::to_string(bad_ecc) + " eccentricity violations, " + std::to_string(bad_witness) +
                     " invalid far vertices, " + std::to_string(strong) + "/" + std::to_string(g.order()) +
                     " witnesses meet the +1 bound");
}

CheckOutcome check_monotone_path(int n) {
  const Graph g = build_graph(Family::circular_run_constrained, n);
  const DistanceMatrix d(g);
  std::size_t bad = 0;
  for (VertexId a = 0; a < g.order(); ++a) {
    for (VertexId b = 0; b < g.order(); ++b) {
      const BitString& alpha = g.label(a);
      const BitString& beta = g.label(b);
      const int budget = weight(alpha) + weight(beta);
      const auto path = monotone_path(alpha, beta);
      bool ok = d(a, b) <= budget && static_cast<int>(path.size()) == budget + 1 && path.front() == alpha &&
                path.back() == beta;
      for (std::size_t i = 0; ok && i < path.size(); ++i) {
        ok = g.index_of(path[i]).has_value() && (i == 0 || hamming(path[i - 1], path[i]) == 1);
      }
      if (!ok) ++bad;
    }
  }
  return outcome(bad == 0, std::to_string(bad) + " failing pairs of " + std::to_string(g.order() * g.order()));
}

CheckOutcome check_low_weight_eccentricity(int n) {
  const Graph g = build_graph(Family::circular_run_constrained, n);
  const MetricSummary m = metric_summary(g);
  std::size_t bad = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    const int w = weight(g.label(v));
    if (w == 0 && m.eccentricity[v] != ceil_half(n) - 1) ++bad;
    if (w == 1 && m.eccentricity[v] != ceil_half(n)) ++bad;
  }
  return outcome(bad == 0, std::to_string(bad) + " weight-0/1 vertices off their eccentricity");
}

CheckOutcome check_center(int n) {
  const MetricSummary m = metric_summary(build_graph(Family::circular_run_constrained, n));
  const auto [radius, center] = predicted_center(n);
  return outcome(m.radius == radius && m.center == center,
                 "radius " + compare_text(m.radius, radius) + ", |center|=" + std::to_string(m.center.size()));
}

CheckOutcome check_periphery(int n) {
  const MetricSummary m = metric_summary(build_graph(Family::circular_run_constrained, n));
  const auto [diameter, periphery] = predicted_periphery(n);
  return outcome(m.diameter == diameter && m.periphery == periphery,
                 "diameter " + compare_text(m.diameter, diameter) + ", |periphery| " +
                     compare_text(m.periphery.size(), periphery.size()));
}

CheckOutcome check_partial_cube(int n) {
  const auto r = is_isometric_subgraph(build_graph(Family::circular_run_constrained, n));
  std::string detail = "isometric=" + std::to_string(r.isometric) + ", expected " + std::to_string(n <= 8);
  if (r.witness) {
    detail += "; witness " + r.witness->first.str() + "," + r.witness->second.str() + " H=" +
              std::to_string(r.witness_hamming) + " d=" + std::to_string(r.witness_distance);
  }
  return outcome(r.isometric == (n <= 8), detail);
}

CheckOutcome check_median(int n) {
  const Graph g = build_graph(Family::circular_run_constrained, n);
  const MedianReport oracle = is_median_graph(g);
  const MedianReport closure = is_median_closed(g);
  const bool median = *oracle.median_graph;
  std::string detail = "oracle median=" + std::to_string(median) + ", majority-closed=" + std::to_string(*closure.median_closed);
  if (closure.witness) {
    const auto& t = closure.witness->triple;
    detail += " (first open triple " + t[0].str() + "," + t[1].str() + "," + t[2].str() + " -> " +
              closure.witness->majority->str() + ")";
  }
  if (!closure.advisory_only && *closure.median_closed != median) {
    return {Status::fail, detail + "; majority shortcut disagrees with the oracle on an isometric graph"};
  }
  const bool claimed = n <= 7;
  if (median == claimed) return {Status::pass, detail};
  if (n == 7 && !median) {
    const BitString eta = majority(BitString::parse("1110000"), BitString::parse("1000000"), BitString::parse("0010000"));
    return {Status::finding, detail + "; claimed boundary n<=7 breaks at n=7: majority(1110000,1000000,0010000)=" +
                                 eta.str() + (g.index_of(eta) ? " is" : " is not") + " a vertex"};
  }
  return {Status::fail, detail};
}

constexpr std::array kChecks = {
    CheckSpec{"order", "3.1", 0, 22, "order of M_n equals the associated Mersenne number", &check_order},
    CheckSpec{"bijection", "3.1", 1, 18, "phi is a bijection from M_n onto L'_n", &check_bijection},
    CheckSpec{"lucas-relation", "2.2", 0, 500, "M_n = L_n - 1 - (-1)^n", &check_lucas_relation},
    CheckSpec{"lucas-from-fib", "2.1", 1, 120, "L_n from Fibonacci numbers at every offset k", &check_lucas_from_fib},
    CheckSpec{"run-order", "2.3", 1, 24, "|R_n| = F_n", &check_run_order},
    CheckSpec{"run-partition", "2.4", 1, 22, "block recursion for R_n", &check_run_partition},
    CheckSpec{"run-edges-recursive", "2.5", 0, 22, "edge recursion for R_n", &check_run_edges_recursive},
    CheckSpec{"run-edges-closed", "2.6", 8, 22, "closed form for |E(R_n)|", &check_run_edges_closed},
    CheckSpec{"decomposition", "3.2", 1, 20, "rotation-block decomposition of M_n", &check_decomposition},
    CheckSpec{"block-sizes", "3.4", 1, 200, "M_n as a weighted sum of |R_m|", &check_block_sizes},
    CheckSpec{"class-neighbors", "3.5", 3, 18, "cross-block neighbour counts", &check_class_neighbors},
    CheckSpec{"class-neighbors", "3.6", 3, 18, "cross-block neighbour counts", &check_class_neighbors},
    CheckSpec{"edges-recursive", "3.7", 5, 22, "edge recursion for M_n", &check_edges_recursive},
    CheckSpec{"edges-closed", "3.8", 0, 22, "|E(M_n)| = n L_(n-3)", &check_edges_closed},
    CheckSpec{"edge-gf", "3.9", 3, 300, "edge generating function coefficients", &check_edge_gf},
    CheckSpec{"eccentricity-bound", "4.1", 3, 16, "eccentricity lower bound and far-vertex witnesses", &check_eccentricity_bound},
    CheckSpec{"monotone-path", "4.2", 3, 14, "d(a,b) <= w(a) + w(b) via the path through 0^n", &check_monotone_path},
    CheckSpec{"low-weight-eccentricity", "4.3", 3, 16, "eccentricity of weight 0 and 1 vertices", &check_low_weight_eccentricity},
    CheckSpec{"center", "4.4", 3, 18, "radius and center", &check_center},
    CheckSpec{"periphery", "4.5", 3, 18, "diameter and periphery", &check_periphery},
    CheckSpec{"partial-cube", "5.1", 3, 14, "natural embedding is isometric iff n <= 8", &check_partial_cube},
    CheckSpec{"median", "5.2", 3, 10, "median graph boundary", &check_median},
};

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::finding: return "FINDING";
  }
  return "?";
}

std::span<const CheckSpec> verification_checks() { return kChecks; }

std::vector<const CheckSpec*> resolve_checks(std::string_view selector) {
  std::vector<const CheckSpec*> out;
  for (const CheckSpec& c : kChecks) {
    if (selector != "all" && c.id != selector && c.label != selector) continue;
    // One entry per id; two aliases may point at the same check.
    const bool dup = std::any_of(out.begin(), out.end(), [&](const CheckSpec* o) { return o->id == c.id; });
    if (!dup) out.push_back(&c);
  }
  if (out.empty()) throw std::invalid_argument("unknown check '" + std::string(selector) + "'");
  return out;
}

std::vector<CheckLine> run_checks(const std::vector<const CheckSpec*>& checks, int lo, int hi) {
  std::vector<CheckLine> lines;
  for (const CheckSpec* c : checks) {
    for (int n = std::max(lo, c->min_n); n <= std::min(hi, c->max_n); ++n) {
      CheckLine line{c, n, {}};
      try {
        line.outcome = c->run(n);
      } catch (const std::exception& e) {
        line.outcome = {Status::fail, std::string("exception: ") + e.what()};
      }
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

std::string format_line(const CheckLine& line) {
  return std::string(status_name(line.outcome.status)) + " " + std::string(line.check->id) + " n=" +
         std::to_string(line.n) + ": " + line.outcome.detail;
}

}  // namespace amg
