#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "amg/cube_props.hpp"
#include "amg/explore.hpp"
#include "amg/families.hpp"
#include "amg/graph.hpp"
#include "amg/metrics.hpp"
#include "amg/serialize.hpp"
#include "amg/verify.hpp"

namespace {

using namespace amg;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Graph-level commands hold an all-pairs table or run searches.
constexpr int kMaxGraphLength = 24;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = 0;
  bool single() const { return lo == hi; }
};

Range parse_range(const std::string& text) {
  Range r;
  try {
    std::size_t used = 0;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, dots);
      const std::string b = text.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(text);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad value for -n: '" + text + "' (expected N or A..B)");
  }
  if (r.lo < 0 || r.hi < r.lo) throw UsageError("bad range for -n: '" + text + "'");
  return r;
}

Family family_arg(const std::string& text) {
  if (text.size() != 1) throw UsageError("-f takes one of Q, F, L, R, M");
  try {
    return parse_family(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("-f takes one of Q, F, L, R, M");
  }
}

void check_caps(Family f, const Range& r, int extra_cap = BitString::kMaxLength) {
  try {
    check_family_length(f, r.hi);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (r.hi > extra_cap) {
    throw UsageError("n=" + std::to_string(r.hi) + " exceeds the cap of " + std::to_string(extra_cap) + " for this command");
  }
}

std::string join(const std::vector<std::uint64_t>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join_words(const std::vector<BitString>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].str();
  }
  return out;
}

// families ------------------------------------------------------------------

struct FamiliesOpts {
  std::string family, n, method = "brute", format = "table";
  bool counts = false;
};

int cmd_families(const FamiliesOpts& o, std::ostream& out) {
  const Family f = family_arg(o.family);
  const Range r = parse_range(o.n);
  check_caps(f, r);
  const bool recursive_ok = f == Family::run_constrained || f == Family::circular_run_constrained;
  if (o.method != "brute" && !recursive_ok) throw UsageError("--method " + o.method + " needs -f R or -f M");

  auto generate = [&](int n, const std::string& method) {
    if (method == "brute") return enumerate(f, n);
    if (f == Family::run_constrained) return build_R_recursive(n);
    if (n == 0) return VertexSet{f, 0, {}};
    return build_M_recursive(n);
  };

  int status = kExitOk;
  Json rows = Json::array();
  for (int n = r.lo; n <= r.hi; ++n) {
    VertexSet vs;
    if (o.method == "both") {
      vs = generate(n, "brute");
      if (!(generate(n, "recursive") == vs)) {
        std::cerr << "mismatch at n=" << n << ": brute force and recursive generators differ\n";
        status = kExitFail;
      }
    } else {
      vs = generate(n, o.method);
    }
    if (o.format == "json") {
      if (o.counts) {
        rows.push_back(Json{{"family", family_name(f)}, {"n", n}, {"order", vs.size()}});
      } else {
        rows.push_back(to_json(vs));
      }
    } else if (o.counts) {
      out << "n=" << n << " |V|=" << vs.size() << '\n';
    } else {
      if (!r.single()) out << "# n=" << n << '\n';
      for (const BitString& s : vs.members) out << (s.empty() ? "" : s.str()) << '\n';
    }
  }
  if (o.format == "json") out << (r.single() ? rows[0] : rows).dump(2) << '\n';
  return status;
}

// verify --------------------------------------------------------------------

struct VerifyOpts {
  bool all = false;
  std::string thm, n, format = "table";
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  if (o.all == !o.thm.empty()) throw UsageError("verify needs exactly one of --all or --thm");
  const Range r = parse_range(o.n);
  std::vector<const CheckSpec*> checks;
  try {
    checks = resolve_checks(o.all ? "all" : o.thm);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto lines = run_checks(checks, r.lo, r.hi);
  bool failed = false;
  Json rows = Json::array();
  for (const CheckLine& line : lines) {
    failed = failed || line.outcome.status == Status::fail;
    if (o.format == "json") {
      rows.push_back(Json{{"check", line.check->id},
                          {"n", line.n},
                          {"status", status_name(line.outcome.status)},
                          {"detail", line.outcome.detail}});
    } else {
      out << format_line(line) << '\n';
    }
  }
  if (o.format == "json") out << rows.dump(2) << '\n';
  if (lines.empty()) std::cerr << "no check applies to the requested range\n";
  return failed ? kExitFail : kExitOk;
}

// metrics -------------------------------------------------------------------

struct MetricsOpts {
  std::string family, n, format = "table";
  bool verbose = false;
};

void metrics_table(const MetricSummary& m, const Graph& g, bool verbose, std::ostream& out) {
  out << "family: " << family_name(g.family) << '\n';
  out << "n: " << m.n << '\n';
  out << "order: " << g.order() << '\n';
  out << "radius: " << m.radius << '\n';
  out << "diameter: " << m.diameter << '\n';
  out << "center: " << join_words(m.center) << '\n';
  out << "periphery: " << join_words(m.periphery) << '\n';
  out << "eccentricity_histogram:";
  for (auto [e, c] : m.eccentricity_histogram()) out << ' ' << e << ':' << c;
  out << '\n';
  if (verbose) {
    for (VertexId v = 0; v < g.order(); ++v) out << g.label(v).str() << ' ' << m.eccentricity[v] << '\n';
  }
}

int cmd_metrics(const MetricsOpts& o, std::ostream& out) {
  const Family f = family_arg(o.family);
  const Range r = parse_range(o.n);
  check_caps(f, r, kMaxGraphLength);
  Json rows = Json::array();
  for (int n = r.lo; n <= r.hi; ++n) {
    const Graph g = build_graph(f, n);
    if (g.order() == 0) throw UsageError("the graph at n=" + std::to_string(n) + " is empty");
    const MetricSummary m = metric_summary(g);
    if (o.format == "json") {
      rows.push_back(to_json(m, g, o.verbose));
    } else {
      if (n > r.lo) out << '\n';
      metrics_table(m, g, o.verbose, out);
    }
  }
  if (o.format == "json") out << (r.single() ? rows[0] : rows).dump(2) << '\n';
  return kExitOk;
}

// export --------------------------------------------------------------------

struct ExportOpts {
  std::string family, n, format = "dot", output;
};

int cmd_export(const ExportOpts& o, std::ostream& out) {
  const Family f = family_arg(o.family);
  const Range r = parse_range(o.n);
  if (!r.single()) throw UsageError("export takes a single n");
  check_caps(f, r, kMaxGraphLength);
  const Graph g = build_graph(f, r.lo);
  const std::string text = o.format == "dot" ? export_dot(g) : to_json(g).dump(2) + "\n";
  if (o.output.empty() || o.output == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::cerr << "cannot open " << o.output << " for writing\n";
    return kExitFail;
  }
  file << text;
  file.close();
  if (!file) {
    std::cerr << "write to " << o.output << " failed\n";
    return kExitFail;
  }
  return kExitOk;
}

// explore -------------------------------------------------------------------

struct ExploreOpts {
  std::string what, family, n, format = "table";
  std::uint64_t budget = kDefaultSearchBudget;
};

std::string answer(const HamiltonicityResult& h, bool cycle) {
  if (h.indeterminate()) return "unknown";
  return (cycle ? h.has_cycle : h.has_path) ? "yes" : "no";
}

int cmd_explore(const ExploreOpts& o, std::ostream& out) {
  const Family f = family_arg(o.family);
  const Range r = parse_range(o.n);
  check_caps(f, r, kMaxGraphLength);
  const char* fam = family_name(f).data();

  if (o.what == "cube-poly") {
    if (o.format == "csv") out << "n,family,coefficients,value_at_minus_1,value_at_0\n";
    for (int n = r.lo; n <= r.hi; ++n) {
      const CubePolynomial p = cube_polynomial(build_graph(f, n));
      const std::string coeffs = join(p.coefficients, ",");
      if (o.format == "csv") {
        out << n << ',' << fam << ",\"" << coeffs << "\"," << p.evaluate(-1) << ',' << p.evaluate(0) << '\n';
      } else if (r.single()) {
        out << coeffs << '\n';
      } else {
        out << "n=" << n << ' ' << coeffs << '\n';
      }
    }
    return kExitOk;
  }

  if (o.what == "hamilton") {
    if (o.format == "csv") out << "n,family,order,path,path_reason,cycle,cycle_reason\n";
    for (int n = r.lo; n <= r.hi; ++n) {
      const Graph g = build_graph(f, n);
      if (g.order() == 0) {
        if (o.format == "csv") out << n << ',' << fam << ",0,no,empty graph,no,empty graph\n";
        else out << "n=" << n << " order=0 path=no cycle=no (empty graph)\n";
        continue;
      }
      const auto path = hamiltonian_path(g, o.budget);
      const auto cycle = hamiltonian_cycle(g, o.budget);
      if (o.format == "csv") {
        out << n << ',' << fam << ',' << g.order() << ',' << answer(path, false) << ',' << path.reason << ','
            << answer(cycle, true) << ',' << cycle.reason << '\n';
      } else {
        out << "n=" << n << " order=" << g.order() << " path=" << answer(path, false) << " cycle="
            << answer(cycle, true) << " (" << cycle.reason << ")\n";
      }
    }
    return kExitOk;
  }

  if (o.what == "degrees") {
    const auto rows = degree_distribution_report(f, r.lo, r.hi);
    if (o.format == "csv") out << "n,family,order,edges,degree_counts\n";
    for (const DegreeRow& row : rows) {
      std::string counts;
      for (auto it = row.counts.rbegin(); it != row.counts.rend(); ++it) {
        if (!counts.empty()) counts += ' ';
        counts += std::to_string(it->first) + ':' + std::to_string(it->second);
      }
      if (o.format == "csv") {
        out << row.n << ',' << fam << ',' << row.order << ',' << row.edges << ',' << counts << '\n';
      } else {
        out << "n=" << row.n << " |V|=" << row.order << " |E|=" << row.edges << " degrees " << counts << '\n';
      }
    }
    return kExitOk;
  }
  throw UsageError("unknown exploration '" + o.what + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypercube subfamily graphs: enumeration, verification and exploration"};
  app.require_subcommand(1);

  FamiliesOpts fam;
  auto* families = app.add_subcommand("families", "List members or counts of a family");
  families->add_option("-f,--family", fam.family, "Q, F, L, R or M")->required();
  families->add_option("-n", fam.n, "length N or range A..B")->required();
  families->add_flag("--counts", fam.counts, "print counts only");
  families->add_option("--method", fam.method, "generator")->check(CLI::IsMember({"brute", "recursive", "both"}));
  families->add_option("--format", fam.format)->check(CLI::IsMember({"table", "json"}));

  VerifyOpts ver;
  auto* verify = app.add_subcommand("verify", "Check closed forms and structural claims against brute force");
  verify->add_flag("--all", ver.all, "run every check");
  verify->add_option("--thm", ver.thm, "check id or numeric alias");
  verify->add_option("-n", ver.n, "length N or range A..B")->required();
  verify->add_option("--format", ver.format)->check(CLI::IsMember({"table", "json"}));
  {
    std::string ids = "Checks (id, alias, lengths):\n";
    for (const auto& c : verification_checks()) {
      ids += "  " + std::string(c.id) + " (" + std::string(c.label) + ", " + std::to_string(c.min_n) + ".." +
             std::to_string(c.max_n) + ")  " + std::string(c.summary) + "\n";
    }
    verify->footer(ids);
  }

  MetricsOpts met;
  auto* metrics = app.add_subcommand("metrics", "Radius, diameter, center and periphery");
  metrics->add_option("-f,--family", met.family)->required();
  metrics->add_option("-n", met.n)->required();
  metrics->add_option("--format", met.format)->check(CLI::IsMember({"table", "json"}));
  metrics->add_flag("--verbose", met.verbose, "include every eccentricity");

  ExportOpts exp;
  auto* exporter = app.add_subcommand("export", "Write a graph as DOT or JSON");
  exporter->add_option("-f,--family", exp.family)->required();
  exporter->add_option("-n", exp.n)->required();
  exporter->add_option("--format", exp.format)->check(CLI::IsMember({"dot", "json"}));
  exporter->add_option("-o,--output", exp.output, "output file (default stdout)");

  ExploreOpts ex;
  auto* explore = app.add_subcommand("explore", "Cube polynomial, Hamiltonicity and degree tables");
  explore->add_option("what", ex.what)->required()->check(CLI::IsMember({"cube-poly", "hamilton", "degrees"}));
  explore->add_option("-f,--family", ex.family)->required();
  explore->add_option("-n", ex.n)->required();
  explore->add_option("--format", ex.format)->check(CLI::IsMember({"table", "csv"}));
  explore->add_option("--budget", ex.budget, "backtracking step limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostringstream out;
  int status = kExitOk;
  try {
    if (*families) status = cmd_families(fam, out);
    else if (*verify) status = cmd_verify(ver, out);
    else if (*metrics) status = cmd_metrics(met, out);
    else if (*exporter) status = cmd_export(exp, out);
    else if (*explore) status = cmd_explore(ex, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cout << out.str();
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  std::cout << out.str();
  std::cout.flush();
  return std::cout ? status : kExitFail;
}
