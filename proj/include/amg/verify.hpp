#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace amg {

// FINDING marks a result that contradicts a published statement in a way the
// statement's own construction already exhibits; it does not fail a run.
enum class Status { pass, fail, finding };

std::string_view status_name(Status s);

struct CheckOutcome {
  Status status = Status::pass;
  std::string detail;
};

struct CheckSpec {
  std::string_view id;
  std::string_view label;  // short numeric alias accepted by --thm
  int min_n;
  int max_n;
  std::string_view summary;
  CheckOutcome (*run)(int n);
};

std::span<const CheckSpec> verification_checks();

/// Matches a check id, a numeric alias (several checks may share one) or "all".
/// Throws std::invalid_argument if nothing matches.
std::vector<const CheckSpec*> resolve_checks(std::string_view selector);

struct CheckLine {
  const CheckSpec* check = nullptr;
  int n = 0;
  CheckOutcome outcome;
};

/// Runs each check for every n in [lo, hi] within its supported range,
/// check by check, n ascending.
std::vector<CheckLine> run_checks(const std::vector<const CheckSpec*>& checks, int lo, int hi);

/// "<STATUS> <id> n=<n>: <detail>"
std::string format_line(const CheckLine& line);

}  // namespace amg
