#include "amg/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "amg/errors.hpp"

namespace amg {

namespace {

using WordPredicate = bool (*)(std::uint64_t, int);

WordPredicate predicate_for(Family f) {
  switch (f) {
    case Family::hypercube: return [](std::uint64_t, int) { return true; };
    case Family::fibonacci: return &is_fibonacci_word;
    case Family::lucas: return &is_lucas_word;
    case Family::run_constrained: return &is_run_constrained_word;
    case Family::circular_run_constrained: return &is_circular_run_constrained_word;
  }
  return nullptr;
}

// R_0 .. R_n built purely from the block recursion.
std::vector<std::vector<BitString>> run_constrained_table(int n) {
  std::vector<std::vector<BitString>> table(static_cast<std::size_t>(n) + 1);
  table[0] = {BitString{}};
  for (int m = 1; m <= n; ++m) {
    auto& out = table[static_cast<std::size_t>(m)];
    for (int i = 0; i <= (m + 1) / 2 - 1; ++i) {
      const BitString head = BitString::repeat(1, i) + BitString::repeat(0, i + 1);
      for (const BitString& tail : table[static_cast<std::size_t>(m - 2 * i - 1)]) out.push_back(head + tail);
    }
    canonicalize(out);
  }
  return table;
}

void check_recursive_length(int n, const char* what) {
  if (n < 1 || n > kMaxEnumerationLength) {
    throw std::out_of_range(std::string(what) + ": n must be in 1.." + std::to_string(kMaxEnumerationLength));
  }
}

bool is_alternating_cycle(const BitString& s) {
  const int n = s.size();
  if (n == 0 || n % 2 != 0) return false;
  for (int i = 0; i < n; ++i) {
    if (s.at(i) == s.at((i + 1) % n)) return false;
  }
  return true;
}

}  // namespace

bool VertexSet::contains(const BitString& s) const { return std::binary_search(members.begin(), members.end(), s); }

void canonicalize(std::vector<BitString>& words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

void check_family_length(Family f, int n) {
  const int cap = f == Family::hypercube ? kMaxHypercubeLength : kMaxEnumerationLength;
  if (n < 0 || n > cap) {
    throw std::out_of_range("n=" + std::to_string(n) + " outside 0.." + std::to_string(cap) + " for family " +
                            std::string(family_name(f)));
  }
}

VertexSet enumerate(Family f, int n) {
  check_family_length(f, n);
  VertexSet out{f, n, {}};
  if (n == 0) {
    if (f != Family::circular_run_constrained) out.members.emplace_back();
    return out;
  }
  const WordPredicate keep = predicate_for(f);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < end; ++v) {
    if (keep(v, n)) out.members.emplace_back(v, n);
  }
  return out;
}

std::vector<BitString> rotation_closure(const BitString& alpha, std::span<const BitString> inner) {
  if (alpha.empty()) throw std::invalid_argument("rotation_closure: empty anchor");
  std::vector<BitString> out;
  out.reserve(inner.size() * static_cast<std::size_t>(alpha.size()));
  for (int i = 0; i < alpha.size(); ++i) {
    const BitString head = alpha.suffix_from(i);
    const BitString tail = alpha.prefix(i);
    for (const BitString& s : inner) out.push_back(head + s + tail);
  }
  canonicalize(out);
  return out;
}

std::vector<std::vector<BitString>> decompose_R(int n) {
  check_recursive_length(n, "decompose_R");
  const auto table = run_constrained_table(n - 1);
  std::vector<std::vector<BitString>> blocks;
  for (int i = 0; i <= (n + 1) / 2 - 1; ++i) {
    const BitString head = BitString::repeat(1, i) + BitString::repeat(0, i + 1);
    std::vector<BitString> block;
    for (const BitString& tail : table[static_cast<std::size_t>(n - 2 * i - 1)]) block.push_back(head + tail);
    canonicalize(block);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

VertexSet build_R_recursive(int n) {
  if (n == 0) return {Family::run_constrained, 0, {BitString{}}};
  VertexSet out{Family::run_constrained, n, {}};
  std::size_t expected = 0;
  for (auto& block : decompose_R(n)) {
    expected += block.size();
    out.members.insert(out.members.end(), block.begin(), block.end());
  }
  canonicalize(out.members);
  if (out.members.size() != expected) throw VerificationFailure("run-constrained blocks overlap at n=" + std::to_string(n));
  return out;
}

std::vector<std::vector<BitString>> decompose_M(int n) {
  check_recursive_length(n, "decompose_M");
  const auto table = run_constrained_table(n - 1);
  std::vector<std::vector<BitString>> blocks;
  std::unordered_set<BitString> seen;
  for (int i = 0; i <= (n + 1) / 2 - 1; ++i) {
    const BitString anchor = BitString::repeat(1, i) + BitString::repeat(0, i + 1);
    const auto& inner = table[static_cast<std::size_t>(n - 2 * i - 1)];
    auto block = rotation_closure(anchor, inner);
    if (block.size() != static_cast<std::size_t>(anchor.size()) * inner.size()) {
      throw VerificationFailure("rotation placements collide in block i=" + std::to_string(i) +
                                " at n=" + std::to_string(n));
    }
    for (const BitString& s : block) {
      if (!seen.insert(s).second) {
        throw VerificationFailure("rotation blocks overlap at n=" + std::to_string(n) + " on " + s.str());
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

VertexSet build_M_recursive(int n) {
  VertexSet out{Family::circular_run_constrained, n, {}};
  for (auto& block : decompose_M(n)) out.members.insert(out.members.end(), block.begin(), block.end());
  canonicalize(out.members);
  return out;
}

BitString phi(const BitString& s) {
  if (!is_member(Family::circular_run_constrained, s)) {
    throw std::invalid_argument("phi: " + s.str() + " is not run-constrained circularly");
  }
  const int n = s.size();
  BitString out = BitString::zeros(n);
  for (int p = 0; p < n; ++p) {
    if (s.at(p) != 1 || s.at((p + n - 1) % n) != 0) continue;
    // 1^i starting at p becomes (10)^i starting at p; its 0^(i+1) tail stays zero.
    for (int q = p; s.at(q % n) == 1; ++q) out = out.with_bit((p + 2 * (q - p)) % n, 1);
  }
  return out;
}

BitString phi_inverse(const BitString& s) {
  const int n = s.size();
  if (!is_member(Family::lucas, s)) throw std::invalid_argument("phi_inverse: " + s.str() + " is not a Lucas string");
  if (is_alternating_cycle(s)) {
    throw ExcludedStringError("phi_inverse: alternating string " + s.str() + " has no preimage");
  }
  BitString out = BitString::zeros(n);
  for (int p = 0; p < n; ++p) {
    // A chain 1 0 1 0 ... 1 starts where the position two steps back is not a 1.
    if (s.at(p) != 1 || s.at(((p - 2) % n + n) % n) == 1) continue;
    int ones = 0;
    while (s.at((p + 2 * ones) % n) == 1) ++ones;
    for (int q = 0; q < ones; ++q) out = out.with_bit((p + q) % n, 1);
  }
  return out;
}

VertexSet lucas_restricted(int n) {
  if (n < 1) throw std::out_of_range("lucas_restricted: n must be >= 1");
  VertexSet out = enumerate(Family::lucas, n);
  std::erase_if(out.members, is_alternating_cycle);
  return out;
}

}  // namespace amg
