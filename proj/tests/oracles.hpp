#pragma once

// Slow, string-based reference implementations. Nothing here calls into the
// library except to convert types.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Words = std::vector<std::string>;

inline std::string binary(std::uint64_t v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((v >> (n - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

inline std::vector<std::pair<char, int>> blocks(const std::string& s) {
  std::vector<std::pair<char, int>> out;
  for (char c : s) {
    if (!out.empty() && out.back().first == c) ++out.back().second;
    else out.push_back({c, 1});
  }
  return out;
}

inline bool no_11(const std::string& s) { return s.find("11") == std::string::npos; }

inline bool lucas_word(const std::string& s) { return no_11(s) && !(!s.empty() && s.front() == '1' && s.back() == '1'); }

inline bool run_word(const std::string& s) {
  const auto b = blocks(s);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].first != '1') continue;
    if (i + 1 == b.size() || b[i + 1].second <= b[i].second) return false;
  }
  return true;
}

// Cyclic reading: try every rotation that starts with a 1 preceded by a 0.
inline bool circular_run_word(const std::string& s) {
  if (s.find('1') == std::string::npos) return true;
  if (s.find('0') == std::string::npos) return false;
  const std::size_t n = s.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k] == '1' && s[(k + n - 1) % n] == '0') return run_word(s.substr(k) + s.substr(0, k));
  }
  return false;
}

inline Words all_words(int n, bool (*keep)(const std::string&)) {
  Words out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    const std::string s = binary(v, n);
    if (keep(s)) out.push_back(s);
  }
  return out;  // ascending numeric order
}

inline int hamming(const std::string& a, const std::string& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline std::size_t edge_count(const Words& vs) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) e += hamming(vs[i], vs[j]) == 1;
  }
  return e;
}

// Distances by BFS on the Hamming-1 graph, pairwise scan for neighbours.
inline std::map<std::string, int> bfs(const Words& vs, const std::string& src) {
  std::map<std::string, int> dist{{src, 0}};
  std::deque<std::string> q{src};
  while (!q.empty()) {
    const std::string u = q.front();
    q.pop_front();
    for (const auto& v : vs) {
      if (hamming(u, v) == 1 && !dist.contains(v)) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return dist;
}

inline std::map<std::string, int> eccentricities(const Words& vs) {
  std::map<std::string, int> ecc;
  for (const auto& v : vs) {
    int e = 0;
    for (const auto& [w, d] : bfs(vs, v)) e = std::max(e, d);
    ecc[v] = e;
  }
  return ecc;
}

inline std::set<std::string> rotations(const std::string& s) {
  std::set<std::string> out;
  for (std::size_t k = 0; k < s.size(); ++k) out.insert(s.substr(k) + s.substr(0, k));
  return out;
}

inline std::string pow(char c, int k) { return std::string(static_cast<std::size_t>(std::max(k, 0)), c); }

// 64-bit recurrences for the small indices the tests use.
inline std::uint64_t fib(int n) {
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

inline std::uint64_t lucas(int n) {
  std::uint64_t a = 2, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace oracle
