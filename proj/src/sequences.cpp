#include "amg/sequences.hpp"

#include <stdexcept>
#include <string>

namespace amg {

namespace {

void require_index(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index");
}

BigInt linear_recurrence(int n, BigInt a0, BigInt a1) {
  if (n == 0) return a0;
  for (int i = 2; i <= n; ++i) {
    BigInt next = a0 + a1;
    a0 = std::move(a1);
    a1 = std::move(next);
  }
  return a1;
}

}  // namespace

BigInt fib(int n) {
  require_index(n, "fib");
  return linear_recurrence(n, 0, 1);
}

BigInt lucas(int n) {
  require_index(n, "lucas");
  return linear_recurrence(n, 2, 1);
}

BigInt assoc_mersenne(int n) {
  require_index(n, "assoc_mersenne");
  if (n == 0) return 0;
  BigInt prev = 0;
  BigInt cur = 1;
  for (int i = 2; i <= n; ++i) {
    // 1 - (-1)^i is 0 for even i and 2 for odd i.
    BigInt next = cur + prev + (i % 2 == 0 ? 0 : 2);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt lucas_from_fib(int n, int k) {
  if (k <= 0) throw std::invalid_argument("lucas_from_fib: k must be positive");
  if (n < k) throw std::invalid_argument("lucas_from_fib: requires n >= k");
  const BigInt lo = fib(n - k);
  const BigInt hi = fib(n + k);
  const BigInt num = (k % 2 == 1) ? BigInt(lo + hi) : BigInt(hi - lo);
  const BigInt den = fib(k);
  if (num % den != 0) throw std::logic_error("lucas_from_fib: inexact division");
  return num / den;
}

BigInt edge_count_M_closed(int n) {
  require_index(n, "edge_count_M_closed");
  if (n <= 2) return 0;
  if (n == 3) return 3;
  return BigInt(n) * lucas(n - 3);
}

std::vector<BigInt> edge_gf_coeffs(int max_n) {
  if (max_n < 3) throw std::invalid_argument("edge_gf_coeffs: max_n must be >= 3");
  // Numerator coefficients by absolute degree, denominator (1 - x - x^2)^2 expanded.
  const std::vector<BigInt> num = {0, 0, 0, 3, -2, 4, -4, -3};
  const std::vector<BigInt> den = {1, -2, -1, 2, 1};
  std::vector<BigInt> c(static_cast<std::size_t>(max_n) + 1);
  for (int i = 0; i <= max_n; ++i) {
    BigInt acc = i < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(i)] : BigInt(0);
    for (int j = 1; j < static_cast<int>(den.size()) && j <= i; ++j) {
      acc -= den[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
    }
    c[static_cast<std::size_t>(i)] = acc;  // den[0] == 1
  }
  return {c.begin() + 3, c.end()};
}

std::uint64_t run_constrained_count(int m) {
  if (m < 0) throw std::invalid_argument("run_constrained_count: negative index");
  if (m == 0) return 1;
  return fib(m).convert_to<std::uint64_t>();
}

BigInt rotation_block_total(int n) {
  require_index(n, "rotation_block_total");
  BigInt total = 0;
  for (int i = 0; i <= (n + 1) / 2 - 1; ++i) {
    const int m = n - 2 * i - 1;
    total += BigInt(2 * i + 1) * (m == 0 ? BigInt(1) : fib(m));
  }
  return total;
}

BigInt edge_count_R_closed(int n) {
  if (n < 8) throw std::invalid_argument("edge_count_R_closed: requires n >= 8");
  return BigInt(3 * n - 2) * fib(n - 8) + BigInt(5 * n - 4) * fib(n - 7);
}

}  // namespace amg
