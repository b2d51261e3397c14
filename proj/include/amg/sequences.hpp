#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace amg {

using BigInt = boost::multiprecision::cpp_int;

// Fibonacci, Lucas and associated Mersenne numbers, all exact.
// F0 = 0, F1 = 1;  L0 = 2, L1 = 1;  M0 = 0, M1 = 1, Mn = Mn-1 + Mn-2 + 1 - (-1)^n.
BigInt fib(int n);
BigInt lucas(int n);
BigInt assoc_mersenne(int n);

/// L_n recovered from Fibonacci numbers with offset k >= 1:
/// (F_{n-k} + F_{n+k}) / F_k for odd k, (F_{n+k} - F_{n-k}) / F_k for even k.
/// Requires n >= k. Throws std::invalid_argument otherwise.
BigInt lucas_from_fib(int n, int k);

/// Edge count of the associated Mersenne graph: n * L_{n-3} for n >= 4,
/// and the tabulated 0, 0, 0, 3 for n = 0..3.
BigInt edge_count_M_closed(int n);

/// Coefficients of x^3 .. x^max_n of
///   (3 - 2x + 4x^2 - 4x^3 - 3x^4) x^3 / (1 - x - x^2)^2
/// by exact power-series division.
std::vector<BigInt> edge_gf_coeffs(int max_n);

/// Sum over i of (2i+1) * r(n-2i-1), i = 0 .. ceil(n/2)-1, where r(m) is the
/// run-constrained count: F_m for m >= 1 and 1 for m = 0.
BigInt rotation_block_total(int n);

/// Edge count of the Fibonacci-run graph for n >= 8: (3n-2) F_{n-8} + (5n-4) F_{n-7}.
BigInt edge_count_R_closed(int n);

/// |R_m| as used by the decomposition recursions (1 at m = 0, F_m otherwise).
std::uint64_t run_constrained_count(int m);

}  // namespace amg
