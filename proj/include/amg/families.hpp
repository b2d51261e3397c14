#pragma once

#include <span>
#include <string>
#include <vector>

#include "amg/bitstring.hpp"

namespace amg {

inline constexpr int kMaxEnumerationLength = 32;
inline constexpr int kMaxHypercubeLength = 24;

/// Members of one family at one length, in canonical (ascending numeric) order.
struct VertexSet {
  Family family = Family::hypercube;
  int n = 0;
  std::vector<BitString> members;

  std::size_t size() const { return members.size(); }
  bool contains(const BitString& s) const;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Sorts and deduplicates in place.
void canonicalize(std::vector<BitString>& words);

/// Throws std::out_of_range when n exceeds the family's enumeration cap.
void check_family_length(Family f, int n);

/// Brute-force filter over all 2^n words.
/// M at n = 0 is the empty set; every other family at n = 0 is {null word}.
VertexSet enumerate(Family f, int n);

/// Union over placements i = 1..t of alpha[i..t] . s . alpha[1..i-1] for s in `inner`.
/// With inner = {null word} this is the set of rotations of alpha.
std::vector<BitString> rotation_closure(const BitString& alpha, std::span<const BitString> inner);

/// The i-indexed blocks 1^i 0^(i+1) R_{n-2i-1}, i = 0 .. ceil(n/2)-1.
std::vector<std::vector<BitString>> decompose_R(int n);
VertexSet build_R_recursive(int n);

/// Rotation blocks ->1^i 0^(i+1) R_{n-2i-1}->, i = 0 .. ceil(n/2)-1, each
/// canonicalized. Throws VerificationFailure if placements within a block
/// collide or two blocks share a word.
std::vector<std::vector<BitString>> decompose_M(int n);
VertexSet build_M_recursive(int n);

/// Maps each circular factor 1^i 0^(i+1) to (10)^i 0 in place.
/// Throws std::invalid_argument for non-members.
BitString phi(const BitString& s);

/// Inverse of phi. Throws ExcludedStringError for the even-length alternating
/// words (10)^(k+1), (01)^(k+1) and std::invalid_argument for non-Lucas input.
BitString phi_inverse(const BitString& s);

/// L_n, minus the two alternating words when n is even.
VertexSet lucas_restricted(int n);

}  // namespace amg
