#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace amg {

/// Fixed-length binary word b1 b2 ... bn.
///
/// Position 0 is b1, the leftmost symbol of the text form. The word is packed
/// into a 64-bit integer with b1 as the most significant of the n used bits,
/// so value() is the number b1...bn read as a binary numeral and ordering by
/// value is the canonical vertex order. Length 0 is the null word.
class BitString {
 public:
  static constexpr int kMaxLength = 64;

  BitString() = default;
  BitString(std::uint64_t value, int length);

  /// Parses ASCII '0'/'1' text, b1 first. Throws std::invalid_argument.
  static BitString parse(std::string_view text);
  static BitString zeros(int length);
  /// sym^count, e.g. repeat(1, 3) == "111".
  static BitString repeat(int symbol, int count);

  int size() const { return length_; }
  bool empty() const { return length_ == 0; }
  std::uint64_t value() const { return value_; }
  std::uint64_t mask() const { return mask_for(length_); }

  /// Symbol at 0-based position i (b_{i+1}).
  int at(int i) const { return static_cast<int>((value_ >> (length_ - 1 - i)) & 1U); }

  BitString flipped(int i) const;
  BitString with_bit(int i, int symbol) const;
  /// Cyclic left rotation: result[i] = this[(i + k) mod n].
  BitString rotated_left(int k) const;
  BitString prefix(int count) const;
  BitString suffix_from(int start) const;

  std::string str() const;

  friend BitString operator+(const BitString& a, const BitString& b);
  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

  static constexpr std::uint64_t mask_for(int length) {
    return length >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
  }

 private:
  std::uint64_t value_ = 0;
  int length_ = 0;
};

struct Run {
  int symbol = 0;
  int length = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

enum class Family { hypercube, fibonacci, lucas, run_constrained, circular_run_constrained };

/// "hypercube", "fibonacci", ... (the JSON/DOT tag).
std::string_view family_name(Family f);
/// Q, F, L, R, M.
char family_letter(Family f);
/// Accepts a tag name or its single-letter form. Throws std::invalid_argument.
Family parse_family(std::string_view text);

int weight(const BitString& s);
int hamming(const BitString& a, const BitString& b);

std::vector<Run> runs(const BitString& s);
std::vector<Run> circular_runs(const BitString& s);

bool is_member(Family f, const BitString& s);

// Word-level predicates used by the enumeration loops; same semantics as
// is_member on BitString(value, n).
bool is_fibonacci_word(std::uint64_t value, int n);
bool is_lucas_word(std::uint64_t value, int n);
bool is_run_constrained_word(std::uint64_t value, int n);
bool is_circular_run_constrained_word(std::uint64_t value, int n);

}  // namespace amg

template <>
struct std::hash<amg::BitString> {
  std::size_t operator()(const amg::BitString& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.value() * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(s.size()));
  }
};
