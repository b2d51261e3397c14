#include "amg/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace amg {

namespace {

void check_length(int length) {
  if (length < 0 || length > BitString::kMaxLength) {
    throw std::invalid_argument("bit string length " + std::to_string(length) + " outside 0.." +
                                std::to_string(BitString::kMaxLength));
  }
}

inline int bit_at(std::uint64_t value, int n, int i) { return static_cast<int>((value >> (n - 1 - i)) & 1U); }

std::uint64_t rotate_word(std::uint64_t value, int n, int k) {
  if (n == 0) return value;
  k %= n;
  if (k == 0) return value;
  const std::uint64_t m = BitString::mask_for(n);
  return ((value << k) | (value >> (n - k))) & m;
}

}  // namespace

BitString::BitString(std::uint64_t value, int length) : value_(value), length_(length) {
  check_length(length);
  if ((value & ~mask_for(length)) != 0) throw std::invalid_argument("bit string value wider than its length");
}

BitString BitString::parse(std::string_view text) {
  check_length(static_cast<int>(text.size()));
  std::uint64_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("not a binary string: '" + std::string(text) + "'");
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitString(v, static_cast<int>(text.size()));
}

BitString BitString::zeros(int length) { return BitString(0, length); }

BitString BitString::repeat(int symbol, int count) {
  check_length(count);
  return BitString(symbol ? mask_for(count) : 0, count);
}

BitString BitString::flipped(int i) const {
  return BitString(value_ ^ (std::uint64_t{1} << (length_ - 1 - i)), length_);
}

BitString BitString::with_bit(int i, int symbol) const {
  const std::uint64_t b = std::uint64_t{1} << (length_ - 1 - i);
  return BitString(symbol ? (value_ | b) : (value_ & ~b), length_);
}

BitString BitString::rotated_left(int k) const {
  if (length_ == 0) return *this;
  k = ((k % length_) + length_) % length_;
  return BitString(rotate_word(value_, length_, k), length_);
}

BitString BitString::prefix(int count) const {
  if (count < 0 || count > length_) throw std::out_of_range("prefix length");
  return BitString(count == 0 ? 0 : value_ >> (length_ - count), count);
}

BitString BitString::suffix_from(int start) const {
  if (start < 0 || start > length_) throw std::out_of_range("suffix start");
  const int count = length_ - start;
  return BitString(value_ & mask_for(count), count);
}

std::string BitString::str() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) out[static_cast<std::size_t>(i)] = static_cast<char>('0' + at(i));
  return out;
}

BitString operator+(const BitString& a, const BitString& b) {
  check_length(a.length_ + b.length_);
  const std::uint64_t head = b.length_ >= 64 ? 0 : (a.value_ << b.length_);
  return BitString(head | b.value_, a.length_ + b.length_);
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::hypercube: return "hypercube";
    case Family::fibonacci: return "fibonacci";
    case Family::lucas: return "lucas";
    case Family::run_constrained: return "run_constrained";
    case Family::circular_run_constrained: return "circular_run_constrained";
  }
  return "?";
}

char family_letter(Family f) {
  switch (f) {
    case Family::hypercube: return 'Q';
    case Family::fibonacci: return 'F';
    case Family::lucas: return 'L';
    case Family::run_constrained: return 'R';
    case Family::circular_run_constrained: return 'M';
  }
  return '?';
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::hypercube, Family::fibonacci, Family::lucas, Family::run_constrained,
                   Family::circular_run_constrained}) {
    if (text == family_name(f) || (text.size() == 1 && text[0] == family_letter(f))) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected Q|F|L|R|M)");
}

int weight(const BitString& s) { return std::popcount(s.value()); }

int hamming(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming: length mismatch");
  return std::popcount(a.value() ^ b.value());
}

std::vector<Run> runs(const BitString& s) {
  if (s.empty()) throw std::invalid_argument("runs: null string has no runs");
  std::vector<Run> out;
  for (int i = 0; i < s.size(); ++i) {
    const int b = s.at(i);
    if (!out.empty() && out.back().symbol == b) {
      ++out.back().length;
    } else {
      out.push_back({b, 1});
    }
  }
  return out;
}

std::vector<Run> circular_runs(const BitString& s) {
  if (s.empty()) throw std::invalid_argument("circular_runs: null string has no runs");
  const int n = s.size();
  int start = -1;
  for (int i = 0; i < n; ++i) {
    if (s.at(i) != s.at((i + n - 1) % n)) {
      start = i;
      break;
    }
  }
  if (start < 0) return {Run{s.at(0), n}};
  return runs(s.rotated_left(start));
}

bool is_fibonacci_word(std::uint64_t value, int n) {
  (void)n;
  return (value & (value >> 1)) == 0;
}

bool is_lucas_word(std::uint64_t value, int n) {
  if (n == 0) return true;
  if (!is_fibonacci_word(value, n)) return false;
  return !(bit_at(value, n, 0) == 1 && bit_at(value, n, n - 1) == 1);
}

bool is_run_constrained_word(std::uint64_t value, int n) {
  int i = 0;
  while (i < n) {
    if (bit_at(value, n, i) == 0) {
      ++i;
      continue;
    }
    int j = i;
    while (j < n && bit_at(value, n, j) == 1) ++j;
    int k = j;
    while (k < n && bit_at(value, n, k) == 0) ++k;
    if (k - j <= j - i) return false;
    i = k;
  }
  return true;
}

bool is_circular_run_constrained_word(std::uint64_t value, int n) {
  if (n == 0 || value == 0) return true;
  if (value == BitString::mask_for(n)) return false;
  // Rotate so the word starts at a 1-run boundary; the linear test then sees
  // every run exactly as the cyclic reading does.
  for (int p = 0; p < n; ++p) {
    if (bit_at(value, n, p) == 1 && bit_at(value, n, (p + n - 1) % n) == 0) {
      return is_run_constrained_word(rotate_word(value, n, p), n);
    }
  }
  return false;
}

bool is_member(Family f, const BitString& s) {
  const int n = s.size();
  const std::uint64_t v = s.value();
  switch (f) {
    case Family::hypercube: return true;
    case Family::fibonacci: return is_fibonacci_word(v, n);
    case Family::lucas: return is_lucas_word(v, n);
    case Family::run_constrained: return is_run_constrained_word(v, n);
    case Family::circular_run_constrained: return is_circular_run_constrained_word(v, n);
  }
  return false;
}

}  // namespace amg
