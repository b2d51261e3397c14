#include "doctest.h"

#include <random>

#include "amg/bitstring.hpp"
#include "oracles.hpp"

using namespace amg;

namespace {
BitString B(const char* s) { return BitString::parse(s); }
}  // namespace

TEST_CASE("parse and render round trip") {
  for (const char* s : {"", "0", "1", "0110", "1110000011100", "10001"}) CHECK(B(s).str() == s);
  CHECK(B("").empty());
  CHECK(B("100").value() == 4);
  CHECK(B("100").at(0) == 1);
  CHECK_THROWS_AS(B("10a"), std::invalid_argument);
  for (int n = 0; n <= 10; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) CHECK(BitString(v, n).str() == oracle::binary(v, n));
  }
}

TEST_CASE("construction helpers") {
  CHECK(BitString::zeros(4).str() == "0000");
  CHECK(BitString::repeat(1, 3).str() == "111");
  CHECK((B("11") + B("000")).str() == "11000");
  CHECK(B("11000").rotated_left(1).str() == "10001");
  CHECK(B("11000").rotated_left(-1).str() == "01100");
  CHECK(B("11000").flipped(4).str() == "11001");
  CHECK(B("11000").prefix(2).str() == "11");
  CHECK(B("11000").suffix_from(2).str() == "000");
  CHECK(B("0").with_bit(0, 1).str() == "1");
}

TEST_CASE("weight") {
  CHECK(weight(B("11000")) == 2);
  CHECK(weight(B("00000")) == 0);
  CHECK(weight(B("1110000011100")) == 6);
}

TEST_CASE("hamming") {
  CHECK(hamming(B("1100"), B("1001")) == 2);
  CHECK(hamming(B("111100000"), B("100100000")) == 2);
  CHECK(hamming(B("10101"), B("10101")) == 0);
  CHECK_THROWS(hamming(B("10"), B("100")));
}

TEST_CASE("hamming is a metric") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0, (1U << 12) - 1);
  for (int t = 0; t < 500; ++t) {
    const BitString a(pick(rng), 12), b(pick(rng), 12), c(pick(rng), 12);
    CHECK(hamming(a, b) == hamming(b, a));
    CHECK(hamming(a, c) <= hamming(a, b) + hamming(b, c));
    CHECK((hamming(a, b) == 0) == (a == b));
    CHECK(hamming(a, b) == oracle::hamming(a.str(), b.str()));
  }
}

TEST_CASE("runs") {
  CHECK(runs(B("11100110")) == std::vector<Run>{{1, 3}, {0, 2}, {1, 2}, {0, 1}});
  CHECK(runs(B("0000")) == std::vector<Run>{{0, 4}});
  CHECK(runs(B("100")) == std::vector<Run>{{1, 1}, {0, 2}});
}

TEST_CASE("circular runs") {
  CHECK(circular_runs(B("10001")) == std::vector<Run>{{0, 3}, {1, 2}});
  CHECK(circular_runs(B("010")) == std::vector<Run>{{1, 1}, {0, 2}});
  CHECK(circular_runs(B("0000")) == std::vector<Run>{{0, 4}});
  CHECK(circular_runs(B("111")) == std::vector<Run>{{1, 3}});
}

TEST_CASE("run decompositions alternate and cover the word") {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const BitString s(v, n);
      for (const auto& rs : {runs(s), circular_runs(s)}) {
        int total = 0;
        for (std::size_t i = 0; i < rs.size(); ++i) {
          total += rs[i].length;
          if (i > 0) CHECK(rs[i].symbol != rs[i - 1].symbol);
        }
        CHECK(total == n);
      }
      const auto c = circular_runs(s);
      if (c.size() > 1) CHECK(c.front().symbol != c.back().symbol);
    }
  }
}

TEST_CASE("membership examples") {
  CHECK(is_member(Family::run_constrained, B("100")));
  CHECK_FALSE(is_member(Family::run_constrained, B("010")));
  CHECK(is_member(Family::circular_run_constrained, B("001")));
  CHECK_FALSE(is_member(Family::circular_run_constrained, B("0110")));
  CHECK_FALSE(is_member(Family::circular_run_constrained, B("1111")));
  for (Family f : {Family::hypercube, Family::fibonacci, Family::lucas, Family::run_constrained, Family::circular_run_constrained}) {
    CHECK(is_member(f, B("")));
  }
}

TEST_CASE("membership against string oracles") {
  for (int n = 0; n <= 12; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const BitString s(v, n);
      const std::string t = s.str();
      CHECK(is_member(Family::hypercube, s));
      CHECK(is_member(Family::fibonacci, s) == oracle::no_11(t));
      CHECK(is_member(Family::lucas, s) == oracle::lucas_word(t));
      CHECK(is_member(Family::run_constrained, s) == oracle::run_word(t));
      if (n > 0) CHECK(is_member(Family::circular_run_constrained, s) == oracle::circular_run_word(t));
      CHECK(is_fibonacci_word(v, n) == is_member(Family::fibonacci, s));
      CHECK(is_lucas_word(v, n) == is_member(Family::lucas, s));
      CHECK(is_run_constrained_word(v, n) == is_member(Family::run_constrained, s));
    }
  }
}

TEST_CASE("containments and rotation invariance") {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const BitString s(v, n);
      if (is_member(Family::run_constrained, s)) CHECK(is_member(Family::circular_run_constrained, s));
      if (is_member(Family::lucas, s)) CHECK(is_member(Family::fibonacci, s));
      const bool m = is_member(Family::circular_run_constrained, s);
      for (int k = 1; k < n; ++k) CHECK(is_member(Family::circular_run_constrained, s.rotated_left(k)) == m);
    }
  }
}

TEST_CASE("family tags") {
  CHECK(parse_family("M") == Family::circular_run_constrained);
  CHECK(parse_family("run_constrained") == Family::run_constrained);
  CHECK(family_letter(Family::lucas) == 'L');
  CHECK(family_name(Family::fibonacci) == "fibonacci");
  CHECK_THROWS_AS(parse_family("X"), std::invalid_argument);
}
