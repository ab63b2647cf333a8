#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"

#include "exactrv/entropy.hpp"
#include "exactrv/lazy_uniform.hpp"

using namespace exactrv;

TEST_CASE("bit() forces in order and memoizes") {
  tape_source src(std::vector<std::uint8_t>{1, 0, 1, 1});
  lazy_uniform u(src);
  CHECK(u.forced() == 0);
  CHECK(u.bit(2) == 1);  // forces bits 0..2
  CHECK(u.forced() == 3);
  CHECK(src.consumed() == 3);
  // Re-reading earlier bits touches the source no further.
  CHECK(u.bit(0) == 1);
  CHECK(u.bit(1) == 0);
  CHECK(u.bit(2) == 1);
  CHECK(src.consumed() == 3);
}

TEST_CASE("preset prefix serves without consuming entropy") {
  tape_source src(std::vector<std::uint8_t>{1, 1});
  const std::vector<std::uint8_t> prefix{0, 1, 0};
  lazy_uniform u(src, prefix);
  CHECK(u.forced() == 3);
  CHECK(u.bit(0) == 0);
  CHECK(u.bit(2) == 0);
  CHECK(src.consumed() == 0);
  // Past the prefix, bits extend from the source.
  CHECK(u.bit(3) == 1);
  CHECK(src.consumed() == 1);
}

TEST_CASE("deviates sharing one source interleave by force order") {
  tape_source src(std::vector<std::uint8_t>{1, 0, 0, 1, 1, 0});
  lazy_uniform a(src), b(src);
  CHECK(a.bit(0) == 1);  // tape position 0
  CHECK(b.bit(1) == 0);  // positions 1, 2
  CHECK(a.bit(1) == 1);  // position 3
  CHECK(b.bit(2) == 1);  // position 4
  CHECK(src.consumed() == 5);
  // All memoized reads stay put.
  CHECK(a.bit(0) == 1);
  CHECK(b.bit(0) == 0);
  CHECK(src.consumed() == 5);
}

TEST_CASE("get_bits accumulates big-endian") {
  tape_source src(std::vector<std::uint8_t>{1, 0, 1, 1});
  lazy_uniform u(src);
  CHECK(get_bits(u, 4) == 11);  // 1011b
  CHECK(get_bits(u, 2) == 2);   // 10b, from memoized bits
  CHECK(src.consumed() == 4);
}

TEST_CASE("get_bits(0) is 0 and forces nothing") {
  tape_source src(std::vector<std::uint8_t>{1});
  lazy_uniform u(src);
  CHECK(get_bits(u, 0) == 0);
  CHECK(u.forced() == 0);
  CHECK(src.consumed() == 0);
}

TEST_CASE("get_bits prefix property: floor halves exactly") {
  // floor(u 2^n) = floor(floor(u 2^m) / 2^(m-n)) for n <= m.
  seeded_source src(2024);
  lazy_uniform u(src);
  const bigint wide = get_bits(u, 48);
  for (std::size_t n : {0, 1, 7, 23, 48}) {
    CHECK(get_bits(u, n) == wide >> (48 - n));
  }
}

TEST_CASE("cmp_uniform returns 0 only for the same object") {
  tape_source src(std::vector<std::uint8_t>{});
  lazy_uniform u(src);
  CHECK(cmp_uniform(u, u) == 0);
  CHECK(u.forced() == 0);  // identity short-circuits before any forcing
  CHECK(src.consumed() == 0);
}

TEST_CASE("cmp_uniform hand trace: first differing pair decides") {
  // x = .10..., y = .11...: bits agree at index 0, differ at index 1.
  tape_source src_x(std::vector<std::uint8_t>{1, 0});
  tape_source src_y(std::vector<std::uint8_t>{1, 1});
  lazy_uniform x(src_x), y(src_y);
  CHECK(cmp_uniform(x, y) == -1);
  CHECK(x.forced() == 2);
  CHECK(y.forced() == 2);

  tape_source src_a(std::vector<std::uint8_t>{1});
  tape_source src_b(std::vector<std::uint8_t>{0});
  lazy_uniform a(src_a), b(src_b);
  CHECK(cmp_uniform(a, b) == 1);
  CHECK(a.forced() == 1);
  CHECK(b.forced() == 1);
}

TEST_CASE("cmp_uniform forces x's bit before y's at each index") {
  // Both operands draw from ONE tape; the interleaving fixes which bits
  // land where. Tape: x0=1, y0=1, x1=0, y1=1 -> x < y.
  tape_source src(std::vector<std::uint8_t>{1, 1, 0, 1});
  lazy_uniform x(src), y(src);
  CHECK(cmp_uniform(x, y) == -1);
  CHECK(src.consumed() == 4);
  CHECK(x.bit(0) == 1);
  CHECK(x.bit(1) == 0);
  CHECK(y.bit(0) == 1);
  CHECK(y.bit(1) == 1);
}

TEST_CASE("cmp_uniform throws undecided after max_bits tied pairs") {
  // Two distinct objects with identical expansions never separate.
  const std::vector<std::uint8_t> same(64, 1);
  tape_source src_x(same), src_y(same);
  lazy_uniform x(src_x), y(src_y);
  CHECK_THROWS_AS(cmp_uniform(x, y, 64), undecided_error);
  CHECK(x.forced() == 64);
  CHECK(y.forced() == 64);
}

TEST_CASE("cmp_uniform antisymmetry on random pairs") {
  seeded_source src(77);
  for (int trial = 0; trial < 200; ++trial) {
    lazy_uniform x(src), y(src);
    const int xy = cmp_uniform(x, y);
    const int yx = cmp_uniform(y, x);  // memoized, no fresh entropy
    CHECK(xy == -yx);
    CHECK(xy != 0);
  }
}

TEST_CASE("cmp_uniform agrees with the forced prefixes") {
  // Soundness: when the verdict is -1, x's expansion is strictly below
  // y's over the forced prefix, as integers at the longer forced length.
  seeded_source src(78);
  for (int trial = 0; trial < 200; ++trial) {
    lazy_uniform x(src), y(src);
    const int v = cmp_uniform(x, y);
    const std::size_t n = std::max(x.forced(), y.forced());
    const bigint xi = get_bits(x, n);
    const bigint yi = get_bits(y, n);
    if (v < 0) {
      CHECK(xi < yi);
    } else {
      CHECK(xi > yi);
    }
  }
}

TEST_CASE("le_half reads exactly the first bit") {
  tape_source src(std::vector<std::uint8_t>{0, 1});
  lazy_uniform u(src), v(src);
  CHECK(le_half(u));
  CHECK_FALSE(le_half(v));
  CHECK(u.forced() == 1);
  CHECK(src.consumed() == 2);
}

TEST_CASE("max2 hand trace keeps the larger deviate") {
  // x0=0, y0=1: y wins at the first pair; winner's bit 0 is 1.
  tape_source src(std::vector<std::uint8_t>{0, 1, 1, 0});
  lazy_uniform w = max2(src);
  CHECK(w.bit(0) == 1);
  CHECK(src.consumed() == 2);  // bit(0) was already forced by the compare
  CHECK(w.bit(1) == 1);        // extends from the tape
  CHECK(src.consumed() == 3);
}

TEST_CASE("max2 first bit is 1 with frequency near 3/4") {
  // P[max(u,v) >= 1/2] = 1 - 1/4. 10^5 draws, 5 sigma.
  seeded_source src(4242);
  const int n = 100000;
  int ones = 0;
  for (int i = 0; i < n; ++i) {
    lazy_uniform w = max2(src);
    ones += w.bit(0);
  }
  const double sigma = std::sqrt(0.75 * 0.25 * n);
  CHECK(std::abs(ones - 0.75 * n) <= 5.0 * sigma);
}

TEST_CASE("max2 result dominates a replayed loser") {
  // Replaying the same tape through two plain deviates must show the
  // winner is the pairwise larger one.
  seeded_source gen(555);
  for (int trial = 0; trial < 100; ++trial) {
    recording_source rec(gen);
    lazy_uniform w = max2(rec);
    const bigint w16 = get_bits(w, 16);

    tape_source replay(rec.log());
    lazy_uniform x(replay), y(replay);
    const int v = cmp_uniform(x, y);
    lazy_uniform& winner = v < 0 ? y : x;
    // The winner's forced prefix agrees with w (same tape, same order).
    const std::size_t n = std::min<std::size_t>(winner.forced(), 16);
    CHECK(get_bits(winner, n) == w16 >> (16 - n));
  }
}
