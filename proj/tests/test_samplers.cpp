#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"

#include "exactrv/creal.hpp"
#include "exactrv/entropy.hpp"
#include "exactrv/lazy_uniform.hpp"
#include "exactrv/reference_constants.hpp"
#include "exactrv/samplers.hpp"

using namespace exactrv;

namespace {

// x fixed to `first_bit` followed by 31 zero bits: numerically first_bit/2
// up to 2^-33 in expectation, without touching the trial's entropy.
std::vector<std::uint8_t> long_prefix(std::uint8_t first_bit) {
  std::vector<std::uint8_t> p(32, 0);
  p[0] = first_bit;
  return p;
}

double zbound(double p, double n) { return 5.0 * std::sqrt(p * (1.0 - p) / n); }

}  // namespace

TEST_CASE("decreasing_trial: first draw above x ends the run at n0") {
  const auto prefix = long_prefix(0);  // x ~ 0
  tape_source src(std::vector<std::uint8_t>{1});
  lazy_uniform x(src, prefix);
  CHECK(decreasing_trial(src, 7, x) == 7);
  CHECK(src.consumed() == 1);  // y's first bit 1 beats x's first bit 0
}

TEST_CASE("decreasing_trial: run of one") {
  const auto prefix = long_prefix(1);  // x ~ 1/2
  // y1 bit 0 = 0 -> y1 < x; y2 bit 0 = 1 -> y2 > y1 ends the run.
  tape_source src(std::vector<std::uint8_t>{0, 1});
  lazy_uniform x(src, prefix);
  CHECK(decreasing_trial(src, 0, x) == 1);
  CHECK(src.consumed() == 2);
}

TEST_CASE("decreasing_trial: tied pairs extend both operands in order") {
  // x preset to a single bit 0; the compare against y1 ties at index 0
  // (y1 draws 0), so index 1 forces y1's bit then x's bit from the tape.
  tape_source src(std::vector<std::uint8_t>{0, 0, 1, 1});
  std::vector<std::uint8_t> one_zero{0};
  lazy_uniform x(src, one_zero);
  // Trace: index 0: y1 <- tape[0] = 0 vs x 0, tie. Index 1: y1 <- tape[1]
  // = 0, x <- tape[2] = 1 -> y1 < x. Next trial: y2 <- tape[3] = 1 vs
  // y1's memoized bit 0 = 0 -> y2 > y1, run length 1.
  CHECK(decreasing_trial(src, 0, x) == 1);
  CHECK(src.consumed() == 4);
  CHECK(x.forced() == 2);
  CHECK(x.bit(1) == 1);
}

TEST_CASE("decreasing_trial run length at x ~ 1 has mean e - 1") {
  std::vector<std::uint8_t> ones(32, 1);
  seeded_source src(101);
  const double n = 100000;
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    lazy_uniform x(src, ones);
    sum += static_cast<double>(decreasing_trial(src, 0, x));
  }
  const double mean = sum / n;
  const double tol = 5.0 * std::sqrt(ref::run_len_var_at_1 / n);
  CHECK(std::abs(mean - ref::e_minus_1) <= tol);
}

TEST_CASE("decreasing_trial: P[run = 0] = 1 - x at x ~ 1/2") {
  const auto prefix = long_prefix(1);
  seeded_source src(102);
  const double n = 100000;
  int zero = 0;
  for (int i = 0; i < 100000; ++i) {
    lazy_uniform x(src, prefix);
    zero += decreasing_trial(src, 0, x) == 0;
  }
  CHECK(std::abs(zero / n - 0.5) <= zbound(0.5, n));
}

TEST_CASE("bernoulli_half_exp tape traces") {
  {
    tape_source src(std::vector<std::uint8_t>{1});
    CHECK(bernoulli_half_exp(src));  // x >= 1/2 answers outright
    CHECK(src.consumed() == 1);
  }
  {
    // x < 1/2, then run length 0 (even) -> false.
    tape_source src(std::vector<std::uint8_t>{0, 1});
    CHECK_FALSE(bernoulli_half_exp(src));
    CHECK(src.consumed() == 2);
  }
  {
    // x = 0.01b..., y1 = 0.00b < x, y2 = 0.1b > y1: run length 1 -> true.
    // Order: x <- tape[0]; y1 <- tape[1]; tie; y1 <- tape[2], x <- tape[3];
    // y2 <- tape[4].
    tape_source src(std::vector<std::uint8_t>{0, 0, 0, 1, 1});
    CHECK(bernoulli_half_exp(src));
    CHECK(src.consumed() == 5);
  }
}

TEST_CASE("bernoulli_half_exp rate matches exp(-1/2)") {
  seeded_source src(103);
  const double n = 100000;
  int hits = 0;
  for (int i = 0; i < 100000; ++i) hits += bernoulli_half_exp(src);
  CHECK(std::abs(hits / n - ref::exp_neg_half) <= zbound(ref::exp_neg_half, n));
}

TEST_CASE("geometric counts successes before the first failure") {
  {
    std::vector<bool> outcomes{true, true, false};
    std::size_t i = 0;
    CHECK(geometric([&] { return outcomes[i++]; }, 3) == 5);
    CHECK(i == 3);
  }
  {
    std::size_t calls = 0;
    CHECK(geometric([&] { ++calls; return false; }, 0) == 0);
    CHECK(calls == 1);
  }
}

TEST_CASE("geometric over half-exp trials has the geometric mean") {
  // mean = p / (1 - p) with p = exp(-1/2); variance p / (1-p)^2.
  seeded_source src(104);
  const double n = 100000;
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    sum += static_cast<double>(geometric([&] { return bernoulli_half_exp(src); }, 0));
  }
  const double p = ref::exp_neg_half;
  const double var = p / ((1.0 - p) * (1.0 - p));
  CHECK(std::abs(sum / n - ref::geo_mean_half_exp) <= 5.0 * std::sqrt(var / n));
}

TEST_CASE("all_of short-circuits and is vacuously true at n = 0") {
  {
    std::size_t calls = 0;
    CHECK(all_of([&] { ++calls; return true; }, 0));
    CHECK(calls == 0);
  }
  {
    std::size_t calls = 0;
    CHECK_FALSE(all_of([&] { ++calls; return false; }, 5));
    CHECK(calls == 1);
  }
  {
    std::size_t calls = 0;
    CHECK(all_of([&] { ++calls; return true; }, 4));
    CHECK(calls == 4);
  }
}

TEST_CASE("all_of over half-exp trials multiplies the rates") {
  // P[both of 2 pass] = exp(-1).
  seeded_source src(105);
  const double n = 100000;
  int hits = 0;
  for (int i = 0; i < 100000; ++i) {
    hits += all_of([&] { return bernoulli_half_exp(src); }, 2);
  }
  CHECK(std::abs(hits / n - ref::exp_neg_1) <= zbound(ref::exp_neg_1, n));
}

TEST_CASE("gaussian_int PMF head matches exp(-k^2/2) / Z") {
  seeded_source src(106);
  const double n = 100000;
  int k0 = 0, k1 = 0;
  for (int i = 0; i < 100000; ++i) {
    const auto k = gaussian_int(src);
    k0 += k == 0;
    k1 += k == 1;
  }
  CHECK(std::abs(k0 / n - ref::gauss_int_pmf_0) <= zbound(ref::gauss_int_pmf_0, n));
  CHECK(std::abs(k1 / n - ref::gauss_int_pmf_1) <= zbound(ref::gauss_int_pmf_1, n));
}

TEST_CASE("choose3 tape traces and argument validation") {
  {
    tape_source src(std::vector<std::uint8_t>{0});
    CHECK(choose3(src, 2) == -1);
  }
  {
    tape_source src(std::vector<std::uint8_t>{1});
    CHECK(choose3(src, 2) == 0);
  }
  {
    // m = 4 reads two bits: 10b = 2 -> +1.
    tape_source src(std::vector<std::uint8_t>{1, 0});
    CHECK(choose3(src, 4) == 1);
    CHECK(src.consumed() == 2);
  }
  {
    // m = 3 rejects 11b and redraws: 11 01 -> 1 -> 0.
    tape_source src(std::vector<std::uint8_t>{1, 1, 0, 1});
    CHECK(choose3(src, 3) == 0);
    CHECK(src.consumed() == 4);
  }
  tape_source src(std::vector<std::uint8_t>{});
  CHECK_THROWS_AS(choose3(src, 1), std::invalid_argument);
  CHECK_THROWS_AS(choose3(src, 0), std::invalid_argument);
}

TEST_CASE("choose3 rates at m = 3") {
  seeded_source src(107);
  const double n = 100000;
  int lo = 0, mid = 0;
  for (int i = 0; i < 100000; ++i) {
    const int v = choose3(src, 3);
    lo += v == -1;
    mid += v == 0;
  }
  const double third = 1.0 / 3.0;
  CHECK(std::abs(lo / n - third) <= zbound(third, n));
  CHECK(std::abs(mid / n - third) <= zbound(third, n));
}

TEST_CASE("thin_bernoulli tape traces at k = 0") {
  {
    // choose3 over 2 outcomes: bit 1 -> 0 -> accept outright, x untouched.
    tape_source src(std::vector<std::uint8_t>{1});
    std::vector<std::uint8_t> none;
    lazy_uniform x(src, none);
    CHECK(thin_bernoulli(src, 0, x));
    CHECK(src.consumed() == 1);
    CHECK(x.forced() == 0);
  }
  {
    // bit 0 -> -1 branch: accept iff x < fresh r. x = 0.1..., r = 0.0...
    tape_source src(std::vector<std::uint8_t>{0, 0});
    std::vector<std::uint8_t> one{1};
    lazy_uniform x(src, one);
    CHECK_FALSE(thin_bernoulli(src, 0, x));
    CHECK(src.consumed() == 2);
  }
  {
    // -1 branch with x = 0.0..., r = 0.1... -> x < r -> accept.
    tape_source src(std::vector<std::uint8_t>{0, 1});
    std::vector<std::uint8_t> zero{0};
    lazy_uniform x(src, zero);
    CHECK(thin_bernoulli(src, 0, x));
    CHECK(src.consumed() == 2);
  }
}

TEST_CASE("thin_bernoulli rate is (2 - x) / (2k + 2)") {
  struct config {
    std::uint64_t k;
    std::uint8_t x_first_bit;
    double rate;
  };
  for (const config c : {config{0, 1, 0.75}, config{3, 1, 0.1875}, config{1, 0, 0.5}}) {
    seeded_source src(108 + c.k);
    const auto prefix = long_prefix(c.x_first_bit);
    const double n = 100000;
    int hits = 0;
    for (int i = 0; i < 100000; ++i) {
      lazy_uniform x(src, prefix);
      hits += thin_bernoulli(src, c.k, x);
    }
    INFO("k ", c.k, " first bit ", int(c.x_first_bit));
    CHECK(std::abs(hits / n - c.rate) <= zbound(c.rate, n));
  }
}

TEST_CASE("thin_bernoulli at x ~ 0, k = 0 accepts essentially always") {
  seeded_source src(109);
  const auto prefix = long_prefix(0);
  for (int i = 0; i < 10000; ++i) {
    lazy_uniform x(src, prefix);
    REQUIRE(thin_bernoulli(src, 0, x));
  }
}

TEST_CASE("thinned_trial PMF at k = 1, x ~ 1/2") {
  seeded_source src(110);
  const auto prefix = long_prefix(1);
  const double n = 100000;
  int c0 = 0, c1 = 0, c2 = 0;
  for (int i = 0; i < 100000; ++i) {
    lazy_uniform x(src, prefix);
    const auto v = thinned_trial(src, 1, x);
    c0 += v == 0;
    c1 += v == 1;
    c2 += v == 2;
  }
  CHECK(std::abs(c0 / n - ref::thinned_pmf_k1_xhalf_0) <=
        zbound(ref::thinned_pmf_k1_xhalf_0, n));
  CHECK(std::abs(c1 / n - ref::thinned_pmf_k1_xhalf_1) <=
        zbound(ref::thinned_pmf_k1_xhalf_1, n));
  CHECK(std::abs(c2 / n - ref::thinned_pmf_k1_xhalf_2) <=
        zbound(ref::thinned_pmf_k1_xhalf_2, n));
}

TEST_CASE("bernoulli_exp_frac rate is exp(-x(2k + x) / (2k + 2))") {
  // k = 2, x ~ 1/2: exponent -0.5 * 4.5 / 6 = -0.375.
  seeded_source src(111);
  const auto prefix = long_prefix(1);
  const double n = 100000;
  int hits = 0;
  for (int i = 0; i < 100000; ++i) {
    lazy_uniform x(src, prefix);
    hits += bernoulli_exp_frac(src, 2, x);
  }
  CHECK(std::abs(hits / n - ref::exp_neg_0_375) <= zbound(ref::exp_neg_0_375, n));
}

TEST_CASE("half_gaussian integer part: P[k = 0] = 2 Phi(1) - 1") {
  seeded_source src(112);
  const double n = 100000;
  int k0 = 0;
  for (int i = 0; i < 100000; ++i) k0 += half_gaussian(src).k == 0;
  CHECK(std::abs(k0 / n - ref::half_gauss_k0) <= zbound(ref::half_gauss_k0, n));
}

TEST_CASE("gaussian sign is balanced") {
  seeded_source src(113);
  const double n = 40000;
  int negative = 0;
  for (int i = 0; i < 40000; ++i) {
    negative += gaussian(src).approx(20) < 0;
  }
  // approx(20) < 0 can misreport the sign only within 2^-19 of 0; over
  // 4e4 draws the expected count of such draws is under 0.1.
  CHECK(std::abs(negative / n - 0.5) <= zbound(0.5, n) + 1.0 / n);
}

TEST_CASE("neg_exponential tape traces") {
  {
    // The compare forces the trial deviate first: y bit 1, x bit 0 gives
    // run length 0 (even) at the first magnitude.
    tape_source src(std::vector<std::uint8_t>{1, 0});
    auto s = neg_exponential(src);
    CHECK(s.k == 0);
    CHECK(src.consumed() == 2);
    CHECK(le_half(s.frac));
  }
  {
    // First magnitude: y1 = 0.0 < x1 = 0.1, then y2 = 0.1 > y1 ends the
    // run at odd length 1 (rejected). Second magnitude: y = 0.1 > x = 0.0
    // ends at even length 0: k = 1.
    tape_source src(std::vector<std::uint8_t>{0, 1, 1, 1, 0});
    auto s = neg_exponential(src);
    CHECK(s.k == 1);
    CHECK(src.consumed() == 5);
    CHECK(s.frac.bit(0) == 0);
  }
}

TEST_CASE("neg_exponential: P[k = 0] = 1 - exp(-1)") {
  seeded_source src(114);
  const double n = 100000;
  int k0 = 0;
  for (int i = 0; i < 100000; ++i) k0 += neg_exponential(src).k == 0;
  CHECK(std::abs(k0 / n - ref::one_minus_exp_neg_1) <=
        zbound(ref::one_minus_exp_neg_1, n));
}

TEST_CASE("neg_exponential fraction: P[x < 1/2] from the truncated density") {
  // Density e^-x / (1 - e^-1) on [0,1): P = (1 - e^-1/2) / (1 - e^-1).
  seeded_source src(115);
  const double n = 100000;
  const double p = (1.0 - ref::exp_neg_half) / ref::one_minus_exp_neg_1;
  int hits = 0;
  for (int i = 0; i < 100000; ++i) {
    auto s = neg_exponential(src);
    hits += le_half(s.frac);
  }
  CHECK(std::abs(hits / n - p) <= zbound(p, n));
}

TEST_CASE("laplace hand trace: mu 2.5, rate 2, magnitude ~ 0, negative sign") {
  // neg_exponential consumes [1,0] (k = 0, frac bit 0 = 0), sign bit 1,
  // then the fraction's tail stays 0: value = 2.5 - x/2 with x < 2^-17.
  std::vector<std::uint8_t> bits{1, 0, 1};
  bits.resize(24, 0);
  tape_source src(bits);
  const creal mu = creal::of_decimal("2.5");
  const creal v = laplace(src, 1, mu);
  CHECK(v.to_decimal(1) == "2.5");
}

TEST_CASE("laplace centers at mu") {
  // P[X < mu] = 1/2 regardless of rate.
  seeded_source src(116);
  const creal mu = creal::of_decimal("-0.75");
  const double n = 10000;
  int below = 0;
  for (int i = 0; i < 10000; ++i) {
    const creal v = laplace(src, 0, mu);
    below += cmp(v, mu) < 0;
  }
  CHECK(std::abs(below / n - 0.5) <= zbound(0.5, n));
}

TEST_CASE("samplers replay bit-identically from a recorded tape") {
  seeded_source gen(117);
  recording_source rec(gen);
  std::vector<std::string> first;
  const creal mu = creal::of_int(0);
  for (int i = 0; i < 20; ++i) {
    first.push_back(gaussian(rec).to_decimal(6));
    first.push_back(laplace(rec, 1, mu).to_decimal(6));
  }

  tape_source replay(rec.log());
  for (int i = 0; i < 20; ++i) {
    CHECK(gaussian(replay).to_decimal(6) == first[2 * i]);
    CHECK(laplace(replay, 1, mu).to_decimal(6) == first[2 * i + 1]);
  }
  CHECK(replay.consumed() == rec.log().size());
}
