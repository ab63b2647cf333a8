#pragma once

#include <cstdint>
#include <utility>

#include "exactrv/creal.hpp"
#include "exactrv/entropy.hpp"
#include "exactrv/lazy_uniform.hpp"

namespace exactrv {

// Samplers drawing exactly from their target distributions, built from
// lazy deviates and rejection; no floating point anywhere. All entropy
// flows through the one source passed in, in a fixed documented order,
// so seeded runs and tape replays are bit-reproducible.

// Counts how many times a fresh deviate falls below the previous one,
// starting the chain at x: draws y1, y2, ... and returns n0 + (length of
// the maximal run y1 > y2 > ... with y1 < x). x keeps its forced bits.
// P[result = n0 + j] = x^j / j! - x^(j+1) / (j+1)!.
std::uint64_t decreasing_trial(bit_source& src, std::uint64_t n0, lazy_uniform& x);

// True with probability exp(-1/2): draws x, answers true outright when
// x >= 1/2, else runs a decreasing chain from x and answers by the run
// length's parity.
bool bernoulli_half_exp(bit_source& src);

// Counts successes until the first failing trial: n0 + Geometric(p)
// where p is the trial's success probability.
template <typename Trial>
std::uint64_t geometric(Trial&& trial, std::uint64_t n0) {
  std::uint64_t n = n0;
  while (trial()) ++n;
  return n;
}

// Short-circuit conjunction of n independent trials; vacuously true at
// n = 0. True with probability p^n.
template <typename Trial>
bool all_of(Trial&& trial, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!trial()) return false;
  }
  return true;
}

// Nonnegative integer with P[k] proportional to exp(-k^2/2): a geometric
// count of exp(-1/2) successes, accepted by k(k-1) further independent
// exp(-1/2) trials, else retried.
std::uint64_t gaussian_int(bit_source& src);

// Three-way split of a uniform draw over m outcomes, m >= 2:
// -1 and 0 with probability 1/m each, +1 otherwise.
int choose3(bit_source& src, std::uint64_t m);

// True with probability (2 - x) / (2k + 2): a choose3 over 2k + 2
// outcomes, where 0 accepts outright and -1 accepts iff x < fresh r.
bool thin_bernoulli(bit_source& src, std::uint64_t k, lazy_uniform& x);

// Decreasing chain seeded at x where each step must also pass
// thin_bernoulli's complement; with q = (2k + x) / (2k + 2),
// P[result = n] = (x^n / n!) q^n - (x^(n+1) / (n+1)!) q^(n+1).
std::uint64_t thinned_trial(bit_source& src, std::uint64_t k, lazy_uniform& x);

// True with probability exp(-x (2k + x) / (2k + 2)): the parity of a
// thinned trial.
bool bernoulli_exp_frac(bit_source& src, std::uint64_t k, lazy_uniform& x);

// Integer magnitude plus fractional deviate, the split form the
// continuous samplers produce before applying a sign.
struct magnitude_sample {
  std::uint64_t k;
  lazy_uniform frac;
};

// Half-Gaussian split sample: density proportional to exp(-(k + x)^2 / 2)
// over k >= 0, x in [0,1). Draws k = gaussian_int, x uniform, accepts by
// k + 1 independent bernoulli_exp_frac trials, else retries.
magnitude_sample half_gaussian(bit_source& src);

// Standard Gaussian as a constructive real: a half-Gaussian magnitude
// with a fair sign bit drawn after it.
creal gaussian(bit_source& src);

// Unit-rate exponential split sample: density exp(-(k + x)) over k >= 0,
// x in [0,1). Runs decreasing chains on fresh deviates until one has
// even length; k counts the odd-length failures.
magnitude_sample neg_exponential(bit_source& src);

// Laplace with rate 2^eps_exp about mu: a signed exponential magnitude
// scaled by 2^-eps_exp, shifted by mu. Density
// 2^eps_exp / 2 * exp(-2^eps_exp |t - mu|).
creal laplace(bit_source& src, std::int64_t eps_exp, const creal& mu);

}  // namespace exactrv
