#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "exactrv/lazy_uniform.hpp"

namespace exactrv {

namespace detail {
class creal_node;
}

// A dyadic rational num / 2^exp.
struct dyadic {
  bigint num;
  std::int64_t exp = 0;
};

// A constructive real: a function from precision p to an integer
// approximant A with |A - r * 2^p| <= 1, for every integer p, negative
// included. Handles are cheap shared references into an expression DAG;
// uniform leaves memoize their forced bits, so repeated queries at any
// precisions describe one consistent real number.
//
// Each node caches its single highest-precision approximant. A request
// below the cached precision is served by a round-to-nearest shift (ties
// away from zero), which keeps the contract: the cached error of at most
// 1 scales down to at most 1/2, plus at most 1/2 introduced by rounding.
//
// Not thread-safe: a creal and everything beneath it (deviates, their
// source) belong to a single owner.
class creal {
 public:
  // Exact integer z.
  static creal of_int(bigint z);

  // Takes ownership of the deviate; approx(p) = floor(u * 2^p) for
  // p > 0, else 0. The deviate's source must outlive the creal.
  static creal of_uniform(lazy_uniform u);

  // (-1)^sign_bit * (z + u), composed from the primitives below.
  static creal of_bzu(std::uint8_t sign_bit, bigint z, lazy_uniform u);

  // Exact rational num/den, den > 0. approx(p) rounds num * 2^p / den to
  // nearest (ties away from zero), so its error is at most 1/2.
  static creal of_rational(bigint num, bigint den);

  // Exact decimal such as "-2.5" or "0.300": optional sign, digits,
  // optional fractional part. Parsed to of_rational; no floats involved.
  static creal of_decimal(std::string_view text);

  // The approximant function itself.
  bigint approx(std::int64_t p) const;

  // Decimal rendering with |printed - r| <= 10^-digits, digits >= 0.
  std::string to_decimal(int digits) const;

 private:
  explicit creal(std::shared_ptr<detail::creal_node> node);

  std::shared_ptr<detail::creal_node> node_;

  friend creal add(const creal&, const creal&);
  friend creal neg(const creal&);
  friend creal scal_pow2(const creal&, std::int64_t);
};

// x + y: sums the operands' approximants at p + 2 and rounds the total
// down two places (nearest, ties away from zero).
creal add(const creal& x, const creal& y);

// -x.
creal neg(const creal& x);

// x / 2^k, so negative k scales up: approx(p) = x.approx(p - k).
creal scal_pow2(const creal& x, std::int64_t k);

// Three-way comparison by precision refinement, starting at start_p: the
// approximants separate the reals once they differ by more than 2,
// otherwise p advances by 1. Distinct reals are decided once 2^p exceeds
// about 3 / |x - y|; past max_p the comparison throws undecided_error.
// Never returns 0: equal reals cannot be separated at finite precision.
int cmp(const creal& x, const creal& y, std::int64_t start_p = 0, std::int64_t max_p = 128);

// cmp of sample against a dyadic point, from precision 0. Over many
// independent samples, the -1 frequency estimates the sampled
// distribution's CDF at the point.
int checker(const creal& sample, const dyadic& point, std::int64_t max_p = 128);

// Test hook: with caching disabled every approx re-evaluates its whole
// subtree. Caching is transparent for the nondecreasing-precision
// request patterns the library itself generates (cmp, checker,
// to_decimal all ramp precision upward); the toggle lets tests verify
// exactly that, and the rounded serve-down path is covered separately
// against the approximant bound.
void set_creal_cache_enabled(bool enabled) noexcept;
bool creal_cache_enabled() noexcept;

}  // namespace exactrv
