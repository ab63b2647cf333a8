#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "exactrv/entropy.hpp"

namespace exactrv {

using bigint = boost::multiprecision::cpp_int;

// A uniform deviate on [0,1), held as its big-endian binary expansion and
// extended lazily from the owning source. Forcing bit i draws it once and
// memoizes it, so every later read, from any consumer of this object,
// sees the same value: one deviate is one real number.
//
// Deviates are movable but not copyable (a copy would alias a random
// variable). The source must outlive the deviate.
class lazy_uniform {
 public:
  explicit lazy_uniform(bit_source& src) : src_(&src) {}

  // Deviate whose first bits are already forced to `prefix`; the rest
  // extend from src on demand.
  lazy_uniform(bit_source& src, std::span<const std::uint8_t> prefix)
      : src_(&src), bits_(prefix.begin(), prefix.end()) {}

  lazy_uniform(lazy_uniform&&) = default;
  lazy_uniform& operator=(lazy_uniform&&) = default;
  lazy_uniform(const lazy_uniform&) = delete;
  lazy_uniform& operator=(const lazy_uniform&) = delete;

  // Bit i of the expansion; forces bits up to i, in order, on first use.
  std::uint8_t bit(std::size_t i) {
    while (bits_.size() <= i) bits_.push_back(src_->next_bit());
    return bits_[i];
  }

  // How many bits have been forced so far.
  std::size_t forced() const noexcept { return bits_.size(); }

 private:
  bit_source* src_;
  boost::container::small_vector<std::uint8_t, 24> bits_;
};

// floor(u * 2^n): the first n bits of u, accumulated big-endian. n = 0
// yields 0 without forcing anything.
bigint get_bits(lazy_uniform& u, std::size_t n);

// Three-way comparison of the reals behind x and y. Returns 0 if x and y
// are the same object; otherwise scans bit pairs from the top and returns
// -1 or +1 at the first differing pair. Each tied pair forces one more
// bit of each operand; after max_bits tied pairs the operands are within
// 2^-max_bits of each other and the comparison throws undecided_error.
// Distinct deviates tie forever with probability zero.
int cmp_uniform(lazy_uniform& x, lazy_uniform& y, std::size_t max_bits = std::size_t{1} << 16);

// Whether u < 1/2, read off the first bit alone.
bool le_half(lazy_uniform& u);

// Draws two fresh deviates from src and returns the larger (CDF t^2 on
// [0,1]). The comparison forces only the leading bits it needs; the
// winner keeps extending lazily.
lazy_uniform max2(bit_source& src);

}  // namespace exactrv
