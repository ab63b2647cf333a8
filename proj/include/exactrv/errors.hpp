#pragma once

#include <stdexcept>

namespace exactrv {

// Thrown by tape_source when a bit is requested past the end of the tape.
class tape_exhausted : public std::runtime_error {
 public:
  tape_exhausted() : std::runtime_error("bit tape exhausted") {}
};

// Thrown when a comparison reaches its precision cap with the operands
// still indistinguishable. Callers that can tolerate ties (the
// conformance harness, the CLI) catch it; the samplers never do.
class undecided_error : public std::runtime_error {
 public:
  explicit undecided_error(long long cap)
      : std::runtime_error("comparison undecided at precision cap"), cap_(cap) {}

  // The precision (or bit count) at which the comparison gave up.
  long long cap() const noexcept { return cap_; }

 private:
  long long cap_;
};

// Thrown by the chi-square check when tail merging leaves fewer than two
// bins, so no goodness-of-fit statistic exists.
class degenerate_binning : public std::runtime_error {
 public:
  degenerate_binning() : std::runtime_error("chi-square binning is degenerate") {}
};

}  // namespace exactrv
