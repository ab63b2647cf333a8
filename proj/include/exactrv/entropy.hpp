#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <vector>

#include "exactrv/errors.hpp"

namespace exactrv {

// A stream of independent fair bits. Sources are single-owner: no
// internal locking, one consumer at a time. Parallel code derives one
// source per worker (see mix_seed).
class bit_source {
 public:
  virtual ~bit_source() = default;

  // Next fair bit, 0 or 1.
  virtual std::uint8_t next_bit() = 0;
};

// Deterministic pseudorandom source: equal seeds give equal bit streams.
// Backed by std::mt19937_64 (period 2^19937 - 1 >= 2^64); bits are served
// MSB-first from each 64-bit output word.
class seeded_source final : public bit_source {
 public:
  explicit seeded_source(std::uint64_t seed) : gen_(seed) {}

  std::uint8_t next_bit() override {
    if (left_ == 0) {
      buf_ = gen_();
      left_ = 64;
    }
    const auto b = static_cast<std::uint8_t>(buf_ >> 63);
    buf_ <<= 1;
    --left_;
    return b;
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t buf_ = 0;
  int left_ = 0;
};

// Finite, replayable source. Throws tape_exhausted past the end.
class tape_source final : public bit_source {
 public:
  explicit tape_source(std::vector<std::uint8_t> bits)
      : owned_(std::move(bits)), bits_(owned_) {}

  // Non-owning view; the caller keeps the buffer alive and unchanged.
  explicit tape_source(std::span<const std::uint8_t> bits) : bits_(bits) {}

  std::uint8_t next_bit() override {
    if (pos_ == bits_.size()) throw tape_exhausted();
    return bits_[pos_++];
  }

  std::size_t consumed() const noexcept { return pos_; }
  std::size_t size() const noexcept { return bits_.size(); }

 private:
  std::vector<std::uint8_t> owned_;
  std::span<const std::uint8_t> bits_;
  std::size_t pos_ = 0;
};

// Pass-through wrapper that logs every bit served, so a run can be
// replayed later from a tape_source over log().
class recording_source final : public bit_source {
 public:
  explicit recording_source(bit_source& inner) : inner_(&inner) {}

  std::uint8_t next_bit() override {
    const std::uint8_t b = inner_->next_bit();
    log_.push_back(b);
    return b;
  }

  const std::vector<std::uint8_t>& log() const noexcept { return log_; }

 private:
  bit_source* inner_;
  std::vector<std::uint8_t> log_;
};

// Uniform draw over {0, ..., bound} by rejection: reads bit_width(bound)
// bits MSB-first into a candidate and retries while the candidate exceeds
// bound. bound = 0 consumes no bits. Each round rejects with probability
// < 1/2, so the expected number of rounds is < 2.
std::uint64_t rand_uniform(bit_source& src, std::uint64_t bound);

// Derives the seed for worker stream `stream` from a master seed, so
// sharded runs stay deterministic given (seed, shard count). splitmix64
// finalizer over seed xor an odd multiple of the stream index.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Tape files hold one ASCII '0' or '1' per bit and end with a newline.
// Whitespace is ignored on load; any other byte is an error.
std::vector<std::uint8_t> load_tape(const std::filesystem::path& path);
void save_tape(const std::filesystem::path& path, std::span<const std::uint8_t> bits);

}  // namespace exactrv
