#pragma once

// Deterministic, seedable randomness for prime generation. The default
// source is a 64-bit linear congruential generator; an OS-entropy source
// with the same interface can be swapped in where reproducibility is not
// wanted.

#include <cstdint>
#include <random>
#include <stdexcept>

#include "rsakit/numtheory.hpp"

namespace rsakit {

// Anything that can hand out uniform 64-bit words.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual std::uint64_t next_u64() = 0;
};

// Linear congruential generator: state <- (a*state + c) mod 2^64.
// Low LCG bits have short periods, so each output word is built from the
// high 32 bits of two consecutive states (first state supplies the upper
// half). One next_u64() therefore advances the state twice.
class Lcg final : public RandomSource {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  // One raw transition; returns the new state.
  std::uint64_t step() {
    state_ = kMultiplier * state_ + kIncrement;
    return state_;
  }

  std::uint64_t next_u64() override {
    std::uint64_t hi = step() >> 32;
    std::uint64_t lo = step() >> 32;
    return (hi << 32) | lo;
  }

  std::uint64_t state() const { return state_; }

  friend bool operator==(const Lcg& a, const Lcg& b) { return a.state_ == b.state_; }

 private:
  std::uint64_t state_;
};

// Nondeterministic source backed by std::random_device.
class SystemRandom final : public RandomSource {
 public:
  std::uint64_t next_u64() override {
    std::uint64_t hi = device_();
    std::uint64_t lo = device_();
    return (hi << 32) | lo;
  }

 private:
  std::random_device device_;
};

// A random value with exactly `bits` significant bits (top bit forced to 1),
// assembled from successive generator words, least-significant word first.
inline Nat random_nat_bits(RandomSource& source, unsigned bits) {
  if (bits < 2) {
    throw std::domain_error("random_nat_bits requires bits >= 2");
  }
  unsigned words = (bits + 63) / 64;
  Nat value{0};
  for (unsigned i = 0; i < words; ++i) {
    value |= Nat(source.next_u64()) << (64 * i);
  }
  value &= (Nat(1) << bits) - 1;
  value |= Nat(1) << (bits - 1);
  return value;
}

// As random_nat_bits but with the lowest bit forced to 1.
inline Nat random_odd_candidate(RandomSource& source, unsigned bits) {
  Nat value = random_nat_bits(source, bits);
  value |= 1;
  return value;
}

// Uniform value in [0, bound) by rejection sampling on bit_length(bound - 1)
// bits; no bits are forced, so every value is reachable.
inline Nat random_below(RandomSource& source, const Nat& bound) {
  if (bound < 1) {
    throw std::domain_error("random_below requires bound >= 1");
  }
  if (bound == 1) {
    return Nat{0};
  }
  unsigned bits = boost::multiprecision::msb(Nat(bound - 1)) + 1;
  unsigned words = (bits + 63) / 64;
  Nat mask = (Nat(1) << bits) - 1;
  for (;;) {
    Nat value{0};
    for (unsigned i = 0; i < words; ++i) {
      value |= Nat(source.next_u64()) << (64 * i);
    }
    value &= mask;
    if (value < bound) {
      return value;
    }
  }
}

}  // namespace rsakit
