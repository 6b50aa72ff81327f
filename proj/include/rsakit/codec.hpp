#pragma once

// Byte sequences as little-endian base-256 digit strings of a single big
// number, and back. The first byte is the least significant digit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "rsakit/numtheory.hpp"

namespace rsakit {

// The fixed radix: one digit per byte value.
inline constexpr unsigned kByteRadix = 256;

using DigitString = std::vector<std::uint8_t>;

// Sum of digits[i] * 256^i; an empty sequence is 0.
inline Nat bytes_to_nat(std::span<const std::uint8_t> digits) {
  Nat value{0};
  for (std::size_t i = digits.size(); i-- > 0;) {
    value <<= 8;
    value |= digits[i];
  }
  return value;
}

// Exactly `width` little-endian digits of value, zero-padded at the high
// end. Requires value < 256^width.
inline DigitString nat_to_bytes(const Nat& value, std::size_t width) {
  if (value >> (8 * width) != 0) {
    throw std::overflow_error("nat_to_bytes: value does not fit in " + std::to_string(width) +
                              " bytes");
  }
  DigitString digits(width);
  Nat rest = value;
  for (std::size_t i = 0; i < width; ++i) {
    digits[i] = static_cast<std::uint8_t>(rest & 0xff);
    rest >>= 8;
  }
  return digits;
}

// Number of base-256 digits of m >= 1: the least k with m < 256^k.
inline std::size_t byte_length(const Nat& m) {
  if (m < 1) {
    throw std::domain_error("byte_length requires m >= 1");
  }
  return boost::multiprecision::msb(m) / 8 + 1;
}

}  // namespace rsakit
