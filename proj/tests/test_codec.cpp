#include <cstdint>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rsakit/codec.hpp"

using rsakit::DigitString;
using rsakit::Nat;

TEST_CASE("bytes_to_nat known values", "[codec]") {
  CHECK(rsakit::bytes_to_nat(DigitString{}) == 0);
  CHECK(rsakit::bytes_to_nat(DigitString{0x01, 0x02}) == 513);
  CHECK(rsakit::bytes_to_nat(DigitString{0x41}) == 65);
  CHECK(rsakit::bytes_to_nat(DigitString{0x00, 0x00, 0x01}) == 65536);
  CHECK(rsakit::bytes_to_nat(DigitString{0xff, 0xff}) == 65535);
}

TEST_CASE("nat_to_bytes known values", "[codec]") {
  CHECK(rsakit::nat_to_bytes(Nat(513), 2) == DigitString{0x01, 0x02});
  CHECK(rsakit::nat_to_bytes(Nat(0), 3) == DigitString{0x00, 0x00, 0x00});
  CHECK(rsakit::nat_to_bytes(Nat(2790), 2) == DigitString{0xE6, 0x0A});
  CHECK(rsakit::nat_to_bytes(Nat(513), 4) == DigitString{0x01, 0x02, 0x00, 0x00});
  CHECK(rsakit::nat_to_bytes(Nat(0), 0) == DigitString{});
}

TEST_CASE("nat_to_bytes rejects values wider than the digit count", "[codec]") {
  CHECK_THROWS_AS(rsakit::nat_to_bytes(Nat(256), 1), std::overflow_error);
  CHECK_THROWS_AS(rsakit::nat_to_bytes(Nat(65536), 2), std::overflow_error);
  CHECK_THROWS_AS(rsakit::nat_to_bytes(Nat(1), 0), std::overflow_error);
  CHECK_NOTHROW(rsakit::nat_to_bytes(Nat(255), 1));
  CHECK_NOTHROW(rsakit::nat_to_bytes(Nat(65535), 2));
}

TEST_CASE("byte_length counts base-256 digits", "[codec]") {
  CHECK(rsakit::byte_length(Nat(1)) == 1);
  CHECK(rsakit::byte_length(Nat(255)) == 1);
  CHECK(rsakit::byte_length(Nat(256)) == 2);
  CHECK(rsakit::byte_length(Nat(3233)) == 2);
  CHECK(rsakit::byte_length(Nat(65535)) == 2);
  CHECK(rsakit::byte_length(Nat(65536)) == 3);
  CHECK_THROWS_AS(rsakit::byte_length(Nat(0)), std::domain_error);
}

TEST_CASE("byte_length boundaries match the 256-power law", "[codec]") {
  for (std::size_t w = 1; w <= 40; ++w) {
    Nat low = Nat(1) << (8 * (w - 1));  // 256^(w-1)
    Nat high = (Nat(1) << (8 * w)) - 1; // 256^w - 1
    REQUIRE(rsakit::byte_length(low) == w);
    REQUIRE(rsakit::byte_length(high) == w);
    if (w > 1) {
      REQUIRE(rsakit::byte_length(low - 1) == w - 1);
    }
  }
}

TEST_CASE("roundtrip A: bytes -> nat -> bytes", "[codec]") {
  std::mt19937_64 rng(20240812);
  std::uniform_int_distribution<int> len(0, 64);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 3000; ++i) {
    DigitString bs(static_cast<std::size_t>(len(rng)));
    for (auto& b : bs) {
      b = static_cast<std::uint8_t>(byte(rng));
    }
    Nat v = rsakit::bytes_to_nat(bs);
    REQUIRE(v == oracles::bytes_polynomial(bs));
    REQUIRE(v < (Nat(1) << (8 * bs.size())));
    REQUIRE(rsakit::nat_to_bytes(v, bs.size()) == bs);
  }
}

TEST_CASE("roundtrip B: nat -> bytes -> nat", "[codec]") {
  std::mt19937_64 rng(20240813);
  std::uniform_int_distribution<int> width(1, 64);
  std::uniform_int_distribution<std::uint64_t> word;
  for (int i = 0; i < 3000; ++i) {
    std::size_t w = static_cast<std::size_t>(width(rng));
    Nat v{0};
    for (std::size_t k = 0; k * 8 < w; ++k) {
      v |= Nat(word(rng)) << (64 * k);
    }
    v &= (Nat(1) << (8 * w)) - 1;  // force v < 256^w
    REQUIRE(rsakit::bytes_to_nat(rsakit::nat_to_bytes(v, w)) == v);
  }
}
