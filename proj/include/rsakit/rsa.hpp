#pragma once

// RSA key generation and number-level encryption/decryption. Encrypting and
// decrypting are the same modular exponentiation; only the exponent differs.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "rsakit/numtheory.hpp"
#include "rsakit/primality.hpp"
#include "rsakit/rng.hpp"

namespace rsakit {

// Fixed public exponent; commonly used in practice to keep encryption fast.
inline constexpr std::uint32_t kPublicExponent = 65537;

struct PublicKey {
  Nat exponent;  // e, odd and >= 3
  Nat modulus;   // m = p*q
};

struct PrivateKey {
  Nat exponent;  // d with e*d = 1 (mod phi(m))
  Nat modulus;   // m, same as in the public key
};

// Both halves of a generated key plus generation provenance.
struct RsaKeyPair {
  PublicKey pub;
  PrivateKey prv;
  Nat p;
  Nat q;
  unsigned bits = 0;
  std::optional<std::uint64_t> seed;
};

class NotRelativelyPrimeError : public std::domain_error {
 public:
  explicit NotRelativelyPrimeError(const std::string& what) : std::domain_error(what) {}
};

// d = e^-1 mod (p-1)(q-1). Throws NotRelativelyPrimeError when gcd(e, phi)
// is not 1; keygen catches this and retries with fresh primes.
inline Nat derive_private_exponent(const Nat& e, const Nat& p, const Nat& q) {
  Nat phi = (p - 1) * (q - 1);
  if (gcd(e, phi) != 1) {
    throw NotRelativelyPrimeError("not relative prime: gcd(e, phi(m)) != 1");
  }
  return mod_inverse(e, phi);
}

// x^exponent mod m for 0 <= x < m. Valid for every residue because m is a
// product of two distinct primes (squarefree), making RSA a bijection on
// all of Z_m.
inline Nat crypt_number(const Nat& x, const Nat& exponent, const Nat& modulus) {
  if (x < 0 || x >= modulus) {
    throw std::domain_error("crypt_number: block value out of range [0, m)");
  }
  return mod_pow(x, exponent, modulus);
}

// Generates p and q with ceil(bits/2) significant bits each, so the modulus
// lands near the requested size. Regenerates q on a p == q collision and
// both primes when e is not invertible mod phi. The fixed e = 65537 needs
// phi(m) > e, which ceil(bits/2) >= 10 guarantees; smaller requests are
// rejected up front.
inline RsaKeyPair keygen(unsigned bits, unsigned rounds, RandomSource& source,
                         std::optional<std::uint64_t> seed = std::nullopt) {
  if (bits < 12) {
    throw std::invalid_argument("keygen requires bits >= 12");
  }
  unsigned prime_bits = (bits + 1) / 2;
  if (prime_bits < 10) {
    throw std::domain_error(
        "keygen: modulus too small for e = 65537 (phi(m) could be <= e); "
        "request at least 19 bits or use a smaller test exponent");
  }
  PrimeGenParams params{prime_bits, rounds};
  Nat e{kPublicExponent};
  for (;;) {
    Nat p = generate_prime(params, source);
    Nat q = generate_prime(params, source);
    while (q == p) {
      q = generate_prime(params, source);
    }
    Nat d;
    try {
      d = derive_private_exponent(e, p, q);
    } catch (const NotRelativelyPrimeError&) {
      continue;  // fresh primes
    }
    Nat m = p * q;
    RsaKeyPair pair;
    pair.pub = PublicKey{e, m};
    pair.prv = PrivateKey{d, m};
    pair.p = p;
    pair.q = q;
    pair.bits = bits;
    pair.seed = seed;
    return pair;
  }
}

}  // namespace rsakit
