#pragma once

// Miller-Rabin probable-prime testing and random prime generation.

#include <stdexcept>

#include "rsakit/numtheory.hpp"
#include "rsakit/rng.hpp"

namespace rsakit {

// n - 1 = 2^two_exponent * odd_part with odd_part odd.
template <class Int>
struct MrDecomposition {
  Int odd_part;
  unsigned two_exponent;
};

template <class Int>
MrDecomposition<Int> decompose(const Int& n) {
  if (n < 3 || (n & 1) == 0) {
    throw std::domain_error("decompose requires an odd n >= 3");
  }
  Int q = n - 1;
  unsigned j = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++j;
  }
  return {q, j};
}

// One Miller-Rabin round with base x against a precomputed decomposition of
// n - 1. Computes y = x^q mod n once, then squares up to j times looking for
// n-1; a y of 1 reached before n-1 exposes a nontrivial square root of
// unity, so n is composite.
template <class Int>
bool mr_round(const Int& n, const Int& x, const MrDecomposition<Int>& dec) {
  if (n < 3 || (n & 1) == 0) {
    throw std::domain_error("mr_round requires an odd n >= 3");
  }
  if (x < 2 || x > n - 2) {
    throw std::domain_error("mr_round requires a base in [2, n-2]");
  }
  Int y = mod_pow(x, dec.odd_part, n);
  if (y == 1) {
    return true;
  }
  for (unsigned remaining = dec.two_exponent; remaining >= 1; --remaining) {
    if (y == n - 1) {
      return true;
    }
    if (y == 1) {
      return false;
    }
    y = y * y % n;
  }
  return false;
}

template <class Int>
bool mr_round(const Int& n, const Int& x) {
  return mr_round(n, x, decompose(n));
}

struct PrimeGenParams {
  unsigned bits;    // significant bits of each candidate, >= 3
  unsigned rounds;  // Miller-Rabin repetitions per candidate, >= 1
};

// Probabilistic primality test: `rounds` random bases from [2, n-2], each
// run through one Miller-Rabin round. A base sharing a factor with n
// short-circuits to composite. 2 and 3 are prime by guard; even n is
// composite.
inline bool is_probable_prime(const Nat& n, unsigned rounds, RandomSource& source) {
  if (n < 2) {
    throw std::domain_error("is_probable_prime requires n >= 2");
  }
  if (rounds < 1) {
    throw std::domain_error("is_probable_prime requires rounds >= 1");
  }
  if (n == 2 || n == 3) {
    return true;
  }
  if ((n & 1) == 0) {
    return false;
  }
  MrDecomposition<Nat> dec = decompose(n);
  Nat span = n - 3;
  for (unsigned round = 0; round < rounds; ++round) {
    Nat x = Nat(2 + random_below(source, span));
    if (gcd(x, n) != 1) {
      return false;
    }
    if (!mr_round(n, x, dec)) {
      return false;
    }
  }
  return true;
}

// Draws fresh odd candidates with exactly params.bits significant bits until
// one passes params.rounds Miller-Rabin rounds. Termination is probabilistic.
inline Nat generate_prime(const PrimeGenParams& params, RandomSource& source) {
  if (params.bits < 3) {
    throw std::domain_error("generate_prime requires bits >= 3");
  }
  if (params.rounds < 1) {
    throw std::domain_error("generate_prime requires rounds >= 1");
  }
  for (;;) {
    Nat candidate = random_odd_candidate(source, params.bits);
    if (is_probable_prime(candidate, params.rounds, source)) {
      return candidate;
    }
  }
}

}  // namespace rsakit
