#pragma once

// Arbitrary-precision integer helpers: gcd, extended-Euclid modular
// inverse, and square-and-multiply modular exponentiation.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace rsakit {

// Unbounded nonnegative integer. Expression templates are disabled so the
// type behaves like a plain value in generic code.
using Nat = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// Signed companion used for Bezout accumulators; public surfaces only ever
// see nonnegative values.
using SignedInt = Nat;

class NotInvertibleError : public std::domain_error {
 public:
  explicit NotInvertibleError(const std::string& what) : std::domain_error(what) {}
};

// gcd(a, 0) = a; gcd(0, 0) is undefined.
template <class Int>
Int gcd(Int a, Int b) {
  if (a == 0 && b == 0) {
    throw std::domain_error("gcd(0, 0) is undefined");
  }
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// x^n mod m for m >= 2, with 0^0 = 1. Squares the base and halves the
// exponent each step, multiplying into the result on odd exponents.
template <class Int>
Int mod_pow(Int base, Int exponent, const Int& modulus) {
  if (modulus < 2) {
    throw std::domain_error("mod_pow requires modulus >= 2");
  }
  Int result{1};
  base = base % modulus;
  while (exponent > 0) {
    if ((exponent & 1) != 0) {
      result = result * base % modulus;
    }
    base = base * base % modulus;
    exponent >>= 1;
  }
  return result;
}

namespace detail {

// Two-accumulator extended Euclid. Returns the Bezout coefficient of `a`
// modulo the original `b` (possibly negative) and leaves gcd(a, b) in `a`.
inline SignedInt bezout_coefficient(SignedInt a, SignedInt b, SignedInt* gcd_out) {
  SignedInt x1{0};
  SignedInt x2{1};
  while (b != 0) {
    SignedInt quotient = a / b;
    SignedInt r = a % b;
    a = b;
    b = r;
    SignedInt next = x2 - quotient * x1;
    x2 = x1;
    x1 = next;
  }
  *gcd_out = a;
  return x2;
}

}  // namespace detail

// Multiplicative inverse of a modulo b: the x in [0, b) with a*x = 1 (mod b).
// Signed intermediates are normalized into [0, b) once at the end.
inline Nat mod_inverse(const Nat& a, const Nat& b) {
  if (b < 2) {
    throw std::domain_error("mod_inverse requires modulus >= 2");
  }
  SignedInt g;
  SignedInt res = detail::bezout_coefficient(SignedInt(a), SignedInt(b), &g);
  if (g != 1) {
    throw NotInvertibleError("not invertible: gcd(" + a.str() + ", " + b.str() + ") != 1");
  }
  if (res < 0) {
    return Nat((res + b) % b);
  }
  return Nat(res % b);
}

}  // namespace rsakit
