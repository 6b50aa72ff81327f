#pragma once

// Key file format, three LF-terminated lines and nothing else:
//   line 1: "rsa-pub" or "rsa-prv"
//   line 2: exponent in decimal
//   line 3: modulus in decimal
// Parsing is strict: no CR, no blanks, no leading zeros, no trailing bytes,
// so a parsed key re-serializes byte-identically.

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rsakit/numtheory.hpp"
#include "rsakit/rsa.hpp"

namespace rsakit {

inline constexpr std::string_view kPublicKeyTag = "rsa-pub";
inline constexpr std::string_view kPrivateKeyTag = "rsa-prv";

enum class KeyKind { kPublic, kPrivate };

class KeyFileError : public std::runtime_error {
 public:
  explicit KeyFileError(const std::string& what) : std::runtime_error(what) {}
};

// Wrong key kind for the requested operation (e.g. a private key where a
// public one is required).
class KeyKindError : public KeyFileError {
 public:
  explicit KeyKindError(const std::string& what) : KeyFileError(what) {}
};

struct ParsedKey {
  KeyKind kind;
  Nat exponent;
  Nat modulus;
};

// str() is used instead of operator<< so caller stream flags cannot change
// the base.
inline void write_public(std::ostream& out, const PublicKey& key) {
  out << kPublicKeyTag << '\n' << key.exponent.str() << '\n' << key.modulus.str() << '\n';
}

inline void write_private(std::ostream& out, const PrivateKey& key) {
  out << kPrivateKeyTag << '\n' << key.exponent.str() << '\n' << key.modulus.str() << '\n';
}

namespace detail {

inline Nat parse_decimal_line(const std::string& line, const char* what) {
  if (line.empty()) {
    throw KeyFileError(std::string("key file: empty ") + what);
  }
  if (line.size() > 1 && line[0] == '0') {
    throw KeyFileError(std::string("key file: leading zero in ") + what);
  }
  for (char c : line) {
    if (c < '0' || c > '9') {
      throw KeyFileError(std::string("key file: non-digit in ") + what);
    }
  }
  return Nat(line);
}

}  // namespace detail

inline ParsedKey read_key(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw KeyFileError("key file: read failed");
  }
  std::string lines[3];
  std::size_t pos = 0;
  for (std::string& line : lines) {
    std::size_t lf = content.find('\n', pos);
    if (lf == std::string::npos) {
      throw KeyFileError("key file: expected three line-feed terminated lines");
    }
    line = content.substr(pos, lf - pos);
    pos = lf + 1;
  }
  if (pos != content.size()) {
    throw KeyFileError("key file: trailing bytes after modulus line");
  }

  ParsedKey key;
  if (lines[0] == kPublicKeyTag) {
    key.kind = KeyKind::kPublic;
  } else if (lines[0] == kPrivateKeyTag) {
    key.kind = KeyKind::kPrivate;
  } else {
    throw KeyFileError("key file: unknown tag \"" + lines[0] + "\"");
  }
  key.exponent = detail::parse_decimal_line(lines[1], "exponent");
  key.modulus = detail::parse_decimal_line(lines[2], "modulus");
  return key;
}

inline PublicKey load_public(std::istream& in) {
  ParsedKey key = read_key(in);
  if (key.kind != KeyKind::kPublic) {
    throw KeyKindError("expected a public key (rsa-pub), got a private key");
  }
  if (key.modulus < 6 || key.exponent < 3 || (key.exponent & 1) == 0) {
    throw KeyFileError("key file: public key violates e >= 3 odd, m >= 6");
  }
  return PublicKey{key.exponent, key.modulus};
}

inline PrivateKey load_private(std::istream& in) {
  ParsedKey key = read_key(in);
  if (key.kind != KeyKind::kPrivate) {
    throw KeyKindError("expected a private key (rsa-prv), got a public key");
  }
  if (key.modulus < 6 || key.exponent < 1) {
    throw KeyFileError("key file: private key violates d >= 1, m >= 6");
  }
  return PrivateKey{key.exponent, key.modulus};
}

}  // namespace rsakit
