#pragma once

// ECB-mode RSA file cipher. The ciphertext is a bare sequence of frames,
// no header:
//
//   [k2: 1 byte][cipher digits: k bytes, little-endian]
//
// where k = byte_length(m) and k2 is the number of plaintext bytes the
// frame carries (1 <= k2 <= k-1). Every (k-1)-byte plaintext value is
// below m because 256^(k-1) <= m, and recording k2 preserves leading zero
// bytes exactly. The same key encrypts every block, so equal plaintext
// blocks yield equal frames.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsakit/codec.hpp"
#include "rsakit/numtheory.hpp"
#include "rsakit/rsa.hpp"

namespace rsakit {

// Modulus cannot be framed: k must be in [2, 256] so that a frame carries
// at least one plaintext byte and k2 fits a single byte.
class UnsupportedKeyError : public std::runtime_error {
 public:
  explicit UnsupportedKeyError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or mismatched ciphertext, with the zero-based frame it was
// detected in.
class CipherFormatError : public std::runtime_error {
 public:
  enum class Kind {
    kTruncatedFrame,        // fewer than 1 + k bytes left
    kBadLengthByte,         // k2 outside [1, k-1]
    kCipherValueOutOfRange, // digits decode to a value >= m (corrupt or wrong key)
    kPlaintextOverflow,     // decrypted value does not fit k2 bytes (wrong key)
  };

  CipherFormatError(Kind kind, std::uint64_t frame, const std::string& what)
      : std::runtime_error("frame " + std::to_string(frame) + ": " + what),
        kind_(kind),
        frame_(frame) {}

  Kind kind() const { return kind_; }
  std::uint64_t frame() const { return frame_; }

 private:
  Kind kind_;
  std::uint64_t frame_;
};

struct BlockFormat {
  std::size_t cipher_bytes;  // k
  std::size_t plain_bytes;   // k - 1

  static BlockFormat for_modulus(const Nat& modulus) {
    std::size_t k = byte_length(modulus);
    if (k < 2 || k > 256) {
      throw UnsupportedKeyError("modulus is " + std::to_string(k) +
                                " bytes long; frameable keys have 2..256");
    }
    return BlockFormat{k, k - 1};
  }
};

// Reads up to k-1 plaintext bytes per block until the source is exhausted,
// encrypts each block as one number, and emits the length byte plus k
// cipher digits. Returns the number of frames written; empty input writes
// nothing.
inline std::uint64_t encrypt_stream(std::istream& plain, std::ostream& out,
                                    const PublicKey& key) {
  BlockFormat format = BlockFormat::for_modulus(key.modulus);
  std::vector<std::uint8_t> chunk(format.plain_bytes);
  std::uint64_t frames = 0;
  for (;;) {
    plain.read(reinterpret_cast<char*>(chunk.data()),
               static_cast<std::streamsize>(chunk.size()));
    if (plain.bad()) {
      throw IoError("encrypt: reading plaintext failed");
    }
    std::size_t got = static_cast<std::size_t>(plain.gcount());
    if (got == 0) {
      break;
    }
    Nat value = bytes_to_nat({chunk.data(), got});
    Nat cipher = crypt_number(value, key.exponent, key.modulus);
    DigitString digits = nat_to_bytes(cipher, format.cipher_bytes);
    out.put(static_cast<char>(static_cast<unsigned char>(got)));
    out.write(reinterpret_cast<const char*>(digits.data()),
              static_cast<std::streamsize>(digits.size()));
    if (!out) {
      throw IoError("encrypt: writing ciphertext failed");
    }
    ++frames;
  }
  return frames;
}

// Inverse of encrypt_stream: per frame, reads the length byte and exactly k
// cipher digits, decrypts, and emits the k2 recovered plaintext bytes.
// Truncation is reported before the k2 range is judged, so a lone stray
// byte is a truncated frame, not a bad length.
inline std::uint64_t decrypt_stream(std::istream& cipher, std::ostream& out,
                                    const PrivateKey& key) {
  BlockFormat format = BlockFormat::for_modulus(key.modulus);
  std::vector<std::uint8_t> digits(format.cipher_bytes);
  std::uint64_t frames = 0;
  for (;;) {
    int length_byte = cipher.get();
    if (length_byte == std::istream::traits_type::eof()) {
      if (cipher.bad()) {
        throw IoError("decrypt: reading ciphertext failed");
      }
      break;
    }
    cipher.read(reinterpret_cast<char*>(digits.data()),
                static_cast<std::streamsize>(digits.size()));
    if (cipher.bad()) {
      throw IoError("decrypt: reading ciphertext failed");
    }
    if (static_cast<std::size_t>(cipher.gcount()) != digits.size()) {
      throw CipherFormatError(CipherFormatError::Kind::kTruncatedFrame, frames,
                              "truncated frame (need " + std::to_string(1 + digits.size()) +
                                  " bytes)");
    }
    std::size_t plain_len = static_cast<std::size_t>(length_byte);
    if (plain_len < 1 || plain_len > format.plain_bytes) {
      throw CipherFormatError(CipherFormatError::Kind::kBadLengthByte, frames,
                              "length byte " + std::to_string(plain_len) + " outside [1, " +
                                  std::to_string(format.plain_bytes) + "]");
    }
    Nat value = bytes_to_nat(digits);
    if (value >= key.modulus) {
      throw CipherFormatError(CipherFormatError::Kind::kCipherValueOutOfRange, frames,
                              "cipher value >= modulus (corrupt input or wrong key)");
    }
    Nat plain_value = crypt_number(value, key.exponent, key.modulus);
    if (plain_value >> (8 * plain_len) != 0) {
      throw CipherFormatError(CipherFormatError::Kind::kPlaintextOverflow, frames,
                              "decrypted value does not fit " + std::to_string(plain_len) +
                                  " bytes (wrong key)");
    }
    DigitString plain = nat_to_bytes(plain_value, plain_len);
    out.write(reinterpret_cast<const char*>(plain.data()),
              static_cast<std::streamsize>(plain.size()));
    if (!out) {
      throw IoError("decrypt: writing plaintext failed");
    }
    ++frames;
  }
  return frames;
}

}  // namespace rsakit
