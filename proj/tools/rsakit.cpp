// rsakit — RSA file encryption toolkit.
//
//   rsakit keygen --bits N [--rounds R] [--seed S] [--rng lcg|os]
//                 [--paper-rounds] --out PREFIX
//   rsakit encrypt --key FILE --in FILE --out FILE
//   rsakit decrypt --key FILE --in FILE --out FILE
//
// Exit codes: 0 success, 2 usage/key-type errors, 3 I/O errors,
// 4 ciphertext integrity errors.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rsakit/filecipher.hpp"
#include "rsakit/keyfile.hpp"
#include "rsakit/rng.hpp"
#include "rsakit/rsa.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCipher = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void print_timing(bool enabled, const char* phase, double seconds) {
  if (enabled) {
    std::cout << phase << ' ' << std::fixed << std::setprecision(3) << seconds
              << '\n';
  }
}

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitUsage;
}

int fail_io(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitIo;
}

struct KeygenArgs {
  unsigned bits = 0;
  unsigned rounds = 40;
  std::optional<std::uint64_t> seed;
  std::string rng = "lcg";
  bool paper_rounds = false;
  std::string out_prefix;
};

struct CryptArgs {
  std::string key_path;
  std::string in_path;
  std::string out_path;
};

int run_keygen(const KeygenArgs& args, bool timing) {
  if (args.bits < 24) {
    return fail_usage("--bits must be at least 24");
  }
  if (args.seed && args.rng == "os") {
    return fail_usage("--seed only applies to the deterministic generator; "
                      "drop it or use --rng lcg");
  }

  std::unique_ptr<rsakit::RandomSource> source;
  std::optional<std::uint64_t> seed = args.seed;
  if (args.rng == "os") {
    source = std::make_unique<rsakit::SystemRandom>();
  } else {
    if (!seed) {
      seed = static_cast<std::uint64_t>(
          Clock::now().time_since_epoch().count());
    }
    source = std::make_unique<rsakit::Lcg>(*seed);
  }

  // --paper-rounds: one Miller-Rabin round per candidate bit, i.e. a
  // t-bit prime candidate is tested t times.
  unsigned rounds = args.paper_rounds ? (args.bits + 1) / 2 : args.rounds;

  Clock::time_point start = Clock::now();
  rsakit::RsaKeyPair pair = rsakit::keygen(args.bits, rounds, *source, seed);
  double elapsed = seconds_since(start);

  std::ofstream pub(args.out_prefix + ".pub",
                    std::ios::binary | std::ios::trunc);
  if (!pub) {
    return fail_io("cannot create '" + args.out_prefix + ".pub'");
  }
  rsakit::write_public(pub, pair.pub);
  pub.close();
  std::ofstream prv(args.out_prefix + ".prv",
                    std::ios::binary | std::ios::trunc);
  if (!prv) {
    return fail_io("cannot create '" + args.out_prefix + ".prv'");
  }
  rsakit::write_private(prv, pair.prv);
  prv.close();
  if (pub.fail() || prv.fail()) {
    return fail_io("writing key files under prefix '" + args.out_prefix +
                   "' failed");
  }

  print_timing(timing, "keygen", elapsed);
  return kExitOk;
}

// Reads and validates a key file: unreadable file is an I/O error, while a
// file that is readable but is not a key of the wanted kind is a usage
// error.
template <class Key>
int load_key(const std::string& path, Key (*load)(std::istream&), Key* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return fail_io("cannot open key file '" + path + "'");
  }
  try {
    *out = load(in);
  } catch (const rsakit::KeyFileError& e) {
    return fail_usage("key file '" + path + "': " + e.what());
  }
  return kExitOk;
}

int run_encrypt(const CryptArgs& args, bool timing) {
  rsakit::PublicKey key;
  if (int rc = load_key(args.key_path, rsakit::load_public, &key); rc != kExitOk) {
    return rc;
  }
  std::ifstream in(args.in_path, std::ios::binary);
  if (!in) {
    return fail_io("cannot open input file '" + args.in_path + "'");
  }
  std::ofstream out(args.out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return fail_io("cannot create output file '" + args.out_path + "'");
  }

  try {
    Clock::time_point start = Clock::now();
    rsakit::encrypt_stream(in, out, key);
    double elapsed = seconds_since(start);
    out.close();
    if (out.fail()) {
      return fail_io("writing '" + args.out_path + "' failed");
    }
    print_timing(timing, "encrypt", elapsed);
  } catch (const rsakit::UnsupportedKeyError& e) {
    return fail_usage(e.what());
  } catch (const rsakit::IoError& e) {
    return fail_io(e.what());
  }
  return kExitOk;
}

int run_decrypt(const CryptArgs& args, bool timing) {
  rsakit::PrivateKey key;
  if (int rc = load_key(args.key_path, rsakit::load_private, &key); rc != kExitOk) {
    return rc;
  }
  std::ifstream in(args.in_path, std::ios::binary);
  if (!in) {
    return fail_io("cannot open input file '" + args.in_path + "'");
  }
  std::ofstream out(args.out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return fail_io("cannot create output file '" + args.out_path + "'");
  }

  try {
    Clock::time_point start = Clock::now();
    rsakit::decrypt_stream(in, out, key);
    double elapsed = seconds_since(start);
    out.close();
    if (out.fail()) {
      return fail_io("writing '" + args.out_path + "' failed");
    }
    print_timing(timing, "decrypt", elapsed);
  } catch (const rsakit::UnsupportedKeyError& e) {
    return fail_usage(e.what());
  } catch (const rsakit::CipherFormatError& e) {
    std::cerr << "error: corrupt ciphertext: " << e.what() << '\n';
    return kExitCipher;
  } catch (const rsakit::IoError& e) {
    return fail_io(e.what());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RSA file encryption toolkit"};
  app.require_subcommand(1);
  bool timing = true;
  app.add_flag("--time,!--no-time", timing,
               "print one '<phase> <seconds>' line per phase (default on)");

  KeygenArgs kg;
  CLI::App* keygen = app.add_subcommand("keygen", "generate an RSA key pair");
  keygen->add_option("--bits", kg.bits, "modulus size in bits (minimum 24)")
      ->required();
  keygen->add_option("--rounds", kg.rounds, "Miller-Rabin rounds per candidate")
      ->check(CLI::PositiveNumber);
  keygen->add_option("--seed", kg.seed,
                     "seed for the deterministic generator (default: clock)");
  keygen->add_option("--rng", kg.rng, "random source (default lcg)")
      ->check(CLI::IsMember({"lcg", "os"}));
  keygen->add_flag("--paper-rounds", kg.paper_rounds,
                   "test each t-bit candidate t times instead of --rounds");
  keygen->add_option("--out", kg.out_prefix,
                     "key file prefix; writes PREFIX.pub and PREFIX.prv")
      ->required();

  CryptArgs enc;
  CLI::App* encrypt = app.add_subcommand("encrypt", "encrypt a file");
  encrypt->add_option("--key", enc.key_path, "public key file")->required();
  encrypt->add_option("--in", enc.in_path, "plaintext input file")->required();
  encrypt->add_option("--out", enc.out_path, "ciphertext output file")
      ->required();

  CryptArgs dec;
  CLI::App* decrypt = app.add_subcommand("decrypt", "decrypt a file");
  decrypt->add_option("--key", dec.key_path, "private key file")->required();
  decrypt->add_option("--in", dec.in_path, "ciphertext input file")->required();
  decrypt->add_option("--out", dec.out_path, "plaintext output file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (keygen->parsed()) {
      return run_keygen(kg, timing);
    }
    if (encrypt->parsed()) {
      return run_encrypt(enc, timing);
    }
    return run_decrypt(dec, timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
