#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdree/analysis.hpp"
#include "sdree/cipher.hpp"
#include "sdree/codec.hpp"
#include "sdree/keyderive.hpp"
#include "sdree/numtheory.hpp"

namespace {

// Exit codes: 0 success, 2 usage/validation, 3 I/O.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kChunkSize = 256 * 1024;

enum class Format { kRaw, kHex, kBase64 };

Format parse_format(const std::string& name) {
  if (name == "raw") return Format::kRaw;
  if (name == "hex") return Format::kHex;
  return Format::kBase64;
}

struct Cli {
  std::string key;
  bool key_env = false;
  std::string in_path = "-";
  std::string out_path = "-";
  std::string format = "raw";
  std::string report = "csv";
  std::uint64_t code = 0;
  std::uint64_t power_ex = 0;
  bool no_weak_key_warning = false;

  CLI::Option* key_opt = nullptr;
  CLI::Option* code_opt = nullptr;
  CLI::Option* power_ex_opt = nullptr;
};

void add_key_options(CLI::App& cmd, Cli& cli) {
  cli.key_opt = cmd.add_option(
      "--key", cli.key,
      "Key string; all bytes are used verbatim. Prefer --key-env so the key "
      "stays out of shell history.");
  cmd.add_flag("--key-env", cli.key_env,
               "Read the key from the SDREE_KEY environment variable");
  cmd.add_flag("--no-weak-key-warning", cli.no_weak_key_warning,
               "Suppress the weak-key diagnostic");
}

void add_io_options(CLI::App& cmd, Cli& cli) {
  cmd.add_option("--in", cli.in_path, "Input file, or '-' for stdin");
  cmd.add_option("--out", cli.out_path, "Output file, or '-' for stdout");
}

void add_param_overrides(CLI::App& cmd, Cli& cli) {
  cli.code_opt = cmd.add_option("--code", cli.code,
                                "Explicit code, bypassing key derivation")
                     ->check(CLI::PositiveNumber);
  cli.power_ex_opt = cmd.add_option("--power-ex", cli.power_ex,
                                    "Explicit power_ex, bypassing key "
                                    "derivation")
                         ->check(CLI::PositiveNumber);
}

std::optional<std::vector<std::uint8_t>> resolve_key(const Cli& cli) {
  if (cli.key_opt != nullptr && cli.key_opt->count() > 0) {
    return std::vector<std::uint8_t>(cli.key.begin(), cli.key.end());
  }
  if (cli.key_env) {
    const char* value = std::getenv("SDREE_KEY");
    if (value == nullptr) {
      throw UsageError("--key-env given but SDREE_KEY is not set");
    }
    const std::string_view view(value);
    return std::vector<std::uint8_t>(view.begin(), view.end());
  }
  return std::nullopt;
}

void maybe_warn_weak_key(std::uint64_t power_ex, const Cli& cli) {
  if (power_ex == 1 && !cli.no_weak_key_warning) {
    std::cerr << "warning: weak key: power_ex = 1 degenerates the keystream "
                 "to a constant shift from position 1 onward\n";
  }
}

// Overrides win over a key when both are supplied; a lone override is a
// usage error.
sdree::CipherParams resolve_params(const Cli& cli) {
  const bool has_code = cli.code_opt->count() > 0;
  const bool has_power_ex = cli.power_ex_opt->count() > 0;
  if (has_code != has_power_ex) {
    throw UsageError("--code and --power-ex must be given together");
  }
  if (has_code) {
    const auto params = sdree::params_from_derivation(cli.code, cli.power_ex);
    maybe_warn_weak_key(params.power_ex, cli);
    return params;
  }
  const auto key = resolve_key(cli);
  if (!key) {
    throw UsageError(
        "a key (--key or --key-env) or both --code and --power-ex are "
        "required");
  }
  const auto trace = sdree::derive_key(*key);
  maybe_warn_weak_key(trace.power_ex, cli);
  return sdree::params_from_derivation(trace.code, trace.power_ex);
}

class Input {
 public:
  explicit Input(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw IoError("cannot open input file: " + path);
      }
      stream_ = &file_;
    } else {
      stream_ = &std::cin;
    }
  }

  // Reads up to buffer.size() bytes; returns 0 at end of input.
  std::size_t read(std::span<std::uint8_t> buffer) {
    stream_->read(reinterpret_cast<char*>(buffer.data()),
                  static_cast<std::streamsize>(buffer.size()));
    if (stream_->bad()) {
      throw IoError("read failure");
    }
    return static_cast<std::size_t>(stream_->gcount());
  }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) {
        throw IoError("cannot open output file: " + path);
      }
      stream_ = &file_;
    } else {
      stream_ = &std::cout;
    }
  }

  void write(std::span<const std::uint8_t> data) {
    stream_->write(reinterpret_cast<const char*>(data.data()),
                   static_cast<std::streamsize>(data.size()));
    check();
  }

  void write(std::string_view text) {
    stream_->write(text.data(), static_cast<std::streamsize>(text.size()));
    check();
  }

  void close() {
    stream_->flush();
    check();
    if (file_.is_open()) {
      file_.close();
      if (!file_) {
        throw IoError("write failure on close");
      }
    }
  }

 private:
  void check() {
    if (!*stream_) {
      throw IoError("write failure");
    }
  }

  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

int cmd_derive(const Cli& cli) {
  const auto key = resolve_key(cli);
  if (!key) {
    throw UsageError("derive needs --key or --key-env");
  }
  const auto trace = sdree::derive_key(*key);
  const auto params = sdree::params_from_derivation(trace.code, trace.power_ex);
  maybe_warn_weak_key(trace.power_ex, cli);
  std::cout << "csum: " << trace.csum << "\n"
            << "pseudo_code: " << trace.pseudo_code << "\n"
            << "temporary_power_ex: " << trace.temporary_power_ex << "\n"
            << "code: " << trace.code << "\n"
            << "power_ex: " << trace.power_ex << "\n"
            << "prime_index: " << params.prime_index << "\n"
            << "modulus: " << params.modulus << "\n";
  return 0;
}

int cmd_encrypt(const Cli& cli) {
  const auto params = resolve_params(cli);
  const Format format = parse_format(cli.format);
  Input in(cli.in_path);
  Output out(cli.out_path);

  sdree::CipherStream stream(params);
  sdree::Base64Encoder base64;
  std::vector<std::uint8_t> buffer(kChunkSize);
  std::string text;
  for (;;) {
    const std::size_t got = in.read(buffer);
    if (got == 0) {
      break;
    }
    const std::span<std::uint8_t> chunk(buffer.data(), got);
    stream.encrypt(chunk);
    switch (format) {
      case Format::kRaw:
        out.write(std::span<const std::uint8_t>(chunk));
        break;
      case Format::kHex:
        out.write(sdree::hex_encode(chunk));
        break;
      case Format::kBase64:
        text.clear();
        base64.feed(chunk, text);
        out.write(text);
        break;
    }
  }
  if (format == Format::kBase64) {
    text.clear();
    base64.finish(text);
    out.write(text);
  }
  out.close();
  return 0;
}

int cmd_decrypt(const Cli& cli) {
  const auto params = resolve_params(cli);
  const Format format = parse_format(cli.format);
  Input in(cli.in_path);
  Output out(cli.out_path);

  sdree::CipherStream stream(params);
  sdree::HexDecoder hex;
  sdree::Base64Decoder base64;
  std::vector<std::uint8_t> buffer(kChunkSize);
  std::vector<std::uint8_t> decoded;
  for (;;) {
    const std::size_t got = in.read(buffer);
    if (got == 0) {
      break;
    }
    const std::span<std::uint8_t> chunk(buffer.data(), got);
    switch (format) {
      case Format::kRaw:
        stream.decrypt(chunk);
        out.write(std::span<const std::uint8_t>(chunk));
        break;
      case Format::kHex:
      case Format::kBase64: {
        decoded.clear();
        const std::string_view view(reinterpret_cast<const char*>(chunk.data()),
                                    chunk.size());
        if (format == Format::kHex) {
          hex.feed(view, decoded);
        } else {
          base64.feed(view, decoded);
        }
        stream.decrypt(decoded);
        out.write(std::span<const std::uint8_t>(decoded));
        break;
      }
    }
  }
  if (format == Format::kHex) {
    hex.finish();
  } else if (format == Format::kBase64) {
    base64.finish();
  }
  out.close();
  return 0;
}

int cmd_analyze(const Cli& cli) {
  Input in(cli.in_path);
  Output out(cli.out_path);

  std::vector<std::uint8_t> data;
  std::vector<std::uint8_t> buffer(kChunkSize);
  for (;;) {
    const std::size_t got = in.read(buffer);
    if (got == 0) {
      break;
    }
    data.insert(data.end(), buffer.begin(),
                buffer.begin() + static_cast<std::ptrdiff_t>(got));
  }
  const auto report = sdree::analyze(data);
  out.write(sdree::render_report(report, cli.report == "csv"
                                             ? sdree::ReportFormat::kCsv
                                             : sdree::ReportFormat::kAsciiChart));
  out.close();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sdree: SD-REE position-dependent byte cipher and frequency-analysis "
      "tool.\n"
      "An educational classical cipher; not secure against modern attacks."};
  app.require_subcommand(1);

  Cli derive_cli, encrypt_cli, decrypt_cli, analyze_cli;

  CLI::App* derive =
      app.add_subcommand("derive", "Derive cipher parameters from a key and "
                                   "print every intermediate value");
  add_key_options(*derive, derive_cli);

  CLI::App* encrypt = app.add_subcommand("encrypt", "Encrypt a file or stdin");
  add_key_options(*encrypt, encrypt_cli);
  add_io_options(*encrypt, encrypt_cli);
  add_param_overrides(*encrypt, encrypt_cli);
  encrypt->add_option("--format", encrypt_cli.format,
                      "Ciphertext encoding on output")
      ->check(CLI::IsMember({"raw", "hex", "base64"}));

  CLI::App* decrypt = app.add_subcommand("decrypt", "Decrypt a file or stdin");
  add_key_options(*decrypt, decrypt_cli);
  add_io_options(*decrypt, decrypt_cli);
  add_param_overrides(*decrypt, decrypt_cli);
  decrypt->add_option("--format", decrypt_cli.format,
                      "Ciphertext encoding on input")
      ->check(CLI::IsMember({"raw", "hex", "base64"}));

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Byte-frequency histogram and repetition metrics "
                 "(index of coincidence is the plain 256-symbol form, "
                 "no x256 normalization)");
  add_io_options(*analyze, analyze_cli);
  analyze->add_option("--report", analyze_cli.report, "Report format")
      ->check(CLI::IsMember({"csv", "chart"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (derive->parsed()) return cmd_derive(derive_cli);
    if (encrypt->parsed()) return cmd_encrypt(encrypt_cli);
    if (decrypt->parsed()) return cmd_decrypt(decrypt_cli);
    if (analyze->parsed()) return cmd_analyze(analyze_cli);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sdree::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
