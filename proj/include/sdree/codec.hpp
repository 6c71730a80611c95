#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdree/errors.hpp"

namespace sdree {

// Lowercase hex without separators.
std::string hex_encode(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> hex_decode(std::string_view text);

// Standard base64 alphabet with '=' padding.
std::string base64_encode(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> base64_decode(std::string_view text);

// Incremental decoders for streaming pipelines: feed() arbitrary slices of
// text, call finish() once at end of input. ASCII whitespace between symbols
// is skipped; anything else malformed throws CodecError.

class HexDecoder {
 public:
  void feed(std::string_view text, std::vector<std::uint8_t>& out);
  void finish();

 private:
  int pending_ = -1;  // high nibble awaiting its pair, -1 when none
};

class Base64Decoder {
 public:
  void feed(std::string_view text, std::vector<std::uint8_t>& out);
  void finish();

 private:
  std::array<std::uint8_t, 4> quad_{};
  int filled_ = 0;
  int pad_ = 0;              // '=' count in the current quad
  bool terminated_ = false;  // padding complete; only whitespace may follow
};

// Incremental base64 encoder (3-byte groups carried across chunks).
class Base64Encoder {
 public:
  void feed(std::span<const std::uint8_t> data, std::string& out);
  void finish(std::string& out);

 private:
  std::array<std::uint8_t, 3> group_{};
  int filled_ = 0;
};

}  // namespace sdree
