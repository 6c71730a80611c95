#include "sdree/codec.hpp"

namespace sdree {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

constexpr char kBase64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

int base64_value(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}

void emit_group(std::uint8_t a, std::uint8_t b, std::uint8_t c,
                std::string& out) {
  const std::uint32_t group = (static_cast<std::uint32_t>(a) << 16) |
                              (static_cast<std::uint32_t>(b) << 8) | c;
  out += kBase64Alphabet[(group >> 18) & 0x3F];
  out += kBase64Alphabet[(group >> 12) & 0x3F];
  out += kBase64Alphabet[(group >> 6) & 0x3F];
  out += kBase64Alphabet[group & 0x3F];
}

}  // namespace

std::string hex_encode(std::span<const std::uint8_t> data) {
  std::string out;
  out.reserve(data.size() * 2);
  for (const std::uint8_t byte : data) {
    out += kHexDigits[byte >> 4];
    out += kHexDigits[byte & 0xF];
  }
  return out;
}

void HexDecoder::feed(std::string_view text, std::vector<std::uint8_t>& out) {
  for (const char c : text) {
    if (is_space(c)) {
      continue;
    }
    const int value = hex_value(c);
    if (value < 0) {
      throw CodecError(std::string("invalid hex character '") + c + "'");
    }
    if (pending_ < 0) {
      pending_ = value;
    } else {
      out.push_back(static_cast<std::uint8_t>((pending_ << 4) | value));
      pending_ = -1;
    }
  }
}

void HexDecoder::finish() {
  if (pending_ >= 0) {
    throw CodecError("odd number of hex digits");
  }
}

std::vector<std::uint8_t> hex_decode(std::string_view text) {
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 2);
  HexDecoder decoder;
  decoder.feed(text, out);
  decoder.finish();
  return out;
}

void Base64Encoder::feed(std::span<const std::uint8_t> data,
                         std::string& out) {
  std::size_t i = 0;
  if (filled_ != 0) {
    while (filled_ < 3 && i < data.size()) {
      group_[static_cast<std::size_t>(filled_++)] = data[i++];
    }
    if (filled_ < 3) {
      return;
    }
    emit_group(group_[0], group_[1], group_[2], out);
    filled_ = 0;
  }
  for (; i + 3 <= data.size(); i += 3) {
    emit_group(data[i], data[i + 1], data[i + 2], out);
  }
  for (; i < data.size(); ++i) {
    group_[static_cast<std::size_t>(filled_++)] = data[i];
  }
}

void Base64Encoder::finish(std::string& out) {
  if (filled_ == 1) {
    const std::uint32_t group = static_cast<std::uint32_t>(group_[0]) << 16;
    out += kBase64Alphabet[(group >> 18) & 0x3F];
    out += kBase64Alphabet[(group >> 12) & 0x3F];
    out += "==";
  } else if (filled_ == 2) {
    const std::uint32_t group = (static_cast<std::uint32_t>(group_[0]) << 16) |
                                (static_cast<std::uint32_t>(group_[1]) << 8);
    out += kBase64Alphabet[(group >> 18) & 0x3F];
    out += kBase64Alphabet[(group >> 12) & 0x3F];
    out += kBase64Alphabet[(group >> 6) & 0x3F];
    out += '=';
  }
  filled_ = 0;
}

std::string base64_encode(std::span<const std::uint8_t> data) {
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  Base64Encoder encoder;
  encoder.feed(data, out);
  encoder.finish(out);
  return out;
}

void Base64Decoder::feed(std::string_view text,
                         std::vector<std::uint8_t>& out) {
  for (const char c : text) {
    if (is_space(c)) {
      continue;
    }
    if (terminated_) {
      throw CodecError("base64 data after padding");
    }
    if (c == '=') {
      // '=' may only occupy the last one or two slots of the final quad.
      if (filled_ + pad_ < 2) {
        throw CodecError("misplaced base64 padding");
      }
      ++pad_;
      if (filled_ + pad_ == 4) {
        if (pad_ == 2) {
          if ((quad_[1] & 0x0F) != 0) {
            throw CodecError("non-canonical base64 padding bits");
          }
          out.push_back(
              static_cast<std::uint8_t>((quad_[0] << 2) | (quad_[1] >> 4)));
        } else {
          if ((quad_[2] & 0x03) != 0) {
            throw CodecError("non-canonical base64 padding bits");
          }
          out.push_back(
              static_cast<std::uint8_t>((quad_[0] << 2) | (quad_[1] >> 4)));
          out.push_back(
              static_cast<std::uint8_t>((quad_[1] << 4) | (quad_[2] >> 2)));
        }
        filled_ = 0;
        pad_ = 0;
        terminated_ = true;
      }
      continue;
    }
    if (pad_ != 0) {
      throw CodecError("base64 data after padding");
    }
    const int value = base64_value(c);
    if (value < 0) {
      throw CodecError(std::string("invalid base64 character '") + c + "'");
    }
    quad_[static_cast<std::size_t>(filled_++)] =
        static_cast<std::uint8_t>(value);
    if (filled_ == 4) {
      out.push_back(
          static_cast<std::uint8_t>((quad_[0] << 2) | (quad_[1] >> 4)));
      out.push_back(
          static_cast<std::uint8_t>((quad_[1] << 4) | (quad_[2] >> 2)));
      out.push_back(static_cast<std::uint8_t>((quad_[2] << 6) | quad_[3]));
      filled_ = 0;
    }
  }
}

void Base64Decoder::finish() {
  if (filled_ != 0 || pad_ != 0) {
    throw CodecError("truncated base64 input");
  }
}

std::vector<std::uint8_t> base64_decode(std::string_view text) {
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  Base64Decoder decoder;
  decoder.feed(text, out);
  decoder.finish();
  return out;
}

}  // namespace sdree
