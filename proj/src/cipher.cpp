#include "sdree/cipher.hpp"

namespace sdree {

CipherStream::CipherStream(const CipherParams& params,
                           std::uint64_t start_position)
    : params_(params), shifts_(params, start_position) {}

void CipherStream::encrypt(std::span<std::uint8_t> data) {
  const std::uint64_t code = params_.code;
  for (std::uint8_t& byte : data) {
    byte = static_cast<std::uint8_t>((byte + code + shifts_.next()) & 0xFF);
  }
}

void CipherStream::decrypt(std::span<std::uint8_t> data) {
  const std::uint64_t code = params_.code;
  for (std::uint8_t& byte : data) {
    // Canonical non-negative residue: shift is reduced mod 256 first, then
    // subtracted with a +256 bias.
    const std::uint64_t shift = (code + shifts_.next()) & 0xFF;
    byte = static_cast<std::uint8_t>((byte + 256 - shift) & 0xFF);
  }
}

std::vector<std::uint8_t> encrypt(const CipherParams& params,
                                  std::span<const std::uint8_t> plaintext) {
  std::vector<std::uint8_t> out(plaintext.begin(), plaintext.end());
  CipherStream(params).encrypt(out);
  return out;
}

std::vector<std::uint8_t> decrypt(const CipherParams& params,
                                  std::span<const std::uint8_t> ciphertext) {
  std::vector<std::uint8_t> out(ciphertext.begin(), ciphertext.end());
  CipherStream(params).decrypt(out);
  return out;
}

CipherParams params_for_key(std::span<const std::uint8_t> key) {
  const KeyDerivationTrace trace = derive_key(key);
  return params_from_derivation(trace.code, trace.power_ex);
}

std::vector<std::uint8_t> encrypt_with_key(
    std::span<const std::uint8_t> key, std::span<const std::uint8_t> plaintext) {
  return encrypt(params_for_key(key), plaintext);
}

std::vector<std::uint8_t> decrypt_with_key(
    std::span<const std::uint8_t> key, std::span<const std::uint8_t> ciphertext) {
  return decrypt(params_for_key(key), ciphertext);
}

}  // namespace sdree
