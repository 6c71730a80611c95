#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdree/keyderive.hpp"
#include "sdree/numtheory.hpp"

namespace sdree {

// Position-dependent additive byte transform:
//
//   encrypt: out[i] = (in[i] + code + t_i) mod 256
//   decrypt: out[i] = (in[i] - code - t_i) mod 256   (canonical residue)
//
// with t_0 = 0 and t_i = power_ex^i mod modulus for i >= 1. The stream form
// carries the global byte position across chunks, so arbitrarily large
// inputs can be processed in fixed-size pieces; seeding at a nonzero start
// position supports parallel range splitting.
class CipherStream {
 public:
  explicit CipherStream(const CipherParams& params,
                        std::uint64_t start_position = 0);

  void encrypt(std::span<std::uint8_t> data);  // in place
  void decrypt(std::span<std::uint8_t> data);  // in place

  std::uint64_t position() const noexcept { return shifts_.position(); }
  const CipherParams& params() const noexcept { return params_; }

 private:
  CipherParams params_;
  ShiftStream shifts_;
};

// One-shot transforms. Length-preserving; the input is not modified.
std::vector<std::uint8_t> encrypt(const CipherParams& params,
                                  std::span<const std::uint8_t> plaintext);
std::vector<std::uint8_t> decrypt(const CipherParams& params,
                                  std::span<const std::uint8_t> ciphertext);

// Key schedule and parameter assembly in one step.
CipherParams params_for_key(std::span<const std::uint8_t> key);

// Full pipeline: derive the key, build params, transform. Key errors
// propagate.
std::vector<std::uint8_t> encrypt_with_key(std::span<const std::uint8_t> key,
                                           std::span<const std::uint8_t> plaintext);
std::vector<std::uint8_t> decrypt_with_key(std::span<const std::uint8_t> key,
                                           std::span<const std::uint8_t> ciphertext);

}  // namespace sdree
