#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>

#include "sdree/errors.hpp"

namespace sdree {

// Checksums of long keys exceed any machine word (the position weight is
// 2^i), so the checksum is kept as an arbitrary-precision integer.
using BigUint = boost::multiprecision::cpp_int;

// Upper bound on accepted key length. Beyond this the checksum arithmetic
// still works but costs grow quadratically, so hostile inputs are cut off.
inline constexpr std::size_t kMaxKeyLength = 4096;

// Every intermediate of the key schedule:
//
//   csum        = sum over key bytes of key[i] * length * 2^i
//   pseudo_code = decimal digit sum of csum (single pass)
//   code        = pseudo_code mod 16, or pseudo_code itself when that is 0
//   temporary_power_ex = decimal digit sum of pseudo_code
//   power_ex    = temporary_power_ex mod code, replaced by code when the
//                 remainder is 0 or 1
//
// The full trace is retained so diagnostics and tests can check each stage.
struct KeyDerivationTrace {
  BigUint csum;
  std::uint64_t pseudo_code = 0;
  std::uint64_t temporary_power_ex = 0;
  std::uint64_t code = 0;
  std::uint64_t power_ex = 0;
};

// Weighted checksum of the key bytes. Exact integer arithmetic for any
// accepted length. Throws EmptyKeyError / KeyTooLongError.
BigUint weighted_checksum(std::span<const std::uint8_t> key);

// Sum of the base-10 digits of value. One pass; not iterated to a single
// digit.
std::uint64_t digit_sum(const BigUint& value);

// pseudo_code mod 16, falling back to pseudo_code itself when the remainder
// is 0. Throws DegenerateKeyError for pseudo_code == 0.
std::uint64_t derive_code(std::uint64_t pseudo_code);

// digit_sum(pseudo_code) mod code, with remainders 0 and 1 replaced by code.
// Note code == 1 therefore yields power_ex == 1, a degenerate keystream;
// callers that care should warn (the CLI does).
std::uint64_t derive_power_ex(std::uint64_t pseudo_code, std::uint64_t code);

// Full key schedule. Deterministic; pure function of the key bytes.
KeyDerivationTrace derive_key(std::span<const std::uint8_t> key);

}  // namespace sdree
