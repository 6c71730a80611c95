#include "sdree/keyderive.hpp"

#include <string>

namespace sdree {

BigUint weighted_checksum(std::span<const std::uint8_t> key) {
  if (key.empty()) {
    throw EmptyKeyError("key must not be empty");
  }
  if (key.size() > kMaxKeyLength) {
    throw KeyTooLongError("key exceeds " + std::to_string(kMaxKeyLength) +
                          " bytes");
  }
  const BigUint length = key.size();
  BigUint weight = 1;  // 2^i
  BigUint csum = 0;
  for (const std::uint8_t byte : key) {
    csum += byte * length * weight;
    weight <<= 1;
  }
  return csum;
}

std::uint64_t digit_sum(const BigUint& value) {
  std::uint64_t sum = 0;
  for (const char digit : value.str()) {
    sum += static_cast<std::uint64_t>(digit - '0');
  }
  return sum;
}

std::uint64_t derive_code(std::uint64_t pseudo_code) {
  if (pseudo_code == 0) {
    throw DegenerateKeyError("pseudo_code is zero; no code can be derived");
  }
  const std::uint64_t code = pseudo_code % 16;
  return code != 0 ? code : pseudo_code;
}

std::uint64_t derive_power_ex(std::uint64_t pseudo_code, std::uint64_t code) {
  const std::uint64_t temporary = digit_sum(pseudo_code);
  const std::uint64_t power_ex = temporary % code;
  return (power_ex == 0 || power_ex == 1) ? code : power_ex;
}

KeyDerivationTrace derive_key(std::span<const std::uint8_t> key) {
  KeyDerivationTrace trace;
  trace.csum = weighted_checksum(key);
  trace.pseudo_code = digit_sum(trace.csum);
  trace.code = derive_code(trace.pseudo_code);
  trace.temporary_power_ex = digit_sum(trace.pseudo_code);
  trace.power_ex = derive_power_ex(trace.pseudo_code, trace.code);
  return trace;
}

}  // namespace sdree
