#pragma once

#include <cstdint>

#include "sdree/errors.hpp"

namespace sdree {

// Largest accepted prime index. Covers every parameter set reachable from an
// accepted key with ample margin; anything larger is rejected rather than
// sieved.
inline constexpr std::uint64_t kMaxPrimeIndex = 10'000'000;

// Operational key material for the cipher: the base shift `code`, the
// polynomial base `power_ex`, and the reduction modulus (the prime_index-th
// prime, prime_index = power_ex * code * 10). Build with
// params_from_derivation so the invariants hold.
struct CipherParams {
  std::uint64_t code = 0;
  std::uint64_t power_ex = 0;
  std::uint64_t prime_index = 0;
  std::uint64_t modulus = 0;
};

// n-th prime, 1-indexed: nth_prime(1) == 2. Throws IndexOutOfRangeError for
// n == 0 or n > kMaxPrimeIndex. Backed by a growable segmented sieve cache;
// thread-safe and externally pure.
std::uint64_t nth_prime(std::uint64_t n);

// base^exponent mod modulus by square-and-multiply; never materializes the
// power. Requires modulus >= 2.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus);

// Assemble CipherParams from derived (or explicitly supplied) code and
// power_ex. Throws IndexOutOfRangeError when the prime index would land
// outside [1, kMaxPrimeIndex].
CipherParams params_from_derivation(std::uint64_t code, std::uint64_t power_ex);

// Shift term at an arbitrary position: 0 at position 0, otherwise
// power_ex^position mod modulus. Random-access form used for seeking and for
// cross-checks against the incremental stream.
std::uint64_t shift_term_at(const CipherParams& params, std::uint64_t position);

namespace detail {

// Multiply-then-reduce with a fixed modulus. For moduli below 2^32 (always
// the case for params built by params_from_derivation) the reduction runs
// divisionless off a precomputed reciprocal; the per-byte cipher loop stays
// free of hardware divides. Operands must already be < modulus.
struct MulMod {
  std::uint64_t modulus;
  std::uint64_t reciprocal;  // ~floor(2^64 / modulus); 0 disables the fast path

  explicit MulMod(std::uint64_t m)
      : modulus(m), reciprocal(m < (1ull << 32) ? ~0ull / m : 0) {}

  std::uint64_t operator()(std::uint64_t a, std::uint64_t b) const {
    if (reciprocal != 0) {
      const std::uint64_t x = a * b;  // < modulus^2 < 2^64
      std::uint64_t q = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(x) * reciprocal) >> 64);
      std::uint64_t r = x - q * modulus;
      while (r >= modulus) r -= modulus;
      return r;
    }
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % modulus);
  }
};

}  // namespace detail

// Sequential generator of the per-position shift terms:
//
//   position 0      -> 0
//   position i >= 1 -> power_ex^i mod modulus
//
// Terms past the first are produced with one modular multiply each. A stream
// is single-consumer state; create one per concurrent job, seeded at any
// start position.
class ShiftStream {
 public:
  explicit ShiftStream(const CipherParams& params,
                       std::uint64_t start_position = 0);

  // Term at the current position; advances by one.
  std::uint64_t next() {
    std::uint64_t term;
    if (position_ >= 2) {
      term = current_ = mul_(current_, base_);
    } else if (position_ == 1) {
      term = current_ = base_;
    } else {
      term = 0;
    }
    ++position_;
    return term;
  }

  std::uint64_t position() const noexcept { return position_; }

 private:
  detail::MulMod mul_;
  std::uint64_t base_;      // power_ex reduced mod modulus
  std::uint64_t position_;  // next position to emit
  std::uint64_t current_;   // term emitted last (valid once position_ >= 2)
};

}  // namespace sdree
