#include "sdree/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

namespace sdree {

namespace {

// Upper bound on the n-th prime: n (ln n + ln ln n) for n >= 6
// (Rosser-Schoenfeld). Small n handled by a constant.
std::uint64_t nth_prime_bound(std::uint64_t n) {
  if (n < 6) {
    return 13;
  }
  const double nd = static_cast<double>(n);
  const double bound = nd * (std::log(nd) + std::log(std::log(nd)));
  return static_cast<std::uint64_t>(bound) + 16;
}

// Growable prime table fed by a segmented sieve. Extending sieves only the
// interval not yet covered, so repeated lookups cost one binary search plus
// whatever new range they force. Guarded by a mutex: callers observe a pure
// function.
class PrimeCache {
 public:
  std::uint64_t nth(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (primes_.size() < n) {
      extend(n);
    }
    return primes_[n - 1];
  }

 private:
  void extend(std::uint64_t target_count) {
    const std::uint64_t limit =
        std::max(nth_prime_bound(target_count), sieved_to_ * 2);

    // Base primes up to sqrt(limit) via a plain sieve; the range is tiny
    // (sqrt of ~1.9e8 at the index cap).
    const std::uint64_t root =
        static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<char> small(root + 1, 1);
    std::vector<std::uint64_t> base;
    for (std::uint64_t p = 2; p <= root; ++p) {
      if (!small[p]) {
        continue;
      }
      base.push_back(p);
      for (std::uint64_t m = p * p; m <= root; m += p) {
        small[m] = 0;
      }
    }

    constexpr std::uint64_t kSegment = 1 << 18;
    std::vector<char> segment(kSegment);
    for (std::uint64_t low = sieved_to_ + 1; low <= limit; low += kSegment) {
      const std::uint64_t high = std::min(low + kSegment - 1, limit);
      const std::size_t width = static_cast<std::size_t>(high - low + 1);
      std::fill(segment.begin(), segment.begin() + width, char(1));
      for (const std::uint64_t p : base) {
        if (p * p > high) {
          break;
        }
        std::uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
        for (std::uint64_t m = start; m <= high; m += p) {
          segment[m - low] = 0;
        }
      }
      for (std::uint64_t v = std::max<std::uint64_t>(low, 2); v <= high; ++v) {
        if (segment[v - low]) {
          primes_.push_back(static_cast<std::uint32_t>(v));
        }
      }
    }
    sieved_to_ = limit;
  }

  std::mutex mutex_;
  std::vector<std::uint32_t> primes_;  // fits: p_1e7 = 179424673 < 2^32
  std::uint64_t sieved_to_ = 1;        // every prime <= sieved_to_ collected
};

PrimeCache& prime_cache() {
  static PrimeCache cache;
  return cache;
}

}  // namespace

std::uint64_t nth_prime(std::uint64_t n) {
  if (n == 0 || n > kMaxPrimeIndex) {
    throw IndexOutOfRangeError("prime index " + std::to_string(n) +
                               " outside [1, " +
                               std::to_string(kMaxPrimeIndex) + "]");
  }
  return prime_cache().nth(n);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus) {
  const detail::MulMod mul(modulus);
  base %= modulus;
  std::uint64_t result = 1 % modulus;
  while (exponent != 0) {
    if (exponent & 1) {
      result = mul(result, base);
    }
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

CipherParams params_from_derivation(std::uint64_t code,
                                    std::uint64_t power_ex) {
  // Overflow-safe bound check before forming power_ex * code * 10.
  if (code == 0 || power_ex == 0 || code > kMaxPrimeIndex ||
      power_ex > kMaxPrimeIndex || code * power_ex > kMaxPrimeIndex / 10) {
    throw IndexOutOfRangeError(
        "prime index power_ex*code*10 outside [1, " +
        std::to_string(kMaxPrimeIndex) + "] for code=" + std::to_string(code) +
        " power_ex=" + std::to_string(power_ex));
  }
  const std::uint64_t index = code * power_ex * 10;
  return CipherParams{code, power_ex, index, nth_prime(index)};
}

std::uint64_t shift_term_at(const CipherParams& params,
                            std::uint64_t position) {
  if (position == 0) {
    return 0;
  }
  return mod_pow(params.power_ex, position, params.modulus);
}

ShiftStream::ShiftStream(const CipherParams& params,
                         std::uint64_t start_position)
    : mul_(params.modulus),
      base_(params.power_ex % params.modulus),
      position_(start_position),
      current_(start_position >= 2 ? shift_term_at(params, start_position - 1)
                                   : 0) {}

}  // namespace sdree
