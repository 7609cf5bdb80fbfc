#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace smallsupport {

/// Smallest-prime-factor sieve. Factors any value up to its limit in
/// O(log value) divisions.
class SmallestFactorSieve {
 public:
  explicit SmallestFactorSieve(std::uint64_t limit);

  std::uint64_t limit() const { return spf_.size() - 1; }

  // prime -> exponent pairs, primes ascending
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factor(std::uint64_t value) const;

  bool is_prime(std::uint64_t value) const {
    return value >= 2 && spf_[value] == value;
  }

 private:
  std::vector<std::uint32_t> spf_;
};

// Trial-division factorization; no sieve required.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_uint64(std::uint64_t value);

}  // namespace smallsupport
