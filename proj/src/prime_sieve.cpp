#include "smallsupport/prime_sieve.hpp"

#include <stdexcept>

namespace smallsupport {

SmallestFactorSieve::SmallestFactorSieve(std::uint64_t limit) {
  if (limit < 1) limit = 1;
  spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      for (std::uint64_t j = i; j <= limit; j += i) {
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
      }
    }
  }
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> SmallestFactorSieve::factor(
    std::uint64_t value) const {
  if (value >= spf_.size()) {
    throw std::out_of_range("value exceeds sieve limit");
  }
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  while (value > 1) {
    const std::uint64_t p = spf_[value];
    std::uint32_t e = 0;
    while (value % p == 0) {
      value /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_uint64(std::uint64_t value) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= value; p += (p == 2 ? 1 : 2)) {
    if (value % p == 0) {
      std::uint32_t e = 0;
      while (value % p == 0) {
        value /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (value > 1) out.emplace_back(value, 1);
  return out;
}

}  // namespace smallsupport
