#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace smallsupport {

/// A positive integer held as its prime factorization. The represented value
/// is never materialized: least common multiples of cycle lengths overflow
/// 64 bits already around degree 90, and the orders handled here grow as
/// exp(sqrt(n ln n)).
///
/// The empty factorization is the integer 1.
class FactoredInteger {
 public:
  FactoredInteger() = default;

  static FactoredInteger one() { return FactoredInteger{}; }

  // Factorization by trial division. Intended for moderate values
  // (cycle lengths, test constants).
  static FactoredInteger from_value(std::uint64_t value);

  // Takes prime -> exponent pairs on faith; exponent 0 entries are dropped.
  static FactoredInteger from_factors(std::map<std::uint64_t, std::uint32_t> factors);

  bool is_one() const { return factors_.empty(); }

  const std::map<std::uint64_t, std::uint32_t>& factors() const { return factors_; }

  std::uint32_t exponent_of(std::uint64_t prime) const;

  // In-place lcm with another factored value: per-prime max of exponents.
  void lcm_with(const FactoredInteger& other);

  // Multiplies by prime^exponent.
  void multiply_by(std::uint64_t prime, std::uint32_t exponent);

  // Value with the exponent of `prime` lowered by one (the maximal divisor
  // N/p). The prime must be present.
  FactoredInteger with_prime_reduced(std::uint64_t prime) const;

  // The represented value modulo `modulus`, via modular exponentiation.
  // Never materializes the value itself.
  std::uint64_t mod(std::uint64_t modulus) const;

  bool divides(const FactoredInteger& other) const;

  // Natural logarithm, sum of exponent * log(prime).
  double log() const;

  // The value as a machine word, if it fits.
  std::optional<std::uint64_t> value() const;

  // "2^3 3 5" style rendering, primes ascending; "1" when empty.
  std::string to_string() const;

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  std::map<std::uint64_t, std::uint32_t> factors_;
};

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

}  // namespace smallsupport
