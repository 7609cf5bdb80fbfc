#include "smallsupport/factored_integer.hpp"

#include <cmath>
#include <stdexcept>

#include "smallsupport/prime_sieve.hpp"

namespace smallsupport {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  std::uint64_t result = 1;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

FactoredInteger FactoredInteger::from_value(std::uint64_t value) {
  if (value == 0) throw std::invalid_argument("0 has no prime factorization");
  FactoredInteger out;
  for (const auto& [p, e] : factor_uint64(value)) out.factors_[p] = e;
  return out;
}

FactoredInteger FactoredInteger::from_factors(std::map<std::uint64_t, std::uint32_t> factors) {
  FactoredInteger out;
  for (const auto& [p, e] : factors) {
    if (e > 0) out.factors_[p] = e;
  }
  return out;
}

std::uint32_t FactoredInteger::exponent_of(std::uint64_t prime) const {
  auto it = factors_.find(prime);
  return it == factors_.end() ? 0 : it->second;
}

void FactoredInteger::lcm_with(const FactoredInteger& other) {
  for (const auto& [p, e] : other.factors_) {
    auto& mine = factors_[p];
    if (e > mine) mine = e;
  }
}

void FactoredInteger::multiply_by(std::uint64_t prime, std::uint32_t exponent) {
  if (exponent > 0) factors_[prime] += exponent;
}

FactoredInteger FactoredInteger::with_prime_reduced(std::uint64_t prime) const {
  auto it = factors_.find(prime);
  if (it == factors_.end()) {
    throw std::invalid_argument("prime not present in factorization");
  }
  FactoredInteger out = *this;
  if (it->second == 1) {
    out.factors_.erase(prime);
  } else {
    --out.factors_[prime];
  }
  return out;
}

std::uint64_t FactoredInteger::mod(std::uint64_t modulus) const {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  if (modulus == 1) return 0;
  std::uint64_t result = 1 % modulus;
  for (const auto& [p, e] : factors_) {
    result = mul_mod(result, pow_mod(p, e, modulus), modulus);
  }
  return result;
}

bool FactoredInteger::divides(const FactoredInteger& other) const {
  for (const auto& [p, e] : factors_) {
    if (other.exponent_of(p) < e) return false;
  }
  return true;
}

double FactoredInteger::log() const {
  double sum = 0.0;
  for (const auto& [p, e] : factors_) {
    sum += static_cast<double>(e) * std::log(static_cast<double>(p));
  }
  return sum;
}

std::optional<std::uint64_t> FactoredInteger::value() const {
  std::uint64_t out = 1;
  for (const auto& [p, e] : factors_) {
    for (std::uint32_t i = 0; i < e; ++i) {
      if (out > UINT64_MAX / p) return std::nullopt;
      out *= p;
    }
  }
  return out;
}

std::string FactoredInteger::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

}  // namespace smallsupport
