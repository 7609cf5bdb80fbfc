#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "smallsupport/factored_integer.hpp"
#include "smallsupport/permutation.hpp"

namespace smallsupport {

/// Result of the small-support witness extraction.
///
/// Write the order of pi as N = prod q_i with q_i = p_i^{b_i} the full
/// prime-power parts for distinct primes p_i. For each i, count(q_i) is the
/// number of points whose cycle length q_i divides. Reducing the exponent of
/// p_i by one gives the maximal divisor m = N/p_i, and pi^m moves exactly
/// count(q_i) points. Averaging shows some count(q_i) <= n/alpha whenever
/// N >= n^alpha, which is the bound this report certifies.
struct WitnessReport {
  std::size_t n = 0;
  FactoredInteger order;                      // N
  double alpha = 0.0;                         // hypothesis exponent used
  double bound = 0.0;                         // n / alpha
  std::uint64_t prime = 0;                    // chosen p_i
  std::uint64_t prime_power = 0;              // chosen q_i
  FactoredInteger exponent;                   // m = N / p_i
  std::uint64_t support_size = 0;             // count for the chosen i
  std::map<std::uint64_t, std::uint64_t> counts;  // q_i -> count
};

// Largest alpha for which the order hypothesis holds: log N / log n.
// Throws DegenerateDegreeError when n < 2, OrderOneError on the identity.
double max_alpha(const Permutation& pi);
double max_alpha(const CycleStructure& cs);

// Witness for a caller-supplied alpha. Requires order(pi) >= n^alpha up to
// a relative log-domain tolerance of 1e-9; throws HypothesisFailsError
// otherwise. Picks the i minimizing count(q_i), smallest prime on ties.
WitnessReport witness_power(const Permutation& pi, double alpha);
WitnessReport witness_power(const CycleStructure& cs, double alpha);

// Witness at alpha = max_alpha(pi): the unconditional minimizer over i.
// The resulting support size is the true minimum support over all
// nonidentity powers of pi (see min_support_bruteforce).
WitnessReport best_witness(const Permutation& pi);
WitnessReport best_witness(const CycleStructure& cs);

struct MinSupportResult {
  FactoredInteger exponent;
  std::uint64_t support_size = 0;
};

// Independent route to the same minimum: materialize pi^(N/p) for every
// prime p | N by actual powering and count moved points. Valid as a global
// minimum because supp(pi^m) depends only on gcd(m, N), so the minimum over
// all nonidentity powers is attained at a maximal divisor N/p. Ties break
// toward the smaller prime.
MinSupportResult min_support_bruteforce(const Permutation& pi);
MinSupportResult min_support_bruteforce(const CycleStructure& cs);

// Weighted average of the counts with weights log q_i; the averaging step
// of the support bound. Diagnostic only.
double weighted_average(const Permutation& pi);
double weighted_average(const CycleStructure& cs);

// Flat key=value rendering; the key set is frozen:
// n, order_factors, alpha, bound, prime, q, m_factors, support.
std::string to_kv(const WitnessReport& report);

}  // namespace smallsupport
