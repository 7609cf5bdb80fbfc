#include "smallsupport/lemma.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "smallsupport/errors.hpp"

namespace smallsupport {

namespace {

std::uint64_t prime_power_value(std::uint64_t p, std::uint32_t e) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  return q;
}

// count(q_i) for every i, over the distinct cycle lengths. Each q_i divides
// some cycle length, so q_i <= n and the values fit machine words.
std::map<std::uint64_t, std::uint64_t> witness_counts(
    const CycleStructure& cs, const FactoredInteger& order) {
  const auto per_length = cs.points_per_length();
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& [p, e] : order.factors()) {
    const std::uint64_t q = prime_power_value(p, e);
    std::uint64_t count = 0;
    for (const auto& [len, points] : per_length) {
      if (len % q == 0) count += points;
    }
    counts[q] = count;
  }
  return counts;
}

WitnessReport build_report(const CycleStructure& cs, const FactoredInteger& order,
                           double alpha) {
  WitnessReport report;
  report.n = cs.n();
  report.order = order;
  report.alpha = alpha;
  report.bound = static_cast<double>(cs.n()) / alpha;
  report.counts = witness_counts(cs, order);

  // Minimize over i; iterate primes ascending so ties pick the smallest prime.
  std::uint64_t best_count = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [p, e] : order.factors()) {
    const std::uint64_t q = prime_power_value(p, e);
    const std::uint64_t count = report.counts.at(q);
    if (count < best_count) {
      best_count = count;
      report.prime = p;
      report.prime_power = q;
    }
  }
  report.support_size = best_count;
  report.exponent = order.with_prime_reduced(report.prime);
  return report;
}

}  // namespace

double max_alpha(const CycleStructure& cs) {
  if (cs.n() < 2) throw DegenerateDegreeError();
  const FactoredInteger order = order_factored(cs);
  if (order.is_one()) throw OrderOneError();
  return order.log() / std::log(static_cast<double>(cs.n()));
}

double max_alpha(const Permutation& pi) { return max_alpha(cycle_decomposition(pi)); }

WitnessReport witness_power(const CycleStructure& cs, double alpha) {
  if (!(alpha > 0.0)) {
    throw HypothesisFailsError("alpha must be positive");
  }
  const FactoredInteger order = order_factored(cs);
  if (order.is_one()) throw OrderOneError();
  const double log_n = std::log(static_cast<double>(cs.n()));
  const double required = alpha * log_n;
  // N is exact but log is floating point; a relative epsilon keeps the
  // equality boundary (single n-cycle at alpha = 1) from being rejected.
  const double tolerance = 1e-9 * std::max(1.0, required);
  if (order.log() < required - tolerance) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "order hypothesis fails: log N = %.6f < alpha log n = %.6f",
                  order.log(), required);
    throw HypothesisFailsError(buf);
  }
  return build_report(cs, order, alpha);
}

WitnessReport witness_power(const Permutation& pi, double alpha) {
  return witness_power(cycle_decomposition(pi), alpha);
}

WitnessReport best_witness(const CycleStructure& cs) {
  return build_report(cs, order_factored(cs), max_alpha(cs));
}

WitnessReport best_witness(const Permutation& pi) {
  return best_witness(cycle_decomposition(pi));
}

MinSupportResult min_support_bruteforce(const CycleStructure& cs) {
  const FactoredInteger order = order_factored(cs);
  if (order.is_one()) throw OrderOneError();
  MinSupportResult best;
  best.support_size = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [p, e] : order.factors()) {
    const FactoredInteger m = order.with_prime_reduced(p);
    const std::uint64_t moved = support_size(power(cs, m));
    if (moved < best.support_size) {
      best.support_size = moved;
      best.exponent = m;
    }
  }
  return best;
}

MinSupportResult min_support_bruteforce(const Permutation& pi) {
  return min_support_bruteforce(cycle_decomposition(pi));
}

double weighted_average(const CycleStructure& cs) {
  const FactoredInteger order = order_factored(cs);
  if (order.is_one()) throw OrderOneError();
  const auto counts = witness_counts(cs, order);
  double numerator = 0.0;
  for (const auto& [q, count] : counts) {
    numerator += static_cast<double>(count) * std::log(static_cast<double>(q));
  }
  return numerator / order.log();
}

double weighted_average(const Permutation& pi) {
  return weighted_average(cycle_decomposition(pi));
}

std::string to_kv(const WitnessReport& report) {
  char num[64];
  std::string out;
  out += "n=" + std::to_string(report.n) + "\n";
  out += "order_factors=" + report.order.to_string() + "\n";
  std::snprintf(num, sizeof(num), "%.9g", report.alpha);
  out += std::string("alpha=") + num + "\n";
  std::snprintf(num, sizeof(num), "%.9g", report.bound);
  out += std::string("bound=") + num + "\n";
  out += "prime=" + std::to_string(report.prime) + "\n";
  out += "q=" + std::to_string(report.prime_power) + "\n";
  out += "m_factors=" + report.exponent.to_string() + "\n";
  out += "support=" + std::to_string(report.support_size) + "\n";
  return out;
}

}  // namespace smallsupport
