#include "smallsupport/permutation.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "smallsupport/errors.hpp"
#include "smallsupport/prime_sieve.hpp"

namespace smallsupport {

namespace {

void validate_bijection(const std::vector<Point>& images) {
  const std::size_t n = images.size();
  if (n == 0) throw InputError("permutation must act on at least one point");
  std::vector<bool> seen(n, false);
  for (Point v : images) {
    if (v >= n) {
      throw InputError("image value " + std::to_string(v) + " out of range [0, " +
                       std::to_string(n) + ")");
    }
    if (seen[v]) {
      Point missing = 0;
      for (Point u = 0; u < n; ++u) {
        if (!seen[u] && u != v) {
          missing = u;
          break;
        }
      }
      throw InputError("images are not a bijection: value " + std::to_string(v) +
                       " appears more than once, value " + std::to_string(missing) +
                       " never");
    }
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  validate_bijection(images_);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  return Permutation(Trusted{}, std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Point>(i);
  }
  return Permutation(Trusted{}, std::move(inv));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) {
    throw SizeMismatchError("cannot compose permutations of different degrees");
  }
  std::vector<Point> images(f.size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[x] = f.apply(g.apply(static_cast<Point>(x)));
  }
  return Permutation(Permutation::Trusted{}, std::move(images));
}

std::map<std::uint64_t, std::uint64_t> CycleStructure::points_per_length() const {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const Cycle& c : cycles_) out[c.length()] += c.length();
  return out;
}

Permutation CycleStructure::to_permutation() const {
  std::vector<Point> images(n());
  for (const Cycle& c : cycles_) {
    for (std::size_t j = 0; j < c.points.size(); ++j) {
      images[c.points[j]] = c.points[(j + 1) % c.points.size()];
    }
  }
  return Permutation(Permutation::Trusted{}, std::move(images));
}

CycleStructure cycle_decomposition(const Permutation& pi) {
  const std::size_t n = pi.size();
  CycleStructure cs;
  cs.point_to_cycle_.assign(n, 0);
  std::vector<bool> visited(n, false);
  for (Point start = 0; start < n; ++start) {
    if (visited[start]) continue;
    CycleStructure::Cycle cycle;
    cycle.representative = start;
    Point x = start;
    do {
      visited[x] = true;
      cs.point_to_cycle_[x] = static_cast<std::uint32_t>(cs.cycles_.size());
      cycle.points.push_back(x);
      x = pi.apply(x);
    } while (x != start);
    cs.cycles_.push_back(std::move(cycle));
  }
  return cs;
}

FactoredInteger order_factored(const CycleStructure& cs) {
  std::uint64_t max_len = 1;
  for (const auto& c : cs.cycles()) max_len = std::max<std::uint64_t>(max_len, c.length());
  // All cycle lengths are <= n, so one sieve covers every factorization.
  SmallestFactorSieve sieve(max_len);
  FactoredInteger order;
  std::map<std::uint64_t, std::uint64_t> seen = cs.points_per_length();
  for (const auto& [len, _] : seen) {
    FactoredInteger f;
    for (const auto& [p, e] : sieve.factor(len)) f.multiply_by(p, e);
    order.lcm_with(f);
  }
  return order;
}

FactoredInteger permutation_order(const Permutation& pi) {
  return order_factored(cycle_decomposition(pi));
}

std::vector<Point> support(const Permutation& pi) {
  std::vector<Point> out;
  for (Point x = 0; x < pi.size(); ++x) {
    if (pi.apply(x) != x) out.push_back(x);
  }
  return out;
}

std::size_t support_size(const Permutation& pi) {
  std::size_t count = 0;
  for (Point x = 0; x < pi.size(); ++x) {
    if (pi.apply(x) != x) ++count;
  }
  return count;
}

Permutation power(const CycleStructure& cs, const FactoredInteger& exponent) {
  std::vector<Point> images(cs.n());
  // m mod L depends only on L; cache per distinct length.
  std::unordered_map<std::uint64_t, std::uint64_t> shift_of_length;
  for (const auto& c : cs.cycles()) {
    const std::uint64_t len = c.length();
    auto it = shift_of_length.find(len);
    if (it == shift_of_length.end()) {
      it = shift_of_length.emplace(len, exponent.mod(len)).first;
    }
    const std::uint64_t shift = it->second;
    const std::size_t L = c.points.size();
    for (std::size_t j = 0; j < L; ++j) {
      images[c.points[j]] = c.points[(j + shift) % L];
    }
  }
  return Permutation(Permutation::Trusted{}, std::move(images));
}

Permutation power(const Permutation& pi, const FactoredInteger& exponent) {
  return power(cycle_decomposition(pi), exponent);
}

std::uint64_t points_in_cycles_divisible_by(const CycleStructure& cs, std::uint64_t q) {
  if (q == 0) throw std::invalid_argument("q must be positive");
  std::uint64_t count = 0;
  for (const auto& c : cs.cycles()) {
    if (c.length() % q == 0) count += c.length();
  }
  return count;
}

std::vector<std::size_t> cycle_type(const Permutation& pi) {
  const CycleStructure cs = cycle_decomposition(pi);
  std::vector<std::size_t> lengths;
  lengths.reserve(cs.cycles().size());
  for (const auto& c : cs.cycles()) lengths.push_back(c.length());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::size_t fixed_point_count(const Permutation& pi) {
  return pi.size() - support_size(pi);
}

}  // namespace smallsupport
