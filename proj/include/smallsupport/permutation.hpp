#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "smallsupport/factored_integer.hpp"

namespace smallsupport {

using Point = std::uint32_t;

class CycleStructure;

/// A bijection on {0..n-1}, stored as its image table. Immutable after
/// construction; sized for n up to 10^6.
class Permutation {
 public:
  // Validates that `images` is a bijection; throws InputError naming the
  // duplicated and missing value otherwise.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  Point apply(Point x) const { return images_[x]; }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(Trusted, std::vector<Point> images) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation power(const CycleStructure&, const FactoredInteger&);
  friend class CycleStructure;

  std::vector<Point> images_;
};

// (f * g)(x) = f(g(x))
Permutation compose(const Permutation& f, const Permutation& g);

/// The disjoint cycles of a permutation, fixed points included as 1-cycles.
/// Cycles are listed in increasing order of their smallest element, and each
/// cycle's point list starts at that element and follows the images.
class CycleStructure {
 public:
  struct Cycle {
    Point representative;
    std::vector<Point> points;

    std::size_t length() const { return points.size(); }
  };

  std::size_t n() const { return point_to_cycle_.size(); }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  std::size_t cycle_index_of(Point x) const { return point_to_cycle_[x]; }
  const Cycle& cycle_through(Point x) const { return cycles_[point_to_cycle_[x]]; }
  std::size_t cycle_length_through(Point x) const { return cycle_through(x).length(); }

  // length -> number of points lying in cycles of that length
  std::map<std::uint64_t, std::uint64_t> points_per_length() const;

  // Rebuilds the permutation these cycles decompose.
  Permutation to_permutation() const;

 private:
  friend CycleStructure cycle_decomposition(const Permutation&);

  std::vector<Cycle> cycles_;
  std::vector<std::uint32_t> point_to_cycle_;
};

CycleStructure cycle_decomposition(const Permutation& pi);

// Order of the permutation: lcm of all cycle lengths, in factored form.
// Identity (all fixed points) yields 1, the empty factorization.
FactoredInteger order_factored(const CycleStructure& cs);

FactoredInteger permutation_order(const Permutation& pi);

// The moved points, ascending.
std::vector<Point> support(const Permutation& pi);

std::size_t support_size(const Permutation& pi);

// pi^m for a factored exponent m >= 1. Each point in a cycle of length L
// advances by m mod L positions; m mod L comes from modular exponentiation
// over the factorization, so m may be astronomically large.
Permutation power(const CycleStructure& cs, const FactoredInteger& exponent);
Permutation power(const Permutation& pi, const FactoredInteger& exponent);

// n(q): total number of points lying in cycles whose length q divides.
std::uint64_t points_in_cycles_divisible_by(const CycleStructure& cs, std::uint64_t q);

// Multiset of cycle lengths, ascending.
std::vector<std::size_t> cycle_type(const Permutation& pi);

std::size_t fixed_point_count(const Permutation& pi);

}  // namespace smallsupport
