#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "smallsupport/factored_integer.hpp"
#include "smallsupport/lemma.hpp"
#include "smallsupport/permutation.hpp"

namespace smallsupport {

/// A 2-(n, k, 1) design: n points, lines of uniform size k >= 3, every pair
/// of distinct points on exactly one line. Lines are stored sorted, and the
/// line list is sorted lexicographically.
class SteinerDesign {
 public:
  // Validates uniform line size, range, and exact pair coverage.
  static SteinerDesign validate(std::size_t n, std::size_t k,
                                std::vector<std::vector<Point>> lines);

  std::size_t point_count() const { return n_; }
  std::size_t line_size() const { return k_; }
  const std::vector<std::vector<Point>>& lines() const { return lines_; }

  // Index of the unique line through two distinct points.
  std::size_t line_through(Point a, Point b) const;

 private:
  SteinerDesign() = default;

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<std::vector<Point>> lines_;
  std::vector<std::uint32_t> pair_to_line_;  // n*n lookup
};

// All point permutations mapping lines onto lines, in lexicographic order
// of image tables. Backtracking with line-constraint propagation; sized for
// small designs (n <= 15).
std::vector<Permutation> design_automorphisms(const SteinerDesign& design);

struct PropositionAReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t automorphism_count = 0;
  FactoredInteger max_order;
  std::uint64_t max_order_value = 0;
  std::uint64_t n_squared = 0;
  bool holds = false;                      // max order < n^2
  double reference_exponent_bound = 0.0;   // n^{1 + 1/(k-2)}, reported only
  std::optional<WitnessReport> witness;    // small-support witness of a
                                           // max-order element, when order > 1
};

// Maximum automorphism order versus the quadratic bound, plus the witness
// power of a maximal-order element.
PropositionAReport check_proposition_a(const SteinerDesign& design);

}  // namespace smallsupport
