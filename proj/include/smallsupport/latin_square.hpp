#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "smallsupport/factored_integer.hpp"
#include "smallsupport/permutation.hpp"
#include "smallsupport/steiner_design.hpp"

namespace smallsupport {

/// An n-by-n table over {0..n-1} in which every row and every column is a
/// permutation; the multiplication table of a quasigroup.
class LatinSquare {
 public:
  // Validates the Latin property; throws NotLatinError naming the first
  // offending row or column and the repeated symbol.
  static LatinSquare from_rows(const std::vector<std::vector<Point>>& rows);

  std::size_t order() const { return n_; }

  // Product of row element g and column element h.
  Point at(Point g, Point h) const { return cells_[static_cast<std::size_t>(g) * n_ + h]; }

  const std::vector<Point>& cells() const { return cells_; }

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  LatinSquare(std::size_t n, std::vector<Point> cells)
      : n_(n), cells_(std::move(cells)) {}

  friend void for_each_latin_square(std::size_t, bool,
                                    const std::function<void(const LatinSquare&)>&);
  friend LatinSquare sts_to_quasigroup(const SteinerDesign&);

  std::size_t n_ = 0;
  std::vector<Point> cells_;
};

/// A triple (alpha, beta, gamma) with alpha(g) * beta(h) = gamma(g * h) for
/// all g, h. Checked against the square at construction. Automorphisms are
/// the diagonal case alpha = beta = gamma.
struct Autotopism {
  Autotopism(const LatinSquare& square, Permutation alpha_in, Permutation beta_in,
             Permutation gamma_in);

  Permutation alpha;
  Permutation beta;
  Permutation gamma;

  FactoredInteger order() const;  // lcm of the component orders
  bool is_identity() const;
};

bool is_automorphism(const LatinSquare& square, const Permutation& pi);

bool is_autotopism(const LatinSquare& square, const Permutation& alpha,
                   const Permutation& beta, const Permutation& gamma);

// Fixed points of a nonidentity automorphism. Verifies that the fixed set is
// closed under the product, is uniquely solvable within itself, and has size
// at most n/2; a failure of any of these would be a bug, reported as
// ClosureViolationError.
std::vector<Point> fixed_point_subquasigroup(const LatinSquare& square,
                                             const Permutation& pi);

// All automorphisms, by backtracking over partial images: assigning g and h
// forces the image of g*h. Lexicographic output order.
std::vector<Permutation> automorphisms(const LatinSquare& square);

// All autotopisms. For each alpha and each beta(0), the first column forces
// gamma everywhere, and every remaining beta value is a table lookup; the
// search is therefore alpha-major and prunes hard. Intended for order <= 6.
std::vector<Autotopism> autotopisms(const LatinSquare& square);

struct AutomorphismBoundReport {
  std::size_t n = 0;
  std::size_t automorphism_count = 0;
  FactoredInteger max_order;
  std::uint64_t max_order_value = 0;
  double quarter_bound = 0.0;   // n^2/4
  std::uint64_t square_bound = 0;  // n^2
  bool quarter_ok = false;      // max order <= n^2/4 (evaluated for n >= 2)
  bool square_ok = false;       // max order <= n^2
};

AutomorphismBoundReport check_automorphism_bounds(const LatinSquare& square);

struct AutotopismBoundReport {
  std::size_t n = 0;
  std::size_t autotopism_count = 0;
  std::uint64_t max_order_value = 0;
  double quarter_bound = 0.0;     // n^2/4
  std::uint64_t four_n2_bound = 0;  // 4 n^2
  bool quarter_ok = false;
  bool four_n2_ok = false;
  bool faithful_ok = false;  // alpha = beta = id forces gamma = id
  bool mmm_ok = false;       // equal fixed counts <= n/2 when both sides fix a point
};

AutotopismBoundReport check_autotopism_bounds(const LatinSquare& square);

// Enumerates Latin squares of the given order in lexicographic cell order.
// With `reduced`, the first row and first column are fixed to natural order.
void for_each_latin_square(std::size_t n, bool reduced,
                           const std::function<void(const LatinSquare&)>& visit);

std::uint64_t count_latin_squares(std::size_t n, bool reduced);

struct FmaxEntry {
  std::size_t n = 0;
  std::uint64_t f_value = 0;
  double quarter_bound = 0.0;
};

// f(n) for n = 1..n_max: the maximum automorphism order over all quasigroups
// of order <= n. Orders <= 4 are settled by direct enumeration of all
// squares. Orders 5 and 6 run over reduced squares only, maximizing instead
// over autotopisms whose three components share a cycle type: such a triple
// conjugates to a diagonal one on an isotopic square and vice versa, so the
// maximum is exact even though reduced squares miss most isomorphism classes.
std::vector<FmaxEntry> f_max(std::size_t n_max, std::size_t limit = 6);

// The two strategies behind f_max, exposed for cross-validation.
std::uint64_t max_automorphism_order_all_squares(std::size_t n);
std::uint64_t max_automorphism_order_via_autotopisms(std::size_t n);

// The quasigroup of a Steiner triple system: x*x = x, and x*y is the third
// point of the line through x and y. Output is idempotent, commutative, and
// Latin. Throws NotStsError unless the design has k = 3.
LatinSquare sts_to_quasigroup(const SteinerDesign& design);

}  // namespace smallsupport
