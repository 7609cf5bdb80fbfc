#include "smallsupport/latin_square.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "smallsupport/errors.hpp"

namespace smallsupport {

namespace {

constexpr Point kUnset = std::numeric_limits<Point>::max();

void check_axis_permutations(const std::vector<Point>& cells, std::size_t n) {
  std::vector<bool> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t c = 0; c < n; ++c) {
      const Point s = cells[r * n + c];
      if (seen[s]) throw NotLatinError(NotLatinError::Axis::Row, r, s);
      seen[s] = true;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t r = 0; r < n; ++r) {
      const Point s = cells[r * n + c];
      if (seen[s]) throw NotLatinError(NotLatinError::Axis::Column, c, s);
      seen[s] = true;
    }
  }
}

// row_pos[r][s] = the column holding symbol s in row r
std::vector<Point> row_positions(const LatinSquare& square) {
  const std::size_t n = square.order();
  std::vector<Point> pos(n * n);
  for (Point r = 0; r < n; ++r) {
    for (Point c = 0; c < n; ++c) pos[r * n + square.at(r, c)] = c;
  }
  return pos;
}

}  // namespace

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<Point>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("Latin square must have order at least 1");
  std::vector<Point> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw InputError("row " + std::to_string(r) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (Point v : rows[r]) {
      if (v >= n) {
        throw InputError("row " + std::to_string(r) + ": symbol " + std::to_string(v) +
                         " out of range [0, " + std::to_string(n) + ")");
      }
      cells.push_back(v);
    }
  }
  check_axis_permutations(cells, n);
  return LatinSquare(n, std::move(cells));
}

Autotopism::Autotopism(const LatinSquare& square, Permutation alpha_in, Permutation beta_in,
                       Permutation gamma_in)
    : alpha(std::move(alpha_in)), beta(std::move(beta_in)), gamma(std::move(gamma_in)) {
  if (!is_autotopism(square, alpha, beta, gamma)) {
    throw InputError("triple is not an autotopism of the square");
  }
}

FactoredInteger Autotopism::order() const {
  FactoredInteger out = permutation_order(alpha);
  out.lcm_with(permutation_order(beta));
  out.lcm_with(permutation_order(gamma));
  return out;
}

bool Autotopism::is_identity() const {
  return alpha.is_identity() && beta.is_identity() && gamma.is_identity();
}

bool is_automorphism(const LatinSquare& square, const Permutation& pi) {
  const std::size_t n = square.order();
  if (pi.size() != n) {
    throw SizeMismatchError("permutation degree does not match square order");
  }
  for (Point g = 0; g < n; ++g) {
    for (Point h = 0; h < n; ++h) {
      if (square.at(pi(g), pi(h)) != pi(square.at(g, h))) return false;
    }
  }
  return true;
}

bool is_autotopism(const LatinSquare& square, const Permutation& alpha,
                   const Permutation& beta, const Permutation& gamma) {
  const std::size_t n = square.order();
  if (alpha.size() != n || beta.size() != n || gamma.size() != n) {
    throw SizeMismatchError("permutation degrees do not match square order");
  }
  for (Point g = 0; g < n; ++g) {
    for (Point h = 0; h < n; ++h) {
      if (square.at(alpha(g), beta(h)) != gamma(square.at(g, h))) return false;
    }
  }
  return true;
}

std::vector<Point> fixed_point_subquasigroup(const LatinSquare& square,
                                             const Permutation& pi) {
  if (!is_automorphism(square, pi)) throw NotAutomorphismError();
  if (pi.is_identity()) throw IdentityInputError();

  const std::size_t n = square.order();
  std::vector<Point> fix;
  std::vector<bool> in_fix(n, false);
  for (Point x = 0; x < n; ++x) {
    if (pi(x) == x) {
      fix.push_back(x);
      in_fix[x] = true;
    }
  }

  for (Point g : fix) {
    for (Point h : fix) {
      if (!in_fix[square.at(g, h)]) {
        throw ClosureViolationError("fixed set not closed: " + std::to_string(g) + "*" +
                                    std::to_string(h) + " leaves the set");
      }
    }
  }
  // Unique solvability inside the fixed set: the global solution of a*x = b
  // (and y*a = b) must itself be fixed.
  const auto pos = row_positions(square);
  for (Point a : fix) {
    for (Point b : fix) {
      if (!in_fix[pos[a * n + b]]) {
        throw ClosureViolationError("a*x = b not solvable within the fixed set");
      }
      Point y = kUnset;
      for (Point r = 0; r < n; ++r) {
        if (square.at(r, a) == b) {
          y = r;
          break;
        }
      }
      if (!in_fix[y]) {
        throw ClosureViolationError("y*a = b not solvable within the fixed set");
      }
    }
  }
  if (2 * fix.size() > n) {
    throw ClosureViolationError("fixed set of a nonidentity automorphism exceeds n/2");
  }
  return fix;
}

namespace {

// Backtracking over partial images. Assigning images for g and h forces the
// image of g*h; forced assignments propagate through a worklist.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const LatinSquare& square)
      : square_(square),
        n_(static_cast<Point>(square.order())),
        img_(n_, kUnset),
        used_(n_, false) {}

  std::vector<Permutation> run() {
    descend();
    std::sort(found_.begin(), found_.end(),
              [](const Permutation& a, const Permutation& b) {
                return a.images() < b.images();
              });
    return found_;
  }

 private:
  void descend() {
    Point g = n_;
    for (Point i = 0; i < n_; ++i) {
      if (img_[i] == kUnset) {
        g = i;
        break;
      }
    }
    if (g == n_) {
      Permutation candidate{std::vector<Point>(img_.begin(), img_.end())};
      if (is_automorphism(square_, candidate)) found_.push_back(std::move(candidate));
      return;
    }
    for (Point v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::vector<Point> trail;
      if (assign(g, v, trail)) descend();
      undo(trail);
    }
  }

  bool assign(Point g, Point v, std::vector<Point>& trail) {
    if (!set_image(g, v, trail)) return false;
    for (std::size_t qi = trail.size() - 1; qi < trail.size(); ++qi) {
      const Point a = trail[qi];
      for (Point b = 0; b < n_; ++b) {
        if (img_[b] == kUnset) continue;
        if (!require(square_.at(a, b), square_.at(img_[a], img_[b]), trail)) return false;
        if (!require(square_.at(b, a), square_.at(img_[b], img_[a]), trail)) return false;
      }
    }
    return true;
  }

  bool require(Point product, Point image, std::vector<Point>& trail) {
    if (img_[product] != kUnset) return img_[product] == image;
    return set_image(product, image, trail);
  }

  bool set_image(Point p, Point v, std::vector<Point>& trail) {
    if (used_[v]) return false;
    img_[p] = v;
    used_[v] = true;
    trail.push_back(p);
    return true;
  }

  void undo(const std::vector<Point>& trail) {
    for (Point p : trail) {
      used_[img_[p]] = false;
      img_[p] = kUnset;
    }
  }

  const LatinSquare& square_;
  Point n_;
  std::vector<Point> img_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> automorphisms(const LatinSquare& square) {
  return AutomorphismSearch(square).run();
}

std::vector<Autotopism> autotopisms(const LatinSquare& square) {
  const std::size_t n = square.order();
  const auto pos = row_positions(square);
  std::vector<Autotopism> out;

  std::vector<Point> alpha(n);
  std::iota(alpha.begin(), alpha.end(), 0);
  std::vector<Point> beta(n), gamma(n);
  std::vector<bool> beta_used(n);
  do {
    for (Point b0 = 0; b0 < n; ++b0) {
      // Column 0 forces gamma completely: gamma(T[g][0]) = T[alpha g][b0].
      for (Point g = 0; g < n; ++g) gamma[square.at(g, 0)] = square.at(alpha[g], b0);
      std::fill(beta_used.begin(), beta_used.end(), false);
      beta[0] = b0;
      beta_used[b0] = true;
      bool ok = true;
      for (Point h = 1; h < n && ok; ++h) {
        // Row alpha[0] pins beta(h); the other rows must agree.
        const Point v = pos[alpha[0] * n + gamma[square.at(0, h)]];
        if (beta_used[v]) {
          ok = false;
          break;
        }
        for (Point g = 1; g < n; ++g) {
          if (square.at(alpha[g], v) != gamma[square.at(g, h)]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          beta[h] = v;
          beta_used[v] = true;
        }
      }
      if (ok) {
        out.emplace_back(square, Permutation(alpha), Permutation(beta), Permutation(gamma));
      }
    }
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return out;
}

AutomorphismBoundReport check_automorphism_bounds(const LatinSquare& square) {
  AutomorphismBoundReport report;
  report.n = square.order();
  const auto autos = automorphisms(square);
  report.automorphism_count = autos.size();
  report.max_order = FactoredInteger::one();
  report.max_order_value = 1;
  for (const Permutation& pi : autos) {
    const FactoredInteger order = permutation_order(pi);
    const std::uint64_t value = order.value().value();
    if (value > report.max_order_value) {
      report.max_order_value = value;
      report.max_order = order;
    }
  }
  const std::uint64_t n = report.n;
  report.quarter_bound = static_cast<double>(n * n) / 4.0;
  report.square_bound = n * n;
  report.quarter_ok = (n < 2) || (4 * report.max_order_value <= n * n);
  report.square_ok = report.max_order_value <= n * n;
  return report;
}

AutotopismBoundReport check_autotopism_bounds(const LatinSquare& square) {
  AutotopismBoundReport report;
  report.n = square.order();
  const std::uint64_t n = report.n;
  report.quarter_bound = static_cast<double>(n * n) / 4.0;
  report.four_n2_bound = 4 * n * n;
  report.max_order_value = 1;
  report.faithful_ok = true;
  report.mmm_ok = true;

  const auto tops = autotopisms(square);
  report.autotopism_count = tops.size();
  for (const Autotopism& t : tops) {
    const std::uint64_t order = t.order().value().value();
    report.max_order_value = std::max(report.max_order_value, order);

    if (t.alpha.is_identity() && t.beta.is_identity() && !t.gamma.is_identity()) {
      report.faithful_ok = false;
    }
    if (!t.is_identity()) {
      const std::size_t fa = fixed_point_count(t.alpha);
      const std::size_t fb = fixed_point_count(t.beta);
      if (fa >= 1 && fb >= 1) {
        const std::size_t fc = fixed_point_count(t.gamma);
        if (fa != fb || fb != fc || 2 * fa > n) report.mmm_ok = false;
      }
    }
  }
  report.quarter_ok = (n < 2) || (4 * report.max_order_value <= n * n);
  report.four_n2_ok = report.max_order_value <= report.four_n2_bound;
  return report;
}

namespace {

class SquareEnumerator {
 public:
  SquareEnumerator(std::size_t n, bool reduced,
                   const std::function<void(const std::vector<Point>&)>& visit)
      : n_(n), reduced_(reduced), visit_(visit), cells_(n * n, 0),
        row_mask_(n, 0), col_mask_(n, 0) {}

  void run() {
    if (reduced_) {
      for (std::size_t c = 0; c < n_; ++c) place(0, c, static_cast<Point>(c));
      for (std::size_t r = 1; r < n_; ++r) place(r, 0, static_cast<Point>(r));
    }
    fill(reduced_ ? first_free(0) : 0);
  }

 private:
  std::size_t first_free(std::size_t from) const {
    std::size_t idx = from;
    while (idx < n_ * n_ && is_fixed(idx)) ++idx;
    return idx;
  }

  bool is_fixed(std::size_t idx) const {
    if (!reduced_) return false;
    return idx / n_ == 0 || idx % n_ == 0;
  }

  void place(std::size_t r, std::size_t c, Point s) {
    cells_[r * n_ + c] = s;
    row_mask_[r] |= 1u << s;
    col_mask_[c] |= 1u << s;
  }

  void fill(std::size_t idx) {
    if (idx >= n_ * n_) {
      visit_(cells_);
      return;
    }
    const std::size_t r = idx / n_;
    const std::size_t c = idx % n_;
    const std::uint32_t taken = row_mask_[r] | col_mask_[c];
    const std::size_t next = first_free(idx + 1);
    for (Point s = 0; s < n_; ++s) {
      const std::uint32_t bit = 1u << s;
      if (taken & bit) continue;
      cells_[r * n_ + c] = s;
      row_mask_[r] |= bit;
      col_mask_[c] |= bit;
      fill(next);
      row_mask_[r] &= ~bit;
      col_mask_[c] &= ~bit;
    }
  }

  std::size_t n_;
  bool reduced_;
  const std::function<void(const std::vector<Point>&)>& visit_;
  std::vector<Point> cells_;
  std::vector<std::uint32_t> row_mask_;
  std::vector<std::uint32_t> col_mask_;
};

}  // namespace

void for_each_latin_square(std::size_t n, bool reduced,
                           const std::function<void(const LatinSquare&)>& visit) {
  if (n == 0) throw std::invalid_argument("order must be at least 1");
  if (n > 16) throw TooLargeError("Latin square enumeration limited to order 16");
  const std::function<void(const std::vector<Point>&)> emit =
      [&](const std::vector<Point>& cells) { visit(LatinSquare(n, cells)); };
  SquareEnumerator(n, reduced, emit).run();
}

std::uint64_t count_latin_squares(std::size_t n, bool reduced) {
  std::uint64_t count = 0;
  for_each_latin_square(n, reduced, [&](const LatinSquare&) { ++count; });
  return count;
}

std::uint64_t max_automorphism_order_all_squares(std::size_t n) {
  std::uint64_t best = 1;
  for_each_latin_square(n, false, [&](const LatinSquare& square) {
    for (const Permutation& pi : automorphisms(square)) {
      best = std::max(best, permutation_order(pi).value().value());
    }
  });
  return best;
}

std::uint64_t max_automorphism_order_via_autotopisms(std::size_t n) {
  std::uint64_t best = 1;
  for_each_latin_square(n, true, [&](const LatinSquare& square) {
    for (const Autotopism& t : autotopisms(square)) {
      // Only triples whose components share a cycle type diagonalize to an
      // automorphism of an isotopic square.
      const auto type = cycle_type(t.alpha);
      if (cycle_type(t.beta) != type || cycle_type(t.gamma) != type) continue;
      best = std::max(best, permutation_order(t.alpha).value().value());
    }
  });
  return best;
}

std::vector<FmaxEntry> f_max(std::size_t n_max, std::size_t limit) {
  if (n_max > limit) {
    throw TooLargeError("n_max " + std::to_string(n_max) +
                        " exceeds the enumeration ceiling " + std::to_string(limit));
  }
  std::vector<FmaxEntry> table;
  std::uint64_t running = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::uint64_t at_n =
        n <= 4 ? max_automorphism_order_all_squares(n)
               : max_automorphism_order_via_autotopisms(n);
    running = std::max(running, at_n);
    table.push_back({n, running, static_cast<double>(n * n) / 4.0});
  }
  return table;
}

LatinSquare sts_to_quasigroup(const SteinerDesign& design) {
  if (design.line_size() != 3) {
    throw NotStsError("conversion requires line size 3, got " +
                      std::to_string(design.line_size()));
  }
  const std::size_t n = design.point_count();
  std::vector<std::vector<Point>> rows(n, std::vector<Point>(n, 0));
  for (Point x = 0; x < n; ++x) rows[x][x] = x;
  for (const auto& line : design.lines()) {
    const Point a = line[0], b = line[1], c = line[2];
    rows[a][b] = c;
    rows[b][a] = c;
    rows[a][c] = b;
    rows[c][a] = b;
    rows[b][c] = a;
    rows[c][b] = a;
  }
  return LatinSquare::from_rows(rows);
}

}  // namespace smallsupport
