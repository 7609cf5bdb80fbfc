#include "smallsupport/steiner_design.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "smallsupport/errors.hpp"

namespace smallsupport {

namespace {

constexpr Point kUnset = std::numeric_limits<Point>::max();
constexpr std::uint32_t kNoLine = std::numeric_limits<std::uint32_t>::max();

}  // namespace

SteinerDesign SteinerDesign::validate(std::size_t n, std::size_t k,
                                      std::vector<std::vector<Point>> lines) {
  if (k < 3) throw InputError("line size must be at least 3, got " + std::to_string(k));
  if (n < k) throw InputError("point count smaller than line size");

  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto& line = lines[i];
    if (line.size() != k) {
      throw BadLineSizeError(i, "expected " + std::to_string(k) + " points, got " +
                                    std::to_string(line.size()));
    }
    for (Point p : line) {
      if (p >= n) {
        throw BadLineSizeError(i, "point " + std::to_string(p) + " out of range [0, " +
                                      std::to_string(n) + ")");
      }
    }
    std::sort(line.begin(), line.end());
    if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
      throw BadLineSizeError(i, "repeated point within line");
    }
  }
  std::sort(lines.begin(), lines.end());

  std::vector<std::uint32_t> pair_to_line(n * n, kNoLine);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        const Point x = lines[i][a], y = lines[i][b];
        if (pair_to_line[x * n + y] != kNoLine) {
          throw PairCoverageError(PairCoverageError::Kind::Twice, x, y);
        }
        pair_to_line[x * n + y] = static_cast<std::uint32_t>(i);
        pair_to_line[y * n + x] = static_cast<std::uint32_t>(i);
      }
    }
  }
  for (Point x = 0; x < n; ++x) {
    for (Point y = x + 1; y < n; ++y) {
      if (pair_to_line[x * n + y] == kNoLine) {
        throw PairCoverageError(PairCoverageError::Kind::Never, x, y);
      }
    }
  }

  SteinerDesign design;
  design.n_ = n;
  design.k_ = k;
  design.lines_ = std::move(lines);
  design.pair_to_line_ = std::move(pair_to_line);
  return design;
}

std::size_t SteinerDesign::line_through(Point a, Point b) const {
  if (a == b || a >= n_ || b >= n_) {
    throw std::invalid_argument("line_through requires two distinct points");
  }
  return pair_to_line_[a * n_ + b];
}

namespace {

// Point-image backtracking with line-constraint propagation. Whenever two
// points of a line have images, every further mapped point of that line must
// land on the image line; for triple systems the third point is forced.
class DesignAutomorphismSearch {
 public:
  explicit DesignAutomorphismSearch(const SteinerDesign& design)
      : design_(design),
        n_(static_cast<Point>(design.point_count())),
        img_(n_, kUnset),
        used_(n_, false) {
    line_masks_.reserve(design.lines().size());
    for (const auto& line : design.lines()) {
      std::uint32_t mask = 0;
      for (Point p : line) mask |= 1u << p;
      line_masks_.push_back(mask);
      mask_set_.insert(mask);
    }
  }

  std::vector<Permutation> run() {
    descend(0);
    std::sort(found_.begin(), found_.end(),
              [](const Permutation& a, const Permutation& b) {
                return a.images() < b.images();
              });
    return found_;
  }

 private:
  void descend(Point next) {
    while (next < n_ && img_[next] != kUnset) ++next;
    if (next == n_) {
      record();
      return;
    }
    for (Point v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::vector<Point> trail;
      if (assign(next, v, trail)) descend(next + 1);
      undo(trail);
    }
  }

  void record() {
    Permutation candidate{std::vector<Point>(img_.begin(), img_.end())};
    for (std::size_t i = 0; i < design_.lines().size(); ++i) {
      std::uint32_t image_mask = 0;
      for (Point p : design_.lines()[i]) image_mask |= 1u << candidate(p);
      if (!mask_set_.contains(image_mask)) return;
    }
    found_.push_back(std::move(candidate));
  }

  bool assign(Point p, Point v, std::vector<Point>& trail) {
    if (!set_image(p, v, trail)) return false;
    for (std::size_t qi = trail.size() - 1; qi < trail.size(); ++qi) {
      const Point a = trail[qi];
      for (Point b = 0; b < n_; ++b) {
        if (b == a || img_[b] == kUnset) continue;
        const auto& line = design_.lines()[design_.line_through(a, b)];
        const std::size_t image_line = design_.line_through(img_[a], img_[b]);
        const std::uint32_t image_mask = line_masks_[image_line];
        if (design_.line_size() == 3) {
          Point third = kUnset;
          for (Point r : line) {
            if (r != a && r != b) third = r;
          }
          const std::uint32_t forced_bits =
              image_mask & ~(1u << img_[a]) & ~(1u << img_[b]);
          const Point forced = static_cast<Point>(std::countr_zero(forced_bits));
          if (img_[third] != kUnset) {
            if (img_[third] != forced) return false;
          } else if (!set_image(third, forced, trail)) {
            return false;
          }
        } else {
          for (Point r : line) {
            if (r == a || r == b || img_[r] == kUnset) continue;
            if (!(image_mask & (1u << img_[r]))) return false;
          }
        }
      }
    }
    return true;
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

  const SteinerDesign& design_;
  Point n_;
  std::vector<Point> img_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> line_masks_;
  std::set<std::uint32_t> mask_set_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> design_automorphisms(const SteinerDesign& design) {
  if (design.point_count() > 15) {
    throw TooLargeError("automorphism search limited to designs with at most 15 points");
  }
  return DesignAutomorphismSearch(design).run();
}

PropositionAReport check_proposition_a(const SteinerDesign& design) {
  PropositionAReport report;
  report.n = design.point_count();
  report.k = design.line_size();
  const auto autos = design_automorphisms(design);
  report.automorphism_count = autos.size();
  report.max_order = FactoredInteger::one();
  report.max_order_value = 1;
  const Permutation* extremal = nullptr;
  for (const Permutation& pi : autos) {
    const FactoredInteger order = permutation_order(pi);
    const std::uint64_t value = order.value().value();
    if (value > report.max_order_value) {
      report.max_order_value = value;
      report.max_order = order;
      extremal = &pi;
    }
  }
  const std::uint64_t n = report.n;
  report.n_squared = n * n;
  report.holds = report.max_order_value < report.n_squared;
  report.reference_exponent_bound =
      std::pow(static_cast<double>(n),
               1.0 + 1.0 / (static_cast<double>(report.k) - 2.0));
  if (extremal != nullptr) {
    report.witness = best_witness(*extremal);
  }
  return report;
}

}  // namespace smallsupport
