#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "smallsupport/errors.hpp"
#include "smallsupport/io.hpp"
#include "smallsupport/latin_square.hpp"
#include "smallsupport/steiner_design.hpp"

using namespace smallsupport;

namespace {

const std::string kDataDir = SMALLSUPPORT_DATA_DIR;

SteinerDesign fano() { return load_design(kDataDir + "/fano.design"); }

// All point permutations preserving the line set, tried one by one.
std::vector<std::vector<Point>> design_automorphisms_bruteforce(const SteinerDesign& d) {
  const std::size_t n = d.point_count();
  std::set<std::vector<Point>> line_set;
  for (const auto& line : d.lines()) line_set.insert(line);
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::vector<std::vector<Point>> found;
  do {
    bool ok = true;
    for (const auto& line : d.lines()) {
      std::vector<Point> mapped;
      for (Point p : line) mapped.push_back(img[p]);
      std::sort(mapped.begin(), mapped.end());
      if (!line_set.contains(mapped)) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return found;
}

}  // namespace

TEST_CASE("validate accepts the bundled designs") {
  CHECK(fano().lines().size() == 7);
  CHECK(load_design(kDataDir + "/ag23.design").lines().size() == 12);
  CHECK(load_design(kDataDir + "/sts13.design").lines().size() == 26);
  CHECK(load_design(kDataDir + "/sts15.design").lines().size() == 35);
}

TEST_CASE("pair coverage is equivalent to the line-count formula") {
  const SteinerDesign d = fano();
  const std::size_t n = d.point_count(), k = d.line_size();
  CHECK(d.lines().size() == n * (n - 1) / (k * (k - 1)));
  // and every pair is covered exactly once
  std::map<std::pair<Point, Point>, int> cover;
  for (const auto& line : d.lines()) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        ++cover[{line[a], line[b]}];
      }
    }
  }
  CHECK(cover.size() == n * (n - 1) / 2);
  for (const auto& [pair, count] : cover) CHECK(count == 1);
}

TEST_CASE("validate rejects a Fano plane with one line removed") {
  auto lines = fano().lines();
  lines.pop_back();
  CHECK_THROWS_AS(SteinerDesign::validate(7, 3, lines), PairCoverageError);
  try {
    SteinerDesign::validate(7, 3, lines);
  } catch (const PairCoverageError& e) {
    CHECK(e.kind() == PairCoverageError::Kind::Never);
  }
}

TEST_CASE("validate rejects duplicated coverage and bad line sizes") {
  auto lines = fano().lines();
  lines.push_back(lines.front());
  CHECK_THROWS_AS(SteinerDesign::validate(7, 3, lines), PairCoverageError);

  CHECK_THROWS_AS(SteinerDesign::validate(7, 3, {{0, 1}, {2, 3, 4}}), BadLineSizeError);
  CHECK_THROWS_AS(SteinerDesign::validate(7, 3, {{0, 1, 9}}), BadLineSizeError);
  CHECK_THROWS_AS(SteinerDesign::validate(7, 3, {{0, 1, 1}}), BadLineSizeError);
  CHECK_THROWS_AS(SteinerDesign::validate(7, 2, {{0, 1}}), InputError);
}

TEST_CASE("line_through finds the unique line of a pair") {
  const SteinerDesign d = fano();
  const auto& line = d.lines()[d.line_through(0, 1)];
  CHECK(std::find(line.begin(), line.end(), 3) != line.end());
}

TEST_CASE("single line on three points: every permutation is an automorphism") {
  const SteinerDesign d = SteinerDesign::validate(3, 3, {{0, 1, 2}});
  CHECK(design_automorphisms(d).size() == 6);
}

TEST_CASE("Fano automorphisms: 168, cross-checked against full brute force") {
  const SteinerDesign d = fano();
  const auto fast = design_automorphisms(d);
  CHECK(fast.size() == 168);
  const auto brute = design_automorphisms_bruteforce(d);
  REQUIRE(fast.size() == brute.size());
  for (std::size_t i = 0; i < fast.size(); ++i) {
    CHECK(fast[i].images() == brute[i]);
  }
}

TEST_CASE("design automorphisms form a group") {
  const auto autos = design_automorphisms(fano());
  std::set<std::vector<Point>> members;
  for (const auto& pi : autos) members.insert(pi.images());
  CHECK(members.contains(Permutation::identity(7).images()));
  for (const auto& a : autos) {
    CHECK(members.contains(a.inverse().images()));
  }
  // closure, sampled across the whole group
  for (std::size_t i = 0; i < autos.size(); i += 7) {
    for (std::size_t j = 0; j < autos.size(); j += 11) {
      CHECK(members.contains(compose(autos[i], autos[j]).images()));
    }
  }
}

TEST_CASE("proposition-a report for the Fano plane") {
  const auto report = check_proposition_a(fano());
  CHECK(report.n == 7);
  CHECK(report.automorphism_count == 168);
  CHECK(report.max_order_value == 7);
  CHECK(report.n_squared == 49);
  CHECK(report.holds);
  CHECK(report.reference_exponent_bound == doctest::Approx(49.0));
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->support_size == 7);
  CHECK(report.witness->exponent.is_one());  // m = N/7 = 1 for a 7-cycle
}

TEST_CASE("proposition-a report for AG(2,3)") {
  const auto report = check_proposition_a(load_design(kDataDir + "/ag23.design"));
  CHECK(report.n == 9);
  CHECK(report.automorphism_count == 432);
  CHECK(report.max_order_value < 81);
  CHECK(report.holds);
}

TEST_CASE("the cyclic shift is an order-13 automorphism of STS(13)") {
  const SteinerDesign d = load_design(kDataDir + "/sts13.design");
  std::vector<Point> img(13);
  for (Point x = 0; x < 13; ++x) img[x] = (x + 1) % 13;
  const Permutation shift(img);
  // shift preserves the line set
  std::set<std::vector<Point>> line_set;
  for (const auto& line : d.lines()) line_set.insert(line);
  for (const auto& line : d.lines()) {
    std::vector<Point> mapped;
    for (Point p : line) mapped.push_back(shift(p));
    std::sort(mapped.begin(), mapped.end());
    CHECK(line_set.contains(mapped));
  }
  CHECK(permutation_order(shift).value() == 13);
  const auto report = check_proposition_a(d);
  CHECK(report.max_order_value >= 13);
  CHECK(report.max_order_value < 169);
  CHECK(report.holds);
}

TEST_CASE("design files round-trip") {
  const SteinerDesign d = load_design(kDataDir + "/sts13.design");
  std::stringstream buffer;
  write_design(buffer, d);
  const SteinerDesign reloaded = read_design(buffer);
  CHECK(reloaded.point_count() == d.point_count());
  CHECK(reloaded.lines() == d.lines());
}

TEST_CASE("sts_to_quasigroup on the Fano plane") {
  const LatinSquare square = sts_to_quasigroup(fano());
  CHECK(square.order() == 7);
  CHECK(square.at(0, 1) == 3);  // the third point of the line {0, 1, 3}
  for (Point x = 0; x < 7; ++x) {
    CHECK(square.at(x, x) == x);
    for (Point y = 0; y < 7; ++y) {
      CHECK(square.at(x, y) == square.at(y, x));
    }
  }
}

TEST_CASE("sts_to_quasigroup output is idempotent and commutative for STS(9)") {
  const LatinSquare square =
      sts_to_quasigroup(load_design(kDataDir + "/ag23.design"));
  for (Point x = 0; x < 9; ++x) {
    CHECK(square.at(x, x) == x);
    for (Point y = 0; y < 9; ++y) CHECK(square.at(x, y) == square.at(y, x));
  }
}

TEST_CASE("sts_to_quasigroup rejects designs with k != 3") {
  // 2-(13,4,1) design: the projective plane of order 3
  // points 0..12, lines from the difference set {0,1,3,9} mod 13
  std::vector<std::vector<Point>> lines;
  for (Point s = 0; s < 13; ++s) {
    std::vector<Point> line{static_cast<Point>(s), static_cast<Point>((s + 1) % 13),
                            static_cast<Point>((s + 3) % 13),
                            static_cast<Point>((s + 9) % 13)};
    lines.push_back(line);
  }
  const SteinerDesign pg23 = SteinerDesign::validate(13, 4, lines);
  CHECK_THROWS_AS(sts_to_quasigroup(pg23), NotStsError);
}

TEST_CASE("design automorphisms equal quasigroup automorphisms for STS(7) and STS(9)") {
  for (const char* name : {"/fano.design", "/ag23.design"}) {
    const SteinerDesign d = load_design(kDataDir + name);
    const LatinSquare square = sts_to_quasigroup(d);
    const auto design_autos = design_automorphisms(d);
    const auto square_autos = automorphisms(square);
    REQUIRE(design_autos.size() == square_autos.size());
    for (std::size_t i = 0; i < design_autos.size(); ++i) {
      CHECK(design_autos[i].images() == square_autos[i].images());
    }
  }
}

TEST_CASE("every nonidentity design automorphism yields a valid witness") {
  const auto autos = design_automorphisms(fano());
  for (const auto& pi : autos) {
    if (pi.is_identity()) continue;
    const auto report = best_witness(pi);
    const auto witness = power(pi, report.exponent);
    CHECK(!witness.is_identity());
    CHECK(support_size(witness) == report.support_size);
  }
}

TEST_CASE("STS(15): the projective space design validates and has 20160 automorphisms") {
  const SteinerDesign d = load_design(kDataDir + "/sts15.design");
  CHECK(d.point_count() == 15);
  const auto autos = design_automorphisms(d);
  CHECK(autos.size() == 20160);
  const auto report = check_proposition_a(d);
  CHECK(report.max_order_value < 225);
  CHECK(report.holds);
  // the converted square carries exactly the same group
  const auto square_autos = automorphisms(sts_to_quasigroup(d));
  REQUIRE(square_autos.size() == autos.size());
  for (std::size_t i = 0; i < autos.size(); i += 503) {
    CHECK(square_autos[i].images() == autos[i].images());
  }
}
