#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "smallsupport/errors.hpp"
#include "smallsupport/permutation.hpp"

using namespace smallsupport;

TEST_CASE("constructor rejects non-bijections with a diagnostic") {
  CHECK_THROWS_WITH_AS(Permutation({0, 0, 2}),
                       doctest::Contains("value 0 appears more than once"), InputError);
  CHECK_THROWS_WITH_AS(Permutation({0, 3, 1}), doctest::Contains("out of range"),
                       InputError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{}), InputError);
}

TEST_CASE("identity and inverse") {
  const Permutation id = Permutation::identity(5);
  CHECK(id.is_identity());
  const Permutation pi({1, 0, 3, 4, 2});
  CHECK(!pi.is_identity());
  CHECK(compose(pi, pi.inverse()) == Permutation::identity(5));
  CHECK(compose(pi.inverse(), pi) == Permutation::identity(5));
}

TEST_CASE("cycle decomposition: identity is all 1-cycles") {
  const auto cs = cycle_decomposition(Permutation::identity(5));
  REQUIRE(cs.cycles().size() == 5);
  for (const auto& c : cs.cycles()) CHECK(c.length() == 1);
}

TEST_CASE("cycle decomposition of (0 1)(2 3 4)") {
  const Permutation pi({1, 0, 3, 4, 2});
  const auto cs = cycle_decomposition(pi);
  REQUIRE(cs.cycles().size() == 2);
  CHECK(cs.cycles()[0].points == std::vector<Point>{0, 1});
  CHECK(cs.cycles()[1].points == std::vector<Point>{2, 3, 4});
  CHECK(cs.cycle_length_through(4) == 3);
  CHECK(cs.cycle_index_of(1) == 0);
}

TEST_CASE("decomposition round-trips through recomposition") {
  std::mt19937_64 rng(42);
  const auto pi = oracle::random_permutation(10000, rng);
  const auto cs = cycle_decomposition(pi);
  std::size_t total = 0;
  for (const auto& c : cs.cycles()) total += c.length();
  CHECK(total == pi.size());
  CHECK(cs.to_permutation() == pi);
}

TEST_CASE("order_factored on simple cycle types") {
  CHECK(order_factored(cycle_decomposition(oracle::permutation_with_cycles({2, 3, 5}, 10)))
            .to_string() == "2 3 5");
  CHECK(permutation_order(Permutation::identity(6)).is_one());
  CHECK(order_factored(cycle_decomposition(oracle::permutation_with_cycles({4, 6}, 10)))
            .factors() == std::map<std::uint64_t, std::uint32_t>{{2, 2}, {3, 1}});
}

TEST_CASE("order_factored equals a big-integer lcm of cycle lengths") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pi = oracle::random_permutation(300, rng);
    const auto cs = cycle_decomposition(pi);
    std::vector<std::uint64_t> lengths;
    for (const auto& c : cs.cycles()) lengths.push_back(c.length());
    const oracle::BigUint expected = oracle::big_lcm(lengths);
    oracle::BigUint actual(1);
    const FactoredInteger order = order_factored(cs);
    for (const auto& [p, e] : order.factors()) {
      for (std::uint32_t i = 0; i < e; ++i) actual.multiply_by(p);
    }
    CHECK(actual == expected);
  }
}

TEST_CASE("order is minimal: pi^N = 1 and pi^(N/p) != 1") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = trial % 4 == 0 ? 1000 : 60;
    const auto pi = oracle::random_permutation(n, rng);
    const auto cs = cycle_decomposition(pi);
    const FactoredInteger order = order_factored(cs);
    CHECK(power(cs, order).is_identity());
    for (const auto& [p, e] : order.factors()) {
      CHECK(!power(cs, order.with_prime_reduced(p)).is_identity());
    }
  }
}

TEST_CASE("support basics") {
  CHECK(support(Permutation::identity(4)).empty());
  CHECK(support(Permutation({1, 0, 2, 3})) == std::vector<Point>{0, 1});
  std::mt19937_64 rng(3);
  const auto pi = oracle::random_permutation(200, rng);
  CHECK(support(pi) == support(pi.inverse()));
  CHECK(support_size(pi) == support(pi).size());
}

TEST_CASE("power: cycle length divides exponent") {
  const auto pi = oracle::permutation_with_cycles({3}, 3);
  CHECK(power(pi, FactoredInteger::from_value(3)).is_identity());
}

TEST_CASE("power with astronomically large exponent 2^100") {
  const auto pi = oracle::permutation_with_cycles({3}, 3);
  FactoredInteger huge;
  huge.multiply_by(2, 100);
  // 2^100 mod 3 = 1, checked against the bignum oracle
  oracle::BigUint big(1);
  for (int i = 0; i < 100; ++i) big.multiply_by(2);
  REQUIRE(big.mod(3) == 1);
  CHECK(power(pi, huge) == pi);
}

TEST_CASE("power agrees with repeated composition for small exponents") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pi = oracle::random_permutation(40 + trial, rng);
    const std::uint64_t m = rng() % 1000 + 1;
    CHECK(power(pi, FactoredInteger::from_value(m)) ==
          oracle::power_by_composition(pi, m));
  }
}

TEST_CASE("points_in_cycles_divisible_by") {
  const auto cs = cycle_decomposition(oracle::permutation_with_cycles({2, 3, 5}, 10));
  CHECK(points_in_cycles_divisible_by(cs, 2) == 2);
  CHECK(points_in_cycles_divisible_by(cs, 7) == 0);
  const auto single = cycle_decomposition(oracle::permutation_with_cycles({12}, 12));
  CHECK(points_in_cycles_divisible_by(single, 4) == 12);

  // brute-force recount per point
  std::mt19937_64 rng(23);
  const auto pi = oracle::random_permutation(500, rng);
  const auto rcs = cycle_decomposition(pi);
  for (std::uint64_t q : {2, 3, 4, 5, 9, 16}) {
    std::uint64_t direct = 0;
    for (Point x = 0; x < pi.size(); ++x) {
      if (rcs.cycle_length_through(x) % q == 0) ++direct;
    }
    CHECK(points_in_cycles_divisible_by(rcs, q) == direct);
  }
}

TEST_CASE("prime-power parts of the order multiply to at most the cycle length") {
  // For every point, the product of the q_i dividing its cycle length must
  // divide the cycle length itself.
  std::mt19937_64 rng(31);
  for (std::size_t n : {10, 100, 1000}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto pi = oracle::random_permutation(n, rng);
      const auto cs = cycle_decomposition(pi);
      const FactoredInteger order = order_factored(cs);
      for (const auto& [len, points] : cs.points_per_length()) {
        unsigned __int128 product = 1;
        for (const auto& [p, e] : order.factors()) {
          std::uint64_t q = 1;
          for (std::uint32_t i = 0; i < e; ++i) q *= p;
          if (len % q == 0) product *= q;
        }
        CHECK(product <= len);
        CHECK(len % static_cast<std::uint64_t>(product) == 0);
      }
    }
  }
}

TEST_CASE("cycle_type is the sorted multiset of lengths, fixed points included") {
  CHECK(cycle_type(oracle::permutation_with_cycles({5, 2, 3}, 12)) ==
        std::vector<std::size_t>{1, 1, 2, 3, 5});
  CHECK(fixed_point_count(oracle::permutation_with_cycles({2}, 10)) == 8);
}
