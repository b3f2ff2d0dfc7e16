#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "whpp/linalg.hpp"

using namespace whpp;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntegerMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m.set(static_cast<int>(r), static_cast<int>(c), rows[r][c]);
  return m;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  IntegerMatrix m(rows, cols);
  std::uniform_int_distribution<int> dist(lo, hi);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, dist(rng));
  return m;
}

}  // namespace

TEST_CASE("rank basics") {
  IntegerMatrix id(5, 5);
  for (int i = 0; i < 5; ++i) id.set(i, i, 1);
  CHECK(rank_rational(id) == 5);

  IntegerMatrix zero(3, 4);
  CHECK(rank_rational(zero) == 0);
  CHECK(nullity_rational(zero) == 4);

  IntegerMatrix empty(0, 35);
  CHECK(rank_rational(empty) == 0);
  CHECK(nullity_rational(empty) == 35);

  CHECK(rank_rational(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_rational(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);

  IntegerMatrix id4(4, 4);
  for (int i = 0; i < 4; ++i) id4.set(i, i, 1);
  CHECK(nullity_rational(id4) == 0);
}

TEST_CASE("rank agrees with rational-pivot elimination and modular path") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 7);
    int cols = 1 + static_cast<int>(rng() % 7);
    IntegerMatrix m = random_matrix(rng, rows, cols, -3, 3);
    int exact = rank_rational(m);
    CHECK(exact == oracle::rank_rational_pivot(m));
    CHECK(exact == rank_rational(transpose(m)));
    int modular = rank_modular(m, 2147483629u);
    CHECK(modular <= exact);
    CHECK(modular == exact);  // entries are tiny; no minor is divisible by p
  }
}

TEST_CASE("rank survives entries that overflow the fast path") {
  // scale a rank-2 matrix by 2^70 so int64 arithmetic cannot hold products
  BigInt big = BigInt(1);
  for (int i = 0; i < 70; ++i) big *= BigInt(2);
  IntegerMatrix m(3, 3);
  std::vector<std::vector<long long>> base = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = BigInt(base[r][c]) * big;
  CHECK(rank_rational(m) == 2);
}

TEST_CASE("smith normal form on pinned examples") {
  AbelianInvariants d23 = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  CHECK(d23.free_rank == 0);
  REQUIRE(d23.torsion.size() == 1);
  CHECK(d23.torsion[0] == BigInt(6));  // diag(2,3) ~ diag(1,6)

  AbelianInvariants two = smith_normal_form(from_rows({{2}}));
  CHECK(two.free_rank == 0);
  REQUIRE(two.torsion.size() == 1);
  CHECK(two.torsion[0] == BigInt(2));

  // presentation with a free generator left over
  AbelianInvariants mixed = smith_normal_form(from_rows({{2, 0, 0}, {0, 12, 0}}));
  CHECK(mixed.free_rank == 1);
  REQUIRE(mixed.torsion.size() == 2);
  CHECK(mixed.torsion[0] == BigInt(2));
  CHECK(mixed.torsion[1] == BigInt(12));

  AbelianInvariants none = smith_normal_form(IntegerMatrix(0, 4));
  CHECK(none.free_rank == 4);
  CHECK(none.torsion.empty());
}

TEST_CASE("smith normal form matches determinant-divisor oracle") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 150; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 4);
    IntegerMatrix m = random_matrix(rng, rows, cols, -4, 4);
    AbelianInvariants inv = smith_normal_form(m);
    std::vector<BigInt> factors = oracle::invariant_factors_minor_gcd(m);
    std::vector<BigInt> expected_torsion;
    for (const BigInt& f : factors)
      if (!(f == BigInt(1))) expected_torsion.push_back(f);
    long long expected_free = cols - static_cast<long long>(factors.size());
    CHECK(inv.free_rank == expected_free);
    REQUIRE(inv.torsion.size() == expected_torsion.size());
    for (size_t i = 0; i < expected_torsion.size(); ++i)
      CHECK(inv.torsion[i] == expected_torsion[i]);
    // cross-route: free rank must equal the rational nullity
    CHECK(inv.free_rank == nullity_rational(m));
  }
}

TEST_CASE("divisibility chain holds") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    IntegerMatrix m = random_matrix(rng, 2 + static_cast<int>(rng() % 4),
                                    2 + static_cast<int>(rng() % 4), -6, 6);
    AbelianInvariants inv = smith_normal_form(m);
    for (size_t i = 0; i + 1 < inv.torsion.size(); ++i)
      CHECK((inv.torsion[i + 1] % inv.torsion[i]).is_zero());
    for (const BigInt& t : inv.torsion) CHECK(t >= BigInt(2));
  }
}

TEST_CASE("matrix dump format") {
  IntegerMatrix m = from_rows({{1, -2}, {0, 5}});
  CHECK(dump_matrix(m) == "2 2\n1 -2\n0 5\n");
}
