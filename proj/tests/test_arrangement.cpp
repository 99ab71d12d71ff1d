#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "coincider/arrangement.hpp"
#include "coincider/errors.hpp"

using namespace coincider;

TEST_CASE("k_equal_arrangement shapes") {
  SUBCASE("(3,3): one diagonal line") {
    auto a = k_equal_arrangement(3, 3);
    REQUIRE(a.subspaces.size() == 1);
    CHECK(a.subspaces[0].rows == 1);
    CHECK(rank(a.subspaces[0]) == 1);
  }
  SUBCASE("(4,3): four planes") {
    auto a = k_equal_arrangement(4, 3);
    REQUIRE(a.subspaces.size() == 4);
    for (const auto& s : a.subspaces) CHECK(rank(s) == 2);
  }
  SUBCASE("(3,2): the three braid planes") {
    auto a = k_equal_arrangement(3, 2);
    REQUIRE(a.subspaces.size() == 3);
    for (const auto& s : a.subspaces) CHECK(rank(s) == 2);
  }
  SUBCASE("dimension formula q-k+1 for all q <= 6") {
    for (int q = 2; q <= 6; ++q) {
      for (int k = 2; k <= q; ++k) {
        auto a = k_equal_arrangement(q, k);
        for (const auto& s : a.subspaces) CHECK(rank(s) == q - k + 1);
      }
    }
  }
  SUBCASE("bounds") {
    CHECK_THROWS_AS(k_equal_arrangement(9, 2), InvalidInputError);
    CHECK_THROWS_AS(k_equal_arrangement(4, 1), InvalidInputError);
    CHECK_THROWS_AS(k_equal_arrangement(4, 5), InvalidInputError);
  }
}

TEST_CASE("v1_arrangement shapes") {
  SUBCASE("(2,3,2): three 3-dim subspaces of R^6") {
    auto a = v1_arrangement(2, 3, 2);
    CHECK(a.ambient == 6);
    REQUIRE(a.subspaces.size() == 3);
    for (const auto& s : a.subspaces) CHECK(rank(s) == 3);
  }
  SUBCASE("(2,3,3): one 2-dim subspace of R^6") {
    auto a = v1_arrangement(2, 3, 3);
    REQUIRE(a.subspaces.size() == 1);
    CHECK(rank(a.subspaces[0]) == 2);
  }
  SUBCASE("dimension formula m+q-k across small parameters") {
    for (int m = 2; m <= 3; ++m) {
      for (int q = 2; q <= 5; ++q) {
        if (m * q > 16) continue;
        for (int k = 2; k <= q; ++k) {
          auto a = v1_arrangement(m, q, k);
          for (const auto& s : a.subspaces) CHECK(rank(s) == m + q - k);
        }
      }
    }
  }
  SUBCASE("bounds") {
    CHECK_THROWS_AS(v1_arrangement(1, 3, 2), InvalidInputError);
    CHECK_THROWS_AS(v1_arrangement(2, 9, 2), InvalidInputError);
  }
}

TEST_CASE("intersection lattice of k-equal arrangements") {
  SUBCASE("(3,3): ambient plus the diagonal") {
    auto lat = intersection_lattice(k_equal_arrangement(3, 3));
    REQUIRE(lat.size() == 2);
    CHECK(lat.elements[0].codim == 0);
    CHECK(lat.elements[1].codim == 2);
    CHECK(lat.elements[0].covers == std::vector<int>{1});
  }
  SUBCASE("(4,3): six elements") {
    auto lat = intersection_lattice(k_equal_arrangement(4, 3));
    REQUIRE(lat.size() == 6);
    int codim2 = 0, codim3 = 0;
    for (const auto& e : lat.elements) {
      codim2 += e.codim == 2;
      codim3 += e.codim == 3;
    }
    CHECK(codim2 == 4);  // the four 3-blocks
    CHECK(codim3 == 1);  // the full diagonal
  }
  SUBCASE("(4,2): all 15 partitions of a 4-set") {
    auto lat = intersection_lattice(k_equal_arrangement(4, 2));
    CHECK(lat.size() == 15);
    CHECK(lat.size() == admissible_partition_count(4, 2));
  }
  SUBCASE("lattice / partition bijection for q <= 6") {
    for (int q = 3; q <= 6; ++q) {
      for (int k = 2; k <= q; ++k) {
        auto lat = intersection_lattice(k_equal_arrangement(q, k));
        CHECK(lat.size() == admissible_partition_count(q, k));
        // Each element's forced-equality pattern is admissible and distinct.
        std::set<std::string> seen;
        for (const auto& e : lat.elements) {
          const auto pattern = forced_equalities(e.basis, q);
          for (const auto& block : pattern.blocks) {
            const int s = static_cast<int>(block.size());
            CHECK((s == 1 || s >= k));
          }
          CHECK(pattern.block_count() == q - e.codim);
          std::string key;
          for (const auto& block : pattern.blocks) {
            for (int i : block) key += static_cast<char>('a' + i);
            key += '|';
          }
          CHECK(seen.insert(key).second);
        }
      }
    }
  }
}

TEST_CASE("lattice order and covers are consistent") {
  auto lat = intersection_lattice(k_equal_arrangement(4, 2));
  const int n = lat.size();
  for (int i = 0; i < n; ++i) {
    CHECK_FALSE(lat.less(i, i));
    for (int j = 0; j < n; ++j) {
      if (lat.less(i, j)) {
        CHECK(lat.elements[i].codim < lat.elements[j].codim);
        CHECK_FALSE(lat.less(j, i));
      }
    }
  }
  // Everything except the bottom lies strictly above it.
  for (int j = 1; j < n; ++j) CHECK(lat.less(0, j));
  // Covers from the bottom are exactly the atoms (codim-1 braid planes).
  CHECK(lat.elements[0].covers.size() == 6);
  for (int j : lat.elements[0].covers) CHECK(lat.elements[j].codim == 1);
}

TEST_CASE("v1 lattice basics") {
  // (2,2,2): a single subspace, lattice of size 2.
  auto lat22 = intersection_lattice(v1_arrangement(2, 2, 2));
  CHECK(lat22.size() == 2);
  CHECK(lat22.elements[1].codim == 2);

  // (2,3,2): three 3-dim subspaces in R^6; any two meet in the full
  // first-coordinate diagonal plus shared tail, dimension 2.
  auto lat32 = intersection_lattice(v1_arrangement(2, 3, 2));
  CHECK(lat32.size() == 5);
  std::vector<int> codims;
  for (const auto& e : lat32.elements) codims.push_back(e.codim);
  CHECK(codims == std::vector<int>{0, 3, 3, 3, 4});
}

TEST_CASE("intersection lattice rejects oversized input") {
  SubspaceArrangement a;
  a.ambient = 2;
  for (int i = 0; i < 65; ++i) {
    RatMat s(1, 2, {1, make_rational(i)});
    a.subspaces.push_back(s);
  }
  CHECK_THROWS_AS(intersection_lattice(a), InvalidInputError);
}
