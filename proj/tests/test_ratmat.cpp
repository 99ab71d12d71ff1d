#include "doctest.h"

#include <random>

#include "coincider/ratmat.hpp"

using namespace coincider;

namespace {

RatMat random_matrix(std::mt19937_64& rng, int rows, int cols) {
  RatMat m(rows, cols);
  for (auto& x : m.a) x = random_rational(rng, 4, 3);
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  SUBCASE("identity is its own reduced form") {
    RatMat id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(rref(id) == id);
    CHECK(rank(id) == 3);
  }
  SUBCASE("dependent rows collapse") {
    RatMat m(3, 3, {1, 2, 3, 2, 4, 6, 0, 1, 1});
    CHECK(rank(m) == 2);
    auto r = rref(m);
    CHECK(r.rows == 2);
    CHECK(r.at(0, 0) == 1);
    CHECK(r.at(0, 1) == 0);
    CHECK(r.at(0, 2) == 1);
    CHECK(r.at(1, 1) == 1);
    CHECK(r.at(1, 2) == 1);
  }
  SUBCASE("exact fractions survive elimination") {
    RatMat m(2, 2, {make_rational(1, 3), make_rational(1, 6), make_rational(1, 7), 1});
    CHECK(rank(m) == 2);
  }
}

TEST_CASE("nullspace") {
  SUBCASE("kernel of a rank-1 projection") {
    RatMat m(1, 3, {1, 1, 1});
    auto n = nullspace(m);
    CHECK(n.rows == 2);
    for (int i = 0; i < n.rows; ++i) {
      Rational s = 0;
      for (int c = 0; c < 3; ++c) s += n.at(i, c);
      CHECK(s == 0);
    }
  }
  SUBCASE("rank-nullity for random matrices") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
      const int rows = 1 + static_cast<int>(rng() % 5);
      const int cols = 1 + static_cast<int>(rng() % 6);
      auto m = random_matrix(rng, rows, cols);
      auto n = nullspace(m);
      CHECK(rank(m) + n.rows == cols);
      for (int i = 0; i < n.rows; ++i) {
        for (int r = 0; r < rows; ++r) {
          Rational dot = 0;
          for (int c = 0; c < cols; ++c) dot += m.at(r, c) * n.at(i, c);
          CHECK(dot == 0);
        }
      }
    }
  }
}

TEST_CASE("row space intersection") {
  SUBCASE("two planes in R^3 meet in a line") {
    RatMat u(2, 3, {1, 0, 0, 0, 1, 0});  // xy-plane
    RatMat v(2, 3, {1, 0, 0, 0, 0, 1});  // xz-plane
    auto w = row_space_intersection(u, v);
    REQUIRE(w.rows == 1);
    CHECK(w.at(0, 0) == 1);
    CHECK(w.at(0, 1) == 0);
    CHECK(w.at(0, 2) == 0);
  }
  SUBCASE("intersection with self is self") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 25; ++trial) {
      auto u = random_matrix(rng, 2, 4);
      auto w = row_space_intersection(u, u);
      CHECK(w == rref(u));
    }
  }
  SUBCASE("dimension formula dim(U) + dim(V) = dim(U+V) + dim(U cap V)") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
      auto u = random_matrix(rng, 1 + static_cast<int>(rng() % 3), 5);
      auto v = random_matrix(rng, 1 + static_cast<int>(rng() % 3), 5);
      auto w = row_space_intersection(u, v);
      CHECK(rank(u) + rank(v) == rank(stack(u, v)) + w.rows);
      CHECK(row_space_contains(u, w));
      CHECK(row_space_contains(v, w));
    }
  }
}

TEST_CASE("row space containment and keys") {
  RatMat u(2, 3, {1, 0, 0, 0, 1, 0});
  RatMat line(1, 3, {2, 3, 0});
  RatMat off(1, 3, {0, 0, 1});
  CHECK(row_space_contains(u, line));
  CHECK_FALSE(row_space_contains(u, off));
  CHECK_FALSE(row_space_contains(line, u));

  // Keys identify row spaces regardless of the spanning set chosen.
  RatMat u2(3, 3, {1, 1, 0, 1, make_rational(-1), 0, 3, 5, 0});
  CHECK(row_space_key(u) == row_space_key(u2));
  CHECK(row_space_key(u) != row_space_key(line));
}
