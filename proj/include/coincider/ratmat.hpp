#pragma once

#include <string>
#include <vector>

#include "coincider/rational.hpp"

namespace coincider {

/// Dense rational matrix, row-major.
struct RatMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  RatMat(int r, int c, std::vector<Rational> data);

  const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const RatMat& other) const = default;
};

/// Reduced row echelon form; zero rows are dropped, so rows == rank.
RatMat rref(const RatMat& m);

int rank(const RatMat& m);

/// Rows of the returned matrix span {x : m x^T = 0}.
RatMat nullspace(const RatMat& m);

/// Rows of both inputs are spanning sets; returns an RREF basis of the
/// intersection of the two row spaces.
RatMat row_space_intersection(const RatMat& u, const RatMat& v);

/// True iff rowspace(inner) is contained in rowspace(outer).
bool row_space_contains(const RatMat& outer, const RatMat& inner);

/// Rows of u followed by rows of v.
RatMat stack(const RatMat& u, const RatMat& v);

/// Unique textual key of the row space (serialized RREF); equal keys iff
/// equal row spaces.
std::string row_space_key(const RatMat& m);

}  // namespace coincider
