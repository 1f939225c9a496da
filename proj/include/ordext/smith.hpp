#pragma once

#include <optional>

#include "ordext/types.hpp"

namespace ordext {

// left * input * right == diagonal, with left and right unimodular and the
// diagonal entries d_0 | d_1 | ... nonnegative.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  IntMatrix diagonal;
  IntVec divisors;  // the nonzero diagonal entries
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);

// Row-style Hermite normal form of the lattice spanned by the rows. Zero rows
// are dropped. Pivots are positive and entries above each pivot lie in
// [0, pivot).
IntMatrix hermite_rows(IntMatrix rows, std::size_t cols);

// Integral solutions of a * x == b: one particular solution and a basis of the
// kernel lattice. nullopt when no integral solution exists.
struct IntegralSolution {
  IntVec particular;
  IntMatrix kernel;  // rows are kernel basis vectors
};
std::optional<IntegralSolution> solve_integral(const IntMatrix& a, std::size_t cols,
                                               const IntVec& b);

// Reduces x modulo the row lattice of `kernel` so that it is canonical: the
// kernel is put in Hermite form with pivots taken from the last coordinate
// backwards, and each pivot coordinate of x lands in [0, pivot).
IntVec reduce_modulo_lattice(IntVec x, const IntMatrix& kernel, std::size_t cols);

Int floor_div(Int a, Int b);

}  // namespace ordext
