#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kh/int_matrix.hpp"

namespace kh {

// U * A * V = D with U, V unimodular and D diagonal. The diagonal is
// nonnegative, d_1 | d_2 | ... in increasing divisibility, zeros last.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  std::size_t rank = 0;

  // min(rows, cols) diagonal entries of D.
  std::vector<Integer> diagonal() const;
};

// Exact signed determinant by fraction-free (Bareiss) elimination.
// The 0x0 determinant is 1. Throws DomainError for non-square input.
Integer determinant(const IntMatrix& a);

SnfDecomposition smith_normal_form(const IntMatrix& a);

// Classical adjugate: adj(a) * a = a * adj(a) = det(a) * I.
IntMatrix adjugate(const IntMatrix& a);

// m * a^{-1}, computed as m * adj(a) / det(a). Throws DomainError when a is
// singular and NonIntegralError when some entry is not an integer.
IntMatrix scaled_inverse(const IntMatrix& a, const Integer& m);

// Number of x in (Z/k)^cols with a * x = 0 (mod k).
Integer count_solutions_mod(const IntMatrix& a, const Integer& k);

// True iff the row vector v is an integer combination of the rows of the
// matrix whose decomposition is given.
bool in_row_space(const SnfDecomposition& snf, std::span<const Integer> v);

// Z-basis of {x : a * x = 0}, one vector per entry.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& a);

}  // namespace kh
