#include "kh/linalg.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "kh/error.hpp"

namespace kh {
namespace {

// Row operation row_dst -= q * row_src, applied to the working matrix and
// the left transform together.
void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void sub_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (sgn(d(i, j)) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

std::vector<Integer> SnfDecomposition::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw DomainError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && sgn(m(swap_with, k)) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

SnfDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  std::size_t t = 0;

  for (; t < std::min(rows, cols); ++t) {
    auto pivot = smallest_nonzero(d, t);
    if (!pivot) break;
    d.swap_rows(t, pivot->row);
    u.swap_rows(t, pivot->row);
    d.swap_cols(t, pivot->col);
    v.swap_cols(t, pivot->col);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        sub_row(d, i, t, q);
        sub_row(u, i, t, q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        sub_col(d, j, t, q);
        sub_col(v, j, t, q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it to the pivot.
        Position best{t, t};
        Integer best_abs = abs(d(t, t));
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(d(i, t)) != 0 && abs(d(i, t)) < best_abs) {
            best = {i, t};
            best_abs = abs(d(i, t));
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(d(t, j)) != 0 && abs(d(t, j)) < best_abs) {
            best = {t, j};
            best_abs = abs(d(t, j));
          }
        d.swap_rows(t, best.row);
        u.swap_rows(t, best.row);
        d.swap_cols(t, best.col);
        v.swap_cols(t, best.col);
        continue;
      }
      // Pivot must divide the whole trailing block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      sub_row(d, t, *offending, Integer(-1));
      sub_row(u, t, *offending, Integer(-1));
    }

    if (sgn(d(t, t)) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }

  SnfDecomposition out{std::move(u), std::move(v), std::move(d), 0};
  for (std::size_t i = 0; i < std::min(rows, cols); ++i)
    if (sgn(out.D(i, i)) != 0) ++out.rank;
  return out;
}

IntMatrix adjugate(const IntMatrix& a) {
  if (!a.is_square()) throw DomainError("adjugate: matrix is not square");
  const std::size_t n = a.rows();
  IntMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer minor = determinant(a.without(i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? minor : Integer(-minor);
    }
  return adj;
}

IntMatrix scaled_inverse(const IntMatrix& a, const Integer& m) {
  if (!a.is_square()) throw DomainError("scaled_inverse: matrix is not square");
  const Integer det = determinant(a);
  if (sgn(det) == 0) throw DomainError("scaled_inverse: matrix is singular");
  IntMatrix out = m * adjugate(a);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      if (!mpz_divisible_p(out(i, j).get_mpz_t(), det.get_mpz_t()))
        throw NonIntegralError("scaled_inverse: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                   ") is " + out(i, j).get_str() + "/" + det.get_str() + ", not an integer",
                               i, j);
      mpz_divexact(out(i, j).get_mpz_t(), out(i, j).get_mpz_t(), det.get_mpz_t());
    }
  return out;
}

Integer count_solutions_mod(const IntMatrix& a, const Integer& k) {
  if (k < 2) throw DomainError("count_solutions_mod: modulus must be at least 2");
  const auto snf = smith_normal_form(a);
  Integer count = 1;
  Integer g;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    mpz_gcd(g.get_mpz_t(), snf.D(i, i).get_mpz_t(), k.get_mpz_t());
    count *= g;
  }
  Integer free_part;
  mpz_pow_ui(free_part.get_mpz_t(), k.get_mpz_t(), a.cols() - snf.rank);
  return count * free_part;
}

bool in_row_space(const SnfDecomposition& snf, std::span<const Integer> v) {
  // v = y^T A  <=>  v^T V = z^T D for some integer z.
  const std::size_t cols = snf.V.rows();
  if (v.size() != cols) throw DomainError("in_row_space: vector length does not match column count");
  for (std::size_t k = 0; k < cols; ++k) {
    Integer w = 0;
    for (std::size_t i = 0; i < cols; ++i) w += v[i] * snf.V(i, k);
    if (k < snf.rank) {
      if (!mpz_divisible_p(w.get_mpz_t(), snf.D(k, k).get_mpz_t())) return false;
    } else if (sgn(w) != 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t k = snf.rank; k < a.cols(); ++k) basis.push_back(snf.V.column(k));
  return basis;
}

}  // namespace kh
