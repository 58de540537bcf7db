#pragma once

// Finds row and column permutations carrying one integer matrix onto another:
// mine(rows[i], cols[j]) == target(i, j) for all i, j.

#include <algorithm>
#include <optional>
#include <vector>

#include "kh/int_matrix.hpp"

namespace matching {

struct Permutation {
  std::vector<int> rows;
  std::vector<int> cols;
};

namespace detail {

struct Search {
  const kh::IntMatrix& mine;
  const kh::IntMatrix& target;
  std::vector<int> rows, cols;
  std::vector<bool> row_used, col_used;
  std::vector<std::vector<kh::Integer>> mine_sorted, target_sorted;

  bool consistent(std::size_t i, int r) const {
    for (std::size_t j = 0; j < target.cols(); ++j)
      if (cols[j] >= 0 && mine(static_cast<std::size_t>(r), static_cast<std::size_t>(cols[j])) != target(i, j)) return false;
    return true;
  }

  // Assigns the unmapped nonzero columns of target row i, starting at j.
  bool extend(std::size_t i, int r, std::size_t j) {
    while (j < target.cols() && (cols[j] >= 0 || target(i, j) == 0)) ++j;
    if (j == target.cols()) return consistent(i, r) && place(i + 1);
    for (std::size_t c = 0; c < mine.cols(); ++c) {
      if (col_used[c] || mine(static_cast<std::size_t>(r), c) != target(i, j)) continue;
      cols[j] = static_cast<int>(c);
      col_used[c] = true;
      if (consistent(i, r) && extend(i, r, j + 1)) return true;
      cols[j] = -1;
      col_used[c] = false;
    }
    return false;
  }

  bool place(std::size_t i) {
    if (i == target.rows()) {
      // Zero columns of target may still be unmapped; pair them with the rest.
      std::vector<int> free_cols;
      for (std::size_t c = 0; c < mine.cols(); ++c)
        if (!col_used[c]) free_cols.push_back(static_cast<int>(c));
      std::size_t k = 0;
      for (auto& c : cols)
        if (c < 0) c = free_cols[k++];
      for (std::size_t a = 0; a < target.rows(); ++a)
        for (std::size_t b = 0; b < target.cols(); ++b)
          if (mine(static_cast<std::size_t>(rows[a]), static_cast<std::size_t>(cols[b])) != target(a, b)) return false;
      return true;
    }
    for (std::size_t r = 0; r < mine.rows(); ++r) {
      if (row_used[r] || mine_sorted[r] != target_sorted[i]) continue;
      const auto saved = cols;
      const auto saved_used = col_used;
      rows[i] = static_cast<int>(r);
      row_used[r] = true;
      if (extend(i, static_cast<int>(r), 0)) return true;
      row_used[r] = false;
      cols = saved;
      col_used = saved_used;
    }
    return false;
  }
};

inline std::vector<kh::Integer> sorted_row(const kh::IntMatrix& m, std::size_t r) {
  std::vector<kh::Integer> v(m.row(r).begin(), m.row(r).end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

inline std::optional<Permutation> match(const kh::IntMatrix& mine, const kh::IntMatrix& target) {
  if (mine.rows() != target.rows() || mine.cols() != target.cols()) return std::nullopt;
  detail::Search s{mine, target, std::vector<int>(target.rows(), -1), std::vector<int>(target.cols(), -1),
                   std::vector<bool>(mine.rows(), false), std::vector<bool>(mine.cols(), false), {}, {}};
  for (std::size_t r = 0; r < mine.rows(); ++r) s.mine_sorted.push_back(detail::sorted_row(mine, r));
  for (std::size_t r = 0; r < target.rows(); ++r) s.target_sorted.push_back(detail::sorted_row(target, r));
  if (!s.place(0)) return std::nullopt;
  return Permutation{s.rows, s.cols};
}

}  // namespace matching
