#pragma once

#include <random>
#include <string>
#include <vector>

#include "kh/fixtures.hpp"
#include "kh/int_matrix.hpp"

namespace support {

inline kh::Diagram fixture(const std::string& name) {
  const auto e = kh::find_fixture(kh::builtin_fixtures(), name);
  if (!e) throw std::runtime_error("no fixture " + name);
  return kh::load_diagram(e->input);
}

inline const std::vector<std::string>& gkh_fixtures() {
  static const std::vector<std::string> names{"3_1", "4_1", "5_2", "7_7", "10_123", "w6", "p33333", "p3336"};
  return names;
}

inline kh::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  kh::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return m;
}

inline std::vector<kh::Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace support
