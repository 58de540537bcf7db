#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kh/diagram.hpp"
#include "kh/int_matrix.hpp"

namespace kh {

// Reduced group of Fox colorings as Z_{n_1} + ... + Z_{n_s} with
// n_{i+1} | n_i and every n_i >= 2.
struct ColoringGroup {
  std::vector<Integer> invariant_factors;
  Integer determinant = 1;

  // n_1; 1 for the trivial group.
  Integer annihilator() const { return invariant_factors.empty() ? Integer(1) : invariant_factors.front(); }
  std::size_t rank() const noexcept { return invariant_factors.size(); }

  friend bool operator==(const ColoringGroup&, const ColoringGroup&) = default;
};

// Arc-indexed residues in [0, modulus).
struct FoxColoring {
  Integer modulus;
  std::vector<Integer> colors;

  friend bool operator==(const FoxColoring&, const FoxColoring&) = default;
};

// L = n_1 C^{-1} for the reduced crossing matrix C. Row r of L is the
// r-th non-base arc; column j is the j-th non-base crossing.
struct ColoringMatrix {
  IntMatrix L;
  IntMatrix Lmod;
  Integer modulus;
  int base_arc = 0;
  int arc_count = 0;
};

// Crossings x arcs matrix: +2 for the over-arc, -1 for each under-arc
// (accumulated, so coinciding under-arcs give -2).
IntMatrix crossing_matrix(const Diagram& d);

// Deletes row and column base (default: the last). Throws DomainError when
// base is out of range.
IntMatrix reduced_crossing_matrix(const IntMatrix& c_prime, std::optional<int> base = std::nullopt);

// |det C(D)|; 0 when the coloring group is infinite.
Integer link_determinant(const Diagram& d);

// Throws DomainError when the determinant is zero.
ColoringGroup coloring_group(const Diagram& d);

// Group presented by an arbitrary square matrix (decreasing convention).
ColoringGroup group_from_matrix(const IntMatrix& reduced);

// n_1 is taken as 1 for a trivial group, so L = C^{-1}.
ColoringMatrix coloring_matrix(const Diagram& d, std::optional<int> base = std::nullopt);

// Throws DomainError if colors.size() differs from the arc count or k < 2.
bool is_fox_coloring(const Diagram& d, std::span<const Integer> colors, const Integer& k);

struct ColoringEnumeration {
  Integer count;
  // Present only when the search space is within the enumeration bound.
  std::optional<std::vector<FoxColoring>> colorings;
};

// Enumerates when arcs * log2(k) <= 24; otherwise only counts.
ColoringEnumeration enumerate_colorings(const Diagram& d, const Integer& k);

// Column j of Lmod extended by 0 on the base arc.
FoxColoring column_coloring(const ColoringMatrix& cm, int j);

struct PairSeparation {
  int first = 0;
  int second = 0;
  std::optional<int> column;  // least separating column of Lmod
};

struct DistinguishingReport {
  ColoringMatrix matrix;
  std::vector<PairSeparation> pairs;              // all unordered arc pairs, lexicographic
  std::vector<std::pair<int, int>> failures;      // pairs no column separates
  std::vector<int> total_columns;                 // columns that alone separate every pair
  std::vector<int> minimum_cover;                 // least column set separating every separable pair
  bool cover_exact = true;                        // false when the cover search fell back to greedy
  bool trivial_group = false;                     // determinant 1: no nontrivial colorings exist
};

DistinguishingReport distinguishing_report(const Diagram& d, std::optional<int> base = std::nullopt);

struct DistinguishingSet {
  std::vector<FoxColoring> colorings;  // one per nontrivial invariant factor
  std::vector<std::pair<int, int>> undistinguished;
};

// Kernel generators V * (n_1 / gcd(d_i, n_1)) * e_i mod n_1 from the Smith
// form of C(D), extended by 0 on the base arc.
DistinguishingSet minimal_distinguishing_set(const Diagram& d);

// Arc pairs (i < j) on which every coloring in the list agrees.
std::vector<std::pair<int, int>> unseparated_pairs(std::span<const FoxColoring> colorings, int arc_count);

}  // namespace kh
