#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kh/diagram.hpp"
#include "kh/fox.hpp"
#include "kh/pseudo.hpp"

namespace kh {

struct Hypotheses {
  bool alternating = false;
  bool reduced = false;
  bool prime = false;  // diagrammatic: no simple closed curve meets the diagram in two edges
  Integer determinant = 0;
  int component_count = 0;

  // Reduced, alternating and prime: the distinguishing property is expected.
  bool guaranteed() const noexcept { return alternating && reduced && prime; }
};

using ArcPair = std::pair<int, int>;

// Part (a): some Fox n_1-coloring separates each pair, decided independently
// of L through the Smith form of C'(D).
struct PartA {
  bool pass = false;
  std::vector<ArcPair> failures;
};

// Part (b): columns of L_{n_1}(D) mod n_1 separate each pair.
struct PartB {
  bool pass = false;
  int t = 0;                           // size of a least separating column set
  std::vector<int> witness_columns;    // that set
  bool t_exact = true;
  std::vector<int> total_columns;      // columns that alone separate every pair
};

// Part (c): s colorings built from the Smith generators separate each pair.
struct PartC {
  bool pass = false;
  int s = 0;
  std::vector<FoxColoring> colorings;
  std::vector<ArcPair> failures;
};

struct ConnectedSumChecks {
  std::vector<ArcPair> joining_pairs;
  bool joining_equal = false;          // joining arcs agree in every column of L mod n_1
  bool others_distinguished = false;   // every other pair is separated by some column
  bool direct_sum = false;             // group is the direct sum of the parts' groups
  ColoringGroup expected_group;
  std::vector<ArcPair> non_joining_failures;
};

struct VerificationReport {
  std::string id;
  Hypotheses hypotheses;
  ColoringGroup group;
  PartA part_a;
  PartB part_b;
  PartC part_c;
  std::vector<InverseColumnPseudo> pseudo_found;
  std::vector<ArcPair> failures;  // pairs with no separating column
  bool consistent = false;        // (a) <=> (b) and (c) => (b)
  std::optional<ConnectedSumChecks> connected_sum;

  // Connected sums are judged by the sum checks in place of parts (a)-(c).
  bool passed() const;
};

// Throws DomainError when the determinant is zero. Hypothesis failures do not
// abort: all checks still run and are reported.
VerificationReport verify_gkh(const Diagram& d, std::string id = {});

// Verifies the iterated connected sum of the parts (left fold). Throws
// DomainError for an empty list or a part with zero determinant.
VerificationReport verify_connected_sum(std::span<const Diagram> parts, std::string id = {});

// Exhaustive count of Fox k-colorings. Throws DomainError when k < 2 or
// k^arcs exceeds 2^24.
Integer brute_force_coloring_count(const Diagram& d, int k);

// Closure of a random alternating braid word (sigma_i positive for odd i,
// negative for even i), retried until reduced, prime, connected and of
// nonzero determinant. Deterministic in seed. Throws DomainError when
// max_crossings < 3 or generation keeps failing.
Diagram random_alternating_diagram(int max_crossings, std::uint64_t seed);

}  // namespace kh
