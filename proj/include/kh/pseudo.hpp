#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kh/diagram.hpp"
#include "kh/int_matrix.hpp"

namespace kh {

// Integer arc assignment whose crossing defects C'(D) * colors vanish except
// +1 at plus_crossing and epsilon at eps_crossing.
struct PseudoColoring {
  std::vector<Integer> colors;
  std::vector<Integer> defects;
  int plus_crossing = -1;
  int eps_crossing = -1;
  int epsilon = 1;

  friend bool operator==(const PseudoColoring&, const PseudoColoring&) = default;
};

// r with r^T C'(D) = 0, primitive, first nonzero entry positive.
struct RowRelation {
  std::vector<Integer> coefficients;

  friend bool operator==(const RowRelation&, const RowRelation&) = default;
};

// A basis of the left kernel of C'(D); a single vector for connected
// diagrams with nonzero determinant.
std::vector<RowRelation> row_relations(const Diagram& d);

enum class AssignmentKind { fox, pseudo, neither };

struct Classification {
  AssignmentKind kind = AssignmentKind::neither;
  std::vector<Integer> defects;         // C'(D) * colors, before any sign normalization
  std::optional<PseudoColoring> pseudo;  // set iff kind == pseudo
};

// Over the integers. Assignments with defects {-1,-1} are negated to meet
// the "+1 and epsilon" convention; with two +1 defects the lower crossing
// index is plus_crossing. Throws DomainError on a length mismatch.
Classification classify_assignment(const Diagram& d, std::span<const Integer> colors);

struct InverseColumnPseudo {
  int column = 0;  // column of C^{-1}(D), base arc last
  PseudoColoring coloring;
};

// Every integral column of C^{-1}(D), extended by 0 on the base arc, that
// classifies as a pseudo coloring. Throws DomainError on zero determinant.
std::vector<InverseColumnPseudo> pseudo_from_inverse_columns(const Diagram& d);

// Colours one arc of a tunnel (an arc that is never an over-strand) by -1.
// Throws DomainError for diagrams without a tunnel, i.e. alternating ones.
PseudoColoring tunnel_pseudo(const Diagram& d);

}  // namespace kh
