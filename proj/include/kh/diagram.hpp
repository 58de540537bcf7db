#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kh/codec.hpp"

namespace kh {

// One crossing in PD layout: ccw holds the four incident edge labels
// counterclockwise from the incoming under-strand edge.
struct Crossing {
  std::array<int, 4> ccw{};
  bool over_forward = true;  // over-strand runs ccw[1] -> ccw[3]

  int under_in() const noexcept { return ccw[0]; }
  int under_out() const noexcept { return ccw[2]; }
  int over_in() const noexcept { return over_forward ? ccw[1] : ccw[3]; }
  int over_out() const noexcept { return over_forward ? ccw[3] : ccw[1]; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A maximal run of edges from one undercrossing to the next.
struct Arc {
  int index = 0;
  std::vector<int> edges;    // in traversal order
  std::vector<int> over_at;  // crossings where the arc is the over-strand
  int start_crossing = -1;   // undercrossing the arc leaves; -1 for a component with no undercrossing
  int end_crossing = -1;     // undercrossing the arc enters

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Position of an edge end: crossing index and PD slot 0..3.
struct EdgeEnd {
  int crossing = -1;
  int slot = -1;
};

// Immutable oriented link diagram.
//
// Edges are labelled 1..2n so that each component is a consecutive run
// traversed in increasing order, components ordered by first label. Unless
// reordered explicitly, crossings are numbered by first visit while walking
// edges 1, 2, ..., 2n (the crossing at the head of each edge). Arcs follow
// the crossing order in alternating diagrams (arc i is the over-arc at
// crossing i); otherwise they are numbered by first appearance along the
// traversal with the arc through edge 1 moved to the end.
class Diagram {
 public:
  Diagram() = default;  // the crossingless unknot

  static Diagram from_pd(const PdCode& code);

  // Tuples in PD layout with arbitrary positive labels, each used twice.
  // over_forward[k] may be left unset; it is then inferred from the
  // under-strand orientations and, failing that, from label order.
  // joins are pairs of edge labels recorded as connected-sum bridges.
  static Diagram from_tuples(const std::vector<std::array<int, 4>>& tuples,
                             const std::vector<std::optional<bool>>& over_forward,
                             const std::vector<std::array<int, 2>>& joins = {});

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return 2 * crossing_count(); }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  int component_count() const noexcept { return components_; }
  bool empty() const noexcept { return crossings_.empty(); }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  int arc_of_edge(int edge) const { return arc_of_edge_.at(static_cast<std::size_t>(edge)); }
  int component_of_edge(int edge) const { return component_of_edge_.at(static_cast<std::size_t>(edge)); }
  EdgeEnd head(int edge) const { return head_.at(static_cast<std::size_t>(edge)); }
  EdgeEnd tail(int edge) const { return tail_.at(static_cast<std::size_t>(edge)); }
  int next_edge(int edge) const { return next_.at(static_cast<std::size_t>(edge)); }

  // Edge pairs recorded by connected_sum, one per join.
  const std::vector<std::array<int, 2>>& joins() const noexcept { return joins_; }
  // The two arcs created by each join.
  std::vector<std::pair<int, int>> joining_arcs() const;

  PdCode to_pd() const;

  // Same diagram, crossings renumbered so that new crossing k is old
  // crossing crossing_order[k]. arc_order (old arc indices) is optional;
  // when empty the default arc rule is applied to the new crossing order.
  Diagram with_ordering(std::span<const int> crossing_order, std::span<const int> arc_order = {}) const;

  // V - E + F of the embedding given by the PD rotation system; 2 per
  // connected planar piece.
  int euler_characteristic() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.arcs_ == b.arcs_ && a.joins_ == b.joins_;
  }

 private:
  void index_edges();
  void build_arcs(std::span<const int> forced_order = {}, const Diagram* previous = nullptr);

  friend Diagram mirror(const Diagram& d);

  std::vector<Crossing> crossings_;
  std::vector<Arc> arcs_;
  std::vector<std::array<int, 2>> joins_;
  int components_ = 0;

  // Indexed by edge label (slot 0 unused).
  std::vector<EdgeEnd> head_;
  std::vector<EdgeEnd> tail_;
  std::vector<int> next_;
  std::vector<int> component_of_edge_;
  std::vector<int> arc_of_edge_;
};

Diagram from_pd(const PdCode& code);

// Closure of a braid word. Positive letters are positive crossings.
// Throws InvalidDiagram if some strand takes part in no crossing.
Diagram braid_closure(const BraidWord& word);

// Standard pretzel diagram P(p_1, ..., p_k): column i is a vertical twist
// of |p_i| crossings, with sign(p_i) selecting the crossing type.
Diagram pretzel(std::span<const int> columns);

// Closure of (sigma_1 sigma_2^{-1})^n.
Diagram turks_head(int n);

// Every crossing switched; crossing order and edge labels are kept.
Diagram mirror(const Diagram& d);

// d1 # d2, joined along the last non-joining arc of d1 and the first
// non-joining arc of d2. Throws DomainError if either operand is empty.
Diagram connected_sum(const Diagram& d1, const Diagram& d2);

const std::vector<Arc>& arcs(const Diagram& d);

bool is_alternating(const Diagram& d);

// No crossing is nugatory: no edge loops back to its own crossing and no
// crossing is a cut vertex of the underlying 4-valent graph.
bool is_reduced(const Diagram& d);

// No pair of distinct edges disconnects the underlying graph.
bool is_prime_diagram(const Diagram& d);

}  // namespace kh
