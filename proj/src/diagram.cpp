#include "kh/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "kh/error.hpp"

namespace kh {
namespace {

enum class Role { unknown, head, tail };

Role opposite(Role r) { return r == Role::head ? Role::tail : r == Role::tail ? Role::head : Role::unknown; }

Role slot_role(int slot, std::optional<bool> over_forward) {
  switch (slot) {
    case 0: return Role::head;
    case 2: return Role::tail;
    case 1: return over_forward ? (*over_forward ? Role::head : Role::tail) : Role::unknown;
    default: return over_forward ? (*over_forward ? Role::tail : Role::head) : Role::unknown;
  }
}

// Small union-find over dense ids.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Number of connected components of the crossing graph after deleting the
// vertex skip_vertex (if >= 0) and the edges listed in skip_edges.
int count_components(const Diagram& d, int skip_vertex, std::span<const int> skip_edges) {
  const int n = d.crossing_count();
  DisjointSets sets(static_cast<std::size_t>(n));
  for (int e = 1; e <= d.edge_count(); ++e) {
    if (std::find(skip_edges.begin(), skip_edges.end(), e) != skip_edges.end()) continue;
    const int a = d.tail(e).crossing;
    const int b = d.head(e).crossing;
    if (a == skip_vertex || b == skip_vertex) continue;
    sets.unite(a, b);
  }
  std::set<int> roots;
  for (int v = 0; v < n; ++v)
    if (v != skip_vertex) roots.insert(sets.find(v));
  return static_cast<int>(roots.size());
}

}  // namespace

Diagram Diagram::from_pd(const PdCode& code) {
  validate_pd(code);
  return from_tuples(code.crossings, std::vector<std::optional<bool>>(code.crossings.size()));
}

Diagram Diagram::from_tuples(const std::vector<std::array<int, 4>>& tuples,
                             const std::vector<std::optional<bool>>& over_forward,
                             const std::vector<std::array<int, 2>>& joins) {
  const int n = static_cast<int>(tuples.size());
  if (n == 0) return Diagram{};
  if (over_forward.size() != tuples.size()) throw InvalidDiagram("orientation hints do not match crossing count");

  std::map<int, std::vector<EdgeEnd>> ends;
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < 4; ++s) {
      const int label = tuples[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
      if (label < 1) throw InvalidDiagram("edge label " + std::to_string(label) + " is not positive");
      ends[label].push_back({k, s});
    }
  for (const auto& [label, list] : ends)
    if (list.size() != 2) throw InvalidDiagram("edge " + std::to_string(label) + " does not have exactly two ends");

  std::vector<int> labels;
  std::map<int, int> dense;
  for (const auto& [label, list] : ends) {
    dense[label] = static_cast<int>(labels.size());
    labels.push_back(label);
  }
  auto at = [&](int k, int s) { return tuples[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)]; };
  auto other_end = [&](int label, EdgeEnd here) {
    const auto& list = ends.at(label);
    return (list[0].crossing == here.crossing && list[0].slot == here.slot) ? list[1] : list[0];
  };

  DisjointSets strands(labels.size());
  for (int k = 0; k < n; ++k) {
    strands.unite(dense[at(k, 0)], dense[at(k, 2)]);
    strands.unite(dense[at(k, 1)], dense[at(k, 3)]);
  }

  // Orient over-strands: first from the fixed under-strand directions, then
  // from label order for components that never pass under.
  std::vector<std::optional<bool>> dir = over_forward;
  auto role_of = [&](EdgeEnd e) { return slot_role(e.slot, dir[static_cast<std::size_t>(e.crossing)]); };
  for (;;) {
    bool progress = false;
    for (int k = 0; k < n; ++k) {
      if (dir[static_cast<std::size_t>(k)]) continue;
      for (int s : {1, 3}) {
        const Role there = role_of(other_end(at(k, s), {k, s}));
        if (there == Role::unknown) continue;
        const bool here_is_head = opposite(there) == Role::head;
        dir[static_cast<std::size_t>(k)] = (s == 1) == here_is_head;
        progress = true;
        break;
      }
    }
    if (progress) continue;
    auto open = std::find_if(dir.begin(), dir.end(), [](const auto& v) { return !v.has_value(); });
    if (open == dir.end()) break;
    const int k = static_cast<int>(open - dir.begin());
    const int b = at(k, 1);
    const int d = at(k, 3);
    std::vector<int> component;
    for (int label : labels)
      if (strands.find(dense[label]) == strands.find(dense[b])) component.push_back(label);
    auto successor = [&](int label) {
      auto it = std::find(component.begin(), component.end(), label);
      return (it + 1 == component.end()) ? component.front() : *(it + 1);
    };
    *open = successor(b) == d || successor(d) != b;
  }

  std::map<int, EdgeEnd> head_of;
  std::map<int, EdgeEnd> tail_of;
  for (const auto& [label, list] : ends) {
    const Role r0 = role_of(list[0]);
    const Role r1 = role_of(list[1]);
    if (r0 == r1)
      throw InvalidDiagram("inconsistent strand structure: edge " + std::to_string(label) + " has two " +
                           (r0 == Role::head ? "incoming" : "outgoing") + " ends");
    head_of[label] = r0 == Role::head ? list[0] : list[1];
    tail_of[label] = r0 == Role::tail ? list[0] : list[1];
  }
  auto next_of = [&](int label) {
    const EdgeEnd h = head_of.at(label);
    return at(h.crossing, (h.slot + 2) % 4);
  };

  // Relabel along each component, components ordered by least label.
  std::map<int, int> relabel;
  int counter = 0;
  for (int start : labels) {
    if (relabel.contains(start)) continue;
    int e = start;
    do {
      relabel[e] = ++counter;
      e = next_of(e);
    } while (e != start);
  }
  std::vector<int> old_of_new(static_cast<std::size_t>(counter) + 1);
  for (const auto& [old_label, new_label] : relabel) old_of_new[static_cast<std::size_t>(new_label)] = old_label;

  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int e = 1; e <= counter; ++e) {
    const int c = head_of.at(old_of_new[static_cast<std::size_t>(e)]).crossing;
    if (!seen[static_cast<std::size_t>(c)]) {
      seen[static_cast<std::size_t>(c)] = true;
      order.push_back(c);
    }
  }

  Diagram out;
  for (int k : order) {
    Crossing x;
    for (int s = 0; s < 4; ++s) x.ccw[static_cast<std::size_t>(s)] = relabel.at(at(k, s));
    x.over_forward = *dir[static_cast<std::size_t>(k)];
    out.crossings_.push_back(x);
  }
  for (const auto& j : joins) {
    if (!relabel.contains(j[0]) || !relabel.contains(j[1])) throw InvalidDiagram("join refers to an unknown edge");
    out.joins_.push_back({relabel.at(j[0]), relabel.at(j[1])});
  }
  out.index_edges();
  out.build_arcs();
  return out;
}

void Diagram::index_edges() {
  const std::size_t size = static_cast<std::size_t>(edge_count()) + 1;
  head_.assign(size, {});
  tail_.assign(size, {});
  next_.assign(size, 0);
  component_of_edge_.assign(size, -1);
  for (int k = 0; k < crossing_count(); ++k) {
    const Crossing& x = crossings_[static_cast<std::size_t>(k)];
    for (int s = 0; s < 4; ++s) {
      const int label = x.ccw[static_cast<std::size_t>(s)];
      if (slot_role(s, x.over_forward) == Role::head)
        head_[static_cast<std::size_t>(label)] = {k, s};
      else
        tail_[static_cast<std::size_t>(label)] = {k, s};
    }
  }
  for (int e = 1; e <= edge_count(); ++e) {
    const EdgeEnd h = head_[static_cast<std::size_t>(e)];
    next_[static_cast<std::size_t>(e)] =
        crossings_[static_cast<std::size_t>(h.crossing)].ccw[static_cast<std::size_t>((h.slot + 2) % 4)];
  }
  components_ = 0;
  for (int e = 1; e <= edge_count(); ++e) {
    if (component_of_edge_[static_cast<std::size_t>(e)] >= 0) continue;
    int f = e;
    do {
      component_of_edge_[static_cast<std::size_t>(f)] = components_;
      f = next_[static_cast<std::size_t>(f)];
    } while (f != e);
    ++components_;
  }
}

void Diagram::build_arcs(std::span<const int> forced_order, const Diagram* previous) {
  std::vector<Arc> raw;
  std::vector<int> owner(static_cast<std::size_t>(edge_count()) + 1, -1);
  for (int k = 0; k < crossing_count(); ++k) {
    Arc arc;
    arc.start_crossing = k;
    int e = crossings_[static_cast<std::size_t>(k)].under_out();
    for (;;) {
      arc.edges.push_back(e);
      owner[static_cast<std::size_t>(e)] = static_cast<int>(raw.size());
      const EdgeEnd h = head_[static_cast<std::size_t>(e)];
      if (h.slot == 0) {
        arc.end_crossing = h.crossing;
        break;
      }
      arc.over_at.push_back(h.crossing);
      e = next_[static_cast<std::size_t>(e)];
    }
    raw.push_back(std::move(arc));
  }
  // Components that never pass under form a single closed arc.
  for (int e = 1; e <= edge_count(); ++e) {
    if (owner[static_cast<std::size_t>(e)] >= 0) continue;
    Arc arc;
    int f = e;
    do {
      arc.edges.push_back(f);
      owner[static_cast<std::size_t>(f)] = static_cast<int>(raw.size());
      arc.over_at.push_back(head_[static_cast<std::size_t>(f)].crossing);
      f = next_[static_cast<std::size_t>(f)];
    } while (f != e);
    raw.push_back(std::move(arc));
  }

  const std::size_t m = raw.size();
  std::vector<int> position(m, -1);  // raw index -> final index
  if (!forced_order.empty()) {
    if (forced_order.size() != m) throw DomainError("arc order has the wrong length");
    std::vector<int> inverse(m, -1);
    for (std::size_t p = 0; p < m; ++p) {
      const int old = forced_order[p];
      if (old < 0 || static_cast<std::size_t>(old) >= m || inverse[static_cast<std::size_t>(old)] >= 0)
        throw DomainError("arc order is not a permutation");
      inverse[static_cast<std::size_t>(old)] = static_cast<int>(p);
    }
    for (std::size_t r = 0; r < m; ++r) position[r] = inverse[static_cast<std::size_t>(previous->arc_of_edge(raw[r].edges.front()))];
  } else if (is_alternating(*this) &&
             std::all_of(raw.begin(), raw.end(), [](const Arc& a) { return a.over_at.size() == 1; })) {
    for (std::size_t r = 0; r < m; ++r) position[r] = raw[r].over_at.front();
  } else {
    int next_index = 0;
    for (int e = 1; e <= edge_count(); ++e) {
      const int r = owner[static_cast<std::size_t>(e)];
      if (position[static_cast<std::size_t>(r)] < 0) position[static_cast<std::size_t>(r)] = next_index++;
    }
    const int base = owner[1];
    for (auto& p : position)
      if (p > position[static_cast<std::size_t>(base)]) --p;
    position[static_cast<std::size_t>(base)] = static_cast<int>(m) - 1;
  }

  arcs_.assign(m, {});
  arc_of_edge_.assign(static_cast<std::size_t>(edge_count()) + 1, -1);
  for (std::size_t r = 0; r < m; ++r) {
    const int p = position[r];
    raw[r].index = p;
    for (int e : raw[r].edges) arc_of_edge_[static_cast<std::size_t>(e)] = p;
    arcs_[static_cast<std::size_t>(p)] = std::move(raw[r]);
  }
}

std::vector<std::pair<int, int>> Diagram::joining_arcs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& j : joins_) {
    const int a = arc_of_edge(j[0]);
    const int b = arc_of_edge(j[1]);
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

PdCode Diagram::to_pd() const {
  PdCode code;
  for (const auto& x : crossings_) code.crossings.push_back(x.ccw);
  return code;
}

Diagram Diagram::with_ordering(std::span<const int> crossing_order, std::span<const int> arc_order) const {
  const std::size_t n = crossings_.size();
  if (crossing_order.size() != n) throw DomainError("crossing order has the wrong length");
  std::vector<bool> used(n, false);
  Diagram out;
  for (int k : crossing_order) {
    if (k < 0 || static_cast<std::size_t>(k) >= n || used[static_cast<std::size_t>(k)])
      throw DomainError("crossing order is not a permutation");
    used[static_cast<std::size_t>(k)] = true;
    out.crossings_.push_back(crossings_[static_cast<std::size_t>(k)]);
  }
  out.joins_ = joins_;
  out.index_edges();
  out.build_arcs(arc_order, this);
  return out;
}

int Diagram::euler_characteristic() const {
  const int n = crossing_count();
  if (n == 0) return 2;
  // Darts are edge ends (crossing, slot); the face successor of a dart is
  // found by crossing its edge and turning to the previous slot.
  std::vector<std::vector<bool>> visited(static_cast<std::size_t>(n), std::vector<bool>(4, false));
  auto across = [&](EdgeEnd e) {
    const int label = crossings_[static_cast<std::size_t>(e.crossing)].ccw[static_cast<std::size_t>(e.slot)];
    const EdgeEnd h = head_[static_cast<std::size_t>(label)];
    const EdgeEnd t = tail_[static_cast<std::size_t>(label)];
    return (h.crossing == e.crossing && h.slot == e.slot) ? t : h;
  };
  int faces = 0;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      if (visited[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]) continue;
      ++faces;
      EdgeEnd dart{c, s};
      while (!visited[static_cast<std::size_t>(dart.crossing)][static_cast<std::size_t>(dart.slot)]) {
        visited[static_cast<std::size_t>(dart.crossing)][static_cast<std::size_t>(dart.slot)] = true;
        const EdgeEnd arrive = across(dart);
        dart = {arrive.crossing, (arrive.slot + 3) % 4};
      }
    }
  return n - edge_count() + faces;
}

Diagram from_pd(const PdCode& code) { return Diagram::from_pd(code); }

Diagram braid_closure(const BraidWord& word) {
  if (word.letters.empty()) throw DomainError("braid word is empty");
  const int strands = word.strands;
  std::vector<int> current(static_cast<std::size_t>(strands));
  std::iota(current.begin(), current.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(strands), false);
  int next_label = strands;
  std::vector<std::array<int, 4>> tuples;
  std::vector<std::optional<bool>> dir;
  // Strands run upward; at each crossing ccw from bottom-left is
  // bottom-left, bottom-right, top-right, top-left.
  for (int letter : word.letters) {
    const int i = std::abs(letter);
    if (i < 1 || i >= strands) throw InvalidDiagram("braid letter " + std::to_string(letter) + " out of range");
    const std::size_t left = static_cast<std::size_t>(i - 1);
    const std::size_t right = static_cast<std::size_t>(i);
    used[left] = used[right] = true;
    const int in_left = current[left];
    const int in_right = current[right];
    const int out_left = ++next_label;
    const int out_right = ++next_label;
    if (letter > 0) {
      // bottom-left to top-right passes over
      tuples.push_back({in_right, out_right, out_left, in_left});
      dir.emplace_back(false);
    } else {
      tuples.push_back({in_left, in_right, out_right, out_left});
      dir.emplace_back(true);
    }
    current[left] = out_left;
    current[right] = out_right;
  }
  for (int p = 0; p < strands; ++p)
    if (!used[static_cast<std::size_t>(p)])
      throw InvalidDiagram("strand " + std::to_string(p + 1) + " is not used by any crossing");
  for (auto& t : tuples)
    for (auto& label : t)
      for (int p = 0; p < strands; ++p)
        if (label == current[static_cast<std::size_t>(p)]) label = p + 1;
  return Diagram::from_tuples(tuples, dir);
}

namespace {

// Crossing of an unoriented planar picture: ccw edge ids starting anywhere,
// under_axis selects the under-strand slots {0,2} (0) or {1,3} (1).
struct PlanarCrossing {
  std::array<int, 4> ccw{-1, -1, -1, -1};
  int under_axis = 0;
};

Diagram from_planar(const std::vector<PlanarCrossing>& picture) {
  std::map<int, std::vector<EdgeEnd>> ends;
  for (int k = 0; k < static_cast<int>(picture.size()); ++k)
    for (int s = 0; s < 4; ++s) ends[picture[static_cast<std::size_t>(k)].ccw[static_cast<std::size_t>(s)]].push_back({k, s});
  for (const auto& [id, list] : ends)
    if (id < 0 || list.size() != 2) throw InvalidDiagram("planar picture is not 4-valent");

  std::set<std::pair<int, int>> heads;
  std::set<int> oriented;
  for (const auto& [start, list] : ends) {
    if (oriented.contains(start)) continue;
    int id = start;
    EdgeEnd tail = list[0];
    while (!oriented.contains(id)) {
      oriented.insert(id);
      const auto& l = ends.at(id);
      const EdgeEnd head = (l[0].crossing == tail.crossing && l[0].slot == tail.slot) ? l[1] : l[0];
      heads.insert({head.crossing, head.slot});
      tail = {head.crossing, (head.slot + 2) % 4};
      id = picture[static_cast<std::size_t>(tail.crossing)].ccw[static_cast<std::size_t>(tail.slot)];
    }
  }

  std::vector<std::array<int, 4>> tuples;
  std::vector<std::optional<bool>> dir;
  for (int k = 0; k < static_cast<int>(picture.size()); ++k) {
    const auto& x = picture[static_cast<std::size_t>(k)];
    const int u = x.under_axis;
    const int in = heads.contains({k, u}) ? u : u + 2;
    std::array<int, 4> t{};
    for (int s = 0; s < 4; ++s) t[static_cast<std::size_t>(s)] = x.ccw[static_cast<std::size_t>((in + s) % 4)] + 1;
    tuples.push_back(t);
    dir.emplace_back(heads.contains({k, (in + 1) % 4}));
  }
  return Diagram::from_tuples(tuples, dir);
}

}  // namespace

Diagram pretzel(std::span<const int> columns) {
  if (columns.size() < 2) throw DomainError("a pretzel diagram needs at least two columns");
  for (int p : columns)
    if (p == 0) throw DomainError("pretzel column entries must be nonzero");

  enum Slot { sw = 0, se = 1, ne = 2, nw = 3 };
  std::vector<PlanarCrossing> picture;
  std::vector<int> first;  // first crossing index of each column
  for (int p : columns) {
    first.push_back(static_cast<int>(picture.size()));
    for (int j = 0; j < std::abs(p); ++j) picture.push_back({{-1, -1, -1, -1}, p > 0 ? 1 : 0});
  }
  int next_id = 0;
  auto connect = [&](int ca, int sa, int cb, int sb) {
    picture[static_cast<std::size_t>(ca)].ccw[static_cast<std::size_t>(sa)] = next_id;
    picture[static_cast<std::size_t>(cb)].ccw[static_cast<std::size_t>(sb)] = next_id;
    ++next_id;
  };
  const int k = static_cast<int>(columns.size());
  auto top = [&](int i) { return first[static_cast<std::size_t>(i)]; };
  auto bottom = [&](int i) { return first[static_cast<std::size_t>(i)] + std::abs(columns[static_cast<std::size_t>(i)]) - 1; };
  for (int i = 0; i < k; ++i)
    for (int c = top(i); c < bottom(i); ++c) {
      connect(c, sw, c + 1, nw);
      connect(c, se, c + 1, ne);
    }
  for (int i = 0; i + 1 < k; ++i) {
    connect(top(i), ne, top(i + 1), nw);
    connect(bottom(i), se, bottom(i + 1), sw);
  }
  connect(top(0), nw, top(k - 1), ne);
  connect(bottom(0), sw, bottom(k - 1), se);
  return from_planar(picture);
}

Diagram turks_head(int n) {
  if (n < 2) throw DomainError("Turk's head closure needs n >= 2");
  BraidWord word;
  word.strands = 3;
  for (int i = 0; i < n; ++i) {
    word.letters.push_back(1);
    word.letters.push_back(-2);
  }
  return braid_closure(word);
}

Diagram mirror(const Diagram& d) {
  Diagram out;
  out.crossings_.reserve(d.crossings_.size());
  for (const auto& x : d.crossings_) {
    const auto& [a, b, c, e] = x.ccw;
    // The old over-strand becomes the under-strand; start at its incoming edge.
    Crossing y;
    if (x.over_forward) {
      y.ccw = {b, c, e, a};
      y.over_forward = false;
    } else {
      y.ccw = {e, a, b, c};
      y.over_forward = true;
    }
    out.crossings_.push_back(y);
  }
  out.joins_ = d.joins_;
  out.index_edges();
  out.build_arcs();
  return out;
}

Diagram connected_sum(const Diagram& d1, const Diagram& d2) {
  if (d1.empty() || d2.empty()) throw DomainError("connected sum needs two nonempty diagrams");

  auto joining = [](const Diagram& d) {
    std::set<int> out;
    for (auto [a, b] : d.joining_arcs()) {
      out.insert(a);
      out.insert(b);
    }
    return out;
  };
  const auto skip1 = joining(d1);
  const auto skip2 = joining(d2);
  int arc1 = d1.arc_count() - 1;
  while (arc1 >= 0 && skip1.contains(arc1)) --arc1;
  int arc2 = 0;
  while (arc2 < d2.arc_count() && skip2.contains(arc2)) ++arc2;
  if (arc1 < 0 || arc2 >= d2.arc_count()) throw DomainError("connected sum: no free arc to join along");

  const int offset = d1.edge_count();
  const int x = d1.arcs()[static_cast<std::size_t>(arc1)].edges.front();
  const int y = d2.arcs()[static_cast<std::size_t>(arc2)].edges.front() + offset;

  std::vector<std::array<int, 4>> tuples;
  std::vector<std::optional<bool>> dir;
  for (const auto& c : d1.crossings()) {
    tuples.push_back(c.ccw);
    dir.emplace_back(c.over_forward);
  }
  for (const auto& c : d2.crossings()) {
    auto t = c.ccw;
    for (auto& label : t) label += offset;
    tuples.push_back(t);
    dir.emplace_back(c.over_forward);
  }
  // Swap the incoming ends of x and y: x now runs into d2, y into d1.
  const EdgeEnd hx = d1.head(x);
  const EdgeEnd hy = d2.head(y - offset);
  std::swap(tuples[static_cast<std::size_t>(hx.crossing)][static_cast<std::size_t>(hx.slot)],
            tuples[static_cast<std::size_t>(d1.crossing_count() + hy.crossing)][static_cast<std::size_t>(hy.slot)]);

  std::vector<std::array<int, 2>> joins = d1.joins();
  for (auto j : d2.joins()) joins.push_back({j[0] + offset, j[1] + offset});
  joins.push_back({x, y});
  return Diagram::from_tuples(tuples, dir, joins);
}

const std::vector<Arc>& arcs(const Diagram& d) { return d.arcs(); }

bool is_alternating(const Diagram& d) {
  auto is_under = [&](int e) { return d.head(e).slot == 0; };
  for (int e = 1; e <= d.edge_count(); ++e)
    if (is_under(e) == is_under(d.next_edge(e))) return false;
  return true;
}

bool is_reduced(const Diagram& d) {
  for (int e = 1; e <= d.edge_count(); ++e)
    if (d.head(e).crossing == d.tail(e).crossing) return false;
  const int base = count_components(d, -1, {});
  for (int v = 0; v < d.crossing_count(); ++v)
    if (count_components(d, v, {}) > base) return false;
  return true;
}

bool is_prime_diagram(const Diagram& d) {
  for (int a = 1; a <= d.edge_count(); ++a)
    for (int b = a + 1; b <= d.edge_count(); ++b) {
      const std::array<int, 2> cut{a, b};
      if (count_components(d, -1, cut) > 1) return false;
    }
  return true;
}

}  // namespace kh
