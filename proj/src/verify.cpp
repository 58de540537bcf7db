#include "kh/verify.hpp"

#include <algorithm>
#include <random>

#include "kh/codec.hpp"
#include "kh/error.hpp"
#include "kh/linalg.hpp"

namespace kh {
namespace {

Hypotheses hypotheses_of(const Diagram& d) {
  Hypotheses h;
  h.alternating = is_alternating(d);
  h.reduced = is_reduced(d);
  h.prime = is_prime_diagram(d);
  h.determinant = link_determinant(d);
  h.component_count = d.component_count();
  return h;
}

PartA check_part_a(const Diagram& d) {
  PartA a;
  const auto snf = smith_normal_form(crossing_matrix(d));
  const int m = d.arc_count();
  std::vector<Integer> v(static_cast<std::size_t>(m), Integer(0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      v[static_cast<std::size_t>(i)] = 1;
      v[static_cast<std::size_t>(j)] = -1;
      if (in_row_space(snf, v)) a.failures.emplace_back(i, j);
      v[static_cast<std::size_t>(i)] = 0;
      v[static_cast<std::size_t>(j)] = 0;
    }
  a.pass = a.failures.empty();
  return a;
}

ColoringGroup direct_sum(std::span<const ColoringGroup> groups) {
  std::vector<Integer> factors;
  for (const auto& g : groups) factors.insert(factors.end(), g.invariant_factors.begin(), g.invariant_factors.end());
  IntMatrix diag(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) diag(i, i) = factors[i];
  return group_from_matrix(diag);
}

}  // namespace

bool VerificationReport::passed() const {
  if (!consistent) return false;
  // Joining arcs of a sum are never separated, so sums are judged by their own checks.
  if (connected_sum)
    return connected_sum->joining_equal && connected_sum->others_distinguished && connected_sum->direct_sum;
  if (!(part_a.pass && part_b.pass && part_c.pass)) return false;
  return !hypotheses.guaranteed() || pseudo_found.empty();
}

VerificationReport verify_gkh(const Diagram& d, std::string id) {
  VerificationReport r;
  r.id = std::move(id);
  r.hypotheses = hypotheses_of(d);
  if (sgn(r.hypotheses.determinant) == 0) throw DomainError("verify: determinant is zero");
  r.group = coloring_group(d);

  r.part_a = check_part_a(d);

  const auto dist = distinguishing_report(d);
  r.failures = dist.failures;
  r.part_b.pass = dist.failures.empty();
  r.part_b.witness_columns = dist.minimum_cover;
  r.part_b.t = static_cast<int>(dist.minimum_cover.size());
  r.part_b.t_exact = dist.cover_exact;
  r.part_b.total_columns = dist.total_columns;

  auto gens = minimal_distinguishing_set(d);
  r.part_c.s = static_cast<int>(gens.colorings.size());
  r.part_c.colorings = std::move(gens.colorings);
  r.part_c.failures = std::move(gens.undistinguished);
  r.part_c.pass = r.part_c.failures.empty();

  r.pseudo_found = pseudo_from_inverse_columns(d);
  r.consistent = (r.part_a.pass == r.part_b.pass) && (!r.part_c.pass || r.part_b.pass);
  return r;
}

VerificationReport verify_connected_sum(std::span<const Diagram> parts, std::string id) {
  if (parts.empty()) throw DomainError("verify_connected_sum: no parts");
  std::vector<ColoringGroup> groups;
  for (const auto& p : parts) {
    if (sgn(link_determinant(p)) == 0) throw DomainError("verify_connected_sum: a part has zero determinant");
    groups.push_back(coloring_group(p));
  }
  Diagram sum = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) sum = connected_sum(sum, parts[i]);

  VerificationReport r = verify_gkh(sum, std::move(id));
  ConnectedSumChecks c;
  c.joining_pairs = sum.joining_arcs();
  for (auto& [a, b] : c.joining_pairs)
    if (a > b) std::swap(a, b);
  std::sort(c.joining_pairs.begin(), c.joining_pairs.end());

  const auto cm = coloring_matrix(sum);
  c.joining_equal = true;
  for (int j = 0; j < static_cast<int>(cm.Lmod.cols()); ++j) {
    const auto col = column_coloring(cm, j);
    for (const auto& [a, b] : c.joining_pairs)
      if (col.colors[static_cast<std::size_t>(a)] != col.colors[static_cast<std::size_t>(b)]) c.joining_equal = false;
  }
  for (const auto& f : r.failures)
    if (!std::binary_search(c.joining_pairs.begin(), c.joining_pairs.end(), f)) c.non_joining_failures.push_back(f);
  c.others_distinguished = c.non_joining_failures.empty();
  c.expected_group = direct_sum(groups);
  c.direct_sum = c.expected_group == r.group;
  r.connected_sum = std::move(c);
  return r;
}

Integer brute_force_coloring_count(const Diagram& d, int k) {
  if (k < 2) throw DomainError("brute_force_coloring_count: modulus must be at least 2");
  const int m = d.arc_count();
  constexpr double limit = 1 << 24;
  double space = 1;
  for (int i = 0; i < m; ++i) {
    space *= k;
    if (space > limit) throw DomainError("brute_force_coloring_count: k^arcs exceeds 2^24");
  }
  if (m == 0) return k;  // crossingless unknot: one arc

  std::vector<std::array<int, 3>> relations;  // over, under, under
  for (const auto& x : d.crossings())
    relations.push_back({d.arc_of_edge(x.over_in()), d.arc_of_edge(x.under_in()), d.arc_of_edge(x.under_out())});

  std::vector<int> colors(static_cast<std::size_t>(m), 0);
  long count = 0;
  while (true) {
    const bool ok = std::all_of(relations.begin(), relations.end(), [&](const std::array<int, 3>& rel) {
      const int v = 2 * colors[static_cast<std::size_t>(rel[0])] - colors[static_cast<std::size_t>(rel[1])] -
                    colors[static_cast<std::size_t>(rel[2])];
      return v % k == 0;
    });
    if (ok) ++count;
    int i = 0;
    while (i < m && ++colors[static_cast<std::size_t>(i)] == k) colors[static_cast<std::size_t>(i++)] = 0;
    if (i == m) break;
  }
  return count;
}

Diagram random_alternating_diagram(int max_crossings, std::uint64_t seed) {
  if (max_crossings < 3) throw DomainError("random_alternating_diagram: max_crossings must be at least 3");
  std::mt19937_64 rng(seed);
  // Plain modulo keeps the stream identical across standard libraries.
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };

  constexpr int attempts = 10000;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const int n = pick(3, max_crossings);
    const int strands = pick(2, std::max(2, n / 2 + 1));
    BraidWord w;
    w.strands = strands;
    std::vector<int> uses(static_cast<std::size_t>(strands), 0);
    for (int i = 0; i < n; ++i) {
      const int g = pick(1, strands - 1);
      ++uses[static_cast<std::size_t>(g)];
      w.letters.push_back(g % 2 == 1 ? g : -g);
    }
    // A generator used once gives a nugatory crossing, unused ones split the closure.
    if (std::any_of(uses.begin() + 1, uses.end(), [](int u) { return u < 2; })) continue;
    Diagram d = braid_closure(w);
    if (!is_reduced(d) || !is_prime_diagram(d) || sgn(link_determinant(d)) == 0) continue;
    return d;
  }
  throw DomainError("random_alternating_diagram: no admissible diagram after " + std::to_string(attempts) + " attempts");
}

}  // namespace kh
