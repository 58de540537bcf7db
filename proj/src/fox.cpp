#include "kh/fox.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "kh/error.hpp"
#include "kh/linalg.hpp"

namespace kh {
namespace {

// Pairs (i < j) of m arcs, indexed lexicographically.
std::size_t pair_count(int m) { return static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2; }

using PairMask = std::vector<std::uint64_t>;

void set_bit(PairMask& mask, std::size_t bit) { mask[bit / 64] |= std::uint64_t{1} << (bit % 64); }

bool covers(const PairMask& have, const PairMask& want) {
  for (std::size_t w = 0; w < want.size(); ++w)
    if ((have[w] & want[w]) != want[w]) return false;
  return true;
}

// Least-cardinality set of masks whose union covers target; ties broken by
// lexicographically least column list.
std::vector<int> exact_cover(const std::vector<PairMask>& masks, const PairMask& target) {
  const int q = static_cast<int>(masks.size());
  const PairMask empty(target.size(), 0);
  if (covers(empty, target)) return {};
  for (int size = 1; size <= q; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::function<bool(int, int, PairMask&)> search = [&](int depth, int from, PairMask& acc) -> bool {
      if (depth == size) return covers(acc, target);
      for (int c = from; c <= q - (size - depth); ++c) {
        PairMask next = acc;
        for (std::size_t w = 0; w < next.size(); ++w) next[w] |= masks[static_cast<std::size_t>(c)][w];
        pick[static_cast<std::size_t>(depth)] = c;
        if (search(depth + 1, c + 1, next)) return true;
      }
      return false;
    };
    PairMask acc = empty;
    if (search(0, 0, acc)) return pick;
  }
  return {};
}

std::vector<int> greedy_cover(const std::vector<PairMask>& masks, const PairMask& target) {
  std::vector<int> out;
  PairMask acc(target.size(), 0);
  while (!covers(acc, target)) {
    int best = -1;
    int best_gain = 0;
    for (int c = 0; c < static_cast<int>(masks.size()); ++c) {
      int gain = 0;
      for (std::size_t w = 0; w < acc.size(); ++w)
        gain += __builtin_popcountll(masks[static_cast<std::size_t>(c)][w] & target[w] & ~acc[w]);
      if (gain > best_gain) {
        best = c;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    out.push_back(best);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= masks[static_cast<std::size_t>(best)][w];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IntMatrix crossing_matrix(const Diagram& d) {
  IntMatrix c(static_cast<std::size_t>(d.crossing_count()), static_cast<std::size_t>(d.arc_count()));
  for (int k = 0; k < d.crossing_count(); ++k) {
    const Crossing& x = d.crossings()[static_cast<std::size_t>(k)];
    const auto row = static_cast<std::size_t>(k);
    c(row, static_cast<std::size_t>(d.arc_of_edge(x.over_in()))) += 2;
    c(row, static_cast<std::size_t>(d.arc_of_edge(x.under_in()))) -= 1;
    c(row, static_cast<std::size_t>(d.arc_of_edge(x.under_out()))) -= 1;
  }
  return c;
}

IntMatrix reduced_crossing_matrix(const IntMatrix& c_prime, std::optional<int> base) {
  const std::size_t limit = std::min(c_prime.rows(), c_prime.cols());
  if (limit == 0) throw DomainError("reduced_crossing_matrix: empty matrix");
  const int b = base.value_or(static_cast<int>(limit) - 1);
  if (b < 0 || static_cast<std::size_t>(b) >= limit)
    throw DomainError("reduced_crossing_matrix: base arc " + std::to_string(b) + " out of range");
  return c_prime.without(static_cast<std::size_t>(b), static_cast<std::size_t>(b));
}

Integer link_determinant(const Diagram& d) {
  if (d.empty()) return 1;
  const IntMatrix c_prime = crossing_matrix(d);
  if (!c_prime.is_square()) return 0;
  return abs(determinant(reduced_crossing_matrix(c_prime)));
}

ColoringGroup group_from_matrix(const IntMatrix& reduced) {
  ColoringGroup g;
  const auto snf = smith_normal_form(reduced);
  g.determinant = 1;
  for (const auto& v : snf.diagonal()) {
    g.determinant *= v;
    if (v > 1) g.invariant_factors.push_back(v);
  }
  if (snf.rank < reduced.cols()) g.determinant = 0;
  std::reverse(g.invariant_factors.begin(), g.invariant_factors.end());
  return g;
}

ColoringGroup coloring_group(const Diagram& d) {
  if (d.empty()) return {};
  if (sgn(link_determinant(d)) == 0) throw DomainError("coloring group is infinite: determinant is zero");
  return group_from_matrix(reduced_crossing_matrix(crossing_matrix(d)));
}

ColoringMatrix coloring_matrix(const Diagram& d, std::optional<int> base) {
  const IntMatrix c_prime = crossing_matrix(d);
  if (c_prime.empty() || !c_prime.is_square()) throw DomainError("coloring matrix: determinant is zero");
  const int b = base.value_or(d.arc_count() - 1);
  const IntMatrix c = reduced_crossing_matrix(c_prime, b);
  if (sgn(determinant(c)) == 0) throw DomainError("coloring matrix: determinant is zero");
  ColoringMatrix cm;
  cm.modulus = group_from_matrix(c).annihilator();
  cm.L = scaled_inverse(c, cm.modulus);
  cm.Lmod = cm.L.mod(cm.modulus);
  cm.base_arc = b;
  cm.arc_count = d.arc_count();
  return cm;
}

bool is_fox_coloring(const Diagram& d, std::span<const Integer> colors, const Integer& k) {
  if (k < 2) throw DomainError("is_fox_coloring: modulus must be at least 2");
  if (colors.size() != static_cast<std::size_t>(d.arc_count()))
    throw DomainError("is_fox_coloring: expected " + std::to_string(d.arc_count()) + " colors, got " +
                      std::to_string(colors.size()));
  for (const auto& x : d.crossings()) {
    auto color = [&](int edge) -> const Integer& { return colors[static_cast<std::size_t>(d.arc_of_edge(edge))]; };
    const Integer relation = 2 * color(x.over_in()) - color(x.under_in()) - color(x.under_out());
    if (!mpz_divisible_p(relation.get_mpz_t(), k.get_mpz_t())) return false;
  }
  return true;
}

ColoringEnumeration enumerate_colorings(const Diagram& d, const Integer& k) {
  if (k < 2) throw DomainError("enumerate_colorings: modulus must be at least 2");
  const int m = d.arc_count();
  Integer space;
  mpz_pow_ui(space.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(m));
  ColoringEnumeration out;
  if (space > Integer(1) << 24) {
    out.count = count_solutions_mod(crossing_matrix(d), k);
    return out;
  }

  const long modulus = k.get_si();
  struct Check {
    int over, under_a, under_b;
  };
  std::vector<std::vector<Check>> checks(static_cast<std::size_t>(m));
  for (const auto& x : d.crossings()) {
    Check c{d.arc_of_edge(x.over_in()), d.arc_of_edge(x.under_in()), d.arc_of_edge(x.under_out())};
    checks[static_cast<std::size_t>(std::max({c.over, c.under_a, c.under_b}))].push_back(c);
  }
  std::vector<long> value(static_cast<std::size_t>(m), 0);
  std::vector<FoxColoring> found;
  std::function<void(int)> assign = [&](int arc) {
    if (arc == m) {
      FoxColoring f{k, {}};
      for (long v : value) f.colors.emplace_back(v);
      found.push_back(std::move(f));
      return;
    }
    for (long v = 0; v < modulus; ++v) {
      value[static_cast<std::size_t>(arc)] = v;
      bool ok = true;
      for (const auto& c : checks[static_cast<std::size_t>(arc)]) {
        const long r = 2 * value[static_cast<std::size_t>(c.over)] - value[static_cast<std::size_t>(c.under_a)] -
                       value[static_cast<std::size_t>(c.under_b)];
        if (r % modulus != 0) {
          ok = false;
          break;
        }
      }
      if (ok) assign(arc + 1);
    }
  };
  assign(0);
  out.count = static_cast<unsigned long>(found.size());
  out.colorings = std::move(found);
  return out;
}

FoxColoring column_coloring(const ColoringMatrix& cm, int j) {
  if (j < 0 || static_cast<std::size_t>(j) >= cm.Lmod.cols())
    throw DomainError("column_coloring: column " + std::to_string(j) + " out of range");
  FoxColoring f{cm.modulus, std::vector<Integer>(static_cast<std::size_t>(cm.arc_count), Integer(0))};
  for (int a = 0; a < cm.arc_count; ++a) {
    if (a == cm.base_arc) continue;
    const int r = a < cm.base_arc ? a : a - 1;
    f.colors[static_cast<std::size_t>(a)] = cm.Lmod(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
  }
  return f;
}

std::vector<std::pair<int, int>> unseparated_pairs(std::span<const FoxColoring> colorings, int arc_count) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < arc_count; ++i)
    for (int j = i + 1; j < arc_count; ++j) {
      const bool separated = std::any_of(colorings.begin(), colorings.end(), [&](const FoxColoring& f) {
        return f.colors[static_cast<std::size_t>(i)] != f.colors[static_cast<std::size_t>(j)];
      });
      if (!separated) out.emplace_back(i, j);
    }
  return out;
}

DistinguishingReport distinguishing_report(const Diagram& d, std::optional<int> base) {
  DistinguishingReport report;
  report.matrix = coloring_matrix(d, base);
  report.trivial_group = report.matrix.modulus == 1;
  const int m = d.arc_count();
  const int q = static_cast<int>(report.matrix.Lmod.cols());
  std::vector<FoxColoring> columns;
  for (int j = 0; j < q; ++j) columns.push_back(column_coloring(report.matrix, j));

  const std::size_t words = (pair_count(m) + 63) / 64;
  std::vector<PairMask> masks(static_cast<std::size_t>(q), PairMask(words, 0));
  PairMask separable(words, 0);
  std::size_t bit = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j, ++bit) {
      PairSeparation p{i, j, std::nullopt};
      for (int c = 0; c < q; ++c) {
        const auto& colors = columns[static_cast<std::size_t>(c)].colors;
        if (colors[static_cast<std::size_t>(i)] == colors[static_cast<std::size_t>(j)]) continue;
        if (!p.column) p.column = c;
        set_bit(masks[static_cast<std::size_t>(c)], bit);
      }
      if (p.column)
        set_bit(separable, bit);
      else
        report.failures.emplace_back(i, j);
      report.pairs.push_back(p);
    }
  if (report.failures.empty())
    for (int c = 0; c < q; ++c)
      if (covers(masks[static_cast<std::size_t>(c)], separable)) report.total_columns.push_back(c);

  constexpr int exact_limit = 20;
  report.cover_exact = q <= exact_limit;
  report.minimum_cover = report.cover_exact ? exact_cover(masks, separable) : greedy_cover(masks, separable);
  return report;
}

DistinguishingSet minimal_distinguishing_set(const Diagram& d) {
  const IntMatrix c_prime = crossing_matrix(d);
  if (c_prime.empty() || !c_prime.is_square()) throw DomainError("minimal_distinguishing_set: determinant is zero");
  const int base = d.arc_count() - 1;
  const IntMatrix c = reduced_crossing_matrix(c_prime, base);
  const auto snf = smith_normal_form(c);
  if (snf.rank < c.cols()) throw DomainError("minimal_distinguishing_set: determinant is zero");

  Integer n1 = 1;
  for (const auto& v : snf.diagonal()) n1 = std::max(n1, v);
  DistinguishingSet out;
  const auto diagonal = snf.diagonal();
  for (std::size_t i = diagonal.size(); i-- > 0;) {
    if (diagonal[i] <= 1) continue;
    const Integer scale = n1 / diagonal[i];
    FoxColoring f{n1, std::vector<Integer>(static_cast<std::size_t>(d.arc_count()), Integer(0))};
    for (int a = 0; a < d.arc_count(); ++a) {
      if (a == base) continue;
      f.colors[static_cast<std::size_t>(a)] = residue(scale * snf.V(static_cast<std::size_t>(a), i), n1);
    }
    out.colorings.push_back(std::move(f));
  }
  out.undistinguished = unseparated_pairs(out.colorings, d.arc_count());
  return out;
}

}  // namespace kh
