#include <doctest.h>

#include <algorithm>

#include "figures.hpp"
#include "kh/codec.hpp"
#include "kh/error.hpp"
#include "kh/linalg.hpp"
#include "kh/verify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kh;
using support::fixture;
using support::ints;

TEST_CASE("reduced alternating prime fixtures pass every part") {
  for (const auto& name : support::gkh_fixtures()) {
    CAPTURE(name);
    const auto d = fixture(name);
    const auto r = verify_gkh(d, name);
    CHECK(r.id == name);
    CHECK(r.hypotheses.guaranteed());
    CHECK(r.part_a.pass);
    CHECK(r.part_b.pass);
    CHECK(r.part_c.pass);
    CHECK(r.failures.empty());
    CHECK(r.consistent);
    CHECK(r.pseudo_found.empty());
    CHECK(r.passed());
    CHECK(r.part_c.s == static_cast<int>(r.group.rank()));
    CHECK(r.part_c.s < d.crossing_count());
    CHECK(r.part_b.t == static_cast<int>(r.part_b.witness_columns.size()));
  }
}

TEST_CASE("group shapes and witness sizes") {
  const auto w6 = verify_gkh(fixture("w6"));
  CHECK(w6.group.invariant_factors == ints({40, 8}));
  CHECK(w6.part_c.s == 2);
  CHECK(w6.hypotheses.component_count == 3);

  const auto p5 = verify_gkh(fixture("p33333"));
  CHECK(p5.group.invariant_factors == ints({15, 3, 3, 3}));
  CHECK(p5.part_c.s == 4);

  // Two columns of L suffice for P(3,3,3,6).
  const auto p4 = verify_gkh(fixture("p3336"));
  CHECK(p4.group.invariant_factors == ints({21, 3, 3}));
  CHECK(p4.part_b.t <= 2);
  CHECK(p4.part_b.t_exact);
}

TEST_CASE("7_7 in the reference ordering needs at most four columns") {
  const auto found = figures::find_alternating_order(fixture("7_7"), scaled_inverse(figures::l_7_7, 21), &figures::l_7_7);
  REQUIRE(found);
  const auto r = verify_gkh(found->diagram, "7_7");
  CHECK(r.passed());
  CHECK(r.part_b.t <= 4);
  CHECK(r.part_b.total_columns == std::vector<int>{1, 3, 4, 5});
  CHECK(r.group.invariant_factors == ints({21}));
}

TEST_CASE("square knot fails only on the joining arcs") {
  const auto t = fixture("3_1");
  const auto square = connected_sum(mirror(t), t);
  const auto r = verify_gkh(square, "square");
  CHECK_FALSE(r.hypotheses.guaranteed());
  CHECK_FALSE(r.hypotheses.prime);
  CHECK_FALSE(r.part_a.pass);
  CHECK_FALSE(r.part_b.pass);
  CHECK(r.consistent);
  CHECK_FALSE(r.passed());
  auto joins = square.joining_arcs();
  REQUIRE(joins.size() == 1);
  const ArcPair joining{std::min(joins[0].first, joins[0].second), std::max(joins[0].first, joins[0].second)};
  CHECK(r.failures == std::vector<ArcPair>{joining});
  CHECK(r.part_a.failures == std::vector<ArcPair>{joining});
}

TEST_CASE("zero determinant is rejected") {
  CHECK_THROWS_AS(verify_gkh(braid_closure(parse_braid("1 -1"))), DomainError);
}

TEST_CASE("connected sums") {
  const auto t = fixture("3_1");
  const std::vector<Diagram> square{mirror(t), t};
  const auto r = verify_connected_sum(square, "square");
  REQUIRE(r.connected_sum);
  CHECK(r.connected_sum->joining_pairs.size() == 1);
  CHECK(r.connected_sum->joining_equal);
  CHECK(r.connected_sum->others_distinguished);
  CHECK(r.connected_sum->direct_sum);
  CHECK(r.group.invariant_factors == ints({3, 3}));
  CHECK(r.passed());

  const std::vector<Diagram> mixed{t, fixture("4_1")};
  const auto m = verify_connected_sum(mixed);
  CHECK(m.group.invariant_factors == ints({15}));
  CHECK(m.passed());
  const auto sum = connected_sum(t, fixture("4_1"));
  CHECK(brute_force_coloring_count(sum, 3) == 9);
  CHECK(brute_force_coloring_count(sum, 5) == 25);

  const std::vector<Diagram> three{t, fixture("4_1"), fixture("5_2")};
  const auto tr = verify_connected_sum(three);
  CHECK(tr.connected_sum->joining_pairs.size() == 2);
  CHECK(tr.group.invariant_factors == ints({105}));
  CHECK(tr.passed());

  const std::vector<Diagram> single{t};
  const auto s = verify_connected_sum(single);
  CHECK(s.passed());
  CHECK(s.part_a.pass);
  CHECK(s.group == verify_gkh(t).group);

  CHECK_THROWS_AS(verify_connected_sum(std::span<const Diagram>{}), DomainError);
  const std::vector<Diagram> split{t, braid_closure(parse_braid("1 -1"))};
  CHECK_THROWS_AS(verify_connected_sum(split), DomainError);
}

TEST_CASE("brute force counts") {
  const auto t = fixture("3_1");
  const std::vector<long> trefoil{2, 9, 4, 5, 18};
  for (int k = 2; k <= 6; ++k) CHECK(brute_force_coloring_count(t, k) == trefoil[static_cast<std::size_t>(k - 2)]);

  const auto h = fixture("hopf");
  CHECK(brute_force_coloring_count(h, 2) == 4);
  CHECK(brute_force_coloring_count(h, 2) == count_solutions_mod(crossing_matrix(h), 2));

  CHECK(brute_force_coloring_count(Diagram{}, 5) == 5);
  CHECK_THROWS_AS(brute_force_coloring_count(t, 1), DomainError);
  CHECK_THROWS_AS(brute_force_coloring_count(fixture("p33333"), 15), DomainError);
}

TEST_CASE("brute force agrees with the closed form and the PD oracle") {
  for (const auto& e : builtin_fixtures()) {
    const auto d = load_diagram(e.input);
    if (d.arc_count() > 8) continue;
    CAPTURE(e.name);
    const auto g = coloring_group(d);
    for (int k = 2; k <= 6; ++k) {
      Integer expected = k;
      for (const auto& n : g.invariant_factors) {
        Integer gcd;
        mpz_gcd(gcd.get_mpz_t(), n.get_mpz_t(), Integer(k).get_mpz_t());
        expected *= gcd;
      }
      CHECK(brute_force_coloring_count(d, k) == expected);
      CHECK(brute_force_coloring_count(d, k) == Integer(static_cast<unsigned long>(oracle::pd_coloring_count(d.to_pd(), k))));
    }
  }
}

TEST_CASE("random alternating diagrams") {
  CHECK(random_alternating_diagram(8, 1) == random_alternating_diagram(8, 1));
  CHECK_THROWS_AS(random_alternating_diagram(2, 1), DomainError);
  const auto d = random_alternating_diagram(8, 1);
  CHECK(verify_gkh(d).passed());
  CHECK(d.crossing_count() <= 8);
}

TEST_CASE("fuzzed reduced alternating prime diagrams") {
  int distinct_sizes = 0;
  std::vector<bool> seen(11, false);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    CAPTURE(seed);
    const auto d = random_alternating_diagram(10, seed);
    REQUIRE(d.crossing_count() <= 10);
    CHECK(is_alternating(d));
    CHECK(is_reduced(d));
    CHECK(is_prime_diagram(d));
    const auto r = verify_gkh(d);
    CHECK(r.passed());
    CHECK(r.failures.empty());
    CHECK(r.pseudo_found.empty());
    CHECK(pseudo_from_inverse_columns(d).empty());
    if (!seen[static_cast<std::size_t>(d.crossing_count())]) ++distinct_sizes;
    seen[static_cast<std::size_t>(d.crossing_count())] = true;
  }
  CHECK(distinct_sizes >= 4);
}
