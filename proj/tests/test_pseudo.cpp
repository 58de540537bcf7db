#include <doctest.h>

#include <algorithm>

#include "figures.hpp"
#include "kh/codec.hpp"
#include "kh/error.hpp"
#include "kh/linalg.hpp"
#include "kh/fox.hpp"
#include "kh/pseudo.hpp"
#include "kh/verify.hpp"
#include "support.hpp"

using namespace kh;
using support::fixture;
using support::ints;

namespace {

Diagram conway_ordered() {
  const auto d = figures::match_crossing_matrix(fixture("conway"), figures::conway_c_prime);
  REQUIRE(d);
  return *d;
}

Diagram t34_ordered() {
  const auto d = figures::match_crossing_matrix(fixture("8_19"), figures::t34_c_prime);
  REQUIRE(d);
  return *d;
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_pseudo_invariants(const Diagram& d, const PseudoColoring& p) {
  CHECK(crossing_matrix(d) * p.colors == p.defects);
  CHECK(p.plus_crossing != p.eps_crossing);
  CHECK(p.defects[static_cast<std::size_t>(p.plus_crossing)] == 1);
  CHECK(p.defects[static_cast<std::size_t>(p.eps_crossing)] == p.epsilon);
  CHECK(std::count_if(p.defects.begin(), p.defects.end(), [](const Integer& x) { return x != 0; }) == 2);
  if (p.epsilon == 1) CHECK(p.plus_crossing < p.eps_crossing);
  for (const auto& r : row_relations(d)) CHECK(dot(r.coefficients, p.defects) == 0);
}

}  // namespace

TEST_CASE("row relations") {
  for (const auto& name : support::gkh_fixtures()) {
    const auto d = fixture(name);
    const auto rel = row_relations(d);
    REQUIRE(rel.size() == 1);
    CHECK(rel[0].coefficients == std::vector<Integer>(static_cast<std::size_t>(d.crossing_count()), 1));
  }
  CHECK(row_relations(conway_ordered())[0].coefficients == ints({1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1}));
  CHECK(row_relations(t34_ordered())[0].coefficients == ints({1, 1, -1, -1, -1, -1, -1, -1}));

  // Nonzero determinant leaves a one-dimensional left kernel, whatever the component count.
  const auto w6 = fixture("w6");
  CHECK(row_relations(w6).size() == 1);
  for (const auto& r : row_relations(fixture("hopf"))) CHECK(crossing_matrix(fixture("hopf")).transpose() * r.coefficients == ints({0, 0}));
}

TEST_CASE("classify_assignment examples") {
  const auto square = figures::find_alternating_order(fixture("square"), figures::square_c);
  REQUIRE(square);
  const auto sq = classify_assignment(square->diagram, ints({1, 1, 1, 0, 0, 0}));
  REQUIRE(sq.kind == AssignmentKind::pseudo);
  CHECK(sq.pseudo->epsilon == -1);
  check_pseudo_invariants(square->diagram, *sq.pseudo);

  const auto t34 = t34_ordered();
  const auto tc = classify_assignment(t34, ints({0, -1, 0, 0, 0, 0, 0, 0}));
  REQUIRE(tc.kind == AssignmentKind::pseudo);
  CHECK(tc.pseudo->epsilon == 1);
  check_pseudo_invariants(t34, *tc.pseudo);

  CHECK(classify_assignment(t34, std::vector<Integer>(8, 0)).kind == AssignmentKind::fox);
  CHECK(classify_assignment(t34, std::vector<Integer>(8, 4)).kind == AssignmentKind::fox);
  CHECK(classify_assignment(fixture("3_1"), ints({0, 0, 1})).kind == AssignmentKind::neither);
  CHECK_THROWS_AS(classify_assignment(t34, ints({0, 1})), DomainError);
}

TEST_CASE("negated assignments are normalized") {
  const auto t34 = t34_ordered();
  const auto plus = classify_assignment(t34, ints({0, -1, 0, 0, 0, 0, 0, 0}));
  const auto minus = classify_assignment(t34, ints({0, 1, 0, 0, 0, 0, 0, 0}));
  REQUIRE(minus.kind == AssignmentKind::pseudo);
  CHECK(minus.pseudo->colors == plus.pseudo->colors);
  CHECK(minus.pseudo->epsilon == 1);
  // The raw defects are kept as computed.
  for (std::size_t i = 0; i < plus.defects.size(); ++i) CHECK(minus.defects[i] == -plus.defects[i]);
}

TEST_CASE("integral columns of the inverse: T(3,4)") {
  const auto t34 = t34_ordered();
  const auto adj = scaled_inverse(reduced_crossing_matrix(crossing_matrix(t34)), 3);
  CHECK(adj == figures::t34_c_inverse_times3);

  const auto found = pseudo_from_inverse_columns(t34);
  REQUIRE(found.size() == 3);
  std::vector<int> columns;
  int minus = 0;
  int plus = 0;
  for (const auto& f : found) {
    columns.push_back(f.column);
    (f.coloring.epsilon == 1 ? plus : minus)++;
    check_pseudo_invariants(t34, f.coloring);
  }
  CHECK(columns == std::vector<int>{0, 1, 4});
  CHECK(minus == 1);
  CHECK(plus == 2);
}

TEST_CASE("integral columns of the inverse: Conway knot") {
  const auto conway = conway_ordered();
  const auto inv = scaled_inverse(reduced_crossing_matrix(crossing_matrix(conway)), 1);
  IntMatrix stacked(11, 10);
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t c = 0; c < 10; ++c) stacked(r, c) = inv(r, c);
  CHECK(stacked == figures::conway_l);

  const auto found = pseudo_from_inverse_columns(conway);
  auto column = [&](int j) {
    return std::find_if(found.begin(), found.end(), [&](const InverseColumnPseudo& f) { return f.column == j; });
  };
  REQUIRE(column(0) != found.end());
  REQUIRE(column(3) != found.end());
  CHECK(column(0)->coloring.epsilon == -1);
  CHECK(column(3)->coloring.epsilon == 1);
  for (const auto& f : found) check_pseudo_invariants(conway, f.coloring);
}

TEST_CASE("integral columns of the inverse: errors and alternating diagrams") {
  CHECK(pseudo_from_inverse_columns(fixture("3_1")).empty());
  CHECK_THROWS_AS(pseudo_from_inverse_columns(braid_closure(parse_braid("1 -1"))), DomainError);
}

TEST_CASE("tunnels") {
  const auto t34 = t34_ordered();
  const auto p = tunnel_pseudo(t34);
  CHECK(p.epsilon == 1);
  CHECK(std::count(p.colors.begin(), p.colors.end(), Integer(-1)) == 1);
  CHECK(std::count(p.colors.begin(), p.colors.end(), Integer(0)) == 7);
  check_pseudo_invariants(t34, p);

  for (const char* name : {"conway", "8_19"}) {
    const auto d = fixture(name);
    const auto q = tunnel_pseudo(d);
    const auto c = classify_assignment(d, q.colors);
    REQUIRE(c.kind == AssignmentKind::pseudo);
    CHECK(*c.pseudo == q);
  }
  CHECK_THROWS_AS(tunnel_pseudo(fixture("3_1")), DomainError);
}

TEST_CASE("lifted columns of L have defect n1 e_j") {
  for (const auto& name : support::gkh_fixtures()) {
    const auto d = fixture(name);
    const auto cm = coloring_matrix(d);
    const std::size_t n = static_cast<std::size_t>(d.crossing_count());
    for (std::size_t j = 0; j + 1 < n; ++j) {
      std::vector<Integer> colors(n, 0);
      for (std::size_t r = 0; r + 1 < n; ++r) colors[r] = cm.L(r, j);
      const auto c = classify_assignment(d, colors);
      for (std::size_t i = 0; i + 1 < n; ++i) CHECK(c.defects[i] == (i == j ? cm.modulus : Integer(0)));
      CHECK(c.defects[n - 1] == -cm.modulus);
    }
  }
}

TEST_CASE("no small pseudo colorings on reduced alternating prime diagrams") {
  for (const char* name : {"3_1", "4_1", "5_2", "7_7", "hopf"}) {
    const auto d = fixture(name);
    const auto c_prime = crossing_matrix(d);
    const std::size_t arcs = static_cast<std::size_t>(d.arc_count());
    REQUIRE(arcs <= 7);
    std::vector<long> x(arcs, -2);
    long pseudo = 0;
    while (true) {
      int nonzero = 0;
      bool units = true;
      for (std::size_t r = 0; r < c_prime.rows(); ++r) {
        long s = 0;
        for (std::size_t a = 0; a < arcs; ++a) s += c_prime(r, a).get_si() * x[a];
        if (s != 0) {
          ++nonzero;
          units = units && (s == 1 || s == -1);
        }
      }
      pseudo += (nonzero == 2 && units);
      std::size_t i = 0;
      while (i < arcs && ++x[i] == 3) x[i++] = -2;
      if (i == arcs) break;
    }
    CHECK_MESSAGE(pseudo == 0, name);
  }
}
