#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "kh/codec.hpp"
#include "kh/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kh;

TEST_CASE("trefoil PD parses and has nine 3-colorings") {
  const auto pd = parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]");
  REQUIRE(pd.crossings.size() == 3);
  CHECK(pd.crossings[0] == std::array{1, 4, 2, 5});
  CHECK(oracle::pd_coloring_count(pd, 3) == 9);
}

TEST_CASE("whitespace is allowed anywhere between tokens") {
  const auto a = parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]");
  const auto b = parse_pd("  PD [ X( 1 , 4 ,2,5 ) ,\n X(3,6,4,1),X (5,2,6,3) ] ");
  CHECK(a == b);
}

TEST_CASE("missing label is reported as non-contiguous") {
  try {
    parse_pd("PD[X(1,4,2,5)]");
    FAIL("expected an error");
  } catch (const InvalidDiagram& e) {
    CHECK(std::string(e.what()).find("not contiguous") != std::string::npos);
  }
}

TEST_CASE("one-crossing code is accepted") {
  const auto pd = parse_pd("PD[X(2,1,1,2)]");
  CHECK(pd.crossings.size() == 1);
  CHECK(serialize_pd(pd) == "PD[X(2,1,1,2)]");
}

TEST_CASE("label used three times is rejected") {
  CHECK_THROWS_AS(parse_pd("PD[X(1,2,1,2),X(1,3,4,4)]"), InvalidDiagram);
}

TEST_CASE("syntax errors carry the offset") {
  try {
    parse_pd("PD[X(1,4,2,5),X(3,6,4,1) X(5,2,6,3)]");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 25);
  }
  CHECK_THROWS_AS(parse_pd("PD[]"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[X(1,2,3)]"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)] extra"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[X(0,1,1,2)]"), ParseError);
}

TEST_CASE("serialize_pd is the inverse of parse_pd") {
  const std::string text = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";
  CHECK(serialize_pd(parse_pd(text)) == text);
  for (const auto& e : builtin_fixtures()) {
    if (!e.input.starts_with("PD")) continue;
    const auto pd = parse_pd(e.input);
    CHECK(parse_pd(serialize_pd(pd)) == pd);
  }
}

TEST_CASE("braid words") {
  const auto w = parse_braid("1 1 1");
  CHECK(w.letters == std::vector{1, 1, 1});
  CHECK(w.strands == 2);

  const auto w5 = parse_braid("1 -2 1 -2 1 -2 1 -2 1 -2");
  CHECK(w5.letters.size() == 10);
  CHECK(w5.strands == 3);

  const auto explicit_strands = parse_braid("strands=4; 1 -2");
  CHECK(explicit_strands.strands == 4);
  CHECK(parse_braid(serialize_braid(explicit_strands)) == explicit_strands);

  CHECK_THROWS_AS(parse_braid("0 1"), ParseError);
  CHECK_THROWS_AS(parse_braid(""), ParseError);
  CHECK_THROWS_AS(parse_braid("strands=2; 1 2"), ParseError);
  CHECK_THROWS_AS(parse_braid("strands=1; 1"), ParseError);
  CHECK_THROWS_AS(parse_braid("1 x"), ParseError);
}

TEST_CASE("random label corruption never slips through") {
  const auto base = parse_pd("PD[X(1,6,2,7),X(3,8,4,9),X(5,10,6,1),X(7,2,8,3),X(9,4,10,5)]");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto pd = base;
    const auto c = rng() % pd.crossings.size();
    const auto s = rng() % 4;
    const int old = pd.crossings[c][s];
    const int label = 1 + static_cast<int>(rng() % 12);
    if (label == old) continue;
    pd.crossings[c][s] = label;
    std::map<int, int> counts;
    for (const auto& x : pd.crossings)
      for (int l : x) ++counts[l];
    const bool valid = std::all_of(counts.begin(), counts.end(), [](auto& kv) { return kv.second == 2; }) &&
                       counts.rbegin()->first == 10;
    CHECK_FALSE(valid);
    CHECK_THROWS_AS(parse_pd(serialize_pd(pd)), InvalidDiagram);
  }
}
