#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace kh {

// Planar-diagram code. Each crossing lists four edge labels counterclockwise,
// starting at the incoming edge of the under-strand; the under-strand
// therefore runs from entry 0 to entry 2.
struct PdCode {
  std::vector<std::array<int, 4>> crossings;

  friend bool operator==(const PdCode&, const PdCode&) = default;
};

// Signed braid generators: i is sigma_i, -i its inverse.
struct BraidWord {
  std::vector<int> letters;
  int strands = 2;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Grammar: PD[ X(a,b,c,d) {, X(a,b,c,d)}* ] with optional whitespace.
// Throws ParseError on syntax errors and InvalidDiagram when the labels are
// not exactly 1..2n with every label used twice.
PdCode parse_pd(std::string_view text);

std::string serialize_pd(const PdCode& code);

// Checks the label invariants of a PdCode built in code.
void validate_pd(const PdCode& code);

// Grammar: [strands=k;] nonzero integers separated by whitespace.
BraidWord parse_braid(std::string_view text);

std::string serialize_braid(const BraidWord& word);

}  // namespace kh
