#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kh/diagram.hpp"
#include "kh/int_matrix.hpp"

namespace kh {

// One row of the fixture table: a named diagram and the values it must
// reproduce.
struct FixtureEntry {
  std::string name;
  std::string input;  // PD text or braid word
  Integer determinant;
  std::vector<Integer> factors;
  std::vector<std::string> flags;
  std::string provenance;  // "published" or "computed"

  bool has_flag(std::string_view flag) const;
};

// Tab-separated rows; blank lines and lines starting with '#' are skipped.
// Throws Error naming the offending line.
std::vector<FixtureEntry> parse_fixtures(std::string_view text);

// The table compiled into the library from data/fixtures.tsv.
const std::vector<FixtureEntry>& builtin_fixtures();

std::optional<FixtureEntry> find_fixture(std::span<const FixtureEntry> table, std::string_view name);

// "PD[...]" is read as PD text, anything else as a braid word.
Diagram load_diagram(std::string_view text);

// Human-readable mismatches between the entry and what the library computes;
// empty when everything reproduces.
std::vector<std::string> check_fixture(const FixtureEntry& entry);

}  // namespace kh
