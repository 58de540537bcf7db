#include "kh/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "kh/codec.hpp"
#include "kh/error.hpp"
#include "kh/fox.hpp"
#include "kh/verify.hpp"

namespace kh {

extern const char* const builtin_fixture_text;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Integer parse_integer(const std::string& s, std::size_t line) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw Error("fixtures line " + std::to_string(line) + ": bad integer '" + s + "'");
  return v;
}

std::string join(const std::vector<Integer>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ",") + to_string(x);
  return out;
}

}  // namespace

bool FixtureEntry::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

std::vector<FixtureEntry> parse_fixtures(std::string_view text) {
  std::vector<FixtureEntry> out;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = split(line, '\t');
    if (cols.size() != 6)
      throw Error("fixtures line " + std::to_string(line_no) + ": expected 6 tab-separated fields, got " +
                  std::to_string(cols.size()));
    FixtureEntry e;
    e.name = cols[0];
    e.input = cols[1];
    e.determinant = parse_integer(cols[2], line_no);
    if (cols[3] != "-")
      for (const auto& f : split(cols[3], ',')) e.factors.push_back(parse_integer(f, line_no));
    if (cols[4] != "-")
      for (auto& f : split(cols[4], ',')) e.flags.push_back(std::move(f));
    e.provenance = cols[5];
    if (e.name.empty() || e.input.empty())
      throw Error("fixtures line " + std::to_string(line_no) + ": empty name or input");
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<FixtureEntry>& builtin_fixtures() {
  static const std::vector<FixtureEntry> table = parse_fixtures(builtin_fixture_text);
  return table;
}

std::optional<FixtureEntry> find_fixture(std::span<const FixtureEntry> table, std::string_view name) {
  for (const auto& e : table)
    if (e.name == name) return e;
  return std::nullopt;
}

Diagram load_diagram(std::string_view text) {
  const auto t = trim(text);
  if (t.starts_with("PD")) return from_pd(parse_pd(t));
  return braid_closure(parse_braid(t));
}

std::vector<std::string> check_fixture(const FixtureEntry& entry) {
  std::vector<std::string> out;
  const Diagram d = load_diagram(entry.input);
  const Integer det = link_determinant(d);
  if (det != entry.determinant)
    out.push_back("determinant " + to_string(det) + ", expected " + to_string(entry.determinant));
  if (sgn(det) == 0) return out;

  const auto group = coloring_group(d);
  if (group.invariant_factors != entry.factors)
    out.push_back("factors " + join(group.invariant_factors) + ", expected " + join(entry.factors));

  auto flag = [&](const char* name, bool actual) {
    if (actual != entry.has_flag(name))
      out.push_back(std::string(name) + (actual ? " holds but is not listed" : " is listed but fails"));
  };
  flag("alternating", is_alternating(d));
  flag("reduced", is_reduced(d));
  flag("prime", is_prime_diagram(d));
  flag("gkh", verify_gkh(d, entry.name).passed());
  return out;
}

}  // namespace kh
