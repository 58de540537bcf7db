#include "kh/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "kh/codec.hpp"
#include "kh/error.hpp"
#include "kh/fixtures.hpp"
#include "kh/fox.hpp"
#include "kh/linalg.hpp"
#include "kh/pseudo.hpp"
#include "kh/report_json.hpp"
#include "kh/verify.hpp"

namespace kh {
namespace {

using json = nlohmann::ordered_json;

struct InputOptions {
  std::string pd;
  std::string braid;
  std::string name;
  std::string pretzel;
  int turks_head = 0;
  bool mirror = false;
};

struct Options {
  std::string fixtures_path;
  InputOptions input;
  bool json = false;
  int base = -1;
  std::string which = "all";
  long modulus = 0;
  bool list = false;
  bool all_fixtures = false;
  std::string colors;
  std::vector<std::string> parts;
  std::uint64_t seed = 1;
  int count = 10;
  int max_crossings = 10;
};

struct Loaded {
  Diagram diagram;
  std::string id;
};

// Runs fn(i) for i in [0, n) on a small pool; fn must not throw.
template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string group_text(const ColoringGroup& g) {
  if (g.invariant_factors.empty()) return "0";
  std::string out;
  for (const auto& f : g.invariant_factors) out += (out.empty() ? "Z" : " + Z") + to_string(f);
  return out;
}

std::string join(const std::vector<Integer>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + to_string(v[i]);
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string pairs_text(const std::vector<ArcPair>& pairs) {
  if (pairs.empty()) return "none";
  std::string out;
  for (const auto& [a, b] : pairs) out += (out.empty() ? "" : " ") + ("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return out;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& x : m.row(r)) row.push_back(to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

json integers_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  std::vector<int> out;
  int v = 0;
  while (is >> v) out.push_back(v);
  if (!is.eof() || out.empty()) throw ParseError(std::string("bad ") + what + " list '" + text + "'", 0);
  return out;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  std::vector<Integer> out;
  std::string tok;
  while (is >> tok) {
    Integer v;
    if (v.set_str(tok, 10) != 0) throw ParseError("bad integer '" + tok + "' in color list", 0);
    out.push_back(v);
  }
  return out;
}

Diagram resolve_text(const std::string& text, const std::vector<FixtureEntry>& table) {
  if (auto f = find_fixture(table, text)) return load_diagram(f->input);
  return load_diagram(text);
}

Loaded load_input(const InputOptions& o, const std::vector<FixtureEntry>& table, std::istream& in) {
  const int given = !o.pd.empty() + !o.braid.empty() + !o.name.empty() + !o.pretzel.empty() + (o.turks_head != 0);
  if (given > 1) throw Error("give at most one of --pd, --braid, --name, --pretzel, --turks-head");
  Loaded l;
  if (!o.pd.empty()) {
    l = {from_pd(parse_pd(o.pd)), o.pd};
  } else if (!o.braid.empty()) {
    l = {braid_closure(parse_braid(o.braid)), "braid " + o.braid};
  } else if (!o.name.empty()) {
    const auto f = find_fixture(table, o.name);
    if (!f) throw Error("unknown fixture '" + o.name + "'");
    l = {load_diagram(f->input), o.name};
  } else if (!o.pretzel.empty()) {
    l = {pretzel(parse_int_list(o.pretzel, "pretzel")), "pretzel " + o.pretzel};
  } else if (o.turks_head != 0) {
    l = {turks_head(o.turks_head), "turks-head " + std::to_string(o.turks_head)};
  } else {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw Error("no input diagram (stdin is empty)");
    l = {load_diagram(text), "stdin"};
  }
  if (o.mirror) {
    l.diagram = mirror(l.diagram);
    l.id = "mirror of " + l.id;
  }
  return l;
}

std::vector<FixtureEntry> load_table(const std::string& path) {
  if (path.empty()) return builtin_fixtures();
  std::ifstream f(path);
  if (!f) throw Error("cannot read fixture file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_fixtures(ss.str());
}

void print_report(std::ostream& out, const VerificationReport& r) {
  const auto& h = r.hypotheses;
  out << "diagram: " << r.id << "\n"
      << "hypotheses: alternating " << yes_no(h.alternating) << ", reduced " << yes_no(h.reduced)
      << ", prime (diagrammatic) " << yes_no(h.prime) << ", components " << h.component_count << "\n"
      << "determinant: " << to_string(r.group.determinant) << "\n"
      << "group: " << group_text(r.group) << "\n"
      << "part (a) some n1-coloring separates every arc pair: " << (r.part_a.pass ? "pass" : "FAIL") << "\n"
      << "part (b) columns of L mod n1 separate every arc pair: " << (r.part_b.pass ? "pass" : "FAIL") << ", t = "
      << r.part_b.t << (r.part_b.t_exact ? "" : " (greedy bound)") << ", columns " << join_ints(r.part_b.witness_columns)
      << "\n"
      << "part (c) s generator colorings separate every arc pair: " << (r.part_c.pass ? "pass" : "FAIL")
      << ", s = " << r.part_c.s << "\n"
      << "unseparated pairs: " << pairs_text(r.failures) << "\n"
      << "pseudo colorings from C^-1: ";
  if (r.pseudo_found.empty()) {
    out << "none\n";
  } else {
    out << r.pseudo_found.size() << " (columns";
    for (const auto& p : r.pseudo_found) out << " " << p.column;
    out << ")\n";
  }
  if (r.connected_sum) {
    const auto& c = *r.connected_sum;
    out << "joining arc pairs: " << pairs_text(c.joining_pairs) << "\n"
        << "joining arcs equal in every column: " << yes_no(c.joining_equal) << "\n"
        << "all other pairs separated: " << yes_no(c.others_distinguished) << "\n"
        << "group is the direct sum of the parts (" << group_text(c.expected_group) << "): " << yes_no(c.direct_sum)
        << "\n";
  }
  if (!r.consistent) out << "warning: parts (a), (b), (c) are mutually inconsistent\n";
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

int cmd_parse(const Options& o, const Loaded& l, std::ostream& out) {
  const Diagram& d = l.diagram;
  std::vector<std::vector<int>> arc_edges;
  for (const auto& a : d.arcs()) {
    arc_edges.emplace_back();
    for (int e : a.edges) arc_edges.back().push_back(e + 1);
  }
  if (o.json) {
    out << json{{"pd", serialize_pd(d.to_pd())},
                {"crossings", d.crossing_count()},
                {"arcs", d.arc_count()},
                {"components", d.component_count()},
                {"alternating", is_alternating(d)},
                {"reduced", is_reduced(d)},
                {"primeDiagrammatic", is_prime_diagram(d)},
                {"arcEdges", arc_edges}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "pd: " << serialize_pd(d.to_pd()) << "\n"
      << "crossings: " << d.crossing_count() << "\n"
      << "arcs: " << d.arc_count() << "\n"
      << "components: " << d.component_count() << "\n"
      << "alternating: " << yes_no(is_alternating(d)) << "\n"
      << "reduced: " << yes_no(is_reduced(d)) << "\n"
      << "prime (diagrammatic): " << yes_no(is_prime_diagram(d)) << "\n";
  for (std::size_t i = 0; i < arc_edges.size(); ++i) {
    out << "arc " << i << ": edges";
    for (int e : arc_edges[i]) out << " " << e;
    out << "\n";
  }
  return 0;
}

int cmd_det(const Options& o, const Loaded& l, std::ostream& out) {
  const auto det = link_determinant(l.diagram);
  if (o.json)
    out << json{{"determinant", to_json(det)}}.dump() << "\n";
  else
    out << to_string(det) << "\n";
  return 0;
}

int cmd_group(const Options& o, const Loaded& l, std::ostream& out) {
  const auto g = coloring_group(l.diagram);
  if (o.json)
    out << to_json(g).dump() << "\n";
  else
    out << group_text(g) << " (determinant " << to_string(g.determinant) << ")\n";
  return 0;
}

int cmd_matrix(const Options& o, const Loaded& l, std::ostream& out) {
  static const std::vector<std::string> kinds{"cprime", "c", "l", "lmod"};
  const bool all = o.which == "all";
  std::optional<int> base;
  if (o.base >= 0) base = o.base;
  const IntMatrix c_prime = crossing_matrix(l.diagram);
  json j = json::object();
  auto emit = [&](const std::string& key, const std::string& title, const IntMatrix& m) {
    if (!all && o.which != key) return;
    if (o.json)
      j[key] = matrix_json(m);
    else
      out << title << ":\n" << m << "\n";
  };
  emit("cprime", "C'", c_prime);
  emit("c", "C", reduced_crossing_matrix(c_prime, base));
  if (all || o.which == "l" || o.which == "lmod") {
    const auto cm = coloring_matrix(l.diagram, base);
    emit("l", "L (n1 = " + to_string(cm.modulus) + ")", cm.L);
    emit("lmod", "L mod " + to_string(cm.modulus), cm.Lmod);
    if (o.json) {
      j["modulus"] = to_json(cm.modulus);
      j["baseArc"] = cm.base_arc;
    }
  }
  if (o.json) out << j.dump(2) << "\n";
  return 0;
}

int cmd_colorings(const Options& o, const Loaded& l, std::ostream& out) {
  const Integer k = o.modulus;
  const auto e = enumerate_colorings(l.diagram, k);
  if (o.json) {
    json j{{"modulus", o.modulus}, {"count", to_json(e.count)}};
    if (o.list && e.colorings) {
      json list = json::array();
      for (const auto& f : *e.colorings) list.push_back(integers_json(f.colors));
      j["colorings"] = std::move(list);
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "Fox " << o.modulus << "-colorings: " << to_string(e.count) << "\n";
  if (o.list) {
    if (!e.colorings) {
      out << "(too many arcs to list; count only)\n";
    } else {
      for (const auto& f : *e.colorings) out << join(f.colors) << "\n";
    }
  }
  return 0;
}

int cmd_distinguish(const Options& o, const Loaded& l, std::ostream& out) {
  std::optional<int> base;
  if (o.base >= 0) base = o.base;
  const auto rep = distinguishing_report(l.diagram, base);
  const auto gens = minimal_distinguishing_set(l.diagram);
  const int q = static_cast<int>(rep.matrix.Lmod.cols());
  if (o.json) {
    json cols = json::array();
    for (int c = 0; c < q; ++c) cols.push_back(integers_json(column_coloring(rep.matrix, c).colors));
    json g = json::array();
    for (const auto& f : gens.colorings) g.push_back({{"modulus", to_json(f.modulus)}, {"colors", integers_json(f.colors)}});
    json failures = json::array();
    for (const auto& [a, b] : rep.failures) failures.push_back({a, b});
    json undist = json::array();
    for (const auto& [a, b] : gens.undistinguished) undist.push_back({a, b});
    out << json{{"modulus", to_json(rep.matrix.modulus)},
                {"baseArc", rep.matrix.base_arc},
                {"columns", cols},
                {"failures", failures},
                {"t", rep.minimum_cover.size()},
                {"tExact", rep.cover_exact},
                {"witnessColumns", rep.minimum_cover},
                {"totalColumns", rep.total_columns},
                {"generators", g},
                {"generatorFailures", undist}}
               .dump(2)
        << "\n";
    return rep.failures.empty() && gens.undistinguished.empty() ? 0 : 1;
  }
  out << "n1 = " << to_string(rep.matrix.modulus) << ", base arc " << rep.matrix.base_arc << "\n"
      << "columns of L mod n1 as colorings:\n";
  for (int c = 0; c < q; ++c) out << "  column " << c << ": " << join(column_coloring(rep.matrix, c).colors) << "\n";
  out << "pairs no column separates: " << pairs_text(rep.failures) << "\n"
      << "least separating column set (t = " << rep.minimum_cover.size() << (rep.cover_exact ? "" : ", greedy")
      << "): " << join_ints(rep.minimum_cover) << "\n"
      << "columns separating every pair alone: " << join_ints(rep.total_columns) << "\n"
      << "generator colorings (s = " << gens.colorings.size() << "):\n";
  for (const auto& f : gens.colorings) out << "  mod " << to_string(f.modulus) << ": " << join(f.colors) << "\n";
  out << "pairs the generators leave together: " << pairs_text(gens.undistinguished) << "\n";
  return rep.failures.empty() && gens.undistinguished.empty() ? 0 : 1;
}

int cmd_verify_all(const Options& o, const std::vector<FixtureEntry>& table, std::ostream& out) {
  struct Outcome {
    std::vector<std::string> mismatches;
    std::optional<VerificationReport> report;
    std::string error;
  };
  std::vector<Outcome> results(table.size());
  parallel_for(table.size(), [&](std::size_t i) {
    try {
      results[i].mismatches = check_fixture(table[i]);
      results[i].report = verify_gkh(load_diagram(table[i].input), table[i].name);
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  });
  bool ok = true;
  json j = json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& r = results[i];
    const bool reproduces = r.error.empty() && r.mismatches.empty();
    ok = ok && reproduces;
    if (o.json) {
      json item{{"name", table[i].name}, {"reproduces", reproduces}, {"mismatches", r.mismatches}};
      if (!r.error.empty()) item["error"] = r.error;
      if (r.report) item["report"] = to_json(*r.report);
      j.push_back(std::move(item));
      continue;
    }
    out << table[i].name << ": ";
    if (!r.error.empty()) {
      out << "ERROR " << r.error << "\n";
      continue;
    }
    out << "det " << to_string(r.report->group.determinant) << ", " << group_text(r.report->group) << ", gkh "
        << (r.report->passed() ? "pass" : "fail") << ", expected values " << (reproduces ? "reproduce" : "DIFFER");
    for (const auto& m : r.mismatches) out << "; " << m;
    out << "\n";
  }
  if (o.json)
    out << j.dump(2) << "\n";
  else
    out << (ok ? "all fixtures reproduce" : "some fixtures differ") << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const Options& o, const Loaded& l, std::ostream& out) {
  const auto r = verify_gkh(l.diagram, l.id);
  if (o.json)
    out << to_json(r).dump(2) << "\n";
  else
    print_report(out, r);
  return r.passed() ? 0 : 1;
}

json pseudo_json(const PseudoColoring& p) {
  return {{"epsilon", p.epsilon},
          {"plusCrossing", p.plus_crossing},
          {"epsCrossing", p.eps_crossing},
          {"colors", integers_json(p.colors)},
          {"defects", integers_json(p.defects)}};
}

std::string pseudo_text(const PseudoColoring& p) {
  return "epsilon " + std::string(p.epsilon > 0 ? "+1" : "-1") + ", +1 at crossing " + std::to_string(p.plus_crossing) +
         ", epsilon at crossing " + std::to_string(p.eps_crossing) + ", colors " + join(p.colors);
}

int cmd_pseudo(const Options& o, const Loaded& l, std::ostream& out) {
  const Diagram& d = l.diagram;
  if (!o.colors.empty()) {
    const auto colors = parse_integer_list(o.colors);
    const auto c = classify_assignment(d, colors);
    const char* kind = c.kind == AssignmentKind::fox ? "fox" : c.kind == AssignmentKind::pseudo ? "pseudo" : "neither";
    if (o.json) {
      json j{{"kind", kind}, {"defects", integers_json(c.defects)}};
      if (c.pseudo) j["pseudo"] = pseudo_json(*c.pseudo);
      out << j.dump(2) << "\n";
    } else {
      out << "defects: " << join(c.defects) << "\n" << "classification: " << kind << "\n";
      if (c.pseudo) out << "pseudo coloring: " << pseudo_text(*c.pseudo) << "\n";
    }
    return 0;
  }

  const auto relations = row_relations(d);
  const auto columns = pseudo_from_inverse_columns(d);
  std::optional<PseudoColoring> tunnel;
  if (!is_alternating(d)) tunnel = tunnel_pseudo(d);
  if (o.json) {
    json rel = json::array();
    for (const auto& r : relations) rel.push_back(integers_json(r.coefficients));
    json cols = json::array();
    for (const auto& c : columns) {
      json item = pseudo_json(c.coloring);
      item["column"] = c.column;
      cols.push_back(std::move(item));
    }
    json j{{"rowRelations", rel}, {"inverseColumns", cols}};
    j["tunnel"] = tunnel ? pseudo_json(*tunnel) : json(nullptr);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "row relations of C':\n";
  for (const auto& r : relations) out << "  " << join(r.coefficients) << "\n";
  out << "integral columns of C^-1 giving pseudo colorings: " << (columns.empty() ? "none" : "") << "\n";
  for (const auto& c : columns) out << "  column " << c.column << ": " << pseudo_text(c.coloring) << "\n";
  out << "tunnel pseudo coloring: " << (tunnel ? pseudo_text(*tunnel) : "none (diagram is alternating)") << "\n";
  return 0;
}

int cmd_sum(const Options& o, const std::vector<FixtureEntry>& table, std::ostream& out) {
  std::vector<Diagram> parts;
  std::string id;
  for (const auto& p : o.parts) {
    constexpr std::string_view prefix = "mirror:";
    const bool mirrored = p.starts_with(prefix);
    const std::string body = mirrored ? p.substr(prefix.size()) : p;
    Diagram d = resolve_text(body, table);
    parts.push_back(mirrored ? mirror(d) : d);
    id += (id.empty() ? "" : " # ") + (mirrored ? "mirror " + body : body);
  }
  const auto r = verify_connected_sum(parts, id);
  if (o.json)
    out << to_json(r).dump(2) << "\n";
  else
    print_report(out, r);
  return r.passed() ? 0 : 1;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  if (o.count < 0) throw Error("--count must be nonnegative");
  struct Outcome {
    std::optional<Diagram> diagram;
    std::optional<VerificationReport> report;
    std::string error;
  };
  std::vector<Outcome> results(static_cast<std::size_t>(o.count));
  parallel_for(results.size(), [&](std::size_t i) {
    try {
      const auto seed = o.seed + i;
      results[i].diagram = random_alternating_diagram(o.max_crossings, seed);
      results[i].report = verify_gkh(*results[i].diagram, "seed " + std::to_string(seed));
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  });
  int passed = 0;
  json j = json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const bool ok = r.error.empty() && r.report->passed() && r.report->pseudo_found.empty();
    passed += ok;
    if (o.json) {
      json item{{"seed", o.seed + i}, {"pass", ok}};
      if (r.diagram) item["pd"] = serialize_pd(r.diagram->to_pd());
      if (r.report) item["report"] = to_json(*r.report);
      if (!r.error.empty()) item["error"] = r.error;
      j.push_back(std::move(item));
      continue;
    }
    out << "seed " << o.seed + i << ": ";
    if (!r.error.empty()) {
      out << "ERROR " << r.error << "\n";
      continue;
    }
    out << r.diagram->crossing_count() << " crossings, " << group_text(r.report->group) << ", "
        << (ok ? "pass" : "FAIL") << ", " << serialize_pd(r.diagram->to_pd()) << "\n";
  }
  if (o.json)
    out << j.dump(2) << "\n";
  else
    out << passed << "/" << results.size() << " passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

void add_input_options(CLI::App* sub, Options& o) {
  auto* g = sub->add_option_group("input", "diagram source (default: PD text or braid word on stdin)");
  g->add_option("--pd", o.input.pd, "PD code, e.g. PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]");
  g->add_option("--braid", o.input.braid, "braid word, e.g. \"1 -2 1 -2\" or \"strands=3; 1 2\"");
  g->add_option("--name", o.input.name, "fixture name, e.g. 7_7");
  g->add_option("--pretzel", o.input.pretzel, "pretzel parameters, e.g. 3,3,-2");
  g->add_option("--turks-head", o.input.turks_head, "Turk's head diagram with n columns");
  sub->add_flag("--mirror", o.input.mirror, "use the mirror image");
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fox colorings, coloring groups and arc distinguishing for link diagrams", "kh"};
  app.require_subcommand(1);
  app.add_option("--fixtures", o.fixtures_path, "fixture table to use instead of the built-in one");

  auto* parse = app.add_subcommand("parse", "canonical PD code, arcs and diagram predicates");
  auto* det = app.add_subcommand("det", "determinant");
  auto* group = app.add_subcommand("group", "invariant factors of the reduced coloring group");
  auto* matrix = app.add_subcommand("matrix", "crossing matrix C', reduced matrix C, coloring matrix L and L mod n1");
  auto* colorings = app.add_subcommand("colorings", "count (and list) Fox k-colorings");
  auto* distinguish = app.add_subcommand("distinguish", "which columns of L mod n1 separate which arcs");
  auto* verify = app.add_subcommand("verify", "check the distinguishing property end to end");
  auto* pseudo = app.add_subcommand("pseudo", "row relations and pseudo colorings");
  auto* sum = app.add_subcommand("sum", "verify an iterated connected sum");
  auto* fuzz = app.add_subcommand("fuzz", "verify random reduced alternating prime diagrams");

  for (auto* sub : {parse, det, group, matrix, colorings, distinguish, verify, pseudo}) add_input_options(sub, o);
  for (auto* sub : {parse, det, group, matrix, colorings, distinguish, verify, pseudo, sum, fuzz})
    sub->add_flag("--json", o.json, "machine-readable output");
  for (auto* sub : {matrix, distinguish}) sub->add_option("--base", o.base, "base arc (0-based; default the last arc)");
  matrix->add_option("--which", o.which, "matrix to print")->check(CLI::IsMember({"cprime", "c", "l", "lmod", "all"}));
  colorings->add_option("--mod", o.modulus, "modulus k >= 2")->required();
  colorings->add_flag("--list", o.list, "list the colorings when there are few enough");
  verify->add_flag("--all-fixtures", o.all_fixtures, "verify every fixture and check its expected values");
  pseudo->add_option("--colors", o.colors, "classify this integer arc assignment instead");
  sum->add_option("--part", o.parts, "summand: fixture name, PD or braid text; prefix mirror: to mirror it")
      ->required();
  fuzz->add_option("--seed", o.seed, "first seed")->capture_default_str();
  fuzz->add_option("--count", o.count, "number of diagrams")->capture_default_str();
  fuzz->add_option("--max-crossings", o.max_crossings, "crossing bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "kh: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const auto table = load_table(o.fixtures_path);
    auto* sub = app.get_subcommands().front();
    if (sub == sum) return cmd_sum(o, table, out);
    if (sub == fuzz) return cmd_fuzz(o, out);
    if (sub == verify && o.all_fixtures) return cmd_verify_all(o, table, out);
    const Loaded l = load_input(o.input, table, in);
    if (sub == parse) return cmd_parse(o, l, out);
    if (sub == det) return cmd_det(o, l, out);
    if (sub == group) return cmd_group(o, l, out);
    if (sub == matrix) return cmd_matrix(o, l, out);
    if (sub == colorings) return cmd_colorings(o, l, out);
    if (sub == distinguish) return cmd_distinguish(o, l, out);
    if (sub == verify) return cmd_verify(o, l, out);
    return cmd_pseudo(o, l, out);
  } catch (const Error& e) {
    err << "kh: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace kh
