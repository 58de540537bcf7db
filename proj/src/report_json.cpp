#include "kh/report_json.hpp"

namespace kh {
namespace {

using json = nlohmann::ordered_json;

json pairs_json(const std::vector<ArcPair>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

json integers_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

json to_json(const Integer& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

json to_json(const ColoringGroup& group) {
  return {{"factors", integers_json(group.invariant_factors)}, {"determinant", to_json(group.determinant)}};
}

json to_json(const VerificationReport& r) {
  json pseudo = json::array();
  for (const auto& p : r.pseudo_found)
    pseudo.push_back({{"column", p.column},
                      {"epsilon", p.coloring.epsilon},
                      {"plusCrossing", p.coloring.plus_crossing},
                      {"epsCrossing", p.coloring.eps_crossing},
                      {"colors", integers_json(p.coloring.colors)}});
  json colorings = json::array();
  for (const auto& f : r.part_c.colorings)
    colorings.push_back({{"modulus", to_json(f.modulus)}, {"colors", integers_json(f.colors)}});

  json out = {
      {"name", r.id},
      {"hypotheses",
       {{"alternating", r.hypotheses.alternating},
        {"reduced", r.hypotheses.reduced},
        {"primeDiagrammatic", r.hypotheses.prime},
        {"determinant", to_json(r.hypotheses.determinant)},
        {"components", r.hypotheses.component_count},
        {"guaranteed", r.hypotheses.guaranteed()}}},
      {"determinant", to_json(r.group.determinant)},
      {"factors", integers_json(r.group.invariant_factors)},
      {"partA", {{"pass", r.part_a.pass}, {"failures", pairs_json(r.part_a.failures)}}},
      {"partB",
       {{"pass", r.part_b.pass},
        {"t", r.part_b.t},
        {"tExact", r.part_b.t_exact},
        {"witnessColumns", r.part_b.witness_columns},
        {"totalColumns", r.part_b.total_columns}}},
      {"partC", {{"pass", r.part_c.pass}, {"s", r.part_c.s}, {"colorings", colorings}}},
      {"failures", pairs_json(r.failures)},
      {"pseudo", {{"found", pseudo}}},
      {"consistent", r.consistent},
      {"passed", r.passed()},
  };
  if (r.connected_sum) {
    const auto& c = *r.connected_sum;
    out["connectedSum"] = {{"joiningPairs", pairs_json(c.joining_pairs)},
                           {"joiningEqual", c.joining_equal},
                           {"othersDistinguished", c.others_distinguished},
                           {"directSum", c.direct_sum},
                           {"expectedFactors", integers_json(c.expected_group.invariant_factors)},
                           {"nonJoiningFailures", pairs_json(c.non_joining_failures)}};
  }
  return out;
}

}  // namespace kh
