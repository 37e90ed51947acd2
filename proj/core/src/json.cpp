#include "eolab/json.hpp"

namespace eolab {

using nlohmann::json;

json to_json(const OrderPattern& p) {
  return json(std::vector<OrderPattern::Rank>(p.begin(), p.end()));
}

json to_json(const ListingPrefix& prefix) {
  return json(std::vector<Natural>(prefix.begin(), prefix.end()));
}

json to_json(const IndexPair& pair) { return json::array({pair.i, pair.j}); }

json to_json(const PairSet& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back(to_json(p));
  return out;
}

json to_json(const Chain& chain) {
  json out = json::array();
  for (const auto& p : chain.patterns) out.push_back(to_json(p));
  return out;
}

json to_json(const Antichain& antichain) {
  json out = json::array();
  for (const auto& p : antichain.patterns) out.push_back(to_json(p));
  return out;
}

json to_json(const DovetailTrace& trace) {
  return json{{"emitted", trace.emitted},
              {"rounds", trace.rounds},
              {"truncated", trace.truncated}};
}

json to_json(const WitnessReport& report) {
  json out{{"status", to_string(report.status)},
           {"relation", to_string(report.relation)},
           {"k", report.k},
           {"w", report.window},
           {"choicesA", nullptr},
           {"choicesB", nullptr},
           {"prefixA", nullptr},
           {"prefixB", nullptr},
           {"patternA", nullptr},
           {"patternB", nullptr},
           {"nodesExplored", report.nodes_explored},
           {"restriction", kSearchRestriction}};
  if (report.witness) {
    out["choicesA"] = report.witness->first.choices;
    out["choicesB"] = report.witness->second.choices;
  }
  if (report.prefixes) {
    out["prefixA"] = to_json(report.prefixes->first);
    out["prefixB"] = to_json(report.prefixes->second);
    out["patternA"] = to_json(pattern_of(report.prefixes->first));
    out["patternB"] = to_json(pattern_of(report.prefixes->second));
  }
  return out;
}

json to_json(const NativeComparison& cmp) {
  auto violation = [](const std::optional<IndexPair>& v) {
    return v ? to_json(*v) : json(nullptr);
  };
  return json{{"patternA", to_json(cmp.pattern_a)},
              {"patternB", to_json(cmp.pattern_b)},
              {"aLeqB", cmp.a_leq_b},
              {"bLeqA", cmp.b_leq_a},
              {"uniform", cmp.uniform},
              {"aLeqBViolation", violation(cmp.a_leq_b_violation)},
              {"bLeqAViolation", violation(cmp.b_leq_a_violation)}};
}

json to_json(const oracle::OracleReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back(json{{"check", f.what},
                            {"inputs", f.inputs},
                            {"expected", f.expected},
                            {"actual", f.actual}});
  }
  return json{{"suite", report.suite},
              {"params", report.params},
              {"checked", report.checked},
              {"failures", failures},
              {"stats", report.stats}};
}

}  // namespace eolab
