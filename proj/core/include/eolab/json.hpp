#pragma once

// JSON forms of the library's values. Patterns and prefixes are arrays of
// naturals; pair sets are sorted arrays of [i, j].

#include <nlohmann/json.hpp>

#include "eolab/oracle.hpp"
#include "eolab/pattern.hpp"
#include "eolab/poset.hpp"
#include "eolab/program.hpp"
#include "eolab/search.hpp"

namespace eolab {

nlohmann::json to_json(const OrderPattern& p);
nlohmann::json to_json(const ListingPrefix& prefix);
nlohmann::json to_json(const PairSet& pairs);
nlohmann::json to_json(const IndexPair& pair);
nlohmann::json to_json(const Chain& chain);
nlohmann::json to_json(const Antichain& antichain);

// {"emitted": [...], "rounds": r, "truncated": b}
nlohmann::json to_json(const DovetailTrace& trace);

// {"status", "relation", "k", "w", "choicesA", "choicesB", "prefixA",
//  "prefixB", "patternA", "patternB", "nodesExplored", "restriction"};
// witness fields are null unless status is witness_found.
nlohmann::json to_json(const WitnessReport& report);

nlohmann::json to_json(const NativeComparison& cmp);

// {"suite", "params", "checked", "failures", "stats"}
nlohmann::json to_json(const oracle::OracleReport& report);

}  // namespace eolab
