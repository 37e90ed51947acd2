#pragma once

// Bounded witness search for the set-level relations: do listings of A and
// B exist, among the window-w reorderings of their native enumerations,
// whose length-k prefixes are eo-related (or uniform)?
//
// A found witness is a prefix witness only. An exhausted space refutes the
// relation within (k, w) and says nothing about unrestricted listings.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "eolab/pattern.hpp"
#include "eolab/program.hpp"
#include "eolab/scheduler.hpp"

namespace eolab {

enum class Relation { eo_leq, uniform };
enum class SearchStatus { witness_found, space_exhausted, budget_exceeded };

std::string_view to_string(Relation relation);
std::string_view to_string(SearchStatus status);

inline constexpr std::string_view kSearchRestriction =
    "prefix witness search: listings range over window-w explicit reorderings "
    "of each program's native dovetail order, compared on length-k prefixes; "
    "space_exhausted refutes only this restricted family";

struct SearchBudget {
  std::size_t k = 1;
  std::size_t window = 1;
  std::size_t max_nodes = 100000;
  std::size_t round_cap = 1000;
};

struct WitnessReport {
  SearchStatus status = SearchStatus::space_exhausted;
  Relation relation = Relation::eo_leq;
  std::size_t k = 0;
  std::size_t window = 0;
  // Explicit schedulers for A and B (present iff witness_found).
  std::optional<std::pair<Scheduler, Scheduler>> witness;
  std::optional<std::pair<ListingPrefix, ListingPrefix>> prefixes;
  std::size_t nodes_explored = 0;
};

struct NativeComparison {
  OrderPattern pattern_a;
  OrderPattern pattern_b;
  bool a_leq_b = false;
  bool b_leq_a = false;
  bool uniform = false;
  // Least violating pair for each failing direction.
  std::optional<IndexPair> a_leq_b_violation;
  std::optional<IndexPair> b_leq_a_violation;
};

// First k native elements of program. Throws InsufficientEnumeration if the
// dovetail is truncated first.
std::vector<Natural> native_prefix(const EnumeratorProgram& program, std::size_t k,
                                   std::size_t round_cap);

NativeComparison compare_native(const EnumeratorProgram& a, const EnumeratorProgram& b,
                                std::size_t k, std::size_t round_cap);

// Lexicographically least (A choices, then B choices) witness over the
// length-k native prefixes. The A side is explored depth first; alongside
// each A prefix the search keeps every B prefix still compatible with it,
// so an A branch dies as soon as no B prefix survives. nodes_explored counts
// generated joint partial assignments and is capped by max_nodes.
WitnessReport search_witness(std::span<const Natural> native_a,
                             std::span<const Natural> native_b, std::size_t k,
                             std::size_t window, std::size_t max_nodes,
                             Relation relation);

WitnessReport search_eo_witness(const EnumeratorProgram& a, const EnumeratorProgram& b,
                                const SearchBudget& budget);
WitnessReport search_uniform_witness(const EnumeratorProgram& a,
                                     const EnumeratorProgram& b,
                                     const SearchBudget& budget);

// Replays the witness schedulers and re-checks the relation through
// eo_leq / uniform. False for reports without a witness.
bool validate_witness(const WitnessReport& report, std::span<const Natural> native_a,
                      std::span<const Natural> native_b);

}  // namespace eolab
