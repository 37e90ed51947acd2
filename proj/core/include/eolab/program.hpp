#pragma once

// Enumerator programs: a partial function i -> value with a simulated
// halting time, and the dovetailer that turns one into a native listing.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eolab/expr.hpp"
#include "eolab/pattern.hpp"

namespace eolab {

struct EnumeratorProgram {
  std::string name;
  Expression value;
  Expression cost;
  // Input i diverges when the guard is present and false.
  std::optional<Expression> guard;

  bool halts(Natural i) const { return !guard || guard->holds(i); }
};

// Parses {"name": ..., "value": ..., "cost": ..., "guard": ... | null}.
// Throws ParseError naming the field (and offset within it) at fault.
EnumeratorProgram parse_program(std::string_view json_text);
EnumeratorProgram load_program(const std::string& path);

struct DovetailTrace {
  std::size_t rounds = 0;
  // Distinct values in emission order; a prefix of the native listing.
  std::vector<Natural> emitted;
  // The input that produced each emitted value.
  std::vector<Natural> emitted_inputs;
  // Inputs in the order they halted, including ones whose value was a
  // duplicate.
  std::vector<Natural> halted_inputs;
  std::size_t steps_charged = 0;
  bool truncated = false;

  ListingPrefix prefix() const { return ListingPrefix(emitted); }
};

// Round r = 1, 2, ... runs every pending input i <= r (increasing i) for r
// steps; i halts in the first round with guard(i) and cost(i) <= r. Stops
// right after the k-th distinct value or after round round_cap, in which
// case the trace is flagged truncated. steps_charged adds min(r, cost(i))
// per pending input per round (r when the input diverges).
// Throws EvaluationError on overflow, mod 0, or cost 0.
DovetailTrace dovetail(const EnumeratorProgram& program, std::size_t k,
                       std::size_t round_cap);

}  // namespace eolab
