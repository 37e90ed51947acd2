#pragma once

// Bounded reordering of a native listing prefix: a buffer of up to `window`
// native elements from which one element is released per step.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "eolab/pattern.hpp"
#include "eolab/program.hpp"

namespace eolab {

enum class ScheduleKind { native, min_first, max_first, explicit_choices };

struct Scheduler {
  ScheduleKind kind = ScheduleKind::native;
  std::size_t window = 1;
  // Buffer indices, one per emission (explicit_choices only). The buffer
  // keeps native arrival order, so index 0 is the oldest element.
  std::vector<std::size_t> choices;
};

std::string_view to_string(ScheduleKind kind);
// Accepts "native", "min_first", "max_first", "explicit".
ScheduleKind schedule_kind_from_string(std::string_view name);

// Refill the buffer to `window` elements, release one per policy, repeat;
// the buffer drains once native is exhausted. Returns the first k releases.
// window == 1 reproduces native order. Throws InvalidArgument when native
// has fewer than k elements, window == 0, or an explicit choice is missing
// or out of buffer range (the message names the step).
ListingPrefix schedule(std::span<const Natural> native, const Scheduler& sched,
                       std::size_t k);
ListingPrefix schedule(const DovetailTrace& trace, const Scheduler& sched,
                       std::size_t k);

}  // namespace eolab
