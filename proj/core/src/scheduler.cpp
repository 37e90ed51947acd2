#include "eolab/scheduler.hpp"

#include <algorithm>
#include <string>

#include "eolab/error.hpp"

namespace eolab {

std::string_view to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::native: return "native";
    case ScheduleKind::min_first: return "min_first";
    case ScheduleKind::max_first: return "max_first";
    case ScheduleKind::explicit_choices: return "explicit";
  }
  return "native";
}

ScheduleKind schedule_kind_from_string(std::string_view name) {
  if (name == "native") return ScheduleKind::native;
  if (name == "min_first") return ScheduleKind::min_first;
  if (name == "max_first") return ScheduleKind::max_first;
  if (name == "explicit") return ScheduleKind::explicit_choices;
  throw InvalidArgument("unknown schedule kind \"" + std::string(name) + "\"");
}

ListingPrefix schedule(std::span<const Natural> native, const Scheduler& sched,
                       std::size_t k) {
  if (sched.window == 0) throw InvalidArgument("window must be >= 1");
  if (k < 1) throw InvalidArgument("k must be >= 1");
  if (native.size() < k) {
    throw InvalidArgument("native prefix has " + std::to_string(native.size()) +
                          " elements, " + std::to_string(k) + " requested");
  }
  const ScheduleKind kind = sched.window == 1 ? ScheduleKind::native : sched.kind;
  if (kind == ScheduleKind::explicit_choices && sched.choices.size() < k) {
    throw InvalidArgument("explicit schedule has " + std::to_string(sched.choices.size()) +
                          " choices, " + std::to_string(k) + " needed");
  }

  std::vector<Natural> buffer;
  buffer.reserve(sched.window);
  std::vector<Natural> out;
  out.reserve(k);
  std::size_t next = 0;
  for (std::size_t t = 0; t < k; ++t) {
    while (buffer.size() < sched.window && next < native.size()) {
      buffer.push_back(native[next++]);
    }
    std::size_t pick = 0;
    switch (kind) {
      case ScheduleKind::native:
        break;
      case ScheduleKind::min_first:
        pick = static_cast<std::size_t>(std::min_element(buffer.begin(), buffer.end()) -
                                        buffer.begin());
        break;
      case ScheduleKind::max_first:
        pick = static_cast<std::size_t>(std::max_element(buffer.begin(), buffer.end()) -
                                        buffer.begin());
        break;
      case ScheduleKind::explicit_choices:
        pick = sched.choices[t];
        if (pick >= buffer.size()) {
          throw InvalidArgument("explicit choice " + std::to_string(pick) + " at step " +
                                std::to_string(t) + " outside buffer of size " +
                                std::to_string(buffer.size()));
        }
        break;
    }
    out.push_back(buffer[pick]);
    buffer.erase(buffer.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return ListingPrefix(std::move(out));
}

ListingPrefix schedule(const DovetailTrace& trace, const Scheduler& sched,
                       std::size_t k) {
  return schedule(std::span<const Natural>(trace.emitted), sched, k);
}

}  // namespace eolab
