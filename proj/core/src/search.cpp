#include "eolab/search.hpp"

#include "eolab/error.hpp"

namespace eolab {

std::string_view to_string(Relation relation) {
  return relation == Relation::eo_leq ? "eo" : "uniform";
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::witness_found: return "witness_found";
    case SearchStatus::space_exhausted: return "space_exhausted";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "space_exhausted";
}

namespace {

// One side's partial listing: released values, buffer in arrival order, and
// the choices that produced them.
struct Side {
  std::vector<Natural> out;
  std::vector<Natural> buffer;
  std::size_t next = 0;
  std::vector<std::size_t> choices;

  void refill(std::span<const Natural> native, std::size_t window) {
    while (buffer.size() < window && next < native.size()) buffer.push_back(native[next++]);
  }

  Side release(std::size_t choice) const {
    Side s = *this;
    s.out.push_back(s.buffer[choice]);
    s.buffer.erase(s.buffer.begin() + static_cast<std::ptrdiff_t>(choice));
    s.choices.push_back(choice);
    return s;
  }
};

// Checks every pair (i, t) with i < t for the newly released position t.
bool compatible(const std::vector<Natural>& a, const std::vector<Natural>& b,
                Relation relation) {
  const std::size_t t = a.size() - 1;
  for (std::size_t i = 0; i < t; ++i) {
    const bool a_up = a[i] < a[t];
    const bool b_up = b[i] < b[t];
    if (relation == Relation::eo_leq ? (a_up && !b_up) : (a_up != b_up)) return false;
  }
  return true;
}

class WitnessSearch {
 public:
  WitnessSearch(std::span<const Natural> a, std::span<const Natural> b, std::size_t k,
                std::size_t window, std::size_t max_nodes, Relation relation)
      : a_(a), b_(b), k_(k), window_(window), max_nodes_(max_nodes), relation_(relation) {}

  WitnessReport run() {
    WitnessReport report;
    report.relation = relation_;
    report.k = k_;
    report.window = window_;
    std::vector<Side> frontier{Side{}};
    const Outcome outcome = descend(Side{}, std::move(frontier));
    report.nodes_explored = nodes_;
    if (outcome == Outcome::found) {
      report.status = SearchStatus::witness_found;
      Scheduler sa{ScheduleKind::explicit_choices, window_, found_a_.choices};
      Scheduler sb{ScheduleKind::explicit_choices, window_, found_b_.choices};
      report.witness.emplace(std::move(sa), std::move(sb));
      report.prefixes.emplace(ListingPrefix(found_a_.out), ListingPrefix(found_b_.out));
    } else {
      report.status = outcome == Outcome::budget ? SearchStatus::budget_exceeded
                                                 : SearchStatus::space_exhausted;
    }
    return report;
  }

 private:
  enum class Outcome { found, exhausted, budget };

  Outcome descend(Side a, std::vector<Side> frontier) {
    if (a.out.size() == k_) {
      found_a_ = std::move(a);
      found_b_ = std::move(frontier.front());
      return Outcome::found;
    }
    a.refill(a_, window_);
    for (Side& b : frontier) b.refill(b_, window_);
    for (std::size_t ca = 0; ca < a.buffer.size(); ++ca) {
      Side next_a = a.release(ca);
      std::vector<Side> next_frontier;
      for (const Side& b : frontier) {
        for (std::size_t cb = 0; cb < b.buffer.size(); ++cb) {
          if (++nodes_ > max_nodes_) {
            nodes_ = max_nodes_;
            return Outcome::budget;
          }
          Side next_b = b.release(cb);
          if (compatible(next_a.out, next_b.out, relation_)) {
            next_frontier.push_back(std::move(next_b));
          }
        }
      }
      if (next_frontier.empty()) continue;
      const Outcome outcome = descend(std::move(next_a), std::move(next_frontier));
      if (outcome != Outcome::exhausted) return outcome;
    }
    return Outcome::exhausted;
  }

  std::span<const Natural> a_;
  std::span<const Natural> b_;
  std::size_t k_;
  std::size_t window_;
  std::size_t max_nodes_;
  Relation relation_;
  std::size_t nodes_ = 0;
  Side found_a_;
  Side found_b_;
};

void check_budget(const SearchBudget& budget) {
  if (budget.k < 1) throw InvalidArgument("k must be >= 1");
  if (budget.window < 1) throw InvalidArgument("window must be >= 1");
  if (budget.max_nodes < 1) throw InvalidArgument("max_nodes must be >= 1");
  if (budget.round_cap < 1) throw InvalidArgument("round_cap must be >= 1");
}

WitnessReport search_programs(const EnumeratorProgram& a, const EnumeratorProgram& b,
                              const SearchBudget& budget, Relation relation) {
  check_budget(budget);
  const auto native_a = native_prefix(a, budget.k, budget.round_cap);
  const auto native_b = native_prefix(b, budget.k, budget.round_cap);
  return search_witness(native_a, native_b, budget.k, budget.window, budget.max_nodes,
                        relation);
}

}  // namespace

std::vector<Natural> native_prefix(const EnumeratorProgram& program, std::size_t k,
                                   std::size_t round_cap) {
  DovetailTrace trace = dovetail(program, k, round_cap);
  if (trace.truncated) {
    throw InsufficientEnumeration(program.name, trace.emitted.size(), k);
  }
  return std::move(trace.emitted);
}

NativeComparison compare_native(const EnumeratorProgram& a, const EnumeratorProgram& b,
                                std::size_t k, std::size_t round_cap) {
  const OrderPattern pa = pattern_of(native_prefix(a, k, round_cap));
  const OrderPattern pb = pattern_of(native_prefix(b, k, round_cap));
  NativeComparison out{pa, pb, false, false, false, std::nullopt, std::nullopt};
  out.a_leq_b_violation = first_eo_violation(pa, pb);
  out.b_leq_a_violation = first_eo_violation(pb, pa);
  out.a_leq_b = eo_leq(pa, pb);
  out.b_leq_a = eo_leq(pb, pa);
  out.uniform = uniform(pa, pb);
  return out;
}

WitnessReport search_witness(std::span<const Natural> native_a,
                             std::span<const Natural> native_b, std::size_t k,
                             std::size_t window, std::size_t max_nodes,
                             Relation relation) {
  if (k < 1 || window < 1 || max_nodes < 1) {
    throw InvalidArgument("k, window and max_nodes must be >= 1");
  }
  if (native_a.size() != k || native_b.size() != k) {
    throw InvalidArgument("native prefixes must have length k = " + std::to_string(k));
  }
  // Rejects duplicates up front.
  (void)ListingPrefix(std::vector<Natural>(native_a.begin(), native_a.end()));
  (void)ListingPrefix(std::vector<Natural>(native_b.begin(), native_b.end()));
  return WitnessSearch(native_a, native_b, k, window, max_nodes, relation).run();
}

WitnessReport search_eo_witness(const EnumeratorProgram& a, const EnumeratorProgram& b,
                                const SearchBudget& budget) {
  return search_programs(a, b, budget, Relation::eo_leq);
}

WitnessReport search_uniform_witness(const EnumeratorProgram& a,
                                     const EnumeratorProgram& b,
                                     const SearchBudget& budget) {
  return search_programs(a, b, budget, Relation::uniform);
}

bool validate_witness(const WitnessReport& report, std::span<const Natural> native_a,
                      std::span<const Natural> native_b) {
  if (report.status != SearchStatus::witness_found || !report.witness) return false;
  const ListingPrefix la = schedule(native_a, report.witness->first, report.k);
  const ListingPrefix lb = schedule(native_b, report.witness->second, report.k);
  if (report.prefixes && (report.prefixes->first != la || report.prefixes->second != lb)) {
    return false;
  }
  const OrderPattern pa = pattern_of(la);
  const OrderPattern pb = pattern_of(lb);
  return report.relation == Relation::eo_leq ? eo_leq(pa, pb) : uniform(pa, pb);
}

}  // namespace eolab
