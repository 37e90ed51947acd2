#include "eolab/oracle.hpp"

#include <algorithm>
#include <set>

#include "eolab/error.hpp"
#include "eolab/poset.hpp"

namespace eolab::oracle {

namespace {

void check_cap(const char* suite, std::size_t n, std::size_t cap) {
  if (n < 1 || n > cap) {
    throw InvalidArgument(std::string("suite ") + suite + ": n = " + std::to_string(n) +
                          " outside 1.." + std::to_string(cap));
  }
}

void extend(std::vector<Natural>& current, std::vector<bool>& used,
            std::vector<std::vector<Natural>>& out) {
  if (current.size() == used.size()) {
    out.push_back(current);
    return;
  }
  for (Natural v = 0; v < used.size(); ++v) {
    if (used[v]) continue;
    used[v] = true;
    current.push_back(v);
    extend(current, used, out);
    current.pop_back();
    used[v] = false;
  }
}

OracleReport start(std::string suite, std::map<std::string, std::string> params) {
  OracleReport report;
  report.suite = std::move(suite);
  report.params = std::move(params);
  return report;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

OrderPattern as_pattern(const std::vector<Natural>& ranks) {
  return OrderPattern(std::vector<OrderPattern::Rank>(ranks.begin(), ranks.end()));
}

std::vector<std::vector<bool>> literal_relation(
    const std::vector<std::vector<Natural>>& perms) {
  std::vector<std::vector<bool>> leq(perms.size(), std::vector<bool>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) leq[a][b] = def7_leq(perms[a], perms[b]);
  }
  return leq;
}

// Simulates a window-w release order from raw choices. Empty result when a
// choice points past the buffer.
std::vector<Natural> replay(const std::vector<Natural>& native, std::size_t window,
                            const std::vector<std::size_t>& choices) {
  std::vector<Natural> buffer;
  std::vector<Natural> out;
  std::size_t next = 0;
  for (const std::size_t c : choices) {
    while (buffer.size() < window && next < native.size()) buffer.push_back(native[next++]);
    if (c >= buffer.size()) return {};
    out.push_back(buffer[c]);
    buffer.erase(buffer.begin() + static_cast<std::ptrdiff_t>(c));
  }
  return out;
}

bool next_sequence(std::vector<std::size_t>& seq, std::size_t base) {
  for (std::size_t pos = seq.size(); pos-- > 0;) {
    if (++seq[pos] < base) return true;
    seq[pos] = 0;
  }
  return false;
}

}  // namespace

std::vector<std::vector<Natural>> permutations(std::size_t n) {
  std::vector<std::vector<Natural>> out;
  std::vector<Natural> current;
  std::vector<bool> used(n, false);
  extend(current, used, out);
  return out;
}

bool def7_leq(const std::vector<Natural>& f, const std::vector<Natural>& g) {
  if (f.size() != g.size()) throw LengthMismatch(f.size(), g.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[i] < f[j] && !(g[i] < g[j])) return false;
    }
  }
  return true;
}

bool biconditional_uniform(const std::vector<Natural>& f, const std::vector<Natural>& g) {
  if (f.size() != g.size()) throw LengthMismatch(f.size(), g.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if ((f[i] < f[j]) != (g[i] < g[j])) return false;
    }
  }
  return true;
}

OracleReport check_preorder_laws(std::size_t n) {
  check_cap("preorder", n, kPreorderCap);
  OracleReport report = start("preorder", {{"n", std::to_string(n)}});
  const auto perms = permutations(n);
  const auto leq = literal_relation(perms);
  const std::size_t m = perms.size();

  for (std::size_t a = 0; a < m; ++a) {
    ++report.checked;
    if (!leq[a][a]) {
      report.failures.push_back({"reflexivity", {perms[a]}, "true", "false"});
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      ++report.checked;
      if (leq[a][b] && leq[b][a] && perms[a] != perms[b]) {
        report.failures.push_back(
            {"antisymmetry", {perms[a], perms[b]}, "equal", "distinct"});
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        ++report.checked;
        if (leq[a][b] && leq[b][c] && !leq[a][c]) {
          report.failures.push_back(
              {"transitivity", {perms[a], perms[b], perms[c]}, "true", "false"});
        }
      }
    }
  }
  return report;
}

OracleReport check_inversion_equiv(std::size_t n) {
  check_cap("inversion", n, kPairSuiteCap);
  OracleReport report = start("inversion", {{"n", std::to_string(n)}});
  const auto perms = permutations(n);
  std::vector<OrderPattern> patterns;
  std::vector<PairSet> inv;
  for (const auto& p : perms) {
    patterns.push_back(as_pattern(p));
    inv.push_back(inversions(patterns.back()));
  }
  std::size_t related = 0;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      ++report.checked;
      const bool literal = def7_leq(perms[a], perms[b]);
      const bool containment = inv[b].is_subset_of(inv[a]);
      const bool library = eo_leq(patterns[a], patterns[b]);
      if (literal) ++related;
      if (literal != containment || literal != library) {
        report.failures.push_back({"literal vs inversion containment",
                                   {perms[a], perms[b]},
                                   yes_no(literal),
                                   "containment=" + yes_no(containment) +
                                       " eo_leq=" + yes_no(library)});
      }
    }
  }
  report.stats["related"] = related;
  return report;
}

OracleReport check_theorem10(std::size_t n) {
  check_cap("theorem10", n, kPairSuiteCap);
  OracleReport report = start("theorem10", {{"n", std::to_string(n)}});
  const auto perms = permutations(n);
  std::vector<OrderPattern> patterns;
  for (const auto& p : perms) patterns.push_back(as_pattern(p));
  std::size_t equivalent = 0;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      ++report.checked;
      const bool two_sided = def7_leq(perms[a], perms[b]) && def7_leq(perms[b], perms[a]);
      const bool biconditional = biconditional_uniform(perms[a], perms[b]);
      const bool equal = perms[a] == perms[b];
      const bool lib_equiv = eo_equiv(patterns[a], patterns[b]);
      const bool lib_uniform = uniform(patterns[a], patterns[b]);
      if (two_sided) ++equivalent;
      if (!(two_sided == biconditional && biconditional == equal && equal == lib_equiv &&
            lib_equiv == lib_uniform)) {
        report.failures.push_back(
            {"two-sided eo vs uniform vs equality",
             {perms[a], perms[b]},
             "all " + yes_no(equal),
             "two_sided=" + yes_no(two_sided) + " biconditional=" + yes_no(biconditional) +
                 " eo_equiv=" + yes_no(lib_equiv) + " uniform=" + yes_no(lib_uniform)});
      }
    }
  }
  report.stats["equivalent"] = equivalent;
  return report;
}

OracleReport check_theorem3_finite(std::size_t n, const std::vector<Natural>& support) {
  check_cap("theorem3", n, kPairSuiteCap);
  const std::set<Natural> support_set(support.begin(), support.end());
  if (support_set.size() != support.size() || support.size() != n) {
    throw InvalidArgument("theorem3: support must hold exactly n = " + std::to_string(n) +
                          " distinct values");
  }
  std::string listed;
  for (const auto v : support) listed += (listed.empty() ? "" : ",") + std::to_string(v);
  OracleReport report = start("theorem3", {{"n", std::to_string(n)}, {"support", listed}});
  for (const auto& listing_a : permutations(n)) {
    ++report.checked;
    const ListingPrefix listing_b = apply_pattern(as_pattern(listing_a), support_set);
    const std::vector<Natural> b(listing_b.begin(), listing_b.end());
    const bool same_support = std::set<Natural>(b.begin(), b.end()) == support_set;
    const bool matched = biconditional_uniform(listing_a, b);
    if (!same_support || !matched) {
      report.failures.push_back({"constructed B listing", {listing_a, b},
                                 "uniform over support",
                                 "uniform=" + yes_no(matched) +
                                     " support=" + yes_no(same_support)});
    }
  }
  return report;
}

OracleReport check_hasse(std::size_t n) {
  check_cap("hasse", n, kHasseCap);
  OracleReport report = start("hasse", {{"n", std::to_string(n)}});
  const auto perms = permutations(n);
  const std::size_t m = perms.size();
  const auto leq = literal_relation(perms);

  // Cover: a < b with no c strictly between.
  std::set<std::pair<std::size_t, std::size_t>> expected;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool between = false;
      for (std::size_t c = 0; c < m && !between; ++c) {
        between = c != a && c != b && leq[a][c] && leq[c][b];
      }
      if (!between) expected.emplace(a, b);
    }
  }

  const PatternPoset poset = build_poset(n, 1);
  std::set<std::pair<std::vector<Natural>, std::vector<Natural>>> actual;
  for (const auto& [from, to] : poset.hasse()) {
    const auto& pf = poset.node(from);
    const auto& pt = poset.node(to);
    actual.emplace(std::vector<Natural>(pf.begin(), pf.end()),
                   std::vector<Natural>(pt.begin(), pt.end()));
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      ++report.checked;
      const bool want = expected.count({a, b}) > 0;
      const bool got = actual.count({perms[a], perms[b]}) > 0;
      if (want != got) {
        report.failures.push_back({"cover edge", {perms[a], perms[b]}, yes_no(want),
                                   yes_no(got)});
      }
    }
  }

  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= i;
  const std::size_t closed_form = (n - 1) * factorial / 2;
  ++report.checked;
  if (expected.size() != closed_form || poset.hasse().size() != closed_form) {
    report.failures.push_back({"edge count (n-1)*n!/2", {},
                               std::to_string(closed_form),
                               "oracle=" + std::to_string(expected.size()) +
                                   " poset=" + std::to_string(poset.hasse().size())});
  }
  report.stats["edges"] = expected.size();
  return report;
}

WitnessReport brute_force_witness(const std::vector<Natural>& native_a,
                                  const std::vector<Natural>& native_b, std::size_t k,
                                  std::size_t window, Relation relation) {
  if (k < 1 || k > kWitnessMaxK || window < 1 || window > kWitnessMaxWindow) {
    throw InvalidArgument("brute force witness needs 1 <= k <= 6 and 1 <= w <= 3");
  }
  if (native_a.size() < k || native_b.size() < k) {
    throw InvalidArgument("native prefixes shorter than k");
  }
  const std::vector<Natural> head_a(native_a.begin(), native_a.begin() + static_cast<std::ptrdiff_t>(k));
  const std::vector<Natural> head_b(native_b.begin(), native_b.begin() + static_cast<std::ptrdiff_t>(k));

  WitnessReport report;
  report.relation = relation;
  report.k = k;
  report.window = window;
  report.status = SearchStatus::space_exhausted;

  std::vector<std::vector<std::size_t>> all_b;
  std::vector<std::vector<Natural>> outs_b;
  std::vector<std::size_t> choices_b(k, 0);
  do {
    all_b.push_back(choices_b);
    outs_b.push_back(replay(head_b, window, choices_b));
  } while (next_sequence(choices_b, window));

  std::vector<std::size_t> choices_a(k, 0);
  do {
    const auto out_a = replay(head_a, window, choices_a);
    if (out_a.empty()) continue;
    for (std::size_t s = 0; s < all_b.size(); ++s) {
      ++report.nodes_explored;
      const auto& out_b = outs_b[s];
      if (out_b.empty()) continue;
      const bool holds = relation == Relation::eo_leq ? def7_leq(out_a, out_b)
                                                      : biconditional_uniform(out_a, out_b);
      if (holds) {
        report.status = SearchStatus::witness_found;
        report.witness.emplace(Scheduler{ScheduleKind::explicit_choices, window, choices_a},
                               Scheduler{ScheduleKind::explicit_choices, window, all_b[s]});
        report.prefixes.emplace(ListingPrefix(out_a), ListingPrefix(out_b));
        return report;
      }
    }
  } while (next_sequence(choices_a, window));
  return report;
}

WitnessReport brute_force_witness(const EnumeratorProgram& a, const EnumeratorProgram& b,
                                  std::size_t k, std::size_t window, Relation relation,
                                  std::size_t round_cap) {
  const DovetailTrace ta = dovetail(a, k, round_cap);
  if (ta.truncated) throw InsufficientEnumeration(a.name, ta.emitted.size(), k);
  const DovetailTrace tb = dovetail(b, k, round_cap);
  if (tb.truncated) throw InsufficientEnumeration(b.name, tb.emitted.size(), k);
  return brute_force_witness(ta.emitted, tb.emitted, k, window, relation);
}

}  // namespace eolab::oracle
