#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "eolab/error.hpp"
#include "eolab/json.hpp"
#include "eolab/oracle.hpp"
#include "eolab/poset.hpp"
#include "eolab/program.hpp"
#include "eolab/scheduler.hpp"
#include "eolab/search.hpp"

namespace eolab::cli {

namespace {

constexpr std::string_view kPrefixNote =
    "relations are decided on finite prefixes: necessary, not sufficient, for "
    "the relation between infinite listings";
constexpr std::size_t kDefaultPosetCap = 6;

std::string join(std::span<const Natural> values) {
  std::string s;
  for (const auto v : values) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

std::string join(const OrderPattern& p) {
  std::string s;
  for (const auto v : p) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string s;
  for (const auto v : values) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

std::string pairs_text(const PairSet& pairs) {
  if (pairs.empty()) return "(none)";
  std::string s;
  for (const auto& [i, j] : pairs) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return s;
}

std::string pair_text(const IndexPair& p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

std::vector<std::size_t> parse_indices(std::string_view text) {
  std::vector<std::size_t> out;
  for (const auto v : parse_naturals(text)) out.push_back(static_cast<std::size_t>(v));
  return out;
}

struct Options {
  std::string global_format = "text";
  std::string format;

  // pattern
  std::string values;
  // cmp
  std::string left;
  std::string right;
  // poset
  std::size_t n = 0;
  std::size_t cap = kDefaultPosetCap;
  bool chain = false;
  std::size_t antichain = 0;
  // run / search
  std::string program;
  std::string program_a;
  std::string program_b;
  std::size_t k = 8;
  std::size_t round_cap = 1000;
  std::string schedule_kind;
  std::size_t window = 1;
  std::string choices;
  std::string relation = "eo";
  std::size_t max_nodes = 100000;
  // check
  std::string suite;
  std::string support;

  bool json() const { return (format.empty() ? global_format : format) == "json"; }
};

void print_json(std::ostream& out, const nlohmann::json& doc) { out << doc.dump(2) << "\n"; }

int cmd_pattern(const Options& o, std::ostream& out) {
  const auto values = parse_naturals(o.values);
  const OrderPattern p = pattern_of(values);
  const PairSet asc = ascents(p);
  const PairSet inv = inversions(p);
  if (o.json()) {
    print_json(out, {{"input", values},
                     {"pattern", to_json(p)},
                     {"ascents", to_json(asc)},
                     {"inversions", to_json(inv)}});
  } else {
    out << "pattern: " << join(p) << "\n"
        << "ascents: " << pairs_text(asc) << "\n"
        << "inversions: " << pairs_text(inv) << "\n";
  }
  return kOk;
}

int cmd_cmp(const Options& o, std::ostream& out) {
  const OrderPattern left = pattern_of(parse_naturals(o.left));
  const OrderPattern right = pattern_of(parse_naturals(o.right));
  const bool l_r = eo_leq(left, right);
  const bool r_l = eo_leq(right, left);
  const auto l_r_violation = first_eo_violation(left, right);
  const auto r_l_violation = first_eo_violation(right, left);
  std::string verdict;
  if (l_r && r_l) {
    verdict = "equivalent (uniform)";
  } else if (l_r) {
    verdict = "left ≤eo right only";
  } else if (r_l) {
    verdict = "right ≤eo left only";
  } else {
    verdict = "incomparable";
  }
  if (o.json()) {
    auto violation = [](const std::optional<IndexPair>& v) {
      return v ? to_json(*v) : nlohmann::json(nullptr);
    };
    print_json(out, {{"leftPattern", to_json(left)},
                     {"rightPattern", to_json(right)},
                     {"leftLeqRight", l_r},
                     {"rightLeqLeft", r_l},
                     {"uniform", uniform(left, right)},
                     {"verdict", verdict},
                     {"leftLeqRightViolation", violation(l_r_violation)},
                     {"rightLeqLeftViolation", violation(r_l_violation)},
                     {"note", kPrefixNote}});
    return kOk;
  }
  auto direction = [](bool holds, const std::optional<IndexPair>& v) {
    return holds ? std::string("true")
                 : "false (violating pair " + pair_text(*v) + ")";
  };
  out << "left pattern: " << join(left) << "\n"
      << "right pattern: " << join(right) << "\n"
      << "left ≤eo right: " << direction(l_r, l_r_violation) << "\n"
      << "right ≤eo left: " << direction(r_l, r_l_violation) << "\n"
      << "verdict: " << verdict << "\n"
      << "note: " << kPrefixNote << "\n";
  return kOk;
}

int cmd_poset(const Options& o, std::ostream& out) {
  if (o.cap > kPosetHardCap) {
    throw InvalidArgument("--cap may not exceed " + std::to_string(kPosetHardCap));
  }
  if (o.n < 1 || o.n > o.cap) {
    throw InvalidArgument("--n " + std::to_string(o.n) + " outside 1.." +
                          std::to_string(o.cap) + " (raise with --cap, at most " +
                          std::to_string(kPosetHardCap) + ")");
  }
  const bool json = o.format == "json" || (o.format.empty() && o.global_format == "json");
  if (o.chain) {
    const Chain chain = max_chain(o.n);
    if (json) {
      print_json(out, {{"n", o.n},
                       {"length", chain.patterns.size()},
                       {"chain", to_json(chain)},
                       {"note", kPosetAnalogueNote}});
    } else {
      out << "# maximal chain, reversal to identity (" << chain.patterns.size()
          << " patterns); " << kPosetAnalogueNote << "\n";
      for (const auto& p : chain.patterns) out << join(p) << "\n";
    }
    return kOk;
  }
  if (o.antichain > 0) {
    const Antichain anti = sample_antichain(o.n, o.antichain);
    if (json) {
      print_json(out, {{"n", o.n},
                       {"size", anti.patterns.size()},
                       {"antichain", to_json(anti)},
                       {"note", kPosetAnalogueNote}});
    } else {
      out << "# antichain of " << anti.patterns.size()
          << " pairwise incomparable patterns; " << kPosetAnalogueNote << "\n";
      for (const auto& p : anti.patterns) out << join(p) << "\n";
    }
    return kOk;
  }
  const PatternPoset poset = build_poset(o.n);
  out << export_poset(poset, json ? ExportFormat::json : ExportFormat::dot);
  return kOk;
}

int cmd_run(const Options& o, std::ostream& out) {
  const EnumeratorProgram program = load_program(o.program);
  const DovetailTrace trace = dovetail(program, o.k, o.round_cap);

  std::optional<Scheduler> sched;
  std::optional<ListingPrefix> scheduled;
  if (!o.schedule_kind.empty()) {
    sched = Scheduler{schedule_kind_from_string(o.schedule_kind), o.window, {}};
    if (sched->kind == ScheduleKind::explicit_choices) sched->choices = parse_indices(o.choices);
    if (trace.emitted.size() < o.k) {
      throw InsufficientEnumeration(program.name, trace.emitted.size(), o.k);
    }
    scheduled = schedule(trace, *sched, o.k);
  }

  std::optional<OrderPattern> pattern;
  if (!trace.emitted.empty()) pattern = pattern_of(trace.emitted);

  if (o.json()) {
    nlohmann::json doc = to_json(trace);
    doc["name"] = program.name;
    doc["pattern"] = pattern ? to_json(*pattern) : nlohmann::json(nullptr);
    doc["inputs"] = trace.emitted_inputs;
    doc["stepsCharged"] = trace.steps_charged;
    if (scheduled) {
      doc["schedule"] = {{"kind", to_string(sched->kind)},
                         {"window", sched->window},
                         {"listing", to_json(*scheduled)},
                         {"pattern", to_json(pattern_of(*scheduled))}};
    }
    print_json(out, doc);
    return kOk;
  }
  out << "program: " << program.name << "\n"
      << "emitted: " << join(trace.emitted) << "\n"
      << "pattern: " << (pattern ? join(*pattern) : std::string("(none)")) << "\n"
      << "inputs: " << join(trace.emitted_inputs) << "\n"
      << "rounds: " << trace.rounds << "\n"
      << "steps charged: " << trace.steps_charged << "\n"
      << "truncated: " << (trace.truncated ? "true" : "false") << "\n";
  if (scheduled) {
    out << "scheduled (" << to_string(sched->kind) << ", window " << sched->window
        << "): " << join(scheduled->elements()) << "\n"
        << "scheduled pattern: " << join(pattern_of(*scheduled)) << "\n";
  }
  return kOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  if (o.relation != "eo" && o.relation != "uniform") {
    throw InvalidArgument("--relation must be eo or uniform");
  }
  const EnumeratorProgram a = load_program(o.program_a);
  const EnumeratorProgram b = load_program(o.program_b);
  const SearchBudget budget{o.k, o.window, o.max_nodes, o.round_cap};
  const WitnessReport report = o.relation == "eo" ? search_eo_witness(a, b, budget)
                                                  : search_uniform_witness(a, b, budget);
  if (o.json()) {
    print_json(out, to_json(report));
  } else {
    out << "status: " << to_string(report.status) << "\n"
        << "relation: " << to_string(report.relation) << "\n"
        << "k: " << report.k << "\n"
        << "w: " << report.window << "\n";
    if (report.witness && report.prefixes) {
      out << "choicesA: " << join(report.witness->first.choices) << "\n"
          << "choicesB: " << join(report.witness->second.choices) << "\n"
          << "prefixA: " << join(report.prefixes->first.elements()) << "\n"
          << "prefixB: " << join(report.prefixes->second.elements()) << "\n"
          << "patternA: " << join(pattern_of(report.prefixes->first)) << "\n"
          << "patternB: " << join(pattern_of(report.prefixes->second)) << "\n";
    }
    out << "nodes explored: " << report.nodes_explored << "\n"
        << "restriction: " << kSearchRestriction << "\n";
  }
  switch (report.status) {
    case SearchStatus::witness_found: return kOk;
    case SearchStatus::space_exhausted: return kUnavailable;
    case SearchStatus::budget_exceeded: return kBudget;
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  oracle::OracleReport report;
  if (o.suite == "preorder") {
    report = oracle::check_preorder_laws(o.n);
  } else if (o.suite == "inversion") {
    report = oracle::check_inversion_equiv(o.n);
  } else if (o.suite == "theorem10") {
    report = oracle::check_theorem10(o.n);
  } else if (o.suite == "theorem3") {
    std::vector<Natural> support;
    if (o.support.empty()) {
      for (Natural v = 1; v <= o.n; ++v) support.push_back(v);
    } else {
      support = parse_naturals(o.support);
    }
    report = oracle::check_theorem3_finite(o.n, support);
  } else if (o.suite == "hasse") {
    report = oracle::check_hasse(o.n);
  } else {
    throw InvalidArgument("unknown suite \"" + o.suite + "\"");
  }
  if (o.json()) {
    print_json(out, to_json(report));
  } else {
    out << "suite: " << report.suite << "\n" << "params:";
    for (const auto& [key, value] : report.params) out << " " << key << "=" << value;
    out << "\nchecked: " << report.checked << "\n"
        << "failures: " << report.failures.size() << "\n";
    if (!report.stats.empty()) {
      out << "stats:";
      for (const auto& [key, value] : report.stats) out << " " << key << "=" << value;
      out << "\n";
    }
    for (const auto& f : report.failures) {
      out << "  " << f.what << ": expected " << f.expected << ", got " << f.actual << "\n";
    }
    out << "result: " << (report.passed() ? "pass" : "FAIL") << "\n";
  }
  return report.passed() ? kOk : kSuiteFailed;
}

void add_format(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

std::vector<Natural> parse_naturals(std::string_view text) {
  std::vector<Natural> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field =
        text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    Natural value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw InvalidArgument("not a comma-separated list of naturals: \"" +
                            std::string(text) + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"eolab: enumeration-order relations on finite listing prefixes", "eolab"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.global_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* pattern = app.add_subcommand("pattern", "Order pattern, ascents and inversions");
  pattern->add_option("values", o.values, "Comma-separated naturals")->required();
  add_format(pattern, o.format);

  auto* cmp = app.add_subcommand("cmp", "Compare two prefixes under ≤eo");
  cmp->add_option("--left", o.left, "Comma-separated naturals")->required();
  cmp->add_option("--right", o.right, "Comma-separated naturals")->required();
  add_format(cmp, o.format);

  auto* poset = app.add_subcommand("poset", "Export the pattern poset, a chain or an antichain");
  poset->add_option("--n", o.n, "Pattern length")->required();
  poset->add_option("--format", o.format, "dot, json or text")
      ->check(CLI::IsMember({"dot", "json", "text"}));
  poset->add_option("--cap", o.cap, "Largest accepted n (at most 8)");
  auto* chain_flag = poset->add_flag("--chain", o.chain, "Emit a maximal chain");
  poset->add_option("--antichain", o.antichain, "Emit an antichain of this size")
      ->excludes(chain_flag);

  auto* run_cmd = app.add_subcommand("run", "Dovetail a program, optionally reschedule");
  run_cmd->add_option("--program", o.program, "Program JSON file")->required();
  run_cmd->add_option("--k", o.k, "Number of elements");
  run_cmd->add_option("--round-cap", o.round_cap, "Dovetail round cap");
  run_cmd->add_option("--schedule", o.schedule_kind, "native, min_first, max_first or explicit")
      ->check(CLI::IsMember({"native", "min_first", "max_first", "explicit"}));
  run_cmd->add_option("--window", o.window, "Reordering window");
  run_cmd->add_option("--choices", o.choices, "Buffer indices for explicit schedules");
  add_format(run_cmd, o.format);

  auto* search = app.add_subcommand("search", "Bounded witness search between two programs");
  search->add_option("--a", o.program_a, "Program A JSON file")->required();
  search->add_option("--b", o.program_b, "Program B JSON file")->required();
  search->add_option("--k", o.k, "Prefix length");
  search->add_option("--window", o.window, "Reordering window");
  search->add_option("--relation", o.relation, "eo or uniform")
      ->check(CLI::IsMember({"eo", "uniform"}));
  search->add_option("--max-nodes", o.max_nodes, "Node budget");
  search->add_option("--round-cap", o.round_cap, "Dovetail round cap");
  add_format(search, o.format);

  auto* check = app.add_subcommand("check", "Run an exhaustive oracle suite");
  check->add_option("--suite", o.suite, "preorder, inversion, theorem10, theorem3 or hasse")
      ->required()
      ->check(CLI::IsMember({"preorder", "inversion", "theorem10", "theorem3", "hasse"}));
  check->add_option("--n", o.n, "Size parameter")->required();
  check->add_option("--support", o.support, "Comma-separated support (theorem3)");
  add_format(check, o.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "eolab: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*pattern) return cmd_pattern(o, out);
    if (*cmp) return cmd_cmp(o, out);
    if (*poset) return cmd_poset(o, out);
    if (*run_cmd) return cmd_run(o, out);
    if (*search) return cmd_search(o, out);
    if (*check) return cmd_check(o, out);
  } catch (const NotFound& e) {
    err << "eolab: " << e.what() << "\n";
    return kUnavailable;
  } catch (const EvaluationError& e) {
    err << "eolab: " << e.what() << "\n";
    return kEnumeration;
  } catch (const InsufficientEnumeration& e) {
    err << "eolab: " << e.what() << "\n";
    return kEnumeration;
  } catch (const InvalidArgument& e) {
    err << "eolab: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "eolab: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace eolab::cli
