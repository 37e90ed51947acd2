#include "eolab/program.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "eolab/error.hpp"

namespace eolab {

namespace {

Expression parse_field(const nlohmann::json& doc, const char* key, ExprType want) {
  if (!doc.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  const auto& field = doc.at(key);
  if (!field.is_string()) {
    throw ParseError(std::string("key \"") + key + "\" must be a string expression");
  }
  const auto source = field.get<std::string>();
  try {
    Expression expr = Expression::parse(source);
    if (expr.type() != want) {
      throw ParseError(std::string("type mismatch: \"") + key + "\" must be " +
                       (want == ExprType::arithmetic ? "arithmetic" : "boolean"));
    }
    return expr;
  } catch (const ParseError& e) {
    throw ParseError(std::string(key) + ": " + e.detail(), e.position());
  }
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

}  // namespace

EnumeratorProgram parse_program(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed program JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("program must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "name" && key != "value" && key != "cost" && key != "guard") {
      throw ParseError("unknown key \"" + key + "\"");
    }
  }
  if (!doc.contains("name")) throw ParseError("missing key \"name\"");
  if (!doc["name"].is_string() || !is_identifier(doc["name"].get<std::string>())) {
    throw ParseError("\"name\" must be an identifier string");
  }

  EnumeratorProgram program{
      doc["name"].get<std::string>(),
      parse_field(doc, "value", ExprType::arithmetic),
      parse_field(doc, "cost", ExprType::arithmetic),
      std::nullopt,
  };
  if (doc.contains("guard") && !doc["guard"].is_null()) {
    program.guard = parse_field(doc, "guard", ExprType::boolean);
  }
  return program;
}

EnumeratorProgram load_program(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open program file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_program(buffer.str());
}

DovetailTrace dovetail(const EnumeratorProgram& program, std::size_t k,
                       std::size_t round_cap) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  if (round_cap < 1) throw InvalidArgument("round_cap must be >= 1");

  constexpr Natural kNever = std::numeric_limits<Natural>::max();
  // halt_time[i]: cost(i), or kNever when i diverges. Filled lazily as
  // inputs join the dovetail.
  std::vector<Natural> halt_time;
  std::vector<bool> halted;
  std::unordered_set<Natural> seen;
  DovetailTrace trace;

  for (std::size_t r = 1; r <= round_cap; ++r) {
    trace.rounds = r;
    while (halt_time.size() <= r) {
      const Natural i = halt_time.size();
      Natural t = kNever;
      if (program.halts(i)) {
        t = program.cost.evaluate(i);
        if (t == 0) throw EvaluationError("cost evaluated to 0", i, program.cost.source());
      }
      halt_time.push_back(t);
      halted.push_back(false);
    }
    for (std::size_t i = 0; i <= r; ++i) {
      if (halted[i]) continue;
      const Natural t = halt_time[i];
      trace.steps_charged += static_cast<std::size_t>(std::min<Natural>(t, r));
      if (t > r) continue;
      halted[i] = true;
      trace.halted_inputs.push_back(i);
      const Natural v = program.value.evaluate(i);
      if (seen.insert(v).second) {
        trace.emitted.push_back(v);
        trace.emitted_inputs.push_back(i);
        if (trace.emitted.size() == k) return trace;
      }
    }
  }
  trace.truncated = true;
  return trace;
}

}  // namespace eolab
