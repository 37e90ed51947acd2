#include "eolab/expr.hpp"

#include <cctype>
#include <limits>

#include "eolab/error.hpp"

namespace eolab {

namespace {

enum class Tok { number, ident, plus, minus, star, lparen, rparen, eq, ne, lt, le, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  Natural number = 0;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < src.size()) {
    const char c = src[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Natural value = 0;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        const Natural digit = static_cast<Natural>(src[pos] - '0');
        if (value > (std::numeric_limits<Natural>::max() - digit) / 10) {
          throw ParseError("integer literal exceeds 64 bits", start);
        }
        value = value * 10 + digit;
        ++pos;
      }
      out.push_back({Tok::number, start, std::string(src.substr(start, pos - start)), value});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
        ++pos;
      }
      out.push_back({Tok::ident, start, std::string(src.substr(start, pos - start))});
      continue;
    }
    auto two = src.substr(pos, 2);
    if (two == "==") { out.push_back({Tok::eq, start, "=="}); pos += 2; continue; }
    if (two == "!=") { out.push_back({Tok::ne, start, "!="}); pos += 2; continue; }
    if (two == "<=") { out.push_back({Tok::le, start, "<="}); pos += 2; continue; }
    switch (c) {
      case '+': out.push_back({Tok::plus, start, "+"}); break;
      case '-': out.push_back({Tok::minus, start, "-"}); break;
      case '*': out.push_back({Tok::star, start, "*"}); break;
      case '(': out.push_back({Tok::lparen, start, "("}); break;
      case ')': out.push_back({Tok::rparen, start, ")"}); break;
      case '<': out.push_back({Tok::lt, start, "<"}); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    ++pos;
  }
  out.push_back({Tok::end, src.size(), "end of input"});
  return out;
}

const char* type_name(ExprType t) {
  return t == ExprType::arithmetic ? "arithmetic" : "boolean";
}

}  // namespace

class Expression::Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  std::vector<Node> take_nodes() { return std::move(nodes_); }

  std::int32_t parse_all(ExprType& type) {
    auto [root, t] = parse_or();
    if (peek().kind != Tok::end) {
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }
    type = t;
    return root;
  }

 private:
  struct Parsed {
    std::int32_t node;
    ExprType type;
  };

  const Token& peek() const { return tokens_[cursor_]; }
  const Token& advance() { return tokens_[cursor_++]; }
  bool at_keyword(std::string_view word) const {
    return peek().kind == Tok::ident && peek().text == word;
  }

  std::int32_t add(Op op, Natural value = 0, std::int32_t lhs = -1, std::int32_t rhs = -1) {
    nodes_.push_back({op, value, lhs, rhs});
    return static_cast<std::int32_t>(nodes_.size() - 1);
  }

  static void expect_type(const Parsed& p, ExprType want, std::size_t pos,
                          std::string_view op) {
    if (p.type != want) {
      throw ParseError("type mismatch: operator '" + std::string(op) + "' expects " +
                           type_name(want) + " operand, got " + type_name(p.type),
                       pos);
    }
  }

  Parsed parse_or() {
    Parsed left = parse_and();
    while (at_keyword("or")) {
      const std::size_t pos = advance().pos;
      Parsed right = parse_and();
      expect_type(left, ExprType::boolean, pos, "or");
      expect_type(right, ExprType::boolean, pos, "or");
      left = {add(Op::logical_or, 0, left.node, right.node), ExprType::boolean};
    }
    return left;
  }

  Parsed parse_and() {
    Parsed left = parse_cmp();
    while (at_keyword("and")) {
      const std::size_t pos = advance().pos;
      Parsed right = parse_cmp();
      expect_type(left, ExprType::boolean, pos, "and");
      expect_type(right, ExprType::boolean, pos, "and");
      left = {add(Op::logical_and, 0, left.node, right.node), ExprType::boolean};
    }
    return left;
  }

  Parsed parse_cmp() {
    Parsed left = parse_add();
    Op op;
    switch (peek().kind) {
      case Tok::eq: op = Op::eq; break;
      case Tok::ne: op = Op::ne; break;
      case Tok::lt: op = Op::lt; break;
      case Tok::le: op = Op::le; break;
      default: return left;
    }
    const Token& tok = advance();
    Parsed right = parse_add();
    expect_type(left, ExprType::arithmetic, tok.pos, tok.text);
    expect_type(right, ExprType::arithmetic, tok.pos, tok.text);
    return {add(op, 0, left.node, right.node), ExprType::boolean};
  }

  Parsed parse_add() {
    Parsed left = parse_mul();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& tok = advance();
      Parsed right = parse_mul();
      expect_type(left, ExprType::arithmetic, tok.pos, tok.text);
      expect_type(right, ExprType::arithmetic, tok.pos, tok.text);
      left = {add(tok.kind == Tok::plus ? Op::add : Op::sub, 0, left.node, right.node),
              ExprType::arithmetic};
    }
    return left;
  }

  Parsed parse_mul() {
    Parsed left = parse_factor();
    while (peek().kind == Tok::star || at_keyword("mod")) {
      const Token& tok = advance();
      Parsed right = parse_factor();
      expect_type(left, ExprType::arithmetic, tok.pos, tok.text);
      expect_type(right, ExprType::arithmetic, tok.pos, tok.text);
      left = {add(tok.kind == Tok::star ? Op::mul : Op::mod, 0, left.node, right.node),
              ExprType::arithmetic};
    }
    return left;
  }

  Parsed parse_factor() {
    const Token& tok = advance();
    switch (tok.kind) {
      case Tok::number:
        return {add(Op::literal, tok.number), ExprType::arithmetic};
      case Tok::ident:
        if (tok.text == "i") return {add(Op::variable), ExprType::arithmetic};
        if (tok.text == "mod" || tok.text == "and" || tok.text == "or") {
          throw ParseError("unexpected keyword '" + tok.text + "'", tok.pos);
        }
        throw ParseError("unknown identifier " + tok.text + " (only i is bound)", tok.pos);
      case Tok::lparen: {
        Parsed inner = parse_or();
        if (peek().kind != Tok::rparen) {
          throw ParseError("expected ')' but found '" + peek().text + "'", peek().pos);
        }
        advance();
        return inner;
      }
      default:
        throw ParseError("unexpected '" + tok.text + "'", tok.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  std::vector<Node> nodes_;
};

Expression Expression::parse(std::string_view source) {
  Parser parser(source);
  ExprType type{};
  Expression expr;
  expr.root_ = parser.parse_all(type);
  expr.source_ = std::string(source);
  expr.nodes_ = std::make_shared<const std::vector<Node>>(parser.take_nodes());
  return expr;
}

ExprType Expression::type() const noexcept {
  switch ((*nodes_)[static_cast<std::size_t>(root_)].op) {
    case Op::eq: case Op::ne: case Op::lt: case Op::le:
    case Op::logical_and: case Op::logical_or:
      return ExprType::boolean;
    default:
      return ExprType::arithmetic;
  }
}

Natural Expression::evaluate(Natural i) const {
  if (type() != ExprType::arithmetic) {
    throw InvalidArgument("evaluate() on boolean expression \"" + source_ + "\"");
  }
  return eval_arith(root_, i);
}

bool Expression::holds(Natural i) const {
  if (type() != ExprType::boolean) {
    throw InvalidArgument("holds() on arithmetic expression \"" + source_ + "\"");
  }
  return eval_bool(root_, i);
}

Natural Expression::eval_arith(std::int32_t index, Natural i) const {
  const Node& node = (*nodes_)[static_cast<std::size_t>(index)];
  if (node.op == Op::literal) return node.value;
  if (node.op == Op::variable) return i;
  const Natural a = eval_arith(node.lhs, i);
  const Natural b = eval_arith(node.rhs, i);
  Natural out = 0;
  switch (node.op) {
    case Op::add:
      if (__builtin_add_overflow(a, b, &out)) {
        throw EvaluationError("arithmetic overflow in +", i, source_);
      }
      return out;
    case Op::sub:
      return a > b ? a - b : 0;
    case Op::mul:
      if (__builtin_mul_overflow(a, b, &out)) {
        throw EvaluationError("arithmetic overflow in *", i, source_);
      }
      return out;
    case Op::mod:
      if (b == 0) throw EvaluationError("mod by zero", i, source_);
      return a % b;
    default:
      throw Error("internal: non-arithmetic node in arithmetic position");
  }
}

bool Expression::eval_bool(std::int32_t index, Natural i) const {
  const Node& node = (*nodes_)[static_cast<std::size_t>(index)];
  switch (node.op) {
    case Op::logical_and: return eval_bool(node.lhs, i) && eval_bool(node.rhs, i);
    case Op::logical_or: return eval_bool(node.lhs, i) || eval_bool(node.rhs, i);
    case Op::eq: return eval_arith(node.lhs, i) == eval_arith(node.rhs, i);
    case Op::ne: return eval_arith(node.lhs, i) != eval_arith(node.rhs, i);
    case Op::lt: return eval_arith(node.lhs, i) < eval_arith(node.rhs, i);
    case Op::le: return eval_arith(node.lhs, i) <= eval_arith(node.rhs, i);
    default:
      throw Error("internal: non-boolean node in boolean position");
  }
}

}  // namespace eolab
