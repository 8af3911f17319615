#include "orbitspace/field_expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <numbers>

#include "orbitspace/error.hpp"

namespace orbitspace {

namespace {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Op { Const, X, Y, Neg, Add, Sub, Mul, Div, Pow, Call } op;
  double value = 0;
  double (*fn)(double) = nullptr;
  NodePtr lhs, rhs;

  double eval(double x, double y) const {
    switch (op) {
      case Op::Const: return value;
      case Op::X: return x;
      case Op::Y: return y;
      case Op::Neg: return -lhs->eval(x, y);
      case Op::Add: return lhs->eval(x, y) + rhs->eval(x, y);
      case Op::Sub: return lhs->eval(x, y) - rhs->eval(x, y);
      case Op::Mul: return lhs->eval(x, y) * rhs->eval(x, y);
      case Op::Div: return lhs->eval(x, y) / rhs->eval(x, y);
      case Op::Pow: return std::pow(lhs->eval(x, y), rhs->eval(x, y));
      case Op::Call: return fn(lhs->eval(x, y));
    }
    return 0;
  }
};

std::shared_ptr<Node> make(Node::Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

struct Function {
  std::string_view name;
  double (*fn)(double);
};

double fn_sin(double v) { return std::sin(v); }
double fn_cos(double v) { return std::cos(v); }
double fn_tan(double v) { return std::tan(v); }
double fn_exp(double v) { return std::exp(v); }
double fn_log(double v) { return std::log(v); }
double fn_sqrt(double v) { return std::sqrt(v); }
double fn_abs(double v) { return std::fabs(v); }
double fn_tanh(double v) { return std::tanh(v); }

constexpr Function kFunctions[] = {{"sin", fn_sin},   {"cos", fn_cos},   {"tan", fn_tan},
                                   {"exp", fn_exp},   {"log", fn_log},   {"sqrt", fn_sqrt},
                                   {"abs", fn_abs},   {"tanh", fn_tanh}};

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := '-' unary | power
// power  := atom ('^' unary)?
// atom   := number | x | y | pi | func '(' expr ')' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    auto e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("field expression '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) lhs = make(Node::Op::Add, lhs, term());
      else if (accept('-')) lhs = make(Node::Op::Sub, lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    auto lhs = unary();
    for (;;) {
      if (accept('*')) lhs = make(Node::Op::Mul, lhs, unary());
      else if (accept('/')) lhs = make(Node::Op::Div, lhs, unary());
      else return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Op::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    auto base = atom();
    if (accept('^')) return make(Node::Op::Pow, base, unary());
    return base;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const auto start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const auto word = text_.substr(start, pos_ - start);
      if (word == "x") return make(Node::Op::X);
      if (word == "y") return make(Node::Op::Y);
      if (word == "pi") {
        auto n = make(Node::Op::Const);
        n->value = std::numbers::pi;
        return n;
      }
      for (const auto& f : kFunctions) {
        if (f.name != word) continue;
        if (!accept('(')) fail("expected '(' after " + std::string(word));
        auto arg = expr();
        if (!accept(')')) fail("expected ')'");
        auto n = make(Node::Op::Call, arg);
        n->fn = f.fn;
        return n;
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail("unexpected character");
  }

  NodePtr number() {
    const std::string rest(text_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    auto n = make(Node::Op::Const);
    n->value = v;
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

VectorField parse_vector_field(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
    throw ParseError("field expression must have the form 'dx ; dy'");
  auto dx = Parser(text.substr(0, semi)).parse();
  auto dy = Parser(text.substr(semi + 1)).parse();
  return [dx, dy](double x, double y) {
    return std::array<double, 2>{dx->eval(x, y), dy->eval(x, y)};
  };
}

double evaluate_expression(std::string_view expression, double x, double y) {
  return Parser(expression).parse()->eval(x, y);
}

std::optional<VectorField> builtin_field(std::string_view name) {
  if (name == "linear-sink")
    return VectorField([](double x, double y) { return std::array<double, 2>{-x, -y}; });
  if (name == "linear-saddle")
    return VectorField([](double x, double y) { return std::array<double, 2>{x, -y}; });
  if (name == "center")
    return VectorField([](double x, double y) { return std::array<double, 2>{y, -x}; });
  if (name == "double-well")
    return VectorField([](double x, double y) { return std::array<double, 2>{x - x * x * x, -y}; });
  return std::nullopt;
}

std::vector<std::string> builtin_field_names() {
  return {"linear-sink", "linear-saddle", "center", "double-well"};
}

}  // namespace orbitspace
