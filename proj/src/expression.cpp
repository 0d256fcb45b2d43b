#include "ramcat/expression.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace ramcat {

struct MapExpression::Node
{
  enum class Op { Const, Var, Neg, Not, Bin, Cond, Call } op = Op::Const;
  std::int64_t value = 0;  ///< constant, or variable slot
  std::string name;        ///< binary operator or function
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const MapExpression::Node>;
using Node = MapExpression::Node;

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
  if (b == 0)
    throw ExpressionError(ExpressionErrorKind::DivisionByZero, "division by zero");
  auto q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

std::int64_t eval(const Node& n, std::span<const std::int64_t> vars)
{
  switch (n.op) {
  case Node::Op::Const:
    return n.value;
  case Node::Op::Var:
    return vars[static_cast<std::size_t>(n.value)];
  case Node::Op::Neg:
    return -eval(*n.args[0], vars);
  case Node::Op::Not:
    return eval(*n.args[0], vars) == 0;
  case Node::Op::Cond:
    return eval(*n.args[0], vars) ? eval(*n.args[1], vars) : eval(*n.args[2], vars);
  case Node::Op::Call: {
    std::vector<std::int64_t> v;
    for (const auto& a : n.args)
      v.push_back(eval(*a, vars));
    if (n.name == "abs")
      return v[0] < 0 ? -v[0] : v[0];
    if (n.name == "min")
      return *std::min_element(v.begin(), v.end());
    return *std::max_element(v.begin(), v.end());
  }
  case Node::Op::Bin:
    break;
  }
  const auto& op = n.name;
  const auto a = eval(*n.args[0], vars);
  if (op == "&&")
    return a != 0 && eval(*n.args[1], vars) != 0;
  if (op == "||")
    return a != 0 || eval(*n.args[1], vars) != 0;
  const auto b = eval(*n.args[1], vars);
  if (op == "+") return a + b;
  if (op == "-") return a - b;
  if (op == "*") return a * b;
  if (op == "/") return floor_div(a, b);
  if (op == "%") return a - floor_div(a, b) * b;
  if (op == "==") return a == b;
  if (op == "!=") return a != b;
  if (op == "<") return a < b;
  if (op == "<=") return a <= b;
  if (op == ">") return a > b;
  return a >= b;
}

class Parser
{
public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  std::vector<NodePtr> top()
  {
    std::vector<NodePtr> out;
    skip();
    if (peek() == '(') {
      // A parenthesised tuple or an ordinary parenthesised expression.
      const auto save = pos_;
      ++pos_;
      out.push_back(cond());
      skip();
      if (peek() == ',') {
        while (accept(","))
          out.push_back(cond());
        expect(")");
        skip();
        if (pos_ == s_.size())
          return out;
      }
      out.clear();
      pos_ = save;
    }
    out.push_back(cond());
    while (accept(","))
      out.push_back(cond());
    skip();
    if (pos_ != s_.size())
      error("unexpected '" + std::string(s_.substr(pos_, 1)) + "'");
    return out;
  }

private:
  [[noreturn]] void error(const std::string& msg) const
  {
    throw ExpressionError(ExpressionErrorKind::Syntax,
                          msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                            std::string(s_) + "'");
  }

  void skip()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool accept(std::string_view tok)
  {
    skip();
    if (s_.substr(pos_, tok.size()) != tok)
      return false;
    // keep "<" from eating "<=" and "=" from matching "=="
    if (tok.size() == 1 && (tok == "<" || tok == ">" || tok == "!") && pos_ + 1 < s_.size() &&
        s_[pos_ + 1] == '=')
      return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok)
  {
    if (!accept(tok))
      error("expected '" + std::string(tok) + "'");
  }

  static NodePtr bin(std::string op, NodePtr a, NodePtr b)
  {
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Bin;
    n->name = std::move(op);
    n->args = {std::move(a), std::move(b)};
    return n;
  }

  NodePtr cond()
  {
    auto c = logic();
    if (!accept("?"))
      return c;
    auto a = cond();
    expect(":");
    auto b = cond();
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Cond;
    n->args = {c, a, b};
    return n;
  }

  NodePtr logic()
  {
    auto a = compare();
    for (;;) {
      if (accept("&&"))
        a = bin("&&", a, compare());
      else if (accept("||"))
        a = bin("||", a, compare());
      else
        return a;
    }
  }

  NodePtr compare()
  {
    auto a = sum();
    for (std::string_view op : {"==", "!=", "<=", ">=", "<", ">"})
      if (accept(op))
        return bin(std::string(op), a, sum());
    return a;
  }

  NodePtr sum()
  {
    auto a = product();
    for (;;) {
      if (accept("+"))
        a = bin("+", a, product());
      else if (accept("-"))
        a = bin("-", a, product());
      else
        return a;
    }
  }

  NodePtr product()
  {
    auto a = unary();
    for (;;) {
      if (accept("*"))
        a = bin("*", a, unary());
      else if (accept("/"))
        a = bin("/", a, unary());
      else if (accept("%"))
        a = bin("%", a, unary());
      else
        return a;
    }
  }

  NodePtr unary()
  {
    if (accept("-") || accept("!")) {
      auto n = std::make_shared<Node>();
      n->op = s_[pos_ - 1] == '-' ? Node::Op::Neg : Node::Op::Not;
      n->args = {unary()};
      return n;
    }
    return atom();
  }

  NodePtr atom()
  {
    skip();
    if (accept("(")) {
      auto e = cond();
      expect(")");
      return e;
    }
    auto n = std::make_shared<Node>();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::int64_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        v = v * 10 + (s_[pos_++] - '0');
      n->value = v;
      return n;
    }
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      name += s_[pos_++];
    if (name.empty())
      error("expected a number, variable or '('");
    if (name == "min" || name == "max" || name == "abs") {
      n->op = Node::Op::Call;
      n->name = name;
      expect("(");
      n->args.push_back(cond());
      while (accept(","))
        n->args.push_back(cond());
      expect(")");
      if (name == "abs" && n->args.size() != 1)
        error("abs takes one argument");
      return n;
    }
    if (name == "x")
      name = "n";
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
      throw ExpressionError(ExpressionErrorKind::UnknownVariable,
                            "unknown variable '" + name + "' in '" + std::string(s_) + "'");
    n->op = Node::Op::Var;
    n->value = it - vars_.begin();
    return n;
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

} // namespace

MapExpression MapExpression::parse(std::string_view text, std::vector<std::string> variables)
{
  MapExpression e;
  e.text_ = std::string(text);
  e.variables_ = std::move(variables);
  Parser p(e.text_, e.variables_);
  e.outputs_ = p.top();
  return e;
}

std::vector<std::int64_t> MapExpression::operator()(std::span<const std::int64_t> values) const
{
  std::vector<std::int64_t> out;
  out.reserve(outputs_.size());
  for (const auto& n : outputs_)
    out.push_back(eval(*n, values));
  return out;
}

} // namespace ramcat
