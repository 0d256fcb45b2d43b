#pragma once

// Integer expressions for maps between generated preorders, e.g.
//   n % 2 == 0 ? n + 10 : (n - 1) / 2
//   (i + j, max(i, j))
// Variables: n (alias x) for ω, i and j for ω × ω. Operators, by
// precedence: ?:, || &&, == != < <= > >=, + -, * / %, unary - and !.
// Functions: min, max, abs. Division and modulo floor towards -inf.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramcat/error.hpp"

namespace ramcat {

enum class ExpressionErrorKind { Syntax, UnknownVariable, DivisionByZero };

class ExpressionError : public KindedError<ExpressionErrorKind>
{
public:
  using KindedError::KindedError;
};

class MapExpression
{
public:
  /// Throws Syntax / UnknownVariable (names outside `variables`).
  static MapExpression parse(std::string_view text, std::vector<std::string> variables);

  /// One value per tuple component.
  std::vector<std::int64_t> operator()(std::span<const std::int64_t> values) const;

  std::size_t arity() const noexcept { return outputs_.size(); }
  const std::string& text() const noexcept { return text_; }

  struct Node;

private:
  std::string text_;
  std::vector<std::string> variables_;
  std::vector<std::shared_ptr<const Node>> outputs_;
};

} // namespace ramcat
