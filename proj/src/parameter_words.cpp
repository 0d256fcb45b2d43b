#include "ramcat/parameter_words.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace ramcat {

ContextPtr make_context(RightAction action, std::optional<std::uint32_t> variable_limit)
{
  return std::make_shared<const WordContext>(WordContext{std::move(action), variable_limit});
}

const ContextPtr& plain_context()
{
  static const ContextPtr plain = make_context(RightAction{});
  return plain;
}

bool same_context(const ContextPtr& a, const ContextPtr& b)
{
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return a->action == b->action;
}

std::optional<WordError> check_word(std::span<const Token> tokens, std::uint32_t m,
                                    const WordContext& context)
{
  if (tokens.empty())
    return WordError(WordErrorKind::EmptyWord, "words must have at least one letter");

  const auto& group = context.group();
  const auto n = static_cast<std::uint32_t>(tokens.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto& t = tokens[i];
    if (!group.contains(t.exponent))
      return WordError(WordErrorKind::BadToken,
                       "unknown group element at position " + std::to_string(i + 1), i + 1);
    if (t.is_param()) {
      if (t.index == 0 || t.index > m)
        return WordError(WordErrorKind::ParameterOutOfRange,
                         "parameter x" + std::to_string(t.index) + " at position " +
                           std::to_string(i + 1) + " is outside x1..x" + std::to_string(m),
                         t.index, i + 1);
    } else if (t.index >= context.action.alphabet_size()) {
      return WordError(WordErrorKind::BadToken,
                       "unknown letter at position " + std::to_string(i + 1), i + 1);
    }
  }

  // only e can appear as the exponent of a letter
  for (std::uint32_t i = 0; i < n; ++i)
    if (!tokens[i].is_param() && tokens[i].exponent != neutral)
      return WordError(WordErrorKind::LetterWithNonIdentityExponent,
                       "letter at position " + std::to_string(i + 1) +
                         " carries a non-identity exponent",
                       i + 1);

  std::vector<std::uint32_t> first(m + 1, 0);  // 1-based position of first occurrence
  for (std::uint32_t i = 0; i < n; ++i)
    if (tokens[i].is_param() && first[tokens[i].index] == 0)
      first[tokens[i].index] = i + 1;

  // every parameter occurs
  for (std::uint32_t l = 1; l <= m; ++l)
    if (first[l] == 0)
      return WordError(WordErrorKind::MissingParameter,
                       "parameter x" + std::to_string(l) + " does not occur", l);

  // first occurrences carry e
  for (std::uint32_t l = 1; l <= m; ++l)
    if (tokens[first[l] - 1].exponent != neutral)
      return WordError(WordErrorKind::FirstOccurrenceNotE,
                       "first occurrence of x" + std::to_string(l) + " (position " +
                         std::to_string(first[l]) + ") has exponent other than e",
                       l, first[l]);

  // first occurrences ordered by index
  for (std::uint32_t l = 2; l <= m; ++l)
    if (first[l - 1] > first[l])
      return WordError(WordErrorKind::FirstOccurrenceOrderViolation,
                       "x" + std::to_string(l) + " first occurs before x" + std::to_string(l - 1),
                       l - 1, l);

  if (context.variable_limit && m > *context.variable_limit)
    return WordError(WordErrorKind::ParameterOutOfRange,
                     "word uses more parameters than the context allows", m);
  return std::nullopt;
}

DecoratedWord validate_word(std::vector<Token> tokens, std::uint32_t m, ContextPtr context)
{
  if (!context)
    throw WordError(WordErrorKind::ContextMismatch, "word has no context");
  if (auto err = check_word(tokens, m, *context))
    throw *err;
  return DecoratedWord(std::move(context), std::move(tokens), m);
}

DecoratedWord make_word_unchecked(ContextPtr context, std::vector<Token> tokens, std::uint32_t m)
{
  return DecoratedWord(std::move(context), std::move(tokens), m);
}

DecoratedWord substitute(const DecoratedWord& u, const DecoratedWord& v)
{
  if (!same_context(u.context(), v.context()))
    throw WordError(WordErrorKind::ContextMismatch, "words live over different (A, G) contexts");
  if (v.length() != u.parameters())
    throw WordError(WordErrorKind::ArityMismatch,
                    "cannot substitute a " + std::to_string(v.length()) + "-letter word into a " +
                      std::to_string(u.parameters()) + "-parameter word",
                    v.length(), u.parameters());

  const auto& action = u.context()->action;
  const auto& group = action.group();
  std::vector<Token> out;
  out.reserve(u.length());
  for (const auto& t : u.tokens()) {
    if (!t.is_param()) {
      out.push_back(t);
      continue;
    }
    const auto& r = v.tokens()[t.index - 1];
    if (r.is_param())
      out.push_back(Token::param(r.index, group.multiply(r.exponent, t.exponent)));
    else
      out.push_back(Token::letter(action.act_unchecked(r.index, t.exponent)));
  }
  return DecoratedWord(u.context(), std::move(out), v.parameters());
}

DecoratedWord identity_word(std::uint32_t n, ContextPtr context)
{
  if (n == 0)
    throw WordError(WordErrorKind::EmptyWord, "identity word needs n >= 1");
  std::vector<Token> tokens;
  tokens.reserve(n);
  for (std::uint32_t j = 1; j <= n; ++j)
    tokens.push_back(Token::param(j));
  return DecoratedWord(std::move(context), std::move(tokens), n);
}

void for_each_word(std::uint32_t m, std::uint32_t n, const ContextPtr& context,
                   const std::function<void(const DecoratedWord&)>& visit)
{
  if (n == 0 || m > n)
    return;
  struct Local
  {
    std::uint32_t m, n;
    const ContextPtr& context;
    const std::function<void(const DecoratedWord&)>& visit;
    std::vector<Token> tokens;

    void run(std::uint32_t introduced)
    {
      const auto pos = static_cast<std::uint32_t>(tokens.size());
      if (pos == n) {
        visit(make_word_unchecked(context, tokens, m));
        return;
      }
      const std::uint32_t remaining = n - pos;
      const std::uint32_t missing = m - introduced;
      const bool can_reuse = remaining > missing;
      const auto& group = context->group();

      if (can_reuse)
        for (std::uint32_t j = 1; j <= introduced; ++j)
          for (auto g : group.element_order()) {
            tokens.push_back(Token::param(j, g));
            run(introduced);
            tokens.pop_back();
          }
      if (missing > 0) {
        tokens.push_back(Token::param(introduced + 1));
        run(introduced + 1);
        tokens.pop_back();
      }
      if (can_reuse)
        for (Letter a = 0; a < context->action.alphabet_size(); ++a) {
          tokens.push_back(Token::letter(a));
          run(introduced);
          tokens.pop_back();
        }
    }
  };
  Local walker{m, n, context, visit, {}};
  walker.tokens.reserve(n);
  walker.run(0);
}

std::vector<DecoratedWord> enumerate_words(std::uint32_t m, std::uint32_t n,
                                           const ContextPtr& context)
{
  std::vector<DecoratedWord> out;
  for_each_word(m, n, context, [&](const DecoratedWord& w) { out.push_back(w); });
  return out;
}

DecoratedWord parse_word(std::string_view text, const ContextPtr& context,
                         std::optional<std::uint32_t> m)
{
  const auto& action = context->action;
  const auto& group = action.group();
  std::vector<Token> tokens;
  std::uint32_t max_param = 0;

  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::string_view item = text.substr(start, i - start);
    const auto caret = item.find('^');
    std::string_view symbol = item.substr(0, caret);
    if (symbol.empty())
      throw WordError(WordErrorKind::SyntaxError,
                      "missing symbol at offset " + std::to_string(start + 1),
                      static_cast<std::uint32_t>(start + 1));

    Token token;
    if (auto letter = action.find_letter(symbol)) {
      token = Token::letter(*letter);
    } else if (symbol.size() > 1 && symbol[0] == 'x') {
      std::uint32_t j = 0;
      auto digits = symbol.substr(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), j);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || j == 0)
        throw WordError(WordErrorKind::UnknownSymbol,
                        "unknown symbol '" + std::string(symbol) + "'",
                        static_cast<std::uint32_t>(start + 1));
      token = Token::param(j);
      max_param = std::max(max_param, j);
    } else {
      throw WordError(WordErrorKind::UnknownSymbol, "unknown symbol '" + std::string(symbol) + "'",
                      static_cast<std::uint32_t>(start + 1));
    }

    if (caret != std::string_view::npos) {
      auto exponent = item.substr(caret + 1);
      if (exponent.empty() || exponent.find('^') != std::string_view::npos)
        throw WordError(WordErrorKind::SyntaxError,
                        "malformed exponent at offset " + std::to_string(start + caret + 1),
                        static_cast<std::uint32_t>(start + caret + 1));
      auto g = group.find(exponent);
      if (!g)
        throw WordError(WordErrorKind::UnknownSymbol,
                        "unknown group element '" + std::string(exponent) + "'",
                        static_cast<std::uint32_t>(start + caret + 2));
      token.exponent = *g;
    }
    tokens.push_back(token);
  }
  return validate_word(std::move(tokens), m.value_or(max_param), context);
}

std::string format_word(const DecoratedWord& word)
{
  const auto& action = word.context()->action;
  const auto& group = action.group();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : word.tokens()) {
    if (!first)
      os << ' ';
    first = false;
    if (t.is_param())
      os << 'x' << t.index;
    else
      os << action.letter_name(t.index);
    if (t.exponent != neutral)
      os << '^' << group.name(t.exponent);
  }
  return os.str();
}

} // namespace ramcat
