#pragma once

// G-decorated parameter words W^n_m(A, G): validation, substitution,
// enumeration and the textual notation ("c a x1 a x1^g2 ...").

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramcat/group_action.hpp"

namespace ramcat {

enum class WordErrorKind {
  EmptyWord,
  BadToken,
  ParameterOutOfRange,
  LetterWithNonIdentityExponent,
  MissingParameter,
  FirstOccurrenceNotE,
  FirstOccurrenceOrderViolation,
  ContextMismatch,
  ArityMismatch,
  SyntaxError,
  UnknownSymbol,
};

class WordError : public KindedError<WordErrorKind>
{
public:
  WordError(WordErrorKind kind, const std::string& what, std::uint32_t first = 0,
            std::uint32_t second = 0)
    : KindedError(kind, what), first_(first), second_(second)
  {}

  /// Positions are 1-based. For FirstOccurrenceNotE: (parameter, position);
  /// for FirstOccurrenceOrderViolation: (k, l); otherwise the position or
  /// parameter index named in the message.
  std::uint32_t first() const noexcept { return first_; }
  std::uint32_t second() const noexcept { return second_; }

private:
  std::uint32_t first_;
  std::uint32_t second_;
};

/// The (A, G) data plus an optional cap on parameter indices.
struct WordContext
{
  RightAction action;
  std::optional<std::uint32_t> variable_limit;

  const FiniteGroup& group() const noexcept { return action.group(); }

  friend bool operator==(const WordContext&, const WordContext&) = default;
};

using ContextPtr = std::shared_ptr<const WordContext>;

ContextPtr make_context(RightAction action, std::optional<std::uint32_t> variable_limit = {});
/// The shared (∅, {e}) context.
const ContextPtr& plain_context();
/// Same context (pointer-equal or structurally equal).
bool same_context(const ContextPtr& a, const ContextPtr& b);

enum class SymbolKind : std::uint8_t { Param = 0, Letter = 1 };

struct Token
{
  SymbolKind kind = SymbolKind::Param;
  /// Parameter index (1-based) or letter index (0-based into the alphabet).
  std::uint32_t index = 1;
  GroupElement exponent = neutral;

  static constexpr Token param(std::uint32_t j, GroupElement g = neutral) noexcept
  {
    return {SymbolKind::Param, j, g};
  }
  static constexpr Token letter(Letter a) noexcept { return {SymbolKind::Letter, a, neutral}; }

  bool is_param() const noexcept { return kind == SymbolKind::Param; }

  friend bool operator==(const Token&, const Token&) = default;
};

class DecoratedWord
{
public:
  const ContextPtr& context() const noexcept { return context_; }
  std::span<const Token> tokens() const noexcept { return tokens_; }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }
  /// m: the declared number of parameters.
  std::uint32_t parameters() const noexcept { return m_; }
  /// n: the number of letters (tokens).
  std::uint32_t length() const noexcept { return static_cast<std::uint32_t>(tokens_.size()); }

  friend bool operator==(const DecoratedWord& a, const DecoratedWord& b)
  {
    return a.m_ == b.m_ && a.tokens_ == b.tokens_ && same_context(a.context_, b.context_);
  }

private:
  DecoratedWord(ContextPtr context, std::vector<Token> tokens, std::uint32_t m)
    : context_(std::move(context)), tokens_(std::move(tokens)), m_(m)
  {}

  friend DecoratedWord validate_word(std::vector<Token>, std::uint32_t, ContextPtr);
  friend DecoratedWord substitute(const DecoratedWord&, const DecoratedWord&);
  friend DecoratedWord identity_word(std::uint32_t, ContextPtr);
  friend void for_each_word(std::uint32_t, std::uint32_t, const ContextPtr&,
                            const std::function<void(const DecoratedWord&)>&);
  friend DecoratedWord make_word_unchecked(ContextPtr, std::vector<Token>, std::uint32_t);

  ContextPtr context_;
  std::vector<Token> tokens_;
  std::uint32_t m_ = 0;
};

/// Checks the four defining conditions in order and returns the word, or
/// throws the first violation.
DecoratedWord validate_word(std::vector<Token> tokens, std::uint32_t m, ContextPtr context);

/// Non-throwing check; nullopt if the tokens form a word of W^n_m.
std::optional<WordError> check_word(std::span<const Token> tokens, std::uint32_t m,
                                    const WordContext& context);

/// Builds a word without validation. Callers guarantee the invariants.
DecoratedWord make_word_unchecked(ContextPtr context, std::vector<Token> tokens,
                                  std::uint32_t m);

/// u · v for u ∈ W^n_m and v ∈ W^m_k: each x_i in u is replaced by the
/// i-th token of v. An occurrence x_i^h receiving v_i = x_j^g becomes
/// x_j^{g·h}; receiving a letter a it becomes the letter a^h.
DecoratedWord substitute(const DecoratedWord& u, const DecoratedWord& v);

inline DecoratedWord operator*(const DecoratedWord& u, const DecoratedWord& v)
{
  return substitute(u, v);
}

/// x_1 x_2 ... x_n.
DecoratedWord identity_word(std::uint32_t n, ContextPtr context);

/// Visits W^n_m(A, G) in lexicographic token order (Param < Letter, then
/// index, then exponent rank).
void for_each_word(std::uint32_t m, std::uint32_t n, const ContextPtr& context,
                   const std::function<void(const DecoratedWord&)>& visit);

std::vector<DecoratedWord> enumerate_words(std::uint32_t m, std::uint32_t n,
                                           const ContextPtr& context);

/// Parses whitespace-separated tokens: a letter name or x<j>, optionally
/// followed by ^<element name>. m defaults to the largest parameter index.
DecoratedWord parse_word(std::string_view text, const ContextPtr& context,
                         std::optional<std::uint32_t> m = {});

/// Canonical notation: single spaces, exponent e omitted.
std::string format_word(const DecoratedWord& word);

} // namespace ramcat
