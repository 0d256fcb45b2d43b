#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ramcat/io.hpp"
#include "ramcat/parameter_words.hpp"

using namespace ramcat;

namespace {

ContextPtr z3() { return make_context(z3_rotation_action()); }

ContextPtr over(std::uint32_t order, std::vector<std::string> letters, bool swap = false)
{
  auto G = FiniteGroup::cyclic(order);
  if (!swap)
    return make_context(RightAction::trivial(G, letters));
  return make_context(z2_swap_action());
}

// The four word conditions written out directly on token lists.
bool conditions_hold(const std::vector<Token>& w, std::uint32_t m)
{
  std::vector<bool> seen(m + 1);
  std::uint32_t next = 1;
  for (const auto& t : w) {
    if (!t.is_param()) {
      if (t.exponent != neutral)
        return false;
      continue;
    }
    if (t.index < 1 || t.index > m)
      return false;
    if (!seen[t.index]) {
      if (t.exponent != neutral || t.index != next)
        return false;
      seen[t.index] = true;
      ++next;
    }
  }
  return next == m + 1;
}

// Every token sequence of length n over params 1..m, exponents in G and the
// letters (with any exponent), filtered by conditions_hold.
std::size_t brute_count(std::uint32_t m, std::uint32_t n, const ContextPtr& ctx)
{
  std::vector<Token> alphabet;
  const auto t = ctx->group().order();
  for (std::uint32_t j = 1; j <= m; ++j)
    for (GroupElement g = 0; g < t; ++g)
      alphabet.push_back(Token::param(j, g));
  for (Letter a = 0; a < ctx->action.alphabet_size(); ++a)
    for (GroupElement g = 0; g < t; ++g)
      alphabet.push_back({SymbolKind::Letter, a, g});
  std::size_t count = 0;
  std::vector<std::size_t> pos(n, 0);
  std::vector<Token> w(n);
  if (alphabet.empty())
    return n == 0 ? 1 : 0;
  while (true) {
    for (std::uint32_t i = 0; i < n; ++i)
      w[i] = alphabet[pos[i]];
    count += conditions_hold(w, m);
    std::uint32_t i = n;
    while (i > 0 && pos[i - 1] + 1 == alphabet.size())
      pos[--i] = 0;
    if (i == 0)
      break;
    ++pos[i - 1];
  }
  return count;
}

} // namespace

TEST_CASE("the 3-parameter 12-word over (A, Z3)")
{
  auto u = parse_word("c a x1 a x1^g2 x2 d x3 x2^g2 x1^g a x3^g", z3(), 3);
  CHECK(u.parameters() == 3);
  CHECK(u.length() == 12);
  CHECK(format_word(u) == "c a x1 a x1^g2 x2 d x3 x2^g2 x1^g a x3^g");
  CHECK(u[4] == Token::param(1, *z3()->group().find("g2")));
}

TEST_CASE("validate_word")
{
  auto plain = plain_context();
  CHECK(validate_word({Token::param(1), Token::param(2), Token::param(3)}, 3, plain) ==
        identity_word(3, plain));

  try {
    validate_word({Token::param(2), Token::param(1)}, 2, plain);
    FAIL("expected FirstOccurrenceOrderViolation");
  } catch (const WordError& e) {
    CHECK(e.kind() == WordErrorKind::FirstOccurrenceOrderViolation);
  }

  auto g2 = over(2, {});
  try {
    validate_word({Token::param(1, 1), Token::param(1)}, 1, g2);
    FAIL("expected FirstOccurrenceNotE");
  } catch (const WordError& e) {
    CHECK(e.kind() == WordErrorKind::FirstOccurrenceNotE);
    CHECK(e.first() == 1);
    CHECK(e.second() == 1);
  }

  auto a = over(2, {"a"});
  CHECK_THROWS_AS(validate_word({Token::param(1), {SymbolKind::Letter, 0, 1}}, 1, a), WordError);
  CHECK_THROWS_AS(validate_word({Token::param(1)}, 2, plain), WordError);
  CHECK_THROWS_AS(validate_word({Token::param(3)}, 2, plain), WordError);
  // m = 0 words over a nonempty alphabet are accepted.
  CHECK(validate_word({Token::letter(0), Token::letter(0)}, 0, a).parameters() == 0);
}

TEST_CASE("substitution: the worked example")
{
  auto ctx = z3();
  auto u = parse_word("c a x1 a x1^g2 x2 d x3 x2^g2 x1^g a x3^g", ctx);
  auto v = parse_word("b x1 x1^g2", ctx);
  CHECK(format_word(u * v) == "c a b a a x1 d x1^g2 x1^g2 c a x1");
}

TEST_CASE("substitution: small cases")
{
  auto plain = plain_context();
  auto u = parse_word("x1 x2 x1", plain);
  auto v = parse_word("x1 x1", plain);
  CHECK(format_word(u * v) == "x1 x1 x1");
  CHECK(u * identity_word(2, plain) == u);
  CHECK(identity_word(1, plain) == parse_word("x1", plain));
  CHECK(format_word(identity_word(3, plain)) == "x1 x2 x3");

  // exponents multiply: x1^g receiving x1^g gives x1^{g·g} = x1^e in Z2
  auto z2 = over(2, {});
  auto p = parse_word("x1 x2 x2^g", z2);
  auto q = parse_word("x1 x1^g", z2);
  CHECK(format_word(p * q) == "x1 x1^g x1");
}

TEST_CASE("substitution rejects arity and context mismatches")
{
  auto plain = plain_context();
  auto u = parse_word("x1 x2", plain);
  CHECK_THROWS_AS(u * parse_word("x1 x2 x3", plain), WordError);
  CHECK_THROWS_AS(u * parse_word("x1 x2", over(2, {})), WordError);
}

TEST_CASE("enumerate_words small cases")
{
  auto plain = plain_context();
  auto w12 = enumerate_words(1, 2, plain);
  REQUIRE(w12.size() == 1);
  CHECK(format_word(w12[0]) == "x1 x1");
  CHECK(enumerate_words(2, 3, plain).size() == 3);

  auto a = over(1, {"a"});
  std::set<std::string> got;
  for (const auto& w : enumerate_words(1, 2, a))
    got.insert(format_word(w));
  CHECK(got == std::set<std::string>{"x1 x1", "x1 a", "a x1"});
}

TEST_CASE("property: |W^n_m(∅,{e})| = S(n,m), empty iff m > n")
{
  auto plain = plain_context();
  for (std::uint32_t n = 1; n <= 7; ++n)
    for (std::uint32_t m = 1; m <= 8; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const auto count = enumerate_words(m, n, plain).size();
      CHECK(count == oracle::stirling2(n, m));
      CHECK((count == 0) == (m > n));
    }
}

TEST_CASE("property: enumeration matches brute force over all token sequences")
{
  std::vector<ContextPtr> contexts{plain_context(), over(2, {}), over(1, {"a"}), over(2, {"a"}),
                                   over(2, {}, true), over(3, {"a", "b"})};
  for (const auto& ctx : contexts)
    for (std::uint32_t n = 1; n <= 4; ++n)
      for (std::uint32_t m = 0; m <= n + 1; ++m) {
        if (m == 0 && ctx->action.alphabet_size() == 0)
          continue;
        CAPTURE(n);
        CAPTURE(m);
        auto words = enumerate_words(m, n, ctx);
        CHECK(words.size() == brute_count(m, n, ctx));
        std::set<std::string> distinct;
        for (const auto& w : words) {
          distinct.insert(format_word(w));
          CHECK_FALSE(check_word(w.tokens(), m, *ctx).has_value());
        }
        CHECK(distinct.size() == words.size());
      }
}

TEST_CASE("property: substitution is associative and closed; identity is neutral")
{
  std::vector<ContextPtr> contexts{plain_context(), over(2, {}), over(1, {"a"}), over(2, {"a"}),
                                   over(2, {}, true)};
  for (const auto& ctx : contexts) {
    std::size_t triples = 0;
    for (std::uint32_t n = 1; n <= 4; ++n)
      for (std::uint32_t m = 1; m <= n; ++m)
        for (const auto& u : enumerate_words(m, n, ctx)) {
          CHECK(identity_word(n, ctx) * u == u);
          CHECK(u * identity_word(m, ctx) == u);
          for (std::uint32_t k = 1; k <= m; ++k)
            for (const auto& v : enumerate_words(k, m, ctx)) {
              auto uv = u * v;
              CHECK_FALSE(check_word(uv.tokens(), k, *ctx).has_value());
              for (std::uint32_t l = 1; l <= k; ++l)
                for (const auto& w : enumerate_words(l, k, ctx)) {
                  ++triples;
                  if (!((uv * w) == (u * (v * w))))
                    FAIL_CHECK("not associative: " << format_word(u) << " | " << format_word(v)
                                                   << " | " << format_word(w));
                }
            }
        }
    CHECK(triples > 0);
  }
}

TEST_CASE("parse and format")
{
  auto ctx = z3();
  auto x = parse_word("x1", ctx);
  REQUIRE(x.length() == 1);
  CHECK(x[0].is_param());
  CHECK(x[0].index == 1);
  CHECK(x[0].exponent == neutral);
  CHECK(format_word(parse_word("x1  x2", ctx)) == "x1 x2");
  CHECK(format_word(parse_word("  x1\tx2^e ", ctx)) == "x1 x2");
  CHECK_THROWS_AS(parse_word("x1 q", ctx), WordError);
  CHECK_THROWS_AS(parse_word("x1^h", ctx), WordError);
  CHECK_THROWS_AS(parse_word("x0", ctx), WordError);
  CHECK_THROWS_AS(parse_word("", ctx), WordError);
  CHECK(parse_word("x1 x1", ctx, 1).parameters() == 1);
  CHECK_THROWS_AS(parse_word("x1 x1", ctx, 2), WordError);
}
