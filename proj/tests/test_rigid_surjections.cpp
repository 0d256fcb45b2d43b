#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ramcat/rigid_surjections.hpp"

using namespace ramcat;

namespace {

std::vector<std::uint32_t> imgs(std::span<const std::uint32_t> s) { return {s.begin(), s.end()}; }

std::vector<RigidSurjection> brute_rsurj(std::uint32_t n, std::uint32_t m)
{
  std::vector<RigidSurjection> out;
  oracle::for_each_map(n, m, [&](const auto& img) {
    if (oracle::is_rigid(img, m))
      out.push_back(make_rigid_unchecked(img, m));
  });
  return out;
}

} // namespace

TEST_CASE("validate_rigid")
{
  CHECK(imgs(validate_rigid(3, 2, {1, 2, 1}).images()) == std::vector<std::uint32_t>{1, 2, 1});
  try {
    validate_rigid(3, 2, {2, 1, 1});
    FAIL("expected MinPreimageOrder");
  } catch (const ChainError& e) {
    CHECK(e.kind() == ChainErrorKind::MinPreimageOrder);
  }
  CHECK_THROWS_AS(validate_rigid(3, 3, {1, 2, 2}), ChainError);
  CHECK_THROWS_AS(validate_rigid(3, 2, {1, 2}), ChainError);
  CHECK_THROWS_AS(validate_rigid(2, 2, {1, 3}), ChainError);
  for (std::uint32_t n = 1; n <= 5; ++n)
    CHECK_NOTHROW(validate_rigid(n, n, imgs(identity_rsurj(n).images())));
}

TEST_CASE("labelled chains")
{
  Chain dom({"p", "q", "r"}), cod({"lo", "hi"});
  auto f = validate_rigid(dom, cod, {"lo", "hi", "lo"});
  CHECK(f == validate_rigid(3, 2, {1, 2, 1}));
  CHECK_THROWS_AS(validate_rigid(dom, cod, {"hi", "lo", "lo"}), ChainError);
  CHECK_THROWS_AS(validate_rigid(dom, cod, {"lo", "mid", "lo"}), ChainError);
}

TEST_CASE("compose")
{
  auto f = validate_rigid(4, 2, {1, 1, 2, 2});
  auto g = validate_rigid(2, 1, {1, 1});
  CHECK(imgs(compose(g, f).images()) == std::vector<std::uint32_t>{1, 1, 1, 1});
  auto h = validate_rigid(3, 2, {1, 2, 1});
  CHECK(compose(identity_rsurj(2), h) == h);
  auto p = validate_rigid(4, 3, {1, 2, 3, 2});
  auto q = validate_rigid(3, 2, {1, 1, 2});
  CHECK(imgs(compose(q, p).images()) == std::vector<std::uint32_t>{1, 1, 2, 1});
  CHECK_THROWS_AS(compose(p, q), ChainError);
}

TEST_CASE("enumerate_rsurj small counts")
{
  CHECK(enumerate_rsurj(3, 2).size() == 3);
  CHECK(enumerate_rsurj(4, 2).size() == 7);
  for (std::uint32_t n = 1; n <= 6; ++n) {
    auto all = enumerate_rsurj(n, n);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == identity_rsurj(n));
  }
}

TEST_CASE("property: enumeration equals brute force and S(n,m)")
{
  for (std::uint32_t n = 1; n <= 7; ++n)
    for (std::uint32_t m = 1; m <= n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      auto got = enumerate_rsurj(n, m);
      auto want = brute_rsurj(n, m);
      CHECK(got.size() == oracle::stirling2(n, m));
      // brute force visits maps in lexicographic order, the documented order
      CHECK(got == want);
    }
  CHECK(enumerate_rsurj(2, 3).empty());
}

TEST_CASE("property: composition is closed and associative")
{
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (std::uint32_t m = 1; m <= n; ++m)
      for (const auto& f : enumerate_rsurj(n, m))
        for (std::uint32_t k = 1; k <= m; ++k)
          for (const auto& g : enumerate_rsurj(m, k)) {
            auto gf = compose(g, f);
            CHECK_FALSE(check_rigid(n, k, gf.images()).has_value());
            for (std::uint32_t l = 1; l <= k; ++l)
              for (const auto& h : enumerate_rsurj(k, l))
                CHECK(compose(h, gf) == compose(compose(h, g), f));
          }
}

TEST_CASE("words and surjections")
{
  auto plain = plain_context();
  auto u = parse_word("x1 x2 x1", plain);
  CHECK(imgs(word_to_rsurj(u).images()) == std::vector<std::uint32_t>{1, 2, 1});
  CHECK(word_to_rsurj(parse_word("x1", plain)) == identity_rsurj(1));
  auto z2 = make_context(RightAction::trivial(FiniteGroup::cyclic(2)));
  CHECK_THROWS_AS(word_to_rsurj(parse_word("x1 x1^g", z2)), ChainError);
}

TEST_CASE("property: word <-> surjection round trips for n <= 6")
{
  auto plain = plain_context();
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (std::uint32_t m = 1; m <= n; ++m) {
      for (const auto& u : enumerate_words(m, n, plain))
        CHECK(rsurj_to_word(word_to_rsurj(u)) == u);
      for (const auto& f : enumerate_rsurj(n, m))
        CHECK(word_to_rsurj(rsurj_to_word(f)) == f);
    }
}

TEST_CASE("property: f_{u·v} = f_v ∘ f_u for n <= 6")
{
  auto plain = plain_context();
  std::size_t pairs = 0;
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (std::uint32_t m = 1; m <= n; ++m)
      for (const auto& u : enumerate_words(m, n, plain))
        for (std::uint32_t k = 1; k <= m; ++k)
          for (const auto& v : enumerate_words(k, m, plain)) {
            ++pairs;
            // pointwise by hand: (u·v)(i) = v(u(i))
            std::vector<std::uint32_t> expect;
            for (auto t : u.tokens())
              expect.push_back(v[t.index - 1].index);
            auto fuv = word_to_rsurj(u * v);
            CHECK(imgs(fuv.images()) == expect);
            CHECK(fuv == compose(word_to_rsurj(v), word_to_rsurj(u)));
          }
  CHECK(pairs > 1000);
}

TEST_CASE("dual")
{
  auto f = validate_rigid(5, 3, {1, 1, 2, 1, 3});
  CHECK(imgs(dual(f).images()) == std::vector<std::uint32_t>{1, 3, 5});
  for (std::uint32_t n = 1; n <= 5; ++n)
    CHECK(dual(identity_rsurj(n)) == identity_injection(n));
}

TEST_CASE("property: dual is a contravariant functor, strictly increasing, a section")
{
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (std::uint32_t m = 1; m <= n; ++m)
      for (const auto& f : enumerate_rsurj(n, m)) {
        auto d = dual(f);
        for (std::uint32_t i = 1; i <= m; ++i) {
          CHECK(f(d(i)) == i);
          if (i > 1)
            CHECK(d(i - 1) < d(i));
        }
        for (std::uint32_t k = 1; k <= m; ++k)
          for (const auto& g : enumerate_rsurj(m, k))
            CHECK(dual(compose(g, f)) == compose(d, dual(g)));
      }
}

TEST_CASE("dual always fixes 1, so it misses most injections")
{
  // Inj(1, 3) has three maps but only 1 |-> 1 is a dual.
  std::set<std::vector<std::uint32_t>> hit;
  for (const auto& f : enumerate_rsurj(3, 1))
    hit.insert(imgs(dual(f).images()));
  CHECK(hit.size() == 1);
  CHECK(enumerate_monotone(1, 3).size() == 3);
}

TEST_CASE("property: shifted dual is onto Inj(m, n) and functorial")
{
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (std::uint32_t m = 1; m <= n; ++m) {
      std::set<std::vector<std::uint32_t>> hit;
      for (const auto& f : enumerate_rsurj(n + 1, m + 1)) {
        auto d = shifted_dual(f);
        CHECK(d.domain_size() == m);
        CHECK(d.codomain_size() == n);
        hit.insert(imgs(d.images()));
        for (std::uint32_t k = 1; k <= m; ++k)
          for (const auto& g : enumerate_rsurj(m + 1, k + 1))
            CHECK(shifted_dual(compose(g, f)) == compose(d, shifted_dual(g)));
      }
      CHECK(hit.size() == oracle::binomial(n, m));
      for (const auto& g : enumerate_monotone(m, n))
        CHECK(shifted_dual(from_shifted_dual(g)) == g);
    }
}

TEST_CASE("parse and format images")
{
  auto f = parse_rsurj("(1,2,1)");
  CHECK(f.codomain_size() == 2);
  CHECK(format_images(f.images()) == "(1,2,1)");
  CHECK(parse_rsurj("1, 2 ,1") == f);
  CHECK_THROWS_AS(parse_rsurj("(1,2,x)"), ChainError);
  CHECK_THROWS_AS(parse_rsurj("(1,2,1)", 3), ChainError);
}
