#include <doctest.h>

#include <random>

#include "ramcat/expression.hpp"
#include "ramcat/io.hpp"
#include "ramcat/tukey.hpp"

using namespace ramcat;

namespace {

// Every preorder on n labelled points, by testing all reflexive relations.
std::vector<FinitePreorder> all_preorders(std::size_t n)
{
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b)
        off.emplace_back(a, b);
  std::vector<FinitePreorder> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size()); ++bits) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a)
      r[a][a] = true;
    for (std::size_t i = 0; i < off.size(); ++i)
      if ((bits >> i) & 1)
        r[off[i].first][off[i].second] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        if (r[a][b])
          for (std::size_t c = 0; c < n; ++c)
            if (r[b][c] && !r[a][c]) {
              transitive = false;
              break;
            }
    if (transitive)
      out.emplace_back(std::move(r));
  }
  return out;
}

bool bounded(const FinitePreorder& p, const std::vector<std::size_t>& xs)
{
  for (std::size_t y = 0; y < p.size(); ++y) {
    bool ok = true;
    for (auto x : xs)
      ok = ok && p.leq(x, y);
    if (ok)
      return true;
  }
  return false;
}

bool cofinal(const FinitePreorder& p, const std::vector<std::size_t>& xs)
{
  for (std::size_t y = 0; y < p.size(); ++y) {
    bool hit = false;
    for (auto x : xs)
      hit = hit || p.leq(y, x);
    if (!hit)
      return false;
  }
  return true;
}

std::vector<std::size_t> members(std::uint32_t mask)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if ((mask >> i) & 1)
      out.push_back(i);
  return out;
}

std::vector<std::size_t> image(const std::vector<std::size_t>& f, const std::vector<std::size_t>& xs)
{
  std::vector<std::size_t> out;
  for (auto x : xs)
    out.push_back(f[x]);
  return out;
}

bool brute_tukey(const std::vector<std::size_t>& f, const FinitePreorder& a, const FinitePreorder& b)
{
  for (std::uint32_t m = 0; m < (1u << a.size()); ++m)
    if (!bounded(a, members(m)) && bounded(b, image(f, members(m))))
      return false;
  return true;
}

bool brute_cofinal(const std::vector<std::size_t>& g, const FinitePreorder& b, const FinitePreorder& a)
{
  for (std::uint32_t m = 0; m < (1u << b.size()); ++m)
    if (cofinal(b, members(m)) && !cofinal(a, image(g, members(m))))
      return false;
  return true;
}

bool is_top(const FinitePreorder& p, std::size_t x)
{
  for (std::size_t y = 0; y < p.size(); ++y)
    if (!p.leq(y, x))
      return false;
  return true;
}

IndexMap expr_map(const std::string& text)
{
  auto e = std::make_shared<MapExpression>(MapExpression::parse(text, {"n"}));
  return [e](std::size_t x) {
    const std::int64_t v = static_cast<std::int64_t>(x);
    return static_cast<std::size_t>((*e)(std::span<const std::int64_t>(&v, 1)).at(0));
  };
}

} // namespace

TEST_CASE("preorder predicates")
{
  auto anti = preorder_predicates(FinitePreorder::antichain(2));
  CHECK_FALSE(anti.directed);
  CHECK(std::find(anti.bounded_subsets.begin(), anti.bounded_subsets.end(), Subset{3}) ==
        anti.bounded_subsets.end());

  auto chain = preorder_predicates(FinitePreorder::chain(3));
  CHECK(chain.directed);
  CHECK(chain.bounded_subsets.size() == 8);
  CHECK(chain.cofinal_subsets.size() == 4);
  for (auto m : chain.cofinal_subsets)
    CHECK((m & 4u) != 0);

  auto eq = FinitePreorder({{true, true, true}, {true, true, true}, {false, false, true}});
  auto ep = preorder_predicates(eq);
  CHECK(ep.equivalence_classes.size() == 2);
  CHECK(ep.quotient.size() == 2);
  CHECK(ep.class_of[0] == ep.class_of[1]);
}

TEST_CASE("property: predicates agree with brute force on all preorders of size <= 4")
{
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : all_preorders(n)) {
      auto pp = preorder_predicates(p);
      std::size_t nb = 0, nc = 0;
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        CHECK(is_bounded(p, m) == bounded(p, members(m)));
        CHECK(is_cofinal(p, m) == cofinal(p, members(m)));
        nb += bounded(p, members(m));
        nc += cofinal(p, members(m));
      }
      CHECK(pp.bounded_subsets.size() == nb);
      CHECK(pp.cofinal_subsets.size() == nc);
      CHECK(pp.directed == bounded(p, members((1u << n) - 1)));
    }
  CHECK(all_preorders(3).size() == 29);
  CHECK(all_preorders(4).size() == 355);
}

TEST_CASE("Tukey and cofinal maps: small cases")
{
  auto anti = FinitePreorder::antichain(2);
  auto one = FinitePreorder::chain(1);
  auto v = is_tukey_map(std::vector<std::size_t>{0, 0}, anti, one);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == 3u);

  auto c3 = FinitePreorder::chain(3);
  CHECK(is_tukey_map(std::vector<std::size_t>{0, 1, 2}, c3, c3).holds);
  CHECK(is_cofinal_map(std::vector<std::size_t>{0, 1, 2}, c3, c3).holds);

  auto c2 = FinitePreorder::chain(2);
  auto w = is_cofinal_map(std::vector<std::size_t>{0, 0, 0}, c3, c2);
  CHECK_FALSE(w.holds);
  REQUIRE(w.witness.has_value());
  CHECK(*w.witness == 4u);
  CHECK(is_cofinal_map(std::vector<std::size_t>{0, 0}, anti, one).holds);

  CHECK_THROWS_AS(is_tukey_map(std::vector<std::size_t>{0, 5}, c2, c2), PreorderError);
  CHECK_THROWS_AS(preorder_predicates(FinitePreorder::chain(16)), PreorderError);
}

TEST_CASE("property: map checkers against brute force on preorders of size <= 3")
{
  std::vector<FinitePreorder> ps;
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& p : all_preorders(n))
      ps.push_back(p);
  std::mt19937 rng(7);
  std::size_t checked = 0;
  for (const auto& a : ps)
    for (const auto& b : ps) {
      std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
      for (int t = 0; t < 3; ++t) {
        std::vector<std::size_t> f(a.size());
        for (auto& x : f)
          x = pick(rng);
        CHECK(is_tukey_map(f, a, b).holds == brute_tukey(f, a, b));
        std::vector<std::size_t> g(b.size());
        std::uniform_int_distribution<std::size_t> pick_a(0, a.size() - 1);
        for (auto& x : g)
          x = pick_a(rng);
        CHECK(is_cofinal_map(g, b, a).holds == brute_cofinal(g, b, a));
        CHECK(is_monotone_map(f, a, b) == [&] {
          for (std::size_t x = 0; x < a.size(); ++x)
            for (std::size_t y = 0; y < a.size(); ++y)
              if (a.leq(x, y) && !b.leq(f[x], f[y]))
                return false;
          return true;
        }());
        ++checked;
      }
    }
  CHECK(checked > 1000);
}

TEST_CASE("property: on finite directed preorders every map is Tukey, and top-preserving maps are cofinal")
{
  std::vector<FinitePreorder> directed;
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& p : all_preorders(n))
      if (is_directed(p))
        directed.push_back(std::move(p));
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> which(0, directed.size() - 1);
  const std::size_t maps = 100'000;
  for (std::size_t t = 0; t < maps; ++t) {
    const auto& a = directed[which(rng)];
    const auto& b = directed[which(rng)];
    std::uniform_int_distribution<std::size_t> pb(0, b.size() - 1), pa(0, a.size() - 1);
    std::vector<std::size_t> f(a.size());
    for (auto& x : f)
      x = pb(rng);
    if (!is_tukey_map(f, a, b).holds)
      FAIL_CHECK("directed map not Tukey at sample " << t);
    // g : B -> A, with the tops of B sent to tops of A half of the time
    std::vector<std::size_t> g(b.size());
    for (auto& x : g)
      x = pa(rng);
    if (t % 2 == 0) {
      std::size_t top = 0;
      while (!is_top(a, top))
        ++top;
      for (std::size_t y = 0; y < b.size(); ++y)
        if (is_top(b, y))
          g[y] = top;
    }
    bool tops_to_tops = true;
    for (std::size_t y = 0; y < b.size(); ++y)
      if (is_top(b, y) && !is_top(a, g[y]))
        tops_to_tops = false;
    if (is_cofinal_map(g, b, a).holds != tops_to_tops)
      FAIL_CHECK("cofinality differs from the top test at sample " << t);
  }
}

TEST_CASE("generated preorders")
{
  auto w = GeneratedPreorder::omega();
  CHECK(w.leq(3, 5));
  CHECK_FALSE(w.leq(5, 3));
  CHECK(w.upper_bound(3, 5) == 5u);
  CHECK(w.down_set(3).size() == 4);

  auto w2 = GeneratedPreorder::omega2();
  // every (i, j) round trips through the enumeration
  for (std::size_t x = 0; x < 60; ++x) {
    auto c = w2.coords(x);
    REQUIRE(c.size() == 2);
    CHECK(w2.index_of(c) == x);
    for (std::size_t y = 0; y < 60; ++y) {
      auto d = w2.coords(y);
      CHECK(w2.leq(x, y) == (c[0] <= d[0] && c[1] <= d[1]));
    }
    CHECK(w2.down_set(x).size() == static_cast<std::size_t>((c[0] + 1) * (c[1] + 1)));
  }
  CHECK(w2.coords(0) == std::vector<std::int64_t>{0, 0});

  auto fin = GeneratedPreorder::finite(FinitePreorder::chain(3), "c3");
  CHECK(fin.globally_bounded);
  CHECK(fin.size == 3u);
  CHECK_FALSE(GeneratedPreorder::finite(FinitePreorder::antichain(2)).globally_bounded);
}

TEST_CASE("cofinal companion")
{
  auto w = GeneratedPreorder::omega();
  auto id = cofinal_companion([](std::size_t x) { return x; }, w, w, 10);
  CHECK(id.implication_holds());
  for (std::size_t b = 0; b < 10; ++b)
    CHECK(id.g[b] == b);

  auto dbl = cofinal_companion([](std::size_t x) { return 2 * x; }, w, w, 20);
  CHECK(dbl.implication_holds());
  CHECK(dbl.pairs_checked == 400);
  for (std::size_t b = 0; b < 20; ++b)
    CHECK(dbl.g[b] == b / 2);

  auto flat = cofinal_companion([](std::size_t) { return std::size_t{0}; }, w, w, 12);
  CHECK(flat.implication_holds());
  CHECK(flat.g[5] == 11);
  CHECK_FALSE(flat.warnings.empty());

  // no upper bounds in an antichain target-side fiber
  auto anti = GeneratedPreorder::finite(FinitePreorder::antichain(2));
  try {
    cofinal_companion([](std::size_t) { return std::size_t{0}; }, anti, w, 2);
    FAIL("expected UnboundedFiber");
  } catch (const PreorderError& e) {
    CHECK(e.kind() == PreorderErrorKind::UnboundedFiber);
  }
}

TEST_CASE("property: the companion implication on many maps")
{
  auto w = GeneratedPreorder::omega();
  for (const char* text : {"n", "2*n", "n + 3", "n / 2", "n % 2 == 0 ? n + 10 : (n - 1) / 2", "n * n",
                           "max(n - 5, 0)"}) {
    CAPTURE(text);
    auto f = expr_map(text);
    auto r = cofinal_companion(f, w, w, 25);
    CHECK(r.implication_holds());
    // recheck by hand
    for (std::size_t a = 0; a < 25; ++a)
      for (std::size_t b = 0; b < 25; ++b)
        if (f(a) <= b)
          CHECK(a <= r.g[b]);
  }
}

TEST_CASE("monotonization")
{
  auto w = GeneratedPreorder::omega();
  auto id = [](std::size_t x) { return x; };
  auto t = monotonize(id, w, w, 10);
  auto c = check_trace(t, id, w, w);
  CHECK(c.ok());
  for (std::size_t n = 1; n < t.b.size(); ++n)
    CHECK(t.b[n] > t.b[n - 1]);
  for (const auto& S : t.S)
    for (std::size_t i = 1; i < S.size(); ++i)
      CHECK(S[i] == S[i - 1] + 1);

  auto f = expr_map("n % 2 == 0 ? n + 10 : (n - 1) / 2");
  auto nm = monotonize(f, w, w, 30);
  CHECK(check_trace(nm, f, w, w).ok());
  // literal monotonicity of f̂ on the processed prefix
  CHECK(nm.fhat.size() >= 30);
  for (auto [x, fx] : nm.fhat)
    for (auto [y, fy] : nm.fhat)
      if (x <= y)
        CHECK(fx <= fy);
  for (std::size_t n = 0; n < nm.S.size(); ++n)
    for (auto x : nm.S[n])
      CHECK(nm.fhat.at(x) == nm.b[n]);

  auto w2 = GeneratedPreorder::omega2();
  auto sum = [w2](std::size_t x) {
    auto c = w2.coords(x);
    return static_cast<std::size_t>(c[0] + c[1]);
  };
  auto t2 = monotonize(sum, w2, w, 10);
  CHECK(check_trace(t2, sum, w2, w).ok());
  for (auto [x, fx] : t2.fhat)
    for (auto [y, fy] : t2.fhat)
      if (w2.leq(x, y))
        CHECK(fx <= fy);

  auto top = GeneratedPreorder::finite(FinitePreorder::chain(3));
  try {
    monotonize(id, top, top, 3);
    FAIL("expected GloballyBoundedInput");
  } catch (const PreorderError& e) {
    CHECK(e.kind() == PreorderErrorKind::GloballyBoundedInput);
  }
}

TEST_CASE("check_trace notices a corrupted trace")
{
  auto w = GeneratedPreorder::omega();
  auto f = expr_map("n % 2 == 0 ? n + 10 : (n - 1) / 2");
  auto t = monotonize(f, w, w, 10);
  auto bad = t;
  bad.fhat.begin()->second += 1000;
  CHECK_FALSE(check_trace(bad, f, w, w).ok());
  auto swapped = t;
  std::swap(swapped.s[1], swapped.s[2]);
  CHECK_FALSE(check_trace(swapped, f, w, w).ok());
}

TEST_CASE("expressions")
{
  auto e = MapExpression::parse("n % 2 == 0 ? n + 10 : (n - 1) / 2", {"n"});
  auto at = [&](std::int64_t v) { return e(std::span<const std::int64_t>(&v, 1)).at(0); };
  CHECK(at(4) == 14);
  CHECK(at(5) == 2);
  auto x = MapExpression::parse("x * 3", {"n"});
  std::int64_t two = 2;
  CHECK(x(std::span<const std::int64_t>(&two, 1)).at(0) == 6);

  auto pair = MapExpression::parse("(i + j, max(i, j))", {"i", "j"});
  CHECK(pair.arity() == 2);
  std::int64_t ij[] = {2, 5};
  CHECK(pair(ij) == std::vector<std::int64_t>{7, 5});
  CHECK(MapExpression::parse("i, j", {"i", "j"}).arity() == 2);

  auto neg = MapExpression::parse("-7 / 2 + (-7 % 2) * 10 + abs(-3) + min(1, 2) + !0 + (1 < 2 && 2 <= 2 || 0)", {"n"});
  std::int64_t zero = 0;
  // floor division: -7/2 = -4, -7 % 2 = 1
  CHECK(neg(std::span<const std::int64_t>(&zero, 1)).at(0) == -4 + 10 + 3 + 1 + 1 + 1);

  CHECK_THROWS_AS(MapExpression::parse("n +", {"n"}), ExpressionError);
  CHECK_THROWS_AS(MapExpression::parse("q + 1", {"n"}), ExpressionError);
  CHECK_THROWS_AS(MapExpression::parse("(n", {"n"}), ExpressionError);
  auto div = MapExpression::parse("1 / n", {"n"});
  CHECK_THROWS_AS(div(std::span<const std::int64_t>(&zero, 1)), ExpressionError);
}

TEST_CASE("preorder files")
{
  auto p = parse_preorder_json(R"({"names": ["p","q","r"], "leq": [[1,0,1],[0,1,1],[0,0,1]]})");
  CHECK(p.size() == 3);
  CHECK(p.name(2) == "r");
  CHECK(p.leq(0, 2));
  auto q = parse_preorder_json(R"({"size": 3, "relation": [[0,1],[1,2]]})");
  CHECK(q.leq(0, 2));
  CHECK_FALSE(q.leq(2, 0));
  CHECK_THROWS_AS(parse_preorder_json(R"({"leq": [[1,1],[0,0]]})"), PreorderError);
  CHECK_THROWS_AS(parse_preorder_json(R"({"size": 2, "relation": [[0,5]]})"), ConfigError);
}
