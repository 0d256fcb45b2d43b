#include <doctest.h>

#include "ramcat/builders.hpp"
#include "ramcat/io.hpp"
#include "ramcat/ramsey.hpp"

using namespace ramcat;

namespace {

struct Instance
{
  FragmentPtr fr;
  ObjectId a, b, c;
};

Instance ram_instance(std::uint32_t A, std::uint32_t B, std::uint32_t C)
{
  std::vector<std::uint32_t> sizes{A, B, C};
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  auto fr = ram_fragment(sizes);
  return {fr, *fr->object_by_size(A), *fr->object_by_size(B), *fr->object_by_size(C)};
}

// Does some w : B -> C make w·hom(A,B) monochromatic? Composition goes
// through the fragment directly, no copy tables.
bool has_mono_copy(const Instance& in, const std::vector<std::uint32_t>& color)
{
  const auto& fr = *in.fr;
  auto points = fr.hom(in.a, in.c);
  auto local = [&](MorphismId h) {
    return static_cast<std::size_t>(std::find(points.begin(), points.end(), h) - points.begin());
  };
  for (auto w : fr.hom(in.b, in.c)) {
    bool mono = true;
    std::optional<std::uint32_t> col;
    for (auto f : fr.hom(in.a, in.b)) {
      const auto c = color[local(fr.compose(w, f))];
      if (col && *col != c) {
        mono = false;
        break;
      }
      col = c;
    }
    if (mono)
      return true;
  }
  return false;
}

// Arrow by enumerating every k-coloring.
bool brute_arrow(const Instance& in, std::uint32_t k)
{
  const auto n = in.fr->hom(in.a, in.c).size();
  std::vector<std::uint32_t> color(n, 0);
  while (true) {
    if (!has_mono_copy(in, color))
      return false;
    std::size_t i = n;
    while (i > 0 && color[i - 1] + 1 == k)
      color[--i] = 0;
    if (i == 0)
      return true;
    ++color[i - 1];
  }
}

std::vector<std::uint32_t> widen(const Coloring& c) { return {c.colors.begin(), c.colors.end()}; }

} // namespace

TEST_CASE("pigeonhole cases")
{
  auto i = ram_instance(1, 2, 3);
  auto v = check_arrow_exhaustive(*i.fr, i.a, i.b, i.c, 2);
  CHECK(v.holds);
  CHECK(v.stats.colorings == 8);

  auto j = ram_instance(1, 2, 2);
  auto w = check_arrow_exhaustive(*j.fr, j.a, j.b, j.c, 2);
  CHECK_FALSE(w.holds);
  REQUIRE(w.counterexample.has_value());
  CHECK(w.counterexample->colors[0] != w.counterexample->colors[1]);

  for (auto [A, B, C] : {std::tuple{1u, 2u, 3u}, {2u, 3u, 4u}, {1u, 1u, 1u}, {2u, 2u, 5u}}) {
    auto in = ram_instance(A, B, C);
    CHECK(check_arrow_exhaustive(*in.fr, in.a, in.b, in.c, 1).holds);
    CHECK(find_bad_coloring(*in.fr, in.a, in.b, in.c, 1).outcome == SearchOutcome::NoneFound);
  }
}

TEST_CASE("the 5-point counterexample and the arrow at 6")
{
  auto five = ram_instance(2, 3, 5);
  auto r = find_bad_coloring(*five.fr, five.a, five.b, five.c, 2);
  REQUIRE(r.outcome == SearchOutcome::Found);
  REQUIRE(r.coloring.has_value());
  CHECK_FALSE(has_mono_copy(five, widen(*r.coloring)));
  auto cert = certify_bad_coloring(*five.fr, five.b, *r.coloring);
  CHECK(cert.defeats_every_copy);
  CHECK(cert.copies_checked == 10);

  // the pentagon coloring: {i,j} by whether |i-j| is 1 or 4
  const auto& fr = *five.fr;
  std::vector<std::uint32_t> pentagon;
  for (auto h : fr.hom(five.a, five.c)) {
    const auto& inj = std::get<MonotoneInjection>(fr.morphism(h).payload);
    const auto d = inj(2) - inj(1);
    pentagon.push_back(d == 1 || d == 4 ? 0 : 1);
  }
  CHECK_FALSE(has_mono_copy(five, pentagon));

  auto six = ram_instance(2, 3, 6);
  CHECK(find_bad_coloring(*six.fr, six.a, six.b, six.c, 2).outcome == SearchOutcome::NoneFound);
}

TEST_CASE("min_ramsey_witness")
{
  auto r = min_ramsey_witness(ram_family(), 2, 3, 2, 8);
  REQUIRE(r.n.has_value());
  CHECK(*r.n == 6);
  for (const auto& c : r.candidates)
    if (c.n < 6 && !c.skipped) {
      REQUIRE(c.counterexample.has_value());
      auto in = ram_instance(2, 3, c.n);
      CHECK_FALSE(has_mono_copy(in, widen(*c.counterexample)));
    }

  CHECK_FALSE(min_ramsey_witness(ram_family(), 2, 3, 2, 5).n.has_value());

  for (std::uint32_t m = 1; m <= 4; ++m)
    for (std::uint32_t k = 1; k <= 3; ++k) {
      if (k * (m - 1) + 1 > 9)
        continue;
      auto p = min_ramsey_witness(ram_family(), 1, m, k, 10);
      REQUIRE(p.n.has_value());
      CHECK(*p.n == k * (m - 1) + 1);
    }

  auto one = min_ramsey_witness(dram_op_family(), 1, 3, 1, 6);
  REQUIRE(one.n.has_value());
  CHECK(*one.n == 3);
}

TEST_CASE("property: both engines agree with brute force on small ram instances")
{
  std::size_t instances = 0;
  for (std::uint32_t C = 1; C <= 6; ++C)
    for (std::uint32_t B = 1; B <= C; ++B)
      for (std::uint32_t A = 1; A <= B; ++A) {
        auto in = ram_instance(A, B, C);
        if (in.fr->hom(in.a, in.c).size() > 16)
          continue;
        for (std::uint32_t k = 1; k <= 2; ++k) {
          ++instances;
          CAPTURE(A);
          CAPTURE(B);
          CAPTURE(C);
          const bool truth = brute_arrow(in, k);
          auto ex = check_arrow_exhaustive(*in.fr, in.a, in.b, in.c, k);
          auto se = find_bad_coloring(*in.fr, in.a, in.b, in.c, k);
          CHECK(ex.holds == truth);
          CHECK((se.outcome == SearchOutcome::NoneFound) == truth);
          if (se.coloring)
            CHECK_FALSE(has_mono_copy(in, widen(*se.coloring)));
        }
      }
  CHECK(instances > 20);
}

TEST_CASE("property: engines agree on GR and DRam^op instances")
{
  auto gr = gr_fragment(make_context(z2_swap_action()), 3);
  auto dop = dram_op_fragment(5);
  for (const auto& fr : {gr, dop})
    for (auto c : fr->objects())
      for (auto b : fr->objects())
        for (auto a : fr->objects()) {
          if (!fr->arrow(a, b) || !fr->arrow(b, c) || fr->hom(a, c).size() > 14)
            continue;
          Instance in{fr, a, b, c};
          const bool truth = brute_arrow(in, 2);
          CHECK(check_arrow_exhaustive(*fr, a, b, c, 2).holds == truth);
          CHECK((find_bad_coloring(*fr, a, b, c, 2).outcome == SearchOutcome::NoneFound) == truth);
        }
}

TEST_CASE("property: arrows are upward closed in the ram family")
{
  for (std::uint32_t A = 1; A <= 2; ++A)
    for (std::uint32_t B = A; B <= 3; ++B) {
      bool seen = false;
      for (std::uint32_t n = B; n <= 6; ++n) {
        auto in = ram_instance(A, B, n);
        const bool holds = find_bad_coloring(*in.fr, in.a, in.b, in.c, 2).outcome == SearchOutcome::NoneFound;
        if (seen)
          CHECK(holds);
        seen = seen || holds;
      }
    }
}

TEST_CASE("parallel search returns the same minimal n")
{
  SearchOptions par;
  par.workers = 4;
  auto a = min_ramsey_witness(ram_family(), 2, 3, 2, 7);
  auto b = min_ramsey_witness(ram_family(), 2, 3, 2, 7, par);
  CHECK(a.n == b.n);
}

TEST_CASE("errors")
{
  auto in = ram_instance(2, 3, 4);
  CHECK_THROWS_AS(build_copies(*in.fr, in.c, in.b, in.a), ArrowError);
  try {
    check_arrow_exhaustive(*in.fr, in.a, in.b, in.c, 0);
    FAIL("expected BadColorCount");
  } catch (const ArrowError& e) {
    CHECK(e.kind() == ArrowErrorKind::BadColorCount);
  }
  SearchOptions tight;
  tight.budget.max_nodes = 3;
  auto six = ram_instance(2, 3, 6);
  CHECK(find_bad_coloring(*six.fr, six.a, six.b, six.c, 2, tight).outcome == SearchOutcome::BudgetExceeded);
  ArrowBudget few;
  few.max_colorings = 10;
  try {
    check_arrow_exhaustive(*six.fr, six.a, six.b, six.c, 2, few);
    FAIL("expected BudgetExceeded");
  } catch (const ArrowError& e) {
    CHECK(e.kind() == ArrowErrorKind::BudgetExceeded);
  }
}
