#include <doctest.h>

#include "ramcat/builders.hpp"
#include "ramcat/functor.hpp"
#include "ramcat/io.hpp"
#include "ramcat/preadjunction.hpp"

using namespace ramcat;

namespace {

// (PA) straight from the definition: for A, B in the source range, C in the
// target range, u : F(B) -> C and f : A -> B there is v : F(A) -> F(B) with
// Φ_{B,C}(u) · f = Φ_{A,C}(u · v). Returns the number of failing (A,B,C,u,f).
std::size_t brute_failures(const PreAdjunction& pa, const PABounds& bounds)
{
  const auto& S = *pa.source;
  const auto& T = *pa.target;
  std::size_t failures = 0;
  for (auto a : bounds.source)
    for (auto b : bounds.source)
      for (auto c : bounds.target) {
        const auto fa = pa.F(a), fb = pa.F(b);
        REQUIRE(fa.has_value());
        REQUIRE(fb.has_value());
        for (auto u : T.hom(*fb, c))
          for (auto f : S.hom(a, b)) {
            const auto phi_u = pa.phi(b, c, u);
            const auto lhs = phi_u ? S.try_compose(*phi_u, f) : std::nullopt;
            bool found = false;
            for (auto v : T.hom(*fa, *fb)) {
              const auto uv = T.compose(u, v);
              const auto rhs = pa.phi(a, c, uv);
              if (lhs && rhs && *lhs == *rhs) {
                found = true;
                break;
              }
            }
            failures += !found;
          }
      }
  return failures;
}

ContextPtr z2_swap() { return make_context(z2_swap_action()); }
ContextPtr trivial_over(std::uint32_t order, std::vector<std::string> letters)
{
  return make_context(RightAction::trivial(FiniteGroup::cyclic(order), std::move(letters)));
}

void expect_sound(const PreAdjunction& pa, const PABounds& bounds, bool expect_ok)
{
  CAPTURE(pa.name);
  auto r = verify_pa(pa, bounds);
  CHECK(r.ok() == expect_ok);
  CHECK(r.failure_count == brute_failures(pa, bounds));
  for (const auto& f : r.failures)
    CHECK(recheck_failure(pa, f.instance));
  for (const auto& w : r.witnesses)
    CHECK(recheck_witness(pa, w));
  CHECK(r.landing_violations.empty());
}

} // namespace

TEST_CASE("identity pre-adjunction")
{
  auto pa = identity_pa(ram_fragment(3));
  expect_sound(pa, default_bounds(pa), true);
  auto r = verify_pa(pa);
  CHECK(r.instances > 0);
  CHECK(r.hint_succeeded == r.hint_tried);
}

TEST_CASE("a constant Φ fails (PA) and the failures are certified")
{
  auto pa = constant_phi_mutation(identity_pa(ram_fragment(3)));
  expect_sound(pa, default_bounds(pa), false);
  CHECK(verify_pa(pa).failure_count >= 1);
}

TEST_CASE("GR plain to decorated")
{
  for (auto ctx : {trivial_over(2, {"a"}), z2_swap(), trivial_over(2, {})}) {
    auto pa = pa_gr_plain_to_decorated(ctx, 3);
    expect_sound(pa, default_bounds(pa), true);
  }

  auto z3 = make_context(z3_rotation_action());
  auto u = parse_word("c a x1 a x1^g2 x2 d x3 x2^g2 x1^g a x3^g", z3);
  auto s = strip_word(u);
  CHECK(format_word(s) == "x1 x1 x1 x1 x1 x2 x1 x3 x2 x1 x1 x3");
  CHECK_FALSE(check_word(s.tokens(), s.parameters(), *s.context()).has_value());
  auto plain = parse_word("x1 x2 x1", plain_context());
  CHECK(strip_word(plain) == plain);
}

TEST_CASE("GR decorated to plain")
{
  auto a = trivial_over(1, {"a"});
  auto pa = pa_gr_decorated_to_plain(a, 2);
  const auto& plain_y = pa.target->context();
  auto read = read_over_alphabet(parse_word("x1 x2 x1", plain_y), a);
  CHECK(format_word(read) == "a x1 a");
  CHECK(read.parameters() == 1);
  auto v = prefix_alphabet(parse_word("x1 x1", a), plain_y);
  CHECK(format_word(v) == "x1 x2 x2");  // a x1 x1 over Y = (a, x1, ...)

  expect_sound(pa, default_bounds(pa), true);
  auto swap = pa_gr_decorated_to_plain(z2_swap(), 2);
  expect_sound(swap, default_bounds(swap), true);
}

TEST_CASE("GR to DRam^op")
{
  auto z3 = make_context(RightAction::trivial(FiniteGroup::cyclic(3)));
  auto f = parse_word("x1 x1^g2 x2 x1^g x2^g2", z3);
  auto v = word_to_product_surjection(f, 5);
  CHECK(v.domain_size() == 15);
  CHECK(v.codomain_size() == 6);
  // (j, h) is position 3(j-1) + rank(h) + 1 with e < g < g2
  auto at = [&](std::uint32_t j, std::uint32_t h) { return v(3 * (j - 1) + h + 1); };
  auto pt = [](std::uint32_t i, std::uint32_t g) { return 3 * (i - 1) + g + 1; };
  CHECK(at(2, 0) == pt(1, 2));
  CHECK(at(2, 1) == pt(1, 0));
  CHECK(at(2, 2) == pt(1, 1));
  CHECK(at(4, 0) == pt(1, 1));
  CHECK(at(5, 1) == pt(2, 0));
  // read back as a 15-letter word: position c carries x_i^g for v(c) = (i, g)
  auto back = surjection_to_word(v, 2, z3);
  REQUIRE(back.length() == 15);
  for (std::uint32_t c = 1; c <= 15; ++c)
    CHECK(back[c - 1] == Token::param((v(c) - 1) / 3 + 1, (v(c) - 1) % 3));

  auto pa = pa_gr_to_dramop(FiniteGroup::cyclic(2), 6);
  auto r = verify_pa(pa);
  CHECK(r.ok());
  CHECK(r.failure_count == brute_failures(pa, default_bounds(pa)));
  CHECK(r.hint_succeeded == r.hint_tried);

  auto one = pa_gr_to_dramop(FiniteGroup::trivial(), 4);
  expect_sound(one, default_bounds(one), true);
}

TEST_CASE("functor-built pre-adjunctions")
{
  auto pa = pa_ram_to_dram_op(5);
  expect_sound(pa, default_bounds(pa), true);

  auto literal = pa_ram_to_dram_op_literal(4);
  expect_sound(literal, default_bounds(literal), false);

  auto ram = ram_fragment(3);
  std::vector<ObjectId> dup{*ram->object_by_size(1), *ram->object_by_size(3)};
  auto sk = pa_skeleton(duplicate_objects(*ram, dup));
  expect_sound(sk, default_bounds(sk), true);

  auto id = pa_from_functor(identity_functor(ram));
  expect_sound(id, default_bounds(id), true);
  for (auto x : ram->objects())
    CHECK(id.F(x) == x);
}

TEST_CASE("pa_from_functor insists on fullness")
{
  auto d = dual_functor(dram_op_fragment(4), ram_fragment(4));
  try {
    pa_from_functor(d);
    FAIL("expected NotFull");
  } catch (const PAError& e) {
    CHECK(e.kind() == PAErrorKind::NotFull);
  }
}

TEST_CASE("composition")
{
  auto ram = ram_fragment(3);
  auto pa = pa_ram_to_dram_op(4);
  auto left = compose_pa(identity_pa(pa.source), pa);
  auto right = compose_pa(pa, identity_pa(pa.target));
  for (auto x : pa.source->objects()) {
    CHECK(left.F(x) == pa.F(x));
    CHECK(right.F(x) == pa.F(x));
  }
  for (auto y : pa.target->objects())
    CHECK(left.H(y) == pa.H(y));
  for (auto x : pa.source->objects())
    for (auto y : pa.target->objects())
      for (auto u : pa.target->hom(*pa.F(x), y)) {
        CHECK(left.phi(x, y, u) == pa.phi(x, y, u));
        CHECK(right.phi(x, y, u) == pa.phi(x, y, u));
      }

  auto z2a = trivial_over(2, {"a"});
  auto chain = compose_pa(pa_gr_decorated_to_plain(z2a, 2, 6), pa_gr_to_dramop(FiniteGroup::cyclic(2), 6));
  auto b = default_bounds(chain);
  std::erase_if(b.source, [&](ObjectId o) { return chain.source->object(o).size > 2; });
  expect_sound(chain, b, true);

  // plain -> decorated -> plain, and on to DRam^op, on source objects <= 2
  auto p12 = compose_pa(pa_gr_plain_to_decorated(z2a, 3), pa_gr_decorated_to_plain(z2a, 2, 3));
  auto b12 = default_bounds(p12);
  std::erase_if(b12.source, [&](ObjectId o) { return p12.source->object(o).size > 2; });
  expect_sound(p12, b12, true);
  auto p123 = compose_pa(compose_pa(pa_gr_plain_to_decorated(z2a, 6), pa_gr_decorated_to_plain(z2a, 2, 6)),
                         pa_gr_to_dramop(FiniteGroup::cyclic(2), 6));
  auto b123 = default_bounds(p123);
  std::erase_if(b123.source, [&](ObjectId o) { return p123.source->object(o).size > 2; });
  auto r123 = verify_pa(p123, b123);
  CHECK(r123.ok());
  CHECK(r123.instances > 0);

  CHECK_THROWS_AS(compose_pa(pa, pa), PAError);
}

TEST_CASE("non-thin sequence in Ram")
{
  auto ram = ram_fragment(6);
  auto seq = build_nonthin_sequence(ram, 3);
  REQUIRE(seq.objects.size() == 3);
  CHECK(ram->object(seq.objects[0]).size == 2);
  CHECK(ram->object(seq.objects[1]).size == 3);
  CHECK(ram->object(seq.objects[2]).size == 6);
  REQUIRE(seq.certificates.size() == 2);
  for (std::size_t i = 0; i + 1 < seq.objects.size(); ++i) {
    CHECK(seq.certificates[i].forward == ram->hom(seq.objects[i], seq.objects[i + 1]).size());
    CHECK(seq.certificates[i].forward >= 1);
    CHECK(seq.certificates[i].backward == 0);
  }
  CHECK(ram->hom(seq.seed_a, seq.objects[0]).size() >= 2);

  auto longer = build_nonthin_sequence(ram, 5);
  CHECK(longer.exhausted);
  CHECK(longer.objects.size() == 3);

  auto pa = pa_omega_to_nonthin(ram, seq.objects);
  expect_sound(pa, default_bounds(pa), true);

  std::vector<ObjectId> chain;
  for (std::uint32_t s = 2; s <= 6; ++s)
    chain.push_back(*ram->object_by_size(s));
  auto five = pa_omega_to_nonthin(ram, chain);
  CHECK(five.source->object_count() == 5);
  expect_sound(five, default_bounds(five), true);
}

TEST_CASE("thin fragments have no strict non-thin sequence")
{
  auto thin = thin_from_preorder(FinitePreorder::chain(4));
  try {
    build_nonthin_sequence(thin, 3);
    FAIL("expected FragmentThin");
  } catch (const PAError& e) {
    CHECK(e.kind() == PAErrorKind::FragmentThin);
  }
  auto ram = ram_fragment(4);
  std::vector<ObjectId> back{*ram->object_by_size(3), *ram->object_by_size(2)};
  try {
    pa_omega_to_nonthin(ram, back);
    FAIL("expected SequenceNotStrict");
  } catch (const PAError& e) {
    CHECK(e.kind() == PAErrorKind::SequenceNotStrict);
  }
  std::vector<ObjectId> repeat{*ram->object_by_size(2), *ram->object_by_size(2)};
  CHECK_THROWS_AS(pa_omega_to_nonthin(ram, repeat), PAError);
}

TEST_CASE("thin pre-adjunctions from monotone Tukey maps")
{
  auto id = pa_from_monotone_tukey(FinitePreorder::chain(5), FinitePreorder::chain(5), {0, 1, 2, 3, 4},
                                   {0, 1, 2, 3, 4});
  expect_sound(id, default_bounds(id), true);

  std::vector<std::size_t> f, g;
  for (std::size_t i = 0; i <= 10; ++i)
    f.push_back(2 * i);
  for (std::size_t i = 0; i <= 20; ++i)
    g.push_back(i / 2);
  auto dbl = pa_from_monotone_tukey(FinitePreorder::chain(11), FinitePreorder::chain(21), f, g);
  expect_sound(dbl, default_bounds(dbl), true);

  auto swapped = f;
  std::swap(swapped[3], swapped[4]);
  try {
    pa_from_monotone_tukey(FinitePreorder::chain(11), FinitePreorder::chain(21), swapped, g);
    FAIL("expected NotMonotone");
  } catch (const PAError& e) {
    CHECK(e.kind() == PAErrorKind::NotMonotone);
  }
  std::vector<std::size_t> zero(21, 0);
  try {
    pa_from_monotone_tukey(FinitePreorder::chain(11), FinitePreorder::chain(21), f, zero);
    FAIL("expected ImplicationFails");
  } catch (const PAError& e) {
    CHECK(e.kind() == PAErrorKind::ImplicationFails);
  }
}

TEST_CASE("cardinality inequality")
{
  auto ram_pa = pa_ram_to_dram_op(5);
  auto card = check_card_inequality(ram_pa, default_bounds(ram_pa).source);
  CHECK(card.ok());
  CHECK(card.pairs > 0);

  // with ∂ itself: |hom_Ram(2,3)| = 3 <= |RSurj(3,2)| = 3
  auto literal = pa_ram_to_dram_op_literal(4);
  const auto& S = *literal.source;
  const auto& T = *literal.target;
  auto two = *S.object_by_size(2), three = *S.object_by_size(3);
  CHECK(S.hom(two, three).size() == 3);
  CHECK(T.hom(*literal.F(two), *literal.F(three)).size() == 3);
  // elsewhere it breaks, e.g. |hom_Ram(1,3)| = 3 > |RSurj(3,1)| = 1, matching its (PA) failures
  auto lit = check_card_inequality(literal, default_bounds(literal).source);
  CHECK_FALSE(lit.ok());
  for (const auto& v : lit.violations)
    CHECK_FALSE(S.object(v.a).size == 2);
  CHECK_FALSE(verify_pa(literal).ok());
  // the shifted instance sends 2, 3 to 3, 4: RSurj(4,3) has 6
  auto s2 = *ram_pa.source->object_by_size(2), s3 = *ram_pa.source->object_by_size(3);
  CHECK(ram_pa.target->hom(*ram_pa.F(s2), *ram_pa.F(s3)).size() == 6);

  auto id = identity_pa(ram_fragment(4));
  CHECK(check_card_inequality(id, default_bounds(id).source).ok());

  auto gr = pa_gr_to_dramop(FiniteGroup::cyclic(2), 6);
  const auto& G = *gr.source;
  auto one = *G.object_by_size(1), g2 = *G.object_by_size(2);
  CHECK(G.hom(one, g2).size() == 2);
  CHECK(gr.target->hom(*gr.F(one), *gr.F(g2)).size() == 7);
  CHECK(check_card_inequality(gr, default_bounds(gr).source).ok());

  auto collapse = ram_to_chain_collapse(3);
  auto bad = check_card_inequality(collapse, default_bounds(collapse).source);
  CHECK_FALSE(bad.ok());
  for (const auto& v : bad.violations)
    CHECK(v.source > v.target);
  CHECK_FALSE(verify_pa(collapse).ok());

  auto dram = dram_fragment(3);
  try {
    check_card_inequality(identity_pa(dram), dram->objects());
    FAIL("expected SourceNotMono");
  } catch (const PAError& e) {
    CHECK(e.kind() == PAErrorKind::SourceNotMono);
  }
}

TEST_CASE("property: every verified instance is sound and satisfies the cardinality inequality")
{
  std::vector<PreAdjunction> all{identity_pa(ram_fragment(4)),
                                 pa_gr_plain_to_decorated(trivial_over(2, {"a", "b"}), 2),
                                 pa_gr_decorated_to_plain(z2_swap(), 2),
                                 pa_ram_to_dram_op(4),
                                 pa_gr_to_dramop(FiniteGroup::cyclic(2), 4)};
  for (const auto& pa : all) {
    CAPTURE(pa.name);
    const auto b = default_bounds(pa);
    auto r = verify_pa(pa, b);
    REQUIRE(r.ok());
    CHECK(brute_failures(pa, b) == 0);
    CHECK(check_card_inequality(pa, b.source).ok());
    // Φ totality: hom_C(F(A), Y) nonempty forces hom_B(A, H(Y)) nonempty
    for (auto a : b.source)
      for (auto y : b.target)
        if (pa.target->arrow(*pa.F(a), y)) {
          auto hy = pa.H(y);
          REQUIRE(hy.has_value());
          CHECK(pa.source->arrow(a, *hy));
        }
  }
}

TEST_CASE("errors")
{
  auto pa = identity_pa(ram_fragment(3));
  PABounds foreign{{object_id(99)}, {}};
  CHECK_THROWS_AS(verify_pa(pa, foreign), PAError);
  PAOptions tiny;
  tiny.max_checks = 2;
  try {
    verify_pa(pa_ram_to_dram_op(5), default_bounds(pa_ram_to_dram_op(5)), tiny);
    FAIL("expected BudgetExceeded");
  } catch (const PAError& e) {
    CHECK(e.kind() == PAErrorKind::BudgetExceeded);
  }
}
