#include <doctest.h>

#include "oracles.hpp"
#include "ramcat/builders.hpp"
#include "ramcat/functor.hpp"
#include "ramcat/io.hpp"

using namespace ramcat;

namespace {

ObjectId obj(const CategoryFragment& fr, std::uint32_t size) { return *fr.object_by_size(size); }

std::size_t hom_size(const CategoryFragment& fr, std::uint32_t a, std::uint32_t b)
{
  return fr.hom(obj(fr, a), obj(fr, b)).size();
}

ContextPtr z2_plain() { return make_context(RightAction::trivial(FiniteGroup::cyclic(2))); }

} // namespace

TEST_CASE("builders satisfy the category laws")
{
  std::vector<FragmentPtr> fragments{ram_fragment(3),
                                     ram_fragment(5),
                                     dram_fragment(4),
                                     dram_op_fragment(4),
                                     gr_fragment(plain_context(), 3),
                                     gr_fragment(z2_plain(), 3),
                                     gr_fragment(make_context(z2_swap_action()), 3),
                                     vec_fragment(FiniteField::gf2(), 3),
                                     vec_fragment(FiniteField::prime(3), 2)};
  for (const auto& fr : fragments) {
    CAPTURE(fr->name());
    auto d = validate_fragment(*fr);
    CHECK(d.ok());
    CHECK(d.associativity_checks > 0);
  }
}

TEST_CASE("a swapped composition entry breaks associativity")
{
  auto ram = ram_fragment(4);
  const auto o1 = obj(*ram, 1), o2 = obj(*ram, 2), o3 = obj(*ram, 3);
  const auto e = ram->hom(o1, o2)[0];
  const auto f1 = ram->hom(o2, o3)[0];
  auto f2 = f1;
  for (auto f : ram->hom(o2, o3))
    if (ram->compose(f, e) != ram->compose(f1, e))
      f2 = f;
  const auto a = ram->compose(f1, e), b = ram->compose(f2, e);
  REQUIRE(a != b);
  FragmentBuilder builder(*ram);
  builder.set_compose(f1, e, b);
  builder.set_compose(f2, e, a);
  auto broken = builder.build();
  auto d = validate_fragment(*broken);
  CHECK_FALSE(d.ok());
  bool assoc = false;
  for (const auto& v : d.violations)
    assoc = assoc || v.kind == FragmentErrorKind::AssociativityViolation;
  CHECK(assoc);
}

TEST_CASE("hom-set counts against independent formulas")
{
  auto ram = ram_fragment(8);
  for (std::uint32_t m = 1; m <= 8; ++m)
    for (std::uint32_t n = 1; n <= 8; ++n)
      CHECK(hom_size(*ram, m, n) == oracle::binomial(n, m));

  auto dram = dram_fragment(6);
  auto gr = gr_fragment(plain_context(), 6);
  for (std::uint32_t m = 1; m <= 6; ++m)
    for (std::uint32_t n = 1; n <= 6; ++n) {
      CHECK(hom_size(*dram, n, m) == oracle::stirling2(n, m));
      CHECK(hom_size(*gr, m, n) == oracle::stirling2(n, m));
    }

  CHECK(hom_size(*ram_fragment(4), 2, 4) == 6);
  CHECK(hom_size(*gr_fragment(z2_plain(), 2), 1, 2) == 2);
  CHECK(hom_size(*vec_fragment(FiniteField::gf2(), 2), 1, 2) == 3);
}

TEST_CASE("vec_fragment against brute force over all matrices")
{
  // F_2^1 -> F_2^3 (nonzero images, 0 least) and F_2^2 -> F_2^3 by hand.
  auto field = FiniteField::gf2();
  auto vec = vec_fragment(field, 3);
  auto count = [&](std::uint32_t m, std::uint32_t n) {
    std::size_t hits = 0;
    const std::uint32_t cells = m * n;
    for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
      LinearMap f{n, m, {}};
      for (std::uint32_t i = 0; i < cells; ++i)
        f.entries.push_back((bits >> i) & 1);
      // all vectors of F_2^m, checked pairwise for strict monotonicity
      bool ok = true;
      for (std::uint32_t x = 0; x < (1u << m) && ok; ++x)
        for (std::uint32_t y = 0; y < (1u << m) && ok; ++y) {
          std::vector<std::uint8_t> vx, vy;
          for (std::uint32_t i = 0; i < m; ++i) {
            vx.push_back((x >> i) & 1);
            vy.push_back((y >> i) & 1);
          }
          if (alex_less(vx, vy, field) && !alex_less(apply(f, vx, field), apply(f, vy, field), field))
            ok = false;
        }
      hits += ok;
    }
    return hits;
  };
  for (std::uint32_t m = 1; m <= 3; ++m)
    for (std::uint32_t n = m; n <= 3; ++n)
      CHECK(hom_size(*vec, m, n) == count(m, n));
}

TEST_CASE("opposite")
{
  auto dram = dram_fragment(4);
  auto op = opposite(*dram);
  CHECK(structurally_equal(*opposite(*op), *dram));
  CHECK(hom_size(*op, 2, 4) == 7);
  auto thin = thin_from_preorder(FinitePreorder::chain(3));
  CHECK(structural_checks(*opposite(*thin)).is_thin);
}

TEST_CASE("thin_from_preorder")
{
  CHECK(thin_from_preorder(FinitePreorder::chain(2))->morphism_count() == 3);
  CHECK(thin_from_preorder(FinitePreorder::antichain(2))->morphism_count() == 2);
  // every preorder on 3 points: laws hold and the fragment is thin
  for (std::uint32_t bits = 0; bits < (1u << 6); ++bits) {
    std::vector<std::vector<bool>> rel(3, std::vector<bool>(3));
    std::uint32_t i = 0;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (a != b)
          rel[a][b] = (bits >> i++) & 1;
    auto fr = thin_from_preorder(FinitePreorder::closure(rel));
    CHECK(validate_fragment(*fr).ok());
    CHECK(structural_checks(*fr).is_thin);
  }
}

TEST_CASE("skeleton")
{
  auto ram = ram_fragment(3);
  std::vector<ObjectId> dup{obj(*ram, 2)};
  auto twice = duplicate_objects(*ram, dup);
  CHECK(twice->object_count() == 4);
  CHECK(validate_fragment(*twice).ok());
  auto sk = skeleton(*twice);
  CHECK(sk.skeleton->object_count() == 3);
  auto again = skeleton(*sk.skeleton);
  CHECK(again.skeleton->object_count() == 3);
  CHECK(structurally_equal(*again.skeleton, *sk.skeleton));

  for (auto a : twice->objects())
    for (auto b : twice->objects()) {
      auto ra = sk.skeleton_object[index(a)], rb = sk.skeleton_object[index(b)];
      CHECK(sk.skeleton->hom(ra, rb).size() == twice->hom(a, b).size());
    }
  auto inc = skeleton_inclusion(sk, twice);
  CHECK(check_functor(inc).ok);
  CHECK_FALSE(find_not_full(inc).has_value());
  CHECK_FALSE(find_not_iso_dense(inc).has_value());
}

TEST_CASE("structural checks")
{
  auto ram = structural_checks(*ram_fragment(4));
  CHECK(ram.all_mono);
  CHECK_FALSE(ram.is_thin);
  CHECK(ram.is_directed);
  CHECK(ram.endomorphisms_trivial);

  CHECK(structural_checks(*thin_from_preorder(FinitePreorder::chain(3))).is_thin);

  auto dram = dram_fragment(4);
  auto epi = structural_checks(*dram).all_epi;
  CHECK(epi);
  CHECK(epi == structural_checks(*opposite(*dram)).all_mono);

  for (auto ctx : {plain_context(), z2_plain(), make_context(z2_swap_action())})
    CHECK(structural_checks(*gr_fragment(ctx, 3)).all_mono);
}

TEST_CASE("words to surjections is an isomorphism onto DRam^op")
{
  auto f = words_to_surjections(gr_fragment(plain_context(), 5), dram_op_fragment(5));
  CHECK(check_functor(f).ok);
  CHECK(is_isomorphism(f));
  CHECK(is_faithful(f));
}

TEST_CASE("∂ is a functor but not full; the shifted version is full")
{
  auto dram_op = dram_op_fragment(4);
  auto d = dual_functor(dram_op, ram_fragment(4));
  CHECK(check_functor(d).ok);
  CHECK(find_not_full(d).has_value());

  auto s = shifted_dual_functor(dram_op_fragment(std::vector<std::uint32_t>{2, 3, 4, 5}), ram_fragment(4));
  CHECK(check_functor(s).ok);
  CHECK_FALSE(find_not_full(s).has_value());
}

TEST_CASE("resource cap")
{
  BuildLimits tiny;
  tiny.max_morphisms = 10;
  try {
    ram_fragment(6, tiny);
    FAIL("expected ResourceBound");
  } catch (const FragmentError& e) {
    CHECK(e.kind() == FragmentErrorKind::ResourceBound);
  }
}

TEST_CASE("fields")
{
  CHECK_THROWS(FiniteField::prime(4));
  auto f3 = FiniteField::prime(3);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.add(2, 2) == 1);
}
