#include "ramcat/functor.hpp"

#include <algorithm>

namespace ramcat {

FunctorCheck check_functor(const FragmentFunctor& F)
{
  const auto& src = *F.source;
  const auto& tgt = *F.target;
  auto fail = [](std::string msg, std::vector<MorphismId> witness = {}) {
    return FunctorCheck{false, std::move(msg), std::move(witness)};
  };
  if (F.on_objects.size() != src.object_count() || F.on_morphisms.size() != src.morphism_count())
    return fail("functor tables do not cover the source fragment");
  for (auto a : F.on_objects)
    if (index(a) >= tgt.object_count())
      return fail("object image outside the target fragment");
  for (std::size_t i = 0; i < src.morphism_count(); ++i) {
    const auto f = morphism_id(i);
    const auto image = F(f);
    if (index(image) >= tgt.morphism_count())
      return fail("morphism image outside the target fragment", {f});
    if (tgt.dom(image) != F(src.dom(f)) || tgt.cod(image) != F(src.cod(f)))
      return fail("image of '" + src.morphism(f).label + "' has the wrong endpoints", {f});
  }
  for (auto a : src.objects())
    if (F(src.identity(a)) != tgt.identity(F(a)))
      return fail("identity of '" + src.object(a).label + "' is not preserved",
                  {src.identity(a)});
  for (auto a : src.objects())
    for (auto b : src.objects())
      for (auto f : src.hom(a, b))
        for (auto c : src.objects())
          for (auto g : src.hom(b, c)) {
            const auto gf = src.try_compose(g, f);
            const auto image = tgt.try_compose(F(g), F(f));
            if (!gf || !image || F(*gf) != *image)
              return fail("composition of '" + src.morphism(g).label + "' after '" +
                            src.morphism(f).label + "' is not preserved",
                          {f, g});
          }
  return {};
}

std::optional<NotFullWitness> find_not_full(const FragmentFunctor& F)
{
  const auto& src = *F.source;
  const auto& tgt = *F.target;
  for (auto a : src.objects())
    for (auto b : src.objects()) {
      std::vector<bool> hit(tgt.hom(F(a), F(b)).size(), false);
      for (auto f : src.hom(a, b))
        hit[tgt.morphism(F(f)).local] = true;
      auto it = std::find(hit.begin(), hit.end(), false);
      if (it != hit.end())
        return NotFullWitness{a, b, tgt.hom(F(a), F(b))[it - hit.begin()]};
    }
  return std::nullopt;
}

std::optional<ObjectId> find_not_iso_dense(const FragmentFunctor& F)
{
  const auto& src = *F.source;
  const auto& tgt = *F.target;
  for (auto y : tgt.objects()) {
    bool found = false;
    for (auto x : src.objects())
      if (F(x) == y || first_iso(tgt, F(x), y)) {
        found = true;
        break;
      }
    if (!found)
      return y;
  }
  return std::nullopt;
}

bool is_faithful(const FragmentFunctor& F)
{
  const auto& src = *F.source;
  for (auto a : src.objects())
    for (auto b : src.objects()) {
      std::vector<MorphismId> images;
      for (auto f : src.hom(a, b))
        images.push_back(F(f));
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end())
        return false;
    }
  return true;
}

bool is_isomorphism(const FragmentFunctor& F)
{
  if (!check_functor(F).ok)
    return false;
  if (F.source->object_count() != F.target->object_count())
    return false;
  std::vector<ObjectId> objs(F.on_objects);
  std::sort(objs.begin(), objs.end());
  if (std::adjacent_find(objs.begin(), objs.end()) != objs.end())
    return false;
  for (auto a : F.source->objects())
    for (auto b : F.source->objects())
      if (F.source->hom(a, b).size() != F.target->hom(F(a), F(b)).size())
        return false;
  return is_faithful(F);
}

FragmentFunctor identity_functor(const FragmentPtr& fragment)
{
  FragmentFunctor F{"id", fragment, fragment, fragment->objects(), {}};
  F.on_morphisms.resize(fragment->morphism_count());
  for (std::size_t i = 0; i < F.on_morphisms.size(); ++i)
    F.on_morphisms[i] = morphism_id(i);
  return F;
}

FragmentFunctor skeleton_inclusion(const SkeletonResult& sk, const FragmentPtr& original)
{
  FragmentFunctor F{"inclusion", sk.skeleton, original, sk.included, {}};
  const auto& s = *sk.skeleton;
  F.on_morphisms.resize(s.morphism_count());
  for (std::size_t i = 0; i < s.morphism_count(); ++i) {
    const auto& m = s.morphism(morphism_id(i));
    F.on_morphisms[i] = original->hom(sk.included[index(m.dom)], sk.included[index(m.cod)])[m.local];
  }
  return F;
}

FragmentFunctor functor_by_payload(
  std::string name, const FragmentPtr& source, const FragmentPtr& target,
  const std::function<std::optional<ObjectId>(ObjectId)>& objects,
  const std::function<Payload(const Payload&)>& morphisms)
{
  FragmentFunctor F{std::move(name), source, target, {}, {}};
  for (auto a : source->objects()) {
    auto image = objects(a);
    if (!image)
      throw FunctorError(FunctorErrorKind::FragmentMismatch,
                         "object '" + source->object(a).label + "' has no image in '" +
                           target->name() + "'");
    F.on_objects.push_back(*image);
  }
  for (std::size_t i = 0; i < source->morphism_count(); ++i) {
    const auto& m = source->morphism(morphism_id(i));
    auto payload = morphisms(m.payload);
    auto image = target->find(F(m.dom), F(m.cod), payload);
    if (!image)
      throw FunctorError(FunctorErrorKind::NotAFunctor,
                         "image " + format_payload(payload) + " of '" + m.label +
                           "' is not in the target hom-set");
    F.on_morphisms.push_back(*image);
  }
  return F;
}

FragmentFunctor dual_functor(const FragmentPtr& dram_op, const FragmentPtr& ram)
{
  return functor_by_payload(
    "dual", dram_op, ram,
    [&](ObjectId a) { return ram->object_by_size(dram_op->object(a).size); },
    [](const Payload& p) -> Payload { return dual(std::get<RigidSurjection>(p)); });
}

FragmentFunctor shifted_dual_functor(const FragmentPtr& dram_op, const FragmentPtr& ram)
{
  return functor_by_payload(
    "shifted-dual", dram_op, ram,
    [&](ObjectId a) -> std::optional<ObjectId> {
      const auto size = dram_op->object(a).size;
      if (size == 0)
        return std::nullopt;
      return ram->object_by_size(size - 1);
    },
    [](const Payload& p) -> Payload { return shifted_dual(std::get<RigidSurjection>(p)); });
}

FragmentFunctor words_to_surjections(const FragmentPtr& gr_plain, const FragmentPtr& dram_op)
{
  return functor_by_payload(
    "words-to-surjections", gr_plain, dram_op,
    [&](ObjectId a) { return dram_op->object_by_size(gr_plain->object(a).size); },
    [](const Payload& p) -> Payload { return word_to_rsurj(std::get<DecoratedWord>(p)); });
}

} // namespace ramcat
