#include "ramcat/preadjunction.hpp"

#include <algorithm>
#include <map>

#include "ramcat/builders.hpp"

namespace ramcat {

namespace {

std::string label(const CategoryFragment& fr, ObjectId a) { return fr.object(a).label; }
std::string label(const CategoryFragment& fr, MorphismId f) { return fr.morphism(f).label; }

std::optional<MorphismId> first_of(const CategoryFragment& fr, ObjectId a, ObjectId b)
{
  auto h = fr.hom(a, b);
  if (h.empty())
    return std::nullopt;
  return h.front();
}

bool in_hom(const CategoryFragment& fr, MorphismId f, ObjectId a, ObjectId b)
{
  return index(f) < fr.morphism_count() && fr.dom(f) == a && fr.cod(f) == b;
}

// Resolved object maps for one verification run.
struct Endpoints
{
  const PreAdjunction& pa;

  ObjectId F(ObjectId x) const
  {
    auto y = pa.F(x);
    if (!y || index(*y) >= pa.target->object_count())
      throw PAError(PAErrorKind::ObjectNotInFragment,
                    "F(" + label(*pa.source, x) + ") is not an object of '" +
                      pa.target->name() + "'");
    return *y;
  }

  ObjectId H(ObjectId y) const
  {
    auto x = pa.H(y);
    if (!x || index(*x) >= pa.source->object_count())
      throw PAError(PAErrorKind::ObjectNotInFragment,
                    "H(" + label(*pa.target, y) + ") is not an object of '" +
                      pa.source->name() + "'");
    return *x;
  }
};

// The (PA) equation for one v, with Φ_{A,C} evaluated directly.
bool equation_holds(const PreAdjunction& pa, const PAInstance& in, MorphismId v)
{
  const auto& B = *pa.source;
  const auto& C = *pa.target;
  auto phi_u = pa.phi(in.b, in.c, in.u);
  if (!phi_u)
    return false;
  auto lhs = B.try_compose(*phi_u, in.f);
  auto uv = C.try_compose(in.u, v);
  if (!lhs || !uv)
    return false;
  auto rhs = pa.phi(in.a, in.c, *uv);
  return rhs && *rhs == *lhs;
}

std::vector<ObjectId> sized_objects(const CategoryFragment& fr,
                                    const std::function<bool(std::uint32_t)>& keep)
{
  std::vector<ObjectId> out;
  for (auto a : fr.objects())
    if (keep(fr.object(a).size))
      out.push_back(a);
  return out;
}

} // namespace

PABounds full_bounds(const PreAdjunction& pa)
{
  return {pa.source->objects(), pa.target->objects()};
}

PABounds default_bounds(const PreAdjunction& pa)
{
  auto b = full_bounds(pa);
  if (!pa.bounds.source.empty())
    b.source = pa.bounds.source;
  if (!pa.bounds.target.empty())
    b.target = pa.bounds.target;
  return b;
}

PAReport verify_pa(const PreAdjunction& pa, const PABounds& bounds, const PAOptions& options)
{
  const auto& B = *pa.source;
  const auto& C = *pa.target;
  const Endpoints ep{pa};
  PAReport report;
  report.name = pa.name;
  report.bounds = bounds;

  for (auto a : bounds.source)
    if (index(a) >= B.object_count())
      throw PAError(PAErrorKind::ObjectNotInFragment, "bound outside '" + B.name() + "'");
  for (auto c : bounds.target)
    if (index(c) >= C.object_count())
      throw PAError(PAErrorKind::ObjectNotInFragment, "bound outside '" + C.name() + "'");

  // Φ_{X,Y} per pair, indexed by the local position of u in hom(F(X), Y).
  std::map<std::pair<ObjectId, ObjectId>, std::vector<std::optional<MorphismId>>> cache;
  auto table = [&](ObjectId x, ObjectId y) -> const std::vector<std::optional<MorphismId>>& {
    auto [it, fresh] = cache.try_emplace({x, y});
    if (!fresh)
      return it->second;
    const auto hy = ep.H(y);
    for (auto u : C.hom(ep.F(x), y)) {
      auto image = pa.phi(x, y, u);
      if (image && !in_hom(B, *image, x, hy)) {
        if (report.landing_violations.size() < options.max_failures)
          report.landing_violations.push_back(
            "Φ(" + label(C, u) + ") = " + label(B, *image) + " is not in hom(" +
            label(B, x) + ", " + label(B, hy) + ")");
        image.reset();
      } else if (!image && report.landing_violations.size() < options.max_failures) {
        report.landing_violations.push_back("Φ(" + label(C, u) + ") has no image in '" +
                                            B.name() + "'");
      }
      it->second.push_back(image);
    }
    return it->second;
  };

  auto charge = [&](std::uint64_t n) {
    report.checks += n;
    if (report.checks > options.max_checks)
      throw PAError(PAErrorKind::BudgetExceeded,
                    "pre-adjunction check exceeded " + std::to_string(options.max_checks) +
                      " candidate evaluations");
  };

  for (auto c : bounds.target) {
    for (auto b : bounds.source) {
      const auto fb = ep.F(b);
      const auto& phi_b = table(b, c);
      const auto hom_u = C.hom(fb, c);
      for (std::uint32_t ul = 0; ul < hom_u.size(); ++ul) {
        const auto u = hom_u[ul];
        for (auto a : bounds.source) {
          const auto fa = ep.F(a);
          const auto& phi_a = table(a, c);
          const auto candidates = C.hom(fa, fb);
          for (auto f : B.hom(a, b)) {
            ++report.instances;
            const PAInstance in{a, b, c, u, f};
            std::optional<MorphismId> lhs;
            if (phi_b[ul])
              lhs = B.try_compose(*phi_b[ul], f);
            auto works = [&](std::uint32_t vl) {
              auto wl = C.compose_local(fa, fb, c, vl, ul);
              return wl != CategoryFragment::unset && phi_a[wl] && *phi_a[wl] == *lhs;
            };
            std::optional<PAWitness> found;
            if (lhs && pa.witness_hint) {
              if (auto v = pa.witness_hint(a, b, f); v && in_hom(C, *v, fa, fb)) {
                ++report.hint_tried;
                charge(1);
                if (works(C.morphism(*v).local)) {
                  ++report.hint_succeeded;
                  found = PAWitness{in, *v, true};
                }
              }
            }
            if (lhs && !found) {
              for (std::uint32_t vl = 0; vl < candidates.size(); ++vl) {
                charge(1);
                if (works(vl)) {
                  found = PAWitness{in, candidates[vl], false};
                  break;
                }
              }
            }
            if (found) {
              if (report.witnesses.size() < options.max_witnesses)
                report.witnesses.push_back(*found);
            } else {
              ++report.failure_count;
              if (report.failures.size() < options.max_failures)
                report.failures.push_back({in, lhs, candidates.size()});
            }
          }
        }
      }
    }
  }

  for (auto a : bounds.source)
    for (auto y : bounds.target)
      if (C.arrow(ep.F(a), y) && !B.arrow(a, ep.H(y)) &&
          report.reachability_violations.size() < options.max_failures)
        report.reachability_violations.push_back(label(C, ep.F(a)) + " -> " + label(C, y) +
                                                 " but not " + label(B, a) + " -> " +
                                                 label(B, ep.H(y)));
  return report;
}

bool recheck_failure(const PreAdjunction& pa, const PAInstance& in)
{
  const Endpoints ep{pa};
  for (auto v : pa.target->hom(ep.F(in.a), ep.F(in.b)))
    if (equation_holds(pa, in, v))
      return false;
  return true;
}

bool recheck_witness(const PreAdjunction& pa, const PAWitness& w)
{
  const Endpoints ep{pa};
  return in_hom(*pa.target, w.v, ep.F(w.instance.a), ep.F(w.instance.b)) &&
         equation_holds(pa, w.instance, w.v);
}

// ---------------------------------------------------------------------------
// combinators

PreAdjunction compose_pa(const PreAdjunction& first, const PreAdjunction& second)
{
  if (first.target != second.source && !structurally_equal(*first.target, *second.source))
    throw PAError(PAErrorKind::FragmentMismatch,
                  "'" + first.name + "' ends at '" + first.target->name() + "' but '" +
                    second.name + "' starts at '" + second.source->name() + "'" +
                    (first.target->name() == second.source->name()
                       ? " (same objects, different morphisms or group)"
                       : ""));
  PreAdjunction pa;
  pa.name = first.name + ";" + second.name;
  pa.source = first.source;
  pa.target = second.target;
  pa.F = [first, second](ObjectId x) -> std::optional<ObjectId> {
    auto y = first.F(x);
    return y ? second.F(*y) : std::nullopt;
  };
  pa.H = [first, second](ObjectId z) -> std::optional<ObjectId> {
    auto y = second.H(z);
    return y ? first.H(*y) : std::nullopt;
  };
  pa.phi = [first, second](ObjectId x, ObjectId z, MorphismId w) -> std::optional<MorphismId> {
    auto fx = first.F(x);
    auto kz = second.H(z);
    if (!fx || !kz)
      return std::nullopt;
    auto psi = second.phi(*fx, z, w);
    return psi ? first.phi(x, *kz, *psi) : std::nullopt;
  };
  if (first.witness_hint && second.witness_hint)
    pa.witness_hint = [first, second](ObjectId a, ObjectId b,
                                      MorphismId f) -> std::optional<MorphismId> {
      auto v = first.witness_hint(a, b, f);
      auto fa = first.F(a);
      auto fb = first.F(b);
      if (!v || !fa || !fb)
        return std::nullopt;
      return second.witness_hint(*fa, *fb, *v);
    };
  if (!first.bounds.source.empty())
    pa.bounds.source = first.bounds.source;
  if (!second.bounds.target.empty())
    pa.bounds.target = second.bounds.target;
  return pa;
}

PreAdjunction identity_pa(const FragmentPtr& fragment)
{
  PreAdjunction pa;
  pa.name = "identity";
  pa.source = fragment;
  pa.target = fragment;
  pa.F = [](ObjectId x) -> std::optional<ObjectId> { return x; };
  pa.H = pa.F;
  pa.phi = [](ObjectId, ObjectId, MorphismId u) -> std::optional<MorphismId> { return u; };
  pa.witness_hint = [](ObjectId, ObjectId, MorphismId f) -> std::optional<MorphismId> {
    return f;
  };
  return pa;
}

PreAdjunction constant_phi_mutation(PreAdjunction pa)
{
  pa.name += "+constant-phi";
  auto source = pa.source;
  auto H = pa.H;
  pa.phi = [source, H](ObjectId x, ObjectId y, MorphismId) -> std::optional<MorphismId> {
    auto hy = H(y);
    return hy ? first_of(*source, x, *hy) : std::nullopt;
  };
  return pa;
}

// ---------------------------------------------------------------------------
// from a full, isomorphism-dense functor

PreAdjunction pa_from_functor(const FragmentFunctor& H, const FunctorPAOptions& options)
{
  const auto& C = *H.source;
  const auto& B = *H.target;
  if (auto check = check_functor(H); !check.ok)
    throw PAError(PAErrorKind::FragmentMismatch, "'" + H.name + "': " + check.message);
  if (options.require_full)
    if (auto nf = find_not_full(H))
      throw PAError(PAErrorKind::NotFull,
                    "'" + H.name + "' misses " + label(B, nf->missed) + " in hom(" +
                      label(B, H(nf->a)) + ", " + label(B, H(nf->b)) + ")");

  auto F = std::make_shared<std::vector<ObjectId>>();
  auto eta = std::make_shared<std::vector<MorphismId>>();
  auto eta_inv = std::make_shared<std::vector<MorphismId>>();
  for (auto x : B.objects()) {
    std::optional<std::pair<ObjectId, MorphismId>> pick;
    for (auto y : C.objects())
      if (auto iso = first_iso(B, x, H(y))) {
        pick = {y, *iso};
        break;
      }
    if (!pick)
      throw PAError(PAErrorKind::NotIsoDense,
                    "no object of '" + C.name() + "' is sent to an object isomorphic to " +
                      label(B, x));
    auto inv = inverse(B, pick->second);
    if (!inv)
      throw PAError(PAErrorKind::BadEta, "η for " + label(B, x) + " has no inverse");
    F->push_back(pick->first);
    eta->push_back(pick->second);
    eta_inv->push_back(*inv);
  }

  PreAdjunction pa;
  pa.name = "from-functor(" + H.name + ")";
  pa.source = H.target;
  pa.target = H.source;
  pa.F = [F](ObjectId x) -> std::optional<ObjectId> {
    if (index(x) >= F->size())
      return std::nullopt;
    return (*F)[index(x)];
  };
  auto on_objects = std::make_shared<std::vector<ObjectId>>(H.on_objects);
  auto on_morphisms = std::make_shared<std::vector<MorphismId>>(H.on_morphisms);
  pa.H = [on_objects](ObjectId y) -> std::optional<ObjectId> {
    if (index(y) >= on_objects->size())
      return std::nullopt;
    return (*on_objects)[index(y)];
  };
  const auto source = H.target;
  const auto target = H.source;
  pa.phi = [source, on_morphisms, eta](ObjectId x, ObjectId, MorphismId u) {
    return source->try_compose((*on_morphisms)[index(u)], (*eta)[index(x)]);
  };
  // Any v with H(v) = η_B · f · η_A^{-1}.
  pa.witness_hint = [source, target, F, eta, eta_inv, on_morphisms](
                      ObjectId a, ObjectId b, MorphismId f) -> std::optional<MorphismId> {
    auto f1 = source->try_compose(f, (*eta_inv)[index(a)]);
    if (!f1)
      return std::nullopt;
    auto want = source->try_compose((*eta)[index(b)], *f1);
    if (!want)
      return std::nullopt;
    for (auto v : target->hom((*F)[index(a)], (*F)[index(b)]))
      if ((*on_morphisms)[index(v)] == *want)
        return v;
    return std::nullopt;
  };
  return pa;
}

PreAdjunction pa_ram_to_dram_op(std::uint32_t max_chain)
{
  std::vector<std::uint32_t> ram_sizes;
  for (std::uint32_t s = 0; s < max_chain; ++s)
    ram_sizes.push_back(s);
  auto ram = ram_fragment(ram_sizes);
  auto dram_op = dram_op_fragment(max_chain);
  auto pa = pa_from_functor(shifted_dual_functor(dram_op, ram));
  pa.name = "ram-to-dram-op";
  return pa;
}

PreAdjunction pa_ram_to_dram_op_literal(std::uint32_t max_chain)
{
  auto ram = ram_fragment(max_chain);
  auto dram_op = dram_op_fragment(max_chain);
  auto pa = pa_from_functor(dual_functor(dram_op, ram), {.require_full = false});
  pa.name = "ram-to-dram-op-literal";
  pa.notes.push_back("f |-> f^∂ is not full: f^∂(1) = 1 for every rigid surjection");
  return pa;
}

PreAdjunction pa_skeleton(const FragmentPtr& fragment)
{
  auto sk = skeleton(*fragment);
  auto pa = pa_from_functor(skeleton_inclusion(sk, fragment));
  pa.name = "skeleton(" + fragment->name() + ")";
  return pa;
}

// ---------------------------------------------------------------------------
// parameter words

DecoratedWord strip_word(const DecoratedWord& u)
{
  std::vector<Token> tokens;
  tokens.reserve(u.length());
  for (const auto& t : u.tokens())
    tokens.push_back(Token::param(t.is_param() ? t.index : 1));
  return validate_word(std::move(tokens), u.parameters(), plain_context());
}

PreAdjunction pa_gr_plain_to_decorated(const ContextPtr& context, std::uint32_t n)
{
  PreAdjunction pa;
  pa.name = "gr-plain-to-decorated";
  pa.source = gr_fragment(plain_context(), n);
  pa.target = gr_fragment(context, n);
  const auto source = pa.source;
  const auto target = pa.target;
  pa.F = [source, target](ObjectId x) { return target->object_by_size(source->object(x).size); };
  pa.H = [source, target](ObjectId y) { return source->object_by_size(target->object(y).size); };
  pa.phi = [source, target](ObjectId x, ObjectId y, MorphismId u) -> std::optional<MorphismId> {
    auto hy = source->object_by_size(target->object(y).size);
    if (!hy)
      return std::nullopt;
    return source->find(x, *hy, strip_word(std::get<DecoratedWord>(target->morphism(u).payload)));
  };
  pa.witness_hint = [source, target, context](ObjectId a, ObjectId b,
                                              MorphismId f) -> std::optional<MorphismId> {
    const auto& w = std::get<DecoratedWord>(source->morphism(f).payload);
    auto fa = target->object_by_size(source->object(a).size);
    auto fb = target->object_by_size(source->object(b).size);
    if (!fa || !fb)
      return std::nullopt;
    auto v = validate_word({w.tokens().begin(), w.tokens().end()}, w.parameters(), context);
    return target->find(*fa, *fb, v);
  };
  return pa;
}

DecoratedWord read_over_alphabet(const DecoratedWord& u, const ContextPtr& decorated)
{
  const auto t = static_cast<std::uint32_t>(decorated->action.alphabet_size());
  if (u.parameters() <= t)
    throw PAError(PAErrorKind::FragmentMismatch,
                  "word has " + std::to_string(u.parameters()) + " parameters, need more than " +
                    std::to_string(t));
  std::vector<Token> tokens;
  tokens.reserve(u.length());
  for (const auto& tok : u.tokens()) {
    if (!tok.is_param())
      throw PAError(PAErrorKind::FragmentMismatch, "expected a word without letters");
    if (tok.index <= t)
      tokens.push_back(Token::letter(decorated->action.act(tok.index - 1, tok.exponent)));
    else
      tokens.push_back(Token::param(tok.index - t, tok.exponent));
  }
  return validate_word(std::move(tokens), u.parameters() - t, decorated);
}

DecoratedWord prefix_alphabet(const DecoratedWord& f, const ContextPtr& plain_over_group)
{
  const auto t = static_cast<std::uint32_t>(f.context()->action.alphabet_size());
  std::vector<Token> tokens;
  tokens.reserve(t + f.length());
  for (std::uint32_t i = 1; i <= t; ++i)
    tokens.push_back(Token::param(i));
  for (const auto& tok : f.tokens())
    tokens.push_back(tok.is_param() ? Token::param(t + tok.index, tok.exponent)
                                    : Token::param(tok.index + 1));
  return validate_word(std::move(tokens), t + f.parameters(), plain_over_group);
}

PreAdjunction pa_gr_decorated_to_plain(const ContextPtr& context, std::uint32_t n,
                                       std::uint32_t extent)
{
  const auto t = static_cast<std::uint32_t>(context->action.alphabet_size());
  const auto top = std::max(n + t, extent);
  auto plain = make_context(RightAction::trivial(context->group()));
  PreAdjunction pa;
  pa.name = "gr-decorated-to-plain";
  pa.source = gr_fragment(context, top);
  pa.target = gr_fragment(plain, top);
  const auto source = pa.source;
  const auto target = pa.target;
  pa.F = [=](ObjectId x) { return target->object_by_size(source->object(x).size + t); };
  pa.H = [=](ObjectId y) { return source->object_by_size(target->object(y).size); };
  pa.phi = [=](ObjectId x, ObjectId y, MorphismId u) -> std::optional<MorphismId> {
    auto hy = source->object_by_size(target->object(y).size);
    if (!hy)
      return std::nullopt;
    const auto& w = std::get<DecoratedWord>(target->morphism(u).payload);
    return source->find(x, *hy, read_over_alphabet(w, context));
  };
  pa.witness_hint = [=](ObjectId a, ObjectId b, MorphismId f) -> std::optional<MorphismId> {
    auto fa = target->object_by_size(source->object(a).size + t);
    auto fb = target->object_by_size(source->object(b).size + t);
    if (!fa || !fb)
      return std::nullopt;
    const auto& w = std::get<DecoratedWord>(source->morphism(f).payload);
    return target->find(*fa, *fb, prefix_alphabet(w, plain));
  };
  pa.bounds.source = sized_objects(*source, [n](std::uint32_t s) { return s <= n; });
  return pa;
}

DecoratedWord surjection_to_word(const RigidSurjection& u, std::uint32_t n, const ContextPtr& context)
{
  const auto& group = context->group();
  const auto q = group.order();
  if (u.codomain_size() != n * q)
    throw PAError(PAErrorKind::FragmentMismatch,
                  "surjection onto " + std::to_string(u.codomain_size()) + " points, expected " +
                    std::to_string(n * q));
  std::vector<Token> tokens;
  tokens.reserve(u.domain_size());
  for (auto p : u.images())
    tokens.push_back(Token::param((p - 1) / q + 1, group.element_order()[(p - 1) % q]));
  return validate_word(std::move(tokens), n, context);
}

RigidSurjection word_to_product_surjection(const DecoratedWord& f, std::uint32_t n)
{
  const auto& group = f.context()->group();
  const auto q = group.order();
  if (f.length() != n)
    throw PAError(PAErrorKind::FragmentMismatch, "word length differs from " + std::to_string(n));
  std::vector<std::uint32_t> images;
  images.reserve(n * q);
  for (const auto& tok : f.tokens()) {
    if (!tok.is_param())
      throw PAError(PAErrorKind::FragmentMismatch, "expected a word without letters");
    for (auto h : group.element_order())
      images.push_back((tok.index - 1) * q + group.rank(group.multiply(tok.exponent, h)) + 1);
  }
  return validate_rigid(n * q, f.parameters() * q, std::move(images));
}

PreAdjunction pa_gr_to_dramop(const FiniteGroup& group, std::uint32_t max_chain)
{
  auto context = make_context(RightAction::trivial(group));
  const auto q = group.order();
  PreAdjunction pa;
  pa.name = "gr-to-dram-op";
  pa.source = gr_fragment(context, max_chain);
  pa.target = dram_op_fragment(max_chain);
  const auto source = pa.source;
  const auto target = pa.target;
  pa.F = [=](ObjectId x) { return target->object_by_size(source->object(x).size * q); };
  pa.H = [=](ObjectId y) { return source->object_by_size(target->object(y).size); };
  pa.phi = [=](ObjectId x, ObjectId y, MorphismId u) -> std::optional<MorphismId> {
    auto hy = source->object_by_size(target->object(y).size);
    if (!hy)
      return std::nullopt;
    const auto& s = std::get<RigidSurjection>(target->morphism(u).payload);
    return source->find(x, *hy, surjection_to_word(s, source->object(x).size, context));
  };
  pa.witness_hint = [=](ObjectId a, ObjectId b, MorphismId f) -> std::optional<MorphismId> {
    auto fa = target->object_by_size(source->object(a).size * q);
    auto fb = target->object_by_size(source->object(b).size * q);
    if (!fa || !fb)
      return std::nullopt;
    const auto& w = std::get<DecoratedWord>(source->morphism(f).payload);
    return target->find(*fa, *fb, word_to_product_surjection(w, source->object(b).size));
  };
  pa.bounds.source = sized_objects(*source, [=](std::uint32_t s) { return s * q <= max_chain; });
  return pa;
}

// ---------------------------------------------------------------------------
// ω and non-thin fragments

PreAdjunction pa_omega_to_nonthin(const FragmentPtr& fragment, const std::vector<ObjectId>& sequence)
{
  if (sequence.empty())
    throw PAError(PAErrorKind::SequenceNotStrict, "empty sequence");
  const auto& C = *fragment;
  for (auto x : sequence)
    if (index(x) >= C.object_count())
      throw PAError(PAErrorKind::ObjectNotInFragment, "sequence leaves '" + C.name() + "'");
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
    if (!C.arrow(sequence[i], sequence[i + 1]) || C.arrow(sequence[i + 1], sequence[i]))
      throw PAError(PAErrorKind::SequenceNotStrict,
                    "not strictly increasing at " + std::to_string(i) + ": " +
                      label(C, sequence[i]) + ", " + label(C, sequence[i + 1]));

  PreAdjunction pa;
  pa.name = "omega-to-fragment";
  pa.source = thin_from_preorder(FinitePreorder::chain(sequence.size()));
  pa.target = fragment;
  const auto source = pa.source;
  pa.F = [sequence](ObjectId k) -> std::optional<ObjectId> {
    if (index(k) >= sequence.size())
      return std::nullopt;
    return sequence[index(k)];
  };
  pa.H = [sequence, fragment](ObjectId y) -> std::optional<ObjectId> {
    for (std::size_t i = 0; i < sequence.size(); ++i)
      if (sequence[i] == y)
        return object_id(i);
    std::size_t best = 0;
    for (std::size_t i = 0; i < sequence.size(); ++i)
      if (fragment->arrow(sequence[i], y))
        best = i;
    return object_id(best);
  };
  auto H = pa.H;
  pa.phi = [source, H](ObjectId k, ObjectId y, MorphismId) -> std::optional<MorphismId> {
    return first_of(*source, k, *H(y));
  };
  pa.witness_hint = [fragment, sequence](ObjectId a, ObjectId b,
                                         MorphismId) -> std::optional<MorphismId> {
    return first_of(*fragment, sequence[index(a)], sequence[index(b)]);
  };
  return pa;
}

NonthinSequence build_nonthin_sequence(const FragmentPtr& fragment, std::size_t length,
                                       const SearchOptions& options)
{
  const auto& C = *fragment;
  std::optional<std::pair<ObjectId, ObjectId>> seed;
  for (auto a : C.objects()) {
    for (auto b : C.objects())
      if (C.hom(a, b).size() >= 2) {
        seed = {a, b};
        break;
      }
    if (seed)
      break;
  }
  if (!seed)
    throw PAError(PAErrorKind::FragmentThin, "'" + C.name() + "' is thin");

  NonthinSequence out;
  out.seed_a = seed->first;
  if (length == 0)
    return out;
  out.objects.push_back(seed->second);
  auto prev2 = seed->first;
  while (out.objects.size() < length) {
    const auto prev = out.objects.back();
    std::optional<ObjectId> next;
    for (auto c : C.objects()) {
      if (!C.arrow(prev, c))
        continue;
      auto r = find_bad_coloring(C, prev2, prev, c, 2, options);
      if (r.outcome == SearchOutcome::BudgetExceeded)
        throw PAError(PAErrorKind::BudgetExceeded,
                      "arrow search " + label(C, c) + " -> (" + label(C, prev) + ")^" +
                        label(C, prev2) + "_2 ran out of nodes");
      if (r.outcome == SearchOutcome::NoneFound) {
        next = c;
        break;
      }
    }
    if (!next) {
      out.exhausted = true;
      break;
    }
    out.certificates.push_back({C.hom(prev, *next).size(), C.hom(*next, prev).size()});
    out.objects.push_back(*next);
    prev2 = prev;
  }
  return out;
}

// ---------------------------------------------------------------------------
// thin and cardinality

PreAdjunction pa_from_monotone_tukey(const FinitePreorder& a, const FinitePreorder& b,
                                     const std::vector<std::size_t>& f,
                                     const std::vector<std::size_t>& g)
{
  if (f.size() != a.size() || g.size() != b.size())
    throw PAError(PAErrorKind::FragmentMismatch, "map tables do not match the preorders");
  for (auto y : f)
    if (y >= b.size())
      throw PAError(PAErrorKind::ObjectNotInFragment, "f leaves the target preorder");
  for (auto x : g)
    if (x >= a.size())
      throw PAError(PAErrorKind::ObjectNotInFragment, "g leaves the source preorder");
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !b.leq(f[x], f[y]))
        throw PAError(PAErrorKind::NotMonotone,
                      "f is not monotone: " + a.name(x) + " <= " + a.name(y));
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y)
      if (b.leq(f[x], y) && !a.leq(x, g[y]))
        throw PAError(PAErrorKind::ImplicationFails,
                      "f(" + a.name(x) + ") <= " + b.name(y) + " but not " + a.name(x) +
                        " <= g(" + b.name(y) + ")");

  PreAdjunction pa;
  pa.name = "from-monotone-tukey";
  pa.source = thin_from_preorder(a);
  pa.target = thin_from_preorder(b);
  const auto source = pa.source;
  const auto target = pa.target;
  pa.F = [f](ObjectId x) -> std::optional<ObjectId> { return object_id(f.at(index(x))); };
  pa.H = [g](ObjectId y) -> std::optional<ObjectId> { return object_id(g.at(index(y))); };
  pa.phi = [source, g](ObjectId x, ObjectId y, MorphismId) {
    return first_of(*source, x, object_id(g.at(index(y))));
  };
  pa.witness_hint = [target, f](ObjectId a, ObjectId b, MorphismId) {
    return first_of(*target, object_id(f.at(index(a))), object_id(f.at(index(b))));
  };
  return pa;
}

CardinalityReport check_card_inequality(const PreAdjunction& pa, const std::vector<ObjectId>& source)
{
  const auto& B = *pa.source;
  const auto& C = *pa.target;
  for (std::size_t i = 0; i < B.morphism_count(); ++i)
    if (!is_mono(B, morphism_id(i)))
      throw PAError(PAErrorKind::SourceNotMono,
                    "'" + label(B, morphism_id(i)) + "' is not mono in '" + B.name() + "'");
  const Endpoints ep{pa};
  CardinalityReport report;
  for (auto a : source)
    for (auto b : source) {
      ++report.pairs;
      const auto s = B.hom(a, b).size();
      const auto t = C.hom(ep.F(a), ep.F(b)).size();
      if (t < s)
        report.violations.push_back({a, b, s, t});
    }
  return report;
}

PreAdjunction ram_to_chain_collapse(std::uint32_t n)
{
  PreAdjunction pa;
  pa.name = "ram-to-chain-collapse";
  pa.source = ram_fragment(n);
  pa.target = thin_from_preorder(FinitePreorder::chain(n));
  const auto source = pa.source;
  pa.F = [](ObjectId x) -> std::optional<ObjectId> { return x; };
  pa.H = pa.F;
  pa.phi = [source](ObjectId x, ObjectId y, MorphismId) { return first_of(*source, x, y); };
  return pa;
}

} // namespace ramcat
