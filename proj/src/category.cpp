#include "ramcat/category.hpp"

#include <algorithm>
#include <sstream>

namespace ramcat {

namespace {

void put(std::string& key, std::uint32_t v)
{
  key.append(reinterpret_cast<const char*>(&v), sizeof v);
}

} // namespace

std::string payload_key(const Payload& payload, std::string_view label)
{
  std::string key;
  std::visit(
    [&](const auto& p) {
      using T = std::decay_t<decltype(p)>;
      if constexpr (std::is_same_v<T, std::monostate>) {
        key.push_back('L');
        key.append(label);
      } else if constexpr (std::is_same_v<T, DecoratedWord>) {
        key.push_back('W');
        put(key, p.parameters());
        for (const auto& t : p.tokens()) {
          put(key, static_cast<std::uint32_t>(t.kind));
          put(key, t.index);
          put(key, t.exponent);
        }
      } else if constexpr (std::is_same_v<T, RigidSurjection>) {
        key.push_back('R');
        put(key, p.codomain_size());
        for (auto b : p.images())
          put(key, b);
      } else if constexpr (std::is_same_v<T, MonotoneInjection>) {
        key.push_back('M');
        put(key, p.codomain_size());
        for (auto b : p.images())
          put(key, b);
      } else {
        key.push_back('V');
        put(key, p.rows);
        put(key, p.cols);
        key.append(p.entries.begin(), p.entries.end());
      }
    },
    payload);
  return key;
}

std::string format_payload(const Payload& payload)
{
  return std::visit(
    [](const auto& p) -> std::string {
      using T = std::decay_t<decltype(p)>;
      if constexpr (std::is_same_v<T, std::monostate>)
        return {};
      else if constexpr (std::is_same_v<T, DecoratedWord>)
        return format_word(p);
      else if constexpr (std::is_same_v<T, RigidSurjection> || std::is_same_v<T, MonotoneInjection>)
        return format_images(p.images());
      else {
        std::ostringstream os;
        os << '[';
        for (std::uint32_t r = 0; r < p.rows; ++r) {
          os << (r ? ",[" : "[");
          for (std::uint32_t c = 0; c < p.cols; ++c)
            os << (c ? "," : "") << int(p.at(r, c));
          os << ']';
        }
        os << ']';
        return os.str();
      }
    },
    payload);
}

std::string_view kind_name(FragmentKind kind)
{
  switch (kind) {
  case FragmentKind::Explicit: return "explicit";
  case FragmentKind::Ram: return "ram";
  case FragmentKind::DRam: return "dram";
  case FragmentKind::GR: return "gr";
  case FragmentKind::Thin: return "thin";
  case FragmentKind::Vec: return "vec";
  }
  return "?";
}

std::string_view tri_name(Tri value)
{
  switch (value) {
  case Tri::False: return "false";
  case Tri::True: return "true";
  case Tri::Unknown: return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// CategoryFragment

std::vector<ObjectId> CategoryFragment::objects() const
{
  std::vector<ObjectId> out(objects_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = object_id(i);
  return out;
}

std::optional<ObjectId> CategoryFragment::object_by_size(std::uint32_t size) const
{
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i].size == size)
      return object_id(i);
  return std::nullopt;
}

std::optional<ObjectId> CategoryFragment::object_by_label(std::string_view label) const
{
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i].label == label)
      return object_id(i);
  return std::nullopt;
}

std::uint32_t CategoryFragment::compose_local(ObjectId a, ObjectId b, ObjectId c,
                                              std::uint32_t f_local, std::uint32_t g_local) const
{
  const auto& table = compose_[triple(a, b, c)];
  if (table.empty())
    return unset;
  return table[f_local * hom_[pair(b, c)].size() + g_local];
}

std::optional<MorphismId> CategoryFragment::try_compose(MorphismId g, MorphismId f) const
{
  const auto& mf = morphism(f);
  const auto& mg = morphism(g);
  if (mf.cod != mg.dom)
    return std::nullopt;
  const auto local = compose_local(mf.dom, mf.cod, mg.cod, mf.local, mg.local);
  if (local == unset)
    return std::nullopt;
  return hom_[pair(mf.dom, mg.cod)][local];
}

MorphismId CategoryFragment::compose(MorphismId g, MorphismId f) const
{
  if (cod(f) != dom(g))
    throw FragmentError(FragmentErrorKind::NotComposable,
                        "cod(f) != dom(g) for f=" + std::to_string(index(f)) +
                          ", g=" + std::to_string(index(g)));
  auto r = try_compose(g, f);
  if (!r)
    throw FragmentError(FragmentErrorKind::NotClosed,
                        "no composite recorded for g=" + std::to_string(index(g)) +
                          " after f=" + std::to_string(index(f)));
  return *r;
}

std::optional<MorphismId> CategoryFragment::find(ObjectId a, ObjectId b, const Payload& payload) const
{
  const auto& keys = keys_[pair(a, b)];
  auto it = keys.find(payload_key(payload));
  if (it == keys.end())
    return std::nullopt;
  return hom_[pair(a, b)][it->second];
}

std::optional<MorphismId> CategoryFragment::find_label(ObjectId a, ObjectId b,
                                                       std::string_view label) const
{
  for (auto f : hom(a, b))
    if (morphism(f).label == label)
      return f;
  return std::nullopt;
}

std::size_t CategoryFragment::compose_entries() const noexcept
{
  std::size_t total = 0;
  for (const auto& t : compose_)
    total += t.size();
  return total;
}

// ---------------------------------------------------------------------------
// FragmentBuilder

FragmentBuilder::FragmentBuilder(std::string name, FragmentKind kind)
{
  fragment_.name_ = std::move(name);
  fragment_.kind_ = kind;
}

FragmentBuilder::FragmentBuilder(const CategoryFragment& base) : fragment_(base)
{
  const auto n = base.objects_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& h = base.hom_[a * n + b];
      if (!h.empty())
        pending_hom_[{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}] = h;
    }
  pending_identity_.assign(base.identity_.begin(), base.identity_.end());
  base_tables_ = base.compose_;
  base_hom_sizes_.resize(base.hom_.size());
  for (std::size_t i = 0; i < base.hom_.size(); ++i)
    base_hom_sizes_[i] = base.hom_[i].size();
  base_objects_ = n;
  fragment_.compose_.clear();
  fragment_.hom_.clear();
  fragment_.keys_.clear();
  fragment_.identity_.clear();
}

ObjectId FragmentBuilder::add_object(std::string label, std::uint32_t size)
{
  fragment_.objects_.push_back({std::move(label), size});
  pending_identity_.emplace_back();
  return object_id(fragment_.objects_.size() - 1);
}

MorphismId FragmentBuilder::add_morphism(ObjectId dom, ObjectId cod, Payload payload,
                                         std::string label)
{
  const auto n = fragment_.objects_.size();
  if (index(dom) >= n || index(cod) >= n)
    throw FragmentError(FragmentErrorKind::BadMorphism, "morphism endpoint is not a fragment object");
  if (fragment_.morphisms_.size() >= limits_.max_morphisms)
    throw FragmentError(FragmentErrorKind::ResourceBound,
                        "morphism cap of " + std::to_string(limits_.max_morphisms) + " exceeded");
  const auto id = morphism_id(fragment_.morphisms_.size());
  auto& list = pending_hom_[{static_cast<std::uint32_t>(dom), static_cast<std::uint32_t>(cod)}];
  if (label.empty())
    label = std::holds_alternative<std::monostate>(payload) ? "m" + std::to_string(index(id))
                                                            : format_payload(payload);
  fragment_.morphisms_.push_back(
    {dom, cod, static_cast<std::uint32_t>(list.size()), std::move(label), std::move(payload)});
  list.push_back(id);
  return id;
}

void FragmentBuilder::set_identity(ObjectId a, MorphismId id)
{
  if (index(a) >= fragment_.objects_.size() || index(id) >= fragment_.morphisms_.size())
    throw FragmentError(FragmentErrorKind::BadMorphism, "identity refers to unknown data");
  const auto& m = fragment_.morphisms_[index(id)];
  if (m.dom != a || m.cod != a)
    throw FragmentError(FragmentErrorKind::MissingIdentity,
                        "identity of '" + fragment_.objects_[index(a)].label +
                          "' is not an endomorphism of it");
  pending_identity_[index(a)] = id;
}

void FragmentBuilder::set_compose(MorphismId g, MorphismId f, MorphismId result)
{
  overrides_.emplace_back(g, f, result);
}

FragmentPtr FragmentBuilder::build()
{
  auto& fr = fragment_;
  const auto n = fr.objects_.size();

  fr.hom_.assign(n * n, {});
  fr.keys_.assign(n * n, {});
  for (auto& [ab, list] : pending_hom_) {
    const auto p = ab.first * n + ab.second;
    fr.hom_[p] = list;
    auto& keys = fr.keys_[p];
    for (auto f : list) {
      const auto& m = fr.morphisms_[index(f)];
      auto [it, fresh] = keys.emplace(payload_key(m.payload, m.label), m.local);
      if (!fresh)
        throw FragmentError(FragmentErrorKind::DuplicateMorphism,
                            "hom(" + fr.objects_[ab.first].label + ", " +
                              fr.objects_[ab.second].label + ") lists '" + m.label + "' twice");
    }
  }

  fr.identity_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!pending_identity_[a])
      throw FragmentError(FragmentErrorKind::MissingIdentity,
                          "object '" + fr.objects_[a].label + "' has no identity");
    fr.identity_[a] = *pending_identity_[a];
  }

  std::size_t total = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        total += fr.hom_[a * n + b].size() * fr.hom_[b * n + c].size();
  if (total > limits_.max_compose_entries)
    throw FragmentError(FragmentErrorKind::ResourceBound,
                        "composition tables need " + std::to_string(total) +
                          " entries, cap is " + std::to_string(limits_.max_compose_entries));

  fr.compose_.assign(n * n * n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& hab = fr.hom_[a * n + b];
      if (hab.empty())
        continue;
      for (std::size_t c = 0; c < n; ++c) {
        const auto& hbc = fr.hom_[b * n + c];
        if (hbc.empty())
          continue;
        const auto A = object_id(a), B = object_id(b), C = object_id(c);
        auto& table = fr.compose_[(a * n + b) * n + c];
        table.assign(hab.size() * hbc.size(), CategoryFragment::unset);
        const auto stride = hbc.size();

        if (a < base_objects_ && b < base_objects_ && c < base_objects_) {
          const auto& old = base_tables_[(a * base_objects_ + b) * base_objects_ + c];
          const auto old_f = base_hom_sizes_[a * base_objects_ + b];
          const auto old_g = base_hom_sizes_[b * base_objects_ + c];
          if (!old.empty())
            for (std::size_t fi = 0; fi < old_f; ++fi)
              for (std::size_t gi = 0; gi < old_g; ++gi)
                table[fi * stride + gi] = old[fi * old_g + gi];
        }

        const auto& keys_ac = fr.keys_[a * n + c];
        for (std::size_t fi = 0; fi < hab.size(); ++fi)
          for (std::size_t gi = 0; gi < hbc.size(); ++gi) {
            auto& cell = table[fi * stride + gi];
            if (cell != CategoryFragment::unset)
              continue;
            if (local_rule_) {
              if (auto r = local_rule_(A, B, C, static_cast<std::uint32_t>(fi),
                                       static_cast<std::uint32_t>(gi))) {
                cell = *r;
                continue;
              }
            }
            if (rule_) {
              const auto& pf = fr.morphisms_[index(hab[fi])].payload;
              const auto& pg = fr.morphisms_[index(hbc[gi])].payload;
              if (auto r = rule_(pg, pf)) {
                auto it = keys_ac.find(payload_key(*r));
                if (it != keys_ac.end()) {
                  cell = it->second;
                  continue;
                }
              }
            }
            if (hab[fi] == fr.identity_[a])
              cell = fr.morphisms_[index(hbc[gi])].local;
            else if (hbc[gi] == fr.identity_[b])
              cell = fr.morphisms_[index(hab[fi])].local;
          }
      }
    }

  for (auto [g, f, r] : overrides_) {
    const auto& mf = fr.morphisms_.at(index(f));
    const auto& mg = fr.morphisms_.at(index(g));
    const auto& mr = fr.morphisms_.at(index(r));
    if (mf.cod != mg.dom || mr.dom != mf.dom || mr.cod != mg.cod)
      throw FragmentError(FragmentErrorKind::NotComposable, "composition entry has wrong shape");
    auto& table = fr.compose_[fr.triple(mf.dom, mf.cod, mg.cod)];
    table[mf.local * fr.hom_[fr.pair(mg.dom, mg.cod)].size() + mg.local] = mr.local;
  }

  return std::make_shared<const CategoryFragment>(fr);
}

// ---------------------------------------------------------------------------
// checks

FragmentDiagnostics validate_fragment(const CategoryFragment& fr, std::size_t max_violations)
{
  FragmentDiagnostics diag;
  const auto objs = fr.objects();
  auto report = [&](FragmentErrorKind kind, std::vector<MorphismId> witness, std::string msg) {
    if (diag.violations.size() < max_violations)
      diag.violations.push_back({kind, std::move(witness), std::move(msg)});
  };
  auto label = [&](MorphismId f) { return "'" + fr.morphism(f).label + "'"; };

  // closure first: later checks read through the tables
  bool closed = true;
  for (auto a : objs)
    for (auto b : objs)
      for (auto c : objs) {
        const auto hab = fr.hom(a, b);
        const auto hbc = fr.hom(b, c);
        for (std::uint32_t fi = 0; fi < hab.size(); ++fi)
          for (std::uint32_t gi = 0; gi < hbc.size(); ++gi)
            if (fr.compose_local(a, b, c, fi, gi) == CategoryFragment::unset) {
              closed = false;
              report(FragmentErrorKind::NotClosed, {hab[fi], hbc[gi]},
                     "composite of " + label(hbc[gi]) + " after " + label(hab[fi]) +
                       " is not in the fragment");
            }
      }

  for (auto a : objs)
    for (auto b : objs)
      for (auto f : fr.hom(a, b)) {
        ++diag.identity_checks;
        auto left = fr.try_compose(fr.identity(b), f);
        auto right = fr.try_compose(f, fr.identity(a));
        if ((left && *left != f) || (right && *right != f))
          report(FragmentErrorKind::IdentityLawViolation, {f},
                 "identity law fails for " + label(f));
      }
  if (!closed && diag.violations.size() >= max_violations)
    return diag;

  for (auto a : objs)
    for (auto b : objs) {
      const auto hab = fr.hom(a, b);
      if (hab.empty())
        continue;
      for (auto c : objs) {
        const auto hbc = fr.hom(b, c);
        if (hbc.empty())
          continue;
        for (auto d : objs) {
          const auto hcd = fr.hom(c, d);
          if (hcd.empty())
            continue;
          for (std::uint32_t fi = 0; fi < hab.size(); ++fi)
            for (std::uint32_t gi = 0; gi < hbc.size(); ++gi) {
              const auto gf = fr.compose_local(a, b, c, fi, gi);
              for (std::uint32_t hi = 0; hi < hcd.size(); ++hi) {
                ++diag.associativity_checks;
                const auto hg = fr.compose_local(b, c, d, gi, hi);
                if (gf == CategoryFragment::unset || hg == CategoryFragment::unset)
                  continue;
                const auto lhs = fr.compose_local(a, c, d, gf, hi);  // h·(g·f)
                const auto rhs = fr.compose_local(a, b, d, fi, hg);  // (h·g)·f
                if (lhs != rhs && lhs != CategoryFragment::unset && rhs != CategoryFragment::unset)
                  report(FragmentErrorKind::AssociativityViolation, {hab[fi], hbc[gi], hcd[hi]},
                         "(h·g)·f != h·(g·f) for f=" + label(hab[fi]) + ", g=" + label(hbc[gi]) +
                           ", h=" + label(hcd[hi]));
              }
            }
        }
      }
    }
  return diag;
}

bool structurally_equal(const CategoryFragment& x, const CategoryFragment& y)
{
  if (x.object_count() != y.object_count() || x.morphism_count() != y.morphism_count())
    return false;
  for (auto a : x.objects()) {
    if (x.object(a).label != y.object(a).label || x.object(a).size != y.object(a).size)
      return false;
    if (x.identity(a) != y.identity(a))
      return false;
  }
  for (std::size_t i = 0; i < x.morphism_count(); ++i) {
    const auto& f = x.morphism(morphism_id(i));
    const auto& g = y.morphism(morphism_id(i));
    if (f.dom != g.dom || f.cod != g.cod || f.local != g.local ||
        payload_key(f.payload, f.label) != payload_key(g.payload, g.label))
      return false;
  }
  for (auto a : x.objects())
    for (auto b : x.objects())
      for (auto c : x.objects()) {
        const auto nf = x.hom(a, b).size(), ng = x.hom(b, c).size();
        for (std::uint32_t fi = 0; fi < nf; ++fi)
          for (std::uint32_t gi = 0; gi < ng; ++gi)
            if (x.compose_local(a, b, c, fi, gi) != y.compose_local(a, b, c, fi, gi))
              return false;
      }
  return true;
}

FragmentPtr opposite(const CategoryFragment& fr)
{
  std::string name = fr.name();
  if (name.size() > 3 && name.ends_with("^op"))
    name.resize(name.size() - 3);
  else
    name += "^op";
  FragmentBuilder builder(std::move(name), fr.kind());
  builder.set_opposite(!fr.is_opposite());
  builder.set_context(fr.context());
  for (auto a : fr.objects())
    builder.add_object(fr.object(a).label, fr.object(a).size);
  // morphism ids are kept: add them in id order
  for (std::size_t i = 0; i < fr.morphism_count(); ++i) {
    const auto& m = fr.morphism(morphism_id(i));
    builder.add_morphism(m.cod, m.dom, m.payload, m.label);
  }
  for (auto a : fr.objects())
    builder.set_identity(a, fr.identity(a));
  builder.set_local_rule([&fr](ObjectId a, ObjectId b, ObjectId c, std::uint32_t fl,
                               std::uint32_t gl) -> std::optional<std::uint32_t> {
    // f ∈ hom(b, a), g ∈ hom(c, b) in fr; g ·op f = f · g
    const auto r = fr.compose_local(c, b, a, gl, fl);
    if (r == CategoryFragment::unset)
      return std::nullopt;
    return r;
  });
  return builder.build();
}

FragmentPtr full_subcategory(const CategoryFragment& fr, std::span<const ObjectId> objects,
                             std::string name)
{
  FragmentBuilder builder(name.empty() ? fr.name() + "|sub" : std::move(name), fr.kind());
  builder.set_opposite(fr.is_opposite());
  builder.set_context(fr.context());
  std::vector<ObjectId> orig(objects.begin(), objects.end());
  for (auto a : orig) {
    if (index(a) >= fr.object_count())
      throw FragmentError(FragmentErrorKind::ObjectNotInFragment, "object is not in the fragment");
    builder.add_object(fr.object(a).label, fr.object(a).size);
  }
  for (std::size_t i = 0; i < orig.size(); ++i)
    for (std::size_t j = 0; j < orig.size(); ++j)
      for (auto f : fr.hom(orig[i], orig[j])) {
        const auto& m = fr.morphism(f);
        auto id = builder.add_morphism(object_id(i), object_id(j), m.payload, m.label);
        if (i == j && f == fr.identity(orig[i]))
          builder.set_identity(object_id(i), id);
      }
  builder.set_local_rule([&fr, orig](ObjectId a, ObjectId b, ObjectId c, std::uint32_t fl,
                                     std::uint32_t gl) -> std::optional<std::uint32_t> {
    const auto r = fr.compose_local(orig[index(a)], orig[index(b)], orig[index(c)], fl, gl);
    if (r == CategoryFragment::unset)
      return std::nullopt;
    return r;
  });
  return builder.build();
}

FragmentPtr duplicate_objects(const CategoryFragment& fr, std::span<const ObjectId> objects)
{
  FragmentBuilder builder(fr.name() + "+dup", fr.kind());
  builder.set_opposite(fr.is_opposite());
  builder.set_context(fr.context());
  std::vector<ObjectId> orig = fr.objects();
  for (auto a : fr.objects())
    builder.add_object(fr.object(a).label, fr.object(a).size);
  for (auto a : objects) {
    if (index(a) >= fr.object_count())
      throw FragmentError(FragmentErrorKind::ObjectNotInFragment, "object is not in the fragment");
    builder.add_object(fr.object(a).label + "'", fr.object(a).size);
    orig.push_back(a);
  }
  for (std::size_t i = 0; i < orig.size(); ++i)
    for (std::size_t j = 0; j < orig.size(); ++j)
      for (auto f : fr.hom(orig[i], orig[j])) {
        const auto& m = fr.morphism(f);
        auto id = builder.add_morphism(object_id(i), object_id(j), m.payload, m.label);
        if (i == j && f == fr.identity(orig[i]))
          builder.set_identity(object_id(i), id);
      }
  builder.set_local_rule([&fr, orig](ObjectId a, ObjectId b, ObjectId c, std::uint32_t fl,
                                     std::uint32_t gl) -> std::optional<std::uint32_t> {
    const auto r = fr.compose_local(orig[index(a)], orig[index(b)], orig[index(c)], fl, gl);
    if (r == CategoryFragment::unset)
      return std::nullopt;
    return r;
  });
  return builder.build();
}

std::optional<MorphismId> inverse(const CategoryFragment& fr, MorphismId f)
{
  const auto a = fr.dom(f), b = fr.cod(f);
  for (auto g : fr.hom(b, a))
    if (fr.try_compose(g, f) == fr.identity(a) && fr.try_compose(f, g) == fr.identity(b))
      return g;
  return std::nullopt;
}

bool is_iso(const CategoryFragment& fr, MorphismId f) { return inverse(fr, f).has_value(); }

std::optional<MorphismId> first_iso(const CategoryFragment& fr, ObjectId a, ObjectId b)
{
  for (auto f : fr.hom(a, b))
    if (is_iso(fr, f))
      return f;
  return std::nullopt;
}

SkeletonResult skeleton(const CategoryFragment& fr)
{
  SkeletonResult out;
  const auto n = fr.object_count();
  out.representative.resize(n);
  out.eta.resize(n);
  out.skeleton_object.resize(n);
  std::vector<bool> assigned(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (assigned[a])
      continue;
    const auto rep = object_id(a);
    const auto s = object_id(out.included.size());
    out.included.push_back(rep);
    for (std::size_t b = a; b < n; ++b) {
      if (assigned[b])
        continue;
      std::optional<MorphismId> iso =
        b == a ? std::optional(fr.identity(rep)) : first_iso(fr, object_id(b), rep);
      if (!iso)
        continue;
      assigned[b] = true;
      out.representative[b] = rep;
      out.eta[b] = *iso;
      out.skeleton_object[b] = s;
    }
  }
  out.skeleton = full_subcategory(fr, out.included, fr.name() + "|skeleton");
  return out;
}

bool is_mono(const CategoryFragment& fr, MorphismId f)
{
  const auto a = fr.dom(f);
  for (auto x : fr.objects()) {
    std::vector<MorphismId> seen;
    for (auto g : fr.hom(x, a)) {
      auto fg = fr.try_compose(f, g);
      if (!fg)
        continue;
      if (std::find(seen.begin(), seen.end(), *fg) != seen.end())
        return false;
      seen.push_back(*fg);
    }
  }
  return true;
}

bool is_epi(const CategoryFragment& fr, MorphismId f)
{
  const auto b = fr.cod(f);
  for (auto y : fr.objects()) {
    std::vector<MorphismId> seen;
    for (auto g : fr.hom(b, y)) {
      auto gf = fr.try_compose(g, f);
      if (!gf)
        continue;
      if (std::find(seen.begin(), seen.end(), *gf) != seen.end())
        return false;
      seen.push_back(*gf);
    }
  }
  return true;
}

StructuralReport structural_checks(const CategoryFragment& fr)
{
  StructuralReport r;
  const auto objs = fr.objects();

  r.is_thin = true;
  for (auto a : objs)
    for (auto b : objs)
      if (fr.hom(a, b).size() > 1)
        r.is_thin = false;

  r.is_directed = true;
  for (auto a : objs)
    for (auto b : objs) {
      bool bound = false;
      for (auto c : objs)
        if (fr.arrow(a, c) && fr.arrow(b, c)) {
          bound = true;
          break;
        }
      if (!bound)
        r.is_directed = false;
    }

  r.all_mono = r.all_epi = true;
  for (std::size_t i = 0; i < fr.morphism_count(); ++i) {
    if (r.all_mono && !is_mono(fr, morphism_id(i)))
      r.all_mono = false;
    if (r.all_epi && !is_epi(fr, morphism_id(i)))
      r.all_epi = false;
  }

  r.endomorphisms_trivial = true;
  for (auto a : objs)
    if (fr.hom(a, a).size() != 1)
      r.endomorphisms_trivial = false;

  const auto sk = skeleton(fr);
  r.isomorphic_homs_are_isos = true;
  for (auto a : objs)
    for (auto b : objs)
      if (sk.representative[index(a)] == sk.representative[index(b)])
        for (auto f : fr.hom(a, b))
          if (!is_iso(fr, f))
            r.isomorphic_homs_are_isos = false;

  for (auto s : sk.included) {
    std::size_t count = 0;
    for (auto t : sk.included)
      count += fr.hom(t, s).size();
    r.fan_in.push_back(count);
  }
  r.notes.push_back("directedness is fragment-relative: upper bounds are searched inside the "
                    "fragment only");
  r.notes.push_back("countable skeleton and finite fan-in quantify over the ambient category; "
                    "a finite fragment has " +
                    std::to_string(sk.included.size()) +
                    " skeleton objects and finite fan-in, which certifies neither");
  return r;
}

} // namespace ramcat
