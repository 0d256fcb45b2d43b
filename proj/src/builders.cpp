#include "ramcat/builders.hpp"

#include <algorithm>
#include <numeric>

namespace ramcat {

std::vector<std::uint32_t> range_sizes(std::uint32_t n)
{
  std::vector<std::uint32_t> sizes(n);
  std::iota(sizes.begin(), sizes.end(), 1u);
  return sizes;
}

namespace {

template <typename Enumerate, typename Identity>
FragmentBuilder chain_builder(std::string name, FragmentKind kind,
                              std::span<const std::uint32_t> sizes, BuildLimits limits,
                              Enumerate&& homs, Identity&& identity)
{
  FragmentBuilder b(std::move(name), kind);
  b.set_limits(limits);
  for (auto s : sizes)
    b.add_object(std::to_string(s), s);
  const Payload dummy;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      const Payload id = i == j ? identity(sizes[i]) : dummy;
      for (auto&& p : homs(sizes[i], sizes[j])) {
        Payload payload(std::move(p));
        const bool is_id = i == j && payload == id;
        auto f = b.add_morphism(object_id(i), object_id(j), std::move(payload));
        if (is_id)
          b.set_identity(object_id(i), f);
      }
    }
  return b;
}

std::string sizes_name(std::string_view base, std::span<const std::uint32_t> sizes)
{
  std::string name(base);
  name += '(';
  for (std::size_t i = 0; i < sizes.size(); ++i)
    name += (i ? "," : "") + std::to_string(sizes[i]);
  name += ')';
  return name;
}

} // namespace

FragmentPtr ram_fragment(std::span<const std::uint32_t> sizes, BuildLimits limits)
{
  auto b = chain_builder(
    sizes_name("Ram", sizes), FragmentKind::Ram, sizes, limits,
    [](std::uint32_t m, std::uint32_t n) { return enumerate_monotone(m, n); },
    [](std::uint32_t n) { return Payload(identity_injection(n)); });
  b.set_compose_rule([](const Payload& g, const Payload& f) -> std::optional<Payload> {
    return compose(std::get<MonotoneInjection>(g), std::get<MonotoneInjection>(f));
  });
  return b.build();
}

FragmentPtr ram_fragment(std::uint32_t n, BuildLimits limits)
{
  const auto sizes = range_sizes(n);
  return ram_fragment(sizes, limits);
}

FragmentPtr dram_fragment(std::span<const std::uint32_t> sizes, BuildLimits limits)
{
  auto b = chain_builder(
    sizes_name("DRam", sizes), FragmentKind::DRam, sizes, limits,
    [](std::uint32_t n, std::uint32_t m) { return enumerate_rsurj(n, m); },
    [](std::uint32_t n) { return Payload(identity_rsurj(n)); });
  b.set_compose_rule([](const Payload& g, const Payload& f) -> std::optional<Payload> {
    return compose(std::get<RigidSurjection>(g), std::get<RigidSurjection>(f));
  });
  return b.build();
}

FragmentPtr dram_fragment(std::uint32_t n, BuildLimits limits)
{
  const auto sizes = range_sizes(n);
  return dram_fragment(sizes, limits);
}

FragmentPtr dram_op_fragment(std::span<const std::uint32_t> sizes, BuildLimits limits)
{
  return opposite(*dram_fragment(sizes, limits));
}

FragmentPtr dram_op_fragment(std::uint32_t n, BuildLimits limits)
{
  const auto sizes = range_sizes(n);
  return dram_op_fragment(sizes, limits);
}

FragmentPtr gr_fragment(const ContextPtr& context, std::span<const std::uint32_t> sizes,
                        BuildLimits limits)
{
  for (auto s : sizes)
    if (s == 0)
      throw FragmentError(FragmentErrorKind::BadMorphism, "GR objects are positive integers");
  auto b = chain_builder(
    sizes_name("GR", sizes), FragmentKind::GR, sizes, limits,
    [&](std::uint32_t m, std::uint32_t n) { return enumerate_words(m, n, context); },
    [&](std::uint32_t n) { return Payload(identity_word(n, context)); });
  b.set_context(context);
  b.set_compose_rule([](const Payload& g, const Payload& f) -> std::optional<Payload> {
    return substitute(std::get<DecoratedWord>(g), std::get<DecoratedWord>(f));
  });
  return b.build();
}

FragmentPtr gr_fragment(const ContextPtr& context, std::uint32_t n, BuildLimits limits)
{
  const auto sizes = range_sizes(n);
  return gr_fragment(context, sizes, limits);
}

FragmentPtr thin_from_preorder(const FinitePreorder& preorder)
{
  FragmentBuilder b("Thin(" + std::to_string(preorder.size()) + ")", FragmentKind::Thin);
  const auto n = preorder.size();
  for (std::size_t a = 0; a < n; ++a)
    b.add_object(preorder.name(a), static_cast<std::uint32_t>(a));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (preorder.leq(x, y)) {
        auto f = b.add_morphism(object_id(x), object_id(y), {},
                                preorder.name(x) + "<=" + preorder.name(y));
        if (x == y)
          b.set_identity(object_id(x), f);
      }
  b.set_local_rule([&preorder](ObjectId a, ObjectId, ObjectId c, std::uint32_t,
                               std::uint32_t) -> std::optional<std::uint32_t> {
    if (preorder.leq(index(a), index(c)))
      return 0u;
    return std::nullopt;
  });
  return b.build();
}

// ---------------------------------------------------------------------------
// Vec(F)

FiniteField FiniteField::gf2() { return prime(2); }

FiniteField FiniteField::prime(std::uint32_t p)
{
  if (p < 2 || p > 251)
    throw FragmentError(FragmentErrorKind::BadField, "prime field size out of range");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw FragmentError(FragmentErrorKind::BadField, std::to_string(p) + " is not prime");
  std::vector<std::vector<std::uint8_t>> add(p, std::vector<std::uint8_t>(p));
  auto mul = add;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b) {
      add[a][b] = static_cast<std::uint8_t>((a + b) % p);
      mul[a][b] = static_cast<std::uint8_t>((a * b) % p);
    }
  return from_tables(std::move(add), std::move(mul));
}

FiniteField FiniteField::from_tables(std::vector<std::vector<std::uint8_t>> add,
                                     std::vector<std::vector<std::uint8_t>> mul,
                                     std::vector<std::uint8_t> order)
{
  const auto q = static_cast<std::uint32_t>(add.size());
  auto bad = [](const std::string& what) {
    return FragmentError(FragmentErrorKind::BadField, what);
  };
  if (q < 2 || mul.size() != q)
    throw bad("field tables must be q x q with q >= 2");
  FiniteField f;
  f.q_ = q;
  for (std::uint32_t a = 0; a < q; ++a) {
    if (add[a].size() != q || mul[a].size() != q)
      throw bad("field tables must be square");
    for (std::uint32_t b = 0; b < q; ++b) {
      if (add[a][b] >= q || mul[a][b] >= q)
        throw bad("field table entry out of range");
      f.add_.push_back(add[a][b]);
      f.mul_.push_back(mul[a][b]);
    }
  }
  for (std::uint32_t a = 0; a < q; ++a) {
    if (f.add(0, a) != a || f.add(a, 0) != a)
      throw bad("0 is not an additive identity");
    if (f.mul(1, a) != a || f.mul(a, 1) != a)
      throw bad("1 is not a multiplicative identity");
    bool neg = false, inv = a == 0;
    for (std::uint32_t b = 0; b < q; ++b) {
      neg = neg || f.add(a, b) == 0;
      inv = inv || f.mul(a, b) == 1;
      if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a))
        throw bad("field operations must be commutative");
      for (std::uint32_t c = 0; c < q; ++c) {
        if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c)) ||
            f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)))
          throw bad("field operations must be associative");
        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)))
          throw bad("multiplication must distribute over addition");
      }
    }
    if (!neg || !inv)
      throw bad("missing additive or multiplicative inverse for " + std::to_string(a));
  }
  if (order.empty())
    for (std::uint32_t a = 0; a < q; ++a)
      order.push_back(static_cast<std::uint8_t>(a));
  if (order.size() != q || order[0] != 0)
    throw bad("element order must list all elements with 0 first");
  f.rank_.assign(q, q);
  for (std::uint32_t i = 0; i < q; ++i) {
    if (order[i] >= q || f.rank_[order[i]] != q)
      throw bad("element order is not a permutation");
    f.rank_[order[i]] = i;
  }
  return f;
}

bool alex_less(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y,
               const FiniteField& field)
{
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i])
      return field.rank(x[i]) < field.rank(y[i]);
  return false;
}

std::vector<std::uint8_t> apply(const LinearMap& map, std::span<const std::uint8_t> x,
                                const FiniteField& field)
{
  std::vector<std::uint8_t> y(map.rows, 0);
  for (std::uint32_t r = 0; r < map.rows; ++r)
    for (std::uint32_t c = 0; c < map.cols; ++c)
      y[r] = field.add(y[r], field.mul(map.at(r, c), x[c]));
  return y;
}

LinearMap multiply(const LinearMap& g, const LinearMap& f, const FiniteField& field)
{
  LinearMap out{g.rows, f.cols, std::vector<std::uint8_t>(g.rows * f.cols, 0)};
  for (std::uint32_t r = 0; r < g.rows; ++r)
    for (std::uint32_t c = 0; c < f.cols; ++c) {
      std::uint8_t acc = 0;
      for (std::uint32_t k = 0; k < g.cols; ++k)
        acc = field.add(acc, field.mul(g.at(r, k), f.at(k, c)));
      out.entries[r * f.cols + c] = acc;
    }
  return out;
}

namespace {

/// F^m in increasing anti-lexicographic order.
std::vector<std::vector<std::uint8_t>> alex_vectors(std::uint32_t m, const FiniteField& field)
{
  std::vector<std::vector<std::uint8_t>> out{{}};
  for (std::uint32_t i = 0; i < m; ++i) {
    std::vector<std::vector<std::uint8_t>> next;
    // coordinate i is now the most significant
    for (std::uint32_t r = 0; r < field.size(); ++r)
      for (auto v : out) {
        std::uint8_t value = 0;
        for (std::uint32_t a = 0; a < field.size(); ++a)
          if (field.rank(static_cast<std::uint8_t>(a)) == r)
            value = static_cast<std::uint8_t>(a);
        v.push_back(value);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<LinearMap> monotone_maps(std::uint32_t m, std::uint32_t n, const FiniteField& field,
                                     std::size_t cap)
{
  std::vector<LinearMap> out;
  if (m > n)
    return out;
  const auto vectors = alex_vectors(m, field);
  const std::size_t cells = std::size_t(n) * m;
  LinearMap map{n, m, std::vector<std::uint8_t>(cells, 0)};
  auto advance = [&] {
    for (std::size_t k = cells; k-- > 0;) {
      if (++map.entries[k] < field.size())
        return true;
      map.entries[k] = 0;
    }
    return false;
  };
  do {
    bool monotone = true;
    auto prev = apply(map, vectors[0], field);
    for (std::size_t i = 1; i < vectors.size() && monotone; ++i) {
      auto cur = apply(map, vectors[i], field);
      monotone = alex_less(prev, cur, field);
      prev = std::move(cur);
    }
    if (monotone) {
      out.push_back(map);
      if (out.size() > cap)
        throw FragmentError(FragmentErrorKind::ResourceBound, "Vec hom-set exceeds the cap");
    }
  } while (advance());
  return out;
}

} // namespace

FragmentPtr vec_fragment(const FiniteField& field, std::span<const std::uint32_t> sizes,
                         BuildLimits limits)
{
  FragmentBuilder b(sizes_name("Vec", sizes), FragmentKind::Vec);
  b.set_limits(limits);
  for (auto s : sizes)
    b.add_object("F^" + std::to_string(s), s);
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = 0; j < sizes.size(); ++j)
      for (auto& map : monotone_maps(sizes[i], sizes[j], field, limits.max_morphisms)) {
        bool identity = i == j;
        for (std::uint32_t r = 0; r < map.rows && identity; ++r)
          for (std::uint32_t c = 0; c < map.cols && identity; ++c)
            identity = map.at(r, c) == (r == c ? 1 : 0);
        auto f = b.add_morphism(object_id(i), object_id(j), std::move(map));
        if (identity)
          b.set_identity(object_id(i), f);
      }
  b.set_compose_rule([field](const Payload& g, const Payload& f) -> std::optional<Payload> {
    return multiply(std::get<LinearMap>(g), std::get<LinearMap>(f), field);
  });
  return b.build();
}

FragmentPtr vec_fragment(const FiniteField& field, std::uint32_t n, BuildLimits limits)
{
  const auto sizes = range_sizes(n);
  return vec_fragment(field, sizes, limits);
}

} // namespace ramcat
