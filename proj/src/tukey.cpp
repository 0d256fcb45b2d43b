#include "ramcat/tukey.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <set>

namespace ramcat {

namespace {

void require_cap(const FinitePreorder& p)
{
  if (p.size() > subset_cap)
    throw PreorderError(PreorderErrorKind::SizeCapExceeded,
                        "preorder of size " + std::to_string(p.size()) +
                          " exceeds the subset cap of " + std::to_string(subset_cap),
                        static_cast<std::int64_t>(p.size()));
}

void require_map(std::span<const std::size_t> f, const FinitePreorder& a, const FinitePreorder& b)
{
  if (f.size() != a.size())
    throw PreorderError(PreorderErrorKind::BadMap,
                        "map has " + std::to_string(f.size()) + " entries, expected " +
                          std::to_string(a.size()));
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] >= b.size())
      throw PreorderError(PreorderErrorKind::BadMap,
                          "image of " + std::to_string(x) + " is outside the target",
                          static_cast<std::int64_t>(x), static_cast<std::int64_t>(f[x]));
}

// below[y]: mask of x <= y.  above[x]: mask of y >= x.
std::vector<Subset> below_masks(const FinitePreorder& p)
{
  std::vector<Subset> out(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y))
        out[y] |= Subset{1} << x;
  return out;
}

std::vector<Subset> above_masks(const FinitePreorder& p)
{
  std::vector<Subset> out(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y))
        out[x] |= Subset{1} << y;
  return out;
}

bool bounded_by(const std::vector<Subset>& below, Subset mask)
{
  return std::any_of(below.begin(), below.end(), [&](Subset d) { return (mask & ~d) == 0; });
}

bool cofinal_in(const std::vector<Subset>& above, Subset mask)
{
  return std::all_of(above.begin(), above.end(), [&](Subset u) { return (mask & u) != 0; });
}

Subset image(std::span<const std::size_t> f, Subset mask)
{
  Subset out = 0;
  for (auto x : subset_elements(mask))
    out |= Subset{1} << f[x];
  return out;
}

Subset full(std::size_t n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }

std::optional<std::size_t> checked_upper_bound(const GeneratedPreorder& p, std::size_t x,
                                               std::size_t y)
{
  auto z = p.upper_bound(x, y);
  if (z && (!p.leq(x, *z) || !p.leq(y, *z)))
    throw PreorderError(PreorderErrorKind::OracleFailure,
                        p.name + ": upper_bound(" + p.label(x) + ", " + p.label(y) + ") = " +
                          p.label(*z) + " is not above both",
                        static_cast<std::int64_t>(x), static_cast<std::int64_t>(y));
  return z;
}

} // namespace

std::vector<std::size_t> subset_elements(Subset mask)
{
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

bool is_bounded(const FinitePreorder& p, Subset mask) { return bounded_by(below_masks(p), mask); }
bool is_cofinal(const FinitePreorder& p, Subset mask) { return cofinal_in(above_masks(p), mask); }

bool is_directed(const FinitePreorder& p)
{
  if (p.size() == 0)
    return false;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (!p.upper_bound(x, y))
        return false;
  return true;
}

PreorderPredicates preorder_predicates(const FinitePreorder& p)
{
  require_cap(p);
  PreorderPredicates out;
  out.directed = is_directed(p);
  const auto below = below_masks(p);
  const auto above = above_masks(p);
  for (Subset m = 0; m <= full(p.size()); ++m) {
    if (bounded_by(below, m))
      out.bounded_subsets.push_back(m);
    if (cofinal_in(above, m))
      out.cofinal_subsets.push_back(m);
  }
  out.class_of.assign(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    auto it = std::find_if(out.equivalence_classes.begin(), out.equivalence_classes.end(),
                           [&](const auto& cls) { return p.equivalent(cls.front(), x); });
    if (it == out.equivalence_classes.end()) {
      out.class_of[x] = out.equivalence_classes.size();
      out.equivalence_classes.push_back({x});
    } else {
      out.class_of[x] = static_cast<std::size_t>(it - out.equivalence_classes.begin());
      it->push_back(x);
    }
  }
  const auto k = out.equivalence_classes.size();
  std::vector<std::vector<bool>> q(k, std::vector<bool>(k));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    std::string name = "[";
    for (auto x : out.equivalence_classes[i])
      name += (name.size() > 1 ? "," : "") + p.name(x);
    names.push_back(name + "]");
    for (std::size_t j = 0; j < k; ++j)
      q[i][j] = p.leq(out.equivalence_classes[i].front(), out.equivalence_classes[j].front());
  }
  out.quotient = FinitePreorder(std::move(q), std::move(names));
  return out;
}

MapVerdict is_tukey_map(std::span<const std::size_t> f, const FinitePreorder& a,
                        const FinitePreorder& b)
{
  require_cap(a);
  require_map(f, a, b);
  const auto below_a = below_masks(a);
  const auto below_b = below_masks(b);
  for (Subset m = 0; m <= full(a.size()); ++m)
    if (!bounded_by(below_a, m) && bounded_by(below_b, image(f, m)))
      return {false, m};
  return {};
}

MapVerdict is_cofinal_map(std::span<const std::size_t> g, const FinitePreorder& b,
                          const FinitePreorder& a)
{
  require_cap(b);
  require_map(g, b, a);
  const auto above_b = above_masks(b);
  const auto above_a = above_masks(a);
  for (Subset m = 0; m <= full(b.size()); ++m)
    if (cofinal_in(above_b, m) && !cofinal_in(above_a, image(g, m)))
      return {false, m};
  return {};
}

bool is_monotone_map(std::span<const std::size_t> f, const FinitePreorder& a,
                     const FinitePreorder& b)
{
  require_map(f, a, b);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !b.leq(f[x], f[y]))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// generated preorders

std::string GeneratedPreorder::label(std::size_t x) const
{
  auto c = coords(x);
  if (c.size() == 1)
    return std::to_string(c[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i)
    out += (i ? "," : "") + std::to_string(c[i]);
  return out + ")";
}

GeneratedPreorder GeneratedPreorder::omega()
{
  GeneratedPreorder p;
  p.name = "omega";
  p.leq = [](std::size_t x, std::size_t y) { return x <= y; };
  p.upper_bound = [](std::size_t x, std::size_t y) -> std::optional<std::size_t> {
    return std::max(x, y);
  };
  p.down_set = [](std::size_t x) {
    std::vector<std::size_t> out(x + 1);
    for (std::size_t i = 0; i <= x; ++i)
      out[i] = i;
    return out;
  };
  p.coords = [](std::size_t x) { return std::vector<std::int64_t>{static_cast<std::int64_t>(x)}; };
  p.index_of = [](std::span<const std::int64_t> c) -> std::optional<std::size_t> {
    if (c.size() != 1 || c[0] < 0)
      return std::nullopt;
    return static_cast<std::size_t>(c[0]);
  };
  return p;
}

namespace {

std::pair<std::size_t, std::size_t> cantor_pair(std::size_t k)
{
  auto d = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
  while (d * (d + 1) / 2 > k)
    --d;
  while ((d + 1) * (d + 2) / 2 <= k)
    ++d;
  const auto i = k - d * (d + 1) / 2;
  return {i, d - i};
}

std::size_t cantor_index(std::size_t i, std::size_t j)
{
  const auto d = i + j;
  return d * (d + 1) / 2 + i;
}

} // namespace

GeneratedPreorder GeneratedPreorder::omega2()
{
  GeneratedPreorder p;
  p.name = "omega2";
  p.leq = [](std::size_t x, std::size_t y) {
    auto [xi, xj] = cantor_pair(x);
    auto [yi, yj] = cantor_pair(y);
    return xi <= yi && xj <= yj;
  };
  p.upper_bound = [](std::size_t x, std::size_t y) -> std::optional<std::size_t> {
    auto [xi, xj] = cantor_pair(x);
    auto [yi, yj] = cantor_pair(y);
    return cantor_index(std::max(xi, yi), std::max(xj, yj));
  };
  p.down_set = [](std::size_t x) {
    auto [xi, xj] = cantor_pair(x);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= xi; ++i)
      for (std::size_t j = 0; j <= xj; ++j)
        out.push_back(cantor_index(i, j));
    std::sort(out.begin(), out.end());
    return out;
  };
  p.coords = [](std::size_t x) {
    auto [i, j] = cantor_pair(x);
    return std::vector<std::int64_t>{static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)};
  };
  p.index_of = [](std::span<const std::int64_t> c) -> std::optional<std::size_t> {
    if (c.size() != 2 || c[0] < 0 || c[1] < 0)
      return std::nullopt;
    return cantor_index(static_cast<std::size_t>(c[0]), static_cast<std::size_t>(c[1]));
  };
  return p;
}

GeneratedPreorder GeneratedPreorder::finite(FinitePreorder fp, std::string name)
{
  auto shared = std::make_shared<const FinitePreorder>(std::move(fp));
  GeneratedPreorder p;
  p.name = std::move(name);
  p.size = shared->size();
  p.leq = [shared](std::size_t x, std::size_t y) {
    return x < shared->size() && y < shared->size() && shared->leq(x, y);
  };
  p.upper_bound = [shared](std::size_t x, std::size_t y) { return shared->upper_bound(x, y); };
  p.down_set = [shared](std::size_t x) {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < shared->size(); ++y)
      if (shared->leq(y, x))
        out.push_back(y);
    return out;
  };
  p.coords = [](std::size_t x) { return std::vector<std::int64_t>{static_cast<std::int64_t>(x)}; };
  p.index_of = [shared](std::span<const std::int64_t> c) -> std::optional<std::size_t> {
    if (c.size() != 1 || c[0] < 0 || static_cast<std::size_t>(c[0]) >= shared->size())
      return std::nullopt;
    return static_cast<std::size_t>(c[0]);
  };
  for (std::size_t t = 0; t < shared->size() && !p.globally_bounded; ++t) {
    bool top = true;
    for (std::size_t x = 0; x < shared->size(); ++x)
      top = top && shared->leq(x, t);
    p.globally_bounded = top;
  }
  return p;
}

// ---------------------------------------------------------------------------
// companion and monotonization

CompanionResult cofinal_companion(const IndexMap& f, const GeneratedPreorder& a,
                                  const GeneratedPreorder& b, std::size_t prefix)
{
  CompanionResult out;
  const auto na = a.size ? std::min(prefix, *a.size) : prefix;
  const auto nb = b.size ? std::min(prefix, *b.size) : prefix;
  out.prefix = prefix;
  if (na == 0)
    return out;
  std::vector<std::size_t> fa(na);
  for (std::size_t x = 0; x < na; ++x)
    fa[x] = f(x);
  bool whole_fiber = false;
  for (std::size_t y = 0; y < nb; ++y) {
    std::optional<std::size_t> acc;
    std::size_t fiber = 0;
    for (std::size_t x = 0; x < na; ++x) {
      if (!b.leq(fa[x], y))
        continue;
      ++fiber;
      if (!acc) {
        acc = x;
        continue;
      }
      acc = checked_upper_bound(a, *acc, x);
      if (!acc)
        throw PreorderError(PreorderErrorKind::UnboundedFiber,
                            "the fiber of " + b.label(y) + " has no upper bound",
                            static_cast<std::int64_t>(y));
    }
    whole_fiber = whole_fiber || fiber == na;
    out.g.push_back(acc.value_or(0));
  }
  if (whole_fiber && !a.size)
    out.warnings.push_back("some fiber is the whole prefix; whether f is Tukey cannot be "
                           "decided from a prefix");
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      ++out.pairs_checked;
      if (b.leq(fa[x], y) && !a.leq(x, out.g[y]) && !out.violation)
        out.violation = {x, y};
    }
  return out;
}

MonotonizationTrace monotonize(const IndexMap& f, const GeneratedPreorder& a,
                               const GeneratedPreorder& b, std::size_t steps)
{
  if (a.globally_bounded)
    throw PreorderError(PreorderErrorKind::GloballyBoundedInput,
                        a.name + " is bounded; the construction needs an unbounded preorder");
  MonotonizationTrace t;
  std::set<std::size_t> covered;
  for (std::size_t n = 0; n < steps; ++n) {
    std::size_t j = 0;
    while (covered.count(j))
      ++j;
    if (a.size && j >= *a.size) {
      t.notes.push_back("enumeration exhausted after " + std::to_string(n) + " rounds");
      break;
    }
    std::size_t s = j;
    if (n > 0) {
      auto ub = checked_upper_bound(a, t.s.back(), j);
      if (!ub)
        throw PreorderError(PreorderErrorKind::OracleFailure,
                            a.name + ": no upper bound for " + a.label(t.s.back()) + " and " +
                              a.label(j),
                            static_cast<std::int64_t>(t.s.back()), static_cast<std::int64_t>(j));
      s = *ub;
    }
    std::vector<std::size_t> block;
    for (auto x : a.down_set(s))
      if (!covered.count(x))
        block.push_back(x);
    std::sort(block.begin(), block.end());
    std::size_t bn = f(s);
    if (n > 0) {
      auto ub = checked_upper_bound(b, t.b.back(), bn);
      if (!ub)
        throw PreorderError(PreorderErrorKind::OracleFailure,
                            b.name + ": no upper bound for " + b.label(t.b.back()) + " and " +
                              b.label(bn));
      bn = *ub;
    }
    for (auto x : block) {
      covered.insert(x);
      t.fhat[x] = bn;
    }
    t.j.push_back(j);
    t.s.push_back(s);
    t.S.push_back(std::move(block));
    t.b.push_back(bn);
  }
  return t;
}

TraceCheck check_trace(const MonotonizationTrace& t, const IndexMap& f,
                       const GeneratedPreorder& a, const GeneratedPreorder& b)
{
  TraceCheck c;
  auto fail = [&](bool& flag, std::string msg) {
    if (flag)
      c.messages.push_back(std::move(msg));
    flag = false;
  };
  for (std::size_t n = 1; n < t.s.size(); ++n)
    if (!(a.leq(t.s[n - 1], t.s[n]) && !a.leq(t.s[n], t.s[n - 1])))
      fail(c.s_strictly_increasing, "s_" + std::to_string(n - 1) + " < s_" + std::to_string(n) +
                                      " fails");

  std::map<std::size_t, std::size_t> block_of;
  for (std::size_t n = 0; n < t.S.size(); ++n)
    for (auto x : t.S[n])
      if (!block_of.emplace(x, n).second)
        fail(c.partition, a.label(x) + " lies in two blocks");
  if (!t.j.empty())
    for (std::size_t x = 0; x < t.j.back(); ++x)
      if (!block_of.count(x))
        fail(c.partition, a.label(x) + " precedes j = " + std::to_string(t.j.back()) +
                            " but is in no block");

  for (auto [x, i] : block_of)
    for (auto [y, j] : block_of)
      if (a.leq(x, y) && i > j)
        fail(c.order_respecting, a.label(x) + " <= " + a.label(y) + " but blocks " +
                                   std::to_string(i) + " > " + std::to_string(j));

  for (std::size_t n = 0; n < t.S.size(); ++n) {
    for (auto x : t.S[n])
      if (t.fhat.at(x) != t.b[n])
        fail(c.fhat_blocks, "f̂ is not b_" + std::to_string(n) + " on " + a.label(x));
    if (!b.leq(f(t.s[n]), t.b[n]))
      fail(c.fhat_blocks, "b_" + std::to_string(n) + " is not above f(s_n)");
    if (n > 0 && !b.leq(t.b[n - 1], t.b[n]))
      fail(c.fhat_blocks, "b_" + std::to_string(n) + " is not above b_" + std::to_string(n - 1));
  }

  for (auto [x, fx] : t.fhat)
    for (auto [y, fy] : t.fhat)
      if (a.leq(x, y) && !b.leq(fx, fy))
        fail(c.fhat_monotone, a.label(x) + " <= " + a.label(y) + " but f̂ is not monotone there");

  for (auto [x, i] : block_of) {
    std::size_t least = t.s.size();
    for (std::size_t n = 0; n < t.s.size(); ++n)
      if (a.leq(x, t.s[n])) {
        least = n;
        break;
      }
    if (least != i)
      fail(c.membership_agrees, a.label(x) + " is in S_" + std::to_string(i) +
                                  " but first lies below s_" + std::to_string(least));
  }
  return c;
}

} // namespace ramcat
