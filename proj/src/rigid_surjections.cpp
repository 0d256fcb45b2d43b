#include "ramcat/rigid_surjections.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ramcat {

Chain::Chain(std::vector<std::string> labels)
  : size_(static_cast<std::uint32_t>(labels.size())), labels_(std::move(labels))
{
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw ChainError(ChainErrorKind::BadLabels, "duplicate chain label '" + labels_[i] + "'");
}

std::optional<std::uint32_t> Chain::position(std::string_view label) const
{
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    return std::nullopt;
  return static_cast<std::uint32_t>(it - labels_.begin()) + 1;
}

std::optional<ChainError> check_rigid(std::uint32_t dom, std::uint32_t cod,
                                      std::span<const std::uint32_t> map)
{
  if (map.size() != dom)
    return ChainError(ChainErrorKind::BadMap, "map is not total on the domain");
  std::vector<std::uint32_t> min_preimage(cod + 1, 0);
  for (std::uint32_t i = 1; i <= dom; ++i) {
    const auto b = map[i - 1];
    if (b == 0 || b > cod)
      return ChainError(ChainErrorKind::BadMap,
                        "image of " + std::to_string(i) + " is outside 1.." + std::to_string(cod),
                        i);
    if (min_preimage[b] == 0)
      min_preimage[b] = i;
  }
  for (std::uint32_t b = 1; b <= cod; ++b)
    if (min_preimage[b] == 0)
      return ChainError(ChainErrorKind::NotSurjective,
                        std::to_string(b) + " has no preimage", b);
  for (std::uint32_t b = 1; b < cod; ++b)
    if (min_preimage[b] > min_preimage[b + 1])
      return ChainError(ChainErrorKind::MinPreimageOrder,
                        "min f^-1(" + std::to_string(b) + ") > min f^-1(" +
                          std::to_string(b + 1) + ")",
                        b, b + 1);
  return std::nullopt;
}

RigidSurjection validate_rigid(std::uint32_t dom, std::uint32_t cod, std::vector<std::uint32_t> map)
{
  if (auto err = check_rigid(dom, cod, map))
    throw *err;
  return RigidSurjection(std::move(map), cod);
}

RigidSurjection validate_rigid(const Chain& dom, const Chain& cod,
                               const std::vector<std::string>& map)
{
  std::vector<std::uint32_t> images;
  images.reserve(map.size());
  for (const auto& label : map) {
    auto pos = cod.position(label);
    if (!pos)
      throw ChainError(ChainErrorKind::BadMap, "'" + label + "' is not in the codomain chain");
    images.push_back(*pos);
  }
  return validate_rigid(dom.size(), cod.size(), std::move(images));
}

RigidSurjection make_rigid_unchecked(std::vector<std::uint32_t> images, std::uint32_t m)
{
  return RigidSurjection(std::move(images), m);
}

MonotoneInjection validate_monotone(std::uint32_t dom, std::uint32_t cod,
                                    std::vector<std::uint32_t> map)
{
  if (map.size() != dom)
    throw ChainError(ChainErrorKind::BadMap, "map is not total on the domain");
  for (std::uint32_t i = 0; i < dom; ++i) {
    if (map[i] == 0 || map[i] > cod)
      throw ChainError(ChainErrorKind::BadMap, "image out of range", i + 1);
    if (i > 0 && map[i - 1] >= map[i])
      throw ChainError(ChainErrorKind::NotMonotoneInjection,
                       "map is not strictly increasing at " + std::to_string(i + 1), i + 1);
  }
  return MonotoneInjection(std::move(map), cod);
}

MonotoneInjection make_monotone_unchecked(std::vector<std::uint32_t> images, std::uint32_t n)
{
  return MonotoneInjection(std::move(images), n);
}

RigidSurjection compose(const RigidSurjection& g, const RigidSurjection& f)
{
  if (f.codomain_size() != g.domain_size())
    throw ChainError(ChainErrorKind::ChainMismatch, "cod(f) != dom(g)", f.codomain_size(),
                     g.domain_size());
  std::vector<std::uint32_t> images;
  images.reserve(f.domain_size());
  for (auto b : f.images())
    images.push_back(g(b));
  return make_rigid_unchecked(std::move(images), g.codomain_size());
}

MonotoneInjection compose(const MonotoneInjection& g, const MonotoneInjection& f)
{
  if (f.codomain_size() != g.domain_size())
    throw ChainError(ChainErrorKind::ChainMismatch, "cod(f) != dom(g)", f.codomain_size(),
                     g.domain_size());
  std::vector<std::uint32_t> images;
  images.reserve(f.domain_size());
  for (auto b : f.images())
    images.push_back(g(b));
  return make_monotone_unchecked(std::move(images), g.codomain_size());
}

RigidSurjection identity_rsurj(std::uint32_t n)
{
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i)
    images[i] = i + 1;
  return make_rigid_unchecked(std::move(images), n);
}

MonotoneInjection identity_injection(std::uint32_t n)
{
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i)
    images[i] = i + 1;
  return make_monotone_unchecked(std::move(images), n);
}

std::vector<RigidSurjection> enumerate_rsurj(std::uint32_t n, std::uint32_t m)
{
  std::vector<RigidSurjection> out;
  if (n < m || (m == 0 && n > 0))
    return out;
  std::vector<std::uint32_t> images;
  images.reserve(n);
  // restricted growth strings: each new block opens at its minimum
  auto rec = [&](auto& self, std::uint32_t used) -> void {
    const auto pos = static_cast<std::uint32_t>(images.size());
    if (pos == n) {
      out.push_back(make_rigid_unchecked(images, m));
      return;
    }
    const std::uint32_t remaining = n - pos;
    if (remaining > m - used)
      for (std::uint32_t b = 1; b <= used; ++b) {
        images.push_back(b);
        self(self, used);
        images.pop_back();
      }
    if (used < m) {
      images.push_back(used + 1);
      self(self, used + 1);
      images.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<MonotoneInjection> enumerate_monotone(std::uint32_t m, std::uint32_t n)
{
  std::vector<MonotoneInjection> out;
  if (m > n)
    return out;
  std::vector<std::uint32_t> images;
  images.reserve(m);
  auto rec = [&](auto& self, std::uint32_t next) -> void {
    if (images.size() == m) {
      out.push_back(make_monotone_unchecked(images, n));
      return;
    }
    const auto need = m - static_cast<std::uint32_t>(images.size());
    for (std::uint32_t b = next; b + need - 1 <= n; ++b) {
      images.push_back(b);
      self(self, b + 1);
      images.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

RigidSurjection word_to_rsurj(const DecoratedWord& u)
{
  std::vector<std::uint32_t> images;
  images.reserve(u.length());
  for (std::uint32_t i = 0; i < u.length(); ++i) {
    const auto& t = u[i];
    if (!t.is_param() || t.exponent != neutral)
      throw ChainError(ChainErrorKind::NotPlainWord,
                       "position " + std::to_string(i + 1) + " is not a bare parameter", i + 1);
    images.push_back(t.index);
  }
  // a valid word yields a rigid surjection; keep the check honest anyway
  return validate_rigid(u.length(), u.parameters(), std::move(images));
}

DecoratedWord rsurj_to_word(const RigidSurjection& f, const ContextPtr& context)
{
  std::vector<Token> tokens;
  tokens.reserve(f.domain_size());
  for (auto b : f.images())
    tokens.push_back(Token::param(b));
  return validate_word(std::move(tokens), f.codomain_size(), context);
}

MonotoneInjection dual(const RigidSurjection& f)
{
  std::vector<std::uint32_t> minima(f.codomain_size(), 0);
  for (std::uint32_t i = 1; i <= f.domain_size(); ++i) {
    auto& slot = minima[f(i) - 1];
    if (slot == 0)
      slot = i;
  }
  return make_monotone_unchecked(std::move(minima), f.domain_size());
}

MonotoneInjection shifted_dual(const RigidSurjection& f)
{
  const auto d = dual(f);
  std::vector<std::uint32_t> images;
  images.reserve(d.domain_size());
  for (std::uint32_t i = 2; i <= d.domain_size(); ++i)
    images.push_back(d(i) - 1);
  return make_monotone_unchecked(std::move(images), f.domain_size() - 1);
}

RigidSurjection from_shifted_dual(const MonotoneInjection& g)
{
  const auto n = g.codomain_size();
  std::vector<std::uint32_t> images(n + 1);
  std::uint32_t below = 0;
  for (std::uint32_t x = 1; x <= n + 1; ++x) {
    while (below < g.domain_size() && g(below + 1) + 1 <= x)
      ++below;
    images[x - 1] = 1 + below;
  }
  return make_rigid_unchecked(std::move(images), g.domain_size() + 1);
}

std::string format_images(std::span<const std::uint32_t> images)
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i)
      os << ',';
    os << images[i];
  }
  os << ')';
  return os.str();
}

RigidSurjection parse_rsurj(std::string_view text, std::optional<std::uint32_t> cod)
{
  std::vector<std::uint32_t> images;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                               text[i] == '\r'))
      ++i;
  };
  skip();
  const bool paren = i < text.size() && text[i] == '(';
  if (paren)
    ++i;
  while (true) {
    skip();
    if (i >= text.size() || text[i] == ')')
      break;
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{})
      throw ChainError(ChainErrorKind::SyntaxError,
                       "expected a number at offset " + std::to_string(i + 1),
                       static_cast<std::uint32_t>(i + 1));
    images.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
    skip();
    if (i < text.size() && text[i] == ',')
      ++i;
  }
  if (paren) {
    if (i >= text.size() || text[i] != ')')
      throw ChainError(ChainErrorKind::SyntaxError, "missing ')'");
    ++i;
  }
  skip();
  if (i != text.size())
    throw ChainError(ChainErrorKind::SyntaxError,
                     "trailing input at offset " + std::to_string(i + 1),
                     static_cast<std::uint32_t>(i + 1));
  std::uint32_t m = cod.value_or(images.empty() ? 0 : *std::max_element(images.begin(), images.end()));
  const auto n = static_cast<std::uint32_t>(images.size());
  return validate_rigid(n, m, std::move(images));
}

} // namespace ramcat
