#pragma once

// Rigid surjections between finite chains, monotone injections, and the
// passage between plain parameter words and rigid surjections.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramcat/parameter_words.hpp"

namespace ramcat {

enum class ChainErrorKind {
  BadMap,
  NotSurjective,
  MinPreimageOrder,
  NotMonotoneInjection,
  ChainMismatch,
  NotPlainWord,
  BadLabels,
  SyntaxError,
};

class ChainError : public KindedError<ChainErrorKind>
{
public:
  ChainError(ChainErrorKind kind, const std::string& what, std::uint32_t first = 0,
             std::uint32_t second = 0)
    : KindedError(kind, what), first_(first), second_(second)
  {}

  std::uint32_t first() const noexcept { return first_; }
  std::uint32_t second() const noexcept { return second_; }

private:
  std::uint32_t first_;
  std::uint32_t second_;
};

/// A finite chain. Canonically the positions 1 < 2 < ... < size; labels are
/// an optional presentation layer listed in increasing order.
class Chain
{
public:
  explicit Chain(std::uint32_t size) : size_(size) {}
  /// Labels in increasing order; must be pairwise distinct.
  explicit Chain(std::vector<std::string> labels);

  std::uint32_t size() const noexcept { return size_; }
  std::span<const std::string> labels() const noexcept { return labels_; }
  /// 1-based position of a label.
  std::optional<std::uint32_t> position(std::string_view label) const;

private:
  std::uint32_t size_;
  std::vector<std::string> labels_;
};

/// A rigid surjection f : {1..n} -> {1..m}, stored as its 1-based image list.
class RigidSurjection
{
public:
  std::uint32_t domain_size() const noexcept { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t codomain_size() const noexcept { return m_; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }
  /// f(i) for 1-based i.
  std::uint32_t operator()(std::uint32_t i) const { return images_[i - 1]; }

  friend bool operator==(const RigidSurjection&, const RigidSurjection&) = default;
  friend auto operator<=>(const RigidSurjection&, const RigidSurjection&) = default;

private:
  RigidSurjection(std::vector<std::uint32_t> images, std::uint32_t m)
    : images_(std::move(images)), m_(m)
  {}

  friend RigidSurjection validate_rigid(std::uint32_t, std::uint32_t, std::vector<std::uint32_t>);
  friend RigidSurjection make_rigid_unchecked(std::vector<std::uint32_t>, std::uint32_t);

  std::vector<std::uint32_t> images_;
  std::uint32_t m_ = 0;
};

/// A strictly increasing map {1..m} -> {1..n}: the morphisms of Ram.
class MonotoneInjection
{
public:
  std::uint32_t domain_size() const noexcept { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t codomain_size() const noexcept { return n_; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i - 1]; }

  friend bool operator==(const MonotoneInjection&, const MonotoneInjection&) = default;
  friend auto operator<=>(const MonotoneInjection&, const MonotoneInjection&) = default;

private:
  MonotoneInjection(std::vector<std::uint32_t> images, std::uint32_t n)
    : images_(std::move(images)), n_(n)
  {}

  friend MonotoneInjection validate_monotone(std::uint32_t, std::uint32_t,
                                             std::vector<std::uint32_t>);
  friend MonotoneInjection make_monotone_unchecked(std::vector<std::uint32_t>, std::uint32_t);

  std::vector<std::uint32_t> images_;
  std::uint32_t n_ = 0;
};

/// Checks surjectivity and min f^{-1}(b) < min f^{-1}(b') for b < b'.
RigidSurjection validate_rigid(std::uint32_t dom, std::uint32_t cod, std::vector<std::uint32_t> map);
/// Labeled-chain front end; `map` lists images as codomain labels.
RigidSurjection validate_rigid(const Chain& dom, const Chain& cod,
                               const std::vector<std::string>& map);
RigidSurjection make_rigid_unchecked(std::vector<std::uint32_t> images, std::uint32_t m);
std::optional<ChainError> check_rigid(std::uint32_t dom, std::uint32_t cod,
                                      std::span<const std::uint32_t> map);

MonotoneInjection validate_monotone(std::uint32_t dom, std::uint32_t cod,
                                    std::vector<std::uint32_t> map);
MonotoneInjection make_monotone_unchecked(std::vector<std::uint32_t> images, std::uint32_t n);

/// g ∘ f for f : A -> B, g : B -> C. Throws ChainMismatch.
RigidSurjection compose(const RigidSurjection& g, const RigidSurjection& f);
MonotoneInjection compose(const MonotoneInjection& g, const MonotoneInjection& f);

RigidSurjection identity_rsurj(std::uint32_t n);
MonotoneInjection identity_injection(std::uint32_t n);

/// RSurj(n, m) as restricted growth strings in lexicographic order; the
/// order agrees with enumerate_words over (∅, {e}) via word_to_rsurj.
std::vector<RigidSurjection> enumerate_rsurj(std::uint32_t n, std::uint32_t m);
/// Monotone injections m -> n in lexicographic order of their images.
std::vector<MonotoneInjection> enumerate_monotone(std::uint32_t m, std::uint32_t n);

/// f_u(i) = j iff u(i) = x_j. Throws NotPlainWord for letters or non-e exponents.
RigidSurjection word_to_rsurj(const DecoratedWord& u);
DecoratedWord rsurj_to_word(const RigidSurjection& f, const ContextPtr& context = plain_context());

/// f^∂(i) = min f^{-1}(i).
MonotoneInjection dual(const RigidSurjection& f);

/// Shifted duality (n+1 -> m+1) |-> (m -> n): i |-> min f^{-1}(i+1) - 1.
/// Unlike dual(), this maps RSurj(n+1, m+1) onto Inj(m, n).
MonotoneInjection shifted_dual(const RigidSurjection& f);
/// A section of shifted_dual: x |-> 1 + #{i : g(i) + 1 <= x} on {1..n+1}.
RigidSurjection from_shifted_dual(const MonotoneInjection& g);

/// "(1,2,1)".
std::string format_images(std::span<const std::uint32_t> images);
/// Parses "(1,2,1)" (parentheses optional); codomain defaults to the max image.
RigidSurjection parse_rsurj(std::string_view text, std::optional<std::uint32_t> cod = {});

} // namespace ramcat
