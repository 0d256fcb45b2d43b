#pragma once

// Fragments of the concrete categories: Ram, DRam, DRam^op, GR(A, X, G),
// thin categories of finite preorders, and Vec(F).

#include <cstdint>
#include <span>
#include <vector>

#include "ramcat/category.hpp"
#include "ramcat/preorder.hpp"

namespace ramcat {

/// Objects 1..n.
std::vector<std::uint32_t> range_sizes(std::uint32_t n);

/// Finite chains with strictly increasing maps.
FragmentPtr ram_fragment(std::span<const std::uint32_t> sizes, BuildLimits limits = {});
FragmentPtr ram_fragment(std::uint32_t n, BuildLimits limits = {});

/// Finite chains with rigid surjections; hom(n, m) = RSurj(n, m).
FragmentPtr dram_fragment(std::span<const std::uint32_t> sizes, BuildLimits limits = {});
FragmentPtr dram_fragment(std::uint32_t n, BuildLimits limits = {});

/// DRam^op: hom(m, n) = RSurj(n, m), g · f = f ∘ g.
FragmentPtr dram_op_fragment(std::span<const std::uint32_t> sizes, BuildLimits limits = {});
FragmentPtr dram_op_fragment(std::uint32_t n, BuildLimits limits = {});

/// hom(m, n) = W^n_m(A, G), composition by substitution. Sizes must be >= 1.
FragmentPtr gr_fragment(const ContextPtr& context, std::span<const std::uint32_t> sizes,
                        BuildLimits limits = {});
FragmentPtr gr_fragment(const ContextPtr& context, std::uint32_t n, BuildLimits limits = {});

/// One morphism a -> b exactly when a <= b.
FragmentPtr thin_from_preorder(const FinitePreorder& preorder);

/// A finite field with an ordering of its elements in which 0 is least.
class FiniteField
{
public:
  /// GF(2) with 0 < 1.
  static FiniteField gf2();
  /// Z/p with the natural order; p must be prime.
  static FiniteField prime(std::uint32_t p);
  /// Validated tables over {0..q-1}; 0 and 1 are the additive and
  /// multiplicative identities, `order` lists elements from least with 0 first.
  static FiniteField from_tables(std::vector<std::vector<std::uint8_t>> add,
                                 std::vector<std::vector<std::uint8_t>> mul,
                                 std::vector<std::uint8_t> order = {});

  std::uint32_t size() const noexcept { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t rank(std::uint8_t a) const { return rank_[a]; }

private:
  std::uint32_t q_ = 0;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint32_t> rank_;
};

/// x <_alex y: at the highest index where they differ, x is smaller.
bool alex_less(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y,
               const FiniteField& field);

/// Matrix-vector product over the field.
std::vector<std::uint8_t> apply(const LinearMap& map, std::span<const std::uint8_t> x,
                                const FiniteField& field);
LinearMap multiply(const LinearMap& g, const LinearMap& f, const FiniteField& field);

/// Injective linear maps F^m -> F^n that are strictly monotone for the
/// anti-lexicographic order, for dimensions in `sizes`.
FragmentPtr vec_fragment(const FiniteField& field, std::span<const std::uint32_t> sizes,
                         BuildLimits limits = {});
FragmentPtr vec_fragment(const FiniteField& field, std::uint32_t n, BuildLimits limits = {});

} // namespace ramcat
