#pragma once

// Boundedness, cofinality, Tukey and cofinal maps on finite preorders; the
// cofinal companion of a Tukey map and the monotonization algorithm on
// countable preorders presented by an enumeration.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramcat/preorder.hpp"

namespace ramcat {

/// Subset-exhaustive checks refuse larger preorders.
inline constexpr std::size_t subset_cap = 15;

using Subset = std::uint32_t;  ///< bitmask over {0..size-1}

std::vector<std::size_t> subset_elements(Subset mask);

bool is_bounded(const FinitePreorder& p, Subset mask);
bool is_cofinal(const FinitePreorder& p, Subset mask);
/// Every pair has an upper bound (equivalently, for finite preorders, the
/// whole set is bounded; the empty preorder is not directed).
bool is_directed(const FinitePreorder& p);

struct PreorderPredicates
{
  bool directed = false;
  std::vector<Subset> bounded_subsets;
  std::vector<Subset> cofinal_subsets;
  std::vector<std::vector<std::size_t>> equivalence_classes;
  std::vector<std::size_t> class_of;
  /// [a] <= [b] iff a <= b.
  FinitePreorder quotient;
};

/// Throws SizeCapExceeded above subset_cap elements.
PreorderPredicates preorder_predicates(const FinitePreorder& p);

struct MapVerdict
{
  bool holds = true;
  /// Tukey: an unbounded X with bounded image. Cofinal: a cofinal X whose
  /// image is not cofinal.
  std::optional<Subset> witness;
};

/// f : A -> B, f[a] = index in B. Throws BadMap, SizeCapExceeded.
MapVerdict is_tukey_map(std::span<const std::size_t> f, const FinitePreorder& a,
                        const FinitePreorder& b);
/// g : B -> A.
MapVerdict is_cofinal_map(std::span<const std::size_t> g, const FinitePreorder& b,
                          const FinitePreorder& a);
bool is_monotone_map(std::span<const std::size_t> f, const FinitePreorder& a,
                     const FinitePreorder& b);

/// A countable preorder given by an enumeration of its elements (by index),
/// a decidable order and an upper-bound oracle. Every check ranges over an
/// enumerated prefix only.
struct GeneratedPreorder
{
  std::string name;
  std::optional<std::size_t> size;  ///< nullopt: infinite
  std::function<bool(std::size_t, std::size_t)> leq;
  /// An element above both; nullopt when the oracle has none.
  std::function<std::optional<std::size_t>(std::size_t, std::size_t)> upper_bound;
  /// <x], as indices. Must be finite for monotonize to apply.
  std::function<std::vector<std::size_t>(std::size_t)> down_set;
  std::function<std::vector<std::int64_t>(std::size_t)> coords;
  std::function<std::optional<std::size_t>(std::span<const std::int64_t>)> index_of;
  /// Declared, not computed (except for finite preorders).
  bool globally_bounded = false;

  std::string label(std::size_t x) const;

  /// 0 < 1 < 2 < ..., upper bound max.
  static GeneratedPreorder omega();
  /// ω × ω with the product order, enumerated along Cantor diagonals,
  /// upper bound coordinatewise max.
  static GeneratedPreorder omega2();
  /// Upper bound: least index above both.
  static GeneratedPreorder finite(FinitePreorder p, std::string name = "finite");
};

/// A map between generated preorders, by index.
using IndexMap = std::function<std::size_t(std::size_t)>;

struct CompanionResult
{
  std::size_t prefix = 0;
  std::vector<std::size_t> g;  ///< g[b] for b < prefix
  std::size_t pairs_checked = 0;
  /// (a, b) with f(a) <= b but not a <= g(b).
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  std::vector<std::string> warnings;

  bool implication_holds() const noexcept { return !violation.has_value(); }
};

/// g(b) folds upper_bound over {a < N : f(a) <= b} in enumeration order; an
/// empty fiber gives the first element. Throws UnboundedFiber when the
/// oracle finds no bound, OracleFailure when its answer is not one.
CompanionResult cofinal_companion(const IndexMap& f, const GeneratedPreorder& a,
                                  const GeneratedPreorder& b, std::size_t prefix);

struct MonotonizationTrace
{
  std::vector<std::size_t> s;
  std::vector<std::vector<std::size_t>> S;
  std::vector<std::size_t> j;
  std::vector<std::size_t> b;
  std::map<std::size_t, std::size_t> fhat;
  std::vector<std::string> notes;
};

/// Runs `steps` rounds. Throws GloballyBoundedInput, OracleFailure.
MonotonizationTrace monotonize(const IndexMap& f, const GeneratedPreorder& a,
                               const GeneratedPreorder& b, std::size_t steps);

struct TraceCheck
{
  bool s_strictly_increasing = true;
  bool partition = true;       ///< disjoint, and every index below the last j is covered
  bool order_respecting = true;  ///< x ∈ S_i, y ∈ S_j, x <= y  =>  i <= j
  bool fhat_blocks = true;     ///< f̂ = b_n on S_n, b_n >= b_{n-1}, b_n >= f(s_n)
  bool fhat_monotone = true;
  bool membership_agrees = true;  ///< least i with x <= s_i
  std::vector<std::string> messages;

  bool ok() const noexcept
  {
    return s_strictly_increasing && partition && order_respecting && fhat_blocks &&
           fhat_monotone && membership_agrees;
  }
};

TraceCheck check_trace(const MonotonizationTrace& trace, const IndexMap& f,
                       const GeneratedPreorder& a, const GeneratedPreorder& b);

} // namespace ramcat
