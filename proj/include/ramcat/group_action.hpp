#pragma once

// Finite groups given by Cayley tables and their right actions on finite
// alphabets.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramcat/error.hpp"

namespace ramcat {

/// Group elements are canonical indices; 0 is always the neutral element.
using GroupElement = std::uint32_t;
/// Letters are indices into the alphabet of a RightAction.
using Letter = std::uint32_t;

inline constexpr GroupElement neutral = 0;

enum class GroupErrorKind {
  BadTable,
  NonAssociative,
  NoIdentity,
  NoInverse,
  BadElementOrder,
  UnknownLetter,
  UnknownGroupElement,
  NotUnital,
  NotRightAction,
};

class GroupError : public KindedError<GroupErrorKind>
{
public:
  GroupError(GroupErrorKind kind, const std::string& what,
             std::vector<std::uint32_t> witness = {})
    : KindedError(kind, what), witness_(std::move(witness))
  {}

  /// Offending elements/letters, e.g. the (g,h,k) triple for NonAssociative.
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

private:
  std::vector<std::uint32_t> witness_;
};

using CayleyTable = std::vector<std::vector<std::uint32_t>>;

class FiniteGroup
{
public:
  /// The one-element group {e}.
  FiniteGroup();

  /// Validates a raw table and builds the group. Throws GroupError.
  /// `names` defaults to e, g1, g2, ...; `element_order` defaults to index
  /// order and must start with the neutral element.
  static FiniteGroup from_table(CayleyTable table,
                                std::vector<std::string> names = {},
                                std::vector<GroupElement> element_order = {});

  static FiniteGroup trivial() { return {}; }

  /// Z_n with elements named e, g, g2, ..., g{n-1}.
  static FiniteGroup cyclic(std::uint32_t order);

  std::uint32_t order() const noexcept { return order_; }

  GroupElement multiply(GroupElement g, GroupElement h) const
  {
    return table_[g * order_ + h];
  }
  GroupElement inverse(GroupElement g) const { return inverse_[g]; }

  /// Position of `g` in the fixed linear order of G (e has rank 0).
  std::uint32_t rank(GroupElement g) const { return rank_[g]; }
  std::span<const GroupElement> element_order() const noexcept { return element_order_; }

  const std::string& name(GroupElement g) const { return names_.at(g); }
  std::span<const std::string> names() const noexcept { return names_; }
  std::optional<GroupElement> find(std::string_view name) const;

  bool contains(GroupElement g) const noexcept { return g < order_; }

  CayleyTable table() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

private:
  std::uint32_t order_ = 1;
  std::vector<GroupElement> table_;
  std::vector<GroupElement> inverse_;
  std::vector<GroupElement> element_order_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::string> names_;
};

/// Check the group axioms on a raw table without throwing. Returns the
/// first violation found (identity, then associativity, then inverses).
std::optional<GroupError> check_group_table(const CayleyTable& table);

/// Result of validating a right action table.
struct ActionDiagnostic
{
  bool ok = true;
  GroupErrorKind kind = GroupErrorKind::NotUnital;
  Letter letter = 0;
  GroupElement g = 0;
  GroupElement h = 0;
  std::string message;
};

/// table[a][g] = a^g. Reports NotUnital{a} or NotRightAction{a,g,h}.
ActionDiagnostic validate_action(const FiniteGroup& group, std::size_t alphabet_size,
                                 const std::vector<std::vector<Letter>>& table);

class RightAction
{
public:
  /// Empty alphabet, trivial group.
  RightAction();

  /// The action where every group element fixes every letter.
  static RightAction trivial(FiniteGroup group, std::vector<std::string> alphabet = {});

  /// Validated construction; throws GroupError on a bad table.
  static RightAction from_table(FiniteGroup group, std::vector<std::string> alphabet,
                                std::vector<std::vector<Letter>> table);

  const FiniteGroup& group() const noexcept { return group_; }
  std::span<const std::string> alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  const std::string& letter_name(Letter a) const { return alphabet_.at(a); }
  std::optional<Letter> find_letter(std::string_view name) const;

  /// a^g; throws UnknownLetter / UnknownGroupElement.
  Letter act(Letter a, GroupElement g) const;
  /// Unchecked variant for hot loops.
  Letter act_unchecked(Letter a, GroupElement g) const noexcept
  {
    return table_[a * group_.order() + g];
  }

  std::vector<std::vector<Letter>> table() const;

  friend bool operator==(const RightAction&, const RightAction&) = default;

private:
  FiniteGroup group_;
  std::vector<std::string> alphabet_;
  std::vector<Letter> table_;
};

} // namespace ramcat
