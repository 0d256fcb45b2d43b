#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramcat/error.hpp"

namespace ramcat {

enum class PreorderErrorKind {
  NotPreorder,
  SizeCapExceeded,
  BadMap,
  NotMonotone,
  ImplicationFails,
  UnboundedFiber,
  GloballyBoundedInput,
  OracleFailure,
};

class PreorderError : public KindedError<PreorderErrorKind>
{
public:
  PreorderError(PreorderErrorKind kind, const std::string& what, std::int64_t x = 0,
                std::int64_t y = 0)
    : KindedError(kind, what), x_(x), y_(y)
  {}

  std::int64_t x() const noexcept { return x_; }
  std::int64_t y() const noexcept { return y_; }

private:
  std::int64_t x_;
  std::int64_t y_;
};

/// A finite preorder on {0..size-1} given by its relation table.
class FinitePreorder
{
public:
  FinitePreorder() = default;

  /// Validates reflexivity and transitivity; throws NotPreorder.
  explicit FinitePreorder(std::vector<std::vector<bool>> leq, std::vector<std::string> names = {});

  /// 0 < 1 < ... < size-1.
  static FinitePreorder chain(std::size_t size);
  static FinitePreorder antichain(std::size_t size);
  /// Reflexive-transitive closure of an arbitrary relation.
  static FinitePreorder closure(std::vector<std::vector<bool>> relation);

  std::size_t size() const noexcept { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool equivalent(std::size_t a, std::size_t b) const { return leq_[a][b] && leq_[b][a]; }
  bool less(std::size_t a, std::size_t b) const { return leq_[a][b] && !leq_[b][a]; }
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::vector<bool>>& relation() const noexcept { return leq_; }

  /// Least-index upper bound of a and b, if any.
  std::optional<std::size_t> upper_bound(std::size_t a, std::size_t b) const;

  friend bool operator==(const FinitePreorder&, const FinitePreorder&) = default;

private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::string> names_;
};

} // namespace ramcat
