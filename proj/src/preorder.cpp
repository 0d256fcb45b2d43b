#include "ramcat/preorder.hpp"

namespace ramcat {

FinitePreorder::FinitePreorder(std::vector<std::vector<bool>> leq, std::vector<std::string> names)
  : leq_(std::move(leq)), names_(std::move(names))
{
  const auto n = leq_.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (leq_[a].size() != n)
      throw PreorderError(PreorderErrorKind::NotPreorder, "relation table is not square",
                          static_cast<std::int64_t>(a));
    if (!leq_[a][a])
      throw PreorderError(PreorderErrorKind::NotPreorder,
                          "not reflexive at " + std::to_string(a), static_cast<std::int64_t>(a),
                          static_cast<std::int64_t>(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq_[a][b])
        for (std::size_t c = 0; c < n; ++c)
          if (leq_[b][c] && !leq_[a][c])
            throw PreorderError(PreorderErrorKind::NotPreorder,
                                "not transitive: " + std::to_string(a) + " <= " +
                                  std::to_string(b) + " <= " + std::to_string(c),
                                static_cast<std::int64_t>(a), static_cast<std::int64_t>(c));
  if (names_.empty())
    for (std::size_t a = 0; a < n; ++a)
      names_.push_back(std::to_string(a));
  if (names_.size() != n)
    throw PreorderError(PreorderErrorKind::NotPreorder, "names have the wrong length");
}

FinitePreorder FinitePreorder::chain(std::size_t size)
{
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a; b < size; ++b)
      leq[a][b] = true;
  return FinitePreorder(std::move(leq));
}

FinitePreorder FinitePreorder::antichain(std::size_t size)
{
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size));
  for (std::size_t a = 0; a < size; ++a)
    leq[a][a] = true;
  return FinitePreorder(std::move(leq));
}

FinitePreorder FinitePreorder::closure(std::vector<std::vector<bool>> relation)
{
  const auto n = relation.size();
  for (std::size_t a = 0; a < n; ++a)
    relation[a][a] = true;
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (relation[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (relation[k][b])
            relation[a][b] = true;
  return FinitePreorder(std::move(relation));
}

std::optional<std::size_t> FinitePreorder::upper_bound(std::size_t a, std::size_t b) const
{
  for (std::size_t c = 0; c < size(); ++c)
    if (leq_[a][c] && leq_[b][c])
      return c;
  return std::nullopt;
}

} // namespace ramcat
