#include "ramcat/group_action.hpp"

#include <algorithm>
#include <sstream>

namespace ramcat {

namespace {

std::string element_label(std::uint32_t g) { return "#" + std::to_string(g); }

std::vector<std::string> default_names(std::uint32_t order)
{
  std::vector<std::string> names;
  names.reserve(order);
  names.emplace_back("e");
  for (std::uint32_t g = 1; g < order; ++g)
    names.push_back("g" + std::to_string(g));
  return names;
}

} // namespace

std::optional<GroupError> check_group_table(const CayleyTable& table)
{
  const auto t = static_cast<std::uint32_t>(table.size());
  if (t == 0)
    return GroupError(GroupErrorKind::BadTable, "group table is empty");
  for (std::uint32_t g = 0; g < t; ++g) {
    if (table[g].size() != t)
      return GroupError(GroupErrorKind::BadTable,
                        "row " + std::to_string(g) + " has wrong length", {g});
    for (auto x : table[g])
      if (x >= t)
        return GroupError(GroupErrorKind::BadTable,
                          "entry out of range in row " + std::to_string(g), {g});
  }

  for (std::uint32_t g = 0; g < t; ++g)
    if (table[0][g] != g || table[g][0] != g)
      return GroupError(GroupErrorKind::NoIdentity,
                        "element 0 is not a two-sided identity (fails at " +
                          element_label(g) + ")",
                        {g});

  for (std::uint32_t g = 0; g < t; ++g)
    for (std::uint32_t h = 0; h < t; ++h)
      for (std::uint32_t k = 0; k < t; ++k)
        if (table[table[g][h]][k] != table[g][table[h][k]]) {
          std::ostringstream os;
          os << "(gh)k != g(hk) for (g,h,k) = (" << g << "," << h << "," << k << ")";
          return GroupError(GroupErrorKind::NonAssociative, os.str(), {g, h, k});
        }

  for (std::uint32_t g = 0; g < t; ++g) {
    bool found = false;
    for (std::uint32_t h = 0; h < t && !found; ++h)
      found = table[g][h] == 0 && table[h][g] == 0;
    if (!found)
      return GroupError(GroupErrorKind::NoInverse,
                        "element " + element_label(g) + " has no two-sided inverse", {g});
  }
  return std::nullopt;
}

FiniteGroup::FiniteGroup()
  : order_(1), table_{0}, inverse_{0}, element_order_{0}, rank_{0}, names_{"e"}
{}

FiniteGroup FiniteGroup::from_table(CayleyTable table, std::vector<std::string> names,
                                    std::vector<GroupElement> element_order)
{
  if (auto err = check_group_table(table))
    throw *err;

  FiniteGroup group;
  const auto t = static_cast<std::uint32_t>(table.size());
  group.order_ = t;
  group.table_.clear();
  group.table_.reserve(std::size_t{t} * t);
  for (const auto& row : table)
    group.table_.insert(group.table_.end(), row.begin(), row.end());

  group.inverse_.assign(t, 0);
  for (std::uint32_t g = 0; g < t; ++g)
    for (std::uint32_t h = 0; h < t; ++h)
      if (table[g][h] == 0)
        group.inverse_[g] = h;

  if (names.empty())
    names = default_names(t);
  if (names.size() != t)
    throw GroupError(GroupErrorKind::BadTable, "element_names has wrong length");
  for (std::uint32_t g = 0; g < t; ++g)
    for (std::uint32_t h = g + 1; h < t; ++h)
      if (names[g] == names[h])
        throw GroupError(GroupErrorKind::BadTable, "duplicate element name '" + names[g] + "'");
  group.names_ = std::move(names);

  if (element_order.empty()) {
    element_order.resize(t);
    for (std::uint32_t g = 0; g < t; ++g)
      element_order[g] = g;
  }
  if (element_order.size() != t || element_order.front() != 0)
    throw GroupError(GroupErrorKind::BadElementOrder,
                     "element order must list all elements with e first");
  std::vector<std::uint32_t> rank(t, t);
  for (std::uint32_t i = 0; i < t; ++i) {
    const auto g = element_order[i];
    if (g >= t || rank[g] != t)
      throw GroupError(GroupErrorKind::BadElementOrder, "element order is not a permutation");
    rank[g] = i;
  }
  group.element_order_ = std::move(element_order);
  group.rank_ = std::move(rank);
  return group;
}

FiniteGroup FiniteGroup::cyclic(std::uint32_t order)
{
  if (order == 0)
    throw GroupError(GroupErrorKind::BadTable, "cyclic group of order 0");
  CayleyTable table(order, std::vector<std::uint32_t>(order));
  for (std::uint32_t g = 0; g < order; ++g)
    for (std::uint32_t h = 0; h < order; ++h)
      table[g][h] = (g + h) % order;
  std::vector<std::string> names{"e"};
  if (order > 1)
    names.emplace_back("g");
  for (std::uint32_t g = 2; g < order; ++g)
    names.push_back("g" + std::to_string(g));
  return from_table(std::move(table), std::move(names));
}

std::optional<GroupElement> FiniteGroup::find(std::string_view name) const
{
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<GroupElement>(it - names_.begin());
}

CayleyTable FiniteGroup::table() const
{
  CayleyTable out(order_, std::vector<std::uint32_t>(order_));
  for (std::uint32_t g = 0; g < order_; ++g)
    for (std::uint32_t h = 0; h < order_; ++h)
      out[g][h] = multiply(g, h);
  return out;
}

ActionDiagnostic validate_action(const FiniteGroup& group, std::size_t alphabet_size,
                                 const std::vector<std::vector<Letter>>& table)
{
  ActionDiagnostic diag;
  const auto t = group.order();
  if (table.size() != alphabet_size) {
    diag.ok = false;
    diag.kind = GroupErrorKind::BadTable;
    diag.message = "action table must have one row per letter";
    return diag;
  }
  for (Letter a = 0; a < alphabet_size; ++a) {
    if (table[a].size() != t) {
      diag = {false, GroupErrorKind::BadTable, a, 0, 0, "action row has wrong length"};
      return diag;
    }
    for (auto b : table[a])
      if (b >= alphabet_size) {
        diag = {false, GroupErrorKind::BadTable, a, 0, 0, "action entry out of range"};
        return diag;
      }
  }
  for (Letter a = 0; a < alphabet_size; ++a)
    if (table[a][neutral] != a) {
      diag = {false, GroupErrorKind::NotUnital, a, 0, 0,
              "a^e != a for letter #" + std::to_string(a)};
      return diag;
    }
  for (Letter a = 0; a < alphabet_size; ++a)
    for (GroupElement g = 0; g < t; ++g)
      for (GroupElement h = 0; h < t; ++h)
        if (table[table[a][g]][h] != table[a][group.multiply(g, h)]) {
          std::ostringstream os;
          os << "(a^g)^h != a^(gh) for (a,g,h) = (" << a << "," << g << "," << h << ")";
          diag = {false, GroupErrorKind::NotRightAction, a, g, h, os.str()};
          return diag;
        }
  return diag;
}

RightAction::RightAction() = default;

RightAction RightAction::trivial(FiniteGroup group, std::vector<std::string> alphabet)
{
  std::vector<std::vector<Letter>> table(alphabet.size());
  for (Letter a = 0; a < alphabet.size(); ++a)
    table[a].assign(group.order(), a);
  return from_table(std::move(group), std::move(alphabet), std::move(table));
}

RightAction RightAction::from_table(FiniteGroup group, std::vector<std::string> alphabet,
                                    std::vector<std::vector<Letter>> table)
{
  for (std::size_t a = 0; a < alphabet.size(); ++a)
    for (std::size_t b = a + 1; b < alphabet.size(); ++b)
      if (alphabet[a] == alphabet[b])
        throw GroupError(GroupErrorKind::BadTable, "duplicate letter '" + alphabet[a] + "'");

  auto diag = validate_action(group, alphabet.size(), table);
  if (!diag.ok) {
    std::vector<std::uint32_t> witness{diag.letter};
    if (diag.kind == GroupErrorKind::NotRightAction)
      witness = {diag.letter, diag.g, diag.h};
    throw GroupError(diag.kind, diag.message, std::move(witness));
  }

  RightAction action;
  action.group_ = std::move(group);
  action.alphabet_ = std::move(alphabet);
  action.table_.reserve(action.alphabet_.size() * action.group_.order());
  for (const auto& row : table)
    action.table_.insert(action.table_.end(), row.begin(), row.end());
  return action;
}

std::optional<Letter> RightAction::find_letter(std::string_view name) const
{
  auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end())
    return std::nullopt;
  return static_cast<Letter>(it - alphabet_.begin());
}

Letter RightAction::act(Letter a, GroupElement g) const
{
  if (a >= alphabet_.size())
    throw GroupError(GroupErrorKind::UnknownLetter, "unknown letter #" + std::to_string(a), {a});
  if (!group_.contains(g))
    throw GroupError(GroupErrorKind::UnknownGroupElement,
                     "unknown group element #" + std::to_string(g), {g});
  return act_unchecked(a, g);
}

std::vector<std::vector<Letter>> RightAction::table() const
{
  std::vector<std::vector<Letter>> out(alphabet_.size());
  for (Letter a = 0; a < alphabet_.size(); ++a)
    for (GroupElement g = 0; g < group_.order(); ++g)
      out[a].push_back(act_unchecked(a, g));
  return out;
}

} // namespace ramcat
