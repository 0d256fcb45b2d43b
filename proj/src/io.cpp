#include "ramcat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ramcat {

namespace {

using nlohmann::json;

json parse(std::string_view text)
{
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(ConfigErrorKind::Syntax, e.what());
  }
}

[[noreturn]] void schema(const std::string& msg) { throw ConfigError(ConfigErrorKind::Schema, msg); }

template <typename T>
T get(const json& j, const char* field)
{
  try {
    return j.at(field).get<T>();
  } catch (const json::exception& e) {
    schema(std::string("field '") + field + "': " + e.what());
  }
}

} // namespace

std::string read_text_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError(ConfigErrorKind::Io, "cannot read '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RightAction parse_action_json(std::string_view text)
{
  const auto j = parse(text);
  if (!j.is_object())
    schema("group/action document must be an object");
  const auto order = get<std::uint32_t>(j, "order");
  if (order == 0)
    schema("'order' must be positive");
  CayleyTable table;
  if (!j.contains("table"))
    schema("missing field 'table'");
  const auto& raw = j.at("table");
  if (!raw.is_array())
    schema("'table' must be an array");
  if (!raw.empty() && raw.front().is_array()) {
    table = get<CayleyTable>(j, "table");
  } else {
    auto flat = get<std::vector<std::uint32_t>>(j, "table");
    if (flat.size() != std::size_t{order} * order)
      schema("flat 'table' needs order^2 entries");
    for (std::uint32_t r = 0; r < order; ++r)
      table.emplace_back(flat.begin() + r * order, flat.begin() + (r + 1) * order);
  }
  if (table.size() != order)
    schema("'table' has " + std::to_string(table.size()) + " rows, expected " +
           std::to_string(order));
  std::vector<std::string> names;
  if (j.contains("element_names"))
    names = get<std::vector<std::string>>(j, "element_names");
  std::vector<GroupElement> element_order;
  if (j.contains("element_order"))
    element_order = get<std::vector<GroupElement>>(j, "element_order");
  auto group = FiniteGroup::from_table(std::move(table), std::move(names), std::move(element_order));

  std::vector<std::string> alphabet;
  if (j.contains("alphabet"))
    alphabet = get<std::vector<std::string>>(j, "alphabet");
  if (!j.contains("action_table"))
    return RightAction::trivial(std::move(group), std::move(alphabet));
  auto action = get<std::vector<std::vector<Letter>>>(j, "action_table");
  return RightAction::from_table(std::move(group), std::move(alphabet), std::move(action));
}

RightAction load_action(const std::filesystem::path& path)
{
  return parse_action_json(read_text_file(path));
}

FinitePreorder parse_preorder_json(std::string_view text)
{
  const auto j = parse(text);
  if (!j.is_object())
    schema("preorder document must be an object");
  std::vector<std::string> names;
  if (j.contains("names"))
    names = get<std::vector<std::string>>(j, "names");
  if (j.contains("leq")) {
    auto rows = get<std::vector<std::vector<int>>>(j, "leq");
    std::vector<std::vector<bool>> leq;
    for (const auto& row : rows)
      leq.emplace_back(row.begin(), row.end());
    return FinitePreorder(std::move(leq), std::move(names));
  }
  std::size_t size = j.contains("size") ? get<std::size_t>(j, "size") : names.size();
  std::vector<std::vector<bool>> rel(size, std::vector<bool>(size));
  if (j.contains("relation"))
    for (const auto& pair : get<std::vector<std::vector<std::size_t>>>(j, "relation")) {
      if (pair.size() != 2 || pair[0] >= size || pair[1] >= size)
        schema("'relation' entries must be pairs of indices below " + std::to_string(size));
      rel[pair[0]][pair[1]] = true;
    }
  auto closed = FinitePreorder::closure(std::move(rel));
  if (names.empty())
    return closed;
  return FinitePreorder(closed.relation(), std::move(names));
}

FinitePreorder load_preorder(const std::filesystem::path& path)
{
  return parse_preorder_json(read_text_file(path));
}

RightAction z3_rotation_action()
{
  return RightAction::from_table(FiniteGroup::cyclic(3), {"a", "b", "c", "d"},
                                 {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {3, 3, 3}});
}

RightAction z2_swap_action()
{
  return RightAction::from_table(FiniteGroup::cyclic(2), {"a", "b"}, {{0, 1}, {1, 0}});
}

} // namespace ramcat
