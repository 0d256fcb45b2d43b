#pragma once

// Config files: group/action documents and preorder tables (JSON).
//
// Group/action:
//   {"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]],
//    "element_names": ["e","g","g2"], "element_order": [0,1,2],
//    "alphabet": ["a","b","c","d"],
//    "action_table": [[0,1,2],[1,2,0],[2,0,1],[3,3,3]]}
// `table` may also be a flat row-major list; the action table is indexed
// [letter][element]. Only `order` and `table` are required.
//
// Preorder:
//   {"names": ["p","q","r"], "leq": [[1,0,1],[0,1,1],[0,0,1]]}
// or {"size": 3, "relation": [[0,2],[1,2]]}, closed reflexively and
// transitively.

#include <filesystem>
#include <string>
#include <string_view>

#include "ramcat/group_action.hpp"
#include "ramcat/parameter_words.hpp"
#include "ramcat/preorder.hpp"

namespace ramcat {

enum class ConfigErrorKind { Io, Syntax, Schema };

class ConfigError : public KindedError<ConfigErrorKind>
{
public:
  using KindedError::KindedError;
};

std::string read_text_file(const std::filesystem::path& path);

/// Throws ConfigError, or GroupError for tables that are not a group/action.
RightAction parse_action_json(std::string_view text);
RightAction load_action(const std::filesystem::path& path);

FinitePreorder parse_preorder_json(std::string_view text);
FinitePreorder load_preorder(const std::filesystem::path& path);

/// Z3 = {e, g, g2} acting on {a, b, c, d} by a -> b -> c -> a, d fixed.
RightAction z3_rotation_action();
/// Z2 swapping a and b.
RightAction z2_swap_action();

} // namespace ramcat
