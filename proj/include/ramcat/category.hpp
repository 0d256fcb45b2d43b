#pragma once

// Finite fragments of locally small categories: explicit objects, hom-sets,
// identities and a full composition table, plus the structural checks run
// on them.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ramcat/parameter_words.hpp"
#include "ramcat/rigid_surjections.hpp"

namespace ramcat {

enum class ObjectId : std::uint32_t {};
enum class MorphismId : std::uint32_t {};

constexpr std::size_t index(ObjectId a) noexcept { return static_cast<std::size_t>(a); }
constexpr std::size_t index(MorphismId f) noexcept { return static_cast<std::size_t>(f); }
constexpr ObjectId object_id(std::size_t i) noexcept { return static_cast<ObjectId>(i); }
constexpr MorphismId morphism_id(std::size_t i) noexcept { return static_cast<MorphismId>(i); }

/// Linear map F^cols -> F^rows over a small finite field, row-major.
struct LinearMap
{
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<std::uint8_t> entries;

  std::uint8_t at(std::uint32_t r, std::uint32_t c) const { return entries[r * cols + c]; }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// What a morphism "is", when the fragment was built from a concrete
/// category. Opaque morphisms carry only their label.
using Payload = std::variant<std::monostate, DecoratedWord, RigidSurjection, MonotoneInjection, LinearMap>;

/// Byte key identifying a payload (or the label, for opaque morphisms).
std::string payload_key(const Payload& payload, std::string_view label = {});
std::string format_payload(const Payload& payload);

enum class FragmentKind { Explicit, Ram, DRam, GR, Thin, Vec };

std::string_view kind_name(FragmentKind kind);

enum class FragmentErrorKind {
  ResourceBound,
  MissingIdentity,
  IdentityLawViolation,
  AssociativityViolation,
  NotClosed,
  BadMorphism,
  DuplicateMorphism,
  NotComposable,
  ObjectNotInFragment,
  NotPreorder,
  BadField,
};

class FragmentError : public KindedError<FragmentErrorKind>
{
public:
  using KindedError::KindedError;
};

struct BuildLimits
{
  /// Total morphism count across all hom-sets.
  std::size_t max_morphisms = 1'000'000;
  /// Total entries over all composition tables.
  std::size_t max_compose_entries = 100'000'000;
};

struct ObjectInfo
{
  std::string label;
  /// Chain size, integer object or dimension; 0 for opaque objects.
  std::uint32_t size = 0;
};

struct Morphism
{
  ObjectId dom{};
  ObjectId cod{};
  /// Position inside hom(dom, cod).
  std::uint32_t local = 0;
  std::string label;
  Payload payload;
};

class CategoryFragment
{
public:
  static constexpr std::uint32_t unset = 0xffffffffu;

  const std::string& name() const noexcept { return name_; }
  FragmentKind kind() const noexcept { return kind_; }
  /// True if this fragment is the opposite of a concrete category's fragment.
  bool is_opposite() const noexcept { return opposite_; }
  /// GR fragments carry their (A, G) context.
  const ContextPtr& context() const noexcept { return context_; }

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::vector<ObjectId> objects() const;
  const ObjectInfo& object(ObjectId a) const { return objects_.at(index(a)); }
  std::optional<ObjectId> object_by_size(std::uint32_t size) const;
  std::optional<ObjectId> object_by_label(std::string_view label) const;

  std::size_t morphism_count() const noexcept { return morphisms_.size(); }
  const Morphism& morphism(MorphismId f) const { return morphisms_.at(index(f)); }
  ObjectId dom(MorphismId f) const { return morphism(f).dom; }
  ObjectId cod(MorphismId f) const { return morphism(f).cod; }

  std::span<const MorphismId> hom(ObjectId a, ObjectId b) const
  {
    return hom_[index(a) * objects_.size() + index(b)];
  }
  bool arrow(ObjectId a, ObjectId b) const { return !hom(a, b).empty(); }
  MorphismId identity(ObjectId a) const { return identity_.at(index(a)); }

  /// g · f for f : A -> B and g : B -> C; nullopt when not composable or the
  /// table has no entry.
  std::optional<MorphismId> try_compose(MorphismId g, MorphismId f) const;
  /// Throws NotComposable / NotClosed.
  MorphismId compose(MorphismId g, MorphismId f) const;

  /// Raw table access: local index in hom(A, C) of g·f, or `unset`.
  std::uint32_t compose_local(ObjectId a, ObjectId b, ObjectId c, std::uint32_t f_local,
                              std::uint32_t g_local) const;

  std::optional<MorphismId> find(ObjectId a, ObjectId b, const Payload& payload) const;
  std::optional<MorphismId> find_label(ObjectId a, ObjectId b, std::string_view label) const;

  /// Total number of composition table entries (for budget reporting).
  std::size_t compose_entries() const noexcept;

private:
  friend class FragmentBuilder;

  std::size_t pair(ObjectId a, ObjectId b) const { return index(a) * objects_.size() + index(b); }
  std::size_t triple(ObjectId a, ObjectId b, ObjectId c) const
  {
    return (index(a) * objects_.size() + index(b)) * objects_.size() + index(c);
  }

  std::string name_;
  FragmentKind kind_ = FragmentKind::Explicit;
  bool opposite_ = false;
  ContextPtr context_;
  std::vector<ObjectInfo> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::vector<MorphismId>> hom_;
  std::vector<MorphismId> identity_;
  std::vector<std::vector<std::uint32_t>> compose_;
  std::vector<std::unordered_map<std::string, std::uint32_t>> keys_;
};

using FragmentPtr = std::shared_ptr<const CategoryFragment>;

/// Assembles a fragment. Composition comes from a payload rule, explicit
/// entries, or (when built from an existing fragment) the base tables;
/// explicit entries win.
class FragmentBuilder
{
public:
  using ComposeRule = std::function<std::optional<Payload>(const Payload& g, const Payload& f)>;
  /// Composition by position: local index of g·f in hom(a, c), if known.
  using LocalRule = std::function<std::optional<std::uint32_t>(
    ObjectId a, ObjectId b, ObjectId c, std::uint32_t f_local, std::uint32_t g_local)>;

  explicit FragmentBuilder(std::string name, FragmentKind kind = FragmentKind::Explicit);
  /// Starts from a copy of `base`, e.g. to mutate composition entries.
  explicit FragmentBuilder(const CategoryFragment& base);

  ObjectId add_object(std::string label, std::uint32_t size = 0);
  MorphismId add_morphism(ObjectId dom, ObjectId cod, Payload payload = {}, std::string label = {});
  void set_identity(ObjectId a, MorphismId id);
  void set_compose(MorphismId g, MorphismId f, MorphismId result);
  void set_compose_rule(ComposeRule rule) { rule_ = std::move(rule); }
  void set_local_rule(LocalRule rule) { local_rule_ = std::move(rule); }
  void set_context(ContextPtr context) { fragment_.context_ = std::move(context); }
  void set_opposite(bool opposite) { fragment_.opposite_ = opposite; }
  void set_limits(BuildLimits limits) { limits_ = limits; }

  std::size_t morphism_count() const noexcept { return fragment_.morphisms_.size(); }
  std::size_t object_count() const noexcept { return fragment_.objects_.size(); }

  /// Missing composition entries stay unset and surface as NotClosed in
  /// validate_fragment. Identity entries are filled automatically when the
  /// rules leave them open.
  FragmentPtr build();

private:
  CategoryFragment fragment_;
  BuildLimits limits_;
  ComposeRule rule_;
  LocalRule local_rule_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<MorphismId>> pending_hom_;
  std::vector<std::optional<MorphismId>> pending_identity_;
  std::vector<std::tuple<MorphismId, MorphismId, MorphismId>> overrides_;
  std::vector<std::vector<std::uint32_t>> base_tables_;
  std::vector<std::size_t> base_hom_sizes_;
  std::size_t base_objects_ = 0;
};

// ---------------------------------------------------------------------------
// structure

struct FragmentViolation
{
  FragmentErrorKind kind;  ///< IdentityLawViolation, AssociativityViolation or NotClosed
  std::vector<MorphismId> witness;
  std::string message;
};

struct FragmentDiagnostics
{
  std::vector<FragmentViolation> violations;
  std::size_t identity_checks = 0;
  std::size_t associativity_checks = 0;
  bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive identity, associativity and closure checks. Stops collecting
/// after `max_violations` witnesses.
FragmentDiagnostics validate_fragment(const CategoryFragment& fragment,
                                      std::size_t max_violations = 16);

/// Same objects, payloads, identities and composition tables.
bool structurally_equal(const CategoryFragment& a, const CategoryFragment& b);

FragmentPtr opposite(const CategoryFragment& fragment);
FragmentPtr full_subcategory(const CategoryFragment& fragment, std::span<const ObjectId> objects,
                             std::string name = {});

/// Adds, for each listed object X, a copy X' with hom(X', Y) = hom(X, Y),
/// hom(Y, X') = hom(Y, X) and composition inherited; X ≅ X' via the
/// identity-copies. Used to exercise skeleton and iso-dense functors.
FragmentPtr duplicate_objects(const CategoryFragment& fragment, std::span<const ObjectId> objects);

std::optional<MorphismId> inverse(const CategoryFragment& fragment, MorphismId f);
bool is_iso(const CategoryFragment& fragment, MorphismId f);
/// First invertible morphism of hom(a, b) in local order.
std::optional<MorphismId> first_iso(const CategoryFragment& fragment, ObjectId a, ObjectId b);

struct SkeletonResult
{
  FragmentPtr skeleton;
  /// For each original object, its representative (lowest id in its class).
  std::vector<ObjectId> representative;
  /// For each original object B, an isomorphism B -> representative(B).
  std::vector<MorphismId> eta;
  /// For each original object, the skeleton object of its class.
  std::vector<ObjectId> skeleton_object;
  /// Skeleton object -> original object.
  std::vector<ObjectId> included;
};

SkeletonResult skeleton(const CategoryFragment& fragment);

enum class Tri { False, True, Unknown };
std::string_view tri_name(Tri value);

struct StructuralReport
{
  bool is_thin = false;
  /// Within the fragment: every pair has a common upper bound in it.
  bool is_directed = false;
  bool all_mono = false;
  bool all_epi = false;
  /// hom(A, A) = {id_A} for every object.
  bool endomorphisms_trivial = false;
  /// hom(A, B) = iso(A, B) whenever A ≅ B.
  bool isomorphic_homs_are_isos = false;
  /// Morphisms into each skeleton object from skeleton objects, within the
  /// fragment. Finiteness is automatic here; the real condition is about the
  /// ambient category and is reported as fragment-relative.
  std::vector<std::size_t> fan_in;
  Tri countable_skeleton = Tri::Unknown;
  Tri finite_fan_in = Tri::Unknown;
  std::vector<std::string> notes;
};

StructuralReport structural_checks(const CategoryFragment& fragment);

/// Left cancellability of one morphism within the fragment.
bool is_mono(const CategoryFragment& fragment, MorphismId f);
bool is_epi(const CategoryFragment& fragment, MorphismId f);

} // namespace ramcat
