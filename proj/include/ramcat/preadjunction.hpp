#pragma once

// Pre-adjunctions between fragments: object maps F, H and a family
// Φ_{X,Y} : hom_C(F(X), Y) -> hom_B(X, H(Y)) subject to condition (PA).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramcat/category.hpp"
#include "ramcat/functor.hpp"
#include "ramcat/preorder.hpp"
#include "ramcat/ramsey.hpp"

namespace ramcat {

enum class PAErrorKind {
  ObjectNotInFragment,
  BudgetExceeded,
  FragmentMismatch,
  NotFull,
  NotIsoDense,
  BadEta,
  SequenceNotStrict,
  FragmentThin,
  ImplicationFails,
  NotMonotone,
  SourceNotMono,
};

class PAError : public KindedError<PAErrorKind>
{
public:
  using KindedError::KindedError;
};

struct PABounds
{
  std::vector<ObjectId> source;  ///< A and B range here
  std::vector<ObjectId> target;  ///< C ranges here
};

struct PreAdjunction
{
  std::string name;
  FragmentPtr source;  ///< B
  FragmentPtr target;  ///< C
  std::function<std::optional<ObjectId>(ObjectId)> F;  ///< Ob(B) -> Ob(C)
  std::function<std::optional<ObjectId>(ObjectId)> H;  ///< Ob(C) -> Ob(B)
  /// Φ_{X,Y}(u) for u ∈ hom_C(F(X), Y); nullopt if the image is not a
  /// morphism of the source fragment.
  std::function<std::optional<MorphismId>(ObjectId x, ObjectId y, MorphismId u)> phi;
  /// The construction's own v for f ∈ hom_B(A, B), tried before the search.
  std::function<std::optional<MorphismId>(ObjectId a, ObjectId b, MorphismId f)> witness_hint;
  /// Default verification range; empty means every object.
  PABounds bounds;
  std::vector<std::string> notes;
};

/// Every object of both fragments.
PABounds full_bounds(const PreAdjunction& pa);
/// pa.bounds, or full_bounds when those are empty.
PABounds default_bounds(const PreAdjunction& pa);

struct PAInstance
{
  ObjectId a{}, b{}, c{};
  MorphismId u{};  ///< ∈ hom_C(F(B), C)
  MorphismId f{};  ///< ∈ hom_B(A, B)
};

struct PAFailure
{
  PAInstance instance;
  std::optional<MorphismId> lhs;  ///< Φ_{B,C}(u) · f
  std::size_t candidates = 0;     ///< |hom_C(F(A), F(B))|
};

struct PAWitness
{
  PAInstance instance;
  MorphismId v{};
  bool from_hint = false;
};

struct PAOptions
{
  std::uint64_t max_checks = 200'000'000;
  std::size_t max_failures = 64;
  std::size_t max_witnesses = 100'000;
};

struct PAReport
{
  std::string name;
  PABounds bounds;
  std::uint64_t instances = 0;
  std::uint64_t checks = 0;
  std::uint64_t failure_count = 0;
  std::vector<PAFailure> failures;
  std::vector<PAWitness> witnesses;
  std::uint64_t hint_tried = 0;
  std::uint64_t hint_succeeded = 0;
  /// Φ images that fall outside the stated hom-set.
  std::vector<std::string> landing_violations;
  /// hom_C(F(A), Y) ≠ ∅ but hom_B(A, H(Y)) = ∅.
  std::vector<std::string> reachability_violations;

  bool ok() const noexcept
  {
    return failure_count == 0 && landing_violations.empty() && reachability_violations.empty();
  }
};

/// Exhaustive check of (PA) over the bounds.
PAReport verify_pa(const PreAdjunction& pa, const PABounds& bounds, const PAOptions& options = {});
inline PAReport verify_pa(const PreAdjunction& pa) { return verify_pa(pa, default_bounds(pa)); }

/// True iff no v ∈ hom_C(F(A), F(B)) satisfies the (PA) equation.
bool recheck_failure(const PreAdjunction& pa, const PAInstance& instance);
/// True iff the stored v satisfies the (PA) equation.
bool recheck_witness(const PreAdjunction& pa, const PAWitness& witness);

/// Ξ_{X,Z} = Φ_{X,K(Z)} ∘ Ψ_{F(X),Z}, object maps J∘F and H∘K.
PreAdjunction compose_pa(const PreAdjunction& first, const PreAdjunction& second);
PreAdjunction identity_pa(const FragmentPtr& fragment);

/// Replaces Φ by the constant map onto the first morphism of each target hom-set.
PreAdjunction constant_phi_mutation(PreAdjunction pa);

struct FunctorPAOptions
{
  /// Skip the fullness check (used to exhibit what goes wrong without it).
  bool require_full = true;
};

/// Φ_{B,C}(u) = H(u) · η_B for a full, isomorphism-dense H : C -> B.
/// F(B) is the first C-object whose image is isomorphic to B and η_B the
/// first invertible morphism of hom_B(B, H(F(B))).
PreAdjunction pa_from_functor(const FragmentFunctor& H, const FunctorPAOptions& options = {});

/// GR(∅, X, {e}) -> GR(A, X, G) on objects 1..n.
PreAdjunction pa_gr_plain_to_decorated(const ContextPtr& context, std::uint32_t n);
/// Φ applied to a single word: exponents to e, letters to x1.
DecoratedWord strip_word(const DecoratedWord& u);

/// GR(A, X, G) -> GR(∅, Y, G), F(n) = t + n. Both fragments hold objects
/// 1..max(n + t, extent); the default bounds are source 1..n.
PreAdjunction pa_gr_decorated_to_plain(const ContextPtr& context, std::uint32_t n,
                                       std::uint32_t extent = 0);
/// Reads a word over Y = a_1..a_t, x_1.. as a word over A and X; an
/// occurrence a_i^g becomes the letter a_i^g.
DecoratedWord read_over_alphabet(const DecoratedWord& u, const ContextPtr& decorated);
/// v = a_1 ... a_t f, as a word over Y.
DecoratedWord prefix_alphabet(const DecoratedWord& f, const ContextPtr& plain_over_group);

/// GR(∅, X, G) -> DRam^op with F(n) = n × G. Source objects 1..max_chain,
/// target chains 1..max_chain.
PreAdjunction pa_gr_to_dramop(const FiniteGroup& group, std::uint32_t max_chain);
/// Φ_{n,C}: a rigid surjection onto n × G read as a decorated word.
DecoratedWord surjection_to_word(const RigidSurjection& u, std::uint32_t n, const ContextPtr& context);
/// v(j, h) = (i, g·h) where f(j) = x_i^g.
RigidSurjection word_to_product_surjection(const DecoratedWord& f, std::uint32_t n);

/// Ram -> DRam^op via the shifted duality (F(n) = n + 1). Ram chains
/// 0..max_chain-1, DRam^op chains 1..max_chain.
PreAdjunction pa_ram_to_dram_op(std::uint32_t max_chain);
/// Ram -> DRam^op with F = H = identity on sizes and Φ(u) = u^∂, without
/// the fullness check. (PA) fails for it; kept to exhibit the failures.
PreAdjunction pa_ram_to_dram_op_literal(std::uint32_t max_chain);

/// A fragment -> its skeleton, from the (full, iso-dense) inclusion.
PreAdjunction pa_skeleton(const FragmentPtr& fragment);

/// ω-truncation {0..N} -> fragment along C_0..C_N.
PreAdjunction pa_omega_to_nonthin(const FragmentPtr& fragment, const std::vector<ObjectId>& sequence);

struct SequenceCertificate
{
  std::size_t forward = 0;   ///< |hom(C_i, C_{i+1})|
  std::size_t backward = 0;  ///< |hom(C_{i+1}, C_i)|
};

struct NonthinSequence
{
  std::vector<ObjectId> objects;
  std::vector<SequenceCertificate> certificates;
  ObjectId seed_a{};  ///< the A with |hom(A, C_0)| >= 2
  bool exhausted = false;  ///< the fragment ran out before `length`
};

/// C_0 = B with |hom(A, B)| >= 2, C_1 the least C with C -> (B)^A_2, then
/// C_i -> (C_{i-1})^{C_{i-2}}_2. Returns the longest prefix (at most
/// `length`) realizable in the fragment. Throws FragmentThin.
NonthinSequence build_nonthin_sequence(const FragmentPtr& fragment, std::size_t length,
                                       const SearchOptions& options = {});

/// Thin pre-adjunction from the monotone f : A -> B and g : B -> A.
PreAdjunction pa_from_monotone_tukey(const FinitePreorder& a, const FinitePreorder& b,
                                     const std::vector<std::size_t>& f,
                                     const std::vector<std::size_t>& g);

struct CardinalityViolation
{
  ObjectId a{}, b{};
  std::size_t source = 0;  ///< |hom_B(A, B)|
  std::size_t target = 0;  ///< |hom_C(F(A), F(B))|
};

struct CardinalityReport
{
  std::size_t pairs = 0;
  std::vector<CardinalityViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// |hom_C(F(A), F(B))| >= |hom_B(A, B)| over the source bounds. Throws
/// SourceNotMono unless every source morphism is mono.
CardinalityReport check_card_inequality(const PreAdjunction& pa, const std::vector<ObjectId>& source);

/// Ram(1..n) -> thin chain 1..n with identity object maps: violates the
/// cardinality inequality, so no Φ can satisfy (PA).
PreAdjunction ram_to_chain_collapse(std::uint32_t n);

} // namespace ramcat
