#pragma once

// Functors between fragments, given by explicit object and morphism maps.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramcat/category.hpp"

namespace ramcat {

enum class FunctorErrorKind { NotAFunctor, NotFull, NotIsoDense, FragmentMismatch };

class FunctorError : public KindedError<FunctorErrorKind>
{
public:
  using KindedError::KindedError;
};

struct FragmentFunctor
{
  std::string name;
  FragmentPtr source;
  FragmentPtr target;
  std::vector<ObjectId> on_objects;      ///< indexed by source object
  std::vector<MorphismId> on_morphisms;  ///< indexed by source morphism

  ObjectId operator()(ObjectId a) const { return on_objects.at(index(a)); }
  MorphismId operator()(MorphismId f) const { return on_morphisms.at(index(f)); }
};

struct FunctorCheck
{
  bool ok = true;
  std::string message;
  std::vector<MorphismId> witness;
};

/// Endpoints, identities and composition, exhaustively.
FunctorCheck check_functor(const FragmentFunctor& functor);

struct NotFullWitness
{
  ObjectId a;
  ObjectId b;
  MorphismId missed;  ///< in hom(H(a), H(b)) of the target
};

std::optional<NotFullWitness> find_not_full(const FragmentFunctor& functor);
/// A target object isomorphic to no H(X).
std::optional<ObjectId> find_not_iso_dense(const FragmentFunctor& functor);
bool is_faithful(const FragmentFunctor& functor);
/// Bijective on objects and on every hom-set, and a functor.
bool is_isomorphism(const FragmentFunctor& functor);

FragmentFunctor identity_functor(const FragmentPtr& fragment);

/// Skeleton -> original fragment.
FragmentFunctor skeleton_inclusion(const SkeletonResult& skeleton, const FragmentPtr& original);

/// Builds a functor from an object map and a payload map; each image is
/// looked up by payload in the target. Throws NotAFunctor when an image is
/// missing from the target fragment.
FragmentFunctor functor_by_payload(
  std::string name, const FragmentPtr& source, const FragmentPtr& target,
  const std::function<std::optional<ObjectId>(ObjectId)>& objects,
  const std::function<Payload(const Payload&)>& morphisms);

/// ∂ : DRam^op -> Ram, n |-> n, f |-> f^∂. Objects matched by chain size.
FragmentFunctor dual_functor(const FragmentPtr& dram_op, const FragmentPtr& ram);

/// Shifted duality DRam^op -> Ram, n |-> n - 1, f |-> shifted_dual(f).
/// Source chains of size s need a Ram object of size s - 1.
FragmentFunctor shifted_dual_functor(const FragmentPtr& dram_op, const FragmentPtr& ram);

/// GR(∅, X, {e}) -> DRam^op, n |-> n, u |-> f_u.
FragmentFunctor words_to_surjections(const FragmentPtr& gr_plain, const FragmentPtr& dram_op);

} // namespace ramcat
