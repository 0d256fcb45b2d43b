#pragma once

// The Ramsey arrow C -> (B)^A_k on fragments.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramcat/category.hpp"

namespace ramcat {

enum class ArrowErrorKind { PreconditionArrowMissing, BudgetExceeded, BadColorCount, ObjectNotInFragment };

class ArrowError : public KindedError<ArrowErrorKind>
{
public:
  using KindedError::KindedError;
};

struct ArrowBudget
{
  std::uint64_t max_colorings = 1'000'000;
  std::uint64_t max_nodes = 10'000'000;
};

/// The copies w · hom(A, B), w ∈ hom(B, C), as sets of local indices into
/// hom(A, C).
struct CopyStructure
{
  ObjectId a{}, b{}, c{};
  std::uint32_t points = 0;                          ///< |hom(A, C)|
  std::vector<std::vector<std::uint32_t>> copies;    ///< indexed by local w
  std::vector<std::vector<std::uint32_t>> closing;   ///< point -> copies whose largest point it is
};

/// Throws PreconditionArrowMissing unless A -> B -> C.
CopyStructure build_copies(const CategoryFragment& fragment, ObjectId a, ObjectId b, ObjectId c);

struct Coloring
{
  ObjectId a{}, c{};
  std::uint32_t k = 0;
  std::vector<std::uint8_t> colors;  ///< by local index in hom(A, C)
};

struct ArrowStats
{
  std::uint64_t colorings = 0;
  std::uint64_t nodes = 0;
};

struct ArrowVerdict
{
  bool holds = false;
  std::optional<Coloring> counterexample;
  /// A few (coloring number, monochromatic w) pairs from the run.
  std::vector<std::pair<std::uint64_t, MorphismId>> witnesses;
  ArrowStats stats;
};

ArrowVerdict check_arrow_exhaustive(const CategoryFragment& fragment, ObjectId a, ObjectId b,
                                    ObjectId c, std::uint32_t k, const ArrowBudget& budget = {},
                                    std::size_t witness_sample = 8);

enum class SearchOutcome { Found, NoneFound, BudgetExceeded };

std::string_view outcome_name(SearchOutcome outcome);

struct SearchResult
{
  SearchOutcome outcome = SearchOutcome::NoneFound;
  std::optional<Coloring> coloring;
  ArrowStats stats;
};

struct SearchOptions
{
  ArrowBudget budget;
  /// Parallel workers over top-level prefixes; 1 keeps the returned
  /// coloring deterministic.
  unsigned workers = 1;
};

/// Depth-first search for a coloring with no monochromatic copy. NoneFound
/// after a complete search certifies the arrow.
SearchResult find_bad_coloring(const CategoryFragment& fragment, ObjectId a, ObjectId b,
                               ObjectId c, std::uint32_t k, const SearchOptions& options = {});
SearchResult find_bad_coloring(const CopyStructure& copies, std::uint32_t k,
                               const SearchOptions& options = {});

struct Certification
{
  bool defeats_every_copy = false;
  std::optional<MorphismId> monochromatic_w;
  std::size_t copies_checked = 0;
};

/// Recomputes every w · f through the fragment's composition and checks that
/// no copy is monochromatic.
Certification certify_bad_coloring(const CategoryFragment& fragment, ObjectId b,
                                   const Coloring& coloring);

/// A builder indexed by object sizes.
struct FragmentFamily
{
  std::string name;
  std::function<FragmentPtr(std::span<const std::uint32_t> sizes)> build;
};

FragmentFamily ram_family();
FragmentFamily dram_op_family();
FragmentFamily gr_family(ContextPtr context);

struct CandidateRecord
{
  std::uint32_t n = 0;
  bool skipped = false;  ///< no B -> n
  bool holds = false;
  std::optional<Coloring> counterexample;
  ArrowStats stats;
};

struct MinWitnessResult
{
  std::optional<std::uint32_t> n;  ///< nullopt: not found within the bound
  std::vector<CandidateRecord> candidates;
};

/// Smallest n <= n_max with n -> (b)^a_k in the family. Throws
/// BudgetExceeded when a candidate's search runs out of nodes.
MinWitnessResult min_ramsey_witness(const FragmentFamily& family, std::uint32_t a,
                                    std::uint32_t b, std::uint32_t k, std::uint32_t n_max,
                                    const SearchOptions& options = {});

} // namespace ramcat
