#pragma once

// The acceptance criteria as runnable checks. Hooks let a test swap in a
// deliberately broken primitive and watch the matching criterion fail.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ramcat/parameter_words.hpp"
#include "ramcat/rigid_surjections.hpp"

namespace ramcat {

struct GoldenHooks
{
  std::function<DecoratedWord(const DecoratedWord&, const DecoratedWord&)> substitute;
  std::function<std::vector<RigidSurjection>(std::uint32_t n, std::uint32_t m)> enumerate_rsurj;
};

GoldenHooks default_hooks();

/// Substitution that forgets to act on letters: x^h with v_i = a gives a.
DecoratedWord substitute_without_action(const DecoratedWord& u, const DecoratedWord& v);
/// Every surjection {1..n} -> {1..m}, rigid or not.
std::vector<RigidSurjection> enumerate_all_surjections(std::uint32_t n, std::uint32_t m);

struct CriterionResult
{
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

/// Stirling numbers of the second kind by S(n,m) = m S(n-1,m) + S(n-1,m-1).
std::uint64_t stirling2(std::uint32_t n, std::uint32_t m);
std::uint64_t binomial(std::uint32_t n, std::uint32_t k);

CriterionResult golden_worked_example(const GoldenHooks& hooks);
CriterionResult golden_counting(const GoldenHooks& hooks);
CriterionResult golden_duality(const GoldenHooks& hooks);
CriterionResult golden_ramsey_search(const GoldenHooks& hooks);
CriterionResult golden_preadjunctions(const GoldenHooks& hooks);
CriterionResult golden_cardinality(const GoldenHooks& hooks);
CriterionResult golden_omega_pipeline(const GoldenHooks& hooks);
CriterionResult golden_monotonization(const GoldenHooks& hooks);
CriterionResult golden_fragment_laws(const GoldenHooks& hooks);

/// Criteria 1..9 in order; `only` restricts to the listed ids.
std::vector<CriterionResult> run_golden_suite(const GoldenHooks& hooks = default_hooks(),
                                              const std::vector<int>& only = {});

} // namespace ramcat
