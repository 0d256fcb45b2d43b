#include "ramcat/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "ramcat/builders.hpp"

namespace ramcat {

std::string_view outcome_name(SearchOutcome outcome)
{
  switch (outcome) {
  case SearchOutcome::Found: return "found";
  case SearchOutcome::NoneFound: return "none-found";
  case SearchOutcome::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

CopyStructure build_copies(const CategoryFragment& fr, ObjectId a, ObjectId b, ObjectId c)
{
  for (auto x : {a, b, c})
    if (index(x) >= fr.object_count())
      throw ArrowError(ArrowErrorKind::ObjectNotInFragment, "object is not in the fragment");
  if (!fr.arrow(a, b) || !fr.arrow(b, c))
    throw ArrowError(ArrowErrorKind::PreconditionArrowMissing,
                     "need A -> B -> C, got |hom(A,B)| = " + std::to_string(fr.hom(a, b).size()) +
                       ", |hom(B,C)| = " + std::to_string(fr.hom(b, c).size()));
  CopyStructure cs;
  cs.a = a;
  cs.b = b;
  cs.c = c;
  cs.points = static_cast<std::uint32_t>(fr.hom(a, c).size());
  cs.closing.resize(cs.points);
  const auto nf = static_cast<std::uint32_t>(fr.hom(a, b).size());
  const auto nw = static_cast<std::uint32_t>(fr.hom(b, c).size());
  cs.copies.resize(nw);
  for (std::uint32_t w = 0; w < nw; ++w) {
    auto& copy = cs.copies[w];
    for (std::uint32_t f = 0; f < nf; ++f) {
      const auto p = fr.compose_local(a, b, c, f, w);
      if (p == CategoryFragment::unset)
        throw FragmentError(FragmentErrorKind::NotClosed, "fragment is not closed under w · f");
      copy.push_back(p);
    }
    std::sort(copy.begin(), copy.end());
    copy.erase(std::unique(copy.begin(), copy.end()), copy.end());
    cs.closing[copy.back()].push_back(w);
  }
  return cs;
}

namespace {

void check_k(std::uint32_t k)
{
  if (k == 0 || k > 255)
    throw ArrowError(ArrowErrorKind::BadColorCount, "number of colors must be in 1..255");
}

bool monochromatic(const std::vector<std::uint32_t>& copy, const std::vector<std::uint8_t>& colors)
{
  const auto c0 = colors[copy[0]];
  for (auto p : copy)
    if (colors[p] != c0)
      return false;
  return true;
}

} // namespace

ArrowVerdict check_arrow_exhaustive(const CategoryFragment& fr, ObjectId a, ObjectId b, ObjectId c,
                                    std::uint32_t k, const ArrowBudget& budget,
                                    std::size_t witness_sample)
{
  check_k(k);
  const auto cs = build_copies(fr, a, b, c);
  const auto& hbc = fr.hom(b, c);
  ArrowVerdict v;
  if (k == 1) {
    v.holds = true;
    v.stats.colorings = 1;
    if (witness_sample)
      v.witnesses.emplace_back(0, hbc[0]);
    return v;
  }
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < cs.points; ++i) {
    total *= k;
    if (total > budget.max_colorings)
      throw ArrowError(ArrowErrorKind::BudgetExceeded,
                       std::to_string(k) + "^" + std::to_string(cs.points) +
                         " colorings exceed the budget of " + std::to_string(budget.max_colorings));
  }

  auto record = [&](std::uint64_t number, std::uint32_t w) {
    if (v.witnesses.size() < witness_sample)
      v.witnesses.emplace_back(number, hbc[w]);
  };
  auto fail = [&](std::vector<std::uint8_t> colors) {
    v.holds = false;
    v.counterexample = Coloring{a, c, k, std::move(colors)};
  };

  if (k == 2 && cs.points <= 63) {
    std::vector<std::uint64_t> masks;
    for (const auto& copy : cs.copies) {
      std::uint64_t m = 0;
      for (auto p : copy)
        m |= std::uint64_t{1} << p;
      masks.push_back(m);
    }
    for (std::uint64_t x = 0; x < total; ++x) {
      ++v.stats.colorings;
      bool found = false;
      for (std::uint32_t w = 0; w < masks.size(); ++w) {
        const auto hit = x & masks[w];
        if (hit == 0 || hit == masks[w]) {
          record(x, w);
          found = true;
          break;
        }
      }
      if (!found) {
        std::vector<std::uint8_t> colors(cs.points);
        for (std::uint32_t p = 0; p < cs.points; ++p)
          colors[p] = (x >> p) & 1;
        fail(std::move(colors));
        return v;
      }
    }
    v.holds = true;
    return v;
  }

  std::vector<std::uint8_t> colors(cs.points, 0);
  for (std::uint64_t number = 0; number < total; ++number) {
    ++v.stats.colorings;
    bool found = false;
    for (std::uint32_t w = 0; w < cs.copies.size(); ++w)
      if (monochromatic(cs.copies[w], colors)) {
        record(number, w);
        found = true;
        break;
      }
    if (!found) {
      fail(colors);
      return v;
    }
    // odometer, point 0 fastest
    for (std::uint32_t p = 0; p < cs.points; ++p) {
      if (++colors[p] < k)
        break;
      colors[p] = 0;
    }
  }
  v.holds = true;
  return v;
}

namespace {

class Dfs
{
public:
  Dfs(const CopyStructure& cs, std::uint32_t k, std::atomic<std::uint64_t>& nodes,
      std::uint64_t max_nodes, std::atomic<bool>& stop)
    : cs_(cs), k_(k), nodes_(nodes), max_nodes_(max_nodes), stop_(stop), colors(cs.points, 0)
  {}

  /// Colors points [p, points) given colors[0..p) and `used` colors so far.
  bool run(std::uint32_t p, std::uint32_t used)
  {
    if (p == cs_.points)
      return true;
    const auto limit = std::min(k_, used + 1);
    for (std::uint32_t color = 0; color < limit; ++color) {
      if (stop_.load(std::memory_order_relaxed))
        return false;
      if (nodes_.fetch_add(1, std::memory_order_relaxed) >= max_nodes_) {
        exceeded = true;
        stop_.store(true, std::memory_order_relaxed);
        return false;
      }
      colors[p] = static_cast<std::uint8_t>(color);
      if (admissible(p) && run(p + 1, std::max(used, color + 1)))
        return true;
    }
    return false;
  }

  /// Canonical partial colorings of the first `depth` points that survive pruning.
  void prefixes(std::uint32_t p, std::uint32_t used, std::uint32_t depth,
                std::vector<std::pair<std::vector<std::uint8_t>, std::uint32_t>>& out)
  {
    if (p == depth) {
      out.emplace_back(std::vector<std::uint8_t>(colors.begin(), colors.begin() + depth), used);
      return;
    }
    const auto limit = std::min(k_, used + 1);
    for (std::uint32_t color = 0; color < limit; ++color) {
      nodes_.fetch_add(1, std::memory_order_relaxed);
      colors[p] = static_cast<std::uint8_t>(color);
      if (admissible(p))
        prefixes(p + 1, std::max(used, color + 1), depth, out);
    }
  }

  bool exceeded = false;

private:
  bool admissible(std::uint32_t p) const
  {
    for (auto w : cs_.closing[p])
      if (monochromatic(cs_.copies[w], colors))
        return false;
    return true;
  }

  const CopyStructure& cs_;
  std::uint32_t k_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t max_nodes_;
  std::atomic<bool>& stop_;

public:
  std::vector<std::uint8_t> colors;
};

} // namespace

SearchResult find_bad_coloring(const CopyStructure& cs, std::uint32_t k, const SearchOptions& options)
{
  check_k(k);
  SearchResult result;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  auto found = [&](std::vector<std::uint8_t> colors) {
    result.outcome = SearchOutcome::Found;
    result.coloring = Coloring{cs.a, cs.c, k, std::move(colors)};
  };

  if (options.workers <= 1 || cs.points < 8) {
    Dfs dfs(cs, k, nodes, options.budget.max_nodes, stop);
    if (dfs.run(0, 0))
      found(dfs.colors);
    else
      result.outcome = dfs.exceeded ? SearchOutcome::BudgetExceeded : SearchOutcome::NoneFound;
    result.stats.nodes = std::min<std::uint64_t>(nodes.load(), options.budget.max_nodes);
    return result;
  }

  // shard canonical prefixes across workers
  std::vector<std::pair<std::vector<std::uint8_t>, std::uint32_t>> prefixes;
  {
    Dfs dfs(cs, k, nodes, options.budget.max_nodes, stop);
    std::uint32_t depth = 1;
    while (depth < cs.points) {
      prefixes.clear();
      dfs.prefixes(0, 0, depth, prefixes);
      if (prefixes.size() >= 8 * options.workers || prefixes.empty())
        break;
      ++depth;
    }
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> exceeded{false};
  std::mutex lock;
  std::optional<std::pair<std::size_t, std::vector<std::uint8_t>>> best;
  auto work = [&] {
    Dfs dfs(cs, k, nodes, options.budget.max_nodes, stop);
    while (!stop.load()) {
      const auto i = next.fetch_add(1);
      if (i >= prefixes.size())
        break;
      const auto& [prefix, used] = prefixes[i];
      std::copy(prefix.begin(), prefix.end(), dfs.colors.begin());
      if (dfs.run(static_cast<std::uint32_t>(prefix.size()), used)) {
        std::lock_guard guard(lock);
        if (!best || i < best->first)
          best.emplace(i, dfs.colors);
        stop.store(true);
      }
      if (dfs.exceeded)
        exceeded.store(true);
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < options.workers; ++t)
    threads.emplace_back(work);
  for (auto& t : threads)
    t.join();
  if (best)
    found(std::move(best->second));
  else
    result.outcome = exceeded ? SearchOutcome::BudgetExceeded : SearchOutcome::NoneFound;
  result.stats.nodes = std::min<std::uint64_t>(nodes.load(), options.budget.max_nodes);
  return result;
}

SearchResult find_bad_coloring(const CategoryFragment& fr, ObjectId a, ObjectId b, ObjectId c,
                               std::uint32_t k, const SearchOptions& options)
{
  return find_bad_coloring(build_copies(fr, a, b, c), k, options);
}

Certification certify_bad_coloring(const CategoryFragment& fr, ObjectId b, const Coloring& coloring)
{
  Certification cert;
  const auto hac = fr.hom(coloring.a, coloring.c);
  if (coloring.colors.size() != hac.size())
    return cert;
  for (auto w : fr.hom(b, coloring.c)) {
    ++cert.copies_checked;
    std::optional<std::uint8_t> seen;
    bool mono = true;
    for (auto f : fr.hom(coloring.a, b)) {
      const auto wf = fr.compose(w, f);
      const auto color = coloring.colors[fr.morphism(wf).local];
      if (seen && *seen != color) {
        mono = false;
        break;
      }
      seen = color;
    }
    if (mono) {
      cert.monochromatic_w = w;
      return cert;
    }
  }
  cert.defeats_every_copy = true;
  return cert;
}

FragmentFamily ram_family()
{
  return {"ram", [](std::span<const std::uint32_t> sizes) { return ram_fragment(sizes); }};
}

FragmentFamily dram_op_family()
{
  return {"dram-op", [](std::span<const std::uint32_t> sizes) { return dram_op_fragment(sizes); }};
}

FragmentFamily gr_family(ContextPtr context)
{
  return {"gr", [context = std::move(context)](std::span<const std::uint32_t> sizes) {
            return gr_fragment(context, sizes);
          }};
}

MinWitnessResult min_ramsey_witness(const FragmentFamily& family, std::uint32_t a, std::uint32_t b,
                                    std::uint32_t k, std::uint32_t n_max,
                                    const SearchOptions& options)
{
  check_k(k);
  MinWitnessResult out;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    std::vector<std::uint32_t> sizes{a, b, n};
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    const auto fr = family.build(sizes);
    const auto A = *fr->object_by_size(a);
    const auto B = *fr->object_by_size(b);
    const auto N = *fr->object_by_size(n);
    if (!fr->arrow(A, B))
      throw ArrowError(ArrowErrorKind::PreconditionArrowMissing,
                       "no morphism " + std::to_string(a) + " -> " + std::to_string(b) + " in " +
                         family.name);
    CandidateRecord rec;
    rec.n = n;
    if (!fr->arrow(B, N)) {
      rec.skipped = true;
      out.candidates.push_back(std::move(rec));
      continue;
    }
    auto res = find_bad_coloring(*fr, A, B, N, k, options);
    rec.stats = res.stats;
    if (res.outcome == SearchOutcome::BudgetExceeded)
      throw ArrowError(ArrowErrorKind::BudgetExceeded,
                       "node budget of " + std::to_string(options.budget.max_nodes) +
                         " exhausted at n = " + std::to_string(n));
    rec.holds = res.outcome == SearchOutcome::NoneFound;
    rec.counterexample = std::move(res.coloring);
    out.candidates.push_back(std::move(rec));
    if (out.candidates.back().holds) {
      out.n = n;
      break;
    }
  }
  return out;
}

} // namespace ramcat
