#include "ramcat/golden.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "ramcat/builders.hpp"
#include "ramcat/functor.hpp"
#include "ramcat/io.hpp"
#include "ramcat/preadjunction.hpp"
#include "ramcat/ramsey.hpp"
#include "ramcat/tukey.hpp"

namespace ramcat {

GoldenHooks default_hooks()
{
  return {[](const DecoratedWord& u, const DecoratedWord& v) { return substitute(u, v); },
          [](std::uint32_t n, std::uint32_t m) { return enumerate_rsurj(n, m); }};
}

DecoratedWord substitute_without_action(const DecoratedWord& u, const DecoratedWord& v)
{
  const auto& group = u.context()->group();
  std::vector<Token> out;
  out.reserve(u.length());
  for (const auto& t : u.tokens()) {
    if (!t.is_param()) {
      out.push_back(t);
      continue;
    }
    const auto& vi = v[t.index - 1];
    out.push_back(vi.is_param() ? Token::param(vi.index, group.multiply(vi.exponent, t.exponent))
                                : Token::letter(vi.index));
  }
  return make_word_unchecked(u.context(), std::move(out), v.parameters());
}

std::vector<RigidSurjection> enumerate_all_surjections(std::uint32_t n, std::uint32_t m)
{
  std::vector<RigidSurjection> out;
  if (m == 0 || m > n)
    return out;
  std::vector<std::uint32_t> images(n, 1);
  for (;;) {
    std::vector<bool> hit(m + 1, false);
    for (auto x : images)
      hit[x] = true;
    if (std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; }))
      out.push_back(make_rigid_unchecked(images, m));
    std::size_t i = n;
    while (i > 0 && images[i - 1] == m)
      images[--i] = 1;
    if (i == 0)
      break;
    ++images[i - 1];
  }
  return out;
}

std::uint64_t stirling2(std::uint32_t n, std::uint32_t m)
{
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 2, 0));
  s[0][0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = 1; j <= i; ++j)
      s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return m <= n ? s[n][m] : 0;
}

std::uint64_t binomial(std::uint32_t n, std::uint32_t k)
{
  if (k > n)
    return 0;
  std::uint64_t r = 1;
  for (std::uint32_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

namespace {

using Clock = std::chrono::steady_clock;

class Timer
{
public:
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

private:
  Clock::time_point start_ = Clock::now();
};

CriterionResult finish(int id, std::string title, bool ok, std::string detail, const Timer& t,
                       double limit)
{
  CriterionResult r{id, std::move(title), ok, std::move(detail), t.seconds(), limit};
  r.passed = ok && r.seconds <= limit;
  if (ok && !r.passed)
    r.detail += "; over the time limit";
  return r;
}

struct NamedPA
{
  PreAdjunction pa;
  PABounds bounds;
};

ContextPtr swap_context() { return make_context(z2_swap_action()); }
ContextPtr one_letter_context()
{
  return make_context(RightAction::trivial(FiniteGroup::cyclic(2), {"a"}));
}

std::vector<NamedPA> verified_instances()
{
  const auto z2 = FiniteGroup::cyclic(2);
  std::vector<NamedPA> out;
  auto add = [&](PreAdjunction pa, std::string name) {
    pa.name = std::move(name);
    auto b = default_bounds(pa);
    out.push_back({std::move(pa), std::move(b)});
  };
  add(pa_gr_plain_to_decorated(make_context(RightAction::trivial(z2)), 3),
      "gr-plain-to-decorated A={} G=Z2");
  add(pa_gr_plain_to_decorated(one_letter_context(), 3), "gr-plain-to-decorated A={a} G=Z2");
  add(pa_gr_plain_to_decorated(swap_context(), 3), "gr-plain-to-decorated A={a,b} G=Z2");
  add(pa_gr_decorated_to_plain(swap_context(), 2), "gr-decorated-to-plain A={a,b} G=Z2");
  add(pa_gr_to_dramop(z2, 6), "gr-to-dram-op G=Z2");
  add(pa_ram_to_dram_op(5), "ram-to-dram-op");
  add(identity_pa(ram_fragment(4)), "identity Ram(1..4)");
  add(identity_pa(gr_fragment(swap_context(), 3)), "identity GR({a,b},Z2)");
  add(compose_pa(pa_gr_decorated_to_plain(one_letter_context(), 2, 6), pa_gr_to_dramop(z2, 6)),
      "composed decorated-to-plain;gr-to-dram-op");
  add(compose_pa(identity_pa(ram_fragment(4)), identity_pa(ram_fragment(4))),
      "composed identity;identity");
  return out;
}

} // namespace

CriterionResult golden_worked_example(const GoldenHooks& hooks)
{
  const std::string expected = "c a b a a x1 d x1^g2 x1^g2 c a x1";
  auto ctx = make_context(z3_rotation_action());
  auto u = parse_word("c a x1 a x1^g2 x2 d x3 x2^g2 x1^g a x3^g", ctx, 3);
  auto v = parse_word("b x1 x1^g2", ctx, 1);
  Timer t;
  const auto got = format_word(hooks.substitute(u, v));
  return finish(1, "worked substitution", got == expected, "u·v = " + got, t, 1e-3);
}

CriterionResult golden_counting(const GoldenHooks& hooks)
{
  Timer t;
  std::ostringstream detail;
  bool ok = true;
  std::size_t checked = 0;
  for (std::uint32_t n = 1; n <= 7; ++n)
    for (std::uint32_t m = 1; m <= n; ++m) {
      const auto s = stirling2(n, m);
      const auto rs = hooks.enumerate_rsurj(n, m).size();
      const auto ws = enumerate_words(m, n, plain_context()).size();
      checked += 2;
      if (rs != s || ws != s) {
        if (ok)
          detail << "n=" << n << " m=" << m << ": S=" << s << " RSurj=" << rs << " W=" << ws
                 << "; ";
        ok = false;
      }
    }
  const auto ram = ram_fragment(8);
  for (auto a : ram->objects())
    for (auto b : ram->objects()) {
      ++checked;
      const auto m = ram->object(a).size;
      const auto n = ram->object(b).size;
      if (ram->hom(a, b).size() != binomial(n, m)) {
        if (ok)
          detail << "|hom_Ram(" << m << "," << n << ")| = " << ram->hom(a, b).size() << "; ";
        ok = false;
      }
    }
  detail << checked << " counts compared";
  return finish(2, "counting identities", ok, detail.str(), t, 5.0);
}

CriterionResult golden_duality(const GoldenHooks& hooks)
{
  Timer t;
  bool ok = true;
  std::ostringstream detail;
  std::size_t products = 0, duals = 0, trips = 0;
  const auto& plain = plain_context();
  for (std::uint32_t n = 1; n <= 6 && ok; ++n)
    for (std::uint32_t k = 1; k <= n && ok; ++k)
      for (std::uint32_t m = 1; m <= k && ok; ++m) {
        auto us = enumerate_words(k, n, plain);
        auto vs = enumerate_words(m, k, plain);
        for (const auto& u : us)
          for (const auto& v : vs) {
            ++products;
            if (word_to_rsurj(hooks.substitute(u, v)) != compose(word_to_rsurj(v), word_to_rsurj(u))) {
              detail << "f_{u·v} != f_v∘f_u at u=" << format_word(u) << " v=" << format_word(v)
                     << "; ";
              ok = false;
              break;
            }
          }
      }
  for (std::uint32_t n = 1; n <= 5 && ok; ++n)
    for (std::uint32_t k = 1; k <= n && ok; ++k)
      for (std::uint32_t m = 1; m <= k && ok; ++m) {
        auto fs = hooks.enumerate_rsurj(n, k);
        auto gs = hooks.enumerate_rsurj(k, m);
        for (const auto& f : fs)
          for (const auto& g : gs) {
            ++duals;
            if (dual(compose(g, f)) != compose(dual(f), dual(g))) {
              detail << "(g∘f)^∂ != f^∂∘g^∂ at f=" << format_images(f.images())
                     << " g=" << format_images(g.images()) << "; ";
              ok = false;
              break;
            }
          }
      }
  for (std::uint32_t n = 1; n <= 6 && ok; ++n)
    for (std::uint32_t m = 1; m <= n && ok; ++m) {
      for (const auto& u : enumerate_words(m, n, plain)) {
        ++trips;
        if (rsurj_to_word(word_to_rsurj(u)) != u) {
          detail << "word round trip fails at " << format_word(u) << "; ";
          ok = false;
          break;
        }
      }
      for (const auto& f : hooks.enumerate_rsurj(n, m)) {
        ++trips;
        if (word_to_rsurj(rsurj_to_word(f)) != f) {
          detail << "surjection round trip fails at " << format_images(f.images()) << "; ";
          ok = false;
          break;
        }
      }
    }
  detail << products << " products, " << duals << " dual pairs, " << trips << " round trips";
  return finish(3, "duality suite", ok, detail.str(), t, 10.0);
}

CriterionResult golden_ramsey_search(const GoldenHooks&)
{
  Timer t;
  std::ostringstream detail;
  bool ok = true;
  const auto family = ram_family();
  auto res = min_ramsey_witness(family, 2, 3, 2, 8);
  detail << "min n = " << (res.n ? std::to_string(*res.n) : "none");
  ok = res.n && *res.n == 6;
  const CandidateRecord* five = nullptr;
  for (const auto& c : res.candidates)
    if (c.n == 5)
      five = &c;
  if (!five || !five->counterexample) {
    ok = false;
    detail << "; no n=5 counterexample";
  } else {
    std::vector<std::uint32_t> sizes{2, 3, 5};
    auto fr = family.build(sizes);
    auto cert = certify_bad_coloring(*fr, *fr->object_by_size(3), *five->counterexample);
    ok = ok && cert.defeats_every_copy;
    detail << "; n=5 coloring " << (cert.defeats_every_copy ? "certified" : "NOT certified")
           << " over " << cert.copies_checked << " copies";
  }

  std::size_t instances = 0, disagreements = 0;
  for (std::uint32_t c = 1; c <= 16; ++c)
    for (std::uint32_t a = 1; a <= c; ++a) {
      if (binomial(c, a) > 16)
        continue;
      for (std::uint32_t b = a; b <= c; ++b) {
        std::vector<std::uint32_t> sizes{a, b, c};
        std::sort(sizes.begin(), sizes.end());
        sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
        auto fr = ram_fragment(sizes);
        const auto A = *fr->object_by_size(a), B = *fr->object_by_size(b), C = *fr->object_by_size(c);
        ArrowBudget budget{1u << 16, 100'000'000};
        auto ex = check_arrow_exhaustive(*fr, A, B, C, 2, budget, 0);
        auto bt = find_bad_coloring(*fr, A, B, C, 2, {budget, 1});
        ++instances;
        if (bt.outcome == SearchOutcome::BudgetExceeded ||
            ex.holds != (bt.outcome == SearchOutcome::NoneFound))
          ++disagreements;
      }
    }
  ok = ok && disagreements == 0;
  detail << "; engines agree on " << instances - disagreements << "/" << instances << " instances";
  return finish(4, "Ramsey search", ok, detail.str(), t, 60.0);
}

CriterionResult golden_preadjunctions(const GoldenHooks&)
{
  Timer t;
  std::ostringstream detail;
  bool ok = true;
  for (auto& [pa, bounds] : verified_instances()) {
    auto r = verify_pa(pa, bounds);
    if (!r.ok()) {
      ok = false;
      detail << pa.name << ": " << r.failure_count << " failures; ";
    }
  }
  auto broken = constant_phi_mutation(identity_pa(ram_fragment(3)));
  auto rb = verify_pa(broken);
  const bool certified = !rb.failures.empty() && std::all_of(rb.failures.begin(), rb.failures.end(),
                                                             [&](const PAFailure& f) {
                                                               return recheck_failure(broken, f.instance);
                                                             });
  ok = ok && certified;
  auto literal = pa_ram_to_dram_op_literal(5);
  auto rl = verify_pa(literal);
  detail << "all " << verified_instances().size() << " instances checked; constant-Φ mutation: "
         << rb.failure_count << " failures (" << (certified ? "certified" : "NOT certified")
         << "); literal ∂ (not asserted): " << rl.failure_count << " failures";
  return finish(5, "(PA) verification", ok, detail.str(), t, 300.0);
}

CriterionResult golden_cardinality(const GoldenHooks&)
{
  Timer t;
  std::ostringstream detail;
  bool ok = true;
  std::size_t pairs = 0;
  for (auto& [pa, bounds] : verified_instances()) {
    auto r = check_card_inequality(pa, bounds.source);
    pairs += r.pairs;
    if (!r.ok()) {
      ok = false;
      detail << pa.name << " violates the inequality; ";
    }
  }
  auto collapse = ram_to_chain_collapse(3);
  auto rc = check_card_inequality(collapse, collapse.source->objects());
  const bool flagged = !rc.ok();
  const bool pa_fails = !verify_pa(collapse).ok();
  ok = ok && flagged && pa_fails;
  detail << pairs << " pairs hold; collapse mutation " << (flagged ? "flagged" : "NOT flagged")
         << " (" << rc.violations.size() << " pairs), its (PA) check "
         << (pa_fails ? "fails" : "passes");
  return finish(6, "cardinality inequality", ok, detail.str(), t, 60.0);
}

CriterionResult golden_omega_pipeline(const GoldenHooks&)
{
  Timer t;
  std::ostringstream detail;
  auto ram = ram_fragment(6);
  auto seq = build_nonthin_sequence(ram, 5);
  bool ok = seq.objects.size() >= 3;
  detail << "sequence";
  for (auto o : seq.objects)
    detail << " " << ram->object(o).label;
  for (const auto& c : seq.certificates) {
    ok = ok && c.forward >= 2 && c.backward == 0;
    detail << " [" << c.forward << "," << c.backward << "]";
  }
  auto built = verify_pa(pa_omega_to_nonthin(ram, seq.objects));
  ok = ok && built.ok();
  detail << "; truncation {0.." << seq.objects.size() - 1 << "} "
         << (built.ok() ? "passes" : "fails");
  std::vector<ObjectId> five;
  for (std::uint32_t s = 2; s <= 6; ++s)
    five.push_back(*ram->object_by_size(s));
  auto longer = verify_pa(pa_omega_to_nonthin(ram, five));
  ok = ok && longer.ok();
  detail << "; chain 2<3<4<5<6 on {0..4} " << (longer.ok() ? "passes" : "fails");
  return finish(7, "non-thin sequence and ω-pre-adjunction", ok, detail.str(), t, 60.0);
}

CriterionResult golden_monotonization(const GoldenHooks&)
{
  Timer t;
  std::ostringstream detail;
  const auto w = GeneratedPreorder::omega();
  IndexMap f = [](std::size_t n) { return n % 2 == 0 ? n + 10 : (n - 1) / 2; };
  auto trace = monotonize(f, w, w, 30);
  auto check = check_trace(trace, f, w, w);
  IndexMap twice = [](std::size_t n) { return 2 * n; };
  auto comp = cofinal_companion(twice, w, w, 20);
  bool halves = true;
  for (std::size_t b = 0; b < comp.g.size(); ++b)
    halves = halves && comp.g[b] == b / 2;
  const bool ok = check.ok() && comp.implication_holds() && halves;
  detail << "trace of " << trace.S.size() << " blocks over " << trace.fhat.size()
         << " elements: " << (check.ok() ? "invariants hold" : "invariant fails")
         << "; companion of 2n over " << comp.pairs_checked << " prefix pairs: "
         << (comp.implication_holds() ? "implication holds" : "implication fails")
         << (halves ? ", g(b) = floor(b/2)" : "");
  for (const auto& m : check.messages)
    detail << "; " << m;
  return finish(8, "monotonization and cofinal companion", ok, detail.str(), t, 1.0);
}

CriterionResult golden_fragment_laws(const GoldenHooks&)
{
  Timer t;
  std::ostringstream detail;
  bool ok = true;
  const auto z2 = FiniteGroup::cyclic(2);
  std::vector<FragmentPtr> fragments{
    ram_fragment(6),
    dram_fragment(5),
    dram_op_fragment(5),
    gr_fragment(make_context(RightAction::trivial(z2)), 4),
    gr_fragment(make_context(z2_swap_action()), 3),
    vec_fragment(FiniteField::gf2(), 3),
  };
  for (const auto& fr : fragments) {
    auto d = validate_fragment(*fr);
    ok = ok && d.ok();
    detail << fr->name() << (d.ok() ? " ok" : " FAILS") << "; ";
  }
  auto words = words_to_surjections(gr_fragment(plain_context(), 5), dram_op_fragment(5));
  const auto fc = check_functor(words);
  const bool iso = is_isomorphism(words);
  ok = ok && fc.ok && iso;
  detail << "GR(∅,{e}) -> DRam^op on 1..5: " << (iso ? "isomorphism" : "NOT an isomorphism");
  return finish(9, "fragment laws", ok, detail.str(), t, 60.0);
}

std::vector<CriterionResult> run_golden_suite(const GoldenHooks& hooks, const std::vector<int>& only)
{
  using Fn = CriterionResult (*)(const GoldenHooks&);
  const Fn all[] = {golden_worked_example,  golden_counting,       golden_duality,
                    golden_ramsey_search,  golden_preadjunctions, golden_cardinality,
                    golden_omega_pipeline, golden_monotonization, golden_fragment_laws};
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end())
      continue;
    try {
      out.push_back(all[id - 1](hooks));
    } catch (const std::exception& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, e.what(), 0, 0});
    }
  }
  return out;
}

} // namespace ramcat
