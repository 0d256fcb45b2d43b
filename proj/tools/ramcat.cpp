// ramcat: command-line front end.
//
// Exit codes: 0 success / property verified, 1 property fails, 2 usage or
// config error, 3 budget exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramcat/builders.hpp"
#include "ramcat/expression.hpp"
#include "ramcat/functor.hpp"
#include "ramcat/golden.hpp"
#include "ramcat/io.hpp"
#include "ramcat/preadjunction.hpp"
#include "ramcat/ramsey.hpp"
#include "ramcat/tukey.hpp"

using namespace ramcat;
using Json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct RunConfig
{
  std::string report;
  bool json = false;
  std::uint64_t max_nodes = ArrowBudget{}.max_nodes;
  std::uint64_t max_colorings = ArrowBudget{}.max_colorings;
  std::size_t max_morphisms = BuildLimits{}.max_morphisms;
  unsigned workers = 1;
  std::uint64_t seed = 0;
};

RunConfig config;

// --- helpers ----------------------------------------------------------------

std::string text_or_file(const std::string& arg)
{
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec))
    return arg;
  std::string out;
  std::istringstream in(read_text_file(arg));
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    out += (out.empty() ? "" : " ") + line.substr(first);
  }
  while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back())))
    out.pop_back();
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text)
{
  std::vector<std::size_t> out;
  std::string cleaned;
  for (char c : text)
    cleaned += (c == ',' || c == '[' || c == ']' || c == '(' || c == ')') ? ' ' : c;
  std::istringstream in(cleaned);
  for (long long v; in >> v;) {
    if (v < 0)
      throw ConfigError(ConfigErrorKind::Syntax, "negative index in '" + text + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (!in.eof())
    throw ConfigError(ConfigErrorKind::Syntax, "cannot read index list '" + text + "'");
  return out;
}

Json base_report(const std::string& command)
{
  Json j;
  j["command"] = command;
  j["seed"] = config.seed;
  j["workers"] = config.workers;
  return j;
}

int emit(Json report, int code)
{
  report["exit_code"] = code;
  if (config.json)
    std::cout << report.dump(2) << "\n";
  if (!config.report.empty()) {
    std::ofstream out(config.report);
    if (!out)
      throw ConfigError(ConfigErrorKind::Io, "cannot write '" + config.report + "'");
    out << report.dump(2) << "\n";
  }
  return code;
}

ArrowBudget arrow_budget() { return {config.max_colorings, config.max_nodes}; }
SearchOptions search_options() { return {arrow_budget(), config.workers}; }
BuildLimits limits()
{
  BuildLimits l;
  l.max_morphisms = config.max_morphisms;
  return l;
}

ContextPtr load_context(const std::string& group_file, const std::string& alphabet)
{
  RightAction action;
  if (!group_file.empty())
    action = load_action(group_file);
  if (!alphabet.empty()) {
    if (action.alphabet_size() != 0)
      throw ConfigError(ConfigErrorKind::Schema, "--alphabet given but the group file has one");
    std::vector<std::string> letters;
    std::string cleaned;
    for (char c : alphabet)
      cleaned += (c == ',' || c == '{' || c == '}') ? ' ' : c;
    std::istringstream in(cleaned);
    for (std::string s; in >> s;)
      letters.push_back(s);
    action = RightAction::trivial(action.group(), letters);
  }
  return make_context(std::move(action));
}

Json word_json(const DecoratedWord& w)
{
  return {{"word", format_word(w)}, {"m", w.parameters()}, {"n", w.length()}};
}

// --- words -------------------------------------------------------------------

struct WordsArgs
{
  std::string context_file, alphabet;
  std::vector<std::string> inputs;
  std::uint32_t m = 0, n = 0;
  std::size_t limit = 50;
};

int words_validate(const WordsArgs& a)
{
  auto ctx = load_context(a.context_file, a.alphabet);
  auto report = base_report("words validate");
  bool all_ok = true;
  for (const auto& in : a.inputs) {
    const auto text = text_or_file(in);
    Json entry{{"input", text}};
    try {
      auto w = parse_word(text, ctx, a.m ? std::optional<std::uint32_t>(a.m) : std::nullopt);
      entry["valid"] = true;
      entry.update(word_json(w));
      std::cout << "valid: " << format_word(w) << " (m=" << w.parameters() << ", n=" << w.length()
                << ")\n";
    } catch (const WordError& e) {
      if (e.kind() == WordErrorKind::SyntaxError || e.kind() == WordErrorKind::UnknownSymbol)
        throw;
      all_ok = false;
      entry["valid"] = false;
      entry["error"] = e.what();
      std::cout << "invalid: " << e.what() << "\n";
    }
    report["words"].push_back(entry);
  }
  return emit(report, all_ok ? exit_ok : exit_fails);
}

int words_compose(const WordsArgs& a)
{
  if (a.inputs.size() < 2)
    throw CLI::ValidationError("compose needs at least two words");
  auto ctx = load_context(a.context_file, a.alphabet);
  auto result = parse_word(text_or_file(a.inputs[0]), ctx);
  auto report = base_report("words compose");
  report["inputs"].push_back(word_json(result));
  for (std::size_t i = 1; i < a.inputs.size(); ++i) {
    auto v = parse_word(text_or_file(a.inputs[i]), ctx);
    report["inputs"].push_back(word_json(v));
    result = substitute(result, v);
  }
  report["result"] = word_json(result);
  std::cout << format_word(result) << "\n";
  return emit(report, exit_ok);
}

int words_enumerate(const WordsArgs& a)
{
  auto ctx = load_context(a.context_file, a.alphabet);
  auto report = base_report("words enumerate");
  std::size_t count = 0;
  for_each_word(a.m, a.n, ctx, [&](const DecoratedWord& w) {
    if (count < a.limit) {
      std::cout << format_word(w) << "\n";
      report["sample"].push_back(format_word(w));
    }
    ++count;
  });
  report["m"] = a.m;
  report["n"] = a.n;
  report["count"] = count;
  std::cout << "count " << count << "\n";
  return emit(report, exit_ok);
}

// --- rsurj -------------------------------------------------------------------

struct RsurjArgs
{
  std::vector<std::string> inputs;
  std::uint32_t n = 0, m = 0, cod = 0;
  std::size_t limit = 50;
  bool shifted = false;
};

Json rsurj_json(const RigidSurjection& f)
{
  return {{"images", format_images(f.images())}, {"n", f.domain_size()}, {"m", f.codomain_size()}};
}

int rsurj_validate(const RsurjArgs& a)
{
  auto report = base_report("rsurj validate");
  bool all_ok = true;
  for (const auto& in : a.inputs) {
    const auto text = text_or_file(in);
    Json entry{{"input", text}};
    try {
      auto f = parse_rsurj(text, a.cod ? std::optional<std::uint32_t>(a.cod) : std::nullopt);
      entry["valid"] = true;
      entry.update(rsurj_json(f));
      std::cout << "valid: " << format_images(f.images()) << " : " << f.domain_size() << " -> "
                << f.codomain_size() << "\n";
    } catch (const ChainError& e) {
      all_ok = false;
      entry["valid"] = false;
      entry["error"] = e.what();
      std::cout << "invalid: " << e.what() << "\n";
    }
    report["surjections"].push_back(entry);
  }
  return emit(report, all_ok ? exit_ok : exit_fails);
}

int rsurj_compose(const RsurjArgs& a)
{
  if (a.inputs.size() != 2)
    throw CLI::ValidationError("compose takes g and f (computes g ∘ f)");
  auto g = parse_rsurj(text_or_file(a.inputs[0]));
  auto f = parse_rsurj(text_or_file(a.inputs[1]));
  auto h = compose(g, f);
  auto report = base_report("rsurj compose");
  report["g"] = rsurj_json(g);
  report["f"] = rsurj_json(f);
  report["result"] = rsurj_json(h);
  std::cout << format_images(h.images()) << "\n";
  return emit(report, exit_ok);
}

int rsurj_enumerate(const RsurjArgs& a)
{
  auto all = enumerate_rsurj(a.n, a.m);
  auto report = base_report("rsurj enumerate");
  report["n"] = a.n;
  report["m"] = a.m;
  report["count"] = all.size();
  for (std::size_t i = 0; i < all.size() && i < a.limit; ++i) {
    std::cout << format_images(all[i].images()) << "\n";
    report["sample"].push_back(format_images(all[i].images()));
  }
  std::cout << "count " << all.size() << "\n";
  return emit(report, exit_ok);
}

int rsurj_dual(const RsurjArgs& a)
{
  auto report = base_report("rsurj dual");
  report["shifted"] = a.shifted;
  for (const auto& in : a.inputs) {
    auto f = parse_rsurj(text_or_file(in));
    auto d = a.shifted ? shifted_dual(f) : dual(f);
    std::cout << format_images(f.images()) << " -> " << format_images(d.images()) << " : "
              << d.domain_size() << " -> " << d.codomain_size() << "\n";
    report["duals"].push_back({{"input", rsurj_json(f)},
                               {"dual", format_images(d.images())},
                               {"m", d.domain_size()},
                               {"n", d.codomain_size()}});
  }
  return emit(report, exit_ok);
}

// --- category ----------------------------------------------------------------

struct CategoryArgs
{
  std::string kind = "ram";
  std::uint32_t max = 4;
  std::string context_file, alphabet;
  std::uint32_t field = 2;
  std::vector<std::string> duplicate;
};

FragmentPtr build_fragment(const CategoryArgs& a)
{
  FragmentPtr fr;
  if (a.kind == "ram")
    fr = ram_fragment(a.max, limits());
  else if (a.kind == "dram")
    fr = dram_fragment(a.max, limits());
  else if (a.kind == "dram-op")
    fr = dram_op_fragment(a.max, limits());
  else if (a.kind == "gr")
    fr = gr_fragment(load_context(a.context_file, a.alphabet), a.max, limits());
  else if (a.kind == "vec")
    fr = vec_fragment(FiniteField::prime(a.field), a.max, limits());
  else
    throw CLI::ValidationError("--kind", "unknown fragment kind '" + a.kind + "'");
  if (!a.duplicate.empty()) {
    std::vector<ObjectId> objs;
    for (const auto& l : a.duplicate) {
      auto o = fr->object_by_label(l);
      if (!o)
        throw CLI::ValidationError("--duplicate", "no object labelled '" + l + "'");
      objs.push_back(*o);
    }
    fr = duplicate_objects(*fr, objs);
  }
  return fr;
}

Json fragment_json(const CategoryFragment& fr)
{
  Json j;
  j["name"] = fr.name();
  j["kind"] = std::string(kind_name(fr.kind()));
  for (auto a : fr.objects())
    j["objects"].push_back(fr.object(a).label);
  j["morphisms"] = fr.morphism_count();
  j["compose_entries"] = fr.compose_entries();
  Json homs = Json::array();
  for (auto a : fr.objects())
    for (auto b : fr.objects())
      if (!fr.hom(a, b).empty())
        homs.push_back({{"dom", fr.object(a).label},
                        {"cod", fr.object(b).label},
                        {"size", fr.hom(a, b).size()}});
  j["hom_sizes"] = homs;
  return j;
}

int category_build(const CategoryArgs& a)
{
  auto fr = build_fragment(a);
  auto report = base_report("category build");
  report["fragment"] = fragment_json(*fr);
  std::cout << fr->name() << ": " << fr->object_count() << " objects, " << fr->morphism_count()
            << " morphisms\n";
  for (const auto& h : report["fragment"]["hom_sizes"])
    std::cout << "  |hom(" << h["dom"].get<std::string>() << ", " << h["cod"].get<std::string>()
              << ")| = " << h["size"] << "\n";
  return emit(report, exit_ok);
}

int category_check(const CategoryArgs& a)
{
  auto fr = build_fragment(a);
  auto d = validate_fragment(*fr);
  auto s = structural_checks(*fr);
  auto report = base_report("category check");
  report["fragment"] = fr->name();
  report["laws_ok"] = d.ok();
  report["identity_checks"] = d.identity_checks;
  report["associativity_checks"] = d.associativity_checks;
  for (const auto& v : d.violations)
    report["violations"].push_back(v.message);
  report["structure"] = {{"thin", s.is_thin},
                         {"directed", s.is_directed},
                         {"all_mono", s.all_mono},
                         {"all_epi", s.all_epi},
                         {"endomorphisms_trivial", s.endomorphisms_trivial},
                         {"isomorphic_homs_are_isos", s.isomorphic_homs_are_isos},
                         {"fan_in", s.fan_in},
                         {"countable_skeleton", std::string(tri_name(s.countable_skeleton))},
                         {"finite_fan_in", std::string(tri_name(s.finite_fan_in))},
                         {"notes", s.notes}};
  std::cout << fr->name() << ": laws " << (d.ok() ? "hold" : "FAIL") << " (" << d.identity_checks
            << " identity, " << d.associativity_checks << " associativity checks)\n";
  for (const auto& v : d.violations)
    std::cout << "  " << v.message << "\n";
  std::cout << "  thin=" << s.is_thin << " directed=" << s.is_directed << " mono=" << s.all_mono
            << " epi=" << s.all_epi << "\n";
  return emit(report, d.ok() ? exit_ok : exit_fails);
}

int category_skeleton(const CategoryArgs& a)
{
  auto fr = build_fragment(a);
  auto sk = skeleton(*fr);
  auto report = base_report("category skeleton");
  report["fragment"] = fr->name();
  report["skeleton"] = fragment_json(*sk.skeleton);
  for (auto x : fr->objects())
    report["representative"][fr->object(x).label] = fr->object(sk.representative[index(x)]).label;
  std::cout << fr->name() << ": " << fr->object_count() << " objects, skeleton has "
            << sk.skeleton->object_count() << "\n";
  return emit(report, exit_ok);
}

// --- ramsey ------------------------------------------------------------------

struct RamseyArgs
{
  std::string family = "ram";
  std::string context_file, alphabet;
  std::uint32_t a = 1, b = 2, c = 3, k = 2, max_n = 8;
  std::string engine = "search";
};

FragmentFamily family_by_name(const RamseyArgs& a)
{
  if (a.family == "ram")
    return ram_family();
  if (a.family == "dram-op")
    return dram_op_family();
  if (a.family == "gr")
    return gr_family(load_context(a.context_file, a.alphabet));
  throw CLI::ValidationError("--family", "unknown family '" + a.family + "'");
}

Json coloring_json(const Coloring& c) { return {{"k", c.k}, {"colors", c.colors}}; }

int ramsey_check(const RamseyArgs& a)
{
  auto family = family_by_name(a);
  std::vector<std::uint32_t> sizes{a.a, a.b, a.c};
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  auto fr = family.build(sizes);
  const auto A = *fr->object_by_size(a.a), B = *fr->object_by_size(a.b), C = *fr->object_by_size(a.c);
  auto report = base_report("ramsey check");
  report["family"] = family.name;
  report["instance"] = {{"A", a.a}, {"B", a.b}, {"C", a.c}, {"k", a.k}};
  report["engine"] = a.engine;
  bool holds = false;
  if (a.engine == "exhaustive") {
    auto v = check_arrow_exhaustive(*fr, A, B, C, a.k, arrow_budget());
    holds = v.holds;
    report["colorings"] = v.stats.colorings;
    if (v.counterexample)
      report["counterexample"] = coloring_json(*v.counterexample);
  } else {
    auto r = find_bad_coloring(*fr, A, B, C, a.k, search_options());
    if (r.outcome == SearchOutcome::BudgetExceeded)
      throw ArrowError(ArrowErrorKind::BudgetExceeded,
                       "node budget of " + std::to_string(config.max_nodes) + " exhausted");
    holds = r.outcome == SearchOutcome::NoneFound;
    report["nodes"] = r.stats.nodes;
    if (r.coloring) {
      report["counterexample"] = coloring_json(*r.coloring);
      report["certified"] = certify_bad_coloring(*fr, B, *r.coloring).defeats_every_copy;
    }
  }
  report["holds"] = holds;
  std::cout << a.c << " -> (" << a.b << ")^" << a.a << "_" << a.k << " in " << family.name << ": "
            << (holds ? "holds" : "fails") << "\n";
  return emit(report, holds ? exit_ok : exit_fails);
}

int ramsey_search(const RamseyArgs& a)
{
  auto family = family_by_name(a);
  auto res = min_ramsey_witness(family, a.a, a.b, a.k, a.max_n, search_options());
  auto report = base_report("ramsey search");
  report["family"] = family.name;
  report["instance"] = {{"A", a.a}, {"B", a.b}, {"k", a.k}, {"max_n", a.max_n}};
  for (const auto& c : res.candidates) {
    Json e{{"n", c.n}, {"skipped", c.skipped}, {"holds", c.holds}, {"nodes", c.stats.nodes}};
    if (c.counterexample)
      e["counterexample"] = coloring_json(*c.counterexample);
    report["candidates"].push_back(e);
  }
  if (res.n) {
    report["minimal_n"] = *res.n;
    std::cout << "minimal n = " << *res.n << "\n";
  } else {
    report["minimal_n"] = nullptr;
    report["status"] = "NotFoundWithinBound";
    std::cout << "no n <= " << a.max_n << " found\n";
  }
  return emit(report, res.n ? exit_ok : exit_fails);
}

// --- preadj ------------------------------------------------------------------

struct PreadjArgs
{
  std::string instance;
  std::string group_file, alphabet, bounds;
  std::size_t length = 3;
  std::size_t witnesses = 20;
};

struct BoundSpec
{
  std::optional<std::uint32_t> src, tgt;
};

BoundSpec parse_bounds(const std::string& text)
{
  BoundSpec b;
  std::string cleaned;
  for (char c : text)
    cleaned += c == ',' ? ' ' : c;
  std::istringstream in(cleaned);
  for (std::string item; in >> item;) {
    auto pos = item.find("<=");
    if (pos == std::string::npos)
      throw CLI::ValidationError("--bounds", "expected key<=N, got '" + item + "'");
    const auto key = item.substr(0, pos);
    std::uint32_t value = 0;
    try {
      value = static_cast<std::uint32_t>(std::stoul(item.substr(pos + 2)));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--bounds", "bad number in '" + item + "'");
    }
    if (key == "src" || key == "source")
      b.src = value;
    else if (key == "chains" || key == "tgt" || key == "target")
      b.tgt = value;
    else if (key == "objects")
      b.src = b.tgt = value;
    else
      throw CLI::ValidationError("--bounds", "unknown bound '" + key + "'");
  }
  return b;
}

FiniteGroup group_of(const PreadjArgs& a)
{
  return a.group_file.empty() ? FiniteGroup::cyclic(2) : load_action(a.group_file).group();
}

PreAdjunction build_instance(const std::string& name, const PreadjArgs& a, const BoundSpec& b)
{
  if (name == "identity")
    return identity_pa(ram_fragment(b.src.value_or(b.tgt.value_or(4)), limits()));
  if (name == "gr-plain-to-decorated")
    return pa_gr_plain_to_decorated(load_context(a.group_file, a.alphabet), b.src.value_or(3));
  if (name == "gr-decorated-to-plain")
    return pa_gr_decorated_to_plain(load_context(a.group_file, a.alphabet), b.src.value_or(2),
                                    b.tgt.value_or(0));
  if (name == "gr-to-dram-op")
    return pa_gr_to_dramop(group_of(a), b.tgt.value_or(6));
  if (name == "ram-to-dram-op")
    return pa_ram_to_dram_op(b.tgt.value_or(5));
  if (name == "ram-to-dram-op-literal")
    return pa_ram_to_dram_op_literal(b.tgt.value_or(5));
  if (name == "skeleton") {
    auto ram = ram_fragment(b.src.value_or(4), limits());
    std::vector<ObjectId> dup{ram->objects().front(), ram->objects().back()};
    return pa_skeleton(duplicate_objects(*ram, dup));
  }
  if (name == "omega-to-fragment") {
    auto ram = ram_fragment(b.tgt.value_or(6), limits());
    auto seq = build_nonthin_sequence(ram, a.length, search_options());
    auto pa = pa_omega_to_nonthin(ram, seq.objects);
    if (seq.exhausted)
      pa.notes.push_back("the fragment realizes only " + std::to_string(seq.objects.size()) +
                         " terms of the requested " + std::to_string(a.length));
    return pa;
  }
  if (name == "from-monotone-tukey") {
    const std::size_t n = b.src.value_or(10);
    std::vector<std::size_t> f, g;
    for (std::size_t i = 0; i <= n; ++i)
      f.push_back(2 * i);
    for (std::size_t i = 0; i <= 2 * n; ++i)
      g.push_back(i / 2);
    return pa_from_monotone_tukey(FinitePreorder::chain(n + 1), FinitePreorder::chain(2 * n + 1), f, g);
  }
  if (name == "ram-to-chain-collapse")
    return ram_to_chain_collapse(b.src.value_or(3));
  if (name.rfind("composed:", 0) == 0) {
    const auto rest = name.substr(9);
    const auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("--instance", "composed:<a>,<b> needs two names");
    auto first = build_instance(rest.substr(0, comma), a, b);
    auto second = build_instance(rest.substr(comma + 1), a, b);
    return compose_pa(first, second);
  }
  if (name.size() > 13 && name.substr(name.size() - 13) == "+constant-phi")
    return constant_phi_mutation(build_instance(name.substr(0, name.size() - 13), a, b));
  throw CLI::ValidationError("--instance", "unknown instance '" + name + "'");
}

PABounds apply_bounds(const PreAdjunction& pa, const BoundSpec& b)
{
  auto out = default_bounds(pa);
  auto keep = [](const CategoryFragment& fr, std::vector<ObjectId>& objs, std::optional<std::uint32_t> cap) {
    if (!cap || fr.kind() == FragmentKind::Thin)
      return;
    std::erase_if(objs, [&](ObjectId o) { return fr.object(o).size > *cap; });
  };
  keep(*pa.source, out.source, b.src);
  keep(*pa.target, out.target, b.tgt);
  return out;
}

int preadj_verify(const PreadjArgs& a)
{
  const auto b = parse_bounds(a.bounds);
  auto pa = build_instance(a.instance, a, b);
  const auto bounds = apply_bounds(pa, b);
  PAOptions opt;
  opt.max_checks = config.max_nodes * 20;
  auto r = verify_pa(pa, bounds, opt);
  const auto& B = *pa.source;
  const auto& C = *pa.target;

  auto report = base_report("preadj verify");
  report["instance"] = pa.name;
  report["source"] = B.name();
  report["target"] = C.name();
  for (auto x : bounds.source)
    report["bounds"]["source"].push_back(B.object(x).label);
  for (auto x : bounds.target)
    report["bounds"]["target"].push_back(C.object(x).label);
  report["instances"] = r.instances;
  report["checks"] = r.checks;
  report["failure_count"] = r.failure_count;
  report["failures"] = Json::array();
  for (const auto& f : r.failures) {
    const auto& in = f.instance;
    report["failures"].push_back({{"A", B.object(in.a).label},
                                  {"B", B.object(in.b).label},
                                  {"C", C.object(in.c).label},
                                  {"u", C.morphism(in.u).label},
                                  {"f", B.morphism(in.f).label},
                                  {"lhs", f.lhs ? B.morphism(*f.lhs).label : std::string("none")},
                                  {"candidates", f.candidates},
                                  {"certified", recheck_failure(pa, in)}});
  }
  report["witness_sample"] = Json::array();
  for (std::size_t i = 0; i < r.witnesses.size() && i < a.witnesses; ++i) {
    const auto& w = r.witnesses[i];
    report["witness_sample"].push_back({{"A", B.object(w.instance.a).label},
                                        {"B", B.object(w.instance.b).label},
                                        {"C", C.object(w.instance.c).label},
                                        {"u", C.morphism(w.instance.u).label},
                                        {"f", B.morphism(w.instance.f).label},
                                        {"v", C.morphism(w.v).label},
                                        {"from_hint", w.from_hint}});
  }
  report["hint"] = {{"tried", r.hint_tried}, {"succeeded", r.hint_succeeded}};
  report["landing_violations"] = r.landing_violations;
  report["reachability_violations"] = r.reachability_violations;
  try {
    auto card = check_card_inequality(pa, bounds.source);
    report["cardinality"] = {{"pairs", card.pairs}, {"violations", card.violations.size()}};
  } catch (const PAError& e) {
    if (e.kind() != PAErrorKind::SourceNotMono)
      throw;
    report["cardinality"] = {{"skipped", e.what()}};
  }
  report["notes"] = pa.notes;
  report["ok"] = r.ok();

  std::cout << pa.name << ": " << r.instances << " instances, " << r.failure_count
            << " failures (hint " << r.hint_succeeded << "/" << r.hint_tried << ")\n";
  for (const auto& f : report["failures"])
    std::cout << "  failure A=" << f["A"].get<std::string>() << " B=" << f["B"].get<std::string>()
              << " C=" << f["C"].get<std::string>() << " u=" << f["u"].get<std::string>()
              << " f=" << f["f"].get<std::string>() << "\n";
  for (const auto& n : pa.notes)
    std::cout << "  note: " << n << "\n";
  return emit(report, r.ok() ? exit_ok : exit_fails);
}

int preadj_list()
{
  const std::vector<std::pair<std::string, std::string>> names{
    {"identity", "Ram(1..N) -> itself"},
    {"gr-plain-to-decorated", "GR(∅,X,{e}) -> GR(A,X,G); --group/--alphabet, objects<=N"},
    {"gr-decorated-to-plain", "GR(A,X,G) -> GR(∅,Y,G), F(n) = |A| + n; src<=N"},
    {"gr-to-dram-op", "GR(∅,X,G) -> DRam^op, F(n) = n × G; src<=S,chains<=C"},
    {"ram-to-dram-op", "Ram -> DRam^op via the shifted duality; chains<=C"},
    {"ram-to-dram-op-literal", "Ram -> DRam^op via f^∂ (fails (PA)); chains<=C"},
    {"skeleton", "Ram(1..N) with duplicated ends -> its skeleton"},
    {"omega-to-fragment", "ω-truncation -> Ram(1..C) along the non-thin sequence; --length"},
    {"from-monotone-tukey", "{0..N} -> {0..2N}, n |-> 2n, companion floor(n/2)"},
    {"ram-to-chain-collapse", "Ram(1..N) -> thin chain (violates the cardinality inequality)"},
    {"composed:<a>,<b>", "composite of two instances"},
    {"<name>+constant-phi", "the instance with Φ replaced by a constant map"},
  };
  auto report = base_report("preadj list");
  for (const auto& [n, d] : names) {
    std::cout << "  " << n << "  " << d << "\n";
    report["instances"].push_back({{"name", n}, {"description", d}});
  }
  return emit(report, exit_ok);
}

// --- tukey -------------------------------------------------------------------

struct TukeyArgs
{
  std::string source = "omega", target = "omega";
  std::string map, back;
  std::size_t prefix = 20, steps = 30;
};

GeneratedPreorder generated(const std::string& spec)
{
  if (spec == "omega")
    return GeneratedPreorder::omega();
  if (spec == "omega2")
    return GeneratedPreorder::omega2();
  return GeneratedPreorder::finite(load_preorder(spec), spec);
}

std::vector<std::string> variables_of(const std::string& spec)
{
  return spec == "omega2" ? std::vector<std::string>{"i", "j"} : std::vector<std::string>{"n"};
}

IndexMap expression_map(const std::string& text, const std::string& source_spec,
                        const GeneratedPreorder& a, const GeneratedPreorder& b)
{
  auto expr = std::make_shared<MapExpression>(MapExpression::parse(text, variables_of(source_spec)));
  return [expr, a, b](std::size_t x) -> std::size_t {
    const auto out = (*expr)(a.coords(x));
    auto y = b.index_of(out);
    if (!y)
      throw PreorderError(PreorderErrorKind::BadMap,
                          "map sends " + a.label(x) + " outside " + b.name,
                          static_cast<std::int64_t>(x));
    return *y;
  };
}

int tukey_check(const TukeyArgs& a)
{
  const auto A = load_preorder(a.source);
  const auto B = load_preorder(a.target);
  auto report = base_report("tukey check");
  bool ok = true;
  auto subset_json = [](const FinitePreorder& p, std::optional<Subset> m) -> Json {
    if (!m)
      return nullptr;
    Json out = Json::array();
    for (auto x : subset_elements(*m))
      out.push_back(p.name(x));
    return out;
  };
  auto pa = preorder_predicates(A);
  report["source"] = {{"size", A.size()},
                      {"directed", pa.directed},
                      {"classes", pa.equivalence_classes.size()}};
  if (!a.map.empty()) {
    auto f = parse_index_list(text_or_file(a.map));
    auto v = is_tukey_map(f, A, B);
    report["tukey"] = {{"holds", v.holds}, {"witness", subset_json(A, v.witness)}};
    report["monotone"] = is_monotone_map(f, A, B);
    std::cout << "f is " << (v.holds ? "" : "not ") << "Tukey\n";
    ok = ok && v.holds;
  }
  if (!a.back.empty()) {
    auto g = parse_index_list(text_or_file(a.back));
    auto v = is_cofinal_map(g, B, A);
    report["cofinal"] = {{"holds", v.holds}, {"witness", subset_json(B, v.witness)}};
    std::cout << "g is " << (v.holds ? "" : "not ") << "cofinal\n";
    ok = ok && v.holds;
  }
  return emit(report, ok ? exit_ok : exit_fails);
}

int tukey_companion(const TukeyArgs& a)
{
  const auto A = generated(a.source);
  const auto B = generated(a.target);
  auto f = expression_map(text_or_file(a.map), a.source, A, B);
  auto r = cofinal_companion(f, A, B, a.prefix);
  auto report = base_report("tukey companion");
  report["semantics"] = "prefix-certified";
  report["prefix"] = r.prefix;
  for (std::size_t y = 0; y < r.g.size(); ++y)
    report["g"].push_back({{"b", B.label(y)}, {"g(b)", A.label(r.g[y])}});
  report["pairs_checked"] = r.pairs_checked;
  report["implication_holds"] = r.implication_holds();
  if (r.violation)
    report["violation"] = {{"a", A.label(r.violation->first)}, {"b", B.label(r.violation->second)}};
  report["warnings"] = r.warnings;
  std::cout << "companion on a prefix of " << r.prefix << ": implication "
            << (r.implication_holds() ? "holds" : "fails") << " on " << r.pairs_checked
            << " pairs\n";
  for (const auto& w : r.warnings)
    std::cout << "  warning: " << w << "\n";
  return emit(report, r.implication_holds() ? exit_ok : exit_fails);
}

int tukey_monotonize(const TukeyArgs& a)
{
  const auto A = generated(a.source);
  const auto B = generated(a.target);
  auto f = expression_map(text_or_file(a.map), a.source, A, B);
  auto t = monotonize(f, A, B, a.steps);
  auto c = check_trace(t, f, A, B);
  auto report = base_report("tukey monotonize");
  report["semantics"] = "prefix-certified";
  report["steps"] = t.S.size();
  for (std::size_t n = 0; n < t.S.size(); ++n) {
    Json block = Json::array();
    for (auto x : t.S[n])
      block.push_back(A.label(x));
    report["rounds"].push_back({{"j", t.j[n]}, {"s", A.label(t.s[n])}, {"S", block}, {"b", B.label(t.b[n])}});
  }
  report["invariants"] = {{"s_strictly_increasing", c.s_strictly_increasing},
                          {"partition", c.partition},
                          {"order_respecting", c.order_respecting},
                          {"fhat_blocks", c.fhat_blocks},
                          {"fhat_monotone", c.fhat_monotone},
                          {"membership_agrees", c.membership_agrees}};
  report["messages"] = c.messages;
  report["notes"] = t.notes;
  std::cout << t.S.size() << " rounds over " << t.fhat.size() << " elements: invariants "
            << (c.ok() ? "hold" : "FAIL") << "\n";
  for (const auto& m : c.messages)
    std::cout << "  " << m << "\n";
  return emit(report, c.ok() ? exit_ok : exit_fails);
}

// --- golden ------------------------------------------------------------------

struct GoldenArgs
{
  std::vector<int> only;
  std::string mutate;
  bool timings = false;
};

int golden(const GoldenArgs& a)
{
  auto hooks = default_hooks();
  if (a.mutate == "substitution")
    hooks.substitute = substitute_without_action;
  else if (a.mutate == "rigidity")
    hooks.enumerate_rsurj = enumerate_all_surjections;
  else if (!a.mutate.empty())
    throw CLI::ValidationError("--mutate", "expected 'substitution' or 'rigidity'");
  auto results = run_golden_suite(hooks, a.only);
  auto report = base_report("golden");
  if (!a.mutate.empty())
    report["mutation"] = a.mutate;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    Json e{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
    if (a.timings)
      e["seconds"] = r.seconds;
    report["criteria"].push_back(e);
    std::cout << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.id << " " << r.title << ": "
              << r.detail << "\n";
  }
  report["passed"] = all;
  return emit(report, all ? exit_ok : exit_fails);
}

template <typename Kind>
bool is_budget(const KindedError<Kind>&)
{
  return false;
}
bool is_budget(const KindedError<ArrowErrorKind>& e) { return e.kind() == ArrowErrorKind::BudgetExceeded; }
bool is_budget(const KindedError<PAErrorKind>& e) { return e.kind() == PAErrorKind::BudgetExceeded; }
bool is_budget(const KindedError<FragmentErrorKind>& e)
{
  return e.kind() == FragmentErrorKind::ResourceBound;
}

} // namespace

int main(int argc, char** argv)
{
  if (const char* env = std::getenv("RAMCAT_BUDGET_NODES")) {
    try {
      config.max_nodes = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: RAMCAT_BUDGET_NODES must be a positive integer\n";
      return exit_usage;
    }
  }

  CLI::App app{"ramcat: parameter words, rigid surjections, Ramsey arrows and pre-adjunctions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--report", config.report, "Write the JSON report here");
  app.add_flag("--json", config.json, "Print the JSON report on stdout");
  app.add_option("--max-nodes", config.max_nodes, "Search node budget")->check(CLI::PositiveNumber);
  app.add_option("--max-colorings", config.max_colorings, "Exhaustive coloring budget")
    ->check(CLI::PositiveNumber);
  app.add_option("--max-morphisms", config.max_morphisms, "Fragment size cap")->check(CLI::PositiveNumber);
  app.add_option("--workers", config.workers, "Search workers")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", config.seed, "Recorded in every report");

  std::function<int()> action;

  // words
  WordsArgs wa;
  auto* words = app.add_subcommand("words", "G-decorated parameter words")->require_subcommand(1);
  auto words_common = [&](CLI::App* sub) {
    sub->add_option("--context", wa.context_file, "Group/action JSON file");
    sub->add_option("--alphabet", wa.alphabet, "Letters with the trivial action, e.g. a,b");
  };
  auto* wv = words->add_subcommand("validate", "Validate words (text or files)");
  words_common(wv);
  wv->add_option("-m", wa.m, "Declared parameter count");
  wv->add_option("words", wa.inputs)->required();
  wv->callback([&] { action = [&] { return words_validate(wa); }; });
  auto* wc = words->add_subcommand("compose", "u · v · ...");
  words_common(wc);
  wc->add_option("words", wa.inputs)->required();
  wc->callback([&] { action = [&] { return words_compose(wa); }; });
  auto* we = words->add_subcommand("enumerate", "List W^n_m(A, G)");
  words_common(we);
  we->add_option("-m", wa.m)->required();
  we->add_option("-n", wa.n)->required();
  we->add_option("--limit", wa.limit, "Words to print");
  we->callback([&] { action = [&] { return words_enumerate(wa); }; });

  // rsurj
  RsurjArgs ra;
  auto* rs = app.add_subcommand("rsurj", "Rigid surjections")->require_subcommand(1);
  auto* rv = rs->add_subcommand("validate", "Validate image lists like (1,2,1)");
  rv->add_option("--cod", ra.cod, "Codomain size");
  rv->add_option("maps", ra.inputs)->required();
  rv->callback([&] { action = [&] { return rsurj_validate(ra); }; });
  auto* rc = rs->add_subcommand("compose", "g ∘ f");
  rc->add_option("maps", ra.inputs)->required()->expected(2);
  rc->callback([&] { action = [&] { return rsurj_compose(ra); }; });
  auto* re = rs->add_subcommand("enumerate", "List RSurj(n, m)");
  re->add_option("-n", ra.n)->required();
  re->add_option("-m", ra.m)->required();
  re->add_option("--limit", ra.limit);
  re->callback([&] { action = [&] { return rsurj_enumerate(ra); }; });
  auto* rd = rs->add_subcommand("dual", "f^∂(i) = min f^-1(i)");
  rd->add_flag("--shifted", ra.shifted, "i |-> min f^-1(i+1) - 1 instead");
  rd->add_option("maps", ra.inputs)->required();
  rd->callback([&] { action = [&] { return rsurj_dual(ra); }; });

  // category
  CategoryArgs ca;
  auto* cat = app.add_subcommand("category", "Category fragments")->require_subcommand(1);
  auto cat_common = [&](CLI::App* sub) {
    sub->add_option("--kind", ca.kind, "ram, dram, dram-op, gr or vec");
    sub->add_option("--max", ca.max, "Objects 1..max");
    sub->add_option("--context", ca.context_file, "Group/action JSON (gr)");
    sub->add_option("--alphabet", ca.alphabet, "Letters with the trivial action (gr)");
    sub->add_option("--field", ca.field, "Prime field size (vec)");
    sub->add_option("--duplicate", ca.duplicate, "Add isomorphic copies of these objects");
  };
  auto* cb = cat->add_subcommand("build", "Build and summarize");
  cat_common(cb);
  cb->callback([&] { action = [&] { return category_build(ca); }; });
  auto* cc = cat->add_subcommand("check", "Category laws and structure");
  cat_common(cc);
  cc->callback([&] { action = [&] { return category_check(ca); }; });
  auto* cs = cat->add_subcommand("skeleton", "Skeleton");
  cat_common(cs);
  cs->callback([&] { action = [&] { return category_skeleton(ca); }; });

  // ramsey
  RamseyArgs rma;
  auto* ram = app.add_subcommand("ramsey", "Ramsey arrows")->require_subcommand(1);
  auto ram_common = [&](CLI::App* sub) {
    sub->add_option("--family", rma.family, "ram, dram-op or gr");
    sub->add_option("--context", rma.context_file, "Group/action JSON (gr)");
    sub->add_option("--alphabet", rma.alphabet, "Letters with the trivial action (gr)");
    sub->add_option("-A", rma.a)->check(CLI::PositiveNumber);
    sub->add_option("-B", rma.b)->check(CLI::PositiveNumber);
    sub->add_option("-k", rma.k)->check(CLI::Range(1u, 255u));
  };
  auto* rmc = ram->add_subcommand("check", "C -> (B)^A_k");
  ram_common(rmc);
  rmc->add_option("-C", rma.c)->check(CLI::PositiveNumber);
  rmc->add_option("--engine", rma.engine, "search or exhaustive");
  rmc->callback([&] { action = [&] { return ramsey_check(rma); }; });
  auto* rms = ram->add_subcommand("search", "Least n with n -> (B)^A_k");
  ram_common(rms);
  rms->add_option("--max-n", rma.max_n);
  rms->callback([&] { action = [&] { return ramsey_search(rma); }; });

  // preadj
  PreadjArgs pa;
  auto* pre = app.add_subcommand("preadj", "Pre-adjunctions")->require_subcommand(1);
  auto pre_common = [&](CLI::App* sub) {
    sub->add_option("--group", pa.group_file, "Group/action JSON file");
    sub->add_option("--alphabet", pa.alphabet, "Letters with the trivial action");
    sub->add_option("--bounds", pa.bounds, "e.g. src<=2,chains<=6 or objects<=3");
    sub->add_option("--length", pa.length, "Sequence length (omega-to-fragment)");
    sub->add_option("--witnesses", pa.witnesses, "Witnesses to include in the report");
  };
  auto* pv = pre->add_subcommand("verify", "Check (PA) exhaustively");
  pre_common(pv);
  pv->add_option("--instance", pa.instance)->required();
  pv->callback([&] { action = [&] { return preadj_verify(pa); }; });
  std::string first, second;
  auto* pc = pre->add_subcommand("compose", "Verify a composite");
  pre_common(pc);
  pc->add_option("--first", first)->required();
  pc->add_option("--second", second)->required();
  pc->callback([&] {
    action = [&] {
      pa.instance = "composed:" + first + "," + second;
      return preadj_verify(pa);
    };
  });
  auto* pl = pre->add_subcommand("list", "Instance names");
  pl->callback([&] { action = [&] { return preadj_list(); }; });

  // tukey
  TukeyArgs ta;
  auto* tk = app.add_subcommand("tukey", "Tukey and cofinal maps")->require_subcommand(1);
  auto* tc = tk->add_subcommand("check", "Finite preorders: Tukey / cofinal maps");
  tc->add_option("--source", ta.source, "Preorder JSON (A)")->required();
  tc->add_option("--target", ta.target, "Preorder JSON (B)")->required();
  tc->add_option("--map", ta.map, "f : A -> B as an index list, e.g. 0,0");
  tc->add_option("--back", ta.back, "g : B -> A as an index list");
  tc->callback([&] { action = [&] { return tukey_check(ta); }; });
  auto* tco = tk->add_subcommand("companion", "g(b) from the fibers of a Tukey map f");
  tco->add_option("--source", ta.source, "omega, omega2 or a preorder file");
  tco->add_option("--target", ta.target, "omega, omega2 or a preorder file");
  tco->add_option("--map", ta.map, "Expression or expression file")->required();
  tco->add_option("--prefix", ta.prefix);
  tco->callback([&] { action = [&] { return tukey_companion(ta); }; });
  auto* tm = tk->add_subcommand("monotonize", "Monotone replacement of f on a prefix");
  tm->add_option("--preorder,--source", ta.source, "omega, omega2 or a preorder file");
  tm->add_option("--target", ta.target, "omega, omega2 or a preorder file");
  tm->add_option("--map", ta.map, "Expression or expression file")->required();
  tm->add_option("--steps", ta.steps);
  tm->callback([&] { action = [&] { return tukey_monotonize(ta); }; });

  // golden
  GoldenArgs ga;
  auto* gd = app.add_subcommand("golden", "Run the acceptance criteria");
  gd->add_option("--only", ga.only, "Criterion ids")->delimiter(',');
  gd->add_option("--mutate", ga.mutate, "substitution or rigidity");
  gd->add_flag("--timings", ga.timings, "Include run times in the report");
  gd->callback([&] { action = [&] { return golden(ga); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    return action();
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ArrowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_budget(e) ? exit_budget : exit_usage;
  } catch (const PAError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_budget(e) ? exit_budget : exit_usage;
  } catch (const FragmentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_budget(e) ? exit_budget : exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
