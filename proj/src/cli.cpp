// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coopmat/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "coopmat/brute_force.hpp"
#include "coopmat/coloring.hpp"
#include "coopmat/corpus.hpp"
#include "coopmat/errors.hpp"
#include "coopmat/games.hpp"
#include "coopmat/json_io.hpp"
#include "coopmat/partition.hpp"

namespace coopmat {

namespace {

struct Options {
  std::string file;
  std::string game_kind;
  bool json = false;
  std::uint64_t seed = 0;
  std::optional<int> k;
  std::string rules;
  std::string first;
  int parallel = 1;
  std::string subset;
  std::string replay;
};

class InputError : public Error {
 public:
  using Error::Error;
};

// rng() % m keeps seeded output identical across standard libraries.
int draw(std::mt19937_64& rng, int m) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(m));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Subset parse_subset_flag(const std::string& text, int n) {
  Subset s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int e = -1;
    try {
      std::size_t used = 0;
      e = std::stoi(item, &used);
      if (used != item.size()) e = -1;
    } catch (const std::exception&) {
      e = -1;
    }
    if (e < 0 || e >= n) throw InputError("bad element \"" + item + "\" in --subset");
    s.insert(e);
  }
  return s;
}

std::vector<Permutation> random_permutations(int count, int n,
                                             std::mt19937_64& rng) {
  std::vector<Permutation> perms;
  for (int p = 0; p < count; ++p) {
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(image[i], image[draw(rng, i + 1)]);
    perms.emplace_back(std::move(image));
  }
  return perms;
}

ListAssignment random_lists(int n, int t, int k, std::mt19937_64& rng) {
  std::vector<std::vector<int>> lists(n);
  for (int e = 0; e < n; ++e) {
    std::vector<int> colors(t);
    for (int c = 0; c < t; ++c) colors[c] = c + 1;
    for (int i = 0; i < k; ++i) std::swap(colors[i], colors[i + draw(rng, t - i)]);
    lists[e].assign(colors.begin(), colors.begin() + k);
  }
  return ListAssignment(t, k, std::move(lists));
}

std::string prefix(std::size_t count, std::size_t i) {
  return count == 1 ? "" : "matroid " + std::to_string(i + 1) + ": ";
}

// ---- commands ------------------------------------------------------------

int cmd_rank(const Options& opt, std::ostream& out) {
  const SystemFile file = system_from_json(read_json_file(opt.file));
  const std::vector<Matroid> ms = file.build();
  Subset s = Subset::full(file.n);
  if (!opt.subset.empty()) {
    s = parse_subset_flag(opt.subset, file.n);
  } else if (file.subset) {
    s = subset_from_json(*file.subset, file.n);
  }
  std::vector<int> ranks;
  for (const Matroid& m : ms) ranks.push_back(rank(m, s & m.support()));
  if (opt.json) {
    emit(out, {{"command", "rank"}, {"subset", to_json(s)}, {"ranks", ranks},
               {"system", file.raw}});
  } else {
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      out << prefix(ranks.size(), i) << "rank: " << ranks[i] << '\n';
    }
  }
  return kExitOk;
}

int cmd_chromatic(const Options& opt, std::ostream& out) {
  const SystemFile file = system_from_json(read_json_file(opt.file));
  const std::vector<Matroid> ms = file.build();
  Json results = Json::array();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const int chi = chromatic_number(ms[i]);
    Json r = {{"matroid", i + 1}, {"chromatic_number", chi}};
    std::optional<ChromaticFormula> formula;
    if (ms[i].support().size() <= kMaxFormulaSize) {
      formula = chromatic_number_formula_bf(ms[i]);
      r["formula_value"] = formula->value;
      r["argmax"] = to_json(formula->argmax);
    }
    results.push_back(r);
    if (!opt.json) {
      out << prefix(ms.size(), i) << "chromatic number: " << chi << '\n';
      if (formula) {
        out << prefix(ms.size(), i) << "argmax subset: "
            << formula->argmax.to_string() << " (formula value "
            << formula->value << ")\n";
      }
    }
  }
  if (opt.json) {
    emit(out, {{"command", "chromatic"}, {"results", results}, {"system", file.raw}});
  }
  return kExitOk;
}

int cmd_partition(const Options& opt, std::ostream& out) {
  const SystemFile file = system_from_json(read_json_file(opt.file));
  const std::vector<Matroid> ms = file.build();
  Subset target = Subset::full(file.n);
  if (file.subset) target = subset_from_json(*file.subset, file.n);
  auto result = partition_ground_set(full_system(ms), target);
  Json j = {{"command", "partition"}, {"target", to_json(target)},
            {"system", file.raw}};
  int code = kExitOk;
  if (auto* state = std::get_if<PartitionState>(&result)) {
    Json parts = Json::array();
    for (Subset p : state->parts()) parts.push_back(to_json(p));
    j["status"] = "covered";
    j["parts"] = parts;
    if (!opt.json) {
      out << "covered " << target.to_string() << '\n';
      for (int i = 0; i < state->slots(); ++i) {
        out << "part " << i + 1 << ": " << state->part(i).to_string() << '\n';
      }
    }
  } else {
    const auto& cert = std::get<DeficiencyCertificate>(result);
    j["status"] = "deficient";
    j["certificate"] = to_json(cert);
    code = kExitInfeasible;
    if (!opt.json) {
      out << "no partition: X = " << cert.x.to_string() << " has rank sum "
          << cert.rank_sum() << " < " << cert.x.size() << '\n';
    }
  }
  if (opt.json) emit(out, j);
  return code;
}

int cmd_check_k(const Options& opt, std::ostream& out) {
  const SystemFile file = system_from_json(read_json_file(opt.file));
  const std::vector<Matroid> ms = file.build();
  if (ms.empty()) throw InputError("the file has no matroid");
  const std::optional<int> k = opt.k ? opt.k : file.k;
  if (!k || *k < 1) throw InputError("check-k needs --k >= 1");
  auto verdict = is_k_colorable(ms.front(), *k);
  Json j = {{"command", "check-k"}, {"k", *k}, {"system", file.raw}};
  int code = kExitOk;
  if (auto* f = std::get_if<Coloring>(&verdict)) {
    j["status"] = "colorable";
    j["coloring"] = coloring_to_json(*f, std::vector<Matroid>(*k, ms.front()));
    if (!opt.json) {
      out << *k << "-colorable\n";
      for (int c = 1; c <= *k; ++c) {
        out << "color " << c << ": " << f->color_class(c).to_string() << '\n';
      }
    }
  } else {
    const auto& cert = std::get<DeficiencyCertificate>(verdict);
    j["status"] = "not-colorable";
    j["certificate"] = to_json(cert);
    code = kExitInfeasible;
    if (!opt.json) {
      out << "not " << *k << "-colorable: X = " << cert.x.to_string()
          << " has rank " << (cert.ranks.empty() ? 0 : cert.ranks.front())
          << " < " << cert.x.size() << "/" << *k << '\n';
    }
  }
  if (opt.json) emit(out, j);
  return code;
}

// Shared by coop-color and list-color.
int list_coloring_report(const Options& opt, std::ostream& out,
                         const std::string& command, const SystemFile& file,
                         const std::vector<Matroid>& ms,
                         const ListAssignment& lists) {
  Json j = {{"command", command}, {"lists", to_json(lists)},
            {"system", file.raw}};
  // Name the offending matroid ourselves; the solver's certificate alone
  // does not say which hypothesis failed.
  if (file.n > 0) {
    for (std::size_t i = 0; i < ms.size(); ++i) {
      auto verdict = is_k_colorable(ms[i], std::max(1, lists.list_size()));
      if (auto* cert = std::get_if<DeficiencyCertificate>(&verdict)) {
        j["status"] = "precondition-violated";
        j["reason"] = "not-k-colorable";
        j["matroid"] = i + 1;
        j["certificate"] = to_json(*cert);
        if (opt.json) {
          emit(out, j);
        } else {
          out << "matroid " << i + 1 << " is not " << lists.list_size()
              << "-colorable: X = " << cert->x.to_string() << '\n';
        }
        return kExitInfeasible;
      }
    }
  }
  try {
    const Coloring f = coop_list_color(ms, lists, PreconditionCheck::kNever);
    j["status"] = "colored";
    j["coloring"] = coloring_to_json(f, ms);
    if (opt.json) {
      emit(out, j);
    } else {
      for (int e = 0; e < f.size(); ++e) {
        out << e << " -> " << f.color(e) << '\n';
      }
    }
    return kExitOk;
  } catch (const PreconditionViolated& e) {
    j["status"] = "precondition-violated";
    j["reason"] = "lists";
    j["certificate"] = to_json(e.certificate());
    if (opt.json) {
      emit(out, j);
    } else {
      out << e.what() << '\n';
    }
    return kExitInfeasible;
  }
}

int cmd_coop_color(const Options& opt, std::ostream& out) {
  const SystemFile file = system_from_json(read_json_file(opt.file));
  const std::vector<Matroid> ms = file.build();
  const int k = static_cast<int>(ms.size());
  return list_coloring_report(opt, out, "coop-color", file, ms,
                              ListAssignment::full(file.n, k));
}

int cmd_list_color(const Options& opt, std::ostream& out) {
  const SystemFile file = system_from_json(read_json_file(opt.file));
  const std::vector<Matroid> ms = file.build();
  const int t = static_cast<int>(ms.size());
  std::optional<ListAssignment> lists;
  if (file.lists) {
    lists = lists_from_json(*file.lists, file.n, t);
  } else {
    const std::optional<int> k = opt.k ? opt.k : file.k;
    if (!k || *k < 1 || *k > t) {
      throw InputError("list-color needs lists in the file or --k in 1..t");
    }
    std::mt19937_64 rng(opt.seed);
    lists = random_lists(file.n, t, *k, rng);
  }
  return list_coloring_report(opt, out, "list-color", file, ms, *lists);
}

int cmd_arbor_perm(const Options& opt, std::ostream& out) {
  const SystemFile file = system_from_json(read_json_file(opt.file));
  if (file.specs.empty() ||
      !std::holds_alternative<GraphicSpec>(file.specs.front().value)) {
    throw InputError("arbor-perm needs a graphic matroid");
  }
  const GraphicSpec& graph = std::get<GraphicSpec>(file.specs.front().value);
  const int n = static_cast<int>(graph.edges.size());
  std::vector<Permutation> perms;
  if (file.permutations) {
    if (!file.permutations->is_array()) throw InputError("permutations must be an array");
    for (const Json& p : *file.permutations) {
      Permutation pi(p.get<std::vector<int>>());
      if (pi.size() != n) throw InputError("permutation size differs from |E|");
      perms.push_back(std::move(pi));
    }
  } else {
    const int k = opt.k.value_or(file.k.value_or(2));
    if (k < 1) throw InputError("--k must be at least 1");
    std::mt19937_64 rng(opt.seed);
    perms = random_permutations(k - 1, n, rng);
  }
  Json perms_j = Json::array();
  for (const Permutation& p : perms) perms_j.push_back(p.image());
  Json j = {{"command", "arbor-perm"}, {"permutations", perms_j},
            {"system", file.raw}};
  try {
    const std::vector<Subset> classes =
        forest_permutation_decomposition(graph, perms);
    const Matroid forest = build_matroid(MatroidSpec{graph});
    Json cls = Json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const Subset image = i == 0 ? classes[i] : perms[i - 1](classes[i]);
      cls.push_back({{"elements", to_json(classes[i])},
                     {"image", to_json(image)},
                     {"image_is_forest", forest.is_independent(image)}});
      if (!opt.json) {
        out << "class " << i + 1 << ": " << classes[i].to_string()
            << (i == 0 ? "" : " image " + image.to_string()) << " forest: "
            << (forest.is_independent(image) ? "yes" : "no") << '\n';
      }
    }
    j["status"] = "decomposed";
    j["classes"] = cls;
    if (opt.json) emit(out, j);
    return kExitOk;
  } catch (const ArboricityTooHigh& e) {
    j["status"] = "arboricity-too-high";
    j["certificate"] = to_json(e.certificate());
    if (opt.json) {
      emit(out, j);
    } else {
      out << e.what() << '\n';
    }
    return kExitInfeasible;
  }
}

struct GameSetup {
  std::string kind;
  int k = 0;
  PaintingRules rules = PaintingRules::kNoDeadElement;
  Player first = Player::kAnn;
};

GameSetup game_setup(const Options& opt, const SystemFile& file,
                     const std::string& kind) {
  GameSetup g;
  g.kind = kind;
  g.k = opt.k.value_or(file.k.value_or(static_cast<int>(file.specs.size())));
  g.rules = !opt.rules.empty() ? rules_from_string(opt.rules)
                               : file.rules.value_or(PaintingRules::kNoDeadElement);
  g.first = !opt.first.empty() ? player_from_string(opt.first)
                               : file.first.value_or(Player::kAnn);
  return g;
}

template <class Game>
Json solve_and_describe(const Game& game, GameOutcome& outcome) {
  outcome = solve_game(game);
  Json j = to_json(outcome, true);
  j["transcript"] = to_json(principal_line(game, outcome));
  return j;
}

int cmd_game(const Options& opt, std::ostream& out) {
  const SystemFile file = system_from_json(read_json_file(opt.file));
  const std::vector<Matroid> ms = file.build();
  const GameSetup g = game_setup(opt, file, opt.game_kind);
  GameOutcome outcome;
  Json result;
  if (g.kind == "indicated") {
    result = solve_and_describe(IndicatedGame(ms), outcome);
  } else if (g.kind == "marking") {
    result = solve_and_describe(MarkingGame(ms, g.first), outcome);
    result["first"] = to_string(g.first);
  } else {
    result = solve_and_describe(PaintingGame(ms, g.k, g.rules), outcome);
    result["k"] = g.k;
    result["rules"] = to_string(g.rules);
  }
  result["command"] = "game";
  result["game"] = g.kind;
  result["system"] = file.raw;
  if (opt.json) {
    emit(out, result);
  } else {
    out << g.kind << " game: " << to_string(outcome.winner) << " wins ("
        << outcome.explored_states << " states explored)\n";
    for (const Json& step : result["transcript"]) {
      const Json& m = step["move"];
      out << "  " << step["mover"].get<std::string>() << ": ";
      if (g.kind == "painting") {
        out << m["set"].dump();
      } else if (m["element"].get<int>() >= 0 && m["color"].get<int>() > 0) {
        out << "color element " << m["element"] << " with " << m["color"];
      } else if (m["element"].get<int>() >= 0) {
        out << "point at element " << m["element"];
      } else {
        out << "color " << m["color"];
      }
      out << '\n';
    }
  }
  return outcome.winner == Player::kAnn ? kExitOk : kExitInfeasible;
}

std::vector<ConjectureFamily> builtin_catalog(int max_k) {
  std::vector<MatroidSpec> pool;
  for (const CorpusEntry& entry : builtin_corpus()) {
    if (spec_ground_size(entry.spec) <= kMaxPaintingElements) {
      pool.push_back(entry.spec);
    }
  }
  std::vector<ConjectureFamily> catalog;
  for (int k = 1; k <= max_k; ++k) catalog.push_back({k, pool, false});
  return catalog;
}

std::vector<ConjectureFamily> catalog_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("families") || !j["families"].is_array()) {
    throw InputError("catalog needs a \"families\" array");
  }
  std::vector<ConjectureFamily> catalog;
  for (const Json& f : j["families"]) {
    if (!f.is_object() || !f.contains("k") || !f.contains("pool")) {
      throw InputError("each family needs \"k\" and \"pool\"");
    }
    ConjectureFamily fam;
    fam.k = f["k"].get<int>();
    if (fam.k < 1) throw InputError("family k must be at least 1");
    for (const Json& s : f["pool"]) fam.pool.push_back(spec_from_json(s));
    fam.single_matroid_only = f.value("single_matroid_only", false);
    catalog.push_back(std::move(fam));
  }
  return catalog;
}

Json record_to_json(const ConjectureRecord& rec,
                    const std::vector<ConjectureFamily>& catalog,
                    PaintingRules rules) {
  Json system = Json::array();
  for (std::size_t m : rec.members) {
    system.push_back(to_json(catalog[rec.family].pool[m]));
  }
  Json j = {{"index", rec.index},     {"family", rec.family},
            {"members", rec.members}, {"k", rec.k},
            {"rules", to_string(rules)},
            {"single_matroid", rec.single_matroid},
            {"system", system}};
  if (rec.skipped) {
    j["status"] = "skipped";
    j["reason"] = rec.skip_reason;
  } else {
    j["status"] = "solved";
    j["winner"] = to_string(rec.winner);
    j["explored_states"] = rec.explored_states;
    if (!rec.transcript.empty()) j["transcript"] = to_json(rec.transcript);
  }
  return j;
}

int cmd_conjecture_search(const Options& opt, std::ostream& out) {
  const std::vector<ConjectureFamily> catalog =
      opt.file.empty() ? builtin_catalog(opt.k.value_or(2))
                       : catalog_from_json(read_json_file(opt.file));
  const PaintingRules rules = opt.rules.empty() ? PaintingRules::kNoDeadElement
                                                : rules_from_string(opt.rules);
  if (opt.parallel < 1) throw InputError("--parallel must be at least 1");
  const ConjectureReport report =
      painting_conjecture_search(catalog, rules, opt.parallel);
  const Json summary = {{"instances", report.records.size()},
                        {"solved", report.solved},
                        {"skipped", report.skipped},
                        {"ann_wins", report.ann_wins},
                        {"ben_wins", report.ben_wins},
                        {"base_case_violations", report.base_case_violations},
                        {"rules", to_string(rules)}};
  if (opt.json) {
    for (const ConjectureRecord& rec : report.records) {
      out << record_to_json(rec, catalog, rules).dump() << '\n';
    }
    out << Json{{"summary", summary}}.dump() << '\n';
  } else {
    out << "instances: " << report.records.size() << ", solved: " << report.solved
        << ", skipped: " << report.skipped << ", ann wins: " << report.ann_wins
        << ", ben wins: " << report.ben_wins
        << ", base-case violations: " << report.base_case_violations << '\n';
    for (const ConjectureRecord& rec : report.records) {
      if (!rec.skipped && rec.winner == Player::kBen) {
        out << "ben wins instance " << rec.index << " (family " << rec.family
            << ", k " << rec.k << ")\n";
      }
    }
  }
  return report.ben_wins == 0 ? kExitOk : kExitInfeasible;
}

// ---- verify --------------------------------------------------------------

struct Check {
  explicit Check(std::string n) : name(std::move(n)) {}
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
};

std::vector<Check> verification_suite(std::uint64_t seed) {
  std::vector<Check> checks;
  const auto& corpus = builtin_corpus();
  std::vector<Matroid> ms;
  for (const CorpusEntry& e : corpus) ms.push_back(build_matroid(e.spec));

  Check axioms{"matroid axioms"};
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].ground_size() > kMaxAxiomCheckSize) continue;
    ++axioms.cases;
    const AxiomReport r = verify_matroid_axioms(ms[i]);
    if (!r.ok()) {
      axioms.passed = false;
      axioms.detail = corpus[i].name + ": " + r.describe();
    }
  }
  checks.push_back(axioms);

  Check broken{"broken predicate rejected"};
  const AxiomReport r = verify_matroid_axioms(
      Matroid::from_predicate(3, [](Subset s) { return s.size() != 2; }));
  broken.cases = 1;
  broken.passed = r.violation == AxiomReport::Violation::kHeredity;
  checks.push_back(broken);

  Check ranks{"greedy rank = exhaustive rank"};
  for (const Matroid& m : ms) {
    if (m.ground_size() > 10) continue;
    for_each_subset(m.ground(), [&](Subset s) {
      ++ranks.cases;
      if (rank(m, s) != bf::max_independent_size(m, s)) ranks.passed = false;
    });
  }
  checks.push_back(ranks);

  Check chi{"chromatic number = max ceil(|A|/r(A))"};
  for (const Matroid& m : ms) {
    ++chi.cases;
    if (chromatic_number(m) != chromatic_number_formula_bf(m).value) chi.passed = false;
  }
  checks.push_back(chi);

  Check kcol{"k-colorability = subset rank criterion"};
  for (const Matroid& m : ms) {
    if (m.ground_size() > 12) continue;
    for (int k = 1; k <= 3; ++k) {
      ++kcol.cases;
      const bool yes = std::holds_alternative<Coloring>(is_k_colorable(m, k));
      if (yes != !bf::k_colorability_violation(m, k)) kcol.passed = false;
    }
  }
  checks.push_back(kcol);

  std::mt19937_64 rng(seed);
  std::map<int, std::vector<std::size_t>> by_size;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].ground_size() <= 8) by_size[ms[i].ground_size()].push_back(i);
  }
  std::vector<int> sizes;
  for (const auto& [n, group] : by_size) sizes.push_back(n);

  Check urank{"union rank = matroid union formula"};
  Check lists{"list coloring feasibility = exhaustive search"};
  for (int trial = 0; trial < 60; ++trial) {
    const int n = sizes[draw(rng, static_cast<int>(sizes.size()))];
    const auto& group = by_size[n];
    const int t = 1 + draw(rng, 3);
    MatroidSystem system;
    std::vector<Matroid> members;
    for (int i = 0; i < t; ++i) {
      const Matroid& m = ms[group[draw(rng, static_cast<int>(group.size()))]];
      members.push_back(m);
      system.push_back({m, Subset(rng()) & m.ground()});
    }
    const Subset a = Subset(rng()) & Subset::full(n);
    ++urank.cases;
    if (union_rank(system, a) != union_rank_formula_bf(system, a).value) {
      urank.passed = false;
    }
    const int k = 1 + draw(rng, t);
    const ListAssignment l = random_lists(n, t, k, rng);
    ++lists.cases;
    bool solver_yes = true;
    try {
      const Coloring f = coop_list_color(members, l, PreconditionCheck::kNever);
      if (!is_valid_list_coloring(members, l, f)) lists.passed = false;
    } catch (const PreconditionViolated&) {
      solver_yes = false;
    }
    if (solver_yes != bf::coop_colorable_bf(members, l).has_value()) {
      lists.passed = false;
    }
  }
  checks.push_back(urank);
  checks.push_back(lists);
  return checks;
}

bool replay_partition(const Json& j, const SystemFile& file,
                      const std::vector<Matroid>& ms) {
  const Subset target = subset_from_json(j.at("target"), file.n);
  if (j.at("status") == "deficient") {
    return certificate_holds(full_system(ms),
                             certificate_from_json(j.at("certificate"), file.n));
  }
  const Json& parts = j.at("parts");
  if (parts.size() != ms.size()) return false;
  Subset seen;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const Subset p = subset_from_json(parts[i], file.n);
    if (!(seen & p).empty() || !p.is_subset_of(ms[i].support()) ||
        !ms[i].is_independent(p)) {
      return false;
    }
    seen |= p;
  }
  return seen == target;
}

bool replay_coloring_result(const Json& j, const SystemFile& file,
                            const std::vector<Matroid>& ms) {
  const ListAssignment lists =
      lists_from_json(j.at("lists"), file.n, static_cast<int>(ms.size()));
  if (j.at("status") == "colored") {
    return is_valid_list_coloring(ms, lists,
                                  coloring_from_json(j.at("coloring"), file.n));
  }
  const DeficiencyCertificate cert =
      certificate_from_json(j.at("certificate"), file.n);
  if (j.at("reason") == "not-k-colorable") {
    const int i = j.at("matroid").get<int>() - 1;
    if (i < 0 || i >= static_cast<int>(ms.size())) return false;
    return std::max(1, lists.list_size()) * rank(ms[i], cert.x) < cert.x.size();
  }
  MatroidSystem system;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    system.push_back({ms[i], lists.admissible(static_cast<int>(i) + 1)});
  }
  return certificate_holds(system, cert);
}

template <class Game>
bool replay_game(const Game& game, const Json& j, int n, std::uint64_t seed) {
  const GameOutcome recorded = outcome_from_json(j, n);
  const GameOutcome fresh = solve_game(game);
  if (fresh.winner != recorded.winner ||
      fresh.explored_states != recorded.explored_states) {
    return false;
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 100; ++trial) {
    if (replay_against_random(game, recorded, rng) != recorded.winner) return false;
  }
  return true;
}

bool replay_record(const Json& rec) {
  if (rec.contains("summary")) return true;
  if (rec.at("status") == "skipped") return true;
  std::vector<Matroid> ms;
  for (const Json& s : rec.at("system")) ms.push_back(build_matroid(spec_from_json(s)));
  const PaintingRules rules = rules_from_string(rec.at("rules").get<std::string>());
  const GameOutcome out = solve_painting(ms, rec.at("k").get<int>(), rules);
  return to_string(out.winner) == rec.at("winner").get<std::string>() &&
         out.explored_states == rec.at("explored_states").get<std::size_t>();
}

bool replay_result(const Json& j, std::uint64_t seed) {
  if (!j.is_object() || !j.contains("command")) {
    throw InputError("not a coopmat --json result");
  }
  const std::string command = j.at("command").get<std::string>();
  const SystemFile file = system_from_json(j.at("system"));
  const std::vector<Matroid> ms = file.build();
  if (command == "rank") {
    const Subset s = subset_from_json(j.at("subset"), file.n);
    const auto ranks = j.at("ranks").get<std::vector<int>>();
    if (ranks.size() != ms.size()) return false;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (bf::max_independent_size(ms[i], s & ms[i].support()) != ranks[i]) return false;
    }
    return true;
  }
  if (command == "chromatic") {
    const Json& results = j.at("results");
    if (results.size() != ms.size()) return false;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const int chi = results[i].at("chromatic_number").get<int>();
      if (chi != chromatic_number(ms[i])) return false;
      if (results[i].contains("argmax")) {
        const Subset a = subset_from_json(results[i].at("argmax"), file.n);
        const int r = rank(ms[i], a);
        if (a.empty() || r == 0 || (a.size() + r - 1) / r != chi) return false;
      }
    }
    return true;
  }
  if (command == "partition") return replay_partition(j, file, ms);
  if (command == "check-k") {
    const int k = j.at("k").get<int>();
    if (j.at("status") == "colorable") {
      const Coloring f = coloring_from_json(j.at("coloring"), file.n);
      if (f.colored() != ms.front().support()) return false;
      for (int c = 1; c <= k; ++c) {
        if (!ms.front().is_independent(f.color_class(c))) return false;
      }
      for (int e : f.colored()) {
        if (f.color(e) > k) return false;
      }
      return true;
    }
    const DeficiencyCertificate cert = certificate_from_json(j.at("certificate"), file.n);
    return k * rank(ms.front(), cert.x) < cert.x.size();
  }
  if (command == "coop-color" || command == "list-color") {
    return replay_coloring_result(j, file, ms);
  }
  if (command == "arbor-perm") {
    if (j.at("status") != "decomposed") {
      const DeficiencyCertificate cert =
          certificate_from_json(j.at("certificate"), file.n);
      const int k = static_cast<int>(j.at("permutations").size()) + 1;
      return k * rank(ms.front(), cert.x) < cert.x.size();
    }
    std::vector<Permutation> perms;
    for (const Json& p : j.at("permutations")) perms.emplace_back(p.get<std::vector<int>>());
    Subset seen;
    const Json& classes = j.at("classes");
    if (classes.size() != perms.size() + 1) return false;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const Subset c = subset_from_json(classes[i].at("elements"), file.n);
      const Subset image = i == 0 ? c : perms[i - 1](c);
      if (!(seen & c).empty() || !ms.front().is_independent(image)) return false;
      seen |= c;
    }
    return seen == Subset::full(file.n);
  }
  if (command == "game") {
    const std::string kind = j.at("game").get<std::string>();
    if (kind == "indicated") return replay_game(IndicatedGame(ms), j, file.n, seed);
    if (kind == "marking") {
      return replay_game(
          MarkingGame(ms, player_from_string(j.at("first").get<std::string>())),
          j, file.n, seed);
    }
    return replay_game(
        PaintingGame(ms, j.at("k").get<int>(),
                     rules_from_string(j.at("rules").get<std::string>())),
        j, file.n, seed);
  }
  throw InputError("replay does not know command \"" + command + "\"");
}

int cmd_verify(const Options& opt, std::ostream& out) {
  if (!opt.replay.empty()) {
    std::ifstream in(opt.replay);
    if (!in) throw InputError("cannot open " + opt.replay);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    bool ok = true;
    std::size_t count = 0;
    try {
      // A single document, or line-delimited records from conjecture-search.
      if (Json::accept(text)) {
        ++count;
        ok = replay_result(Json::parse(text), opt.seed);
      } else {
        std::stringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
          if (line.empty()) continue;
          ++count;
          ok = replay_record(Json::parse(line)) && ok;
        }
      }
    } catch (const Json::exception& e) {
      throw InputError(std::string("replay: ") + e.what());
    }
    if (opt.json) {
      emit(out, {{"command", "verify"}, {"replay", opt.replay},
                 {"records", count}, {"passed", ok}});
    } else {
      out << (ok ? "PASS" : "FAIL") << " replay " << opt.replay << " (" << count
          << " record" << (count == 1 ? "" : "s") << ")\n";
    }
    return ok ? kExitOk : kExitInfeasible;
  }
  const std::vector<Check> checks = verification_suite(opt.seed);
  bool ok = true;
  Json arr = Json::array();
  for (const Check& c : checks) {
    ok = ok && c.passed;
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases},
                   {"detail", c.detail}});
    if (!opt.json) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases
          << " cases)" << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    }
  }
  if (opt.json) emit(out, {{"command", "verify"}, {"checks", arr}, {"passed", ok}});
  return ok ? kExitOk : kExitInfeasible;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Cooperative and list colorings of matroid systems", "coopmat"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Machine-readable JSON output");
    sub->add_option("--seed", opt.seed, "Seed for randomized steps");
  };
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "Matroid or system JSON file")->required();
    common(sub);
  };

  CLI::App* rank_cmd = app.add_subcommand("rank", "Rank of a subset in each matroid");
  with_file(rank_cmd);
  rank_cmd->add_option("--subset", opt.subset, "Comma-separated element ids");

  CLI::App* chromatic = app.add_subcommand("chromatic", "Chromatic number of each matroid");
  with_file(chromatic);

  CLI::App* partition = app.add_subcommand("partition", "Partition the ground set over the system");
  with_file(partition);

  CLI::App* check_k = app.add_subcommand("check-k", "Decide k-colorability of the first matroid");
  with_file(check_k);
  check_k->add_option("--k", opt.k, "Number of colors");

  CLI::App* coop = app.add_subcommand("coop-color", "Cooperative coloring of M_1..M_k");
  with_file(coop);

  CLI::App* list = app.add_subcommand("list-color", "List coloring of N_1..N_t");
  with_file(list);
  list->add_option("--k", opt.k, "List size for random lists when the file has none");

  CLI::App* arbor = app.add_subcommand("arbor-perm", "Forest decomposition under permutations");
  with_file(arbor);
  arbor->add_option("--k", opt.k, "Number of classes (k-1 random permutations)");

  CLI::App* game = app.add_subcommand("game", "Solve a coloring game exactly");
  game->add_option("kind", opt.game_kind, "indicated, marking or painting")
      ->required()
      ->check(CLI::IsMember({"indicated", "marking", "painting"}));
  with_file(game);
  game->add_option("--k", opt.k, "Painting: times an element may be offered");
  game->add_option("--rules", opt.rules, "Painting winning rule")
      ->check(CLI::IsMember({"no-dead-element", "strict-all-colored"}));
  game->add_option("--first", opt.first, "Marking: who moves first")
      ->check(CLI::IsMember({"ann", "ben"}));

  CLI::App* search = app.add_subcommand("conjecture-search", "Painting game over a catalog of systems");
  search->add_option("catalog", opt.file, "Catalog JSON (built-in corpus when omitted)");
  common(search);
  search->add_option("--k", opt.k, "Largest k for the built-in catalog");
  search->add_option("--rules", opt.rules, "Painting winning rule")
      ->check(CLI::IsMember({"no-dead-element", "strict-all-colored"}));
  search->add_option("--parallel", opt.parallel, "Worker threads");

  CLI::App* verify = app.add_subcommand("verify", "Self-check suite, or re-verify a --json result");
  common(verify);
  verify->add_option("--replay", opt.replay, "Result file to re-verify");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "coopmat: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (rank_cmd->parsed()) return cmd_rank(opt, out);
    if (chromatic->parsed()) return cmd_chromatic(opt, out);
    if (partition->parsed()) return cmd_partition(opt, out);
    if (check_k->parsed()) return cmd_check_k(opt, out);
    if (coop->parsed()) return cmd_coop_color(opt, out);
    if (list->parsed()) return cmd_list_color(opt, out);
    if (arbor->parsed()) return cmd_arbor_perm(opt, out);
    if (game->parsed()) return cmd_game(opt, out);
    if (search->parsed()) return cmd_conjecture_search(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
  } catch (const Error& e) {
    err << "coopmat: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Json::exception& e) {
    err << "coopmat: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace coopmat
