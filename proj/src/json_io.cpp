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

#include "coopmat/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>

#include "coopmat/errors.hpp"

namespace coopmat {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedSpec(what); }

void require_object(const Json& j, const std::string& what) {
  if (!j.is_object()) malformed(what + " must be a JSON object");
}

void only_keys(const Json& j, std::initializer_list<const char*> allowed,
               const std::string& what) {
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; })) {
      malformed(what + ": unknown key \"" + key + "\"");
    }
  }
}

const Json& field(const Json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) malformed(what + ": missing key \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) malformed(what + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) malformed(what + " out of range");
  return static_cast<int>(v);
}

std::vector<int> as_int_array(const Json& j, const std::string& what) {
  if (!j.is_array()) malformed(what + " must be an array");
  std::vector<int> out;
  for (const Json& v : j) out.push_back(as_int(v, what + " entry"));
  return out;
}

std::vector<std::vector<int>> as_int_matrix(const Json& j,
                                            const std::string& what) {
  if (!j.is_array()) malformed(what + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const Json& row : j) out.push_back(as_int_array(row, what + " entry"));
  return out;
}

int element_key(const std::string& key, int n, const std::string& what) {
  if (key.empty() || key.size() > 3 ||
      !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    malformed(what + ": key \"" + key + "\" is not an element id");
  }
  const int e = std::stoi(key);
  if (e >= n) malformed(what + ": element " + key + " outside the ground set");
  return e;
}

}  // namespace

Json to_json(const MatroidSpec& spec) {
  struct Visitor {
    Json operator()(const UniformSpec& s) const {
      return {{"kind", "uniform"}, {"n", s.n}, {"rank", s.rank}};
    }
    Json operator()(const GraphicSpec& s) const {
      Json edges = Json::array();
      for (auto [u, v] : s.edges) edges.push_back({u, v});
      return {{"kind", "graphic"}, {"vertices", s.vertices}, {"edges", edges}};
    }
    Json operator()(const PartitionSpec& s) const {
      return {{"kind", "partition"},
              {"n", s.n},
              {"blocks", s.blocks},
              {"capacities", s.capacities}};
    }
    Json operator()(const LinearSpec& s) const {
      return {{"kind", "linear"}, {"prime", s.prime}, {"columns", s.columns}};
    }
    Json operator()(const RestrictionSpec& s) const {
      return {{"kind", "restriction"},
              {"base", to_json(*s.base)},
              {"subset", s.subset}};
    }
    Json operator()(const PullbackSpec& s) const {
      return {{"kind", "pullback"},
              {"base", to_json(*s.base)},
              {"permutation", s.permutation}};
    }
  };
  return std::visit(Visitor{}, spec.value);
}

MatroidSpec spec_from_json(const Json& j) {
  require_object(j, "matroid spec");
  const Json& kind_j = field(j, "kind", "matroid spec");
  if (!kind_j.is_string()) malformed("matroid spec: \"kind\" must be a string");
  const std::string kind = kind_j.get<std::string>();
  const std::string what = kind + " spec";
  if (kind == "uniform") {
    only_keys(j, {"kind", "n", "rank"}, what);
    return MatroidSpec{UniformSpec{as_int(field(j, "n", what), "n"),
                                   as_int(field(j, "rank", what), "rank")}};
  }
  if (kind == "graphic") {
    only_keys(j, {"kind", "vertices", "edges"}, what);
    GraphicSpec g;
    g.vertices = as_int(field(j, "vertices", what), "vertices");
    for (const auto& e : as_int_matrix(field(j, "edges", what), "edges")) {
      if (e.size() != 2) malformed("graphic spec: each edge is a [u, v] pair");
      g.edges.emplace_back(e[0], e[1]);
    }
    return MatroidSpec{std::move(g)};
  }
  if (kind == "partition") {
    only_keys(j, {"kind", "n", "blocks", "capacities"}, what);
    return MatroidSpec{PartitionSpec{
        as_int(field(j, "n", what), "n"),
        as_int_matrix(field(j, "blocks", what), "blocks"),
        as_int_array(field(j, "capacities", what), "capacities")}};
  }
  if (kind == "linear") {
    only_keys(j, {"kind", "prime", "columns"}, what);
    return MatroidSpec{
        LinearSpec{as_int(field(j, "prime", what), "prime"),
                   as_int_matrix(field(j, "columns", what), "columns")}};
  }
  if (kind == "restriction") {
    only_keys(j, {"kind", "base", "subset"}, what);
    return MatroidSpec{RestrictionSpec{
        std::make_shared<const MatroidSpec>(spec_from_json(field(j, "base", what))),
        as_int_array(field(j, "subset", what), "subset")}};
  }
  if (kind == "pullback") {
    only_keys(j, {"kind", "base", "permutation"}, what);
    return MatroidSpec{PullbackSpec{
        std::make_shared<const MatroidSpec>(spec_from_json(field(j, "base", what))),
        as_int_array(field(j, "permutation", what), "permutation")}};
  }
  malformed("unknown matroid kind \"" + kind + "\"");
}

Json to_json(Subset s) { return s.elements(); }

Subset subset_from_json(const Json& j, int n) {
  Subset s;
  for (int e : as_int_array(j, "subset")) {
    if (e < 0 || e >= n) {
      malformed("subset element " + std::to_string(e) + " outside the ground set");
    }
    s.insert(e);
  }
  return s;
}

Json to_json(const ListAssignment& lists) {
  Json j = Json::object();
  for (int e = 0; e < lists.size(); ++e) j[std::to_string(e)] = lists.list(e);
  return j;
}

ListAssignment lists_from_json(const Json& j, int n, int palette) {
  require_object(j, "lists");
  std::vector<std::vector<int>> lists(n);
  std::vector<bool> seen(n, false);
  for (const auto& [key, value] : j.items()) {
    const int e = element_key(key, n, "lists");
    lists[e] = as_int_array(value, "list of element " + key);
    seen[e] = true;
  }
  for (int e = 0; e < n; ++e) {
    if (!seen[e]) malformed("lists: element " + std::to_string(e) + " has no list");
  }
  const int k = n == 0 ? 0 : static_cast<int>(lists.front().size());
  return ListAssignment(palette, k, std::move(lists));
}

Json coloring_to_json(const Coloring& f, const std::vector<Matroid>& ms) {
  Json colors = Json::object();
  for (int e = 0; e < f.size(); ++e) {
    if (f.color(e) != 0) colors[std::to_string(e)] = f.color(e);
  }
  Json classes = Json::array();
  for (std::size_t c = 0; c < ms.size(); ++c) {
    const Subset cls = f.color_class(static_cast<int>(c) + 1);
    const bool indep =
        cls.is_subset_of(ms[c].support()) && ms[c].is_independent(cls);
    classes.push_back({{"color", c + 1},
                       {"elements", to_json(cls)},
                       {"independent", indep}});
  }
  return {{"colors", colors}, {"classes", classes}, {"complete", f.complete()}};
}

Coloring coloring_from_json(const Json& j, int n) {
  require_object(j, "coloring");
  Coloring f(n);
  for (const auto& [key, value] : field(j, "colors", "coloring").items()) {
    const int c = as_int(value, "color");
    if (c < 1) malformed("colors are 1-based");
    f.set(element_key(key, n, "coloring"), c);
  }
  return f;
}

Json to_json(const DeficiencyCertificate& cert) {
  return {{"x", to_json(cert.x)},
          {"ranks", cert.ranks},
          {"rank_sum", cert.rank_sum()},
          {"size", cert.x.size()}};
}

DeficiencyCertificate certificate_from_json(const Json& j, int n) {
  require_object(j, "certificate");
  return {subset_from_json(field(j, "x", "certificate"), n),
          as_int_array(field(j, "ranks", "certificate"), "ranks")};
}

Json to_json(const GameMove& m) {
  return {{"element", m.element}, {"color", m.color}, {"set", to_json(m.set)}};
}

GameMove move_from_json(const Json& j, int n) {
  require_object(j, "move");
  return {as_int(field(j, "element", "move"), "element"),
          as_int(field(j, "color", "move"), "color"),
          subset_from_json(field(j, "set", "move"), n)};
}

Json to_json(const GameOutcome& outcome, bool with_strategy) {
  Json j = {{"winner", to_string(outcome.winner)},
            {"explored_states", outcome.explored_states}};
  if (with_strategy) {
    std::map<std::uint64_t, GameMove> sorted(outcome.strategy.begin(),
                                             outcome.strategy.end());
    Json strategy = Json::array();
    for (const auto& [key, move] : sorted) {
      strategy.push_back({{"state", key}, {"move", to_json(move)}});
    }
    j["strategy"] = std::move(strategy);
  }
  return j;
}

GameOutcome outcome_from_json(const Json& j, int n) {
  require_object(j, "game outcome");
  GameOutcome out;
  const Json& w = field(j, "winner", "game outcome");
  if (!w.is_string()) malformed("winner must be a string");
  out.winner = player_from_string(w.get<std::string>());
  const Json& explored = field(j, "explored_states", "game outcome");
  if (!explored.is_number_unsigned()) malformed("explored_states must be a count");
  out.explored_states = explored.get<std::size_t>();
  if (auto it = j.find("strategy"); it != j.end()) {
    if (!it->is_array()) malformed("strategy must be an array");
    for (const Json& entry : *it) {
      const Json& key = field(entry, "state", "strategy entry");
      if (!key.is_number_unsigned()) malformed("strategy state must be a key");
      out.strategy.emplace(key.get<std::uint64_t>(),
                           move_from_json(field(entry, "move", "strategy entry"), n));
    }
  }
  return out;
}

Json to_json(const std::vector<TranscriptStep>& line) {
  Json j = Json::array();
  for (const TranscriptStep& step : line) {
    j.push_back({{"state", step.state},
                 {"mover", to_string(step.mover)},
                 {"move", to_json(step.move)}});
  }
  return j;
}

Player player_from_string(const std::string& s) {
  if (s == "ann") return Player::kAnn;
  if (s == "ben") return Player::kBen;
  malformed("player must be \"ann\" or \"ben\", got \"" + s + "\"");
}

PaintingRules rules_from_string(const std::string& s) {
  if (s == "no-dead-element") return PaintingRules::kNoDeadElement;
  if (s == "strict-all-colored") return PaintingRules::kStrictAllColored;
  malformed("rules must be no-dead-element or strict-all-colored, got \"" + s +
            "\"");
}

std::vector<Matroid> SystemFile::build() const {
  std::vector<Matroid> ms;
  for (const MatroidSpec& s : specs) ms.push_back(build_matroid(s));
  return ms;
}

SystemFile system_from_json(const Json& j) {
  require_object(j, "system file");
  SystemFile file;
  file.raw = j;
  if (j.contains("kind")) {
    file.specs.push_back(spec_from_json(j));
    file.n = spec_ground_size(file.specs.front());
    return file;
  }
  only_keys(j,
            {"n", "matroids", "lists", "k", "rules", "first", "subset",
             "permutations", "comment"},
            "system file");
  const Json& ms = field(j, "matroids", "system file");
  if (!ms.is_array()) malformed("\"matroids\" must be an array");
  for (const Json& m : ms) file.specs.push_back(spec_from_json(m));
  if (auto it = j.find("n"); it != j.end()) {
    file.n = as_int(*it, "n");
  } else if (!file.specs.empty()) {
    file.n = spec_ground_size(file.specs.front());
  }
  for (const MatroidSpec& s : file.specs) {
    if (spec_ground_size(s) != file.n) {
      malformed("all matroids must share the ground size " +
                std::to_string(file.n));
    }
  }
  if (auto it = j.find("lists"); it != j.end()) file.lists = *it;
  if (auto it = j.find("k"); it != j.end()) file.k = as_int(*it, "k");
  if (auto it = j.find("rules"); it != j.end()) {
    if (!it->is_string()) malformed("\"rules\" must be a string");
    file.rules = rules_from_string(it->get<std::string>());
  }
  if (auto it = j.find("first"); it != j.end()) {
    if (!it->is_string()) malformed("\"first\" must be a string");
    file.first = player_from_string(it->get<std::string>());
  }
  if (auto it = j.find("subset"); it != j.end()) file.subset = *it;
  if (auto it = j.find("permutations"); it != j.end()) file.permutations = *it;
  return file;
}

}  // namespace coopmat
