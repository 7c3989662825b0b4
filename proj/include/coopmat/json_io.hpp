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

// JSON encodings of specs, lists, colorings, certificates and game results.
// docs/formats.md is the reference for every layout here.

#ifndef COOPMAT_JSON_IO_HPP_
#define COOPMAT_JSON_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coopmat/coloring.hpp"
#include "coopmat/games.hpp"
#include "coopmat/matroid.hpp"
#include "coopmat/partition.hpp"

namespace coopmat {

using Json = nlohmann::json;

Json to_json(const MatroidSpec& spec);
/// Throws MalformedSpec on anything that does not follow the layout.
MatroidSpec spec_from_json(const Json& j);

Json to_json(Subset s);
/// Elements must lie in {0..n-1}.
Subset subset_from_json(const Json& j, int n);

Json to_json(const ListAssignment& lists);
/// {"0": [1,2], ...}; one entry per element of {0..n-1}.
ListAssignment lists_from_json(const Json& j, int n, int palette);

/// {"colors": {"0": 1, ...}, "classes": [{"color", "elements",
/// "independent"}, ...]}; verdicts come from fresh oracle calls.
Json coloring_to_json(const Coloring& f, const std::vector<Matroid>& ms);
Coloring coloring_from_json(const Json& j, int n);

Json to_json(const DeficiencyCertificate& cert);
DeficiencyCertificate certificate_from_json(const Json& j, int n);

Json to_json(const GameMove& m);
GameMove move_from_json(const Json& j, int n);
Json to_json(const GameOutcome& outcome, bool with_strategy);
GameOutcome outcome_from_json(const Json& j, int n);
Json to_json(const std::vector<TranscriptStep>& line);

Player player_from_string(const std::string& s);
PaintingRules rules_from_string(const std::string& s);

/// A matroid system plus optional problem data.
struct SystemFile {
  int n = 0;
  std::vector<MatroidSpec> specs;
  std::optional<Json> lists;
  std::optional<int> k;
  std::optional<PaintingRules> rules;
  std::optional<Player> first;
  std::optional<Json> subset;
  std::optional<Json> permutations;
  Json raw;  // the file as given

  std::vector<Matroid> build() const;
};

/// Accepts a bare MatroidSpec object (has "kind") or a system object (has
/// "matroids"). Throws MalformedSpec.
SystemFile system_from_json(const Json& j);

}  // namespace coopmat

#endif  // COOPMAT_JSON_IO_HPP_
