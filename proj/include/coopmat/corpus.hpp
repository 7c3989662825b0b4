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

#ifndef COOPMAT_CORPUS_HPP_
#define COOPMAT_CORPUS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "coopmat/matroid.hpp"

namespace coopmat {

MatroidSpec uniform_spec(int n, int rank);
MatroidSpec free_spec(int n);
MatroidSpec graphic_spec(int vertices, std::vector<std::pair<int, int>> edges);
MatroidSpec complete_graph_spec(int vertices);
MatroidSpec cycle_spec(int vertices);
MatroidSpec partition_spec(int n, std::vector<std::vector<int>> blocks,
                           std::vector<int> capacities);
MatroidSpec linear_spec(int prime, std::vector<std::vector<int>> columns);

/// K4 with edges e0=(0,1) e1=(0,2) e2=(0,3) e3=(1,2) e4=(1,3) e5=(2,3).
GraphicSpec k4_graph();

struct CorpusEntry {
  std::string name;
  MatroidSpec spec;
};

/// Small loopless matroids of every built-in kind: uniform matroids on at
/// most 10 elements, graphic matroids on at most 6 vertices, partition
/// matroids, and linear matroids over GF(2) and GF(3) with at most 10
/// columns.
const std::vector<CorpusEntry>& builtin_corpus();

}  // namespace coopmat

#endif  // COOPMAT_CORPUS_HPP_
