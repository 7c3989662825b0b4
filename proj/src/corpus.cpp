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

#include "coopmat/corpus.hpp"

namespace coopmat {

MatroidSpec uniform_spec(int n, int rank) {
  return MatroidSpec{UniformSpec{n, rank}};
}

MatroidSpec free_spec(int n) { return uniform_spec(n, n); }

MatroidSpec graphic_spec(int vertices,
                         std::vector<std::pair<int, int>> edges) {
  return MatroidSpec{GraphicSpec{vertices, std::move(edges)}};
}

MatroidSpec complete_graph_spec(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
  }
  return graphic_spec(vertices, std::move(edges));
}

MatroidSpec cycle_spec(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertices; ++u) edges.emplace_back(u, (u + 1) % vertices);
  return graphic_spec(vertices, std::move(edges));
}

MatroidSpec partition_spec(int n, std::vector<std::vector<int>> blocks,
                           std::vector<int> capacities) {
  return MatroidSpec{PartitionSpec{n, std::move(blocks), std::move(capacities)}};
}

MatroidSpec linear_spec(int prime, std::vector<std::vector<int>> columns) {
  return MatroidSpec{LinearSpec{prime, std::move(columns)}};
}

GraphicSpec k4_graph() {
  return std::get<GraphicSpec>(complete_graph_spec(4).value);
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> c;
    // uniform
    c.push_back({"U(1,1)", uniform_spec(1, 1)});
    c.push_back({"U(2,1)", uniform_spec(2, 1)});
    c.push_back({"U(2,2)", uniform_spec(2, 2)});
    c.push_back({"U(3,1)", uniform_spec(3, 1)});
    c.push_back({"U(3,2)", uniform_spec(3, 2)});
    c.push_back({"U(3,3)", uniform_spec(3, 3)});
    c.push_back({"U(4,2)", uniform_spec(4, 2)});
    c.push_back({"U(4,3)", uniform_spec(4, 3)});
    c.push_back({"U(5,2)", uniform_spec(5, 2)});
    c.push_back({"U(5,3)", uniform_spec(5, 3)});
    c.push_back({"U(6,2)", uniform_spec(6, 2)});
    c.push_back({"U(6,3)", uniform_spec(6, 3)});
    c.push_back({"U(7,3)", uniform_spec(7, 3)});
    c.push_back({"U(8,4)", uniform_spec(8, 4)});
    c.push_back({"U(9,3)", uniform_spec(9, 3)});
    c.push_back({"U(10,4)", uniform_spec(10, 4)});
    // graphic
    c.push_back({"parallel pair", graphic_spec(2, {{0, 1}, {0, 1}})});
    c.push_back({"path P4", graphic_spec(4, {{0, 1}, {1, 2}, {2, 3}})});
    c.push_back({"triangle C3", cycle_spec(3)});
    c.push_back({"parallel triple", graphic_spec(2, {{0, 1}, {0, 1}, {0, 1}})});
    c.push_back({"cycle C4", cycle_spec(4)});
    c.push_back({"fat triangle",
                 graphic_spec(3, {{0, 1}, {1, 2}, {0, 2}, {0, 2}})});
    c.push_back({"star K1,4", graphic_spec(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})});
    c.push_back({"cycle C5", cycle_spec(5)});
    c.push_back({"diamond K4-e",
                 graphic_spec(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})});
    c.push_back({"K4", complete_graph_spec(4)});
    c.push_back({"K2,3", graphic_spec(5, {{0, 2}, {0, 3}, {0, 4},
                                          {1, 2}, {1, 3}, {1, 4}})});
    c.push_back({"bowtie", graphic_spec(5, {{0, 1}, {1, 2}, {0, 2},
                                            {2, 3}, {3, 4}, {2, 4}})});
    c.push_back({"wheel W4",
                 graphic_spec(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                  {4, 0}, {4, 1}, {4, 2}, {4, 3}})});
    c.push_back({"K3,3", graphic_spec(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3},
                                          {1, 4}, {1, 5}, {2, 3}, {2, 4},
                                          {2, 5}})});
    c.push_back({"prism", graphic_spec(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4},
                                           {4, 5}, {3, 5}, {0, 3}, {1, 4},
                                           {2, 5}})});
    c.push_back({"K5", complete_graph_spec(5)});
    c.push_back({"K6", complete_graph_spec(6)});
    // partition
    c.push_back({"partition 2x(2:1)", partition_spec(4, {{0, 1}, {2, 3}}, {1, 1})});
    c.push_back({"partition (3:2)(2:1)",
                 partition_spec(5, {{0, 1, 2}, {3, 4}}, {2, 1})});
    c.push_back({"partition (3:1)(3:2)",
                 partition_spec(6, {{0, 1, 2}, {3, 4, 5}}, {1, 2})});
    c.push_back({"partition (1:1)(2:1)", partition_spec(3, {{0}, {1, 2}}, {1, 1})});
    c.push_back({"partition (4:1)(4:3)",
                 partition_spec(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}, {1, 3})});
    // linear over GF(2)
    c.push_back({"GF(2) repeated column",
                 linear_spec(2, {{1, 0}, {1, 0}, {0, 1}})});
    c.push_back({"GF(2) M(K4)",
                 linear_spec(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                 {1, 1, 0}, {0, 1, 1}, {1, 0, 1}})});
    c.push_back({"Fano F7",
                 linear_spec(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                                 {0, 1, 1}, {1, 0, 1}, {1, 1, 1}})});
    c.push_back({"GF(2) rank-4 ten columns",
                 linear_spec(2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                                 {0, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0},
                                 {0, 0, 1, 1}, {1, 0, 0, 1}, {1, 1, 1, 1},
                                 {1, 0, 1, 0}})});
    // linear over GF(3)
    c.push_back({"GF(3) U(2,4)", linear_spec(3, {{1, 0}, {0, 1}, {1, 1}, {1, 2}})});
    c.push_back({"GF(3) rank-2 doubled",
                 linear_spec(3, {{1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 2}})});
    c.push_back({"GF(3) rank-3 eight columns",
                 linear_spec(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                                 {1, 2, 0}, {0, 1, 2}, {1, 1, 1}, {2, 0, 1}})});
    c.push_back({"GF(3) ternary affine",
                 linear_spec(3, {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 0, 1},
                                 {1, 1, 1}, {1, 2, 1}})});
    return c;
  }();
  return corpus;
}

}  // namespace coopmat
