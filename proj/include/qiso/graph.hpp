// Copyright 2026 The qiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qiso/permutation.hpp"
#include "qiso/rng.hpp"

namespace qiso {

/// Simple undirected graph on vertices {0, ..., n-1}.  Edges are stored
/// normalized (i < j, sorted, deduplicated) so equality is structural.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
  bool has_edge(int i, int j) const;

  bool operator==(const Graph&) const = default;
  auto operator<=>(const Graph&) const = default;
};

/// Vertex relabeling matching the string action convention: the result has
/// edge {i, j} exactly when g has edge {sigma(i), sigma(j)}.
Graph relabel(const Graph& g, const Permutation& sigma);

Graph random_graph(int n, double edge_prob, Rng& rng);

/// Smallest sigma with relabel(g, sigma) == h, or nullopt.  Exhaustive scan
/// over S_n; intended for n <= 8.
std::optional<Permutation> graph_iso_bruteforce(const Graph& g,
                                                const Graph& h);

}  // namespace qiso
