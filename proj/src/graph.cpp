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

#include "qiso/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qiso {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [i, j] : edges) {
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{n, std::move(edges)};
}

bool Graph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

Graph relabel(const Graph& g, const Permutation& sigma) {
  if (sigma.degree() != g.n)
    throw std::invalid_argument("permutation degree must match vertex count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  const Permutation inv = sigma.inverse();
  for (const auto& [a, b] : g.edges) edges.emplace_back(inv(a), inv(b));
  return Graph::from_edges(g.n, std::move(edges));
}

Graph random_graph(int n, double edge_prob, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (bernoulli(rng, edge_prob)) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

std::optional<Permutation> graph_iso_bruteforce(const Graph& g,
                                                const Graph& h) {
  if (g.n != h.n || g.edges.size() != h.edges.size()) return std::nullopt;
  std::vector<int> images(g.n);
  std::iota(images.begin(), images.end(), 0);
  do {
    Permutation sigma(images);
    if (relabel(g, sigma) == h) return sigma;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

}  // namespace qiso
