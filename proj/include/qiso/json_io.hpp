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

#include <string>
#include <utility>

#include <json.hpp>

#include "qiso/graph.hpp"
#include "qiso/problems.hpp"

namespace qiso {

using Json = nlohmann::json;

// Wire formats (all indices 1-based):
//   permutation  [2,1,3]
//   group        {"degree": n, "generators": [[...], ...]}
//   circuit      {"n_in": m, "n_out": n, "gates": [{"g":"H","t":1},
//                 {"g":"CNOT","c":1,"t":2}, ...]}
//   graph        {"n": k, "edges": [[i,j], ...]}
//   state        [[re,im], ...];  density  [[[re,im], ...], ...]
//   instance     {"kind":"SI"|"SSI"|"MSI", "circuit0":..., "circuit1":...,
//                 "group":..., "epsilon": e};  MSI sides may instead carry
//                 "rho0"/"rho1" as dense matrices.
//   graph pair   {"kind":"graph-pair", "graph0":..., "graph1":...}

Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

Json group_to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j);

Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json state_to_json(const PureState& psi);
Json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j);

Json si_to_json(const SiInstance& inst);
SiInstance si_from_json(const Json& j);
Json ssi_to_json(const SsiInstance& inst);
SsiInstance ssi_from_json(const Json& j);
Json msi_to_json(const MsiInstance& inst);
MsiInstance msi_from_json(const Json& j);

Json graph_pair_to_json(const Graph& g, const Graph& h);
std::pair<Graph, Graph> graph_pair_from_json(const Json& j);

/// "SI", "SSI", "MSI" or "graph-pair".
std::string instance_kind(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace qiso
