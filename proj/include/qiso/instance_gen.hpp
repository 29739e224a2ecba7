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

#include <cstdint>
#include <string>
#include <utility>

#include "qiso/problems.hpp"

namespace qiso {

enum class Flavor { kYes, kNo, kRandom };

Flavor flavor_from_string(const std::string& s);

// Deterministic generators over S_n: the same (n, flavor, seed) always
// produces the same instance.  YES instances append a sampled permutation as
// SWAP gates to a random circuit; NO instances separate the states by
// Hamming weight, which zeroes every permuted overlap.  The requested label
// is re-checked with the decision oracle (bounded retries).

SiInstance gen_si(int n, Flavor flavor, std::uint64_t seed,
                  int max_retries = 200);
SsiInstance gen_ssi(int n, Flavor flavor, std::uint64_t seed,
                    int max_retries = 200);
/// MSI generation is capped at n <= 4 (TooManyQubits beyond).
MsiInstance gen_msi(int n, Flavor flavor, std::uint64_t seed,
                    int max_retries = 200);
std::pair<Graph, Graph> gen_graph_pair(int n, Flavor flavor,
                                       std::uint64_t seed,
                                       int max_retries = 200);

}  // namespace qiso
