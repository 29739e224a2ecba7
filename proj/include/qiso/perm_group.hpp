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
#include <optional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qiso/permutation.hpp"
#include "qiso/rng.hpp"

namespace qiso {

/// Group orders are exact; |S_n| overflows 64 bits past n = 20.
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Permutation group held as a base and strong generating set, built with the
/// deterministic Schreier-Sims algorithm.  Immutable after construction;
/// membership tests, exact order and uniform sampling all run off the BSGS.
class PermGroup {
 public:
  /// Builds the BSGS.  The generator list must be nonempty and
  /// degree-consistent.
  explicit PermGroup(std::vector<Permutation> generators);

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  /// <(1 2 ... n)>
  static PermGroup cyclic(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }
  const std::vector<Permutation>& strong_generators() const {
    return strong_generators_;
  }
  const BigInt& order() const { return order_; }
  /// order() as uint64, or nullopt when it does not fit.
  std::optional<std::uint64_t> order_u64() const;

  /// Deterministic sifting through the BSGS.
  bool contains(const Permutation& p) const;

  /// Exactly uniform over the group: one coset representative per base point.
  Permutation sample_uniform(Rng& rng) const;

  /// Every element exactly once, sorted by image array.  Throws CapExceeded
  /// when order() > cap, signalling that brute force is inapplicable.
  std::vector<Permutation> enumerate(
      std::uint64_t cap = kDefaultEnumerationCap) const;

 private:
  struct Level {
    int point = -1;
    std::vector<Permutation> gens;
    std::vector<int> orbit;  // in BFS discovery order
    // transversal[beta] maps the base point to beta; empty degree == unset
    std::vector<Permutation> transversal;
  };

  PermGroup() = default;
  void build();
  // Sifts g through levels [from, ...); returns the residue and the level at
  // which sifting stopped.
  std::pair<Permutation, std::size_t> sift_from(std::size_t from,
                                                Permutation g) const;
  void insert_generator(std::size_t level, const Permutation& g);
  void close_level(std::size_t level);
  void extend_orbit(Level& lv);

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::vector<int> base_;
  std::vector<Permutation> strong_generators_;
  BigInt order_ = 1;
};

/// Closure of a generating set under multiplication.  Deliberately
/// independent of the BSGS machinery so it can act as the oracle the BSGS is
/// checked against.  Throws CapExceeded past the cap.
std::vector<Permutation> generate_closure(const std::vector<Permutation>& gens,
                                          std::uint64_t cap);

/// Some sigma in g with string_action(sigma, s) == t, or nullopt.  Brute
/// force over the enumerated group.
std::optional<Permutation> string_isomorphism(
    std::string_view s, std::string_view t, const PermGroup& g,
    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace qiso
