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

#include "qiso/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "qiso/errors.hpp"

namespace qiso {

namespace {

int first_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) != i) return i;
  return -1;
}

}  // namespace

PermGroup::PermGroup(std::vector<Permutation> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty())
    throw std::invalid_argument("generator list must be nonempty");
  degree_ = generators_[0].degree();
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
  build();
}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup({Permutation::identity(degree)});
}

PermGroup PermGroup::symmetric(int degree) {
  if (degree <= 1) return trivial(std::max(degree, 1));
  std::vector<Permutation> gens{Permutation::transposition(degree, 0, 1)};
  if (degree > 2) {
    std::vector<int> all(degree);
    for (int i = 0; i < degree; ++i) all[i] = i;
    gens.push_back(Permutation::cycle(degree, all));
  }
  return PermGroup(std::move(gens));
}

PermGroup PermGroup::cyclic(int degree) {
  if (degree <= 1) return trivial(std::max(degree, 1));
  std::vector<int> all(degree);
  for (int i = 0; i < degree; ++i) all[i] = i;
  return PermGroup({Permutation::cycle(degree, all)});
}

void PermGroup::build() {
  // Every input generator belongs to the level-0 strong generating set;
  // only Schreier residues are inserted deeper.
  for (const auto& g : generators_)
    if (!g.is_identity()) insert_generator(0, g);
  base_.clear();
  strong_generators_.clear();
  order_ = 1;
  for (const auto& lv : levels_) {
    base_.push_back(lv.point);
    order_ *= static_cast<unsigned>(lv.orbit.size());
    for (const auto& g : lv.gens) strong_generators_.push_back(g);
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift_from(std::size_t from,
                                                         Permutation g) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    if (g.is_identity()) return {g, i};
    const Level& lv = levels_[i];
    int beta = g(lv.point);
    if (lv.transversal[beta].degree() == 0) return {g, i};
    g = lv.transversal[beta].inverse() * g;
  }
  return {g, levels_.size()};
}

void PermGroup::insert_generator(std::size_t level, const Permutation& g) {
  if (level == levels_.size()) {
    Level lv;
    lv.point = first_moved_point(g);
    lv.transversal.assign(degree_, Permutation());
    lv.transversal[lv.point] = Permutation::identity(degree_);
    lv.orbit.push_back(lv.point);
    levels_.push_back(std::move(lv));
  }
  levels_[level].gens.push_back(g);
  close_level(level);
}

void PermGroup::extend_orbit(Level& lv) {
  // BFS keeps previously assigned representatives, so earlier sifting results
  // stay valid as the orbit grows.
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    int beta = lv.orbit[head];
    for (const auto& s : lv.gens) {
      int gamma = s(beta);
      if (lv.transversal[gamma].degree() == 0) {
        lv.transversal[gamma] = s * lv.transversal[beta];
        lv.orbit.push_back(gamma);
      }
    }
  }
}

void PermGroup::close_level(std::size_t level) {
  extend_orbit(levels_[level]);
  // Schreier generators of this level must sift to the identity below it.
  // Recursive inserts only touch deeper levels, but they may reallocate
  // levels_, so re-index instead of holding references.
  for (std::size_t oi = 0; oi < levels_[level].orbit.size(); ++oi) {
    for (std::size_t gi = 0; gi < levels_[level].gens.size(); ++gi) {
      const int beta = levels_[level].orbit[oi];
      const Permutation s = levels_[level].gens[gi];
      Permutation schreier = levels_[level].transversal[s(beta)].inverse() *
                             (s * levels_[level].transversal[beta]);
      auto [residue, at] = sift_from(level + 1, std::move(schreier));
      if (!residue.is_identity()) insert_generator(at, residue);
    }
  }
}

std::optional<std::uint64_t> PermGroup::order_u64() const {
  if (order_ > BigInt(std::numeric_limits<std::uint64_t>::max()))
    return std::nullopt;
  return order_.convert_to<std::uint64_t>();
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("permutation degree mismatch");
  auto [residue, level] = sift_from(0, p);
  (void)level;
  return residue.is_identity();
}

Permutation PermGroup::sample_uniform(Rng& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    int beta = it->orbit[uniform_int(rng, static_cast<int>(it->orbit.size()))];
    g = it->transversal[beta] * g;
  }
  return g;
}

std::vector<Permutation> PermGroup::enumerate(std::uint64_t cap) const {
  if (order_ > BigInt(cap))
    throw CapExceeded("group order " + order_.str() + " exceeds cap " +
                      std::to_string(cap));
  std::vector<Permutation> elements{Permutation::identity(degree_)};
  // Cartesian product of the transversals, deepest level first.
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(elements.size() * it->orbit.size());
    for (int beta : it->orbit)
      for (const auto& e : elements) next.push_back(it->transversal[beta] * e);
    elements = std::move(next);
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<Permutation> generate_closure(const std::vector<Permutation>& gens,
                                          std::uint64_t cap) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  std::set<Permutation> seen{Permutation::identity(gens[0].degree())};
  std::vector<Permutation> queue(seen.begin(), seen.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Permutation current = queue[head];
    for (const auto& g : gens) {
      Permutation next = g * current;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceeded("closure exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<Permutation> string_isomorphism(std::string_view s,
                                              std::string_view t,
                                              const PermGroup& g,
                                              std::uint64_t cap) {
  if (s.size() != t.size())
    throw std::invalid_argument("string length mismatch");
  for (const auto& sigma : g.enumerate(cap))
    if (string_action(sigma, s) == t) return sigma;
  return std::nullopt;
}

}  // namespace qiso
