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

#include "qiso/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qiso/errors.hpp"
#include "qiso/qsim.hpp"

namespace qiso {

namespace {

constexpr double kFixTol = 1e-9;

int flip(int j) { return 1 - j; }

}  // namespace

int default_copies(const PermGroup& g, double epsilon) {
  if (epsilon <= 0.0 || epsilon >= 1.0)
    return std::max<int>(1, static_cast<int>(std::ceil(
                                std::log2(g.order().convert_to<double>()))));
  const double bits = std::log2(g.order().convert_to<double>());
  return std::max<int>(1,
                       static_cast<int>(std::ceil(bits / (1.0 - epsilon))));
}

RunStats make_run_stats(int trials, int accepts) {
  RunStats stats;
  stats.trials = trials;
  stats.accepts = accepts;
  stats.freq = trials > 0 ? static_cast<double>(accepts) / trials : 0.0;
  stats.ci95 =
      trials > 0
          ? 1.96 * std::sqrt(stats.freq * (1.0 - stats.freq) / trials)
          : 0.0;
  return stats;
}

HlmCase hlm_distinguish(const PureState& psi,
                        const std::vector<UnitaryApplier>& family,
                        double delta, const ProverModel& model, Rng& rng) {
  if (family.empty()) throw std::invalid_argument("empty unitary family");
  double best = 0.0;
  for (const auto& apply : family)
    best = std::max(best, std::abs(inner_product(psi, apply(psi))));

  HlmCase truth;
  if (best >= 1.0 - kFixTol) {
    truth = HlmCase::kFixes;
  } else if (best <= 1.0 - delta + kFixTol) {
    truth = HlmCase::kFar;
  } else {
    throw PromiseViolation("max overlap " + std::to_string(best) +
                           " lies inside the promise gap");
  }
  if (model.kind == ProverKind::kHlmStochastic &&
      !bernoulli(rng, model.p_hlm))
    return truth == HlmCase::kFixes ? HlmCase::kFar : HlmCase::kFixes;
  return truth;
}

SniSession::SniSession(SiInstance inst, ProverModel prover, std::uint64_t cap)
    : inst_(std::move(inst)), prover_(prover) {
  psi_[0] = run_pure(inst_.circuit0);
  psi_[1] = run_pure(inst_.circuit1);
  elements_ = inst_.group.enumerate(cap);
  for (int j = 0; j < 2; ++j) {
    permuted_[j].reserve(elements_.size());
    for (const auto& pi : elements_)
      permuted_[j].push_back(apply_perm(pi, psi_[j]));
  }
  copies_ = prover_.copies > 0 ? prover_.copies
                               : default_copies(inst_.group, inst_.eps());
}

bool SniSession::guess_sees_fixed_point(const PureState& message,
                                        int j_guess) const {
  // U_pi fixes |Psi>|psi_j'| exactly when |<Psi|P_pi|psi_j'>| = 1, so the
  // 2n-qubit search collapses to n-qubit overlaps.
  for (const auto& candidate : permuted_[j_guess])
    if (std::abs(inner_product(message, candidate)) >= 1.0 - kFixTol)
      return true;
  return false;
}

Transcript SniSession::finish_round(const Permutation& sigma, int j,
                                    int j_guess, int votes_for_guess,
                                    int repetitions) const {
  Transcript t;
  t.sigma = sigma;
  t.j = j;
  t.copies = copies_;
  t.j_prime = 2 * votes_for_guess >= repetitions ? j_guess : flip(j_guess);
  t.accept = t.j_prime == j;
  t.messages.push_back("V->P: " + std::to_string(copies_) +
                       " copies of P_sigma|psi_j>, sigma=" +
                       sigma.to_cycle_string());
  t.messages.push_back("P->V: j'=" + std::to_string(t.j_prime));
  return t;
}

Transcript SniSession::round(Rng& rng) { return amplified_round(1, rng); }

Transcript SniSession::amplified_round(int repetitions, Rng& rng) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  const Permutation sigma = inst_.group.sample_uniform(rng);
  const int j = coin(rng) ? 1 : 0;
  const PureState message = apply_perm(sigma, psi_[j]);

  const int j_guess = coin(rng) ? 1 : 0;
  const bool fixes = guess_sees_fixed_point(message, j_guess);
  // Per repetition the prover resolves the promise; "fixes" votes for the
  // guess, "far" votes against it.
  int votes_for_guess = 0;
  for (int r = 0; r < repetitions; ++r) {
    bool observed_fixes = fixes;
    if (prover_.kind == ProverKind::kHlmStochastic &&
        !bernoulli(rng, prover_.p_hlm))
      observed_fixes = !observed_fixes;
    if (observed_fixes) ++votes_for_guess;
  }
  return finish_round(sigma, j, j_guess, votes_for_guess, repetitions);
}

Transcript sni_round(const SiInstance& inst, const ProverModel& prover,
                     Rng& rng, std::uint64_t cap) {
  return SniSession(inst, prover, cap).round(rng);
}

Transcript sni_amplified(const SiInstance& inst, const ProverModel& prover,
                         int repetitions, Rng& rng, std::uint64_t cap) {
  return SniSession(inst, prover, cap).amplified_round(repetitions, rng);
}

double no_case_indistinguishability(const SiInstance& inst, int k,
                                    std::uint64_t cap) {
  const DensityMatrix rho0 =
      group_twirl_mixture(run_pure(inst.circuit0), inst.group, k, cap);
  const DensityMatrix rho1 =
      group_twirl_mixture(run_pure(inst.circuit1), inst.group, k, cap);
  return trace_distance(rho0, rho1);
}

double relaxed_bound(double epsilon, int k) {
  if (epsilon < 0.0 || epsilon > 1.0)
    throw std::invalid_argument("epsilon must be in [0, 1]");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const double inner = 1.0 - std::pow(epsilon, 2 * k);
  return 2.0 * std::sqrt(std::max(0.0, inner));
}

RelaxedReport relaxed_check(const SiInstance& inst, int k, std::uint64_t cap) {
  const PureState psi0 = run_pure(inst.circuit0);
  const PureState psi1 = run_pure(inst.circuit1);
  double best = 0.0;
  for (const auto& sigma : inst.group.enumerate(cap))
    best = std::max(best,
                    std::abs(inner_product(psi1, apply_perm(sigma, psi0))));

  RelaxedReport report;
  report.epsilon = best;
  report.k = k;
  report.bound = relaxed_bound(best, k);
  report.mixture_distance = no_case_indistinguishability(inst, k, cap);
  report.mixture_norm = 2.0 * report.mixture_distance;
  report.holds = report.mixture_norm <= report.bound + 1e-9;
  return report;
}

double zk_view_distance(const SiInstance& inst, ViewStage stage, int k,
                        const ProverModel& prover, std::uint64_t cap) {
  const PureState psi[2] = {run_pure(inst.circuit0), run_pure(inst.circuit1)};
  const auto elements = inst.group.enumerate(cap);
  const double weight = 1.0 / (2.0 * elements.size());

  if (stage == ViewStage::kAfterMessage1) {
    if (k * inst.n() > 10)
      throw TooManyQubits("stage-1 views need k*n <= 10");
    double total = 0.0;
    for (const auto& sigma : elements) {
      for (int j = 0; j < 2; ++j) {
        // Honest protocol: the verifier prepared k copies of P_sigma|psi_j>.
        const DensityMatrix protocol_view = DensityMatrix::from_pure(
            tensor_power(apply_perm(sigma, psi[j]), k));
        // Simulator: selects the same sigma and j, prepares the same copies.
        const DensityMatrix simulator_view = DensityMatrix::from_pure(
            tensor_power(apply_perm(sigma, psi[j]), k));
        total += weight * trace_distance(protocol_view, simulator_view);
      }
    }
    return total;
  }

  // Final stage: message qubits are traced out; what remains is the reply
  // bit next to the verifier's (sigma, j).  The simulator supplies j itself.
  const double p =
      prover.kind == ProverKind::kHlmStochastic ? prover.p_hlm : 1.0;
  // Does some group element align psi_0 with psi_1 exactly?  This decides
  // the prover's wrong-guess branch and is sigma-independent.
  bool isomorphic = false;
  for (const auto& pi : elements)
    if (std::abs(inner_product(psi[1], apply_perm(pi, psi[0]))) >=
        1.0 - kFixTol) {
      isomorphic = true;
      break;
    }

  double total = 0.0;
  for (const auto& sigma : elements) {
    (void)sigma;
    for (int j = 0; j < 2; ++j) {
      // P[reply == j]: the guess j' = j branch sees a fixed point (the
      // sampled sigma itself) and replies j with probability p; the
      // j' != j branch depends on whether the states are isomorphic.
      const double q_right = p;
      const double q_wrong = isomorphic ? 1.0 - p : p;
      const double q = 0.5 * q_right + 0.5 * q_wrong;
      Matrix protocol_reply = Matrix::Zero(2, 2);
      protocol_reply(j, j) = q;
      protocol_reply(flip(j), flip(j)) = 1.0 - q;
      Matrix simulator_reply = Matrix::Zero(2, 2);
      simulator_reply(j, j) = 1.0;
      DensityMatrix a{1, protocol_reply}, b{1, simulator_reply};
      total += weight * trace_distance(a, b);
    }
  }
  return total;
}

std::vector<SgEntry> build_S_G(const SsiInstance& inst, std::uint64_t cap) {
  if (!inst.circuit0.is_clifford() || !inst.circuit1.is_clifford())
    throw std::invalid_argument("S_G needs a stabilizer instance");
  const StabilizerTableau t[2] = {run_stabilizer(inst.circuit0),
                                  run_stabilizer(inst.circuit1)};
  const auto elements = inst.group.enumerate(cap);

  // Orbit of each state's description, remembering one (sigma, j) witness.
  std::map<std::string, std::pair<Permutation, int>> orbit;
  for (int j = 0; j < 2; ++j)
    for (const auto& sigma : elements) {
      std::string desc = description_string(permute_qubits(t[j], sigma));
      orbit.try_emplace(std::move(desc), sigma, j);
    }

  std::vector<SgEntry> entries;
  for (const auto& [desc, witness] : orbit) {
    const StabilizerTableau rep = tableau_from_description(desc);
    for (const auto& pi : elements)
      if (description_string(permute_qubits(rep, pi)) == desc)
        entries.push_back({desc, pi, witness.first, witness.second});
  }
  return entries;
}

bool gs_verify_certificate(const SsiInstance& inst, const SgEntry& cert) {
  if (cert.j != 0 && cert.j != 1) return false;
  if (cert.sigma.degree() != inst.n() ||
      cert.automorphism.degree() != inst.n())
    return false;
  if (!inst.group.contains(cert.sigma)) return false;
  if (!inst.group.contains(cert.automorphism)) return false;
  // Re-derive the description of circuit j (exact oracle readout) and check
  // both the claimed string and the automorphism property.
  const StabilizerTableau tj =
      run_stabilizer(cert.j == 0 ? inst.circuit0 : inst.circuit1);
  if (description_string(permute_qubits(tj, cert.sigma)) != cert.description)
    return false;
  StabilizerTableau rep = tableau_from_description(cert.description);
  return description_string(permute_qubits(rep, cert.automorphism)) ==
         cert.description;
}

namespace {

// Fixed-length bit encoding of an S_G element for hashing: the description
// bytes followed by the 1-based image bytes of the automorphism.
std::vector<std::uint64_t> encode_sg_entry(const SgEntry& e, int degree) {
  std::vector<std::uint8_t> bytes(e.description.begin(), e.description.end());
  for (int i = 0; i < degree; ++i)
    bytes.push_back(static_cast<std::uint8_t>(e.automorphism(i) + 1));
  std::vector<std::uint64_t> words((bytes.size() * 8 + 63) / 64, 0);
  for (std::size_t b = 0; b < bytes.size(); ++b)
    words[b / 8] |= static_cast<std::uint64_t>(bytes[b]) << (8 * (b % 8));
  return words;
}

struct AffineHash {
  std::vector<std::vector<std::uint64_t>> rows;  // m x (L words)
  std::vector<int> offset;                       // m bits

  static AffineHash sample(int m, std::size_t words, Rng& rng) {
    AffineHash h;
    h.rows.assign(m, std::vector<std::uint64_t>(words));
    h.offset.assign(m, 0);
    for (int r = 0; r < m; ++r) {
      for (auto& w : h.rows[r]) w = rng();
      h.offset[r] = coin(rng) ? 1 : 0;
    }
    return h;
  }

  std::uint64_t apply(const std::vector<std::uint64_t>& x) const {
    std::uint64_t out = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int parity = offset[r];
      for (std::size_t w = 0; w < x.size(); ++w)
        parity ^= static_cast<int>(std::popcount(rows[r][w] & x[w]) & 1);
      out |= static_cast<std::uint64_t>(parity) << r;
    }
    return out;
  }
};

}  // namespace

GsReport gs_protocol(const SsiInstance& inst, const GsParams& params, Rng& rng,
                     std::uint64_t cap) {
  const auto entries = build_S_G(inst, cap);
  const auto order = inst.group.order_u64();
  if (!order) throw CapExceeded("group order exceeds 64 bits");
  const double g = static_cast<double>(*order);

  GsReport report;
  report.hash_bits =
      params.hash_bits > 0
          ? params.hash_bits
          : static_cast<int>(std::ceil(std::log2(g))) + 1;
  const double bins = std::exp2(report.hash_bits);
  // Pairwise-independence (Bonferroni) envelope from the set sizes alone.
  auto lb = [&](double size) {
    return std::max(0.0, size / bins - size * (size - 1) / (2.0 * bins * bins));
  };
  auto ub = [&](double size) { return std::min(1.0, size / bins); };
  report.lb_noniso = lb(2.0 * g);
  report.ub_iso = ub(g);
  report.threshold = params.threshold > 0.0
                         ? params.threshold
                         : 0.5 * (report.lb_noniso + report.ub_iso);
  report.rounds = params.rounds;

  std::vector<std::vector<std::uint64_t>> encoded;
  encoded.reserve(entries.size());
  for (const auto& e : entries)
    encoded.push_back(encode_sg_entry(e, inst.n()));
  const std::size_t words = encoded.empty() ? 1 : encoded[0].size();
  const std::uint64_t target_mask =
      report.hash_bits == 64 ? ~std::uint64_t{0}
                             : ((std::uint64_t{1} << report.hash_bits) - 1);

  for (int round = 0; round < params.rounds; ++round) {
    const AffineHash h = AffineHash::sample(report.hash_bits, words, rng);
    const std::uint64_t y = rng() & target_mask;
    // Honest Merlin: exhibit the first preimage in canonical order.
    bool hit = false;
    for (std::size_t i = 0; i < entries.size() && !hit; ++i) {
      if (h.apply(encoded[i]) != y) continue;
      hit = gs_verify_certificate(inst, entries[i]);
    }
    if (hit) ++report.hits;
  }
  report.freq = static_cast<double>(report.hits) / params.rounds;
  report.accept = report.freq >= report.threshold;
  return report;
}

SsniSession::SsniSession(SsiInstance inst, ProverModel prover,
                         std::uint64_t cap)
    : inst_(std::move(inst)),
      prover_(prover),
      tableaux_{run_stabilizer(inst_.circuit0), run_stabilizer(inst_.circuit1)} {
  elements_ = inst_.group.enumerate(cap);
  for (int j = 0; j < 2; ++j)
    for (const auto& sigma : elements_)
      orbit_[j].insert(description_string(permute_qubits(tableaux_[j], sigma)));
  copies_ = prover_.copies > 0 ? prover_.copies
                               : default_copies(inst_.group, inst_.eps());
}

Transcript SsniSession::round(Rng& rng) {
  const Permutation sigma = inst_.group.sample_uniform(rng);
  const int j = coin(rng) ? 1 : 0;
  const std::string desc =
      description_string(permute_qubits(tableaux_[j], sigma));

  const int j_guess = coin(rng) ? 1 : 0;
  // The classical message determines the state exactly, so orbit membership
  // plays the role of the fixed-point test.
  bool fixes = orbit_[j_guess].count(desc) > 0;
  if (prover_.kind == ProverKind::kHlmStochastic &&
      !bernoulli(rng, prover_.p_hlm))
    fixes = !fixes;

  Transcript t;
  t.sigma = sigma;
  t.j = j;
  t.copies = copies_;
  t.j_prime = fixes ? j_guess : flip(j_guess);
  t.accept = t.j_prime == j;
  t.messages.push_back("V->P: " + desc);
  t.messages.push_back("P->V: j'=" + std::to_string(t.j_prime));
  return t;
}

Transcript ssni_classical_round(const SsiInstance& inst,
                                const ProverModel& prover, Rng& rng,
                                std::uint64_t cap) {
  return SsniSession(inst, prover, cap).round(rng);
}

std::vector<TrialRecord> run_sni_trials(const SiInstance& inst,
                                        const ProverModel& prover, int trials,
                                        std::uint64_t master_seed,
                                        int repetitions, std::uint64_t cap) {
  SniSession session(inst, prover, cap);
  std::vector<TrialRecord> records;
  records.reserve(trials);
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t seed = derive_seed(master_seed, i);
    Rng rng = make_rng(seed);
    const Transcript t = repetitions > 1
                             ? session.amplified_round(repetitions, rng)
                             : session.round(rng);
    records.push_back({seed, t.j, t.j_prime, t.accept});
  }
  return records;
}

std::vector<TrialRecord> run_ssni_trials(const SsiInstance& inst,
                                         const ProverModel& prover, int trials,
                                         std::uint64_t master_seed,
                                         std::uint64_t cap) {
  SsniSession session(inst, prover, cap);
  std::vector<TrialRecord> records;
  records.reserve(trials);
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t seed = derive_seed(master_seed, i);
    Rng rng = make_rng(seed);
    const Transcript t = session.round(rng);
    records.push_back({seed, t.j, t.j_prime, t.accept});
  }
  return records;
}

RunStats stats_from_records(const std::vector<TrialRecord>& records) {
  int accepts = 0;
  for (const auto& r : records) accepts += r.accept ? 1 : 0;
  return make_run_stats(static_cast<int>(records.size()), accepts);
}

}  // namespace qiso
