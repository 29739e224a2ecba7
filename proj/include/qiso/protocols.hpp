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
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qiso/problems.hpp"
#include "qiso/tableau.hpp"

namespace qiso {

// Interactive proof simulations for StateNonIsomorphism.  A YES instance of
// the non-isomorphism protocols is an SI NO instance and vice versa.  Rounds
// are simulated analytically from single-register overlaps; tensor-power
// states are only materialized where the density matrices themselves are
// under test (mixture indistinguishability, verifier views).

enum class ProverKind {
  kExactUnbounded,   // resolves the distinguishing promise exactly
  kHlmStochastic,    // correct case with probability p_hlm, else flipped
  kCheatingOptimal,  // best strategy on isomorphic instances (coin flip)
};

struct ProverModel {
  ProverKind kind = ProverKind::kExactUnbounded;
  double p_hlm = 2.0 / 3.0;
  int copies = 0;  // 0 means default_copies(group, eps)
};

/// ceil(log2 |G| / (1 - eps)), at least 1.
int default_copies(const PermGroup& g, double epsilon);

struct Transcript {
  Permutation sigma;  // verifier's sampled group element
  int j = 0;          // verifier's sampled bit
  int j_prime = 0;    // prover's reply
  bool accept = false;  // accept iff j_prime == j
  int copies = 0;       // k used for the message state
  std::vector<std::string> messages;
};

struct RunStats {
  int trials = 0;
  int accepts = 0;
  double freq = 0.0;
  double ci95 = 0.0;
};
RunStats make_run_stats(int trials, int accepts);

enum class HlmCase { kFixes = 1, kFar = 2 };
using UnitaryApplier = std::function<PureState(const PureState&)>;

/// Behavioral model of the fixed-point distinguisher: given |psi> and a
/// unitary family promised to either contain an exact fixer of |psi> or have
/// all overlaps <= 1 - delta, report which case holds.  The exact prover
/// resolves the promise from the computed maximum; the stochastic one is
/// right with probability p_hlm.  Throws PromiseViolation when the maximum
/// lands inside (1 - delta, 1).
HlmCase hlm_distinguish(const PureState& psi,
                        const std::vector<UnitaryApplier>& family,
                        double delta, const ProverModel& model, Rng& rng);

/// Precomputed context for running many protocol rounds on one instance.
class SniSession {
 public:
  SniSession(SiInstance inst, ProverModel prover,
             std::uint64_t cap = kDefaultEnumerationCap);

  /// One two-message round: the verifier samples sigma and j, the prover
  /// replies, accept iff the reply equals j.
  Transcript round(Rng& rng);

  /// The prover repeats its distinguishing procedure and majority-votes.
  Transcript amplified_round(int repetitions, Rng& rng);

  const SiInstance& instance() const { return inst_; }

 private:
  bool guess_sees_fixed_point(const PureState& message, int j_guess) const;
  Transcript finish_round(const Permutation& sigma, int j, int j_guess,
                          int votes_for_guess, int repetitions) const;

  SiInstance inst_;
  ProverModel prover_;
  int copies_;
  PureState psi_[2];
  std::vector<Permutation> elements_;
  std::vector<PureState> permuted_[2];  // P_pi |psi_j> per group element
};

Transcript sni_round(const SiInstance& inst, const ProverModel& prover,
                     Rng& rng, std::uint64_t cap = kDefaultEnumerationCap);
Transcript sni_amplified(const SiInstance& inst, const ProverModel& prover,
                         int repetitions, Rng& rng,
                         std::uint64_t cap = kDefaultEnumerationCap);

/// Trace distance of the two group-twirled k-copy mixtures; zero (within
/// numerical dust) exactly when the instance is isomorphic.
double no_case_indistinguishability(const SiInstance& inst, int k,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// Trace-norm bound 2 sqrt(1 - eps^{2k}) on the mixture difference under the
/// relaxed promise "some sigma has overlap >= eps".
double relaxed_bound(double epsilon, int k);

struct RelaxedReport {
  double epsilon = 0.0;  // best overlap achieved by the instance
  int k = 0;
  double bound = 0.0;
  double mixture_distance = 0.0;
  double mixture_norm = 0.0;
  bool holds = false;
};
RelaxedReport relaxed_check(const SiInstance& inst, int k,
                            std::uint64_t cap = kDefaultEnumerationCap);

enum class ViewStage { kAfterMessage1, kFinal };

/// Trace distance between the verifier's view of the honest protocol and the
/// simulator's output at the given stage, as a mixture over (sigma, j).
/// Stage 1 views are the k-copy message states themselves (k*n <= 10);
/// final views compare the prover's reply against the simulator's j.
double zk_view_distance(const SiInstance& inst, ViewStage stage, int k,
                        const ProverModel& prover,
                        std::uint64_t cap = kDefaultEnumerationCap);

/// Element of S_G: a permuted canonical description together with an
/// automorphism of it, plus the (sigma, j) certificate that exhibits it.
struct SgEntry {
  std::string description;
  Permutation automorphism;
  Permutation sigma;
  int j = 0;
};

/// Enumerates S_G.  Orbit-stabilizer makes the size |G| on isomorphic
/// instances and 2|G| on non-isomorphic ones.
std::vector<SgEntry> build_S_G(const SsiInstance& inst,
                               std::uint64_t cap = kDefaultEnumerationCap);

/// Arthur's certificate check: sigma and the automorphism are group members,
/// the description re-derives from circuit j under sigma, and the
/// automorphism fixes it.
bool gs_verify_certificate(const SsiInstance& inst, const SgEntry& cert);

struct GsParams {
  int hash_bits = 0;      // 0: ceil(log2 |G|) + 1
  int rounds = 1000;
  double threshold = 0.0;  // 0: midpoint of the analytic envelope
};

struct GsReport {
  bool accept = false;  // the set-size lower bound (non-isomorphism) upheld
  int rounds = 0;
  int hits = 0;
  double freq = 0.0;
  double threshold = 0.0;
  int hash_bits = 0;
  // Pairwise-independence envelope computed from |G| alone:
  // [lb_noniso, 1] covers the non-isomorphic hit rate, [0, ub_iso] the
  // isomorphic one.
  double lb_noniso = 0.0;
  double ub_iso = 0.0;
};

/// Goldwasser-Sipser set lower bound over S_G with random GF(2) affine
/// hashing: Arthur accepts the non-isomorphism claim when Merlin can exhibit
/// verified preimages often enough.
GsReport gs_protocol(const SsiInstance& inst, const GsParams& params, Rng& rng,
                     std::uint64_t cap = kDefaultEnumerationCap);

/// Classical-communication variant of the SNI round for stabilizer
/// instances: the verifier transmits the canonical description string
/// instead of a quantum register.
class SsniSession {
 public:
  SsniSession(SsiInstance inst, ProverModel prover,
              std::uint64_t cap = kDefaultEnumerationCap);
  Transcript round(Rng& rng);
  const SsiInstance& instance() const { return inst_; }

 private:
  SsiInstance inst_;
  ProverModel prover_;
  int copies_;
  StabilizerTableau tableaux_[2];
  std::vector<Permutation> elements_;
  std::set<std::string> orbit_[2];
};

Transcript ssni_classical_round(const SsiInstance& inst,
                                const ProverModel& prover, Rng& rng,
                                std::uint64_t cap = kDefaultEnumerationCap);

/// Per-trial record of a protocol run; seeds derive from the master seed so
/// serial and concurrent executions agree.
struct TrialRecord {
  std::uint64_t seed = 0;
  int j = 0;
  int j_prime = 0;
  bool accept = false;
};

std::vector<TrialRecord> run_sni_trials(
    const SiInstance& inst, const ProverModel& prover, int trials,
    std::uint64_t master_seed, int repetitions = 1,
    std::uint64_t cap = kDefaultEnumerationCap);

std::vector<TrialRecord> run_ssni_trials(
    const SsiInstance& inst, const ProverModel& prover, int trials,
    std::uint64_t master_seed, std::uint64_t cap = kDefaultEnumerationCap);

RunStats stats_from_records(const std::vector<TrialRecord>& records);

}  // namespace qiso
