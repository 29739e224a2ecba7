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

// Command-line front end.  Exit codes are a stable contract:
//   0 YES / accept, 1 NO / reject, 2 promise violation,
//   3 usage error, 4 runtime failure, 5 TooManyQubits, 6 CapExceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qiso/errors.hpp"
#include "qiso/instance_gen.hpp"
#include "qiso/json_io.hpp"
#include "qiso/protocols.hpp"

namespace {

using namespace qiso;

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("QISO_CAP")) {
    const std::uint64_t cap = std::strtoull(env, nullptr, 10);
    if (cap > 0) return cap;
  }
  return kDefaultEnumerationCap;
}

struct Options {
  std::string kind;
  std::string flavor = "random";
  std::string name;
  std::string in_path;
  std::string out_path;
  std::string format = "json";
  std::string prover = "exact";
  int n = 2;
  int trials = 1000;
  int k = 0;
  int reps = 1;
  double epsilon = 0.0;
  std::uint64_t seed = 1;
};

ProverModel prover_model(const Options& opt) {
  ProverModel model;
  if (opt.prover == "exact") {
    model.kind = ProverKind::kExactUnbounded;
  } else if (opt.prover == "hlm") {
    model.kind = ProverKind::kHlmStochastic;
  } else if (opt.prover == "cheat") {
    model.kind = ProverKind::kCheatingOptimal;
  } else {
    throw std::invalid_argument("prover must be exact, hlm or cheat");
  }
  model.copies = opt.k;
  return model;
}

int cmd_gen(const Options& opt) {
  Json out;
  const Flavor flavor = flavor_from_string(opt.flavor);
  if (opt.kind == "si") {
    out = si_to_json(gen_si(opt.n, flavor, opt.seed));
  } else if (opt.kind == "ssi") {
    out = ssi_to_json(gen_ssi(opt.n, flavor, opt.seed));
  } else if (opt.kind == "msi") {
    out = msi_to_json(gen_msi(opt.n, flavor, opt.seed));
  } else if (opt.kind == "graph-pair") {
    auto [g, h] = gen_graph_pair(opt.n, flavor, opt.seed);
    out = graph_pair_to_json(g, h);
  } else {
    throw std::invalid_argument("kind must be si, ssi, msi or graph-pair");
  }
  if (opt.out_path.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    write_json_file(opt.out_path, out);
  }
  return 0;
}

Json label_to_json(const PromiseLabel& label) {
  Json out{{"extremal", label.extremal}};
  switch (label.verdict) {
    case Verdict::kYes: out["verdict"] = "YES"; break;
    case Verdict::kNo: out["verdict"] = "NO"; break;
    case Verdict::kPromiseViolated: out["verdict"] = "PROMISE_VIOLATED"; break;
  }
  if (label.witness) out["witness"] = permutation_to_json(*label.witness);
  return out;
}

int label_exit_code(Verdict v) {
  switch (v) {
    case Verdict::kYes: return 0;
    case Verdict::kNo: return 1;
    case Verdict::kPromiseViolated: return 2;
  }
  return 4;
}

int cmd_decide(const Options& opt) {
  const Json j = load_json_file(opt.in_path);
  const std::string kind = instance_kind(j);
  const std::uint64_t cap = enumeration_cap();
  PromiseLabel label;
  if (kind == "SI") {
    label = decide_si(si_from_json(j), cap);
  } else if (kind == "SSI") {
    label = decide_ssi(ssi_from_json(j), cap);
  } else if (kind == "MSI") {
    label = decide_msi(msi_from_json(j), cap);
  } else if (kind == "graph-pair") {
    auto [g, h] = graph_pair_from_json(j);
    auto iso = graph_iso_bruteforce(g, h);
    label.verdict = iso ? Verdict::kYes : Verdict::kNo;
    label.witness = iso;
    label.extremal = iso ? 1.0 : 0.0;
  } else {
    throw std::invalid_argument("unknown instance kind: " + kind);
  }
  std::cout << label_to_json(label).dump(2) << "\n";
  return label_exit_code(label.verdict);
}

int cmd_reduce(const Options& opt) {
  const Json j = load_json_file(opt.in_path);
  Json out;
  if (opt.kind == "gi") {
    auto [g, h] = graph_pair_from_json(j);
    out = ssi_to_json(reduce_gi_to_ssi(g, h));
  } else if (opt.kind == "product") {
    out = msi_to_json(
        reduce_productstate_to_msi(circuit_from_json(j), opt.epsilon));
  } else {
    throw std::invalid_argument("reduce kind must be gi or product");
  }
  if (opt.out_path.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    write_json_file(opt.out_path, out);
  }
  return 0;
}

void write_trials(const Options& opt, const std::vector<TrialRecord>& records) {
  if (opt.out_path.empty()) return;
  std::ofstream out(opt.out_path);
  if (!out) throw std::runtime_error("cannot write " + opt.out_path);
  if (opt.format == "csv") {
    out << "seed,j,j_prime,accept\n";
    for (const auto& r : records)
      out << r.seed << "," << r.j << "," << r.j_prime << ","
          << (r.accept ? 1 : 0) << "\n";
  } else {
    for (const auto& r : records) {
      Json line{{"seed", r.seed},
                {"j", r.j},
                {"j_prime", r.j_prime},
                {"accept", r.accept}};
      out << line.dump() << "\n";
    }
  }
}

Json stats_to_json(const RunStats& stats) {
  return Json{{"trials", stats.trials},
              {"accepts", stats.accepts},
              {"freq", stats.freq},
              {"ci95", stats.ci95}};
}

int cmd_protocol(const Options& opt) {
  const Json j = load_json_file(opt.in_path);
  const std::string kind = instance_kind(j);
  const std::uint64_t cap = enumeration_cap();
  const ProverModel prover = prover_model(opt);

  if (opt.name == "sni" || opt.name == "sni-amplified") {
    SiInstance inst =
        kind == "SSI" ? ssi_from_json(j).as_si() : si_from_json(j);
    const int reps = opt.name == "sni-amplified" ? opt.reps : 1;
    const auto records =
        run_sni_trials(inst, prover, opt.trials, opt.seed, reps, cap);
    write_trials(opt, records);
    std::cout << stats_to_json(stats_from_records(records)).dump(2) << "\n";
    return 0;
  }
  if (opt.name == "ssni") {
    const auto records =
        run_ssni_trials(ssi_from_json(j), prover, opt.trials, opt.seed, cap);
    write_trials(opt, records);
    std::cout << stats_to_json(stats_from_records(records)).dump(2) << "\n";
    return 0;
  }
  if (opt.name == "gs") {
    GsParams params;
    params.rounds = opt.trials;
    Rng rng = make_rng(opt.seed);
    const GsReport report = gs_protocol(ssi_from_json(j), params, rng, cap);
    Json out{{"accept", report.accept},
             {"rounds", report.rounds},
             {"hits", report.hits},
             {"freq", report.freq},
             {"threshold", report.threshold},
             {"hash_bits", report.hash_bits},
             {"lb_noniso", report.lb_noniso},
             {"ub_iso", report.ub_iso}};
    if (!opt.out_path.empty()) write_json_file(opt.out_path, out);
    std::cout << out.dump(2) << "\n";
    return report.accept ? 0 : 1;
  }
  throw std::invalid_argument(
      "protocol must be sni, sni-amplified, ssni or gs");
}

int cmd_stats(const Options& opt) {
  std::ifstream in(opt.in_path);
  if (!in) throw std::runtime_error("cannot open " + opt.in_path);
  int trials = 0, accepts = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Json j = Json::parse(line);
    ++trials;
    if (j.at("accept").get<bool>()) ++accepts;
  }
  std::cout << stats_to_json(make_run_stats(trials, accepts)).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale state isomorphism problems and protocols"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "master RNG seed (all randomness)");
  app.add_option("--out", opt.out_path, "output file path");
  app.add_option("--format", opt.format, "trial output format: json or csv");
  app.add_option("--trials", opt.trials, "trial / round count");
  app.add_option("--prover", opt.prover, "prover model: exact, hlm or cheat");
  app.add_option("--k", opt.k, "copies per message (0 = default)");
  app.add_option("--reps", opt.reps, "prover repetitions (amplified)");

  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--kind", opt.kind, "si | ssi | msi | graph-pair")
      ->required();
  gen->add_option("--n", opt.n, "qubit / vertex count")->required();
  gen->add_option("--flavor", opt.flavor, "yes | no | random");

  auto* decide = app.add_subcommand("decide", "run the decision oracle");
  decide->add_option("--in", opt.in_path, "instance file")->required();

  auto* reduce = app.add_subcommand("reduce", "apply a reduction");
  reduce->add_option("--kind", opt.kind, "gi | product")->required();
  reduce->add_option("--in", opt.in_path, "input file")->required();
  reduce->add_option("--epsilon", opt.epsilon, "promise gap override");

  auto* protocol = app.add_subcommand("protocol", "run protocol trials");
  protocol->add_option("--name", opt.name, "sni | sni-amplified | ssni | gs")
      ->required();
  protocol->add_option("--in", opt.in_path, "instance file")->required();

  auto* stats = app.add_subcommand("stats", "summarize a trial JSONL file");
  stats->add_option("--in", opt.in_path, "trials file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (gen->parsed()) return cmd_gen(opt);
    if (decide->parsed()) return cmd_decide(opt);
    if (reduce->parsed()) return cmd_reduce(opt);
    if (protocol->parsed()) return cmd_protocol(opt);
    if (stats->parsed()) return cmd_stats(opt);
  } catch (const qiso::TooManyQubits& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const qiso::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 3;
}
