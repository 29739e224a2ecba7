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

#include "qiso/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace qiso {

Json permutation_to_json(const Permutation& p) {
  Json out = Json::array();
  for (int i = 0; i < p.degree(); ++i) out.push_back(p(i) + 1);
  return out;
}

Permutation permutation_from_json(const Json& j) {
  std::vector<int> images;
  for (const auto& v : j) images.push_back(v.get<int>() - 1);
  return Permutation(std::move(images));
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(permutation_to_json(p));
  return Json{{"degree", g.degree()}, {"generators", gens}};
}

PermGroup group_from_json(const Json& j) {
  const int degree = j.at("degree").get<int>();
  std::vector<Permutation> gens;
  for (const auto& g : j.at("generators")) {
    Permutation p = permutation_from_json(g);
    if (p.degree() != degree)
      throw std::invalid_argument("generator degree mismatch in group JSON");
    gens.push_back(std::move(p));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  return PermGroup(std::move(gens));
}

Json circuit_to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates) {
    Json item{{"g", gate_name(g.kind)}, {"t", g.target + 1}};
    if (g.kind == GateKind::kCnot || g.kind == GateKind::kCz)
      item["c"] = g.control + 1;
    gates.push_back(std::move(item));
  }
  return Json{{"n_in", c.n_in}, {"n_out", c.n_out}, {"gates", gates}};
}

Circuit circuit_from_json(const Json& j) {
  Circuit c;
  c.n_in = j.at("n_in").get<int>();
  c.n_out = j.at("n_out").get<int>();
  for (const auto& item : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_name(item.at("g").get<std::string>());
    g.target = item.at("t").get<int>() - 1;
    if (g.kind == GateKind::kCnot || g.kind == GateKind::kCz)
      g.control = item.at("c").get<int>() - 1;
    c.gates.push_back(g);
  }
  c.validate();
  return c;
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges)
    edges.push_back(Json::array({a + 1, b + 1}));
  return Json{{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
  return Graph::from_edges(n, std::move(edges));
}

Json state_to_json(const PureState& psi) {
  Json out = Json::array();
  for (std::int64_t i = 0; i < psi.amps.size(); ++i)
    out.push_back(Json::array({psi.amps[i].real(), psi.amps[i].imag()}));
  return out;
}

Json density_to_json(const DensityMatrix& rho) {
  Json out = Json::array();
  for (std::int64_t r = 0; r < rho.rho.rows(); ++r) {
    Json row = Json::array();
    for (std::int64_t c = 0; c < rho.rho.cols(); ++c)
      row.push_back(Json::array({rho.rho(r, c).real(), rho.rho(r, c).imag()}));
    out.push_back(std::move(row));
  }
  return out;
}

DensityMatrix density_from_json(const Json& j) {
  const std::int64_t dim = static_cast<std::int64_t>(j.size());
  int n = 0;
  while ((std::int64_t{1} << n) < dim) ++n;
  if ((std::int64_t{1} << n) != dim)
    throw std::invalid_argument("density dimension must be a power of two");
  DensityMatrix rho;
  rho.n = n;
  rho.rho = Matrix(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r)
    for (std::int64_t c = 0; c < dim; ++c) {
      const auto& cell = j.at(r).at(c);
      rho.rho(r, c) = Complex(cell.at(0).get<double>(),
                              cell.at(1).get<double>());
    }
  return rho;
}

Json si_to_json(const SiInstance& inst) {
  return Json{{"kind", "SI"},
              {"circuit0", circuit_to_json(inst.circuit0)},
              {"circuit1", circuit_to_json(inst.circuit1)},
              {"group", group_to_json(inst.group)},
              {"epsilon", inst.eps()}};
}

SiInstance si_from_json(const Json& j) {
  return SiInstance{circuit_from_json(j.at("circuit0")),
                    circuit_from_json(j.at("circuit1")),
                    group_from_json(j.at("group")),
                    j.value("epsilon", 0.0)};
}

Json ssi_to_json(const SsiInstance& inst) {
  Json out = si_to_json(inst.as_si());
  out["kind"] = "SSI";
  return out;
}

SsiInstance ssi_from_json(const Json& j) {
  SiInstance si = si_from_json(j);
  return SsiInstance{std::move(si.circuit0), std::move(si.circuit1),
                     std::move(si.group), si.epsilon};
}

Json msi_to_json(const MsiInstance& inst) {
  Json out{{"kind", "MSI"},
           {"group", group_to_json(inst.group)},
           {"epsilon", inst.eps()}};
  if (inst.circuit0) out["circuit0"] = circuit_to_json(*inst.circuit0);
  if (inst.circuit1) out["circuit1"] = circuit_to_json(*inst.circuit1);
  if (inst.rho0 && !inst.circuit0) out["rho0"] = density_to_json(*inst.rho0);
  if (inst.rho1 && !inst.circuit1) out["rho1"] = density_to_json(*inst.rho1);
  return out;
}

MsiInstance msi_from_json(const Json& j) {
  MsiInstance inst{.circuit0 = std::nullopt,
                   .circuit1 = std::nullopt,
                   .rho0 = std::nullopt,
                   .rho1 = std::nullopt,
                   .group = group_from_json(j.at("group")),
                   .epsilon = j.value("epsilon", 0.0)};
  if (j.contains("circuit0")) inst.circuit0 = circuit_from_json(j.at("circuit0"));
  if (j.contains("circuit1")) inst.circuit1 = circuit_from_json(j.at("circuit1"));
  if (j.contains("rho0")) inst.rho0 = density_from_json(j.at("rho0"));
  if (j.contains("rho1")) inst.rho1 = density_from_json(j.at("rho1"));
  if (!inst.circuit0 && !inst.rho0)
    throw std::invalid_argument("MSI instance needs circuit0 or rho0");
  if (!inst.circuit1 && !inst.rho1)
    throw std::invalid_argument("MSI instance needs circuit1 or rho1");
  return inst;
}

Json graph_pair_to_json(const Graph& g, const Graph& h) {
  return Json{{"kind", "graph-pair"},
              {"graph0", graph_to_json(g)},
              {"graph1", graph_to_json(h)}};
}

std::pair<Graph, Graph> graph_pair_from_json(const Json& j) {
  return {graph_from_json(j.at("graph0")), graph_from_json(j.at("graph1"))};
}

std::string instance_kind(const Json& j) {
  return j.at("kind").get<std::string>();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace qiso
