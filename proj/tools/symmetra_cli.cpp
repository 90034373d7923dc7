// Copyright 2026 The Symmetra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// symmetra: permutation symmetries of Pauli-string Hamiltonians.
//
// Exit codes: 0 success / groups equal / equivalent, 1 internal failure or
// verification mismatch, 2 input error, 3 not equivalent.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symmetra/graph_json.hpp"
#include "symmetra/symmetra.hpp"

namespace {

using namespace symmetra;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInputError = 2;
constexpr int kNotEquivalent = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Hamiltonian load(const std::string& path) {
  try {
    return parse_hamiltonian(read_input(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// SYMMETRA_COEFF_EPS selects quantized coefficient classes.
CoefficientPolicy policy_from_env() {
  const char* eps = std::getenv("SYMMETRA_COEFF_EPS");
  if (eps == nullptr || *eps == '\0') return CoefficientPolicy::exact();
  return CoefficientPolicy::quantized(Decimal::parse(eps));
}

std::string group_report(const Hamiltonian& h, const AutomorphismResult& r, bool json,
                         bool timing, double elapsed_ms) {
  if (json) {
    nlohmann::ordered_json j;
    j["n"] = h.num_qubits();
    j["num_terms"] = h.num_terms();
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : r.qubit_generators) gens.push_back(format_cycles(g));
    j["generators"] = gens;
    j["group_order"] = r.group.order().str();
    auto orbits = nlohmann::ordered_json::array();
    for (const auto& orb : r.group.orbits()) {
      auto o = nlohmann::ordered_json::array();
      for (auto p : orb) o.push_back(p + 1);
      orbits.push_back(o);
    }
    j["orbits"] = orbits;
    j["elapsed_ms"] = timing ? elapsed_ms : 0.0;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "qubits: " << h.num_qubits() << "\n";
  out << "terms: " << h.num_terms() << "\n";
  if (r.qubit_generators.empty()) {
    out << "generators: (none)\n";
  } else {
    out << "generators:\n";
    for (const auto& g : r.qubit_generators) out << "  " << format_cycles(g) << "\n";
  }
  out << "group order: " << r.group.order().str() << "\n";
  out << "orbits: " << format_orbits(r.group.orbits()) << "\n";
  if (timing) out << "elapsed ms: " << elapsed_ms << "\n";
  return out.str();
}

int cmd_find(const std::string& input, bool json, bool timing) {
  Hamiltonian h = load(input);
  auto t0 = std::chrono::steady_clock::now();
  AutomorphismResult r = find_symmetry_group(h, policy_from_env());
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0).count();
  std::cout << group_report(h, r, json, timing, ms);
  return kOk;
}

int cmd_equiv(const std::string& a, const std::string& b, bool json) {
  Hamiltonian h1 = load(a);
  Hamiltonian h2 = load(b);
  if (h1.num_qubits() != h2.num_qubits()) {
    std::cerr << "error: qubit counts differ (" << h1.num_qubits() << " vs "
              << h2.num_qubits() << ")\n";
    return kInputError;
  }
  CoefficientPolicy policy = policy_from_env();
  auto witness = permutation_equivalent(h1, h2, policy);
  if (json) {
    nlohmann::ordered_json j;
    j["equivalent"] = witness.has_value();
    j["witness"] = witness ? nlohmann::ordered_json(format_cycles(*witness))
                           : nlohmann::ordered_json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (witness) {
    std::cout << "equivalent: yes\nwitness: " << format_cycles(*witness) << "\n";
  } else {
    std::cout << "equivalent: no\n";
  }
  return witness ? kOk : kNotEquivalent;
}

struct ModelOptions {
  std::string family;
  std::size_t n = 0;
  std::size_t lx = 0;
  std::size_t ly = 0;
  std::string J = "1";
  std::string omega = "1";
  std::string boundary;  // default: periodic for chains, open for tfim2d
};

std::vector<Decimal> decimal_list(const std::string& text) {
  std::vector<Decimal> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Decimal::parse(item));
  return out;
}

int cmd_model(const ModelOptions& o) {
  ModelSpec s;
  s.n = o.n;
  s.lx = o.lx;
  s.ly = o.ly;
  if (o.boundary.empty()) {
    s.boundary = o.family == "tfim2d" ? Boundary::Open : Boundary::Periodic;
  } else if (o.boundary == "periodic") {
    s.boundary = Boundary::Periodic;
  } else if (o.boundary == "open") {
    s.boundary = Boundary::Open;
  } else {
    throw InvalidArgument("unknown boundary '" + o.boundary + "'");
  }
  if (o.family == "tfim1d") {
    s.family = ModelFamily::Tfim1d;
    s.J = Decimal::parse(o.J);
    s.omega = Decimal::parse(o.omega);
  } else if (o.family == "tfim1d-inhom") {
    s.family = ModelFamily::Tfim1dInhomogeneous;
    s.J_list = decimal_list(o.J);
    s.omega_list = decimal_list(o.omega);
    // A single field value applies to every site.
    if (s.omega_list.size() == 1 && s.n > 1) s.omega_list.assign(s.n, s.omega_list[0]);
  } else if (o.family == "tfim2d") {
    s.family = ModelFamily::Tfim2dSquare;
    s.J = Decimal::parse(o.J);
    s.omega = Decimal::parse(o.omega);
    s.n = s.lx * s.ly;
  } else if (o.family == "heisenberg-mf") {
    s.family = ModelFamily::HeisenbergMeanField;
    s.J = Decimal::parse(o.J);
  } else {
    throw InvalidArgument("unknown family '" + o.family + "'");
  }
  std::cout << serialize_hamiltonian(build_model(s));
  return kOk;
}

int cmd_verify(const std::string& input, std::size_t n_max, bool force) {
  Hamiltonian h = load(input);
  if (h.num_qubits() > n_max && !force) {
    std::cerr << "error: " << h.num_qubits() << " qubits exceeds the brute-force limit "
              << n_max << " (use --force)\n";
    return kInputError;
  }
  AutomorphismResult solved = find_symmetry_group(h);
  PermutationGroup oracle = brute_force_group(h, std::max(n_max, h.num_qubits()));
  bool solver_in_oracle = true;
  for (const auto& g : solved.group.generators()) solver_in_oracle &= oracle.contains(g);
  bool oracle_in_solver = true;
  for (const auto& g : oracle.strong_generators()) {
    oracle_in_solver &= solved.group.contains(g);
  }
  bool equal = solved.group.order() == oracle.order() && solver_in_oracle && oracle_in_solver;
  std::cout << "solver order: " << solved.group.order().str() << "\n";
  std::cout << "oracle order: " << oracle.order().str() << "\n";
  std::cout << "solver generators in oracle group: " << (solver_in_oracle ? "yes" : "no")
            << "\n";
  std::cout << "oracle generators in solver group: " << (oracle_in_solver ? "yes" : "no")
            << "\n";
  std::cout << "result: " << (equal ? "MATCH" : "MISMATCH") << "\n";
  return equal ? kOk : kInternal;
}

int cmd_graph(const std::string& input, const std::string& format, bool subdivide) {
  Hamiltonian h = load(input);
  auto g = build_graph(h, policy_from_env());
  if (format == "json") {
    std::cout << export_json(g);
  } else if (format == "dot") {
    if (subdivide) {
      ColouredGraph s = build_subdivided_graph(g);
      std::cout << "graph subdivided {\n";
      for (ColouredGraph::Vertex v = 0; v < s.num_vertices(); ++v) {
        std::cout << "  v" << v << " [colour=" << s.colour(v) << "];\n";
      }
      for (ColouredGraph::Vertex v = 0; v < s.num_vertices(); ++v) {
        for (const auto& a : s.neighbours(v)) {
          if (a.to > v) std::cout << "  v" << v << " -- v" << a.to << ";\n";
        }
      }
      std::cout << "}\n";
    } else {
      std::cout << export_dot(g);
    }
  } else {
    throw InvalidArgument("unknown format '" + format + "'");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation symmetry groups of Pauli-string Hamiltonians"};
  app.require_subcommand(1);

  std::string input, other, format = "dot";
  bool json = false, timing = false, force = false, subdivide = false;
  std::size_t n_max = kDefaultOracleMaxQubits;
  ModelOptions model;

  auto* find = app.add_subcommand("find", "compute the qubit permutation symmetry group");
  find->add_option("input", input, "Hamiltonian file ('-' for stdin)")->required();
  find->add_flag("--json", json, "emit JSON");
  find->add_flag("--timing", timing, "report wall time (non-deterministic output)");

  auto* equiv = app.add_subcommand("equiv", "decide permutation equivalence of two Hamiltonians");
  equiv->add_option("a", input, "first Hamiltonian file")->required();
  equiv->add_option("b", other, "second Hamiltonian file")->required();
  equiv->add_flag("--json", json, "emit JSON");

  auto* mdl = app.add_subcommand("model", "print a benchmark Hamiltonian");
  mdl->add_option("--family", model.family, "tfim1d | tfim1d-inhom | tfim2d | heisenberg-mf")
      ->required();
  mdl->add_option("--n", model.n, "number of sites");
  mdl->add_option("--lx", model.lx, "lattice width (tfim2d)");
  mdl->add_option("--ly", model.ly, "lattice height (tfim2d)");
  mdl->add_option("--J", model.J, "coupling; comma-separated per bond for tfim1d-inhom");
  mdl->add_option("--Omega", model.omega, "field; comma-separated per site for tfim1d-inhom");
  mdl->add_option("--boundary", model.boundary, "periodic | open");

  auto* verify = app.add_subcommand("verify", "compare the solver with brute force");
  verify->add_option("input", input, "Hamiltonian file")->required();
  verify->add_option("--n-max", n_max, "largest qubit count for brute force");
  verify->add_flag("--force", force, "run brute force beyond --n-max");

  auto* graph = app.add_subcommand("graph", "export the coloured bipartite graph");
  graph->add_option("input", input, "Hamiltonian file")->required();
  graph->add_option("--format", format, "dot | json");
  graph->add_flag("--subdivide", subdivide, "vertex-coloured encoding with mid-edge vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*find) return cmd_find(input, json, timing);
    if (*equiv) return cmd_equiv(input, other, json);
    if (*mdl) return cmd_model(model);
    if (*verify) return cmd_verify(input, n_max, force);
    if (*graph) return cmd_graph(input, format, subdivide);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
