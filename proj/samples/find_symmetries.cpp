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

// Minimal library usage: symmetry group of a periodic Ising ring.

#include <iostream>

#include "symmetra/symmetra.hpp"

int main() {
  using namespace symmetra;
  Hamiltonian h = tfim_1d(6, Decimal::from_int(1), Decimal::parse("0.5"), Boundary::Periodic);
  AutomorphismResult r = find_symmetry_group(h);
  std::cout << serialize_hamiltonian(h) << "\n";
  for (const auto& g : r.qubit_generators) std::cout << format_cycles(g) << "\n";
  std::cout << "order " << r.group.order() << "\n";
}
