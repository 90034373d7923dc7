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

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "symmetra/pauli.hpp"
#include "symmetra/perm_group.hpp"

namespace symmetra {

enum class Boundary { Periodic, Open };

enum class ModelFamily { Tfim1d, Tfim1dInhomogeneous, Tfim2dSquare, HeisenbergMeanField };

namespace detail {

inline PauliString letters_at(std::size_t n,
                              std::initializer_list<std::pair<std::size_t, PauliOp>> ops) {
  std::vector<PauliOp> v(n, PauliOp::I);
  for (auto [i, op] : ops) v[i] = op;
  return PauliString(v);
}

inline Coefficient negated(const Decimal& d) { return {-d, {}}; }

inline std::vector<std::pair<std::size_t, std::size_t>> chain_bonds(std::size_t n,
                                                                    Boundary b) {
  std::vector<std::pair<std::size_t, std::size_t>> bonds;
  for (std::size_t i = 0; i + 1 < n; ++i) bonds.emplace_back(i, i + 1);
  if (b == Boundary::Periodic) bonds.emplace_back(n - 1, 0);
  return bonds;
}

inline void check_chain(std::size_t n, Boundary b) {
  if (b == Boundary::Periodic && n < 3) {
    throw InvalidArgument("periodic chain needs n >= 3, got " + std::to_string(n));
  }
  if (n < 2) throw InvalidArgument("chain needs n >= 2, got " + std::to_string(n));
}

}  // namespace detail

/// Homogeneous transverse-field Ising chain:
/// -J sum Z_i Z_{i+1} - Omega sum X_i.
inline Hamiltonian tfim_1d(std::size_t n, const Decimal& J, const Decimal& omega,
                           Boundary boundary) {
  detail::check_chain(n, boundary);
  std::vector<Term> terms;
  for (auto [i, j] : detail::chain_bonds(n, boundary)) {
    terms.push_back({detail::negated(J),
                     detail::letters_at(n, {{i, PauliOp::Z}, {j, PauliOp::Z}})});
  }
  for (std::size_t i = 0; i < n; ++i) {
    terms.push_back({detail::negated(omega), detail::letters_at(n, {{i, PauliOp::X}})});
  }
  return Hamiltonian(std::move(terms));
}

/// Ising chain with one coupling per bond (bond i joins sites i, i+1, the
/// last periodic bond joins n and 1) and one field per site. Couplings must
/// be pairwise distinct.
inline Hamiltonian tfim_1d_inhomogeneous(std::size_t n, const std::vector<Decimal>& J,
                                         const std::vector<Decimal>& omega,
                                         Boundary boundary) {
  detail::check_chain(n, boundary);
  auto bonds = detail::chain_bonds(n, boundary);
  if (J.size() != bonds.size()) {
    throw InvalidArgument("expected " + std::to_string(bonds.size()) +
                          " couplings, got " + std::to_string(J.size()));
  }
  if (omega.size() != n) {
    throw InvalidArgument("expected " + std::to_string(n) + " fields, got " +
                          std::to_string(omega.size()));
  }
  for (std::size_t a = 0; a < J.size(); ++a) {
    for (std::size_t b = a + 1; b < J.size(); ++b) {
      if (J[a] == J[b]) {
        throw InvalidArgument("duplicate coupling " + J[a].to_string());
      }
    }
  }
  std::vector<Term> terms;
  for (std::size_t k = 0; k < bonds.size(); ++k) {
    auto [i, j] = bonds[k];
    terms.push_back({detail::negated(J[k]),
                     detail::letters_at(n, {{i, PauliOp::Z}, {j, PauliOp::Z}})});
  }
  for (std::size_t i = 0; i < n; ++i) {
    terms.push_back({detail::negated(omega[i]), detail::letters_at(n, {{i, PauliOp::X}})});
  }
  return Hamiltonian(std::move(terms));
}

/// Site index (0-based) of row `r`, column `c` on an lx-wide lattice.
/// Rows alternate direction, so the 2x2 lattice is numbered around the
/// square: 1 2 / 4 3.
inline std::size_t square_site(std::size_t lx, std::size_t r, std::size_t c) {
  return r * lx + (r % 2 == 0 ? c : lx - 1 - c);
}

/// Transverse-field Ising model on an lx x ly square lattice with
/// nearest-neighbour bonds. Periodic wrapping needs the wrapped extent >= 3.
inline Hamiltonian tfim_2d_square(std::size_t lx, std::size_t ly, const Decimal& J,
                                  const Decimal& omega,
                                  Boundary boundary = Boundary::Open) {
  if (lx < 2 || ly < 2) {
    throw InvalidArgument("square lattice needs lx, ly >= 2, got " +
                          std::to_string(lx) + "x" + std::to_string(ly));
  }
  if (boundary == Boundary::Periodic && (lx < 3 || ly < 3)) {
    throw InvalidArgument("periodic square lattice needs lx, ly >= 3");
  }
  const std::size_t n = lx * ly;
  std::vector<Term> terms;
  auto bond = [&](std::size_t a, std::size_t b) {
    terms.push_back({detail::negated(J),
                     detail::letters_at(n, {{a, PauliOp::Z}, {b, PauliOp::Z}})});
  };
  for (std::size_t r = 0; r < ly; ++r) {
    for (std::size_t c = 0; c < lx; ++c) {
      if (c + 1 < lx) {
        bond(square_site(lx, r, c), square_site(lx, r, c + 1));
      } else if (boundary == Boundary::Periodic) {
        bond(square_site(lx, r, c), square_site(lx, r, 0));
      }
      if (r + 1 < ly) {
        bond(square_site(lx, r, c), square_site(lx, r + 1, c));
      } else if (boundary == Boundary::Periodic) {
        bond(square_site(lx, r, c), square_site(lx, 0, c));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    terms.push_back({detail::negated(omega), detail::letters_at(n, {{i, PauliOp::X}})});
  }
  return Hamiltonian(std::move(terms));
}

/// Fully connected XXX model: -J (X_i X_j + Y_i Y_j + Z_i Z_j) for all i < j.
inline Hamiltonian heisenberg_mean_field(std::size_t n, const Decimal& J) {
  if (n < 2) throw InvalidArgument("Heisenberg model needs n >= 2");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (PauliOp op : {PauliOp::X, PauliOp::Y, PauliOp::Z}) {
        terms.push_back({detail::negated(J), detail::letters_at(n, {{i, op}, {j, op}})});
      }
    }
  }
  return Hamiltonian(std::move(terms));
}

/// Parameters of one benchmark instance. For the inhomogeneous chain the
/// per-bond and per-site lists are used; otherwise the scalar J and omega.
struct ModelSpec {
  ModelFamily family = ModelFamily::Tfim1d;
  std::size_t n = 0;  // sites; for the square lattice lx * ly
  std::size_t lx = 0;
  std::size_t ly = 0;
  Decimal J = Decimal::from_int(1);
  Decimal omega = Decimal::from_int(1);
  std::vector<Decimal> J_list;
  std::vector<Decimal> omega_list;
  Boundary boundary = Boundary::Periodic;
};

inline Hamiltonian build_model(const ModelSpec& s) {
  switch (s.family) {
    case ModelFamily::Tfim1d:
      return tfim_1d(s.n, s.J, s.omega, s.boundary);
    case ModelFamily::Tfim1dInhomogeneous:
      return tfim_1d_inhomogeneous(s.n, s.J_list, s.omega_list, s.boundary);
    case ModelFamily::Tfim2dSquare:
      return tfim_2d_square(s.lx, s.ly, s.J, s.omega, s.boundary);
    case ModelFamily::HeisenbergMeanField:
      return heisenberg_mean_field(s.n, s.J);
  }
  throw InvalidArgument("unknown model family");
}

struct KnownGroup {
  std::vector<Permutation> expected_generators;
  BigInt expected_order;
};

/// Site rotation k -> k+1 (mod n), the cycle (1 2 ... n).
inline Permutation chain_rotation(std::size_t n) {
  std::vector<Permutation::Point> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = static_cast<Permutation::Point>((k + 1) % n);
  return Permutation(std::move(img));
}

/// Reflection of a ring through site 1: k -> 2 - k (mod n), 1-based.
inline Permutation ring_reflection(std::size_t n) {
  std::vector<Permutation::Point> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = static_cast<Permutation::Point>((n - k) % n);
  return Permutation(std::move(img));
}

/// Reflection of an open chain about its centre: k -> n + 1 - k, 1-based.
inline Permutation chain_reflection(std::size_t n) {
  std::vector<Permutation::Point> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = static_cast<Permutation::Point>(n - 1 - k);
  return Permutation(std::move(img));
}

/// Analytically known symmetry group of a validated model family.
inline KnownGroup known_group(const ModelSpec& s) {
  KnownGroup k;
  switch (s.family) {
    case ModelFamily::Tfim1d:
      detail::check_chain(s.n, s.boundary);
      if (s.boundary == Boundary::Periodic) {
        k.expected_generators = {chain_rotation(s.n), ring_reflection(s.n)};
        k.expected_order = 2 * s.n;
      } else {
        k.expected_generators = {chain_reflection(s.n)};
        k.expected_order = 2;
      }
      return k;
    case ModelFamily::Tfim1dInhomogeneous:
      detail::check_chain(s.n, s.boundary);
      k.expected_order = 1;
      return k;
    case ModelFamily::Tfim2dSquare:
      if (s.lx != 2 || s.ly != 2 || s.boundary != Boundary::Open) {
        throw InvalidArgument("known group only available for the open 2x2 lattice");
      }
      // The two axis reflections alone only give the Klein four-group; the
      // diagonal reflection (2 4) completes D_4.
      k.expected_generators = {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 4)(2 3)", 4),
                               parse_cycles("(2 4)", 4)};
      k.expected_order = 8;
      return k;
    case ModelFamily::HeisenbergMeanField: {
      if (s.n < 2) throw InvalidArgument("Heisenberg model needs n >= 2");
      BigInt order = 1;
      for (std::size_t i = 0; i < s.n - 1; ++i) {
        std::vector<Permutation::Point> img(s.n);
        for (std::size_t p = 0; p < s.n; ++p) img[p] = static_cast<Permutation::Point>(p);
        std::swap(img[i], img[i + 1]);
        k.expected_generators.emplace_back(std::move(img));
      }
      for (std::size_t i = 2; i <= s.n; ++i) order *= i;
      k.expected_order = order;
      return k;
    }
  }
  throw InvalidArgument("unknown model family");
}

}  // namespace symmetra
