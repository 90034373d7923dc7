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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "symmetra/symmetra.hpp"
#include "test_support.hpp"

namespace symmetra {
namespace {

constexpr const char* kSixTerm =
    "-1 IXY\n1 YZZ\n-2 YXI\n2 ZIZ\n-3 XXI\n3 YZI\n";

PermutationGroup group_of(std::size_t n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) gens.push_back(parse_cycles(c, n));
  return build_group(n, gens);
}

Hamiltonian ring(std::size_t n) {
  return tfim_1d(n, Decimal::from_int(1), Decimal::from_int(1), Boundary::Periodic);
}

TEST(CheckAutomorphismTest, ReportsEachCondition) {
  auto g = build_graph(parse_hamiltonian("1 XI\n2 IZ\n")).graph();
  // Swapping the qubits breaks edge colours.
  auto swap_q = Permutation({1, 0, 2, 3});
  auto c = check_automorphism(g, swap_q);
  EXPECT_FALSE(c.ok());
  // Swapping the two terms breaks vertex colours.
  auto swap_t = Permutation({0, 1, 3, 2});
  EXPECT_FALSE(check_automorphism(g, swap_t).vertex_colour);
  EXPECT_TRUE(check_automorphism(g, Permutation::identity(4)).ok());
  EXPECT_THROW(check_automorphism(g, Permutation::identity(3)), DimensionError);
}

TEST(AutomorphismTest, RingOfFive) {
  auto r = find_symmetry_group(ring(5));
  EXPECT_EQ(r.group.order(), 10);
  EXPECT_TRUE(groups_equal(r.group, group_of(5, {"(2 5)(3 4)", "(1 2)(3 5)"})));
  for (const auto& g : r.qubit_generators) EXPECT_TRUE(is_symmetry(g, ring(5)));
}

TEST(AutomorphismTest, InhomogeneousRingIsRigid) {
  std::vector<Decimal> J, om(5, Decimal::from_int(1));
  for (int i = 1; i <= 5; ++i) J.push_back(Decimal::from_int(i));
  auto r = find_symmetry_group(tfim_1d_inhomogeneous(5, J, om, Boundary::Periodic));
  EXPECT_EQ(r.group.order(), 1);
  EXPECT_TRUE(r.qubit_generators.empty());
}

TEST(AutomorphismTest, TwoSingleSiteTerms) {
  auto r = find_symmetry_group(parse_hamiltonian("1 XI\n1 IX\n"));
  EXPECT_EQ(r.group.order(), 2);
  EXPECT_TRUE(groups_equal(r.group, group_of(2, {"(1 2)"})));
}

TEST(AutomorphismTest, Square) {
  Hamiltonian h = tfim_2d_square(2, 2, Decimal::from_int(1), Decimal::from_int(1));
  auto r = find_symmetry_group(h);
  EXPECT_EQ(r.group.order(), 8);
  EXPECT_TRUE(groups_equal(r.group, group_of(4, {"(2 4)", "(1 2)(3 4)"})));
}

TEST(AutomorphismTest, MeanFieldHeisenberg) {
  EXPECT_EQ(find_symmetry_group(heisenberg_mean_field(5, Decimal::from_int(1))).group.order(),
            120);
}

TEST(AutomorphismTest, OpenChainOfEight) {
  auto h = tfim_1d(8, Decimal::from_int(1), Decimal::from_int(1), Boundary::Open);
  auto r = find_symmetry_group(h);
  EXPECT_EQ(r.group.order(), 2);
  ASSERT_EQ(r.qubit_generators.size(), 1u);
  EXPECT_EQ(format_cycles(r.qubit_generators[0]), "(1 8)(2 7)(3 6)(4 5)");
}

TEST(AutomorphismTest, SixTermExampleIsRigid) {
  auto r = find_symmetry_group(parse_hamiltonian(kSixTerm));
  EXPECT_EQ(r.group.order(), 1);
}

TEST(AutomorphismTest, IdentityTermsAndEmptyQubits) {
  // Qubit 3 is untouched; qubits 2 and 3 are then interchangeable only if
  // both are idle.
  auto r = find_symmetry_group(parse_hamiltonian("1 XII\n5 III\n"));
  EXPECT_TRUE(groups_equal(r.group, group_of(3, {"(2 3)"})));
}

TEST(RestrictToQubitsTest, Basic) {
  EXPECT_TRUE(restrict_to_qubits(Permutation::identity(7), 3).is_identity());
  EXPECT_EQ(format_cycles(restrict_to_qubits(Permutation({1, 0, 2, 4, 3}), 2)), "(1 2)");
  EXPECT_THROW(restrict_to_qubits(Permutation({3, 1, 2, 0}), 3), InternalError);
}

TEST(CanonicalFormTest, SelfAndCoefficientChange) {
  Hamiltonian h = parse_hamiltonian(kSixTerm);
  EXPECT_EQ(canonical_form(build_graph(h)), canonical_form(build_graph(h)));
  Hamiltonian h2 = parse_hamiltonian("-1 IXY\n1 YZZ\n-2 YXI\n2 ZIZ\n-4 XXI\n3 YZI\n");
  EXPECT_NE(canonical_form(build_graph(h)), canonical_form(build_graph(h2)));
}

TEST(CanonicalFormTest, InvariantUnderQubitRelabelling) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + rng() % 7;
    auto h = testing::random_hamiltonian(n, 12, rng, 2);
    auto sigma = testing::random_permutation(n, rng);
    ASSERT_EQ(canonical_form(build_graph(h)),
              canonical_form(build_graph(permute_hamiltonian(sigma, h))));
  }
}

// Random vertex relabellings that keep qubits in the qubit block and terms
// in the term block.
TEST(CanonicalFormTest, InvariantUnderBlockRelabelling) {
  std::mt19937_64 rng(29);
  for (int h_it = 0; h_it < 10; ++h_it) {
    std::size_t n = 3 + rng() % 5;
    auto h = testing::random_hamiltonian(n, 14, rng, 2, 3);
    auto g = build_graph(h).graph();
    const std::string cert = canonical_form(g);
    std::size_t m = g.num_vertices() - n;
    for (int it = 0; it < 100; ++it) {
      Permutation pq = testing::random_permutation(n, rng);
      Permutation pt = testing::random_permutation(m, rng);
      std::vector<Permutation::Point> img(g.num_vertices());
      for (std::size_t i = 0; i < n; ++i) img[i] = pq(static_cast<Permutation::Point>(i));
      for (std::size_t r = 0; r < m; ++r) {
        img[n + r] = static_cast<Permutation::Point>(n + pt(static_cast<Permutation::Point>(r)));
      }
      ASSERT_EQ(canonical_form(testing::relabel(g, Permutation(img))), cert);
    }
  }
}

TEST(CanonicalFormTest, LabellingYieldsCertificate) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 100; ++it) {
    auto h = testing::random_hamiltonian(2 + rng() % 5, 10, rng, 2);
    auto g = build_graph(h).graph();
    auto res = search_graph(g);
    // Relabel by the canonical labelling; the result must be a fixed point.
    std::vector<Permutation::Point> to_label(g.num_vertices());
    for (std::size_t l = 0; l < to_label.size(); ++l) {
      to_label[res.canonical_labelling[l]] = static_cast<Permutation::Point>(l);
    }
    auto canon = testing::relabel(g, Permutation(to_label));
    ASSERT_EQ(search_graph(canon).certificate, res.certificate);
  }
}

TEST(SolverVsOracleTest, RandomSmallHamiltonians) {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 300; ++it) {
    std::size_t n = 1 + rng() % 7;
    auto h = testing::random_hamiltonian(n, 10, rng, 2, 1 + rng() % 3);
    auto solved = find_symmetry_group(h);
    auto oracle = brute_force_group(h);
    ASSERT_TRUE(groups_equal(solved.group, oracle) && groups_equal(oracle, solved.group))
        << serialize_hamiltonian(h);
  }
}

TEST(SolverVsOracleTest, HighlySymmetricInputs) {
  // Many identical single-site and pair terms: large groups, deep searches.
  for (std::size_t n = 2; n <= 7; ++n) {
    std::string text;
    for (std::size_t i = 0; i < n; ++i) {
      std::string s(n, 'I');
      s[i] = 'X';
      text += "1 " + s + "\n";
    }
    auto h = parse_hamiltonian(text);
    auto r = find_symmetry_group(h);
    EXPECT_TRUE(groups_equal(r.group, brute_force_group(h))) << n;
  }
}

TEST(SubdividedGraphTest, SameGroupAsNativeColours) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 150; ++it) {
    std::size_t n = 1 + rng() % 6;
    auto h = testing::random_hamiltonian(n, 10, rng, 2, 3);
    auto bg = build_graph(h);
    auto native = automorphism_generators(bg);
    auto sub = search_graph(build_subdivided_graph(bg));
    std::vector<Permutation> gens;
    for (const auto& phi : sub.generators) {
      ASSERT_TRUE(check_automorphism(build_subdivided_graph(bg), phi).ok());
      gens.push_back(restrict_to_qubits(phi, n));
    }
    ASSERT_TRUE(groups_equal(build_group(n, gens), native.group));
    ASSERT_TRUE(groups_equal(native.group, build_group(n, gens)));
  }
}

TEST(SearchTest, Deterministic) {
  auto h = heisenberg_mean_field(6, Decimal::from_int(1));
  auto a = find_symmetry_group(h);
  auto b = find_symmetry_group(h);
  ASSERT_EQ(a.qubit_generators.size(), b.qubit_generators.size());
  for (std::size_t k = 0; k < a.qubit_generators.size(); ++k) {
    EXPECT_EQ(a.qubit_generators[k], b.qubit_generators[k]);
  }
  EXPECT_EQ(a.canonical_certificate, b.canonical_certificate);
}

}  // namespace
}  // namespace symmetra
