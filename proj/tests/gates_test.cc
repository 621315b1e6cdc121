// Copyright 2026 The erasurelab Authors
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


#include "erasurelab/gates.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "erasurelab/codes.h"

namespace erasurelab {
namespace {

PureState random_state(const SiteDims& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  cvector_t v(static_cast<Eigen::Index>(dims.total()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {g(rng), g(rng)};
  return PureState(dims, v);
}

double distance(const PureState& a, const PureState& b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

TEST(StandardGate, AllAreUnitary) {
  for (GateKind k : {GateKind::kH, GateKind::kX, GateKind::kY, GateKind::kZ, GateKind::kCNOT,
                     GateKind::kToffoli, GateKind::kCZ}) {
    const Gate g = standard_gate(k);
    EXPECT_LE(unitarity_deviation(g.matrix), 1e-12) << gate_kind_name(k);
    EXPECT_EQ(g.matrix.rows(), Eigen::Index{1} << g.arity);
    EXPECT_EQ(parse_gate_kind(gate_kind_name(k)), k);
  }
  EXPECT_THROW(standard_gate(GateKind::kCustom), std::invalid_argument);
  EXPECT_THROW(parse_gate_kind("SWAP"), std::invalid_argument);
}

TEST(StandardGate, HadamardTwiceIsIdentity) {
  Circuit c(1);
  c.add(GateKind::kH, {0}).add(GateKind::kH, {0});
  EXPECT_LT(distance(apply_circuit(PureState::from_bits("0"), c), PureState::from_bits("0")), 1e-15);
}

TEST(StandardGate, ToffoliFlipsOnlyUnderBothControls) {
  Circuit c(3);
  c.add(GateKind::kToffoli, {0, 1, 2});
  EXPECT_EQ(apply_circuit(PureState::from_bits("110"), c).amplitudes(),
            PureState::from_bits("111").amplitudes());
  EXPECT_EQ(apply_circuit(PureState::from_bits("100"), c).amplitudes(),
            PureState::from_bits("100").amplitudes());
}

TEST(StandardGate, ControlledZPhase) {
  Circuit c(2);
  c.add(GateKind::kCZ, {0, 1});
  EXPECT_EQ(apply_circuit(PureState::from_bits("11"), c).amplitudes(),
            (-PureState::from_bits("11").amplitudes()).eval());
  EXPECT_EQ(apply_circuit(PureState::from_bits("01"), c).amplitudes(),
            PureState::from_bits("01").amplitudes());
}

TEST(Circuit, AddValidates) {
  Circuit c(3);
  EXPECT_THROW(c.add(GateKind::kCNOT, {0}), std::invalid_argument);
  EXPECT_THROW(c.add(GateKind::kCNOT, {0, 0}), std::invalid_argument);
  EXPECT_THROW(c.add(GateKind::kX, {3}), std::invalid_argument);
  EXPECT_THROW(c.add(GateKind::kX, {-1}), std::invalid_argument);
  c.add(GateKind::kCNOT, {2, 1}).add(GateKind::kH, {0});
  EXPECT_EQ(c.to_string(), "CNOT(2,1) H(0)");
  EXPECT_TRUE(c.touches(1));
  EXPECT_FALSE(Circuit(3).touches(1));
}

TEST(ApplyCircuit, EmptyCircuitIsIdentity) {
  const PureState s = random_state(SiteDims::qubits(3), 1);
  EXPECT_EQ(apply_circuit(s, Circuit(3)).amplitudes(), s.amplitudes());
}

TEST(ApplyCircuit, LastOperationActsFirst) {
  Circuit c(1);
  c.add(GateKind::kX, {0}).add(GateKind::kH, {0});
  const PureState out = apply_circuit(PureState::from_bits("0"), c);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(out.amplitudes()(0) - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out.amplitudes()(1) - r), 0.0, 1e-15);
  // The opposite order would give (|0> - |1>)/sqrt(2).
  Circuit reversed(1);
  reversed.add(GateKind::kH, {0}).add(GateKind::kX, {0});
  EXPECT_NEAR(std::abs(apply_circuit(PureState::from_bits("0"), reversed).amplitudes()(1) + r), 0.0, 1e-15);
}

TEST(ApplyCircuit, DimensionErrors) {
  Circuit c(3);
  c.add(GateKind::kX, {2});
  EXPECT_THROW(apply_circuit(PureState::from_bits("00"), c), DimensionError);
  EXPECT_THROW(apply_circuit(PureState::basis(SiteDims{2, 2, 3}, {0, 0, 0}), c), DimensionError);
}

TEST(ApplyCircuit, EncoderMapsOneToLogicalOne) {
  // Hand propagation: |001>|000> -> (|000>-|111>)(|000>-|111>)/2.
  const PureState out = apply_circuit(PureState::from_bits("001000"), six_qubit_encoder());
  cvector_t expected = cvector_t::Zero(64);
  expected(0b000000) = 0.5;
  expected(0b000111) = -0.5;
  expected(0b111000) = -0.5;
  expected(0b111111) = 0.5;
  EXPECT_LT((out.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(InvertCircuit, Examples) {
  Circuit h(1);
  h.add(GateKind::kH, {0});
  const Circuit hi = invert_circuit(h);
  ASSERT_EQ(hi.ops().size(), 1u);
  EXPECT_LT((hi.ops()[0].gate.matrix - standard_gate(GateKind::kH).matrix).cwiseAbs().maxCoeff(), 1e-15);

  Circuit c(2);
  c.add(GateKind::kCNOT, {0, 1}).add(GateKind::kH, {0});
  const Circuit ci = invert_circuit(c);
  EXPECT_EQ(ci.to_string(), "H(0) CNOT(0,1)");

  Circuit s(1);
  cmatrix_t phase = cmatrix_t::Identity(2, 2);
  phase(1, 1) = complex_t(0, 1);
  s.add(Gate::custom(phase), {0});
  EXPECT_LT((invert_circuit(s).ops()[0].gate.matrix - phase.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(InvertCircuit, UndoesEncoderOnRandomStates) {
  const Circuit enc = six_qubit_encoder();
  const Circuit dec = invert_circuit(enc);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PureState s = random_state(SiteDims::qubits(6), seed);
    EXPECT_LT(distance(apply_circuit(apply_circuit(s, enc), dec), s), 1e-12);
  }
}

TEST(ApplyCircuit, PreservesInnerProducts) {
  const Circuit enc = six_qubit_encoder();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PureState a = random_state(SiteDims::qubits(6), seed);
    const PureState b = random_state(SiteDims::qubits(6), seed + 1000);
    EXPECT_LT(std::abs(apply_circuit(a, enc).inner(apply_circuit(b, enc)) - a.inner(b)), 1e-12);
  }
}

TEST(CircuitMatrix, EncoderColumnsAreLogicalStates) {
  const cmatrix_t u = circuit_matrix(six_qubit_encoder());
  ASSERT_EQ(u.rows(), 64);
  EXPECT_LE(unitarity_deviation(u), 1e-12);
  const CodeSpec code = six_qubit_logical_basis();
  for (int i = 0; i < 8; ++i) {
    // Input |abc>|000> has flat index i * 8.
    const cvector_t column = u.col(i * 8);
    EXPECT_LT((column - code.logical_basis()[i].amplitudes()).cwiseAbs().maxCoeff(), 1e-12) << i;
  }
}

TEST(CircuitMatrix, AgreesWithApplyCircuit) {
  Circuit c(3);
  c.add(GateKind::kToffoli, {2, 0, 1}).add(GateKind::kH, {1}).add(GateKind::kCZ, {0, 2});
  const cmatrix_t u = circuit_matrix(c);
  const PureState s = random_state(SiteDims::qubits(3), 8);
  EXPECT_LT((u * s.amplitudes() - apply_circuit(s, c).amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(RelabelSites, MovesTargets) {
  Circuit c(3);
  c.add(GateKind::kCNOT, {0, 2});
  EXPECT_EQ(relabel_sites(c, {2, 1, 0}).to_string(), "CNOT(2,0)");
  EXPECT_THROW(relabel_sites(c, {0, 1}), std::invalid_argument);
}

TEST(RandomUnitary, DeterministicAndUnitary) {
  for (int dim : {2, 4, 8}) {
    const Gate a = random_unitary(dim, 123);
    const Gate b = random_unitary(dim, 123);
    EXPECT_EQ(a.matrix, b.matrix);
    EXPECT_LE(unitarity_deviation(a.matrix), 1e-12);
    EXPECT_NE(a.matrix, random_unitary(dim, 124).matrix);
  }
  EXPECT_THROW(random_unitary(3, 1), DimensionError);
  std::mt19937_64 rng(5);
  EXPECT_LE(unitarity_deviation(haar_unitary(6, rng)), 1e-12);
}

TEST(RandomUnitary, PauliExpansionReconstructs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const cmatrix_t u = random_unitary(2, seed).matrix;
    const auto c = pauli_coefficients(u);
    cmatrix_t rebuilt = cmatrix_t::Zero(2, 2);
    for (int k = 0; k < 4; ++k) rebuilt += c[static_cast<std::size_t>(k)] * pauli_basis()[static_cast<std::size_t>(k)];
    EXPECT_LT((rebuilt - u).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(RandomUnitary, HaarFirstMomentIsSmall) {
  // E[U] = 0 for Haar measure; the sample mean of 2000 draws is O(1/sqrt(N)).
  cmatrix_t mean = cmatrix_t::Zero(2, 2);
  const int n = 2000;
  for (int s = 0; s < n; ++s) mean += random_unitary(2, static_cast<std::uint64_t>(s)).matrix;
  mean /= n;
  EXPECT_LT(mean.cwiseAbs().maxCoeff(), 0.1);
}

TEST(Gate, CustomValidates) {
  EXPECT_THROW(Gate::custom(cmatrix_t::Identity(3, 3)), std::invalid_argument);
  EXPECT_THROW(Gate::custom(2.0 * cmatrix_t::Identity(2, 2)), std::invalid_argument);
  EXPECT_EQ(Gate::custom(cmatrix_t::Identity(4, 4)).arity, 2);
}

}  // namespace
}  // namespace erasurelab
