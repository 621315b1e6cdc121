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

#ifndef ERASURELAB_GATES_H
#define ERASURELAB_GATES_H

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "erasurelab/statevector.h"

namespace erasurelab {

enum class GateKind { kH, kX, kY, kZ, kCNOT, kToffoli, kCZ, kCustom };

std::string_view gate_kind_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);

// A unitary on `arity` qubits. Controlled gates take their controls first.
struct Gate {
  GateKind kind = GateKind::kCustom;
  cmatrix_t matrix;
  int arity = 0;

  // Wraps a custom unitary; throws unless the side is 2^arity and U is unitary.
  static Gate custom(cmatrix_t matrix);
};

Gate standard_gate(GateKind kind);

struct CircuitOp {
  Gate gate;
  std::vector<int> targets;
};

// Gates listed left to right as in operator notation; the rightmost op acts
// first. Every gate acts on qubit sites 0..num_qubits-1.
class Circuit {
 public:
  explicit Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
  }

  Circuit& add(Gate gate, std::vector<int> targets);
  Circuit& add(GateKind kind, std::vector<int> targets) { return add(standard_gate(kind), std::move(targets)); }

  int num_qubits() const { return num_qubits_; }
  const std::vector<CircuitOp>& ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }
  bool touches(int site) const;

  // Ops in list order, e.g. "CNOT(3,4) H(2)".
  std::string to_string() const;

 private:
  int num_qubits_;
  std::vector<CircuitOp> ops_;
};

// Applies ops from the last element to the first. The state may carry extra
// sites beyond the circuit's qubits; every targeted site must have dim 2.
PureState apply_circuit(const PureState& state, const Circuit& circuit);

Circuit invert_circuit(const Circuit& circuit);

// Renames sites: op targets t become mapping[t].
Circuit relabel_sites(const Circuit& circuit, const std::vector<int>& mapping);

// Dense 2^n x 2^n matrix of the whole circuit.
cmatrix_t circuit_matrix(const Circuit& circuit);

// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of
// R's diagonal divided out.
cmatrix_t haar_unitary(int dim, std::mt19937_64& rng);

// Seeded Haar unitary on log2(dim) qubits; dim must be a power of two.
Gate random_unitary(int dim, std::uint64_t seed);

// Single-qubit Pauli basis {1, X, Y, Z}.
const std::array<cmatrix_t, 4>& pauli_basis();

// Coefficients c with U = sum_k c_k P_k, c_k = Tr(P_k U) / 2.
std::array<complex_t, 4> pauli_coefficients(const cmatrix_t& op);

}  // namespace erasurelab

#endif  // ERASURELAB_GATES_H
