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
#include <sstream>

namespace erasurelab {

namespace {

const complex_t kI{0.0, 1.0};

cmatrix_t controlled(const cmatrix_t& u, int controls) {
  const Eigen::Index dim = Eigen::Index{1} << (controls + 1);
  cmatrix_t m = cmatrix_t::Identity(dim, dim);
  m.bottomRightCorner(2, 2) = u;
  return m;
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kH: return "H";
    case GateKind::kX: return "X";
    case GateKind::kY: return "Y";
    case GateKind::kZ: return "Z";
    case GateKind::kCNOT: return "CNOT";
    case GateKind::kToffoli: return "TOFFOLI";
    case GateKind::kCZ: return "CZ";
    case GateKind::kCustom: return "CUSTOM";
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view name) {
  for (GateKind k : {GateKind::kH, GateKind::kX, GateKind::kY, GateKind::kZ, GateKind::kCNOT,
                     GateKind::kToffoli, GateKind::kCZ}) {
    if (gate_kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown gate kind: " + std::string(name));
}

Gate Gate::custom(cmatrix_t matrix) {
  const Eigen::Index side = matrix.rows();
  int arity = 0;
  while ((Eigen::Index{1} << arity) < side) ++arity;
  if (side < 2 || matrix.cols() != side || (Eigen::Index{1} << arity) != side) {
    throw DimensionError("custom gate side must be a power of two");
  }
  if (unitarity_deviation(matrix) > kExactTol) throw std::invalid_argument("custom gate is not unitary");
  return Gate{GateKind::kCustom, std::move(matrix), arity};
}

Gate standard_gate(GateKind kind) {
  const double r = 1.0 / std::sqrt(2.0);
  cmatrix_t x(2, 2), y(2, 2), z(2, 2), h(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -kI, kI, 0;
  z << 1, 0, 0, -1;
  h << r, r, r, -r;
  switch (kind) {
    case GateKind::kH: return Gate{kind, h, 1};
    case GateKind::kX: return Gate{kind, x, 1};
    case GateKind::kY: return Gate{kind, y, 1};
    case GateKind::kZ: return Gate{kind, z, 1};
    case GateKind::kCNOT: return Gate{kind, controlled(x, 1), 2};
    case GateKind::kToffoli: return Gate{kind, controlled(x, 2), 3};
    case GateKind::kCZ: return Gate{kind, controlled(z, 1), 2};
    case GateKind::kCustom: break;
  }
  throw std::invalid_argument("standard_gate: no textbook matrix for this kind");
}

//============================================================================
// Circuit
//============================================================================

Circuit& Circuit::add(Gate gate, std::vector<int> targets) {
  if (static_cast<int>(targets.size()) != gate.arity) {
    throw DimensionError("gate " + std::string(gate_kind_name(gate.kind)) + " expects " +
                         std::to_string(gate.arity) + " targets");
  }
  for (std::size_t a = 0; a < targets.size(); ++a) {
    if (targets[a] < 0 || targets[a] >= num_qubits_) throw DimensionError("gate target out of range");
    for (std::size_t b = 0; b < a; ++b) {
      if (targets[a] == targets[b]) throw DimensionError("duplicate gate target");
    }
  }
  ops_.push_back(CircuitOp{std::move(gate), std::move(targets)});
  return *this;
}

bool Circuit::touches(int site) const {
  for (const CircuitOp& op : ops_) {
    for (int t : op.targets) {
      if (t == site) return true;
    }
  }
  return false;
}

std::string Circuit::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (i) os << ' ';
    os << gate_kind_name(ops_[i].gate.kind) << '(';
    for (std::size_t j = 0; j < ops_[i].targets.size(); ++j) os << (j ? "," : "") << ops_[i].targets[j];
    os << ')';
  }
  return os.str();
}

PureState apply_circuit(const PureState& state, const Circuit& circuit) {
  if (state.num_sites() < circuit.num_qubits()) {
    throw DimensionError("circuit on " + std::to_string(circuit.num_qubits()) +
                         " qubits does not fit register " + state.dims().to_string());
  }
  PureState out = state;
  for (auto it = circuit.ops().rbegin(); it != circuit.ops().rend(); ++it) {
    for (int t : it->targets) {
      if (out.dims()[t] != 2) {
        throw DimensionError("gate on site " + std::to_string(t) + " which is not a qubit");
      }
    }
    out = apply_local_operator(out, it->gate.matrix, it->targets, OperatorCheck::kNone);
  }
  return out;
}

Circuit invert_circuit(const Circuit& circuit) {
  Circuit inv(circuit.num_qubits());
  for (auto it = circuit.ops().rbegin(); it != circuit.ops().rend(); ++it) {
    Gate g = it->gate;
    g.matrix = g.matrix.adjoint().eval();
    inv.add(std::move(g), it->targets);
  }
  return inv;
}

Circuit relabel_sites(const Circuit& circuit, const std::vector<int>& mapping) {
  if (static_cast<int>(mapping.size()) != circuit.num_qubits()) {
    throw DimensionError("relabel mapping must cover every qubit");
  }
  Circuit out(circuit.num_qubits());
  for (const CircuitOp& op : circuit.ops()) {
    std::vector<int> t;
    for (int s : op.targets) t.push_back(mapping[static_cast<std::size_t>(s)]);
    out.add(op.gate, std::move(t));
  }
  return out;
}

cmatrix_t circuit_matrix(const Circuit& circuit) {
  const SiteDims dims = SiteDims::qubits(circuit.num_qubits());
  const auto dim = static_cast<Eigen::Index>(dims.total());
  cmatrix_t m(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    cvector_t e = cvector_t::Zero(dim);
    e(col) = 1.0;
    m.col(col) = apply_circuit(PureState(dims, e), circuit).amplitudes();
  }
  return m;
}

cmatrix_t haar_unitary(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("unitary dimension must be positive");
  std::normal_distribution<double> normal;
  cmatrix_t z(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = complex_t(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<cmatrix_t> qr(z);
  cmatrix_t q = qr.householderQ();
  const cmatrix_t& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const complex_t d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

Gate random_unitary(int dim, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("random_unitary needs dim >= 2");
  if ((dim & (dim - 1)) != 0) throw DimensionError("random_unitary gate dim must be a power of two");
  std::mt19937_64 rng(seed);
  return Gate::custom(haar_unitary(dim, rng));
}

const std::array<cmatrix_t, 4>& pauli_basis() {
  static const std::array<cmatrix_t, 4> basis = {
      cmatrix_t::Identity(2, 2),
      standard_gate(GateKind::kX).matrix,
      standard_gate(GateKind::kY).matrix,
      standard_gate(GateKind::kZ).matrix,
  };
  return basis;
}

std::array<complex_t, 4> pauli_coefficients(const cmatrix_t& op) {
  if (op.rows() != 2 || op.cols() != 2) throw DimensionError("Pauli expansion needs a 2x2 operator");
  std::array<complex_t, 4> c{};
  for (std::size_t k = 0; k < 4; ++k) c[k] = (pauli_basis()[k] * op).trace() / 2.0;
  return c;
}

}  // namespace erasurelab
