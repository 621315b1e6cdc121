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

#include "erasurelab/codes.h"

#include <algorithm>
#include <cmath>

namespace erasurelab {

using namespace six;

namespace {

constexpr GateKind C = GateKind::kCNOT;
constexpr GateKind T = GateKind::kToffoli;
constexpr GateKind Z = GateKind::kCZ;
constexpr GateKind H = GateKind::kH;

void check_position(int bad_position) {
  if (bad_position < 0 || bad_position >= kNumSites) {
    throw std::out_of_range("bad position " + std::to_string(bad_position) +
                            " out of range 0..5");
  }
}

PureState bits_state(const std::vector<int>& bits) {
  return PureState::basis(SiteDims::qubits(static_cast<int>(bits.size())), bits);
}

}  // namespace

//============================================================================
// CodeSpec
//============================================================================

cmatrix_t sliced_gram(const SiteDims& dims, const std::vector<PureState>& states,
                      std::span<const int> positions) {
  validate_sites(dims, positions);
  for (const PureState& st : states) {
    if (!(st.dims() == dims)) throw DimensionError("sliced_gram: state dims differ");
  }
  const int n = dims.num_sites();
  std::vector<bool> is_pos(static_cast<std::size_t>(n), false);
  for (int p : positions) is_pos[static_cast<std::size_t>(p)] = true;
  const std::size_t dk = dims.subspace_dim(positions);

  // For every nonzero amplitude: (rest index, row = i * dk + K, amplitude).
  struct Entry {
    std::size_t rest;
    std::size_t row;
    complex_t amp;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const cvector_t& a = states[i].amplitudes();
    for (Eigen::Index idx = 0; idx < a.size(); ++idx) {
      if (a(idx) == complex_t{0.0}) continue;
      std::size_t rem = static_cast<std::size_t>(idx);
      std::vector<int> digit(static_cast<std::size_t>(n));
      for (int s = n - 1; s >= 0; --s) {
        digit[static_cast<std::size_t>(s)] = static_cast<int>(rem % static_cast<std::size_t>(dims[s]));
        rem /= static_cast<std::size_t>(dims[s]);
      }
      std::size_t k = 0, rest = 0;
      for (int p : positions) k = k * static_cast<std::size_t>(dims[p]) + static_cast<std::size_t>(digit[static_cast<std::size_t>(p)]);
      for (int s = 0; s < n; ++s) {
        if (!is_pos[static_cast<std::size_t>(s)]) {
          rest = rest * static_cast<std::size_t>(dims[s]) + static_cast<std::size_t>(digit[static_cast<std::size_t>(s)]);
        }
      }
      entries.push_back(Entry{rest, i * dk + k, a(idx)});
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& x, const Entry& y) { return x.rest < y.rest; });

  const auto side = static_cast<Eigen::Index>(states.size() * dk);
  cmatrix_t g = cmatrix_t::Zero(side, side);
  for (std::size_t lo = 0; lo < entries.size();) {
    std::size_t hi = lo;
    while (hi < entries.size() && entries[hi].rest == entries[lo].rest) ++hi;
    for (std::size_t x = lo; x < hi; ++x) {
      for (std::size_t y = lo; y < hi; ++y) {
        g(static_cast<Eigen::Index>(entries[x].row), static_cast<Eigen::Index>(entries[y].row)) +=
            std::conj(entries[x].amp) * entries[y].amp;
      }
    }
    lo = hi;
  }
  return g;
}

cmatrix_t gram_matrix(const std::vector<PureState>& states) {
  if (states.empty()) return cmatrix_t(0, 0);
  return sliced_gram(states.front().dims(), states, {});
}

CodeSpec::CodeSpec(std::string label, SiteDims dims, std::vector<PureState> logical_basis)
    : label_(std::move(label)), dims_(std::move(dims)), basis_(std::move(logical_basis)) {
  if (basis_.empty()) throw std::invalid_argument("code needs at least one logical state");
  for (const PureState& s : basis_) {
    if (!(s.dims() == dims_)) throw DimensionError("logical state dims differ from code dims");
  }
  const cmatrix_t g = gram_matrix(basis_);
  const double dev = (g - cmatrix_t::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
  if (dev > kExactTol) {
    throw std::invalid_argument("logical basis of '" + label_ + "' is not orthonormal (deviation " +
                                std::to_string(dev) + ")");
  }
}

int CodeSpec::k_logical() const {
  int k = 0;
  while ((1 << k) < logical_dim()) ++k;
  return std::max(k, 1);
}

PureState CodeSpec::encode(const cvector_t& coords) const {
  if (coords.size() != logical_dim()) throw DimensionError("coordinate count differs from logical dim");
  cvector_t v = cvector_t::Zero(static_cast<Eigen::Index>(dims_.total()));
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    v += coords(i) * basis_[static_cast<std::size_t>(i)].amplitudes();
  }
  return PureState(dims_, std::move(v));
}

PureState GhzSpec::state() const {
  if (pattern.empty()) throw std::invalid_argument("GHZ pattern must be non-empty");
  std::vector<int> bar;
  for (int b : pattern) {
    if (b != 0 && b != 1) throw std::invalid_argument("GHZ pattern entries must be 0 or 1");
    bar.push_back(1 - b);
  }
  if (sign != 1 && sign != -1) throw std::invalid_argument("GHZ sign must be +1 or -1");
  const cvector_t v = bits_state(pattern).amplitudes() + double(sign) * bits_state(bar).amplitudes();
  return PureState(SiteDims::qubits(static_cast<int>(pattern.size())), v);
}

//============================================================================
// Six-qubit erasure code
//============================================================================

GhzSpec six_qubit_ghz(int logical_index) {
  // |i>_L = GHZ (x) GHZ with these factors, for i = 0..7.
  static const GhzSpec kTable[8] = {
      {{0, 0, 0}, +1}, {{0, 0, 0}, -1}, {{0, 1, 0}, +1}, {{0, 1, 0}, -1},
      {{1, 0, 0}, +1}, {{1, 0, 0}, -1}, {{1, 1, 0}, +1}, {{1, 1, 0}, -1},
  };
  if (logical_index < 0 || logical_index > 7) throw std::out_of_range("logical index out of range 0..7");
  return kTable[logical_index];
}

CodeSpec six_qubit_logical_basis() {
  std::vector<PureState> basis;
  for (int i = 0; i < 8; ++i) {
    const PureState ghz = six_qubit_ghz(i).state();
    basis.push_back(tensor_product(ghz, ghz));
  }
  return CodeSpec("six-qubit erasure code", SiteDims::qubits(kNumSites), std::move(basis));
}

Circuit six_qubit_encoder() {
  Circuit c(kNumSites);
  c.add(C, {kA3, kA2})
      .add(C, {kA3, kA1})
      .add(C, {kQ3, kQ2})
      .add(C, {kQ3, kQ1})
      .add(H, {kA3})
      .add(H, {kQ3})
      .add(C, {kQ3, kA3})
      .add(C, {kQ2, kA2})
      .add(C, {kQ1, kA1});
  return c;
}

Circuit decoder_for(int bad_position) {
  check_position(bad_position);
  Circuit c(kNumSites);
  if (bad_position < 3) {
    c.add(H, {kA3}).add(C, {kA3, kA2}).add(C, {kA3, kA1});
  } else {
    c.add(H, {kQ3}).add(C, {kQ3, kQ2}).add(C, {kQ3, kQ1});
  }
  return c;
}

RecoveryPlan recovery_for(int bad_position) {
  check_position(bad_position);
  RecoveryPlan plan;
  plan.bad_position = bad_position;
  plan.decode = decoder_for(bad_position);
  Circuit& r = plan.recover;
  switch (bad_position) {
    case kQ1:
      r.add(T, {kA1, kA3, kQ2}).add(Z, {kA3, kQ2}).add(T, {kA1, kA3, kQ2})
          .add(C, {kA2, kQ2}).add(C, {kA1, kQ2}).add(C, {kA1, kQ3});
      break;
    case kQ2:
      r.add(T, {kA2, kA3, kQ1}).add(Z, {kA3, kQ1}).add(T, {kA2, kA3, kQ1})
          .add(C, {kA1, kQ1}).add(C, {kA2, kQ1}).add(C, {kA2, kQ3});
      break;
    case kQ3:
      r.add(Z, {kA3, kQ2}).add(C, {kA2, kQ2}).add(C, {kA1, kQ1});
      break;
    case kA1:
      r.add(T, {kQ1, kQ3, kA2}).add(Z, {kQ3, kA2}).add(T, {kQ1, kQ3, kA2})
          .add(C, {kQ2, kA2}).add(C, {kQ1, kA2}).add(C, {kQ1, kA3});
      break;
    case kA2:
      r.add(T, {kQ2, kQ3, kA1}).add(Z, {kQ3, kA1}).add(T, {kQ2, kQ3, kA1})
          .add(C, {kQ1, kA1}).add(C, {kQ2, kA1}).add(C, {kQ2, kA3});
      break;
    case kA3:
      r.add(Z, {kQ3, kA2}).add(C, {kQ2, kA2}).add(C, {kQ1, kA1});
      break;
  }
  plan.output_register = bad_position < 3 ? std::vector<int>{kA1, kA2, kA3}
                                          : std::vector<int>{kQ1, kQ2, kQ3};
  return plan;
}

std::vector<int> six_qubit_block_swap() { return {kA1, kA2, kA3, kQ1, kQ2, kQ3}; }

//============================================================================
// W-state code
//============================================================================

CodeSpec w_code() {
  const std::vector<std::vector<int>> images = {
      {0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}};
  std::vector<PureState> basis;
  for (const auto& u : images) basis.push_back(GhzSpec{u, +1}.state());
  return CodeSpec("five-qubit W-state code", SiteDims::qubits(5), std::move(basis));
}

cvector_t w_coordinates(const PureState& three_qubit_state) {
  if (!(three_qubit_state.dims() == SiteDims::qubits(3))) {
    throw DimensionError("W-code input must be a three-qubit state");
  }
  const cvector_t& a = three_qubit_state.amplitudes();
  const double outside = std::sqrt(std::norm(a(0)) + std::norm(a(3)) + std::norm(a(5)) +
                                   std::norm(a(6)) + std::norm(a(7)));
  if (outside > kExactTol) {
    throw std::invalid_argument("input has weight " + std::to_string(outside) +
                                " outside span{|001>,|010>,|100>}");
  }
  cvector_t coords(3);
  coords << a(1), a(2), a(4);
  return coords;
}

PureState w_code_encode(const PureState& three_qubit_state) {
  return w_code().encode(w_coordinates(three_qubit_state));
}

//============================================================================
// n-qubit hiding encoder
//============================================================================

Circuit hiding_encoder(int n) {
  if (n < 1 || n > kMaxHidingQubits) {
    throw std::out_of_range("n out of range: hiding encoder accepts 1.." +
                            std::to_string(kMaxHidingQubits) + ", got " + std::to_string(n));
  }
  // Message qubit i (1-based) sits at site i-1, ancilla i' at site n+i-1.
  const int last = n - 1;
  const int last_anc = 2 * n - 1;
  Circuit c(2 * n);
  for (int i = 0; i < n - 1; ++i) c.add(C, {last_anc, n + i});
  for (int i = 0; i < n - 1; ++i) c.add(C, {last, i});
  c.add(H, {last_anc}).add(H, {last});
  for (int i = 0; i < n; ++i) c.add(C, {i, n + i});
  return c;
}

GhzSpec hiding_ghz(int n, std::size_t message_index) {
  if (n < 1 || n > kMaxHidingQubits) throw std::out_of_range("n out of range");
  if (message_index >= (std::size_t{1} << n)) throw std::out_of_range("message index out of range");
  GhzSpec g;
  for (int k = 0; k < n; ++k) g.pattern.push_back(int((message_index >> (n - 1 - k)) & 1U));
  g.sign = g.pattern.back() ? -1 : +1;
  g.pattern.back() = 0;
  return g;
}

PureState with_ancillas(const MessageState& message, int total_qubits) {
  const int anc = total_qubits - message.num_qubits();
  if (anc < 1) throw DimensionError("encoder needs at least one ancilla");
  return tensor_product(message.as_state(), PureState::zero(SiteDims::qubits(anc)));
}

CodeSpec code_from_encoder(const std::string& label, const Circuit& encoder, int message_qubits) {
  std::vector<PureState> basis;
  for (std::size_t i = 0; i < (std::size_t{1} << message_qubits); ++i) {
    const MessageState m = MessageState::basis(message_qubits, i);
    basis.push_back(apply_circuit(with_ancillas(m, encoder.num_qubits()), encoder));
  }
  return CodeSpec(label, SiteDims::qubits(encoder.num_qubits()), std::move(basis));
}

CodeSpec hiding_code(int n) {
  // Built from the GHZ factors directly; equal to code_from_encoder on
  // hiding_encoder(n) but without 2^n dense circuit runs.
  std::vector<PureState> basis;
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
    const PureState block = hiding_ghz(n, i).state();
    basis.push_back(tensor_product(block, block));
  }
  return CodeSpec("hiding:" + std::to_string(n), SiteDims::qubits(2 * n), std::move(basis));
}

}  // namespace erasurelab
