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

#ifndef ERASURELAB_CODES_H
#define ERASURELAB_CODES_H

#include <string>
#include <vector>

#include "erasurelab/gates.h"
#include "erasurelab/statevector.h"

namespace erasurelab {

// Site layout of the six-qubit code: message qubits 1,2,3 then ancillas
// 1',2',3', left to right.
namespace six {
inline constexpr int kQ1 = 0;
inline constexpr int kQ2 = 1;
inline constexpr int kQ3 = 2;
inline constexpr int kA1 = 3;
inline constexpr int kA2 = 4;
inline constexpr int kA3 = 5;
inline constexpr int kNumSites = 6;
inline constexpr int kMessageQubits = 3;
}  // namespace six

// Largest n accepted by hiding_encoder (2n sites).
inline constexpr int kMaxHidingQubits = 8;

// An orthonormal logical basis embedded in a physical register. The basis
// size need not be a power of two (the W-state code has three states).
class CodeSpec {
 public:
  // Throws if the states do not share `dims` or their Gram matrix deviates
  // from the identity by more than kExactTol.
  CodeSpec(std::string label, SiteDims dims, std::vector<PureState> logical_basis);

  const std::string& label() const { return label_; }
  const SiteDims& dims() const { return dims_; }
  int n_physical() const { return dims_.num_sites(); }
  int logical_dim() const { return static_cast<int>(basis_.size()); }
  // Qubits needed to hold a logical index: ceil(log2(logical_dim)).
  int k_logical() const;
  const std::vector<PureState>& logical_basis() const { return basis_; }

  // sum_i coords[i] |i_L>.
  PureState encode(const cvector_t& coords) const;

 private:
  std::string label_;
  SiteDims dims_;
  std::vector<PureState> basis_;
};

cmatrix_t gram_matrix(const std::vector<PureState>& states);

// Gram matrix of the slices w_{i,K} = (<K|_positions (x) I)|state_i>, with
// row/column index i * dK + K (K mixed-radix over `positions`, dK their
// total dimension). Entry ((i,K'),(j,K)) equals <i| (|K'><K| (x) I) |j>.
// Only nonzero amplitudes are visited, so sparse states are cheap.
cmatrix_t sliced_gram(const SiteDims& dims, const std::vector<PureState>& states,
                      std::span<const int> positions);

// (|u> + sign |u-bar>)/sqrt(2) over the pattern length.
struct GhzSpec {
  std::vector<int> pattern;
  int sign = +1;

  PureState state() const;
};

struct RecoveryPlan {
  int bad_position = 0;
  Circuit decode{six::kNumSites};
  Circuit recover{six::kNumSites};
  std::vector<int> output_register;
};

// GHZ factor of |i>_L in the six-qubit code; both halves share it.
GhzSpec six_qubit_ghz(int logical_index);

CodeSpec six_qubit_logical_basis();
Circuit six_qubit_encoder();
Circuit decoder_for(int bad_position);
RecoveryPlan recovery_for(int bad_position);

// Exchanges qubit k with qubit k' (site s <-> s+3).
std::vector<int> six_qubit_block_swap();

// The five-qubit code protecting span{|001>,|010>,|100>}.
CodeSpec w_code();
// Logical coordinates of a three-qubit state in the order |001>,|010>,|100>.
cvector_t w_coordinates(const PureState& three_qubit_state);
PureState w_code_encode(const PureState& three_qubit_state);

Circuit hiding_encoder(int n);
// GHZ factor produced by hiding_encoder(n) for message basis index i.
GhzSpec hiding_ghz(int n, std::size_t message_index);
// Logical basis obtained by running hiding_encoder(n) on |i>|0...0>.
CodeSpec hiding_code(int n);

// Logical basis of a circuit encoder acting on k message qubits followed by
// ancillas in |0>.
CodeSpec code_from_encoder(const std::string& label, const Circuit& encoder, int message_qubits);

// Message register |psi> (x) |0...0> on the encoder's qubits.
PureState with_ancillas(const MessageState& message, int total_qubits);

}  // namespace erasurelab

#endif  // ERASURELAB_CODES_H
