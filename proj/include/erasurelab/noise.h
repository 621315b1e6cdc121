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

#ifndef ERASURELAB_NOISE_H
#define ERASURELAB_NOISE_H

#include <cstdint>
#include <optional>

#include "erasurelab/statevector.h"

namespace erasurelab {

enum class PauliKind { kI, kX, kY, kZ };

// Joint action of a qubit and a fresh environment site initialised to |e0>:
//   |q>|e0>  ->  sum_{o,e} columns(o * env_dim + e, q) |o>|e>
// with o ranging over qubit_out_dim levels (> 2 when the qubit leaks).
struct DecoherenceIsometry {
  int env_dim = 1;
  int qubit_out_dim = 2;
  cmatrix_t columns;

  // Throws unless the shape is consistent and V^dagger V = I within kExactTol.
  void validate() const;
};

struct ErasureEvent {
  int position = 0;
  DecoherenceIsometry channel;
};

DecoherenceIsometry pauli_error(PauliKind kind);

// Two orthonormal columns of a seeded Haar unitary on qubit (x) environment.
DecoherenceIsometry random_decoherence(std::uint64_t seed, int env_dim = 4);

// Leakage into levels 2..leak_dim-1. The in-subspace part is the same
// isometry random_decoherence(seed, env_dim) would produce, scaled by
// sqrt(1 - w); the leaked part is an independent isometry scaled by sqrt(w).
// When `leak_weight` is empty, w is drawn uniformly from [0, 1).
DecoherenceIsometry leakage_decoherence(std::uint64_t seed, int leak_dim, int env_dim,
                                        std::optional<double> leak_weight = std::nullopt);

// Appends one environment site (the last site) and lets the channel act on
// the qubit at event.position and that site. The errored site is promoted to
// qubit_out_dim.
PureState apply_erasure(const PureState& state, const ErasureEvent& event);

}  // namespace erasurelab

#endif  // ERASURELAB_NOISE_H
