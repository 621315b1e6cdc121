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

#include "erasurelab/noise.h"

#include <cmath>
#include <random>

#include "erasurelab/gates.h"

namespace erasurelab {

void DecoherenceIsometry::validate() const {
  if (env_dim < 1) throw std::invalid_argument("environment dimension must be >= 1");
  if (qubit_out_dim < 2) throw std::invalid_argument("qubit output dimension must be >= 2");
  if (columns.cols() != 2 || columns.rows() != Eigen::Index{qubit_out_dim} * env_dim) {
    throw DimensionError("decoherence isometry must be (out_dim*env_dim) x 2");
  }
  if (isometry_deviation(columns) > kExactTol) {
    throw std::invalid_argument("decoherence map is not an isometry");
  }
}

DecoherenceIsometry pauli_error(PauliKind kind) {
  return DecoherenceIsometry{1, 2, pauli_basis()[static_cast<std::size_t>(kind)]};
}

DecoherenceIsometry random_decoherence(std::uint64_t seed, int env_dim) {
  if (env_dim < 1) throw std::invalid_argument("environment dimension must be >= 1");
  std::mt19937_64 rng(seed);
  const cmatrix_t u = haar_unitary(2 * env_dim, rng);
  DecoherenceIsometry iso{env_dim, 2, u.leftCols(2)};
  iso.validate();
  return iso;
}

DecoherenceIsometry leakage_decoherence(std::uint64_t seed, int leak_dim, int env_dim,
                                        std::optional<double> leak_weight) {
  if (leak_dim < 3) throw std::invalid_argument("leak dimension must be >= 3");
  if (env_dim < 1) throw std::invalid_argument("environment dimension must be >= 1");
  std::mt19937_64 rng(seed);
  const cmatrix_t inside = haar_unitary(2 * env_dim, rng).leftCols(2);
  const int leak_rows = (leak_dim - 2) * env_dim;
  const cmatrix_t leaked = haar_unitary(leak_rows, rng).leftCols(std::min(2, leak_rows));
  double w = leak_weight.has_value() ? *leak_weight
                                     : std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("leak weight must lie in [0, 1]");
  if (w > 0.0 && leak_rows < 2) {
    throw std::invalid_argument("leaked levels times environment dimension must be >= 2");
  }

  DecoherenceIsometry iso;
  iso.env_dim = env_dim;
  iso.qubit_out_dim = leak_dim;
  iso.columns = cmatrix_t::Zero(Eigen::Index{leak_dim} * env_dim, 2);
  iso.columns.topRows(2 * env_dim) = std::sqrt(1.0 - w) * inside;
  if (w > 0.0) iso.columns.bottomRows(leak_rows) = std::sqrt(w) * leaked;
  iso.validate();
  return iso;
}

PureState apply_erasure(const PureState& state, const ErasureEvent& event) {
  const int pos = event.position;
  if (pos < 0 || pos >= state.num_sites()) {
    throw std::out_of_range("erasure position " + std::to_string(pos) + " out of range");
  }
  if (state.dims()[pos] != 2) {
    throw std::invalid_argument("position " + std::to_string(pos) +
                                " is not a two-level site (already errored)");
  }
  const DecoherenceIsometry& ch = event.channel;
  ch.validate();

  // Complete the two columns into an isometry defined on every environment
  // input, so the joint map stays norm preserving. Only the |e0> columns are
  // ever reached because the appended site starts in |0>.
  const Eigen::Index env = ch.env_dim;
  const Eigen::Index out_dim = Eigen::Index{ch.qubit_out_dim} * env;
  cmatrix_t full(out_dim, 2 * env);
  Eigen::HouseholderQR<cmatrix_t> qr(ch.columns);
  const cmatrix_t q = qr.householderQ();
  Eigen::Index spare = 2;
  for (Eigen::Index qin = 0; qin < 2; ++qin) {
    for (Eigen::Index e = 0; e < env; ++e) {
      full.col(qin * env + e) = e == 0 ? cmatrix_t(ch.columns.col(qin)) : cmatrix_t(q.col(spare++));
    }
  }

  const PureState joint = tensor_product(state, PureState::zero(SiteDims({std::max(ch.env_dim, 2)})));
  if (ch.env_dim == 1) {
    // Environment that never entangles: act on the qubit alone and keep a
    // trivial two-level environment marker in |0>.
    const std::vector<int> targets{pos};
    const std::vector<int> out{ch.qubit_out_dim};
    return apply_local_map(joint, ch.columns, targets, out);
  }
  const std::vector<int> targets{pos, joint.num_sites() - 1};
  const std::vector<int> out{ch.qubit_out_dim, ch.env_dim};
  return apply_local_map(joint, full, targets, out);
}

}  // namespace erasurelab
