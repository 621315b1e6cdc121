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

#ifndef ERASURELAB_STATEVECTOR_H
#define ERASURELAB_STATEVECTOR_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace erasurelab {

class PureState;

using complex_t = std::complex<double>;
using cvector_t = Eigen::VectorXcd;
using cmatrix_t = Eigen::MatrixXcd;

// Exact-algebra and composed-pipeline tolerances.
inline constexpr double kExactTol = 1e-12;
inline constexpr double kPipelineTol = 1e-10;

// Upper bound on the joint Hilbert-space dimension.
inline constexpr std::size_t kDefaultDimCap = std::size_t{1} << 20;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

//============================================================================
// SiteDims
//============================================================================

// Ordered per-site dimensions of a tensor-product register. Basis labels are
// mixed-radix numbers with site 0 as the most significant digit.
class SiteDims {
 public:
  SiteDims() = default;
  SiteDims(std::vector<int> dims, std::size_t cap = kDefaultDimCap);
  SiteDims(std::initializer_list<int> dims) : SiteDims(std::vector<int>(dims)) {}

  static SiteDims qubits(int count, std::size_t cap = kDefaultDimCap);

  int num_sites() const { return static_cast<int>(dims_.size()); }
  int operator[](int site) const { return dims_.at(static_cast<std::size_t>(site)); }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t total() const { return total_; }
  std::size_t cap() const { return cap_; }

  // Distance in flat index between consecutive labels of `site`.
  std::size_t stride(int site) const;

  std::size_t index_of(std::span<const int> labels) const;
  std::vector<int> labels_of(std::size_t index) const;

  // Product of the dimensions at `sites`.
  std::size_t subspace_dim(std::span<const int> sites) const;

  SiteDims with_site(int site, int new_dim) const;
  SiteDims appended(int new_dim) const;
  SiteDims select(std::span<const int> sites) const;

  bool operator==(const SiteDims& other) const { return dims_ == other.dims_; }

  std::string to_string() const;

 private:
  std::vector<int> dims_;
  std::size_t total_ = 0;
  std::size_t cap_ = kDefaultDimCap;
};

// Throws unless `sites` are distinct and in range for `dims`.
void validate_sites(const SiteDims& dims, std::span<const int> sites);

//============================================================================
// PureState
//============================================================================

class PureState {
 public:
  // Normalizes `amps`; throws on zero vector or length mismatch.
  PureState(SiteDims dims, cvector_t amps);

  // Computational basis state with one label per site.
  static PureState basis(SiteDims dims, std::span<const int> labels);
  static PureState basis(SiteDims dims, std::initializer_list<int> labels) {
    return basis(std::move(dims), std::span<const int>(labels.begin(), labels.size()));
  }
  // Basis state over qubits given as a bit string, e.g. "010".
  static PureState from_bits(const std::string& bits);
  static PureState zero(SiteDims dims);

  const SiteDims& dims() const { return dims_; }
  const cvector_t& amplitudes() const { return amps_; }
  int num_sites() const { return dims_.num_sites(); }
  std::size_t size() const { return dims_.total(); }

  complex_t amplitude(std::span<const int> labels) const {
    return amps_(static_cast<Eigen::Index>(dims_.index_of(labels)));
  }
  complex_t inner(const PureState& other) const;
  double norm() const { return amps_.norm(); }

 private:
  struct Unchecked {};
  PureState(SiteDims dims, cvector_t amps, Unchecked)
      : dims_(std::move(dims)), amps_(std::move(amps)) {}

  friend PureState map_sites(const PureState&, const cmatrix_t&, std::span<const int>,
                             std::span<const int>);
  friend PureState tensor_product(const PureState&, const PureState&);

  SiteDims dims_;
  cvector_t amps_;
};

//============================================================================
// DensityMatrix
//============================================================================

class DensityMatrix {
 public:
  // Validates Hermiticity, unit trace and positivity.
  static DensityMatrix from_matrix(SiteDims dims, cmatrix_t matrix);
  static DensityMatrix from_pure(const PureState& state);

  const SiteDims& dims() const { return dims_; }
  const cmatrix_t& matrix() const { return matrix_; }
  double trace() const { return matrix_.trace().real(); }
  double purity() const;

 private:
  DensityMatrix(SiteDims dims, cmatrix_t matrix)
      : dims_(std::move(dims)), matrix_(std::move(matrix)) {}

  friend DensityMatrix partial_trace(const PureState&, std::span<const int>);
  friend DensityMatrix partial_trace(const DensityMatrix&, std::span<const int>);

  SiteDims dims_;
  cmatrix_t matrix_;
};

//============================================================================
// MessageState
//============================================================================

// Unit vector of n message qubits; index i is the binary label of |i>.
class MessageState {
 public:
  MessageState(int num_qubits, cvector_t amps);

  // Haar-random message from a seeded Gaussian vector.
  static MessageState random(int num_qubits, std::uint64_t seed);
  static MessageState basis(int num_qubits, std::size_t index);

  int num_qubits() const { return n_; }
  const cvector_t& amplitudes() const { return amps_; }
  PureState as_state() const;

 private:
  int n_;
  cvector_t amps_;
};

//============================================================================
// Operations
//============================================================================

PureState tensor_product(const PureState& a, const PureState& b);

// kNone skips the unitarity test; callers that pass it own the guarantee.
enum class OperatorCheck { kUnitary, kNone };

// Applies `op` to the sites `targets`, identity elsewhere. The first target
// is the most significant digit of the operator's row/column index.
PureState apply_local_operator(const PureState& state, const cmatrix_t& op,
                               std::span<const int> targets,
                               OperatorCheck check = OperatorCheck::kUnitary);
inline PureState apply_local_operator(const PureState& state, const cmatrix_t& op,
                                      std::initializer_list<int> targets,
                                      OperatorCheck check = OperatorCheck::kUnitary) {
  return apply_local_operator(state, op, std::span<const int>(targets.begin(), targets.size()),
                              check);
}

// Applies an isometry V from the target sites to target sites of new
// dimensions `out_dims`. V must satisfy V^dagger V = I within kPipelineTol.
PureState apply_local_map(const PureState& state, const cmatrix_t& op,
                          std::span<const int> targets, std::span<const int> out_dims);

// Raw linear action of `op` on `targets` (no normalization, no checks beyond
// shapes); `out_dims` gives the target dims afterwards.
cvector_t apply_linear(const SiteDims& dims, const cvector_t& amps, const cmatrix_t& op,
                       std::span<const int> targets, std::span<const int> out_dims);
cvector_t apply_linear(const SiteDims& dims, const cvector_t& amps, const cmatrix_t& op,
                       std::span<const int> targets);

// Reduced state on `keep`; the output sites follow the order of `keep`.
DensityMatrix partial_trace(const PureState& state, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
inline DensityMatrix partial_trace(const PureState& state, std::initializer_list<int> keep) {
  return partial_trace(state, std::span<const int>(keep.begin(), keep.size()));
}

// <target|rho|target>, clamped to [0, 1].
double fidelity_with_pure(const DensityMatrix& rho, const PureState& target);

// Largest |U^dagger U - I| entry.
double unitarity_deviation(const cmatrix_t& op);
double isometry_deviation(const cmatrix_t& op);

}  // namespace erasurelab

#endif  // ERASURELAB_STATEVECTOR_H
