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

#include "erasurelab/statevector.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace erasurelab {

namespace {

Eigen::Index eidx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// Flat offsets of every label combination on `sites`, enumerated with the
// first listed site most significant.
std::vector<std::size_t> subspace_offsets(const SiteDims& dims, std::span<const int> sites) {
  std::vector<std::size_t> offsets{0};
  for (int site : sites) {
    const std::size_t stride = dims.stride(site);
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(dims[site]));
    for (std::size_t base : offsets) {
      for (int k = 0; k < dims[site]; ++k) next.push_back(base + static_cast<std::size_t>(k) * stride);
    }
    offsets = std::move(next);
  }
  return offsets;
}

std::vector<int> complement(int num_sites, std::span<const int> sites) {
  std::vector<int> rest;
  for (int s = 0; s < num_sites; ++s) {
    if (std::find(sites.begin(), sites.end(), s) == sites.end()) rest.push_back(s);
  }
  return rest;
}

}  // namespace

//============================================================================
// SiteDims
//============================================================================

SiteDims::SiteDims(std::vector<int> dims, std::size_t cap) : dims_(std::move(dims)), cap_(cap) {
  if (dims_.empty()) throw DimensionError("site list must be non-empty");
  total_ = 1;
  for (int d : dims_) {
    if (d < 2) throw DimensionError("site dimension must be >= 2, got " + std::to_string(d));
    if (total_ > cap_ / static_cast<std::size_t>(d)) {
      throw DimensionError("total dimension exceeds cap of " + std::to_string(cap_));
    }
    total_ *= static_cast<std::size_t>(d);
  }
}

SiteDims SiteDims::qubits(int count, std::size_t cap) {
  if (count < 1) throw DimensionError("qubit count must be positive");
  return SiteDims(std::vector<int>(static_cast<std::size_t>(count), 2), cap);
}

std::size_t SiteDims::stride(int site) const {
  if (site < 0 || site >= num_sites()) throw DimensionError("site index out of range");
  std::size_t s = 1;
  for (int j = num_sites() - 1; j > site; --j) s *= static_cast<std::size_t>(dims_[j]);
  return s;
}

std::size_t SiteDims::index_of(std::span<const int> labels) const {
  if (labels.size() != dims_.size()) throw DimensionError("label count does not match site count");
  std::size_t index = 0;
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (labels[j] < 0 || labels[j] >= dims_[j]) throw DimensionError("label out of range");
    index = index * static_cast<std::size_t>(dims_[j]) + static_cast<std::size_t>(labels[j]);
  }
  return index;
}

std::vector<int> SiteDims::labels_of(std::size_t index) const {
  if (index >= total_) throw DimensionError("basis index out of range");
  std::vector<int> labels(dims_.size());
  for (std::size_t j = dims_.size(); j-- > 0;) {
    labels[j] = static_cast<int>(index % static_cast<std::size_t>(dims_[j]));
    index /= static_cast<std::size_t>(dims_[j]);
  }
  return labels;
}

std::size_t SiteDims::subspace_dim(std::span<const int> sites) const {
  std::size_t d = 1;
  for (int s : sites) d *= static_cast<std::size_t>((*this)[s]);
  return d;
}

SiteDims SiteDims::with_site(int site, int new_dim) const {
  std::vector<int> d = dims_;
  d.at(static_cast<std::size_t>(site)) = new_dim;
  return SiteDims(std::move(d), cap_);
}

SiteDims SiteDims::appended(int new_dim) const {
  std::vector<int> d = dims_;
  d.push_back(new_dim);
  return SiteDims(std::move(d), cap_);
}

SiteDims SiteDims::select(std::span<const int> sites) const {
  std::vector<int> d;
  for (int s : sites) d.push_back((*this)[s]);
  return SiteDims(std::move(d), cap_);
}

std::string SiteDims::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < dims_.size(); ++j) os << (j ? "," : "") << dims_[j];
  os << ']';
  return os.str();
}

void validate_sites(const SiteDims& dims, std::span<const int> sites) {
  for (std::size_t a = 0; a < sites.size(); ++a) {
    if (sites[a] < 0 || sites[a] >= dims.num_sites()) {
      throw DimensionError("site " + std::to_string(sites[a]) + " out of range for " +
                           dims.to_string());
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (sites[a] == sites[b]) throw DimensionError("duplicate site " + std::to_string(sites[a]));
    }
  }
}

//============================================================================
// PureState
//============================================================================

PureState::PureState(SiteDims dims, cvector_t amps) : dims_(std::move(dims)), amps_(std::move(amps)) {
  if (static_cast<std::size_t>(amps_.size()) != dims_.total()) {
    throw DimensionError("amplitude count " + std::to_string(amps_.size()) +
                         " does not match dims " + dims_.to_string());
  }
  const double n = amps_.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("state vector has zero norm");
  amps_ /= n;
}

PureState PureState::basis(SiteDims dims, std::span<const int> labels) {
  cvector_t amps = cvector_t::Zero(eidx(dims.total()));
  amps(eidx(dims.index_of(labels))) = 1.0;
  return PureState(std::move(dims), std::move(amps), Unchecked{});
}

PureState PureState::from_bits(const std::string& bits) {
  std::vector<int> labels;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string must contain only 0/1");
    labels.push_back(c - '0');
  }
  return basis(SiteDims::qubits(static_cast<int>(labels.size())), labels);
}

PureState PureState::zero(SiteDims dims) {
  std::vector<int> labels(dims.dims().size(), 0);
  return basis(std::move(dims), labels);
}

complex_t PureState::inner(const PureState& other) const {
  if (!(dims_ == other.dims_)) throw DimensionError("inner product of mismatched registers");
  return amps_.dot(other.amps_);
}

//============================================================================
// DensityMatrix
//============================================================================

DensityMatrix DensityMatrix::from_matrix(SiteDims dims, cmatrix_t m) {
  if (static_cast<std::size_t>(m.rows()) != dims.total() || m.rows() != m.cols()) {
    throw DimensionError("density matrix side does not match dims " + dims.to_string());
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kExactTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - complex_t{1.0}) > kExactTol) {
    throw std::invalid_argument("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<cmatrix_t> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kExactTol) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
  return DensityMatrix(std::move(dims), std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
  const cvector_t& v = state.amplitudes();
  return DensityMatrix(state.dims(), v * v.adjoint());
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return matrix_.cwiseAbs2().sum();
}

//============================================================================
// MessageState
//============================================================================

MessageState::MessageState(int num_qubits, cvector_t amps) : n_(num_qubits), amps_(std::move(amps)) {
  if (n_ < 1 || n_ > 20) throw std::invalid_argument("message qubit count out of range");
  if (amps_.size() != (Eigen::Index{1} << n_)) {
    throw DimensionError("message needs 2^n amplitudes");
  }
  const double nrm = amps_.norm();
  if (std::abs(nrm - 1.0) > kExactTol) {
    throw std::invalid_argument("message state must be unit norm");
  }
}

MessageState MessageState::random(int num_qubits, std::uint64_t seed) {
  if (num_qubits < 1 || num_qubits > 20) throw std::invalid_argument("message qubit count out of range");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  cvector_t v(Eigen::Index{1} << num_qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = complex_t(re, im);
  }
  v.normalize();
  return MessageState(num_qubits, std::move(v));
}

MessageState MessageState::basis(int num_qubits, std::size_t index) {
  if (num_qubits < 1 || num_qubits > 20) throw std::invalid_argument("message qubit count out of range");
  cvector_t v = cvector_t::Zero(Eigen::Index{1} << num_qubits);
  if (eidx(index) >= v.size()) throw std::invalid_argument("message basis index out of range");
  v(eidx(index)) = 1.0;
  return MessageState(num_qubits, std::move(v));
}

PureState MessageState::as_state() const { return PureState(SiteDims::qubits(n_), amps_); }

//============================================================================
// Operations
//============================================================================

PureState tensor_product(const PureState& a, const PureState& b) {
  std::vector<int> d = a.dims().dims();
  d.insert(d.end(), b.dims().dims().begin(), b.dims().dims().end());
  SiteDims dims(std::move(d), std::min(a.dims().cap(), b.dims().cap()));
  cvector_t amps(eidx(dims.total()));
  const Eigen::Index nb = b.amplitudes().size();
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
    amps.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
  }
  return PureState(std::move(dims), std::move(amps), PureState::Unchecked{});
}

double unitarity_deviation(const cmatrix_t& op) {
  if (op.rows() != op.cols()) return std::numeric_limits<double>::infinity();
  return isometry_deviation(op);
}

double isometry_deviation(const cmatrix_t& op) {
  const cmatrix_t g = op.adjoint() * op;
  return (g - cmatrix_t::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

cvector_t apply_linear(const SiteDims& in, const cvector_t& src, const cmatrix_t& op,
                       std::span<const int> targets, std::span<const int> out_dims) {
  validate_sites(in, targets);
  if (targets.empty()) throw DimensionError("operator needs at least one target");
  if (out_dims.size() != targets.size()) throw DimensionError("one output dim per target required");
  if (static_cast<std::size_t>(src.size()) != in.total()) throw DimensionError("amplitude count mismatch");
  SiteDims out = in;
  for (std::size_t j = 0; j < targets.size(); ++j) out = out.with_site(targets[j], out_dims[j]);

  const std::size_t din = in.subspace_dim(targets);
  const std::size_t dout = out.subspace_dim(targets);
  if (static_cast<std::size_t>(op.cols()) != din || static_cast<std::size_t>(op.rows()) != dout) {
    throw DimensionError("operator shape " + std::to_string(op.rows()) + "x" +
                         std::to_string(op.cols()) + " does not match target dims");
  }

  const std::vector<int> rest = complement(in.num_sites(), targets);
  const std::vector<std::size_t> in_off = subspace_offsets(in, targets);
  const std::vector<std::size_t> out_off = subspace_offsets(out, targets);
  const std::vector<std::size_t> in_rest = subspace_offsets(in, rest);
  const std::vector<std::size_t> out_rest = subspace_offsets(out, rest);

  cvector_t dst = cvector_t::Zero(eidx(out.total()));
  cvector_t local(eidx(din));
  cvector_t mapped(eidx(dout));
  for (std::size_t r = 0; r < in_rest.size(); ++r) {
    for (std::size_t k = 0; k < din; ++k) local(eidx(k)) = src(eidx(in_rest[r] + in_off[k]));
    mapped.noalias() = op * local;
    for (std::size_t k = 0; k < dout; ++k) dst(eidx(out_rest[r] + out_off[k])) = mapped(eidx(k));
  }
  return dst;
}

cvector_t apply_linear(const SiteDims& dims, const cvector_t& amps, const cmatrix_t& op,
                       std::span<const int> targets) {
  std::vector<int> same;
  for (int t : targets) {
    if (t < 0 || t >= dims.num_sites()) throw DimensionError("target out of range");
    same.push_back(dims[t]);
  }
  return apply_linear(dims, amps, op, targets, same);
}

// Unchecked kernel shared by apply_local_map and apply_local_operator.
PureState map_sites(const PureState& state, const cmatrix_t& op, std::span<const int> targets,
                    std::span<const int> out_dims) {
  cvector_t amps = apply_linear(state.dims(), state.amplitudes(), op, targets, out_dims);
  SiteDims out = state.dims();
  for (std::size_t j = 0; j < targets.size(); ++j) out = out.with_site(targets[j], out_dims[j]);
  return PureState(std::move(out), std::move(amps), PureState::Unchecked{});
}

PureState apply_local_map(const PureState& state, const cmatrix_t& op, std::span<const int> targets,
                          std::span<const int> out_dims) {
  if (isometry_deviation(op) > kPipelineTol) throw std::invalid_argument("map is not an isometry");
  return map_sites(state, op, targets, out_dims);
}

PureState apply_local_operator(const PureState& state, const cmatrix_t& op,
                               std::span<const int> targets, OperatorCheck check) {
  validate_sites(state.dims(), targets);
  if (op.rows() != op.cols()) throw DimensionError("local operator must be square");
  if (check == OperatorCheck::kUnitary && unitarity_deviation(op) > kPipelineTol) {
    throw std::invalid_argument("operator is not unitary");
  }
  std::vector<int> dims;
  for (int t : targets) dims.push_back(state.dims()[t]);
  PureState out = map_sites(state, op, targets, dims);
  if (check == OperatorCheck::kNone && std::abs(out.norm() - 1.0) > kPipelineTol) {
    throw std::invalid_argument("unchecked operator did not preserve the norm");
  }
  return out;
}

DensityMatrix partial_trace(const PureState& state, std::span<const int> keep) {
  if (keep.empty()) throw DimensionError("partial trace needs a non-empty keep set");
  const SiteDims& dims = state.dims();
  validate_sites(dims, keep);
  const std::vector<int> rest = complement(dims.num_sites(), keep);
  const std::vector<std::size_t> keep_off = subspace_offsets(dims, keep);
  const std::vector<std::size_t> rest_off = subspace_offsets(dims, rest);

  cmatrix_t m(eidx(keep_off.size()), eidx(rest_off.size()));
  for (std::size_t a = 0; a < keep_off.size(); ++a) {
    for (std::size_t r = 0; r < rest_off.size(); ++r) {
      m(eidx(a), eidx(r)) = state.amplitudes()(eidx(keep_off[a] + rest_off[r]));
    }
  }
  return DensityMatrix(dims.select(keep), m * m.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  if (keep.empty()) throw DimensionError("partial trace needs a non-empty keep set");
  const SiteDims& dims = rho.dims();
  validate_sites(dims, keep);
  const std::vector<int> rest = complement(dims.num_sites(), keep);
  const std::vector<std::size_t> keep_off = subspace_offsets(dims, keep);
  const std::vector<std::size_t> rest_off = subspace_offsets(dims, rest);

  const cmatrix_t& full = rho.matrix();
  cmatrix_t out = cmatrix_t::Zero(eidx(keep_off.size()), eidx(keep_off.size()));
  for (std::size_t a = 0; a < keep_off.size(); ++a) {
    for (std::size_t b = 0; b < keep_off.size(); ++b) {
      complex_t acc{0.0};
      for (std::size_t r : rest_off) acc += full(eidx(keep_off[a] + r), eidx(keep_off[b] + r));
      out(eidx(a), eidx(b)) = acc;
    }
  }
  return DensityMatrix(dims.select(keep), std::move(out));
}

double fidelity_with_pure(const DensityMatrix& rho, const PureState& target) {
  if (!(rho.dims() == target.dims())) {
    throw DimensionError("fidelity of mismatched registers " + rho.dims().to_string() + " vs " +
                         target.dims().to_string());
  }
  const cvector_t& t = target.amplitudes();
  const double f = t.dot(rho.matrix() * t).real();
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace erasurelab
