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

#include "erasurelab/verify.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace erasurelab {

namespace {

Eigen::Index eidx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::string pos_name(const std::string& stem, const std::vector<int>& positions) {
  std::ostringstream os;
  os << stem << "[pos=";
  for (std::size_t j = 0; j < positions.size(); ++j) os << (j ? "," : "") << positions[j];
  os << ']';
  return os.str();
}

// Worst violation of  M_ii == M_00  and  M_ij == 0 (i != j).
double kl_violation(const cmatrix_t& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    worst = std::max(worst, std::abs(m(i, i) - m(0, 0)));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j) worst = std::max(worst, std::abs(m(i, j)));
    }
  }
  return worst;
}

// M_ij = <i|O|j> from the sliced Gram matrix of the logical basis.
cmatrix_t logical_matrix(const cmatrix_t& gram, Eigen::Index logical_dim, const cmatrix_t& op) {
  const Eigen::Index dk = op.rows();
  cmatrix_t m(logical_dim, logical_dim);
  for (Eigen::Index i = 0; i < logical_dim; ++i) {
    for (Eigen::Index j = 0; j < logical_dim; ++j) {
      m(i, j) = op.cwiseProduct(gram.block(i * dk, j * dk, dk, dk)).sum();
    }
  }
  return m;
}

void validate_error_set(const CodeSpec& code, const ErrorOperatorSet& errors) {
  validate_sites(code.dims(), errors.positions);
  if (errors.positions.empty()) throw DimensionError("error set needs at least one position");
  const auto side = static_cast<Eigen::Index>(code.dims().subspace_dim(errors.positions));
  for (const cmatrix_t& a : errors.operators) {
    if (a.rows() != side || a.cols() != side) {
      throw DimensionError("error operator side does not match the error positions");
    }
  }
}

// Amplitude slices w_{i,k} = (<k|_position (x) I) |i_L>, indexed [i][k].
std::vector<std::vector<cvector_t>> erased_slices(const CodeSpec& code, int position) {
  const SiteDims& dims = code.dims();
  const std::size_t stride = dims.stride(position);
  const auto dp = static_cast<std::size_t>(dims[position]);
  const std::size_t rest_total = dims.total() / dp;
  std::vector<std::vector<cvector_t>> w;
  for (const PureState& s : code.logical_basis()) {
    std::vector<cvector_t> per_k(dp, cvector_t::Zero(eidx(rest_total)));
    for (std::size_t idx = 0; idx < dims.total(); ++idx) {
      const std::size_t k = (idx / stride) % dp;
      const std::size_t r = (idx / (stride * dp)) * stride + idx % stride;
      per_k[k](eidx(r)) = s.amplitudes()(eidx(idx));
    }
    w.push_back(std::move(per_k));
  }
  return w;
}

}  // namespace

//============================================================================
// VerificationReport
//============================================================================

void VerificationReport::add(std::string name, double worst_deviation, double tolerance,
                             std::string details) {
  CheckResult r;
  r.name = std::move(name);
  r.worst_deviation = std::max(0.0, worst_deviation);
  r.tolerance = tolerance;
  r.pass = r.worst_deviation <= tolerance;
  r.details = std::move(details);
  checks.push_back(std::move(r));
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

//============================================================================
// Knill-Laflamme conditions
//============================================================================

ErrorOperatorSet single_site_errors(const SiteDims& dims, int position) {
  const std::vector<int> pos{position};
  validate_sites(dims, pos);
  ErrorOperatorSet set;
  set.positions = pos;
  const int d = dims[position];
  if (d == 2) {
    set.operators.assign(pauli_basis().begin(), pauli_basis().end());
    return set;
  }
  set.operators.push_back(cmatrix_t::Identity(d, d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      if (j == d - 1 && k == d - 1) continue;
      cmatrix_t e = cmatrix_t::Zero(d, d);
      e(j, k) = 1.0;
      set.operators.push_back(std::move(e));
    }
  }
  return set;
}

VerificationReport check_kl_general(const CodeSpec& code, const ErrorOperatorSet& errors,
                                    double tolerance) {
  validate_error_set(code, errors);
  const cmatrix_t gram = sliced_gram(code.dims(), code.logical_basis(), errors.positions);
  const auto n = static_cast<Eigen::Index>(code.logical_dim());
  double worst = 0.0;
  std::size_t worst_a = 0, worst_b = 0;
  for (std::size_t a = 0; a < errors.operators.size(); ++a) {
    for (std::size_t b = 0; b < errors.operators.size(); ++b) {
      const cmatrix_t product = errors.operators[a].adjoint() * errors.operators[b];
      const double v = kl_violation(logical_matrix(gram, n, product));
      if (v > worst) {
        worst = v;
        worst_a = a;
        worst_b = b;
      }
    }
  }
  VerificationReport report;
  std::ostringstream details;
  details << errors.operators.size() * errors.operators.size() << " operator pairs; worst at (a="
          << worst_a << ", b=" << worst_b << ")";
  report.add(pos_name("kl_general", errors.positions), worst, tolerance, details.str());
  return report;
}

VerificationReport check_erasure_kl(const CodeSpec& code, int position, double tolerance) {
  if (position < 0 || position >= code.n_physical()) {
    throw std::out_of_range("position " + std::to_string(position) + " out of range");
  }
  const ErrorOperatorSet errors = single_site_errors(code.dims(), position);
  const cmatrix_t gram = sliced_gram(code.dims(), code.logical_basis(), errors.positions);
  const auto n = static_cast<Eigen::Index>(code.logical_dim());
  double worst = 0.0;
  for (const cmatrix_t& a : errors.operators) {
    worst = std::max(worst, kl_violation(logical_matrix(gram, n, a)));
  }
  VerificationReport report;
  report.add(pos_name("erasure_kl", {position}), worst, tolerance,
             std::to_string(errors.operators.size()) + " error operators");
  return report;
}

//============================================================================
// Decoder synthesis
//============================================================================

SynthesizedDecoder synthesize_recovery(const CodeSpec& code, int position, double tolerance) {
  if (position < 0 || position >= code.n_physical()) {
    throw std::out_of_range("position " + std::to_string(position) + " out of range");
  }
  const std::size_t rest_size = code.dims().total() / static_cast<std::size_t>(code.dims()[position]);
  if (rest_size > kMaxDecoderDim) {
    throw std::length_error("decoder on " + std::to_string(rest_size) +
                            " dimensions exceeds the dense limit of " + std::to_string(kMaxDecoderDim));
  }
  const VerificationReport kl = check_erasure_kl(code, position, tolerance);
  if (!kl.all_passed()) {
    throw RecoveryError("code '" + code.label() + "' is not erasure-correctable at position " +
                            std::to_string(position),
                        kl.checks.front().worst_deviation);
  }
  const SiteDims& dims = code.dims();
  const auto dp = static_cast<Eigen::Index>(dims[position]);
  const auto L = static_cast<std::size_t>(code.logical_dim());
  const auto rest_total = static_cast<Eigen::Index>(dims.total()) / dp;

  // Gram property <w_ik|w_jk'> = delta_ij g_kk'.
  const std::vector<int> erased{position};
  const cmatrix_t sliced = sliced_gram(dims, code.logical_basis(), erased);
  const cmatrix_t g = sliced.topLeftCorner(dp, dp);
  double gram_dev = 0.0;
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < L; ++j) {
      const cmatrix_t block = sliced.block(eidx(i) * dp, eidx(j) * dp, dp, dp);
      const cmatrix_t expect = i == j ? g : cmatrix_t::Zero(dp, dp);
      gram_dev = std::max(gram_dev, (block - expect).cwiseAbs().maxCoeff());
    }
  }
  if (gram_dev > tolerance) {
    throw RecoveryError("Gram property violated at position " + std::to_string(position), gram_dev);
  }
  const auto w = erased_slices(code, position);

  Eigen::SelfAdjointEigenSolver<cmatrix_t> es(g);
  const Eigen::VectorXd lambda = es.eigenvalues();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(dp));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return lambda(a) > lambda(b) + tolerance;
  });
  std::vector<Eigen::Index> sectors;
  for (Eigen::Index m : order) {
    if (lambda(m) > tolerance) sectors.push_back(m);
  }

  SynthesizedDecoder dec;
  dec.position = position;
  for (int s = 0; s < code.n_physical(); ++s) {
    if (s != position) dec.rest_sites.push_back(s);
  }
  const int q = code.k_logical();
  if (static_cast<int>(dec.rest_sites.size()) <= q) {
    throw RecoveryError("not enough surviving sites for the output register", 0.0);
  }
  dec.output_register.assign(dec.rest_sites.end() - q, dec.rest_sites.end());
  for (int s : dec.output_register) {
    if (dims[s] != 2) throw RecoveryError("output register sites must be qubits", 0.0);
  }
  const Eigen::Index out_dim = Eigen::Index{1} << q;
  const Eigen::Index junk_capacity = rest_total / out_dim;
  dec.junk_rank = static_cast<int>(sectors.size());
  if (Eigen::Index(sectors.size()) > junk_capacity) {
    throw RecoveryError("junk space too small for the erased-site sectors", 0.0);
  }

  // Orthonormal sector vectors u_{i,m} = sum_k v_m(k) w_{i,k} / sqrt(lambda_m),
  // sent to |m>_junk (x) |i>_out.
  const auto cols = static_cast<Eigen::Index>(L * sectors.size());
  cmatrix_t from(rest_total, cols);
  std::vector<bool> used(static_cast<std::size_t>(rest_total), false);
  cmatrix_t to = cmatrix_t::Zero(rest_total, cols);
  Eigen::Index c = 0;
  for (std::size_t m = 0; m < sectors.size(); ++m) {
    const cvector_t v = es.eigenvectors().col(sectors[m]);
    const double norm = std::sqrt(lambda(sectors[m]));
    for (std::size_t i = 0; i < L; ++i, ++c) {
      cvector_t u = cvector_t::Zero(rest_total);
      for (Eigen::Index k = 0; k < dp; ++k) u += v(k) * w[i][static_cast<std::size_t>(k)];
      from.col(c) = u / norm;
      const Eigen::Index target = eidx(m) * out_dim + eidx(i);
      to(target, c) = 1.0;
      used[static_cast<std::size_t>(target)] = true;
    }
  }

  // Extend to a unitary: complement of `from` onto unused basis vectors.
  Eigen::HouseholderQR<cmatrix_t> qr(from);
  const cmatrix_t qfull = qr.householderQ();
  cmatrix_t u = to * from.adjoint();
  Eigen::Index spare = cols;
  for (Eigen::Index b = 0; b < rest_total; ++b) {
    if (used[static_cast<std::size_t>(b)]) continue;
    u.row(b) += qfull.col(spare++).adjoint();
  }
  const double dev = unitarity_deviation(u);
  if (dev > tolerance) throw RecoveryError("synthesized decoder is not unitary", dev);
  dec.unitary = std::move(u);
  return dec;
}

PureState apply_synthesized(const PureState& joint, const SynthesizedDecoder& decoder) {
  return apply_local_operator(joint, decoder.unitary, decoder.rest_sites);
}

//============================================================================
// Hiding
//============================================================================

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
  // splitmix64 over the three words.
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ stream) ^ index);
}

cvector_t random_coordinates(int logical_dim, std::uint64_t seed, std::uint64_t index) {
  if (logical_dim < 1) throw std::invalid_argument("logical dimension must be positive");
  std::mt19937_64 rng(derive_seed(seed, 0x6d657373616765ULL, index));
  std::normal_distribution<double> normal;
  cvector_t v(logical_dim);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = complex_t(re, im);
  }
  return v.normalized();
}

VerificationReport check_hiding(const CodeSpec& code, std::uint64_t seed, int trials,
                                double tolerance) {
  if (trials < 1) throw std::invalid_argument("hiding check needs at least one trial");
  std::vector<double> worst(static_cast<std::size_t>(code.n_physical()), 0.0);
  for (int t = 0; t < trials; ++t) {
    const PureState encoded =
        code.encode(random_coordinates(code.logical_dim(), seed, static_cast<std::uint64_t>(t)));
    for (int s = 0; s < code.n_physical(); ++s) {
      const std::vector<int> keep{s};
      const DensityMatrix rho = partial_trace(encoded, keep);
      const int d = code.dims()[s];
      const cmatrix_t mixed = cmatrix_t::Identity(d, d) / double(d);
      worst[static_cast<std::size_t>(s)] =
          std::max(worst[static_cast<std::size_t>(s)], (rho.matrix() - mixed).cwiseAbs().maxCoeff());
    }
  }
  VerificationReport report;
  report.seed = seed;
  for (int s = 0; s < code.n_physical(); ++s) {
    report.add("hiding[site=" + std::to_string(s) + "]", worst[static_cast<std::size_t>(s)], tolerance,
               std::to_string(trials) + " random messages");
  }
  return report;
}

//============================================================================
// Recovery trials
//============================================================================

PureState padded_message(const cvector_t& coords, int k_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << k_qubits;
  if (coords.size() > dim) throw DimensionError("message does not fit the output register");
  cvector_t v = cvector_t::Zero(dim);
  v.head(coords.size()) = coords;
  return PureState(SiteDims::qubits(k_qubits), std::move(v));
}

double max_entry_deviation(const DensityMatrix& a, const DensityMatrix& b) {
  if (!(a.dims() == b.dims())) throw DimensionError("comparing reduced states of different shape");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

TrialResult run_recovery_trial(const Circuit& encoder, const MessageState& message,
                               const ErasureEvent& event, const RecoveryPlan& plan) {
  if (event.position != plan.bad_position) {
    throw std::invalid_argument("recovery plan is for a different bad position");
  }
  if (plan.decode.touches(plan.bad_position) || plan.recover.touches(plan.bad_position)) {
    throw std::logic_error("recovery plan acts on the bad qubit");
  }
  const PureState encoded = apply_circuit(with_ancillas(message, encoder.num_qubits()), encoder);
  const PureState damaged = apply_erasure(encoded, event);
  const PureState recovered = apply_circuit(apply_circuit(damaged, plan.decode), plan.recover);
  DensityMatrix rho = partial_trace(recovered, plan.output_register);
  const double f = fidelity_with_pure(rho, message.as_state());
  const double p = rho.purity();
  return TrialResult{f, p, std::move(rho)};
}

TrialResult run_synthesized_trial(const CodeSpec& code, const cvector_t& coords,
                                  const ErasureEvent& event, const SynthesizedDecoder& decoder) {
  if (event.position != decoder.position) {
    throw std::invalid_argument("decoder was synthesized for a different position");
  }
  const PureState damaged = apply_erasure(code.encode(coords), event);
  const PureState recovered = apply_synthesized(damaged, decoder);
  DensityMatrix rho = partial_trace(recovered, decoder.output_register);
  const double f = fidelity_with_pure(rho, padded_message(coords, code.k_logical()));
  const double p = rho.purity();
  return TrialResult{f, p, std::move(rho)};
}

}  // namespace erasurelab
