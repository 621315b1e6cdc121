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

#ifndef ERASURELAB_VERIFY_H
#define ERASURELAB_VERIFY_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "erasurelab/codes.h"
#include "erasurelab/gates.h"
#include "erasurelab/noise.h"
#include "erasurelab/statevector.h"

namespace erasurelab {

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst_deviation = 0.0;
  double tolerance = kPipelineTol;
  std::string details;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;

  // Records a check; pass is derived as worst_deviation <= tolerance.
  void add(std::string name, double worst_deviation, double tolerance, std::string details = {});
  void append(const VerificationReport& other);
  bool all_passed() const;
};

// Error operators A_a acting jointly on `positions` of a code register.
struct ErrorOperatorSet {
  std::vector<int> positions;
  std::vector<cmatrix_t> operators;
};

// {1, X, Y, Z} on a qubit site; for a d-level site the identity followed by
// the matrix units |j><k| except |d-1><d-1| (d^2 operators spanning all).
ErrorOperatorSet single_site_errors(const SiteDims& dims, int position);

// Knill-Laflamme conditions <i|A_a^dagger A_b|j> = c_ab delta_ij over every
// pair (a, b) and every pair of logical basis states.
VerificationReport check_kl_general(const CodeSpec& code, const ErrorOperatorSet& errors,
                                    double tolerance = kPipelineTol);

VerificationReport check_erasure_kl(const CodeSpec& code, int position,
                                    double tolerance = kPipelineTol);

class RecoveryError : public std::runtime_error {
 public:
  RecoveryError(const std::string& what, double worst_deviation)
      : std::runtime_error(what), worst_deviation_(worst_deviation) {}
  double worst_deviation() const { return worst_deviation_; }

 private:
  double worst_deviation_;
};

// Unitary on every code site except `position`. It maps the code's
// information into the last k_logical() of those sites; logical index i
// appears as |i> there, tensored with a junk state independent of i.
struct SynthesizedDecoder {
  int position = 0;
  std::vector<int> rest_sites;
  cmatrix_t unitary;
  std::vector<int> output_register;
  int junk_rank = 0;
};

// Largest surviving-register dimension for which a dense decoder is built.
inline constexpr std::size_t kMaxDecoderDim = 2048;

// Throws RecoveryError when the erasure conditions fail at `position`, and
// std::length_error when the surviving register exceeds kMaxDecoderDim.
SynthesizedDecoder synthesize_recovery(const CodeSpec& code, int position,
                                       double tolerance = kPipelineTol);

// Applies the decoder to a joint state whose code sites are 0..n-1; the
// errored site and any trailing environment sites are left alone.
PureState apply_synthesized(const PureState& joint, const SynthesizedDecoder& decoder);

// Encodes `trials` seeded random messages and compares every single-site
// marginal with the maximally mixed state.
VerificationReport check_hiding(const CodeSpec& code, std::uint64_t seed = 42, int trials = 25,
                                double tolerance = kPipelineTol);

// Random logical coordinates for trial `index` under `seed`.
cvector_t random_coordinates(int logical_dim, std::uint64_t seed, std::uint64_t index);

struct TrialResult {
  double fidelity;
  double purity;
  DensityMatrix output;

  bool passed(double tolerance) const {
    return fidelity >= 1.0 - tolerance && purity >= 1.0 - tolerance;
  }
};

// The message padded to a 2^k register: coords followed by zeros.
PureState padded_message(const cvector_t& coords, int k_qubits);

// encode -> erasure -> decode -> recover -> reduced state on the output register.
TrialResult run_recovery_trial(const Circuit& encoder, const MessageState& message,
                               const ErasureEvent& event, const RecoveryPlan& plan);

// Same pipeline with a synthesized decoder in place of explicit circuits.
TrialResult run_synthesized_trial(const CodeSpec& code, const cvector_t& coords,
                                  const ErasureEvent& event, const SynthesizedDecoder& decoder);

// Largest entrywise difference between two reduced states.
double max_entry_deviation(const DensityMatrix& a, const DensityMatrix& b);

// Derives independent 64-bit seeds from a base seed, a stream tag and an index.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

}  // namespace erasurelab

#endif  // ERASURELAB_VERIFY_H
