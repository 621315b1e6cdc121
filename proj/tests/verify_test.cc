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

#include <cmath>

#include <gtest/gtest.h>

#include "erasurelab/codes.h"
#include "erasurelab/noise.h"

namespace erasurelab {
namespace {

CodeSpec bare_three_qubit_code() {
  std::vector<PureState> basis;
  for (std::size_t i = 0; i < 8; ++i) basis.push_back(MessageState::basis(3, i).as_state());
  return CodeSpec("bare", SiteDims::qubits(3), basis);
}

CodeSpec product_code() { return code_from_encoder("product", Circuit(6), 3); }

std::vector<DecoherenceIsometry> channel_grid(std::uint64_t base) {
  std::vector<DecoherenceIsometry> out;
  for (PauliKind k : {PauliKind::kI, PauliKind::kX, PauliKind::kY, PauliKind::kZ}) out.push_back(pauli_error(k));
  for (std::uint64_t s = 0; s < 6; ++s) out.push_back(random_decoherence(derive_seed(base, 1, s), 4));
  return out;
}

TEST(SingleSiteErrors, PauliSetForQubits) {
  const ErrorOperatorSet e = single_site_errors(SiteDims::qubits(3), 1);
  EXPECT_EQ(e.positions, (std::vector<int>{1}));
  ASSERT_EQ(e.operators.size(), 4u);
  EXPECT_EQ(e.operators[1], pauli_basis()[1]);
  EXPECT_EQ(single_site_errors(SiteDims{2, 3}, 1).operators.size(), 9u);
}

TEST(KlGeneral, SixQubitCodePassesAtEveryPosition) {
  const CodeSpec code = six_qubit_logical_basis();
  for (int p = 0; p < 6; ++p) {
    const VerificationReport r = check_kl_general(code, single_site_errors(code.dims(), p));
    EXPECT_TRUE(r.all_passed()) << p;
    EXPECT_LE(r.checks.at(0).worst_deviation, 1e-12);
    EXPECT_EQ(r.checks.at(0).name, "kl_general[pos=" + std::to_string(p) + "]");
  }
}

TEST(KlGeneral, TwoStateCodeWithBitFlipsFails) {
  const CodeSpec code("trivial", SiteDims::qubits(2), {PureState::from_bits("00"), PureState::from_bits("01")});
  const VerificationReport r = check_kl_general(code, ErrorOperatorSet{{1}, {pauli_basis()[0], pauli_basis()[1]}});
  EXPECT_FALSE(r.all_passed());
  EXPECT_NEAR(r.checks.at(0).worst_deviation, 1.0, 1e-12);
}

TEST(KlGeneral, IdentityOnlyAlwaysPasses) {
  const CodeSpec code("trivial", SiteDims::qubits(2), {PureState::from_bits("00"), PureState::from_bits("01")});
  EXPECT_TRUE(check_kl_general(code, ErrorOperatorSet{{0}, {cmatrix_t::Identity(2, 2)}}).all_passed());
  EXPECT_TRUE(check_kl_general(bare_three_qubit_code(), ErrorOperatorSet{{0, 2}, {cmatrix_t::Identity(4, 4)}})
                  .all_passed());
}

TEST(KlGeneral, DimensionMismatch) {
  EXPECT_THROW(check_kl_general(six_qubit_logical_basis(), ErrorOperatorSet{{0}, {cmatrix_t::Identity(4, 4)}}),
               DimensionError);
  EXPECT_THROW(check_kl_general(six_qubit_logical_basis(), ErrorOperatorSet{{7}, {cmatrix_t::Identity(2, 2)}}),
               DimensionError);
}

TEST(KlGeneral, TwoSiteErrorsDefeatSixQubitCode) {
  // Distance two: errors on two sites are not correctable.
  const CodeSpec code = six_qubit_logical_basis();
  ErrorOperatorSet e{{0, 3}, {}};
  for (const cmatrix_t& a : pauli_basis()) {
    for (const cmatrix_t& b : pauli_basis()) {
      cmatrix_t ab(4, 4);
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) ab.block(2 * r, 2 * c, 2, 2) = a(r, c) * b;
      }
      e.operators.push_back(ab);
    }
  }
  EXPECT_FALSE(check_kl_general(code, e).all_passed());
}

TEST(ErasureKl, SixQubitCodeAllPositions) {
  const CodeSpec code = six_qubit_logical_basis();
  for (int p = 0; p < 6; ++p) {
    const VerificationReport r = check_erasure_kl(code, p);
    EXPECT_TRUE(r.all_passed()) << p;
    EXPECT_LE(r.checks.at(0).worst_deviation, 1e-12);
  }
}

TEST(ErasureKl, WCodeAllPositions) {
  const CodeSpec code = w_code();
  for (int p = 0; p < 5; ++p) EXPECT_TRUE(check_erasure_kl(code, p).all_passed()) << p;
}

TEST(ErasureKl, BareCodeFails) {
  const VerificationReport r = check_erasure_kl(bare_three_qubit_code(), 0);
  EXPECT_FALSE(r.all_passed());
  EXPECT_GT(r.checks.at(0).worst_deviation, 0.5);
}

TEST(ErasureKl, PositionOutOfRange) {
  EXPECT_THROW(check_erasure_kl(w_code(), 5), std::out_of_range);
}

TEST(ErasureKl, HidingCodesPass) {
  for (int n = 2; n <= 5; ++n) {
    const CodeSpec code = hiding_code(n);
    for (int p = 0; p < 2 * n; ++p) EXPECT_TRUE(check_erasure_kl(code, p).all_passed()) << n << " " << p;
  }
}

TEST(Synthesize, SixQubitPositionZeroMonteCarlo) {
  const CodeSpec code = six_qubit_logical_basis();
  const SynthesizedDecoder dec = synthesize_recovery(code, 0);
  EXPECT_EQ(dec.rest_sites, (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(dec.output_register, (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(dec.junk_rank, 2);
  EXPECT_LE(unitarity_deviation(dec.unitary), 1e-10);
  for (std::uint64_t t = 0; t < 25; ++t) {
    for (const DecoherenceIsometry& ch : channel_grid(t)) {
      const TrialResult r = run_synthesized_trial(code, random_coordinates(8, 42, t), ErasureEvent{0, ch}, dec);
      ASSERT_TRUE(r.passed(1e-10)) << t << " f=" << r.fidelity;
    }
  }
}

TEST(Synthesize, AgreesWithCircuitPlansOnEveryPosition) {
  const CodeSpec code = six_qubit_logical_basis();
  const Circuit enc = six_qubit_encoder();
  for (int pos = 0; pos < 6; ++pos) {
    const SynthesizedDecoder dec = synthesize_recovery(code, pos);
    const RecoveryPlan plan = recovery_for(pos);
    for (std::uint64_t t = 0; t < 25; ++t) {
      const cvector_t coords = random_coordinates(8, 42, t);
      for (PauliKind k : {PauliKind::kI, PauliKind::kX, PauliKind::kY, PauliKind::kZ}) {
        const ErasureEvent ev{pos, pauli_error(k)};
        const TrialResult a = run_recovery_trial(enc, MessageState(3, coords), ev, plan);
        const TrialResult b = run_synthesized_trial(code, coords, ev, dec);
        ASSERT_LE(max_entry_deviation(a.output, b.output), 1e-10) << pos << " " << t;
      }
    }
  }
}

TEST(Synthesize, WCodeEveryPosition) {
  const CodeSpec code = w_code();
  for (int pos = 0; pos < 5; ++pos) {
    const SynthesizedDecoder dec = synthesize_recovery(code, pos);
    EXPECT_EQ(dec.output_register.size(), 2u);
    for (std::uint64_t t = 0; t < 25; ++t) {
      for (const DecoherenceIsometry& ch : channel_grid(t + 100)) {
        const TrialResult r = run_synthesized_trial(code, random_coordinates(3, 7, t), ErasureEvent{pos, ch}, dec);
        ASSERT_TRUE(r.passed(1e-10)) << pos << " " << t << " f=" << r.fidelity;
      }
    }
  }
}

TEST(Synthesize, LeakageChannels) {
  const CodeSpec code = six_qubit_logical_basis();
  const SynthesizedDecoder dec = synthesize_recovery(code, 4);
  for (std::uint64_t t = 0; t < 10; ++t) {
    const TrialResult r = run_synthesized_trial(code, random_coordinates(8, 3, t),
                                                ErasureEvent{4, leakage_decoherence(t, 4, 3)}, dec);
    EXPECT_TRUE(r.passed(1e-10));
  }
}

TEST(Synthesize, RefusesUncorrectableCode) {
  try {
    synthesize_recovery(bare_three_qubit_code(), 0);
    FAIL() << "expected refusal";
  } catch (const RecoveryError& e) {
    EXPECT_GT(e.worst_deviation(), 0.5);
  }
  EXPECT_THROW(synthesize_recovery(product_code(), 1), RecoveryError);
  EXPECT_THROW(synthesize_recovery(hiding_code(7), 0), std::length_error);
}

TEST(Synthesize, WrongPositionIsRejected) {
  const CodeSpec code = six_qubit_logical_basis();
  const SynthesizedDecoder dec = synthesize_recovery(code, 1);
  EXPECT_THROW(run_synthesized_trial(code, random_coordinates(8, 1, 0), ErasureEvent{2, pauli_error(PauliKind::kX)}, dec),
               std::invalid_argument);
}

TEST(Hiding, SixQubitCode) {
  const VerificationReport r = check_hiding(six_qubit_logical_basis());
  ASSERT_EQ(r.checks.size(), 6u);
  EXPECT_TRUE(r.all_passed());
  for (const CheckResult& c : r.checks) EXPECT_LE(c.worst_deviation, 1e-12);
}

TEST(Hiding, HidingEncodersTwoToFive) {
  for (int n = 2; n <= 5; ++n) {
    const VerificationReport r = check_hiding(hiding_code(n));
    EXPECT_EQ(r.checks.size(), static_cast<std::size_t>(2 * n));
    EXPECT_TRUE(r.all_passed()) << n;
  }
}

TEST(Hiding, ProductCodeFailsAtMessageSites) {
  const VerificationReport r = check_hiding(product_code());
  for (int s = 0; s < 3; ++s) EXPECT_FALSE(r.checks[static_cast<std::size_t>(s)].pass) << s;
}

TEST(Hiding, SingleQubitEncoderDoesNotHide) {
  // With one message qubit the encoder yields a|++> + b|-->, whose marginal
  // |a|^2 |+><+| + |b|^2 |-><-| is I/2 only when |a| = |b|.
  const VerificationReport r = check_hiding(hiding_code(1));
  EXPECT_FALSE(r.all_passed());
}

TEST(Hiding, ReportIsDeterministic) {
  const VerificationReport a = check_hiding(hiding_code(3), 9, 5);
  const VerificationReport b = check_hiding(hiding_code(3), 9, 5);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].worst_deviation, b.checks[i].worst_deviation);
}

TEST(RecoveryTrial, IdentityErrorBasisMessage) {
  const TrialResult r = run_recovery_trial(six_qubit_encoder(), MessageState::basis(3, 0),
                                           ErasureEvent{0, pauli_error(PauliKind::kI)}, recovery_for(0));
  EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
  EXPECT_NEAR(r.purity, 1.0, 1e-12);
}

TEST(RecoveryTrial, UniformSuperpositionYOnFifthSite) {
  const MessageState msg(3, cvector_t::Constant(8, 1.0 / std::sqrt(8.0)));
  const TrialResult r = run_recovery_trial(six_qubit_encoder(), msg, ErasureEvent{4, pauli_error(PauliKind::kY)},
                                           recovery_for(4));
  EXPECT_GE(r.fidelity, 1.0 - 1e-10);
}

TEST(RecoveryTrial, LeakageOnThirdSite) {
  const TrialResult r = run_recovery_trial(six_qubit_encoder(), MessageState::random(3, 5),
                                           ErasureEvent{2, leakage_decoherence(5, 4, 4)}, recovery_for(2));
  EXPECT_TRUE(r.passed(1e-10));
}

TEST(RecoveryTrial, MismatchedPlanIsRejected) {
  EXPECT_THROW(run_recovery_trial(six_qubit_encoder(), MessageState::basis(3, 0),
                                  ErasureEvent{1, pauli_error(PauliKind::kX)}, recovery_for(0)),
               std::invalid_argument);
  RecoveryPlan bad = recovery_for(0);
  bad.recover.add(GateKind::kX, {0});
  EXPECT_THROW(run_recovery_trial(six_qubit_encoder(), MessageState::basis(3, 0),
                                  ErasureEvent{0, pauli_error(PauliKind::kX)}, bad),
               std::logic_error);
}

TEST(RecoveryTrial, WrongPlanLosesFidelity) {
  // Decoding without the recovery step leaves the damage in place.
  RecoveryPlan plan = recovery_for(1);
  plan.recover = Circuit(6);
  double worst = 1.0;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const TrialResult r = run_recovery_trial(six_qubit_encoder(), MessageState::random(3, s),
                                             ErasureEvent{1, random_decoherence(s, 4)}, plan);
    worst = std::min(worst, r.fidelity);
  }
  EXPECT_LT(worst, 0.99);
}

TEST(Seeds, DeriveSeedSeparatesStreams) {
  EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 2, 4));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 3, 3));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(2, 2, 3));
  EXPECT_NEAR(random_coordinates(8, 1, 0).norm(), 1.0, 1e-12);
  EXPECT_EQ(random_coordinates(8, 1, 0), random_coordinates(8, 1, 0));
}

TEST(PaddedMessage, ZeroPads) {
  cvector_t c(3);
  c << 0.6, 0.0, 0.8;
  const PureState s = padded_message(c, 2);
  EXPECT_EQ(s.amplitudes()(3), complex_t(0.0));
  EXPECT_NEAR(s.amplitudes()(2).real(), 0.8, 1e-15);
  EXPECT_THROW(padded_message(c, 1), DimensionError);
}

}  // namespace
}  // namespace erasurelab
