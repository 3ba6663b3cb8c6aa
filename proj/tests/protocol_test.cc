// Copyright 2026 The qtele Authors
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

#include "qtele/protocol.h"

#include <cmath>
#include <cstring>
#include <numbers>

#include "gtest/gtest.h"
#include "qtele/errors.h"
#include "qtele/recovery_table.h"
#include "support/test_util.h"

using namespace qtele;
using qtele::testutil::generic_channel;
using qtele::testutil::random_channel;

namespace {

// Success probability in closed form: each of the 16 Bell branches
// contributes 1 / (x * sum_k 1/c_k^2), independent of the input.
double closed_form_success(const ChannelParams& ch, double x) {
  double inv = 0.0;
  for (double c : ch.coefficients()) inv += 1.0 / (c * c);
  return 16.0 / (x * inv);
}

}  // namespace

TEST(Fidelity, basics) {
  StateVector zero = StateVector::basis({"q"}, 0);
  StateVector one = StateVector::basis({"q"}, 1);
  EXPECT_EQ(fidelity(zero, zero), 1.0);
  EXPECT_EQ(fidelity(zero, one), 0.0);
  EXPECT_THROW(fidelity(zero, StateVector::basis({"a", "b"}, 0)), LabelError);
  Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    StateVector a = haar_random_state({"a", "b"}, rng);
    StateVector b = haar_random_state({"a", "b"}, rng);
    EXPECT_NEAR(fidelity(a, b), std::norm(inner(b, a)), 1e-14);
  }
}

TEST(TeleportSingle, fixed_inputs) {
  Rng rng(52);
  StateVector zero = StateVector::basis({"q"}, 0);
  for (int i = 0; i < 10; ++i) {
    SingleTeleport t = teleport_single(zero, rng);
    EXPECT_NEAR(fidelity(t.recovered, zero), 1.0, 1e-12);
    EXPECT_EQ(t.recovered.labels(), zero.labels());
  }
  double h = 1.0 / std::numbers::sqrt2;
  StateVector plus({"q"}, {h, h});
  EXPECT_NEAR(fidelity(teleport_single(plus, rng).recovered, plus), 1.0, 1e-12);
}

TEST(TeleportSingle, random_inputs_all_outcomes) {
  Rng rng(53);
  std::array<int, 4> seen{};
  for (int i = 0; i < 1000; ++i) {
    StateVector psi = haar_random_state({"q"}, rng);
    SingleTeleport t = teleport_single(psi, rng);
    ASSERT_LT(t.bits, 4u);
    ++seen[t.bits];
    EXPECT_NEAR(fidelity(t.recovered, psi), 1.0, 1e-12);
  }
  for (int count : seen) EXPECT_GT(count, 0);
}

TEST(TeleportSingle, errors) {
  Rng rng(54);
  EXPECT_THROW(teleport_single(StateVector::basis({"a", "b"}, 0), rng), LabelError);
  EXPECT_THROW(teleport_single(StateVector({"q"}, {1.0, 1.0}), rng), InvariantError);
}

TEST(InputState, validation) {
  EXPECT_THROW(InputState(1.0, 1.0, 0.0, 0.0), InvariantError);
  EXPECT_NO_THROW(InputState(0.0, Complex(0.0, 1.0), 0.0, 0.0));
}

TEST(PrepareWorld, limiting_basis_case) {
  StateVector w = prepare_world(InputState(1.0, 0.0, 0.0, 0.0),
                                ChannelParams::unchecked(1.0, 0.0, 0.0, 0.0));
  EXPECT_EQ(w.amplitude("000000"), Complex(1.0));
  EXPECT_NEAR(w.norm(), 1.0, 1e-15);
}

TEST(PrepareWorld, uniform_amplitudes) {
  StateVector w = prepare_world(InputState(0.5, 0.5, 0.5, 0.5), ChannelParams::uniform());
  EXPECT_EQ(w.labels(), (std::vector<Label>{"1", "2", "3", "4", "5", "6"}));
  int nonzero = 0;
  for (const Complex& a : w.amplitudes()) {
    if (std::abs(a) > 0.0) {
      ++nonzero;
      EXPECT_NEAR(std::abs(a - 0.25), 0.0, 1e-15);
    }
  }
  EXPECT_EQ(nonzero, 16);
  EXPECT_NEAR(w.norm(), 1.0, 1e-15);
}

TEST(PrepareWorld, coefficient_placement) {
  InputState input(Complex(0.1, 0.2), Complex(0.3, -0.4), Complex(0.5, 0.0),
                   Complex(0.0, std::sqrt(1.0 - 0.55)));
  ChannelParams ch = generic_channel();
  StateVector w = prepare_world(input, ch);
  const auto& in = input.coefficients();
  EXPECT_EQ(w.amplitude("01" "1001"), in[1] * ch.beta());
  EXPECT_EQ(w.amplitude("00" "0000"), in[0] * ch.alpha());
  EXPECT_EQ(w.amplitude("10" "0110"), in[2] * ch.gamma());
  EXPECT_EQ(w.amplitude("11" "1111"), in[3] * ch.delta());
  EXPECT_EQ(w.amplitude("11" "0110"), in[3] * ch.gamma());
}

TEST(AliceMeasure, phi_plus_pair_uniform) {
  InputState input(0.5, 0.5, 0.5, 0.5);
  AliceMeasurement m = alice_branch(prepare_world(input, ChannelParams::uniform()),
                                    BellKind::kPhiPlus, BellKind::kPhiPlus);
  EXPECT_NEAR(m.branch_probability, 1.0 / 16.0, 1e-15);
  EXPECT_EQ(m.bob_state.labels(), (std::vector<Label>{"5", "6"}));
  EXPECT_NEAR(fidelity(m.bob_state, input.as_state()), 1.0, 1e-14);
}

TEST(AliceMeasure, phi_plus_pair_generic_matches_projection_formula) {
  Rng rng(55);
  InputState input = InputState::haar_random(rng);
  ChannelParams ch = generic_channel();
  AliceMeasurement m = alice_branch(prepare_world(input, ch), BellKind::kPhiPlus,
                                    BellKind::kPhiPlus);
  const auto& in = input.coefficients();
  const auto& c = ch.coefficients();
  std::vector<Complex> expected(4);
  for (std::size_t k = 0; k < 4; ++k) expected[k] = in[k] * c[k];
  Normalized e = normalize(StateVector({"5", "6"}, expected));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(m.bob_state[k] - e.state[k]), 0.0, 1e-14);
  // Each Bell projection contributes a factor 1/sqrt(2) to the amplitude.
  EXPECT_NEAR(m.branch_probability, e.norm * e.norm / 4.0, 1e-15);
}

TEST(AliceMeasure, single_term_input) {
  AliceMeasurement m = alice_branch(
      prepare_world(InputState(1.0, 0.0, 0.0, 0.0), ChannelParams::uniform()),
      BellKind::kPhiPlus, BellKind::kPhiPlus);
  EXPECT_NEAR(std::abs(m.bob_state.amplitude("00") - 1.0), 0.0, 1e-15);
}

TEST(AliceMeasure, branches_sum_to_one) {
  Rng rng(56);
  for (int i = 0; i < 50; ++i) {
    StateVector world = prepare_world(InputState::haar_random(rng), random_channel(rng));
    double total = 0.0;
    for (BellKind b23 : kAllBellKinds) {
      for (BellKind b14 : kAllBellKinds) total += alice_branch(world, b23, b14).branch_probability;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(AliceMeasure, measurement_order_does_not_change_statistics) {
  Rng rng(57);
  StateVector world = prepare_world(InputState::haar_random(rng), generic_channel());
  for (BellKind b23 : kAllBellKinds) {
    for (BellKind b14 : kAllBellKinds) {
      StateVector first = bell_branch(bell_branch(world, "2", "3", b23), "1", "4", b14);
      StateVector second = bell_branch(bell_branch(world, "1", "4", b14), "2", "3", b23);
      ASSERT_EQ(first.labels(), second.labels());
      for (std::size_t k = 0; k < first.dim(); ++k) {
        EXPECT_NEAR(std::abs(first[k] - second[k]), 0.0, 1e-15);
      }
    }
  }
}

TEST(AliceMeasure, sampled_outcome_has_branch_probability) {
  Rng rng(58);
  StateVector world = prepare_world(InputState::haar_random(rng), generic_channel());
  for (int i = 0; i < 20; ++i) {
    AliceMeasurement m = alice_measure(world, rng);
    AliceMeasurement fixed = alice_branch(world, m.bell_23.kind(), m.bell_14.kind());
    EXPECT_NEAR(m.branch_probability, fixed.branch_probability, 1e-14);
    EXPECT_NEAR(fidelity(m.bob_state, fixed.bob_state), 1.0, 1e-12);
  }
}

TEST(BobEntangleAncilla, basis_case) {
  StateVector s = bob_entangle_ancilla(StateVector::basis({"5", "6"}, 0));
  EXPECT_EQ(s.labels(), (std::vector<Label>{"5", "6", "A", "B"}));
  EXPECT_EQ(s.amplitude("0000"), Complex(1.0));
}

TEST(BobEntangleAncilla, copies_computational_basis) {
  Rng rng(59);
  InputState input = InputState::haar_random(rng);
  ChannelParams ch = generic_channel();
  AliceMeasurement m =
      alice_branch(prepare_world(input, ch), BellKind::kPhiPlus, BellKind::kPhiPlus);
  StateVector s = bob_entangle_ancilla(m.bob_state);
  EXPECT_NEAR(std::abs(s.amplitude("0101") - m.bob_state.amplitude("01")), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude("0000") - m.bob_state.amplitude("00")), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude("1010") - m.bob_state.amplitude("10")), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude("1111") - m.bob_state.amplitude("11")), 0.0, 1e-15);
  double others = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    if ((i >> 2) != (i & 3)) others += std::norm(s[i]);
  }
  EXPECT_EQ(others, 0.0);
  // Marginal Z-basis statistics of (5, 6) are unchanged.
  for (std::size_t k = 0; k < 4; ++k) {
    double after = 0.0;
    for (std::size_t anc = 0; anc < 4; ++anc) after += std::norm(s[(k << 2) | anc]);
    EXPECT_NEAR(after, std::norm(m.bob_state[k]), 1e-15);
  }
}

TEST(Recovery, phi_plus_index_one_is_input) {
  Rng rng(60);
  InputState input = InputState::haar_random(rng);
  ChannelParams ch = generic_channel();
  PovmSet povm = build_povm(ch, min_x(ch));
  AliceMeasurement m =
      alice_branch(prepare_world(input, ch), BellKind::kPhiPlus, BellKind::kPhiPlus);
  StateVector ancilla = bob_entangle_ancilla(m.bob_state);
  // Index 1 needs no correction at all: the projected pair is already the input.
  StateVector raw = normalize(partial_inner(povm.discrimination[0],
                                            povm_branch(ancilla, povm, kAncillaLabels, 1)))
                        .state;
  EXPECT_NEAR(fidelity(raw, input.as_state()), 1.0, 1e-12);
  StateVector rec =
      recover_conclusive(ancilla, povm, BellKind::kPhiPlus, BellKind::kPhiPlus, 1);
  EXPECT_NEAR(fidelity(rec, input.as_state()), 1.0, 1e-12);
}

TEST(Recovery, phi_plus_index_three_needs_sign_fix) {
  Rng rng(61);
  InputState input = InputState::haar_random(rng);
  ChannelParams ch = generic_channel();
  PovmSet povm = build_povm(ch, min_x(ch));
  AliceMeasurement m =
      alice_branch(prepare_world(input, ch), BellKind::kPhiPlus, BellKind::kPhiPlus);
  StateVector ancilla = bob_entangle_ancilla(m.bob_state);
  StateVector raw = normalize(partial_inner(povm.discrimination[2],
                                            povm_branch(ancilla, povm, kAncillaLabels, 3)))
                        .state;
  const auto& in = input.coefficients();
  StateVector flipped({"5", "6"}, {in[0], -in[1], in[2], -in[3]});
  EXPECT_NEAR(fidelity(raw, flipped), 1.0, 1e-12);
  EXPECT_EQ(recovery_pauli(BellKind::kPhiPlus, BellKind::kPhiPlus, 3), "IZ");
  StateVector rec =
      recover_conclusive(ancilla, povm, BellKind::kPhiPlus, BellKind::kPhiPlus, 3);
  EXPECT_NEAR(fidelity(rec, input.as_state()), 1.0, 1e-12);
}

TEST(Recovery, every_branch_and_index_is_exact) {
  Rng rng(62);
  for (int i = 0; i < 20; ++i) {
    InputState input = InputState::haar_random(rng);
    ChannelParams ch = random_channel(rng);
    PovmSet povm = build_povm(ch, min_x(ch));
    StateVector world = prepare_world(input, ch);
    for (BellKind b23 : kAllBellKinds) {
      for (BellKind b14 : kAllBellKinds) {
        StateVector ancilla = bob_entangle_ancilla(alice_branch(world, b23, b14).bob_state);
        for (int index = 1; index <= 4; ++index) {
          StateVector rec = recover_conclusive(ancilla, povm, b23, b14, index);
          EXPECT_NEAR(fidelity(rec, input.as_state()), 1.0, 1e-10);
        }
      }
    }
  }
}

TEST(BobDiscriminate, uniform_channel_always_conclusive) {
  Rng rng(63);
  InputState input = InputState::haar_random(rng);
  StateVector world = prepare_world(input, ChannelParams::uniform());
  for (int i = 0; i < 200; ++i) {
    AliceMeasurement m = alice_measure(world, rng);
    TeleportResult r = bob_discriminate_and_recover(bob_entangle_ancilla(m.bob_state),
                                                    ChannelParams::uniform(), 1.0, m.bell_23,
                                                    m.bell_14, input, rng);
    EXPECT_TRUE(r.conclusive);
    ASSERT_TRUE(r.fidelity.has_value());
    EXPECT_NEAR(*r.fidelity, 1.0, 1e-12);
  }
}

TEST(BobDiscriminate, inconclusive_carries_no_state) {
  Rng rng(64);
  InputState input = InputState::haar_random(rng);
  ChannelParams ch = generic_channel();
  PovmSet povm = build_povm(ch, 4.0);
  StateVector world = prepare_world(input, ch);
  int inconclusive = 0;
  for (int i = 0; i < 200; ++i) {
    AliceMeasurement m = alice_measure(world, rng);
    TeleportResult r = bob_discriminate_and_recover(bob_entangle_ancilla(m.bob_state), povm,
                                                    m.bell_23, m.bell_14, input, rng);
    EXPECT_EQ(r.conclusive, r.povm_index != kInconclusiveIndex);
    EXPECT_EQ(r.recovered.has_value(), r.conclusive);
    EXPECT_EQ(r.fidelity.has_value(), r.conclusive);
    if (r.conclusive) {
      EXPECT_LE(*r.fidelity, 1.0 + 1e-12);
      EXPECT_NEAR(*r.fidelity, 1.0, 1e-10);
    } else {
      ++inconclusive;
    }
  }
  EXPECT_GT(inconclusive, 0);
}

TEST(BobDiscriminate, rejects_small_x) {
  Rng rng(65);
  InputState input(0.5, 0.5, 0.5, 0.5);
  StateVector s = bob_entangle_ancilla(input.as_state({"5", "6"}));
  EXPECT_THROW(bob_discriminate_and_recover(s, generic_channel(), 1.0,
                                            BellOutcome(BellKind::kPhiPlus),
                                            BellOutcome(BellKind::kPhiPlus), input, rng),
               PositivityError);
}

TEST(ExactSuccess, uniform_channel_is_deterministic) {
  Rng rng(66);
  for (int i = 0; i < 10; ++i) {
    EXPECT_NEAR(exact_success_probability(InputState::haar_random(rng), ChannelParams::uniform(),
                                          1.0),
                1.0, 1e-12);
  }
}

TEST(ExactSuccess, matches_closed_form_and_is_input_independent) {
  Rng rng(67);
  for (int i = 0; i < 30; ++i) {
    ChannelParams ch = random_channel(rng);
    double x = min_x(ch) * (1.0 + rng.uniform());
    double expected = closed_form_success(ch, x);
    for (int j = 0; j < 5; ++j) {
      EXPECT_NEAR(exact_success_probability(InputState::haar_random(rng), ch, x), expected, 1e-12);
    }
    // Skewed inputs too.
    EXPECT_NEAR(exact_success_probability(InputState(1.0, 0.0, 0.0, 0.0), ch, x), expected,
                1e-12);
  }
}

TEST(ExactSuccess, halves_when_x_doubles) {
  Rng rng(68);
  for (int i = 0; i < 20; ++i) {
    ChannelParams ch = random_channel(rng);
    InputState input = InputState::haar_random(rng);
    double x = min_x(ch);
    EXPECT_NEAR(exact_success_probability(input, ch, 2 * x),
                exact_success_probability(input, ch, x) / 2, 1e-12);
  }
}

TEST(ExactSuccess, maximal_at_min_x) {
  ChannelParams ch = generic_channel();
  InputState input(0.5, 0.5, 0.5, 0.5);
  double best = exact_success_probability(input, ch, min_x(ch));
  EXPECT_NEAR(best, 0.36, 1e-12);  // 4 * min(c_k)^2 at x = min_x
  for (double x = min_x(ch) + 0.1; x <= 4.0; x += 0.25) {
    EXPECT_LT(exact_success_probability(input, ch, x), best);
  }
  EXPECT_THROW(exact_success_probability(input, ch, 1.0), PositivityError);
}

TEST(RunTeleportation, uniform_channel_rate_is_one) {
  Rng rng(69);
  RunStatistics s =
      run_teleportation(InputState::haar_random(rng), ChannelParams::uniform(), std::nullopt,
                        10000, 7);
  EXPECT_EQ(s.conclusive_rate, 1.0);
  EXPECT_EQ(s.conclusive_count, 10000u);
  EXPECT_NEAR(s.mean_conclusive_fidelity, 1.0, 1e-10);
  EXPECT_NEAR(s.x_used, 1.0, 1e-12);
}

TEST(RunTeleportation, generic_channel_within_binomial_bound) {
  Rng rng(70);
  InputState input = InputState::haar_random(rng);
  ChannelParams ch = generic_channel();
  constexpr std::uint64_t kTrials = 20000;
  RunStatistics s = run_teleportation(input, ch, std::nullopt, kTrials, 123);
  double p = s.exact_success_probability;
  EXPECT_LE(std::abs(s.conclusive_rate - p), 3 * std::sqrt(p * (1 - p) / kTrials));
  EXPECT_NEAR(s.mean_conclusive_fidelity, 1.0, 1e-10);
  EXPECT_GE(s.min_conclusive_fidelity, 1.0 - 1e-10);
}

TEST(RunTeleportation, same_seed_is_bit_identical) {
  InputState input(0.5, Complex(0.0, 0.5), 0.5, -0.5);
  RunStatistics a = run_teleportation(input, generic_channel(), 2.5, 3000, 42);
  RunStatistics b = run_teleportation(input, generic_channel(), 2.5, 3000, 42);
  EXPECT_EQ(a.conclusive_count, b.conclusive_count);
  EXPECT_EQ(std::memcmp(&a.mean_conclusive_fidelity, &b.mean_conclusive_fidelity, sizeof(double)),
            0);
  EXPECT_EQ(a.exact_success_probability, b.exact_success_probability);
  RunStatistics c = run_teleportation(input, generic_channel(), 2.5, 3000, 43);
  EXPECT_EQ(c.seed, 43u);
}

TEST(RunTeleportation, errors) {
  InputState input(0.5, 0.5, 0.5, 0.5);
  EXPECT_THROW(run_teleportation(input, generic_channel(), std::nullopt, 0, 1),
               std::invalid_argument);
  EXPECT_THROW(run_teleportation(input, generic_channel(), 1.0, 10, 1), PositivityError);
}
