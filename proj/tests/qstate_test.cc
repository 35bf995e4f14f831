// Copyright 2026 The simonqp Authors
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

#include "simonqp/qstate.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "dense_reference.hpp"
#include "random_ops.hpp"
#include "simonqp/errors.hpp"

using namespace simonqp;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

SparseState plus_state() {
  return walsh_hadamard(init_zero(RegisterLayout({1})), 0);
}

}  // namespace

TEST(InitZero, Examples) {
  const SparseState s = init_zero(RegisterLayout({2, 1}));
  EXPECT_EQ(s.dump(1), "(0,0): 1.0+0.0i\n");
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  EXPECT_EQ(s.support_size(), 1u);
}

TEST(Layout, Caps) {
  EXPECT_THROW(RegisterLayout({20, 21}), CapExceeded);
  EXPECT_THROW(RegisterLayout(std::vector<std::size_t>{}), std::invalid_argument);
  RegisterLayout l({3, 2, 1});
  EXPECT_EQ(l.offset(2), 5u);
  const std::vector<std::uint64_t> v{5, 2, 1};
  EXPECT_EQ(l.unpack(l.pack(v)), v);
}

TEST(WalshHadamard, Examples) {
  const SparseState s = plus_state();
  EXPECT_NEAR(std::abs(s.amplitude(0) - kR), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(1) - kR), 0.0, 1e-12);

  // |g> -> |phi_g G>, g = 101.
  const std::uint64_t gi = 0b101;
  SparseState t = SparseState::from_entries(RegisterLayout({3}),
                                            std::vector<std::pair<std::uint64_t, Amplitude>>{{gi, 1.0}});
  t = walsh_hadamard(t, 0);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const double sign = (std::popcount(x & gi) % 2) ? -1.0 : 1.0;
    EXPECT_NEAR(std::abs(t.amplitude(x) - sign / std::sqrt(8.0)), 0.0, 1e-12) << x;
  }
  const SparseState back = walsh_hadamard(t, 0);
  EXPECT_NEAR(std::abs(back.amplitude(gi) - 1.0), 0.0, 1e-9);
  EXPECT_EQ(back.support_size(), 1u);
}

TEST(ApplyFunction, Examples) {
  const RegisterLayout l({1, 1});
  SparseState s = SparseState::from_entries(l, std::vector<std::pair<std::uint64_t, Amplitude>>{{1, 1.0}});
  const std::vector<std::uint64_t> id{0, 1};
  s = apply_function(s, id, 0, 1);
  EXPECT_NEAR(std::abs(s.amplitude(std::vector<std::uint64_t>{1, 1}) - 1.0), 0.0, 1e-12);
  s = apply_function(s, id, 0, 1);
  EXPECT_NEAR(std::abs(s.amplitude(std::vector<std::uint64_t>{1, 0}) - 1.0), 0.0, 1e-12);

  const std::vector<std::uint64_t> too_wide{0, 2};
  EXPECT_THROW(apply_function(s, too_wide, 0, 1), std::out_of_range);
}

TEST(ApplyFunction, PromiseOracleOnTwoBits) {
  // rho on Z_2^2 hiding {00, 11}: rho(00) = rho(11) = 0, rho(10) = rho(01) = 1.
  const std::vector<std::uint64_t> rho{0, 1, 1, 0};
  SparseState s = walsh_hadamard(init_zero(RegisterLayout({2, 1})), 0);
  s = apply_function(s, rho, 0, 1);
  dense::State d({2, 1});
  d.hadamard(0);
  d.function(rho, 0, 1);
  EXPECT_LT(d.max_diff(s), 1e-12);
  EXPECT_EQ(s.support_size(), 4u);
  for (const auto &[label, a] : s.entries()) {
    EXPECT_EQ(s.layout().value(label, 1), rho[s.layout().value(label, 0)]);
  }
}

TEST(PhaseOnPredicate, Examples) {
  const SparseState s = plus_state();
  const SparseState unchanged = phase_on_predicate(s, BooleanPredicate::constant(false), kImag);
  EXPECT_EQ(unchanged.dump(), s.dump());

  const SparseState global = phase_on_predicate(s, BooleanPredicate::constant(true), kImag);
  EXPECT_NEAR(std::abs(global.amplitude(0) - kImag * kR), 0.0, 1e-12);
  EXPECT_EQ(global.distribution(0), s.distribution(0));

  const SparseState one = phase_on_predicate(s, BooleanPredicate::bit_is_set(0), kImag);
  EXPECT_NEAR(std::abs(one.amplitude(0) - kR), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(one.amplitude(1) - kImag * kR), 0.0, 1e-12);

  EXPECT_THROW(phase_on_predicate(s, BooleanPredicate::constant(true), 2.0), std::invalid_argument);
}

TEST(PhaseOnZero, Examples) {
  const std::vector<std::size_t> regs{0};
  const SparseState z = phase_on_zero(init_zero(RegisterLayout({1})), regs, kImag);
  EXPECT_NEAR(std::abs(z.amplitude(0) - kImag), 0.0, 1e-12);

  const SparseState one =
      SparseState::from_entries(RegisterLayout({1}), std::vector<std::pair<std::uint64_t, Amplitude>>{{1, 1.0}});
  EXPECT_EQ(phase_on_zero(one, regs, kImag).dump(), one.dump());

  const SparseState p = phase_on_zero(plus_state(), regs, kImag);
  EXPECT_NEAR(std::abs(p.amplitude(0) - kImag * kR), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(p.amplitude(1) - kR), 0.0, 1e-12);

  // Order 4.
  SparseState q = plus_state();
  for (int k = 0; k < 4; ++k) {
    q = phase_on_zero(q, regs, kImag);
  }
  EXPECT_LT(dense::State::from_sparse(plus_state()).max_diff(q), 1e-12);
}

TEST(ControlledNot, Examples) {
  const RegisterLayout l({2, 1});
  // Text "10" is g_1 = 1, index 1.
  const SparseState a = SparseState::from_entries(l, std::vector<std::pair<std::uint64_t, Amplitude>>{{1, 1.0}});
  const SparseState a2 = controlled_not(a, {0, 0}, {1, 0});
  EXPECT_NEAR(std::abs(a2.amplitude(std::vector<std::uint64_t>{1, 1}) - 1.0), 0.0, 1e-12);

  const SparseState b = SparseState::from_entries(l, std::vector<std::pair<std::uint64_t, Amplitude>>{{2, 1.0}});
  EXPECT_EQ(controlled_not(b, {0, 0}, {1, 0}).dump(), b.dump());

  EXPECT_EQ(controlled_not(a2, {0, 0}, {1, 0}).dump(), a.dump());
  EXPECT_THROW(controlled_not(a, {0, 1}, {0, 1}), std::invalid_argument);
}

TEST(ConditionalXor, Examples) {
  const RegisterLayout l({2, 1});
  const SparseState off = SparseState::from_entries(l, std::vector<std::pair<std::uint64_t, Amplitude>>{{3, 1.0}});
  EXPECT_EQ(conditional_xor(off, {1, 0}, GroupElement::from_string("10"), 0).dump(), off.dump());

  // |11>|1> with y = 10 -> |01>|1>.
  const SparseState on = SparseState::from_entries(
      l, std::vector<std::pair<std::uint64_t, Amplitude>>{{l.pack(std::vector<std::uint64_t>{3, 1}), 1.0}});
  const SparseState x = conditional_xor(on, {1, 0}, GroupElement::from_string("10"), 0);
  EXPECT_NEAR(std::abs(x.amplitude(std::vector<std::uint64_t>{2, 1}) - 1.0), 0.0, 1e-12);
  EXPECT_EQ(conditional_xor(x, {1, 0}, GroupElement::from_string("10"), 0).dump(), on.dump());
  EXPECT_THROW(conditional_xor(on, {1, 0}, GroupElement::from_string("101"), 0), std::invalid_argument);
}

TEST(Measure, Examples) {
  Rng rng(1);
  const SparseState det =
      SparseState::from_entries(RegisterLayout({2}), std::vector<std::pair<std::uint64_t, Amplitude>>{{2, 1.0}});
  for (int k = 0; k < 10; ++k) {
    EXPECT_EQ(measure(det, 0, rng).value, 2u);
  }

  // Simon's subroutine at n = 2 with H0 = {00, 11}: register 0 is uniform on {00, 11}.
  const std::vector<std::uint64_t> rho{0, 1, 1, 0};
  SparseState s = walsh_hadamard(init_zero(RegisterLayout({2, 1})), 0);
  s = apply_function(s, rho, 0, 1);
  s = walsh_hadamard(s, 0);
  EXPECT_EQ(support_values(s, 0), (std::set<std::uint64_t>{0, 3}));
  int zeros = 0;
  const int draws = 10000;
  for (int k = 0; k < draws; ++k) {
    const Measurement m = measure(s, 0, rng);
    ASSERT_TRUE(m.value == 0 || m.value == 3);
    zeros += m.value == 0;
    if (k < 10) {
      EXPECT_NEAR(m.state.norm_squared(), 1.0, 1e-9);
    }
  }
  EXPECT_NEAR(zeros / double(draws), 0.5, 0.02);
}

TEST(SupportValues, Examples) {
  EXPECT_EQ(support_values(init_zero(RegisterLayout({3})), 0).size(), 1u);
  EXPECT_EQ(support_values(walsh_hadamard(init_zero(RegisterLayout({2})), 0), 0).size(), 4u);
}

TEST(Dump, SortedLabels) {
  const SparseState s = walsh_hadamard(init_zero(RegisterLayout({1, 1})), 1);
  EXPECT_EQ(s.dump(3), "(0,0): 0.707+0.000i\n(0,1): 0.707+0.000i\n");
}

TEST(DenseReference, RandomOperationSequences) {
  Rng rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string failure = testing_support::random_sequence_check(rng, 6, 1e-10);
    ASSERT_TRUE(failure.empty()) << "trial " << trial << ": " << failure;
  }
}

TEST(SparseState, SupportCap) {
  StateConfig tight;
  tight.max_support = 4;
  const SparseState s = init_zero(RegisterLayout({4}), tight);
  EXPECT_THROW(walsh_hadamard(s, 0), CapExceeded);
}
