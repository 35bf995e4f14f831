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

#include "simonqp/abelian.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "simonqp/errors.hpp"
#include "simonqp/simon.hpp"

using namespace simonqp;

namespace {

using Complex = std::complex<double>;

/// exp(2 pi i sum g_j h_j / m_j), straight from the residues.
Complex naive_mu(const AbelianGroupSpec &group, std::uint64_t g, std::uint64_t h) {
  double turns = 0.0;
  const auto a = group.element(g).residues;
  const auto b = group.element(h).residues;
  for (std::size_t j = 0; j < group.rank(); ++j) {
    turns += static_cast<double>((a[j] * b[j]) % group.modulus(j)) / static_cast<double>(group.modulus(j));
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

/// H^perp by brute force over all of G.
std::set<std::uint64_t> naive_perp(const AbelianSubgroup &h) {
  std::set<std::uint64_t> out;
  const auto &group = h.group();
  for (std::uint64_t z = 0; z < group.order(); ++z) {
    bool ok = true;
    for (auto g : h.elements()) {
      ok = ok && std::abs(naive_mu(group, z, g) - 1.0) < 1e-9;
    }
    if (ok) {
      out.insert(z);
    }
  }
  return out;
}

std::set<std::uint64_t> as_set(const AbelianSubgroup &h) { return {h.elements().begin(), h.elements().end()}; }

Eigen::MatrixXcd naive_fourier(const AbelianGroupSpec &group) {
  const auto n = static_cast<Eigen::Index>(group.order());
  Eigen::MatrixXcd f(n, n);
  for (Eigen::Index g = 0; g < n; ++g) {
    for (Eigen::Index h = 0; h < n; ++h) {
      f(g, h) = naive_mu(group, g, h) / std::sqrt(static_cast<double>(n));
    }
  }
  return f;
}

AbelianElement e(std::vector<std::uint64_t> r) { return AbelianElement{std::move(r)}; }

}  // namespace

TEST(AbelianGroup, ParseAndIndex) {
  const AbelianGroupSpec g = AbelianGroupSpec::parse("4,3,2");
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(g.exponent(), 12u);
  EXPECT_EQ(g.rank(), 3u);
  EXPECT_EQ(g.index(e({1, 0, 0})), 1u);
  EXPECT_EQ(g.index(e({0, 1, 0})), 4u);
  for (std::uint64_t k = 0; k < g.order(); ++k) {
    EXPECT_EQ(g.index(g.element(k)), k);
    EXPECT_EQ(g.add(k, g.negate(k)), 0u);
  }
  EXPECT_EQ(g.add(e({3, 2, 1}), e({2, 2, 1})), e({1, 1, 0}));
  EXPECT_EQ(g.element(23).to_string(), "(3,2,1)");
  EXPECT_EQ(AbelianGroupSpec::parse("4,1").order(), 4u);
  EXPECT_THROW(AbelianGroupSpec::parse("4,0"), std::invalid_argument);
  EXPECT_THROW(AbelianGroupSpec::parse("x"), std::invalid_argument);
  EXPECT_THROW(AbelianGroupSpec({256, 512}), CapExceeded);
  EXPECT_THROW(g.check(e({4, 0, 0})), std::invalid_argument);
  EXPECT_THROW(fourier(AbelianGroupSpec({64, 128})), CapExceeded);
}

TEST(Mu, Examples) {
  const AbelianGroupSpec z4({4});
  EXPECT_NEAR(std::abs(mu(z4, e({1}), e({1})) - Complex(0, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(mu(z4, e({2}), e({2})) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(mu(z4, e({1}), e({2})) + 1.0), 0.0, 1e-12);
  EXPECT_EQ(mu(z4, e({1}), e({1})), Complex(0, 1));
  EXPECT_EQ(root_of_unity(2, 4), Complex(-1, 0));

  const AbelianGroupSpec mixed({4, 3, 2});
  for (std::uint64_t g = 0; g < mixed.order(); ++g) {
    for (std::uint64_t h = 0; h < mixed.order(); ++h) {
      EXPECT_NEAR(std::abs(mu(mixed, g, h) - naive_mu(mixed, g, h)), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(mu(mixed, g, h) - mu(mixed, h, g)), 0.0, 1e-12);
    }
  }
}

TEST(Mu, BinaryGroupIsParity) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const AbelianGroupSpec g(std::vector<std::uint64_t>(n, 2));
    for (std::uint64_t a = 0; a < g.order(); ++a) {
      for (std::uint64_t b = 0; b < g.order(); ++b) {
        EXPECT_EQ(mu(g, a, b), Complex(std::popcount(a & b) % 2 ? -1.0 : 1.0, 0.0));
      }
    }
  }
}

TEST(Orthogonal, Examples) {
  const AbelianGroupSpec z4({4});
  const AbelianSubgroup h = AbelianSubgroup::generated_by(z4, {e({2})});
  EXPECT_EQ(as_set(h), (std::set<std::uint64_t>{0, 2}));
  EXPECT_EQ(as_set(orthogonal_subgroup(h)), (std::set<std::uint64_t>{0, 2}));
  EXPECT_EQ(orthogonal_subgroup(AbelianSubgroup::trivial(z4)).order(), 4u);
}

TEST(Orthogonal, DualityOnRandomGroups) {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const AbelianGroupSpec group = random_abelian_group(rng, 256);
    const AbelianSubgroup h = random_abelian_subgroup(group, rng() % 3, rng);
    const AbelianSubgroup perp = orthogonal_subgroup(h);
    EXPECT_EQ(as_set(perp), naive_perp(h)) << group.to_string();
    EXPECT_EQ(h.order() * perp.order(), group.order());
    EXPECT_EQ(orthogonal_subgroup(perp), h);
  }
}

TEST(Fourier, WalshHadamardOnBinaryGroups) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const AbelianGroupSpec g(std::vector<std::uint64_t>(n, 2));
    const Eigen::MatrixXcd f = fourier(g);
    for (std::uint64_t a = 0; a < g.order(); ++a) {
      for (std::uint64_t b = 0; b < g.order(); ++b) {
        const double sign = std::popcount(a & b) % 2 ? -1.0 : 1.0;
        EXPECT_NEAR(std::abs(f(a, b) - sign / std::sqrt(double(g.order()))), 0.0, 1e-12);
      }
    }
  }
}

TEST(Fourier, MatchesDefinitionAndIsUnitary) {
  for (const char *spec : {"2", "3", "4", "6", "2,3", "4,2", "5,3,2", "12"}) {
    const AbelianGroupSpec g = AbelianGroupSpec::parse(spec);
    const Eigen::MatrixXcd f = fourier(g);
    EXPECT_LT((f - naive_fourier(g)).cwiseAbs().maxCoeff(), 1e-12) << spec;
    EXPECT_LT(unitarity_defect(f), 1e-9) << spec;
    Rng rng(2);
    Eigen::VectorXcd v = Eigen::VectorXcd::Random(static_cast<Eigen::Index>(g.order()));
    EXPECT_LT((apply_fourier(g, v) - f * v).cwiseAbs().maxCoeff(), 1e-10) << spec;
    EXPECT_LT((apply_fourier(g, v, true) - f.adjoint() * v).cwiseAbs().maxCoeff(), 1e-10) << spec;
  }
}

TEST(Fourier, SubgroupStateMapsToOrthogonal) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const AbelianGroupSpec group = random_abelian_group(rng, 256);
    const AbelianSubgroup h = random_abelian_subgroup(group, rng() % 3, rng);
    const Eigen::VectorXcd out = naive_fourier(group) * subgroup_state(h);
    EXPECT_LT((out - subgroup_state(orthogonal_subgroup(h))).cwiseAbs().maxCoeff(), 1e-9) << group.to_string();
  }
}

TEST(Operators, TranslateAndPhase) {
  const AbelianGroupSpec g({3, 2});
  EXPECT_LT((translate(g, e({0, 0})) - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-15);
  // tau_(1,0)|(2,1)> = |(0,1)>, index 3.
  Eigen::MatrixXcd tau = Eigen::MatrixXcd::Zero(6, 6);
  for (std::uint64_t k = 0; k < 6; ++k) {
    const auto r = g.element(k).residues;
    tau(static_cast<Eigen::Index>(g.index(e({(r[0] + 1) % 3, r[1]}))), static_cast<Eigen::Index>(k)) = 1.0;
  }
  EXPECT_LT((translate(g, e({1, 0})) - tau).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(translate(g, e({1, 0}))(3, 5), Complex(1.0, 0.0));
  const Eigen::MatrixXcd p = phase(g, e({1, 1}));
  for (std::uint64_t k = 0; k < 6; ++k) {
    EXPECT_NEAR(std::abs(p(k, k) - naive_mu(g, g.index(e({1, 1})), k)), 0.0, 1e-12);
  }
  EXPECT_LT(unitarity_defect(p), 1e-12);
}

TEST(Laws, SmallGroups) {
  for (const char *spec : {"2", "6", "2,3", "3", "4", "2,2,2", "4,2"}) {
    const LawCheck c = check_commutative_laws(AbelianGroupSpec::parse(spec));
    EXPECT_TRUE(c.passed) << spec << ": " << c.counterexample;
    EXPECT_LT(c.max_defect, 1e-9);
    EXPECT_EQ(c.pairs_checked, AbelianGroupSpec::parse(spec).order() * AbelianGroupSpec::parse(spec).order());
  }
  const LawCheck big = check_commutative_laws(AbelianGroupSpec::parse("10,10"));
  EXPECT_TRUE(big.passed);
  EXPECT_EQ(big.pairs_checked, 100u);
}

TEST(Laws, HandCheckedIdentity) {
  // F phi_h = tau_{-h} F on Z_6 with dense operators built here.
  const AbelianGroupSpec g({6});
  const Eigen::MatrixXcd f = naive_fourier(g);
  for (std::uint64_t h = 0; h < 6; ++h) {
    const Eigen::MatrixXcd lhs = f * phase(g, g.element(h));
    const Eigen::MatrixXcd rhs = translate(g, g.element(g.negate(h))) * f;
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(GeneralSubroutine, CyclicFour) {
  const AbelianGroupSpec z4({4});
  const AbelianSubgroup h = AbelianSubgroup::generated_by(z4, {e({2})});
  const AbelianOracle o(z4, {0, 1, 0, 1}, h);
  const GroupState s = general_subroutine(o);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  EXPECT_EQ(o.queries(), 1u);
  const auto dist = s.distribution();
  ASSERT_EQ(dist.size(), 2u);
  EXPECT_EQ(dist[0].first, 0u);
  EXPECT_EQ(dist[1].first, 2u);
  EXPECT_NEAR(dist[0].second, 0.5, 1e-12);
  EXPECT_NEAR(dist[1].second, 0.5, 1e-12);
}

TEST(GeneralSubroutine, WholeGroupGivesZero) {
  const AbelianGroupSpec g({3, 2});
  const AbelianOracle o(g, std::vector<std::uint64_t>(6, 7));
  const auto dist = general_subroutine(o).distribution();
  ASSERT_EQ(dist.size(), 1u);
  EXPECT_EQ(dist[0].first, 0u);
}

TEST(GeneralSubroutine, BinaryMatchesSimon) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const PromiseOracle p = random_promise_oracle(n, random_subgroup(n, rng() % (n + 1), rng), n, rng);
    const AbelianGroupSpec g(std::vector<std::uint64_t>(n, 2));
    const AbelianOracle o(g, std::vector<std::uint64_t>(p.table().begin(), p.table().end()));
    const auto dist = general_subroutine(o).distribution();
    const SparseState s = simon_subroutine(p.black_box());
    const auto expected = s.distribution(0);
    ASSERT_EQ(dist.size(), expected.size());
    for (std::size_t k = 0; k < dist.size(); ++k) {
      EXPECT_EQ(dist[k].first, expected[k].first);
      EXPECT_NEAR(dist[k].second, expected[k].second, 1e-10);
    }
  }
}

TEST(GeneralSubroutine, UniformOnOrthogonal) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const AbelianGroupSpec group = random_abelian_group(rng, 512);
    const AbelianSubgroup h = random_abelian_subgroup(group, 1 + rng() % 2, rng);
    const auto dist = general_subroutine(random_abelian_oracle(h, rng)).distribution();
    const auto perp = naive_perp(h);
    ASSERT_EQ(dist.size(), perp.size());
    for (const auto &[z, p] : dist) {
      EXPECT_TRUE(perp.contains(z));
      EXPECT_NEAR(p, 1.0 / perp.size(), 1e-10);
    }
  }
}

TEST(AbelianOracle, PromiseViolationThrows) {
  const AbelianGroupSpec z4({4});
  EXPECT_THROW(verify_abelian_promise(AbelianOracle(z4, {0, 0, 1, 2})), InvariantViolation);
  EXPECT_EQ(as_set(verify_abelian_promise(AbelianOracle(z4, {5, 6, 5, 6}))), (std::set<std::uint64_t>{0, 2}));
  EXPECT_THROW(AbelianOracle(z4, {0, 1}), std::invalid_argument);
}

TEST(ZqpAbelian, RandomInstances) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const AbelianGroupSpec group = random_abelian_group(rng, 1024);
    const AbelianSubgroup h = random_abelian_subgroup(group, rng() % 3, rng);
    const AbelianOracle o = random_abelian_oracle(h, rng);
    const AbelianSolveResult r = zqp_solve_abelian(o, rng);
    EXPECT_EQ(r.subgroup, h) << group.to_string();
    // Each sample cuts the index of span(Y) in H^perp by at least 2 with
    // probability >= 1/2; log2|G| + a margin covers the tail.
    EXPECT_LE(r.samples, 4 * (std::bit_width(group.order()) + 8));
    EXPECT_EQ(r.queries, o.queries());
  }
}

TEST(ZqpAbelian, CapExceeded) {
  Rng rng(7);
  const AbelianGroupSpec g({8, 8});
  const AbelianOracle o = random_abelian_oracle(AbelianSubgroup::trivial(g), rng);
  EXPECT_THROW(zqp_solve_abelian(o, rng, 1), CapExceeded);
}

TEST(DiscreteLog, Examples) {
  Rng rng(8);
  EXPECT_EQ(discrete_log(11, 2, 8, rng).r, 3u);
  EXPECT_EQ(discrete_log(7, 3, 1, rng).r, 0u);
  for (std::uint64_t a = 1; a < 13; ++a) {
    const DlogResult r = discrete_log(13, 2, a, rng);
    EXPECT_EQ(pow_mod(2, r.r, 13), a);
    EXPECT_LT(r.r, 12u);
  }
  EXPECT_THROW(discrete_log(11, 3, 5, rng), std::invalid_argument);
  EXPECT_THROW(discrete_log(12, 5, 5, rng), std::invalid_argument);
  EXPECT_THROW(discrete_log(11, 2, 0, rng), std::invalid_argument);
}

TEST(DiscreteLog, NumberTheoryHelpers) {
  EXPECT_TRUE(is_prime(61));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(57));
  EXPECT_EQ(pow_mod(3, 4, 7), 4u);
  EXPECT_TRUE(is_generator(3, 7));
  EXPECT_FALSE(is_generator(2, 7));
}
