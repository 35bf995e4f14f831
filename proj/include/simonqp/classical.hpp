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

#ifndef SIMONQP_CLASSICAL_HPP
#define SIMONQP_CLASSICAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "simonqp/oracle.hpp"
#include "simonqp/qstate.hpp"

namespace simonqp {

/// A query transcript: (x, rho(x)) pairs with distinct x.
using Transcript = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

/// What a nonadaptive classical algorithm decides after its queries.
struct AdversaryGuess {
  std::size_t queries_used = 0;
  bool collision_found = false;
  bool guess = false;
  Transcript transcript;
};

struct AdversaryOutcome {
  std::size_t queries_used = 0;
  bool collision_found = false;
  bool guess = false;
  bool correct = false;
};

/// Queries `budget` distinct uniformly random points. On a collision
/// rho(x_i) = rho(x_j) it outputs gamma(x_i xor x_j); otherwise the majority
/// value of gamma over S = {0,1}^n minus ({x_i xor x_j} and 0), ties to 0.
/// Throws std::invalid_argument if budget > 2^n.
AdversaryGuess guess_gamma_of_secret(const BlackBox &oracle, const BalancedFunction &gamma, std::size_t budget,
                                     Rng &rng);

/// guess_gamma_of_secret against an order-2 promise oracle, scored against
/// gamma(s) for its hidden s.
AdversaryOutcome collision_adversary(const PromiseOracle &oracle, const BalancedFunction &gamma, std::size_t budget,
                                     Rng &rng);

/// The candidate set S of a collision-free transcript: nonzero elements that
/// are not the xor of two queried points.
std::vector<std::uint64_t> compatible_secrets(std::size_t n, const Transcript &transcript);

/// Number of distinct values x_i xor x_j, i < j, of the queried points.
std::size_t distinct_differences(const Transcript &transcript);

/// Counts, by enumerating all (2^(n-1))! functions {0,1}^n -> {0,1}^(n-1)
/// fulfilling the promise for {0, s}, those that agree with the transcript.
/// Requires 2 <= n <= 4, a collision-free transcript and s in S; throws
/// std::invalid_argument otherwise.
std::uint64_t compatible_function_count(std::size_t n, const Transcript &transcript, std::uint64_t s);

/// Sum of compatible_function_count over all s in S.
std::uint64_t compatible_function_total(std::size_t n, const Transcript &transcript);

/// (2^n - m - 1) * (2^(n-1) - k)! with m = distinct_differences and k the
/// transcript length.
std::uint64_t compatible_function_closed_form(std::size_t n, const Transcript &transcript);

/// One promise function for {0, s} that agrees with the transcript: the
/// queried pairs keep their values and the remaining pairs take the unused
/// codomain values in increasing order.
PromiseOracle construct_compatible_function(std::size_t n, const Transcript &transcript, std::uint64_t s);

struct DefeatReport {
  std::size_t n = 0;
  std::size_t budget = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string gamma;
  std::size_t successes = 0;
  std::size_t collisions = 0;
  double success_rate = 0.0;
  double collision_rate = 0.0;
  /// 1/2 + 2 * 2^(-n/3).
  double bound = 0.0;
  /// 2^(-n/3).
  double collision_bound = 0.0;
  /// Binomial standard errors of the two estimates, evaluated at the bounds.
  double success_sigma = 0.0;
  double collision_sigma = 0.0;
  /// budget <= 2^(n/3).
  bool in_regime = false;
  /// success_rate <= bound + 3 sigma and collision_rate <= collision_bound +
  /// 3 sigma.
  bool within_bound = false;

  /// "PASS", "FAIL" or "OUT-OF-REGIME".
  std::string verdict() const;
};

/// Trial t draws a random order-2 promise oracle and runs the collision
/// adversary, all from the stream seeded by splitmix64(seed + t). The result
/// does not depend on `jobs`.
DefeatReport defeat_experiment(std::size_t n, std::size_t trials, std::size_t budget, const BalancedFunction &gamma,
                               std::uint64_t seed, std::size_t jobs = 1);

nlohmann::json to_json(const DefeatReport &report);

}  // namespace simonqp

#endif  // SIMONQP_CLASSICAL_HPP
