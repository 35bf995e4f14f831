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

#include "simonqp/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "simonqp/errors.hpp"

namespace simonqp {

namespace {

std::vector<std::uint64_t> distinct_points(std::size_t n, std::size_t k, Rng &rng) {
  const std::uint64_t domain = std::uint64_t{1} << n;
  std::vector<std::uint64_t> out;
  out.reserve(k);
  if (2 * k > domain) {
    std::vector<std::uint64_t> all(domain);
    std::iota(all.begin(), all.end(), std::uint64_t{0});
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::uint64_t> pick(i, domain - 1);
      std::swap(all[i], all[pick(rng)]);
      out.push_back(all[i]);
    }
    return out;
  }
  std::unordered_set<std::uint64_t> seen;
  std::uniform_int_distribution<std::uint64_t> pick(0, domain - 1);
  while (out.size() < k) {
    const std::uint64_t x = pick(rng);
    if (seen.insert(x).second) {
      out.push_back(x);
    }
  }
  return out;
}

std::unordered_set<std::uint64_t> differences(const Transcript &transcript) {
  std::unordered_set<std::uint64_t> w;
  for (std::size_t i = 0; i < transcript.size(); ++i) {
    for (std::size_t j = i + 1; j < transcript.size(); ++j) {
      w.insert(transcript[i].first ^ transcript[j].first);
    }
  }
  return w;
}

void check_transcript(std::size_t n, const Transcript &transcript) {
  std::unordered_set<std::uint64_t> xs;
  std::unordered_set<std::uint64_t> ys;
  for (const auto &[x, y] : transcript) {
    if ((x >> n) != 0) {
      throw std::invalid_argument("queried point outside {0,1}^n");
    }
    if (!xs.insert(x).second) {
      throw std::invalid_argument("transcript repeats a query point");
    }
    if (!ys.insert(y).second) {
      throw std::invalid_argument("transcript contains a collision");
    }
  }
}

void check_secret(std::size_t n, const Transcript &transcript, std::uint64_t s) {
  if (s == 0 || (s >> n) != 0 || differences(transcript).contains(s)) {
    throw std::invalid_argument("secret " + GroupElement::from_index(n, s).to_string() +
                                " is not compatible with the transcript");
  }
}

std::uint64_t factorial(std::uint64_t m) {
  if (m > 20) {
    throw std::overflow_error("factorial exceeds 64 bits");
  }
  std::uint64_t out = 1;
  for (std::uint64_t k = 2; k <= m; ++k) {
    out *= k;
  }
  return out;
}

}  // namespace

AdversaryGuess guess_gamma_of_secret(const BlackBox &oracle, const BalancedFunction &gamma, std::size_t budget,
                                     Rng &rng) {
  const std::size_t n = oracle.n();
  if (n >= 63 || budget > (std::uint64_t{1} << n)) {
    throw std::invalid_argument("query budget exceeds 2^n");
  }
  AdversaryGuess out;
  std::unordered_map<std::uint64_t, std::uint64_t> seen_value;
  for (std::uint64_t x : distinct_points(n, budget, rng)) {
    const std::uint64_t y = oracle.evaluate(x);
    ++out.queries_used;
    out.transcript.emplace_back(x, y);
    auto [it, inserted] = seen_value.emplace(y, x);
    if (!inserted && !out.collision_found) {
      out.collision_found = true;
      out.guess = gamma(it->second ^ x, n);
    }
  }
  if (out.collision_found) {
    return out;
  }
  // |A| counts s in S with gamma(s) = 1; S is everything except 0 and W.
  const auto w = differences(out.transcript);
  std::uint64_t ones = (std::uint64_t{1} << (n - 1)) - (gamma(0, n) ? 1 : 0);
  for (auto d : w) {
    if (gamma(d, n)) {
      --ones;
    }
  }
  const std::uint64_t size_s = (std::uint64_t{1} << n) - 1 - w.size();
  out.guess = ones > size_s - ones;
  return out;
}

AdversaryOutcome collision_adversary(const PromiseOracle &oracle, const BalancedFunction &gamma, std::size_t budget,
                                     Rng &rng) {
  if (oracle.hidden_basis().rank() != 1) {
    throw std::invalid_argument("the collision adversary needs a hidden subgroup of order 2");
  }
  const AdversaryGuess g = guess_gamma_of_secret(oracle.black_box(), gamma, budget, rng);
  const GroupElement &s = oracle.hidden_basis().vectors().front();
  AdversaryOutcome out;
  out.queries_used = g.queries_used;
  out.collision_found = g.collision_found;
  out.guess = g.guess;
  out.correct = g.guess == gamma(s);
  if (out.collision_found && !out.correct) {
    throw InvariantViolation("a collision revealed s but the guess is wrong");
  }
  return out;
}

std::size_t distinct_differences(const Transcript &transcript) { return differences(transcript).size(); }

std::vector<std::uint64_t> compatible_secrets(std::size_t n, const Transcript &transcript) {
  check_transcript(n, transcript);
  const auto w = differences(transcript);
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (!w.contains(s)) {
      out.push_back(s);
    }
  }
  return out;
}

std::uint64_t compatible_function_count(std::size_t n, const Transcript &transcript, std::uint64_t s) {
  if (n < 2 || n > 4) {
    throw std::invalid_argument("compatible_function_count enumerates only 2 <= n <= 4");
  }
  check_transcript(n, transcript);
  check_secret(n, transcript, s);
  // Pair representatives min(x, x ^ s), in increasing order, get the values
  // perm[0], perm[1], ...
  const std::uint64_t domain = std::uint64_t{1} << n;
  std::vector<std::size_t> pair_of(domain);
  std::size_t pairs = 0;
  for (std::uint64_t x = 0; x < domain; ++x) {
    if (x < (x ^ s)) {
      pair_of[x] = pair_of[x ^ s] = pairs++;
    }
  }
  std::vector<std::uint64_t> perm(pairs);
  std::iota(perm.begin(), perm.end(), std::uint64_t{0});
  std::uint64_t count = 0;
  do {
    bool agrees = true;
    for (const auto &[x, y] : transcript) {
      if (perm[pair_of[x]] != y) {
        agrees = false;
        break;
      }
    }
    count += agrees ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::uint64_t compatible_function_total(std::size_t n, const Transcript &transcript) {
  std::uint64_t total = 0;
  for (auto s : compatible_secrets(n, transcript)) {
    total += compatible_function_count(n, transcript, s);
  }
  return total;
}

std::uint64_t compatible_function_closed_form(std::size_t n, const Transcript &transcript) {
  check_transcript(n, transcript);
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  if (transcript.size() > half) {
    return 0;
  }
  const std::uint64_t m = distinct_differences(transcript);
  return ((std::uint64_t{1} << n) - m - 1) * factorial(half - transcript.size());
}

PromiseOracle construct_compatible_function(std::size_t n, const Transcript &transcript, std::uint64_t s) {
  if (n < 2 || n > kMaxTabulatedDimension) {
    throw std::invalid_argument("construct_compatible_function needs 2 <= n <= 24");
  }
  check_transcript(n, transcript);
  check_secret(n, transcript, s);
  const std::uint64_t domain = std::uint64_t{1} << n;
  const std::uint64_t half = domain >> 1;
  std::vector<std::uint64_t> table(domain, ~std::uint64_t{0});
  std::vector<bool> used(half, false);
  for (const auto &[x, y] : transcript) {
    if (y >= half) {
      throw std::invalid_argument("transcript value outside {0,1}^(n-1)");
    }
    table[x] = table[x ^ s] = y;
    used[y] = true;
  }
  std::uint64_t next = 0;
  for (std::uint64_t x = 0; x < domain; ++x) {
    if (table[x] != ~std::uint64_t{0}) {
      continue;
    }
    while (used[next]) {
      ++next;
    }
    used[next] = true;
    table[x] = table[x ^ s] = next;
  }
  Gf2Basis hidden(n);
  hidden.insert(GroupElement::from_index(n, s));
  return PromiseOracle(n, n - 1, std::move(table), std::move(hidden));
}

// ---------------------------------------------------------------------------
// Defeat experiment

std::string DefeatReport::verdict() const {
  if (!in_regime) {
    return "OUT-OF-REGIME";
  }
  return within_bound ? "PASS" : "FAIL";
}

DefeatReport defeat_experiment(std::size_t n, std::size_t trials, std::size_t budget, const BalancedFunction &gamma,
                               std::uint64_t seed, std::size_t jobs) {
  if (n < 2 || n > kMaxTabulatedDimension) {
    throw std::invalid_argument("defeat_experiment needs 2 <= n <= 24");
  }
  if (budget > (std::uint64_t{1} << n)) {
    throw std::invalid_argument("query budget exceeds 2^n");
  }
  if (trials == 0) {
    throw std::invalid_argument("at least one trial is required");
  }
  jobs = std::max<std::size_t>(1, std::min(jobs, trials));
  std::vector<AdversaryOutcome> outcomes(trials);
  auto work = [&](std::size_t first) {
    for (std::size_t t = first; t < trials; t += jobs) {
      Rng rng(stream_seed(seed, t));
      const PromiseOracle oracle = random_simon_instance(n, rng);
      outcomes[t] = collision_adversary(oracle, gamma, budget, rng);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (std::size_t j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        try {
          work(j);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto &th : pool) {
      th.join();
    }
    for (auto &e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

  DefeatReport r;
  r.n = n;
  r.budget = budget;
  r.trials = trials;
  r.seed = seed;
  r.gamma = gamma.name();
  for (const auto &o : outcomes) {
    r.successes += o.correct ? 1 : 0;
    r.collisions += o.collision_found ? 1 : 0;
  }
  const double t = static_cast<double>(trials);
  r.success_rate = static_cast<double>(r.successes) / t;
  r.collision_rate = static_cast<double>(r.collisions) / t;
  r.collision_bound = std::pow(2.0, -static_cast<double>(n) / 3.0);
  r.bound = 0.5 + 2.0 * r.collision_bound;
  r.success_sigma = std::sqrt(std::min(r.bound, 1.0) * (1.0 - std::min(r.bound, 1.0)) / t);
  r.collision_sigma = std::sqrt(r.collision_bound * (1.0 - r.collision_bound) / t);
  r.in_regime = static_cast<double>(budget) <= std::pow(2.0, static_cast<double>(n) / 3.0) + 1e-9;
  r.within_bound = r.success_rate <= r.bound + 3.0 * r.success_sigma &&
                   r.collision_rate <= r.collision_bound + 3.0 * r.collision_sigma;
  return r;
}

nlohmann::json to_json(const DefeatReport &r) {
  return nlohmann::json{
      {"n", r.n},
      {"budget", r.budget},
      {"trials", r.trials},
      {"gamma", r.gamma},
      {"success_rate", r.success_rate},
      {"collision_rate", r.collision_rate},
      {"bound", r.bound},
      {"collision_bound", r.collision_bound},
      {"success_sigma", r.success_sigma},
      {"collision_sigma", r.collision_sigma},
      {"in_regime", r.in_regime},
      {"verdict", r.verdict()},
      {"seed", r.seed},
  };
}

}  // namespace simonqp
