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

#ifndef SIMONQP_ORACLE_HPP
#define SIMONQP_ORACLE_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "simonqp/gf2.hpp"
#include "simonqp/qstate.hpp"

namespace simonqp {

/// Oracles up to this dimension are stored as full tables; larger ones are
/// computed on demand from (seed, hidden subgroup).
inline constexpr std::size_t kMaxTabulatedDimension = 24;

namespace detail {
struct OracleData;
}

/// Evaluation-only access to an oracle. Solvers receive this handle; it does
/// not expose the hidden subgroup. Every classical evaluation and every
/// application of U_rho counts as one query. Copies share the counter.
class BlackBox {
 public:
  std::size_t n() const;
  std::size_t codomain_bits() const;

  std::uint64_t evaluate(std::uint64_t g) const;
  std::uint64_t evaluate(const GroupElement &g) const;

  /// U_rho on a simulated state: |x>|y> -> |x>|y xor rho(x)>.
  void apply(SparseState &state, std::size_t source, std::size_t target) const;

  std::uint64_t queries() const;

  /// U_rho without touching the counter, for simulators that reproduce a
  /// circuit's output through an equivalent shortcut; they record the
  /// circuit's own U_rho count with charge().
  void apply_uncounted(SparseState &state, std::size_t source, std::size_t target) const;
  void charge(std::uint64_t queries) const;

 private:
  friend class PromiseOracle;
  explicit BlackBox(std::shared_ptr<const detail::OracleData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::OracleData> data_;
};

/// A function rho on Z_2^n that is constant and distinct on the cosets of a
/// hidden subgroup H0. Codomain values are integers of `codomain_bits` bits.
class PromiseOracle {
 public:
  /// Wraps an explicit table and checks the promise against `hidden`.
  /// Throws InvariantViolation if the table breaks the promise.
  PromiseOracle(std::size_t n, std::size_t codomain_bits, std::vector<std::uint64_t> table, Gf2Basis hidden,
                std::uint64_t seed = 0);

  std::size_t n() const;
  std::size_t codomain_bits() const;
  const Gf2Basis &hidden_basis() const;
  std::uint64_t seed() const;
  bool tabulated() const;
  /// The full table; throws std::logic_error for lazily generated oracles.
  std::span<const std::uint64_t> table() const;

  /// rho(g) without touching the query counter (harness use only).
  std::uint64_t value(std::uint64_t g) const;

  BlackBox black_box() const { return BlackBox(data_); }
  std::uint64_t query_count() const;
  void reset_queries() const;

 private:
  friend PromiseOracle random_promise_oracle(std::size_t, const Gf2Basis &, std::size_t, std::uint64_t);
  explicit PromiseOracle(std::shared_ptr<detail::OracleData> data) : data_(std::move(data)) {}
  std::shared_ptr<detail::OracleData> data_;
};

/// Uniformly random injective assignment of codomain values to the cosets of
/// span(hidden). Throws std::invalid_argument if 2^codomain_bits is smaller
/// than the number of cosets.
PromiseOracle random_promise_oracle(std::size_t n, const Gf2Basis &hidden, std::size_t codomain_bits,
                                    std::uint64_t seed);
PromiseOracle random_promise_oracle(std::size_t n, const Gf2Basis &hidden, std::size_t codomain_bits, Rng &rng);

/// s uniform over the nonzero elements, then a uniformly random rho with
/// codomain {0,1}^(n-1) fulfilling the promise for {0, s}. Requires n >= 2.
PromiseOracle random_simon_instance(std::size_t n, Rng &rng);

/// A uniformly random bijection of Z_2^n (hidden subgroup {0}).
PromiseOracle random_bijection(std::size_t n, Rng &rng);

/// A uniformly random subgroup basis of the given rank.
Gf2Basis random_subgroup(std::size_t n, std::size_t rank, Rng &rng);

/// Checks rho(g) = rho(h) <=> g xor h in span(hidden): exhaustively for
/// n <= 12, by 1000 random pair samples otherwise. Returns false on failure.
bool verify_promise(const PromiseOracle &oracle, std::uint64_t sample_seed = 0);

nlohmann::json oracle_to_json(const PromiseOracle &oracle);
/// Parses the JSON oracle format and verifies the promise. Throws
/// std::invalid_argument on malformed input or a broken promise.
PromiseOracle oracle_from_json(const nlohmann::json &j);

/// A Boolean function that is balanced on {0,1}^n for every n >= 1.
class BalancedFunction {
 public:
  BalancedFunction(std::string name, std::function<bool(std::uint64_t, std::size_t)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  const std::string &name() const { return name_; }
  bool operator()(std::uint64_t x, std::size_t n) const { return fn_(x, n); }
  bool operator()(const GroupElement &x) const { return fn_(x.to_index(), x.size()); }

 private:
  std::string name_;
  std::function<bool(std::uint64_t, std::size_t)> fn_;
};

/// Parity of all bits.
BalancedFunction gamma_xor();
/// Component g_n (the most significant bit of the integer encoding).
BalancedFunction gamma_msb();
/// Component g_1 (the least significant bit of the integer encoding).
BalancedFunction gamma_lsb();
/// "parity", "msb" or "lsb"; throws std::invalid_argument otherwise.
BalancedFunction gamma_by_name(const std::string &name);

}  // namespace simonqp

#endif  // SIMONQP_ORACLE_HPP
