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

#ifndef SIMONQP_QSTATE_HPP
#define SIMONQP_QSTATE_HPP

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "simonqp/gf2.hpp"

namespace simonqp {

using Amplitude = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr Amplitude kImag{0.0, 1.0};

/// The k-th seed of a family derived from a master seed (splitmix64 of
/// master + k), so parallel trials own independent, reproducible streams.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t k);

/// Tolerances and caps shared by every state operation.
struct StateConfig {
  /// Amplitudes with magnitude below this are dropped after each operation.
  double prune_threshold = 1e-12;
  /// Allowed deviation of the squared norm from 1.
  double norm_tolerance = 1e-9;
  /// Maximal total width of all registers, in bits.
  std::size_t max_total_width = 40;
  /// Maximal number of amplitude slots held at once.
  std::size_t max_support = std::size_t{1} << 26;
};

/// Bit widths of the registers of a multi-register system. Register 0 is the
/// group register; in a basis label its value occupies the lowest bits.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  explicit RegisterLayout(std::vector<std::size_t> widths, std::size_t max_total_width = 40);

  std::size_t count() const { return widths_.size(); }
  std::size_t width(std::size_t reg) const;
  std::size_t offset(std::size_t reg) const;
  std::size_t total_width() const { return total_; }
  /// Mask selecting register `reg` inside a packed label.
  std::uint64_t mask(std::size_t reg) const;
  const std::vector<std::size_t> &widths() const { return widths_; }

  std::uint64_t pack(std::span<const std::uint64_t> values) const;
  std::vector<std::uint64_t> unpack(std::uint64_t label) const;
  std::uint64_t value(std::uint64_t label, std::size_t reg) const {
    return (label & mask(reg)) >> offset(reg);
  }

  friend bool operator==(const RegisterLayout &, const RegisterLayout &) = default;

 private:
  std::vector<std::size_t> widths_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

/// A single qubit addressed as (register, bit index inside the register).
struct Qubit {
  std::size_t reg;
  std::size_t bit;
  friend bool operator==(const Qubit &, const Qubit &) = default;
};

/// A total Boolean function on the values of register 0.
class BooleanPredicate {
 public:
  BooleanPredicate() = default;
  explicit BooleanPredicate(std::function<bool(std::uint64_t)> fn) : fn_(std::move(fn)) {}

  static BooleanPredicate constant(bool value);
  /// chi_i(g) = g_i.
  static BooleanPredicate bit_is_set(std::size_t i);

  bool operator()(std::uint64_t x) const { return fn_(x); }

 private:
  std::function<bool(std::uint64_t)> fn_;
};

/// A normalized state over a RegisterLayout.
///
/// Storage is sparse over the labels of registers 1.. and dense over
/// register 0: every occupied "rest" label owns a slab of amplitudes indexed
/// by the register-0 columns that are nonzero somewhere in the state. Simon
/// type states keep register 0 near-uniformly occupied on a subgroup while
/// the output and ancilla registers are sparse, so this keeps the FWHT on
/// register 0 cache-local. Amplitudes below the pruning threshold are zeroed
/// and fully zero slabs are dropped; zero entries count as not stored.
class SparseState {
 public:
  using Slab = std::vector<Amplitude>;

  SparseState() = default;

  const RegisterLayout &layout() const { return layout_; }
  const StateConfig &config() const { return config_; }

  /// Amplitude of a packed label (zero if not stored).
  Amplitude amplitude(std::uint64_t label) const;
  Amplitude amplitude(std::span<const std::uint64_t> values) const {
    return amplitude(layout_.pack(values));
  }

  /// Nonzero entries sorted by packed label.
  std::vector<std::pair<std::uint64_t, Amplitude>> entries() const;
  std::size_t support_size() const;
  double norm_squared() const;

  /// "(r0,r1,...): re+im i" per nonzero label, sorted by label.
  std::string dump(int precision = 6) const;

  /// Builds a state from explicit (label, amplitude) pairs; the pairs must be
  /// normalized. Mostly useful for tests.
  static SparseState from_entries(const RegisterLayout &layout,
                                  std::span<const std::pair<std::uint64_t, Amplitude>> entries,
                                  const StateConfig &config = {});

  // In-place kernels. The free functions below are the public value API.
  void apply_walsh_hadamard(std::size_t reg);
  void apply_function(std::span<const std::uint64_t> table, std::size_t source, std::size_t target);
  void apply_phase_on_predicate(const BooleanPredicate &chi, Amplitude phase);
  void apply_phase_on_zero(std::span<const std::size_t> registers, Amplitude phase);
  void apply_controlled_not(Qubit control, Qubit target);
  void apply_conditional_xor(Qubit condition, const GroupElement &y, std::size_t target);
  std::uint64_t apply_measure(std::size_t reg, Rng &rng);
  /// Adds a register above the existing ones, holding 0 in every label.
  void append_register(std::size_t width);

  /// Register values whose total squared amplitude exceeds `threshold`.
  std::set<std::uint64_t> support_values(std::size_t reg, double threshold = 1e-12) const;
  /// Probability of every value of `reg` with nonzero weight.
  std::vector<std::pair<std::uint64_t, double>> distribution(std::size_t reg) const;

  friend SparseState init_zero(const RegisterLayout &layout, const StateConfig &config);

 private:
  std::size_t slab_size() const { return std::size_t{1} << std::popcount(active0_); }
  Slab &slab_for(std::unordered_map<std::uint64_t, Slab> &map, std::uint64_t rest);
  void move_slab(std::unordered_map<std::uint64_t, Slab> &map, std::uint64_t rest, Slab &&slab);
  /// Register-0 value of every slab index.
  std::vector<std::uint64_t> expansion() const;
  /// Re-indexes every slab over a new set of register-0 columns; entries
  /// outside the new set must be zero.
  void set_active(std::uint64_t mask);
  template <typename Relabel>
  void permute(Relabel relabel);
  /// label ^= flip on every label containing all bits of cond.
  void xor_where(std::uint64_t cond, std::uint64_t flip);
  void finish(const char *op);
  std::vector<std::uint64_t> sorted_rests() const;

  RegisterLayout layout_;
  StateConfig config_;
  /// Register-0 columns that may be nonzero; slabs are dense over these.
  std::uint64_t active0_ = 0;
  std::unordered_map<std::uint64_t, Slab> slabs_;
};

SparseState init_zero(const RegisterLayout &layout, const StateConfig &config = {});

/// Draws a value with probability proportional to its weight.
std::uint64_t sample_distribution(std::span<const std::pair<std::uint64_t, double>> dist, Rng &rng);

/// W_2 on every qubit of `reg`. Self-inverse.
SparseState walsh_hadamard(SparseState state, std::size_t reg);

/// U_f: |x>|y> -> |x>|y xor f(x)> where x is register `source` and y is
/// register `target`. `table[x]` is f(x); its size must be 2^width(source).
SparseState apply_function(SparseState state, std::span<const std::uint64_t> table, std::size_t source,
                           std::size_t target);

/// Multiplies by `phase` every label whose register-0 value satisfies chi.
SparseState phase_on_predicate(SparseState state, const BooleanPredicate &chi, Amplitude phase);

/// Multiplies by `phase` every label whose listed registers are all zero.
SparseState phase_on_zero(SparseState state, std::span<const std::size_t> registers, Amplitude phase);

SparseState controlled_not(SparseState state, Qubit control, Qubit target);

/// Where the condition qubit is 1, XORs y into register `target`.
SparseState conditional_xor(SparseState state, Qubit condition, const GroupElement &y, std::size_t target);

struct Measurement {
  std::uint64_t value;
  SparseState state;
};

/// Samples register `reg` and returns the collapsed, renormalized state.
Measurement measure(SparseState state, std::size_t reg, Rng &rng);

std::set<std::uint64_t> support_values(const SparseState &state, std::size_t reg);

}  // namespace simonqp

#endif  // SIMONQP_QSTATE_HPP
