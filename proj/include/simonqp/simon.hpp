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

#ifndef SIMONQP_SIMON_HPP
#define SIMONQP_SIMON_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simonqp/circuit.hpp"
#include "simonqp/gf2.hpp"
#include "simonqp/oracle.hpp"
#include "simonqp/qstate.hpp"

namespace simonqp {

/// How the exact solvers simulate an amplification run Q_i = A' S_0 A'^-1
/// S_A A'.
enum class Simulation {
  /// Apply every gate of Q_i to the state; the oracle counts the three U_rho
  /// applications as they happen.
  kCircuit,
  /// Use A' S_0 A'^-1 = I + (i - 1)|A'0><A'0| with a cached A'|0>, extended
  /// by one shrink step per new element. The output distribution is the same;
  /// each run charges the three U_rho applications of Q_i.
  kReflection,
};

struct SolverOptions {
  StateConfig state;
  Simulation simulation = Simulation::kReflection;
  /// Inspect the full register-0 support after every amplification and throw
  /// InvariantViolation unless the outcome is certain.
  bool verify_exactness = true;
  /// Subroutine samples allowed before zqp_solve gives up with CapExceeded.
  std::size_t max_samples = 4096;
};

struct SolveResult {
  /// Basis of the hidden subgroup.
  Gf2Basis basis;
  /// Basis found for the orthogonal subgroup.
  Gf2Basis orthogonal;
  std::uint64_t rho_evaluations = 0;
  /// exact: calls of exact_new_element; exact-opt: amplification runs;
  /// zqp: subroutine samples.
  std::size_t iterations = 0;
  /// Amplification runs per index i (exact modes only).
  std::vector<std::size_t> q_runs;
};

/// Layout [n, codomain_bits] and the circuit W (reg 0), U_rho, W (reg 0).
Circuit simon_circuit(const BlackBox &oracle, const StateConfig &config = {});

/// The state after one run of Simon's subroutine (one query).
SparseState simon_subroutine(const BlackBox &oracle, const StateConfig &config = {});

/// One subroutine run followed by a measurement of register 0.
GroupElement sample_orthogonal(const BlackBox &oracle, Rng &rng, const StateConfig &config = {});

/// True iff rho is constant on span(Y)^perp, evaluated on 0 and a basis of
/// span(Y)^perp (rank + 1 queries).
bool stopping_test(const BlackBox &oracle, const Gf2Basis &y);

/// Las Vegas solver: sample until the stopping test passes.
SolveResult zqp_solve(const BlackBox &oracle, Rng &rng, const SolverOptions &options = {});

/// Ordered shrink steps. Every step's vector has a 1 in its own pivot column
/// and 0 in the pivot columns of all earlier steps, so applying the steps in
/// order keeps the precondition y in H of each single shrink.
class ShrinkPlan {
 public:
  struct Step {
    GroupElement y;
    std::size_t pivot;
  };

  explicit ShrinkPlan(std::size_t n) : n_(n) {}
  /// Builds the plan for the reduced echelon basis as is.
  static ShrinkPlan from_basis(const Gf2Basis &basis);

  /// Appends y (reduced against the plan first) with pivot `pivot`, or with
  /// its lowest 1-bit when pivot is kNoPivot. Earlier steps are left as they
  /// are. Throws std::invalid_argument if y is dependent or has a 0 in the
  /// requested pivot after reduction.
  static constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);
  void add(const GroupElement &y, std::size_t pivot = kNoPivot);

  std::size_t dimension() const { return n_; }
  std::size_t size() const { return steps_.size(); }
  const std::vector<Step> &steps() const { return steps_; }
  bool is_pivot(std::size_t column) const;
  GroupElement reduce(GroupElement g) const;
  Gf2Basis span() const;

 private:
  std::size_t n_;
  std::vector<Step> steps_;
};

/// CNOT from register-0 bit j to the ancilla, XOR y into register 0 where the
/// ancilla is 1, W on the ancilla: |phi_g H>|0> -> |phi_g K>|g . y> with
/// K = {h in H | h_j = 0}. The ancilla is a register of width 1. Throws
/// std::invalid_argument unless y_j = 1.
SparseState shrink_once(SparseState state, const GroupElement &y, std::size_t j, std::size_t ancilla_reg);

/// Shrinks by every element of `ys` in turn (reduced into a ShrinkPlan);
/// ancilla k is the width-1 register first_ancilla + k. Throws
/// std::invalid_argument if ys is dependent.
SparseState shrink_many(SparseState state, std::span<const GroupElement> ys, std::size_t first_ancilla);

/// The shrink circuit of a plan; ancilla k is register first_ancilla + k.
Circuit shrink_circuit(const RegisterLayout &layout, const ShrinkPlan &plan, std::size_t first_ancilla);

/// Layout [n, codomain_bits, 1, ..., 1] with one ancilla per plan step.
RegisterLayout reduced_layout(const BlackBox &oracle, const ShrinkPlan &plan, const StateConfig &config = {});

/// A': Simon's subroutine followed by the shrink circuit.
Circuit reduced_preparation(const BlackBox &oracle, const ShrinkPlan &plan, const StateConfig &config = {});

/// Outcome of one amplification run Q_i.
struct AmplifiedRun {
  GroupElement z;
  /// True iff some element of the shrunk subgroup has bit i set; then z has
  /// bit i set with certainty.
  bool bit_reachable = false;
};

/// Runs Q_i = G A' with chi_i(g) = g_i once and measures register 0, gate by
/// gate.
AmplifiedRun amplified_run(const BlackBox &oracle, const ShrinkPlan &plan, std::size_t i, Rng &rng,
                           const SolverOptions &options = {});

/// Repeated amplification runs on a growing shrink plan, simulated as
/// selected by options.simulation.
class AmplificationEngine {
 public:
  AmplificationEngine(BlackBox oracle, ShrinkPlan plan, SolverOptions options);

  const ShrinkPlan &plan() const { return plan_; }
  /// Appends a shrink step (see ShrinkPlan::add).
  void add(const GroupElement &y, std::size_t pivot = ShrinkPlan::kNoPivot);
  AmplifiedRun run(std::size_t i, Rng &rng);

 private:
  void refresh_marginal();

  BlackBox oracle_;
  ShrinkPlan plan_;
  SolverOptions options_;
  /// A'|0> and its register-0 distribution (reflection mode only).
  SparseState prepared_;
  std::vector<std::pair<std::uint64_t, double>> marginal_;
};

/// An element of H0^perp outside span(Y), or zero if Y spans H0^perp.
/// `q_runs`, if given, is incremented per amplification index.
GroupElement exact_new_element(const BlackBox &oracle, const Gf2Basis &y, Rng &rng,
                               const SolverOptions &options = {}, std::vector<std::size_t> *q_runs = nullptr);

/// Grows Y by exact_new_element until it returns zero.
SolveResult qp_solve(const BlackBox &oracle, Rng &rng, const SolverOptions &options = {});

/// Runs every Q_i at most once, ascending in i, pivoting on i after a hit.
SolveResult qp_solve_optimized(const BlackBox &oracle, Rng &rng, const SolverOptions &options = {});

enum class OracleKind { kBijection, kPromise };

std::string to_string(OracleKind kind);

/// kPromise iff the exact solver finds a nontrivial hidden subgroup.
OracleKind distinguish_bijection(const BlackBox &oracle, Rng &rng, const SolverOptions &options = {});

}  // namespace simonqp

#endif  // SIMONQP_SIMON_HPP
