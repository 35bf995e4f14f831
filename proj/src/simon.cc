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

#include "simonqp/simon.hpp"

#include <stdexcept>

#include "simonqp/errors.hpp"

namespace simonqp {

Circuit simon_circuit(const BlackBox &oracle, const StateConfig &config) {
  Circuit c(RegisterLayout({oracle.n(), oracle.codomain_bits()}, config.max_total_width));
  c.add(op::Hadamard{0});
  c.add(op::OracleCall{oracle, 0, 1});
  c.add(op::Hadamard{0});
  return c;
}

SparseState simon_subroutine(const BlackBox &oracle, const StateConfig &config) {
  return simon_circuit(oracle, config).prepare(config);
}

GroupElement sample_orthogonal(const BlackBox &oracle, Rng &rng, const StateConfig &config) {
  SparseState state = simon_subroutine(oracle, config);
  return GroupElement::from_index(oracle.n(), state.apply_measure(0, rng));
}

bool stopping_test(const BlackBox &oracle, const Gf2Basis &y) {
  if (y.dimension() != oracle.n()) {
    throw std::invalid_argument("Y has the wrong dimension");
  }
  const Gf2Basis perp = orthogonal_complement(y);
  const std::uint64_t base = oracle.evaluate(GroupElement::zero(oracle.n()));
  bool constant = true;
  for (const auto &b : perp.vectors()) {
    constant = (oracle.evaluate(b) == base) && constant;
  }
  return constant;
}

SolveResult zqp_solve(const BlackBox &oracle, Rng &rng, const SolverOptions &options) {
  const std::uint64_t start = oracle.queries();
  SolveResult result;
  Gf2Basis y(oracle.n());
  while (!stopping_test(oracle, y)) {
    if (result.iterations >= options.max_samples) {
      throw CapExceeded("zqp_solve: no stop after " + std::to_string(options.max_samples) + " samples");
    }
    y.insert(sample_orthogonal(oracle, rng, options.state));
    ++result.iterations;
  }
  result.orthogonal = y;
  result.basis = orthogonal_complement(y);
  result.rho_evaluations = oracle.queries() - start;
  return result;
}

// ---------------------------------------------------------------------------
// Shrinking

ShrinkPlan ShrinkPlan::from_basis(const Gf2Basis &basis) {
  ShrinkPlan plan(basis.dimension());
  for (const auto &v : basis.vectors()) {
    plan.steps_.push_back({v, v.lowest_set_bit()});
  }
  return plan;
}

void ShrinkPlan::add(const GroupElement &y, std::size_t pivot) {
  if (y.size() != n_) {
    throw std::invalid_argument("shrink vector has the wrong dimension");
  }
  GroupElement r = reduce(y);
  if (r.is_zero()) {
    throw std::invalid_argument("shrink vectors are linearly dependent");
  }
  if (pivot == kNoPivot) {
    pivot = r.lowest_set_bit();
  } else if (pivot >= n_ || !r.bit(pivot)) {
    throw std::invalid_argument("requested pivot " + std::to_string(pivot) + " is not set in the reduced vector");
  }
  steps_.push_back({std::move(r), pivot});
}

bool ShrinkPlan::is_pivot(std::size_t column) const {
  for (const auto &step : steps_) {
    if (step.pivot == column) {
      return true;
    }
  }
  return false;
}

GroupElement ShrinkPlan::reduce(GroupElement g) const {
  for (const auto &step : steps_) {
    if (g.bit(step.pivot)) {
      g ^= step.y;
    }
  }
  return g;
}

Gf2Basis ShrinkPlan::span() const {
  std::vector<GroupElement> ys;
  for (const auto &step : steps_) {
    ys.push_back(step.y);
  }
  return extract_basis(n_, ys);
}

namespace {

void check_shrink_args(const RegisterLayout &layout, const GroupElement &y, std::size_t j, std::size_t ancilla_reg) {
  if (y.size() != layout.width(0)) {
    throw std::invalid_argument("shrink vector has the wrong dimension");
  }
  if (j >= y.size() || !y.bit(j)) {
    throw std::invalid_argument("shrink pivot " + std::to_string(j) + " is not a 1-bit of y");
  }
  if (ancilla_reg == 0 || layout.width(ancilla_reg) != 1) {
    throw std::invalid_argument("the shrink ancilla must be a register of width 1");
  }
}

void add_shrink(Circuit &c, const GroupElement &y, std::size_t j, std::size_t ancilla_reg) {
  check_shrink_args(c.layout(), y, j, ancilla_reg);
  c.add(op::Cnot{Qubit{0, j}, Qubit{ancilla_reg, 0}});
  c.add(op::CondXor{Qubit{ancilla_reg, 0}, y, 0});
  c.add(op::Hadamard{ancilla_reg});
}

}  // namespace

SparseState shrink_once(SparseState state, const GroupElement &y, std::size_t j, std::size_t ancilla_reg) {
  Circuit c(state.layout());
  add_shrink(c, y, j, ancilla_reg);
  c.run_in_place(state);
  return state;
}

Circuit shrink_circuit(const RegisterLayout &layout, const ShrinkPlan &plan, std::size_t first_ancilla) {
  Circuit c(layout);
  for (std::size_t k = 0; k < plan.size(); ++k) {
    add_shrink(c, plan.steps()[k].y, plan.steps()[k].pivot, first_ancilla + k);
  }
  return c;
}

SparseState shrink_many(SparseState state, std::span<const GroupElement> ys, std::size_t first_ancilla) {
  ShrinkPlan plan(state.layout().width(0));
  for (const auto &y : ys) {
    plan.add(y);
  }
  shrink_circuit(state.layout(), plan, first_ancilla).run_in_place(state);
  return state;
}

RegisterLayout reduced_layout(const BlackBox &oracle, const ShrinkPlan &plan, const StateConfig &config) {
  if (plan.dimension() != oracle.n()) {
    throw std::invalid_argument("shrink plan dimension does not match the oracle");
  }
  std::vector<std::size_t> widths{oracle.n(), oracle.codomain_bits()};
  widths.resize(2 + plan.size(), 1);
  return RegisterLayout(std::move(widths), config.max_total_width);
}

Circuit reduced_preparation(const BlackBox &oracle, const ShrinkPlan &plan, const StateConfig &config) {
  const RegisterLayout layout = reduced_layout(oracle, plan, config);
  Circuit c(layout);
  c.add(op::Hadamard{0});
  c.add(op::OracleCall{oracle, 0, 1});
  c.add(op::Hadamard{0});
  c.append(shrink_circuit(layout, plan, 2));
  return c;
}

// ---------------------------------------------------------------------------
// Exact amplification

namespace {

void check_exact(const std::vector<std::pair<std::uint64_t, double>> &dist, std::size_t i, AmplifiedRun &run) {
  bool with_bit = false;
  bool without_bit = false;
  for (const auto &[v, p] : dist) {
    if (p > 1e-12) {
      ((v >> i) & 1 ? with_bit : without_bit) = true;
    }
  }
  if (with_bit && without_bit) {
    throw InvariantViolation("amplification for index " + std::to_string(i + 1) + " left bit " +
                             std::to_string(i + 1) + " undecided");
  }
  run.bit_reachable = with_bit;
}

void check_in_kernel(const ShrinkPlan &plan, const GroupElement &z) {
  for (const auto &step : plan.steps()) {
    if (z.bit(step.pivot)) {
      throw InvariantViolation("measured element " + z.to_string() + " is not in the shrunk subgroup");
    }
  }
}

}  // namespace

AmplifiedRun amplified_run(const BlackBox &oracle, const ShrinkPlan &plan, std::size_t i, Rng &rng,
                           const SolverOptions &options) {
  const std::size_t n = oracle.n();
  if (i >= n) {
    throw std::out_of_range("amplification index outside the group register");
  }
  const Circuit a = reduced_preparation(oracle, plan, options.state);
  const Circuit q = grover_iteration(a, BooleanPredicate::bit_is_set(i));
  SparseState state = q.prepare(options.state);

  AmplifiedRun run;
  if (options.verify_exactness) {
    check_exact(state.distribution(0), i, run);
  }
  run.z = GroupElement::from_index(n, state.apply_measure(0, rng));
  if (!options.verify_exactness) {
    run.bit_reachable = run.z.bit(i);
  }
  check_in_kernel(plan, run.z);
  return run;
}

AmplificationEngine::AmplificationEngine(BlackBox oracle, ShrinkPlan plan, SolverOptions options)
    : oracle_(std::move(oracle)), plan_(std::move(plan)), options_(std::move(options)) {
  if (plan_.dimension() != oracle_.n()) {
    throw std::invalid_argument("shrink plan dimension does not match the oracle");
  }
  if (options_.simulation == Simulation::kReflection) {
    const RegisterLayout layout = reduced_layout(oracle_, plan_, options_.state);
    prepared_ = init_zero(layout, options_.state);
    prepared_.apply_walsh_hadamard(0);
    oracle_.apply_uncounted(prepared_, 0, 1);
    prepared_.apply_walsh_hadamard(0);
    shrink_circuit(layout, plan_, 2).run_in_place(prepared_);
    refresh_marginal();
  }
}

void AmplificationEngine::add(const GroupElement &y, std::size_t pivot) {
  plan_.add(y, pivot);
  if (options_.simulation == Simulation::kReflection) {
    prepared_.append_register(1);
    const auto &step = plan_.steps().back();
    prepared_ = shrink_once(std::move(prepared_), step.y, step.pivot, prepared_.layout().count() - 1);
    refresh_marginal();
  }
}

void AmplificationEngine::refresh_marginal() { marginal_ = prepared_.distribution(0); }

AmplifiedRun AmplificationEngine::run(std::size_t i, Rng &rng) {
  const std::size_t n = oracle_.n();
  if (options_.simulation == Simulation::kCircuit) {
    return amplified_run(oracle_, plan_, i, rng, options_);
  }
  if (i >= n) {
    throw std::out_of_range("amplification index outside the group register");
  }
  // With phi = A'|0>, the output is S_A phi + (i - 1)<phi|S_A phi> phi, so
  // every amplitude is phi times c1 (bit i set) or c0 (bit i clear).
  double a = 0.0;
  for (const auto &[x, p] : marginal_) {
    if ((x >> i) & 1) {
      a += p;
    }
  }
  const Amplitude kappa = (kImag - 1.0) * Amplitude(1.0 - a, a);
  const double w1 = std::norm(kImag + kappa);
  const double w0 = std::norm(1.0 + kappa);
  std::vector<std::pair<std::uint64_t, double>> dist;
  dist.reserve(marginal_.size());
  for (const auto &[x, p] : marginal_) {
    dist.emplace_back(x, p * ((x >> i) & 1 ? w1 : w0));
  }
  oracle_.charge(3);

  AmplifiedRun run;
  if (options_.verify_exactness) {
    check_exact(dist, i, run);
  }
  run.z = GroupElement::from_index(n, sample_distribution(dist, rng));
  if (!options_.verify_exactness) {
    run.bit_reachable = run.z.bit(i);
  }
  check_in_kernel(plan_, run.z);
  return run;
}

GroupElement exact_new_element(const BlackBox &oracle, const Gf2Basis &y, Rng &rng, const SolverOptions &options,
                               std::vector<std::size_t> *q_runs) {
  const std::size_t n = oracle.n();
  if (y.dimension() != n) {
    throw std::invalid_argument("Y has the wrong dimension");
  }
  AmplificationEngine engine(oracle, ShrinkPlan::from_basis(y), options);
  for (std::size_t i = 0; i < n; ++i) {
    AmplifiedRun run = engine.run(i, rng);
    if (q_runs != nullptr) {
      ++(*q_runs)[i];
    }
    if (!run.z.is_zero()) {
      return run.z;
    }
  }
  return GroupElement::zero(n);
}

SolveResult qp_solve(const BlackBox &oracle, Rng &rng, const SolverOptions &options) {
  const std::size_t n = oracle.n();
  const std::uint64_t start = oracle.queries();
  SolveResult result;
  result.q_runs.assign(n, 0);
  Gf2Basis y(n);
  // One engine carries the prepared state across rounds; each round is the
  // full sweep of exact_new_element for the current Y.
  AmplificationEngine engine(oracle, ShrinkPlan(n), options);
  for (;;) {
    if (result.iterations > n) {
      throw InvariantViolation("more than n+1 rounds of exact_new_element");
    }
    ++result.iterations;
    GroupElement z = GroupElement::zero(n);
    for (std::size_t i = 0; i < n && z.is_zero(); ++i) {
      z = engine.run(i, rng).z;
      ++result.q_runs[i];
    }
    if (z.is_zero()) {
      break;
    }
    if (!y.insert(z)) {
      throw InvariantViolation("exact_new_element returned " + z.to_string() + ", already in span(Y)");
    }
    engine.add(z);
  }
  result.orthogonal = y;
  result.basis = orthogonal_complement(y);
  result.rho_evaluations = oracle.queries() - start;
  return result;
}

SolveResult qp_solve_optimized(const BlackBox &oracle, Rng &rng, const SolverOptions &options) {
  const std::size_t n = oracle.n();
  const std::uint64_t start = oracle.queries();
  SolveResult result;
  result.q_runs.assign(n, 0);
  AmplificationEngine engine(oracle, ShrinkPlan(n), options);
  std::vector<bool> retired(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (retired[i]) {
      continue;
    }
    AmplifiedRun run = engine.run(i, rng);
    ++result.q_runs[i];
    ++result.iterations;
    retired[i] = true;
    if (run.z.is_zero()) {
      continue;
    }
    // When bit i is unreachable the sample is still a fresh element of the
    // shrunk subgroup; it then pivots on its lowest 1-bit.
    const std::size_t pivot = run.z.bit(i) ? i : run.z.lowest_set_bit();
    engine.add(run.z, pivot);
    retired[pivot] = true;
  }
  result.orthogonal = engine.plan().span();
  result.basis = orthogonal_complement(result.orthogonal);
  result.rho_evaluations = oracle.queries() - start;
  return result;
}

std::string to_string(OracleKind kind) { return kind == OracleKind::kBijection ? "bijection" : "promise"; }

OracleKind distinguish_bijection(const BlackBox &oracle, Rng &rng, const SolverOptions &options) {
  return qp_solve(oracle, rng, options).basis.empty() ? OracleKind::kBijection : OracleKind::kPromise;
}

}  // namespace simonqp
