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

#ifndef SIMONQP_CIRCUIT_HPP
#define SIMONQP_CIRCUIT_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "simonqp/gf2.hpp"
#include "simonqp/oracle.hpp"
#include "simonqp/qstate.hpp"

namespace simonqp {

namespace op {

struct Hadamard {
  std::size_t reg;
};

/// U_rho through a black box; counts one query per application.
struct OracleCall {
  BlackBox oracle;
  std::size_t source;
  std::size_t target;
};

/// U_f for an explicit table (no query accounting).
struct Function {
  std::vector<std::uint64_t> table;
  std::size_t source;
  std::size_t target;
};

struct PhasePredicate {
  BooleanPredicate chi;
  Amplitude phase;
};

struct PhaseZero {
  std::vector<std::size_t> registers;
  Amplitude phase;
};

struct Cnot {
  Qubit control;
  Qubit target;
};

struct CondXor {
  Qubit condition;
  GroupElement y;
  std::size_t target;
};

struct Measure {
  std::size_t reg;
};

}  // namespace op

using Operation = std::variant<op::Hadamard, op::OracleCall, op::Function, op::PhasePredicate, op::PhaseZero,
                               op::Cnot, op::CondXor, op::Measure>;

/// An ordered list of operations on a fixed register layout.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(RegisterLayout layout) : layout_(std::move(layout)) {}

  const RegisterLayout &layout() const { return layout_; }
  const std::vector<Operation> &operations() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

  Circuit &add(Operation op);
  Circuit &append(const Circuit &other);

  bool has_measurement() const;
  std::size_t oracle_calls() const;

  /// Applies every operation in order. Throws std::invalid_argument if the
  /// circuit measures; use the overload with an Rng for that.
  void run_in_place(SparseState &state) const;
  SparseState run(SparseState state) const;
  SparseState run(SparseState state, Rng &rng, std::vector<std::uint64_t> *outcomes = nullptr) const;
  /// run(init_zero(layout)).
  SparseState prepare(const StateConfig &config = {}) const;

  /// The reversed sequence of inverses. Throws std::invalid_argument if the
  /// circuit contains a measurement.
  Circuit inverse() const;

 private:
  RegisterLayout layout_;
  std::vector<Operation> ops_;
};

/// Q = G A with G = A S_0 A^-1 S_A: S_A multiplies by i where chi holds on
/// register 0, S_0 multiplies by i where every register is zero.
Circuit grover_iteration(const Circuit &a, const BooleanPredicate &chi);

}  // namespace simonqp

#endif  // SIMONQP_CIRCUIT_HPP
