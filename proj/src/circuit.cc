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

#include "simonqp/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simonqp {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void apply_unitary(SparseState &state, const Operation &operation) {
  std::visit(Overloaded{
                 [&](const op::Hadamard &o) { state.apply_walsh_hadamard(o.reg); },
                 [&](const op::OracleCall &o) { o.oracle.apply(state, o.source, o.target); },
                 [&](const op::Function &o) { state.apply_function(o.table, o.source, o.target); },
                 [&](const op::PhasePredicate &o) { state.apply_phase_on_predicate(o.chi, o.phase); },
                 [&](const op::PhaseZero &o) { state.apply_phase_on_zero(o.registers, o.phase); },
                 [&](const op::Cnot &o) { state.apply_controlled_not(o.control, o.target); },
                 [&](const op::CondXor &o) { state.apply_conditional_xor(o.condition, o.y, o.target); },
                 [&](const op::Measure &) {
                   throw std::invalid_argument("circuit contains a measurement; run it with an Rng");
                 },
             },
             operation);
}

}  // namespace

Circuit &Circuit::add(Operation operation) {
  ops_.push_back(std::move(operation));
  return *this;
}

Circuit &Circuit::append(const Circuit &other) {
  if (!(other.layout_ == layout_)) {
    throw std::invalid_argument("cannot append a circuit over a different register layout");
  }
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

bool Circuit::has_measurement() const {
  return std::any_of(ops_.begin(), ops_.end(),
                     [](const Operation &o) { return std::holds_alternative<op::Measure>(o); });
}

std::size_t Circuit::oracle_calls() const {
  return std::count_if(ops_.begin(), ops_.end(),
                       [](const Operation &o) { return std::holds_alternative<op::OracleCall>(o); });
}

void Circuit::run_in_place(SparseState &state) const {
  if (!(state.layout() == layout_)) {
    throw std::invalid_argument("state layout does not match the circuit");
  }
  for (const auto &operation : ops_) {
    apply_unitary(state, operation);
  }
}

SparseState Circuit::run(SparseState state) const {
  run_in_place(state);
  return state;
}

SparseState Circuit::run(SparseState state, Rng &rng, std::vector<std::uint64_t> *outcomes) const {
  if (!(state.layout() == layout_)) {
    throw std::invalid_argument("state layout does not match the circuit");
  }
  for (const auto &operation : ops_) {
    if (const auto *m = std::get_if<op::Measure>(&operation)) {
      const std::uint64_t value = state.apply_measure(m->reg, rng);
      if (outcomes != nullptr) {
        outcomes->push_back(value);
      }
    } else {
      apply_unitary(state, operation);
    }
  }
  return state;
}

SparseState Circuit::prepare(const StateConfig &config) const { return run(init_zero(layout_, config)); }

Circuit Circuit::inverse() const {
  Circuit out(layout_);
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    Operation inv = *it;
    if (std::holds_alternative<op::Measure>(inv)) {
      throw std::invalid_argument("a circuit with a measurement has no inverse");
    }
    if (auto *p = std::get_if<op::PhasePredicate>(&inv)) {
      p->phase = std::conj(p->phase);
    } else if (auto *z = std::get_if<op::PhaseZero>(&inv)) {
      z->phase = std::conj(z->phase);
    }
    // The remaining operations are involutions.
    out.add(std::move(inv));
  }
  return out;
}

Circuit grover_iteration(const Circuit &a, const BooleanPredicate &chi) {
  if (a.has_measurement()) {
    throw std::invalid_argument("the state preparation of a Grover iteration must be measurement-free");
  }
  std::vector<std::size_t> all(a.layout().count());
  std::iota(all.begin(), all.end(), std::size_t{0});
  Circuit q(a.layout());
  q.append(a);
  q.add(op::PhasePredicate{chi, kImag});
  q.append(a.inverse());
  q.add(op::PhaseZero{all, kImag});
  q.append(a);
  return q;
}

}  // namespace simonqp
