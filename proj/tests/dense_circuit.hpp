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

// Dense interpretation of circuits, and the amplification identity
// Q|0> = k|A> + l|B> checked on the dense reference.

#ifndef SIMONQP_TESTS_DENSE_CIRCUIT_HPP
#define SIMONQP_TESTS_DENSE_CIRCUIT_HPP

#include <algorithm>
#include <stdexcept>
#include <variant>

#include "dense_reference.hpp"
#include "simonqp/circuit.hpp"

namespace dense {

inline void apply_op(State &d, const simonqp::Operation &op, bool inverse) {
  namespace sop = simonqp::op;
  if (const auto *h = std::get_if<sop::Hadamard>(&op)) {
    d.hadamard(h->reg);
  } else if (const auto *o = std::get_if<sop::OracleCall>(&op)) {
    std::vector<std::uint64_t> table(std::size_t{1} << o->oracle.n());
    for (std::uint64_t x = 0; x < table.size(); ++x) {
      table[x] = o->oracle.evaluate(x);
    }
    d.function(table, o->source, o->target);
  } else if (const auto *f = std::get_if<sop::Function>(&op)) {
    d.function(f->table, f->source, f->target);
  } else if (const auto *p = std::get_if<sop::PhasePredicate>(&op)) {
    const auto chi = p->chi;
    d.phase_predicate([&](std::uint64_t x) { return chi(x); }, inverse ? std::conj(p->phase) : p->phase);
  } else if (const auto *z = std::get_if<sop::PhaseZero>(&op)) {
    d.phase_zero(z->registers, inverse ? std::conj(z->phase) : z->phase);
  } else if (const auto *c = std::get_if<sop::Cnot>(&op)) {
    d.cnot(c->control.reg, c->control.bit, c->target.reg, c->target.bit);
  } else if (const auto *x = std::get_if<sop::CondXor>(&op)) {
    d.cond_xor(x->condition.reg, x->condition.bit, x->y.to_index(), x->target);
  } else {
    throw std::invalid_argument("dense interpreter: measurement");
  }
}

inline State run(const simonqp::Circuit &c) {
  State d(c.layout().widths());
  for (const auto &op : c.operations()) {
    apply_op(d, op, false);
  }
  return d;
}

inline void run_inverse(const simonqp::Circuit &c, State &d) {
  const auto &ops = c.operations();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    apply_op(d, *it, true);
  }
}

struct AmplificationCheck {
  double a = 0.0;
  /// max |Q|0> - (k|A> + l|B>)| component-wise.
  double max_error = 0.0;
  /// Squared norm of the chi = 0 part of Q|0>.
  double bad_mass = 0.0;
  /// Probability of chi = 1 after Q.
  double good_probability = 0.0;
  State output{std::vector<std::size_t>{1}};
};

/// Builds Q = A S_0 A^-1 S_A A on the dense reference (S phases are i) and
/// compares with the closed form k = 2i(1-a) - 1, l = i(1-2a).
inline AmplificationCheck check_amplification(const simonqp::Circuit &a_circuit,
                                              const simonqp::BooleanPredicate &chi) {
  const Complex i{0.0, 1.0};
  State psi = run(a_circuit);
  State q = psi;
  q.phase_predicate([&](std::uint64_t x) { return chi(x); }, i);
  run_inverse(a_circuit, q);
  std::vector<std::size_t> all(a_circuit.layout().count());
  for (std::size_t r = 0; r < all.size(); ++r) {
    all[r] = r;
  }
  q.phase_zero(all, i);
  for (const auto &op : a_circuit.operations()) {
    apply_op(q, op, false);
  }

  AmplificationCheck out;
  for (std::uint64_t x = 0; x < psi.size(); ++x) {
    if (chi(psi.field(x, 0))) {
      out.a += std::norm(psi.amplitudes()[x]);
    }
  }
  const Complex k = 2.0 * i * (1.0 - out.a) - 1.0;
  const Complex l = i * (1.0 - 2.0 * out.a);
  for (std::uint64_t x = 0; x < psi.size(); ++x) {
    const bool good = chi(psi.field(x, 0));
    const Complex expected = (good ? k : l) * psi.amplitudes()[x];
    out.max_error = std::max(out.max_error, std::abs(q.amplitudes()[x] - expected));
    (good ? out.good_probability : out.bad_mass) += std::norm(q.amplitudes()[x]);
  }
  out.output = q;
  return out;
}

}  // namespace dense

#endif  // SIMONQP_TESTS_DENSE_CIRCUIT_HPP
