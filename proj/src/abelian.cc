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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "simonqp/errors.hpp"

namespace simonqp {

namespace {

std::vector<std::complex<double>> root_table(std::uint64_t l) {
  std::vector<std::complex<double>> out(l);
  for (std::uint64_t k = 0; k < l; ++k) {
    out[k] = root_of_unity(k, l);
  }
  return out;
}

void check_operator_order(const AbelianGroupSpec &group) {
  if (group.order() > kMaxOperatorOrder) {
    throw CapExceeded("group order " + std::to_string(group.order()) +
                                " too large for dense operators (cap " + std::to_string(kMaxOperatorOrder) + ")");
  }
}

/// Bitmap closure of {0} under adding `gens`.
std::vector<bool> closure(const AbelianGroupSpec &group, std::span<const std::uint64_t> gens) {
  std::vector<bool> in(group.order(), false);
  std::vector<std::uint64_t> frontier{0};
  in[0] = true;
  while (!frontier.empty()) {
    const std::uint64_t x = frontier.back();
    frontier.pop_back();
    for (auto g : gens) {
      const std::uint64_t y = group.add(x, g);
      if (!in[y]) {
        in[y] = true;
        frontier.push_back(y);
      }
    }
  }
  return in;
}

Eigen::PermutationMatrix<Eigen::Dynamic> translation_permutation(const AbelianGroupSpec &group, std::uint64_t t) {
  Eigen::PermutationMatrix<Eigen::Dynamic> p(static_cast<Eigen::Index>(group.order()));
  for (std::uint64_t g = 0; g < group.order(); ++g) {
    p.indices()[static_cast<Eigen::Index>(g)] = static_cast<int>(group.add(t, g));
  }
  return p;
}

Eigen::VectorXcd phase_diagonal(const AbelianGroupSpec &group, std::uint64_t h) {
  Eigen::VectorXcd d(static_cast<Eigen::Index>(group.order()));
  for (std::uint64_t g = 0; g < group.order(); ++g) {
    d[static_cast<Eigen::Index>(g)] = mu(group, h, g);
  }
  return d;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw std::invalid_argument("not invertible");
  }
  const std::int64_t mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

}  // namespace

// ---------------------------------------------------------------------------
// Elements and groups

std::string AbelianElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < residues.size(); ++i) {
    out += (i ? "," : "") + std::to_string(residues[i]);
  }
  return out + ")";
}

AbelianGroupSpec::AbelianGroupSpec(std::vector<std::uint64_t> moduli, std::uint64_t max_order)
    : moduli_(std::move(moduli)) {
  if (moduli_.empty()) {
    throw std::invalid_argument("a group needs at least one modulus");
  }
  order_ = 1;
  for (auto m : moduli_) {
    if (m == 0) {
      throw std::invalid_argument("moduli must be at least 1");
    }
    if (order_ > max_order / m) {
      throw CapExceeded("group order exceeds the cap of " + std::to_string(max_order));
    }
    strides_.push_back(order_);
    order_ *= m;
    exponent_ = std::lcm(exponent_, m);
  }
  for (auto m : moduli_) {
    scale_.push_back(exponent_ / m);
  }
}

AbelianGroupSpec AbelianGroupSpec::parse(std::string_view text, std::uint64_t max_order) {
  std::vector<std::uint64_t> moduli;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view part = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    std::uint64_t m = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), m);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size()) {
      throw std::invalid_argument("malformed group spec \"" + std::string(text) + "\"");
    }
    moduli.push_back(m);
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return AbelianGroupSpec(std::move(moduli), max_order);
}

std::string AbelianGroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    out += (i ? "," : "") + std::to_string(moduli_[i]);
  }
  return out;
}

void AbelianGroupSpec::check(const AbelianElement &g) const {
  if (g.residues.size() != moduli_.size()) {
    throw std::invalid_argument("element " + g.to_string() + " does not match group " + to_string());
  }
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (g.residues[i] >= moduli_[i]) {
      throw std::invalid_argument("element " + g.to_string() + " out of range for group " + to_string());
    }
  }
}

std::uint64_t AbelianGroupSpec::index(const AbelianElement &g) const {
  check(g);
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    out += g.residues[i] * strides_[i];
  }
  return out;
}

AbelianElement AbelianGroupSpec::element(std::uint64_t index) const {
  if (index >= order_) {
    throw std::out_of_range("element index out of range");
  }
  AbelianElement g;
  for (auto m : moduli_) {
    g.residues.push_back(index % m);
    index /= m;
  }
  return g;
}

std::uint64_t AbelianGroupSpec::add(std::uint64_t g, std::uint64_t h) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::uint64_t m = moduli_[i];
    out += (((g % m) + (h % m)) % m) * strides_[i];
    g /= m;
    h /= m;
  }
  return out;
}

std::uint64_t AbelianGroupSpec::negate(std::uint64_t g) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::uint64_t m = moduli_[i];
    out += ((m - g % m) % m) * strides_[i];
    g /= m;
  }
  return out;
}

AbelianElement AbelianGroupSpec::add(const AbelianElement &g, const AbelianElement &h) const {
  return element(add(index(g), index(h)));
}

AbelianElement AbelianGroupSpec::negate(const AbelianElement &g) const { return element(negate(index(g))); }

std::uint64_t AbelianGroupSpec::pairing(std::uint64_t g, std::uint64_t h) const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::uint64_t m = moduli_[i];
    k = (k + ((g % m) * (h % m) % m) * scale_[i]) % exponent_;
    g /= m;
    h /= m;
  }
  return k;
}

std::complex<double> root_of_unity(std::uint64_t k, std::uint64_t l) {
  k %= l;
  const std::uint64_t d = std::gcd(k, l);
  const std::uint64_t kk = d ? k / d : 0;
  const std::uint64_t ll = d ? l / d : 1;
  if (k == 0 || ll == 1) {
    return {1.0, 0.0};
  }
  if (ll == 2) {
    return {-1.0, 0.0};
  }
  if (ll == 4) {
    return kk == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(l));
}

std::complex<double> mu(const AbelianGroupSpec &group, std::uint64_t g, std::uint64_t h) {
  return root_of_unity(group.pairing(g, h), group.exponent());
}

std::complex<double> mu(const AbelianGroupSpec &group, const AbelianElement &g, const AbelianElement &h) {
  return mu(group, group.index(g), group.index(h));
}

// ---------------------------------------------------------------------------
// Subgroups

AbelianSubgroup AbelianSubgroup::generated_by(const AbelianGroupSpec &group, std::vector<AbelianElement> generators) {
  AbelianSubgroup out;
  out.group_ = group;
  std::vector<std::uint64_t> gens;
  for (const auto &g : generators) {
    gens.push_back(group.index(g));
  }
  out.generators_ = std::move(generators);
  const auto in = closure(group, gens);
  for (std::uint64_t g = 0; g < group.order(); ++g) {
    if (in[g]) {
      out.elements_.push_back(g);
    }
  }
  return out;
}

bool AbelianSubgroup::contains(std::uint64_t g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

AbelianSubgroup span_of(const AbelianGroupSpec &group, std::span<const std::uint64_t> elements) {
  std::vector<std::uint64_t> gens;
  std::vector<bool> in = closure(group, gens);
  for (auto e : elements) {
    if (e >= group.order()) {
      throw std::invalid_argument("element index out of range");
    }
    if (!in[e]) {
      gens.push_back(e);
      in = closure(group, gens);
    }
  }
  std::vector<AbelianElement> generators;
  for (auto g : gens) {
    generators.push_back(group.element(g));
  }
  return AbelianSubgroup::generated_by(group, std::move(generators));
}

AbelianSubgroup orthogonal_subgroup(const AbelianSubgroup &h) {
  const AbelianGroupSpec &group = h.group();
  std::vector<std::uint64_t> gens;
  for (const auto &g : h.generators()) {
    gens.push_back(group.index(g));
  }
  std::vector<std::uint64_t> members;
  for (std::uint64_t g = 0; g < group.order(); ++g) {
    bool ok = true;
    for (auto x : gens) {
      if (group.pairing(g, x) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      members.push_back(g);
    }
  }
  AbelianSubgroup out = span_of(group, members);
  if (out.elements() != members) {
    throw InvariantViolation("orthogonal set is not closed under addition");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operators

Eigen::MatrixXcd fourier(const AbelianGroupSpec &group) {
  check_operator_order(group);
  const auto n = static_cast<Eigen::Index>(group.order());
  const auto roots = root_table(group.exponent());
  const double scale = 1.0 / std::sqrt(static_cast<double>(group.order()));
  Eigen::MatrixXcd f(n, n);
  for (Eigen::Index g = 0; g < n; ++g) {
    for (Eigen::Index h = 0; h < n; ++h) {
      f(g, h) = roots[group.pairing(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(h))] * scale;
    }
  }
  return f;
}

Eigen::MatrixXcd translate(const AbelianGroupSpec &group, const AbelianElement &t) {
  check_operator_order(group);
  const std::uint64_t ti = group.index(t);
  const auto n = static_cast<Eigen::Index>(group.order());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::uint64_t g = 0; g < group.order(); ++g) {
    m(static_cast<Eigen::Index>(group.add(ti, g)), static_cast<Eigen::Index>(g)) = 1.0;
  }
  return m;
}

Eigen::MatrixXcd phase(const AbelianGroupSpec &group, const AbelianElement &h) {
  check_operator_order(group);
  return phase_diagonal(group, group.index(h)).asDiagonal();
}

Eigen::VectorXcd subgroup_state(const AbelianSubgroup &h) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(h.group().order()));
  const double amp = 1.0 / std::sqrt(static_cast<double>(h.order()));
  for (auto g : h.elements()) {
    v[static_cast<Eigen::Index>(g)] = amp;
  }
  return v;
}

double unitarity_defect(const Eigen::MatrixXcd &m) {
  const Eigen::MatrixXcd d = m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff();
}

LawCheck check_commutative_laws(const AbelianGroupSpec &group, double tolerance, std::uint64_t seed) {
  check_operator_order(group);
  const Eigen::MatrixXcd f = fourier(group);
  const std::uint64_t order = group.order();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  if (order <= 64) {
    for (std::uint64_t h = 0; h < order; ++h) {
      for (std::uint64_t t = 0; t < order; ++t) {
        pairs.emplace_back(h, t);
      }
    }
  } else {
    Rng rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, order - 1);
    for (int k = 0; k < 100; ++k) {
      const std::uint64_t h = pick(rng);
      pairs.emplace_back(h, pick(rng));
    }
  }
  LawCheck out;
  auto record = [&](double defect, const char *law, std::uint64_t h, std::uint64_t t) {
    out.max_defect = std::max(out.max_defect, defect);
    if (defect > tolerance && out.passed) {
      out.passed = false;
      std::ostringstream msg;
      msg << law << " fails for h=" << group.element(h).to_string() << " t=" << group.element(t).to_string()
          << " (defect " << defect << ")";
      out.counterexample = msg.str();
    }
  };
  for (const auto &[h, t] : pairs) {
    const auto tau_t = translation_permutation(group, t);
    const auto tau_minus_h = translation_permutation(group, group.negate(h));
    const Eigen::VectorXcd phi_h = phase_diagonal(group, h);
    const Eigen::VectorXcd phi_t = phase_diagonal(group, t);
    const Eigen::MatrixXcd phi_h_dense = phi_h.asDiagonal();

    const Eigen::MatrixXcd lhs1 = mu(group, h, t) * (tau_t * phi_h_dense);
    const Eigen::MatrixXcd rhs1 = phi_h.asDiagonal() * tau_t.toDenseMatrix().cast<std::complex<double>>();
    record((lhs1 - rhs1).cwiseAbs().maxCoeff(), "mu(h,t) tau_t phi_h = phi_h tau_t", h, t);

    const Eigen::MatrixXcd lhs2 = f * phi_h.asDiagonal();
    const Eigen::MatrixXcd rhs2 = tau_minus_h * f;
    record((lhs2 - rhs2).cwiseAbs().maxCoeff(), "F phi_h = tau_-h F", h, t);

    const Eigen::MatrixXcd lhs3 = f * tau_t;
    const Eigen::MatrixXcd rhs3 = phi_t.asDiagonal() * f;
    record((lhs3 - rhs3).cwiseAbs().maxCoeff(), "F tau_t = phi_t F", h, t);
    ++out.pairs_checked;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracles

AbelianOracle::AbelianOracle(AbelianGroupSpec group, std::vector<std::uint64_t> table,
                             std::optional<AbelianSubgroup> hidden)
    : group_(std::move(group)),
      table_(std::move(table)),
      hidden_(std::move(hidden)),
      queries_(std::make_shared<std::uint64_t>(0)) {
  if (table_.size() != group_.order()) {
    throw std::invalid_argument("oracle table size does not match the group order");
  }
  if (hidden_ && !(hidden_->group() == group_)) {
    throw std::invalid_argument("hidden subgroup lives in another group");
  }
}

std::uint64_t AbelianOracle::evaluate(std::uint64_t g) const {
  if (g >= table_.size()) {
    throw std::out_of_range("element index out of range");
  }
  ++*queries_;
  return table_[g];
}

AbelianSubgroup verify_abelian_promise(const AbelianOracle &oracle) {
  const AbelianGroupSpec &group = oracle.group();
  const auto table = oracle.table();
  std::vector<std::uint64_t> periods;
  for (std::uint64_t d = 0; d < group.order(); ++d) {
    if (table[d] != table[0]) {
      continue;
    }
    bool ok = true;
    for (std::uint64_t g = 0; g < group.order() && ok; ++g) {
      ok = table[group.add(g, d)] == table[g];
    }
    if (ok) {
      periods.push_back(d);
    }
  }
  std::vector<std::uint64_t> values(table.begin(), table.end());
  std::sort(values.begin(), values.end());
  const auto distinct = static_cast<std::uint64_t>(std::unique(values.begin(), values.end()) - values.begin());
  if (distinct * periods.size() != group.order()) {
    throw InvariantViolation("oracle is not distinct on the cosets of its period subgroup");
  }
  AbelianSubgroup out = span_of(group, periods);
  if (oracle.hidden() && !(*oracle.hidden() == out)) {
    throw InvariantViolation("oracle periods differ from the stated hidden subgroup");
  }
  return out;
}

AbelianGroupSpec random_abelian_group(Rng &rng, std::uint64_t max_order, std::uint64_t max_modulus) {
  if (max_order < 2 || max_modulus < 2) {
    throw std::invalid_argument("random_abelian_group needs max_order, max_modulus >= 2");
  }
  std::uniform_int_distribution<std::size_t> count(1, 4);
  std::uniform_int_distribution<std::uint64_t> modulus(2, max_modulus);
  while (true) {
    std::vector<std::uint64_t> moduli(count(rng));
    std::uint64_t order = 1;
    for (auto &m : moduli) {
      m = modulus(rng);
      order *= m;
    }
    if (order <= max_order) {
      return AbelianGroupSpec(std::move(moduli), max_order);
    }
  }
}

AbelianSubgroup random_abelian_subgroup(const AbelianGroupSpec &group, std::size_t generators, Rng &rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, group.order() - 1);
  std::vector<AbelianElement> gens;
  for (std::size_t k = 0; k < generators; ++k) {
    gens.push_back(group.element(pick(rng)));
  }
  return AbelianSubgroup::generated_by(group, std::move(gens));
}

AbelianOracle random_abelian_oracle(const AbelianSubgroup &hidden, Rng &rng) {
  const AbelianGroupSpec &group = hidden.group();
  const std::uint64_t cosets = group.order() / hidden.order();
  std::vector<std::uint64_t> labels(cosets);
  std::iota(labels.begin(), labels.end(), std::uint64_t{0});
  for (std::uint64_t i = cosets; i > 1; --i) {
    std::uniform_int_distribution<std::uint64_t> pick(0, i - 1);
    std::swap(labels[i - 1], labels[pick(rng)]);
  }
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> table(group.order(), kUnset);
  std::uint64_t next = 0;
  for (std::uint64_t g = 0; g < group.order(); ++g) {
    if (table[g] != kUnset) {
      continue;
    }
    const std::uint64_t v = labels[next++];
    for (auto h : hidden.elements()) {
      table[group.add(g, h)] = v;
    }
  }
  return AbelianOracle(group, std::move(table), hidden);
}

// ---------------------------------------------------------------------------
// Subroutine and solvers

double GroupState::norm_squared() const {
  double total = 0.0;
  for (const auto &[v, amps] : components) {
    total += amps.squaredNorm();
  }
  return total;
}

std::vector<std::pair<std::uint64_t, double>> GroupState::distribution(double threshold) const {
  std::vector<double> p(group.order(), 0.0);
  for (const auto &[v, amps] : components) {
    for (Eigen::Index g = 0; g < amps.size(); ++g) {
      p[static_cast<std::size_t>(g)] += std::norm(amps[g]);
    }
  }
  std::vector<std::pair<std::uint64_t, double>> out;
  for (std::uint64_t g = 0; g < group.order(); ++g) {
    if (p[g] > threshold) {
      out.emplace_back(g, p[g]);
    }
  }
  return out;
}

Eigen::VectorXcd apply_fourier(const AbelianGroupSpec &group, const Eigen::VectorXcd &v, bool inverse) {
  const std::uint64_t order = group.order();
  if (static_cast<std::uint64_t>(v.size()) != order) {
    throw std::invalid_argument("vector length does not match the group order");
  }
  std::vector<std::uint64_t> nonzero;
  for (std::uint64_t h = 0; h < order; ++h) {
    if (v[static_cast<Eigen::Index>(h)] != std::complex<double>{}) {
      nonzero.push_back(h);
    }
  }
  std::uint64_t axis_cost = 0;
  for (auto m : group.moduli()) {
    axis_cost += m;
  }
  const std::uint64_t l = group.exponent();
  if (nonzero.size() * group.rank() <= axis_cost) {
    const auto roots = root_table(l);
    const double scale = 1.0 / std::sqrt(static_cast<double>(order));
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(order));
    for (auto h : nonzero) {
      const std::complex<double> vh = v[static_cast<Eigen::Index>(h)] * scale;
      for (std::uint64_t g = 0; g < order; ++g) {
        const std::uint64_t k = group.pairing(g, h);
        out[static_cast<Eigen::Index>(g)] += roots[inverse ? (l - k) % l : k] * vh;
      }
    }
    return out;
  }
  Eigen::VectorXcd cur = v;
  std::uint64_t stride = 1;
  std::vector<std::complex<double>> buf;
  for (auto m : group.moduli()) {
    if (m > 1) {
      const auto roots = root_table(m);
      const double scale = 1.0 / std::sqrt(static_cast<double>(m));
      buf.assign(m, {});
      for (std::uint64_t base = 0; base < order; ++base) {
        if ((base / stride) % m != 0) {
          continue;
        }
        for (std::uint64_t j = 0; j < m; ++j) {
          buf[j] = cur[static_cast<Eigen::Index>(base + j * stride)];
        }
        for (std::uint64_t k = 0; k < m; ++k) {
          std::complex<double> acc{};
          for (std::uint64_t j = 0; j < m; ++j) {
            const std::uint64_t e = (j * k) % m;
            acc += roots[inverse ? (m - e) % m : e] * buf[j];
          }
          cur[static_cast<Eigen::Index>(base + k * stride)] = acc * scale;
        }
      }
    }
    stride *= m;
  }
  return cur;
}

GroupState general_subroutine(const AbelianOracle &oracle, bool verify) {
  const AbelianGroupSpec &group = oracle.group();
  if (verify) {
    verify_abelian_promise(oracle);
  }
  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(group.order()));
  zero[0] = 1.0;
  const Eigen::VectorXcd spread = apply_fourier(group, zero, true);
  // U_rho: |g>|0> -> |g>|rho(g)>, grouped by the second register.
  oracle.charge(1);
  std::map<std::uint64_t, Eigen::VectorXcd> parts;
  for (std::uint64_t g = 0; g < group.order(); ++g) {
    auto [it, inserted] = parts.try_emplace(oracle.value(g));
    if (inserted) {
      it->second = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(group.order()));
    }
    it->second[static_cast<Eigen::Index>(g)] = spread[static_cast<Eigen::Index>(g)];
  }
  GroupState out;
  out.group = group;
  for (auto &[value, amps] : parts) {
    out.components.emplace_back(value, apply_fourier(group, amps, false));
  }
  return out;
}

namespace {

/// Samples of the first register of U_G|0>|0>. The state is computed once;
/// every further sample charges one query, as a fresh run would.
class SubroutineSampler {
 public:
  explicit SubroutineSampler(const AbelianOracle &oracle) : oracle_(oracle) {}

  std::uint64_t sample(Rng &rng) {
    if (dist_.empty()) {
      dist_ = general_subroutine(oracle_).distribution();
    } else {
      oracle_.charge(1);
    }
    const std::uint64_t z = sample_distribution(dist_, rng);
    if (oracle_.hidden()) {
      for (const auto &h : oracle_.hidden()->generators()) {
        if (oracle_.group().pairing(z, oracle_.group().index(h)) != 0) {
          throw InvariantViolation("sample " + oracle_.group().element(z).to_string() +
                                   " is not orthogonal to the hidden subgroup");
        }
      }
    }
    return z;
  }

 private:
  const AbelianOracle &oracle_;
  std::vector<std::pair<std::uint64_t, double>> dist_;
};

}  // namespace

AbelianSolveResult zqp_solve_abelian(const AbelianOracle &oracle, Rng &rng, std::size_t max_samples) {
  const AbelianGroupSpec &group = oracle.group();
  const std::uint64_t start = oracle.queries();
  SubroutineSampler sampler(oracle);
  std::vector<std::uint64_t> ys;
  AbelianSolveResult out;
  while (true) {
    out.orthogonal = span_of(group, ys);
    out.subgroup = orthogonal_subgroup(out.orthogonal);
    const std::uint64_t base = oracle.evaluate(0);
    bool constant = true;
    for (const auto &g : out.subgroup.generators()) {
      constant = (oracle.evaluate(g) == base) && constant;
    }
    if (constant) {
      break;
    }
    if (out.samples >= max_samples) {
      throw CapExceeded("abelian sampler exceeded " + std::to_string(max_samples) + " samples");
    }
    ys.push_back(sampler.sample(rng));
    ++out.samples;
  }
  out.queries = oracle.queries() - start;
  return out;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t out = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) {
      out = static_cast<std::uint64_t>(static_cast<unsigned __int128>(out) * base % mod);
    }
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % mod);
    exp >>= 1;
  }
  return out;
}

bool is_generator(std::uint64_t zeta, std::uint64_t p) {
  if (!is_prime(p) || zeta % p == 0) {
    return false;
  }
  std::uint64_t x = 1;
  for (std::uint64_t k = 1; k < p - 1; ++k) {
    x = x * (zeta % p) % p;
    if (x == 1) {
      return false;
    }
  }
  return true;
}

DlogResult discrete_log(std::uint64_t p, std::uint64_t zeta, std::uint64_t a, Rng &rng, std::size_t max_samples) {
  if (!is_prime(p) || p < 3 || p > 64) {
    throw std::invalid_argument("p must be a prime with 3 <= p <= 64");
  }
  if (zeta >= p || !is_generator(zeta, p)) {
    throw std::invalid_argument(std::to_string(zeta) + " does not generate Z_" + std::to_string(p) + "*");
  }
  if (a == 0 || a >= p) {
    throw std::invalid_argument("a must lie in Z_p*");
  }
  const std::uint64_t q = p - 1;
  AbelianGroupSpec group({q, q});
  std::vector<std::uint64_t> table(group.order());
  for (std::uint64_t g = 0; g < group.order(); ++g) {
    table[g] = pow_mod(zeta, g % q, p) * pow_mod(a, g / q, p) % p;
  }
  AbelianOracle oracle(group, std::move(table));
  SubroutineSampler sampler(oracle);
  DlogResult out;
  while (true) {
    if (out.samples >= max_samples) {
      throw CapExceeded("discrete_log exceeded " + std::to_string(max_samples) + " samples");
    }
    const std::uint64_t z = sampler.sample(rng);
    ++out.samples;
    const std::uint64_t z1 = z % q;
    const std::uint64_t z2 = z / q;
    if (std::gcd(z1, q) != 1) {
      continue;
    }
    out.r = z2 * inverse_mod(z1, q) % q;
    out.witness = group.element(z);
    break;
  }
  if (pow_mod(zeta, out.r, p) != a) {
    throw InvariantViolation("discrete_log result fails zeta^r = a");
  }
  out.queries = oracle.queries();
  return out;
}

}  // namespace simonqp
