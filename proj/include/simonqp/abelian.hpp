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

#ifndef SIMONQP_ABELIAN_HPP
#define SIMONQP_ABELIAN_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simonqp/qstate.hpp"

namespace simonqp {

/// Largest group order handled by the dense group states.
inline constexpr std::uint64_t kMaxAbelianOrder = std::uint64_t{1} << 16;
/// Largest group order for which |G| x |G| operator matrices are built.
inline constexpr std::uint64_t kMaxOperatorOrder = 4096;

/// An element (g_1, ..., g_n) with 0 <= g_i < m_i.
struct AbelianElement {
  std::vector<std::uint64_t> residues;

  std::string to_string() const;
  friend bool operator==(const AbelianElement &, const AbelianElement &) = default;
  friend auto operator<=>(const AbelianElement &, const AbelianElement &) = default;
};

/// G = Z_{m_1} + ... + Z_{m_n}.
///
/// Elements are numbered in mixed radix with g_1 least significant, so for
/// G = Z_2^n the index agrees with the GroupElement integer encoding.
class AbelianGroupSpec {
 public:
  AbelianGroupSpec() = default;
  /// Throws std::invalid_argument on an empty list, a zero modulus or an
  /// order above `max_order`.
  explicit AbelianGroupSpec(std::vector<std::uint64_t> moduli, std::uint64_t max_order = kMaxAbelianOrder);

  /// Parses "m1,m2,...".
  static AbelianGroupSpec parse(std::string_view text, std::uint64_t max_order = kMaxAbelianOrder);

  std::size_t rank() const { return moduli_.size(); }
  const std::vector<std::uint64_t> &moduli() const { return moduli_; }
  std::uint64_t modulus(std::size_t i) const { return moduli_[i]; }
  std::uint64_t order() const { return order_; }
  /// lcm of the moduli; mu takes values among the L-th roots of unity.
  std::uint64_t exponent() const { return exponent_; }
  std::string to_string() const;

  std::uint64_t index(const AbelianElement &g) const;
  AbelianElement element(std::uint64_t index) const;
  /// Throws std::invalid_argument unless g has rank() residues in range.
  void check(const AbelianElement &g) const;

  std::uint64_t add(std::uint64_t g, std::uint64_t h) const;
  std::uint64_t negate(std::uint64_t g) const;
  AbelianElement add(const AbelianElement &g, const AbelianElement &h) const;
  AbelianElement negate(const AbelianElement &g) const;

  /// k with mu(g, h) = exp(2 pi i k / exponent()), 0 <= k < exponent().
  std::uint64_t pairing(std::uint64_t g, std::uint64_t h) const;

  friend bool operator==(const AbelianGroupSpec &a, const AbelianGroupSpec &b) { return a.moduli_ == b.moduli_; }

 private:
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> strides_;
  /// exponent() / m_i.
  std::vector<std::uint64_t> scale_;
  std::uint64_t order_ = 0;
  std::uint64_t exponent_ = 1;
};

/// exp(2 pi i k / l), exact for l / gcd(k, l) in {1, 2, 4}.
std::complex<double> root_of_unity(std::uint64_t k, std::uint64_t l);

/// mu(g, h) = prod_i exp(2 pi i g_i h_i / m_i).
std::complex<double> mu(const AbelianGroupSpec &group, const AbelianElement &g, const AbelianElement &h);
std::complex<double> mu(const AbelianGroupSpec &group, std::uint64_t g, std::uint64_t h);

/// A subgroup with its generators and its sorted element indices.
class AbelianSubgroup {
 public:
  AbelianSubgroup() = default;

  /// The closure of `generators` under addition.
  static AbelianSubgroup generated_by(const AbelianGroupSpec &group, std::vector<AbelianElement> generators);
  static AbelianSubgroup trivial(const AbelianGroupSpec &group) { return generated_by(group, {}); }

  const AbelianGroupSpec &group() const { return group_; }
  const std::vector<AbelianElement> &generators() const { return generators_; }
  const std::vector<std::uint64_t> &elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(std::uint64_t g) const;
  bool contains(const AbelianElement &g) const { return contains(group_.index(g)); }

  /// Equality of element sets.
  friend bool operator==(const AbelianSubgroup &a, const AbelianSubgroup &b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  AbelianGroupSpec group_;
  std::vector<AbelianElement> generators_;
  std::vector<std::uint64_t> elements_;
};

/// Closure of the given elements, with a short generating list: an element
/// is kept as a generator only if it is not in the span of earlier ones.
AbelianSubgroup span_of(const AbelianGroupSpec &group, std::span<const std::uint64_t> elements);

/// H^perp = {g | mu(g, h) = 1 for all h in H}, by filtering G.
AbelianSubgroup orthogonal_subgroup(const AbelianSubgroup &h);

/// F_G = |G|^(-1/2) sum mu(g, h)|g><h|. Throws std::invalid_argument if
/// |G| > kMaxOperatorOrder.
Eigen::MatrixXcd fourier(const AbelianGroupSpec &group);
/// tau_t = sum |t + g><g|.
Eigen::MatrixXcd translate(const AbelianGroupSpec &group, const AbelianElement &t);
/// phi_h = sum mu(h, g)|g><g|.
Eigen::MatrixXcd phase(const AbelianGroupSpec &group, const AbelianElement &h);

/// |H> = |H|^(-1/2) sum_{h in H} |h> as a dense vector.
Eigen::VectorXcd subgroup_state(const AbelianSubgroup &h);

/// max |(M M^dagger - I)_{jk}|.
double unitarity_defect(const Eigen::MatrixXcd &m);

struct LawCheck {
  bool passed = true;
  std::size_t pairs_checked = 0;
  double max_defect = 0.0;
  /// Empty when passed; otherwise names the law and the pair (h, t).
  std::string counterexample;
};

/// mu(h,t) tau_t phi_h = phi_h tau_t, F phi_h = tau_{-h} F and
/// F tau_t = phi_t F to `tolerance`, for every pair when |G| <= 64 and for
/// 100 random pairs (drawn from `seed`) otherwise.
LawCheck check_commutative_laws(const AbelianGroupSpec &group, double tolerance = 1e-9, std::uint64_t seed = 0);

/// A function on G with integer values and a query counter. The hidden
/// subgroup, when known, is kept for the harness only.
class AbelianOracle {
 public:
  AbelianOracle(AbelianGroupSpec group, std::vector<std::uint64_t> table,
                std::optional<AbelianSubgroup> hidden = std::nullopt);

  const AbelianGroupSpec &group() const { return group_; }
  std::uint64_t evaluate(std::uint64_t g) const;
  std::uint64_t evaluate(const AbelianElement &g) const { return evaluate(group_.index(g)); }
  /// rho(g) without counting.
  std::uint64_t value(std::uint64_t g) const { return table_[g]; }
  std::span<const std::uint64_t> table() const { return table_; }
  std::uint64_t queries() const { return *queries_; }
  void charge(std::uint64_t n) const { *queries_ += n; }
  const std::optional<AbelianSubgroup> &hidden() const { return hidden_; }

 private:
  AbelianGroupSpec group_;
  std::vector<std::uint64_t> table_;
  std::optional<AbelianSubgroup> hidden_;
  std::shared_ptr<std::uint64_t> queries_;
};

/// The subgroup of periods of rho. Throws InvariantViolation unless rho is
/// constant and distinct on its cosets (and equal to the stored hidden
/// subgroup, if any).
AbelianSubgroup verify_abelian_promise(const AbelianOracle &oracle);

/// Random order in [2, max_order] built from 1 to 4 cyclic factors of
/// modulus at most `max_modulus`.
AbelianGroupSpec random_abelian_group(Rng &rng, std::uint64_t max_order = 1024, std::uint64_t max_modulus = 12);
/// Closure of `generators` uniformly random elements. Not uniform over all
/// subgroups.
AbelianSubgroup random_abelian_subgroup(const AbelianGroupSpec &group, std::size_t generators, Rng &rng);
/// rho with a uniformly random injective labelling of the cosets of H.
AbelianOracle random_abelian_oracle(const AbelianSubgroup &hidden, Rng &rng);

/// The state U_G |0>|0> with U_G = (F_G x I) U_rho (F_G^-1 x I): one dense
/// vector over G per value held by the second register.
struct GroupState {
  AbelianGroupSpec group;
  std::vector<std::pair<std::uint64_t, Eigen::VectorXcd>> components;

  double norm_squared() const;
  /// Probability of every element of G in the first register.
  std::vector<std::pair<std::uint64_t, double>> distribution(double threshold = 1e-12) const;
};

/// Applies F_G (or F_G^-1) to a dense vector, using the sparse column sum or
/// a transform along each cyclic factor, whichever is cheaper.
Eigen::VectorXcd apply_fourier(const AbelianGroupSpec &group, const Eigen::VectorXcd &v, bool inverse = false);

/// One application of U_G (one query). With `verify`, the promise is checked
/// first without counting.
GroupState general_subroutine(const AbelianOracle &oracle, bool verify = true);

struct AbelianSolveResult {
  AbelianSubgroup subgroup;
  /// Span of the samples, equal to the orthogonal subgroup of the result.
  AbelianSubgroup orthogonal;
  std::size_t samples = 0;
  std::uint64_t queries = 0;
};

/// Samples H0^perp through general_subroutine until rho is constant on the
/// orthogonal subgroup of the samples' span, tested on 0 and its
/// generators. Throws CapExceeded after max_samples samples.
AbelianSolveResult zqp_solve_abelian(const AbelianOracle &oracle, Rng &rng, std::size_t max_samples = 4096);

struct DlogResult {
  std::uint64_t r = 0;
  std::size_t samples = 0;
  std::uint64_t queries = 0;
  /// The last sample, (z1, z2) with gcd(z1, p - 1) = 1.
  AbelianElement witness;
};

bool is_prime(std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
/// True iff zeta has multiplicative order p - 1 modulo p.
bool is_generator(std::uint64_t zeta, std::uint64_t p);

/// r with zeta^r = a (mod p), through rho(g1, g2) = zeta^g1 a^g2 on
/// Z_{p-1}^2. Requires p prime, 3 <= p <= 64, zeta a generator and
/// 1 <= a < p; throws std::invalid_argument otherwise and CapExceeded after
/// max_samples samples.
DlogResult discrete_log(std::uint64_t p, std::uint64_t zeta, std::uint64_t a, Rng &rng,
                        std::size_t max_samples = 4096);

}  // namespace simonqp

#endif  // SIMONQP_ABELIAN_HPP
