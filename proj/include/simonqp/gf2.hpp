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

#ifndef SIMONQP_GF2_HPP
#define SIMONQP_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simonqp {

/// An element g = (g_1, ..., g_n) of the group Z_2^n.
///
/// Component g_1 lives at bit index 0. The same order is used for the
/// integer encoding (g_1 is the least significant bit) and for the text
/// encoding, where the string "g_1 g_2 ... g_n" is written left to right.
/// Elements with n <= 64 occupy a single word.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::size_t n);

  static GroupElement zero(std::size_t n) { return GroupElement(n); }
  /// Unit vector with a single 1 at bit index `i`.
  static GroupElement unit(std::size_t n, std::size_t i);
  /// Decodes the little-endian integer encoding. Requires n <= 64.
  static GroupElement from_index(std::size_t n, std::uint64_t index);
  /// Parses "g1g2...gn". Throws std::invalid_argument on anything but 0/1.
  static GroupElement from_string(std::string_view bits);

  std::size_t size() const { return n_; }
  bool bit(std::size_t i) const;
  void set_bit(std::size_t i, bool value);
  void flip(std::size_t i);

  bool is_zero() const;
  std::size_t popcount() const;
  /// Lowest index holding a 1, or size() for the zero element.
  std::size_t lowest_set_bit() const;

  /// Little-endian integer encoding. Throws std::out_of_range for n > 64.
  std::uint64_t to_index() const;
  std::string to_string() const;

  GroupElement &operator^=(const GroupElement &other);
  friend GroupElement operator^(GroupElement a, const GroupElement &b) {
    a ^= b;
    return a;
  }
  friend bool operator==(const GroupElement &a, const GroupElement &b) = default;
  friend bool operator<(const GroupElement &a, const GroupElement &b);

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// g . h = (sum_i g_i h_i) mod 2. Throws std::invalid_argument on a
/// dimension mismatch.
bool dot(const GroupElement &g, const GroupElement &h);

/// A linearly independent set of group elements kept in reduced row echelon
/// form: the pivot (lowest set bit) of each vector strictly increases, and
/// every pivot column is zero in all other vectors. Two bases span the same
/// subgroup iff they compare equal.
class Gf2Basis {
 public:
  Gf2Basis() = default;
  explicit Gf2Basis(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<GroupElement> &vectors() const { return vectors_; }
  std::vector<std::size_t> pivots() const;

  /// Order of the spanned subgroup as log2.
  std::size_t log2_order() const { return vectors_.size(); }

  /// Reduces g modulo the span: the result is zero in every pivot column.
  GroupElement reduce(GroupElement g) const;

  /// Adds g to the span if independent. Returns false if g was already
  /// contained. Keeps the reduced echelon form.
  bool insert(const GroupElement &g);

  friend bool operator==(const Gf2Basis &, const Gf2Basis &) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<GroupElement> vectors_;
};

/// Gaussian elimination: a basis of the subgroup generated by `xs`.
/// An empty input yields the empty basis of the trivial subgroup.
Gf2Basis extract_basis(std::size_t n, std::span<const GroupElement> xs);

/// Basis of {g | g . b = 0 for every b in B}.
Gf2Basis orthogonal_complement(const Gf2Basis &basis);

/// True iff g lies in the span of `basis`.
bool contains(const Gf2Basis &basis, const GroupElement &g);

/// Every element of the span. Throws std::length_error when rank > 20.
std::vector<GroupElement> enumerate_span(const Gf2Basis &basis);

}  // namespace simonqp

#endif  // SIMONQP_GF2_HPP
