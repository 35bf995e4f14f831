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

#include "simonqp/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace simonqp {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

void require_same_dimension(const GroupElement &a, const GroupElement &b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(
        "dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

}  // namespace

GroupElement::GroupElement(std::size_t n) : n_(n), words_(words_for(n), 0) {
  if (n == 0) {
    throw std::invalid_argument("group elements need dimension n >= 1");
  }
}

GroupElement GroupElement::unit(std::size_t n, std::size_t i) {
  GroupElement g(n);
  g.set_bit(i, true);
  return g;
}

GroupElement GroupElement::from_index(std::size_t n, std::uint64_t index) {
  if (n > kWordBits) {
    throw std::out_of_range("integer encoding only covers n <= 64");
  }
  if (n < kWordBits && (index >> n) != 0) {
    throw std::out_of_range("index " + std::to_string(index) + " does not fit in " +
                            std::to_string(n) + " bits");
  }
  GroupElement g(n);
  g.words_[0] = index;
  return g;
}

GroupElement GroupElement::from_string(std::string_view bits) {
  if (bits.empty()) {
    throw std::invalid_argument("empty bitstring");
  }
  GroupElement g(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      g.set_bit(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bitstring may only contain 0 and 1: \"" + std::string(bits) + "\"");
    }
  }
  return g;
}

bool GroupElement::bit(std::size_t i) const {
  if (i >= n_) {
    throw std::out_of_range("bit index " + std::to_string(i) + " out of range");
  }
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
}

void GroupElement::set_bit(std::size_t i, bool value) {
  if (i >= n_) {
    throw std::out_of_range("bit index " + std::to_string(i) + " out of range");
  }
  std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void GroupElement::flip(std::size_t i) { set_bit(i, !bit(i)); }

bool GroupElement::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t GroupElement::popcount() const {
  std::size_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

std::size_t GroupElement::lowest_set_bit() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) {
      return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
  }
  return n_;
}

std::uint64_t GroupElement::to_index() const {
  if (n_ > kWordBits) {
    throw std::out_of_range("integer encoding only covers n <= 64");
  }
  return words_.empty() ? 0 : words_[0];
}

std::string GroupElement::to_string() const {
  std::string out(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (bit(i)) {
      out[i] = '1';
    }
  }
  return out;
}

GroupElement &GroupElement::operator^=(const GroupElement &other) {
  require_same_dimension(*this, other);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    words_[k] ^= other.words_[k];
  }
  return *this;
}

bool operator<(const GroupElement &a, const GroupElement &b) {
  if (a.n_ != b.n_) {
    return a.n_ < b.n_;
  }
  // Compare as integers, most significant word first.
  for (std::size_t k = a.words_.size(); k-- > 0;) {
    if (a.words_[k] != b.words_[k]) {
      return a.words_[k] < b.words_[k];
    }
  }
  return false;
}

bool dot(const GroupElement &g, const GroupElement &h) {
  require_same_dimension(g, h);
  std::uint64_t parity = 0;
  auto gw = g.words();
  auto hw = h.words();
  for (std::size_t k = 0; k < gw.size(); ++k) {
    parity ^= static_cast<std::uint64_t>(std::popcount(gw[k] & hw[k]));
  }
  return parity & 1;
}

std::vector<std::size_t> Gf2Basis::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(vectors_.size());
  for (const auto &v : vectors_) {
    out.push_back(v.lowest_set_bit());
  }
  return out;
}

GroupElement Gf2Basis::reduce(GroupElement g) const {
  if (g.size() != dimension_) {
    throw std::invalid_argument("element dimension does not match basis dimension");
  }
  for (const auto &v : vectors_) {
    if (g.bit(v.lowest_set_bit())) {
      g ^= v;
    }
  }
  return g;
}

bool Gf2Basis::insert(const GroupElement &g) {
  GroupElement r = reduce(g);
  if (r.is_zero()) {
    return false;
  }
  std::size_t pivot = r.lowest_set_bit();
  for (auto &v : vectors_) {
    if (v.bit(pivot)) {
      v ^= r;
    }
  }
  auto pos = std::lower_bound(vectors_.begin(), vectors_.end(), pivot,
                              [](const GroupElement &v, std::size_t p) { return v.lowest_set_bit() < p; });
  vectors_.insert(pos, std::move(r));
  return true;
}

Gf2Basis extract_basis(std::size_t n, std::span<const GroupElement> xs) {
  Gf2Basis basis(n);
  for (const auto &x : xs) {
    basis.insert(x);
    if (basis.rank() == n) {
      break;
    }
  }
  return basis;
}

Gf2Basis orthogonal_complement(const Gf2Basis &basis) {
  const std::size_t n = basis.dimension();
  std::vector<std::size_t> pivots = basis.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  // For every free column f: set v_f = 1 and v_p = b_f for the basis vector b
  // with pivot p. Then v . b = b_f + b_f = 0 because b vanishes on all other
  // pivot columns.
  Gf2Basis out(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    GroupElement v = GroupElement::unit(n, f);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (basis.vectors()[k].bit(f)) {
        v.set_bit(pivots[k], true);
      }
    }
    out.insert(v);
  }
  return out;
}

bool contains(const Gf2Basis &basis, const GroupElement &g) { return basis.reduce(g).is_zero(); }

std::vector<GroupElement> enumerate_span(const Gf2Basis &basis) {
  constexpr std::size_t kMaxRank = 20;
  if (basis.rank() > kMaxRank) {
    throw std::length_error("refusing to enumerate a span of rank " + std::to_string(basis.rank()));
  }
  std::vector<GroupElement> out;
  out.reserve(std::size_t{1} << basis.rank());
  out.push_back(GroupElement::zero(basis.dimension()));
  // Gray-code walk: each step toggles one basis vector.
  GroupElement current = out.front();
  const std::size_t total = std::size_t{1} << basis.rank();
  for (std::size_t step = 1; step < total; ++step) {
    current ^= basis.vectors()[static_cast<std::size_t>(std::countr_zero(step))];
    out.push_back(current);
  }
  return out;
}

}  // namespace simonqp
