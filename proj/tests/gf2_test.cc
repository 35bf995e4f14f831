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

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace simonqp;

namespace {

GroupElement g(const char *bits) { return GroupElement::from_string(bits); }

std::set<std::uint64_t> span_set(const Gf2Basis &b) {
  std::set<std::uint64_t> out;
  for (const auto &x : enumerate_span(b)) {
    out.insert(x.to_index());
  }
  return out;
}

/// Closure under xor by fixpoint iteration.
std::set<std::uint64_t> brute_closure(const std::vector<std::uint64_t> &xs) {
  std::set<std::uint64_t> s{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::uint64_t> next = s;
    for (auto a : s) {
      for (auto x : xs) {
        grew |= next.insert(a ^ x).second;
      }
    }
    s = std::move(next);
  }
  return s;
}

void expect_echelon(const Gf2Basis &b) {
  std::size_t prev = 0;
  bool first = true;
  for (const auto &v : b.vectors()) {
    const std::size_t p = v.lowest_set_bit();
    ASSERT_LT(p, b.dimension());
    if (!first) {
      EXPECT_GT(p, prev);
    }
    prev = p;
    first = false;
  }
  EXPECT_LE(b.rank(), b.dimension());
}

}  // namespace

TEST(GroupElement, TextAndIndexOrder) {
  const GroupElement x = g("110");
  EXPECT_TRUE(x.bit(0));
  EXPECT_TRUE(x.bit(1));
  EXPECT_FALSE(x.bit(2));
  EXPECT_EQ(x.to_index(), 3u);
  EXPECT_EQ(GroupElement::from_index(3, 3).to_string(), "110");
  EXPECT_THROW(GroupElement::from_string("102"), std::invalid_argument);
  EXPECT_TRUE(GroupElement::zero(5).is_zero());
}

TEST(GroupElement, WideElements) {
  GroupElement x(130);
  x.set_bit(129, true);
  x.set_bit(3, true);
  GroupElement y(130);
  y.set_bit(129, true);
  EXPECT_EQ((x ^ y).lowest_set_bit(), 3u);
  EXPECT_TRUE(dot(x, y));
  EXPECT_EQ(GroupElement::from_string(x.to_string()), x);
}

TEST(Dot, Examples) {
  EXPECT_FALSE(dot(g("11"), g("11")));
  EXPECT_TRUE(dot(g("10"), g("11")));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    EXPECT_FALSE(dot(GroupElement::from_index(8, rng() & 0xff), GroupElement::zero(8)));
  }
  EXPECT_THROW(dot(g("11"), g("110")), std::invalid_argument);
}

TEST(ExtractBasis, Examples) {
  std::vector<GroupElement> dup{g("11"), g("11")};
  const Gf2Basis b = extract_basis(2, dup);
  ASSERT_EQ(b.rank(), 1u);
  EXPECT_EQ(b.vectors()[0], g("11"));

  EXPECT_TRUE(extract_basis(3, {}).empty());

  std::vector<GroupElement> xs{g("110"), g("011"), g("101")};
  const Gf2Basis c = extract_basis(3, xs);
  EXPECT_EQ(c.rank(), 2u);
  EXPECT_EQ(span_set(c), brute_closure({3, 6, 5}));
  expect_echelon(c);
}

TEST(ExtractBasis, MatchesBruteClosure) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const std::size_t count = rng() % 17;
    std::vector<GroupElement> xs;
    std::vector<std::uint64_t> raw;
    for (std::size_t k = 0; k < count; ++k) {
      raw.push_back(rng() & ((std::uint64_t{1} << n) - 1));
      xs.push_back(GroupElement::from_index(n, raw.back()));
    }
    const Gf2Basis b = extract_basis(n, xs);
    expect_echelon(b);
    EXPECT_EQ(span_set(b), brute_closure(raw));
    EXPECT_EQ(extract_basis(n, b.vectors()), b);
  }
}

TEST(OrthogonalComplement, Examples) {
  const Gf2Basis all = orthogonal_complement(Gf2Basis(3));
  EXPECT_EQ(all.rank(), 3u);

  Gf2Basis b(2);
  b.insert(g("11"));
  const Gf2Basis c = orthogonal_complement(b);
  // Exhaustive: which of the 4 elements are orthogonal to 11.
  std::set<std::uint64_t> expected;
  for (std::uint64_t x = 0; x < 4; ++x) {
    if (!dot(GroupElement::from_index(2, x), g("11"))) {
      expected.insert(x);
    }
  }
  EXPECT_EQ(span_set(c), expected);
  EXPECT_EQ(c.vectors().size(), 1u);
  EXPECT_EQ(c.vectors()[0], g("11"));
}

TEST(OrthogonalComplement, DualityProperties) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    std::vector<GroupElement> xs;
    for (std::size_t k = 0, m = rng() % (n + 2); k < m; ++k) {
      xs.push_back(GroupElement::from_index(n, rng() & ((std::uint64_t{1} << n) - 1)));
    }
    const Gf2Basis b = extract_basis(n, xs);
    const Gf2Basis perp = orthogonal_complement(b);
    expect_echelon(perp);
    EXPECT_EQ(b.rank() + perp.rank(), n);
    for (const auto &x : enumerate_span(perp)) {
      for (const auto &y : b.vectors()) {
        EXPECT_FALSE(dot(x, y));
      }
    }
    EXPECT_EQ(orthogonal_complement(perp), b);
  }
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(Gf2Basis(2), GroupElement::zero(2)));
  Gf2Basis b(2);
  b.insert(g("11"));
  EXPECT_FALSE(contains(b, g("10")));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    std::vector<GroupElement> xs;
    for (int k = 0; k < 4; ++k) {
      xs.push_back(GroupElement::from_index(n, rng() & ((std::uint64_t{1} << n) - 1)));
    }
    const Gf2Basis c = extract_basis(n, xs);
    for (const auto &x : xs) {
      EXPECT_TRUE(contains(c, x));
    }
    const auto members = span_set(c);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      EXPECT_EQ(contains(c, GroupElement::from_index(n, x)), members.contains(x));
    }
  }
}

TEST(EnumerateSpan, Examples) {
  const auto z = enumerate_span(Gf2Basis(3));
  ASSERT_EQ(z.size(), 1u);
  EXPECT_TRUE(z[0].is_zero());

  Gf2Basis b(2);
  b.insert(g("10"));
  b.insert(g("01"));
  EXPECT_EQ(span_set(b), (std::set<std::uint64_t>{0, 1, 2, 3}));

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const Gf2Basis r = extract_basis(12, std::vector<GroupElement>{GroupElement::from_index(12, rng() & 0xfff),
                                                                   GroupElement::from_index(12, rng() & 0xfff),
                                                                   GroupElement::from_index(12, rng() & 0xfff)});
    EXPECT_EQ(span_set(r).size(), std::size_t{1} << r.rank());
  }

  Gf2Basis big(21);
  for (std::size_t i = 0; i < 21; ++i) {
    big.insert(GroupElement::unit(21, i));
  }
  EXPECT_THROW(enumerate_span(big), std::length_error);
}
