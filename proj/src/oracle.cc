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

#include "simonqp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "simonqp/errors.hpp"

namespace simonqp {

namespace {

std::uint64_t low_mask(std::size_t width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

// Coset bookkeeping for a hidden subgroup given by its reduced echelon basis:
// reducing g clears every pivot column, and dropping those columns yields a
// dense (n - rank)-bit coset index.
class CosetIndexer {
 public:
  explicit CosetIndexer(const Gf2Basis &hidden) : n_(hidden.dimension()) {
    for (const auto &v : hidden.vectors()) {
      vectors_.push_back(v.to_index());
      pivots_.push_back(v.lowest_set_bit());
      pivot_mask_ |= std::uint64_t{1} << pivots_.back();
    }
  }

  std::uint64_t representative(std::uint64_t g) const {
    for (std::size_t k = 0; k < vectors_.size(); ++k) {
      if ((g >> pivots_[k]) & 1) {
        g ^= vectors_[k];
      }
    }
    return g;
  }

  std::uint64_t index(std::uint64_t g) const {
    const std::uint64_t rep = representative(g);
    std::uint64_t out = 0;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if ((pivot_mask_ >> i) & 1) {
        continue;
      }
      out |= ((rep >> i) & 1) << pos++;
    }
    return out;
  }

  std::size_t index_bits() const { return n_ - vectors_.size(); }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> vectors_;
  std::vector<std::size_t> pivots_;
  std::uint64_t pivot_mask_ = 0;
};

// A keyed bijection of {0,1}^k used by lazily generated oracles.
std::uint64_t mix_bits(std::uint64_t x, std::size_t k, const std::uint64_t keys[4]) {
  if (k == 0) {
    return 0;
  }
  const std::uint64_t mask = low_mask(k);
  const std::size_t shift = (k + 1) / 2;
  for (int round = 0; round < 2; ++round) {
    x = (x * (keys[2 * round] | 1)) & mask;
    x ^= x >> shift;
    x = (x + keys[2 * round + 1]) & mask;
  }
  return x;
}

std::uint64_t splitmix64(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

namespace detail {

struct OracleData {
  std::size_t n = 0;
  std::size_t codomain_bits = 0;
  Gf2Basis hidden;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> table;
  bool lazy = false;
  std::uint64_t keys[4] = {0, 0, 0, 0};
  mutable std::atomic<std::uint64_t> queries{0};

  std::uint64_t lookup(std::uint64_t g) const {
    if (n < 64 && (g >> n) != 0) {
      throw std::out_of_range("oracle input outside {0,1}^" + std::to_string(n));
    }
    if (!lazy) {
      return table[g];
    }
    CosetIndexer indexer(hidden);
    return mix_bits(indexer.index(g), indexer.index_bits(), keys);
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// BlackBox

std::size_t BlackBox::n() const { return data_->n; }
std::size_t BlackBox::codomain_bits() const { return data_->codomain_bits; }

std::uint64_t BlackBox::evaluate(std::uint64_t g) const {
  data_->queries.fetch_add(1, std::memory_order_relaxed);
  return data_->lookup(g);
}

std::uint64_t BlackBox::evaluate(const GroupElement &g) const {
  if (g.size() != data_->n) {
    throw std::invalid_argument("oracle input has the wrong dimension");
  }
  return evaluate(g.to_index());
}

void BlackBox::apply(SparseState &state, std::size_t source, std::size_t target) const {
  if (data_->lazy) {
    throw CapExceeded("U_rho on a simulated state needs a tabulated oracle");
  }
  data_->queries.fetch_add(1, std::memory_order_relaxed);
  state.apply_function(data_->table, source, target);
}

void BlackBox::apply_uncounted(SparseState &state, std::size_t source, std::size_t target) const {
  if (data_->lazy) {
    throw CapExceeded("U_rho on a simulated state needs a tabulated oracle");
  }
  state.apply_function(data_->table, source, target);
}

void BlackBox::charge(std::uint64_t queries) const { data_->queries.fetch_add(queries, std::memory_order_relaxed); }

std::uint64_t BlackBox::queries() const { return data_->queries.load(std::memory_order_relaxed); }

// ---------------------------------------------------------------------------
// PromiseOracle

PromiseOracle::PromiseOracle(std::size_t n, std::size_t codomain_bits, std::vector<std::uint64_t> table,
                             Gf2Basis hidden, std::uint64_t seed)
    : data_(std::make_shared<detail::OracleData>()) {
  if (n == 0 || n > kMaxTabulatedDimension) {
    throw std::invalid_argument("tabulated oracles need 1 <= n <= " + std::to_string(kMaxTabulatedDimension));
  }
  if (codomain_bits > 63) {
    throw std::invalid_argument("codomain wider than 63 bits");
  }
  if (table.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("oracle table has " + std::to_string(table.size()) + " entries, expected 2^" +
                                std::to_string(n));
  }
  if (hidden.dimension() != n) {
    throw std::invalid_argument("hidden subgroup dimension does not match n");
  }
  for (auto v : table) {
    if ((v & ~low_mask(codomain_bits)) != 0) {
      throw std::invalid_argument("oracle value " + std::to_string(v) + " exceeds the codomain");
    }
  }
  data_->n = n;
  data_->codomain_bits = codomain_bits;
  data_->hidden = std::move(hidden);
  data_->seed = seed;
  data_->table = std::move(table);
  if (!verify_promise(*this, seed)) {
    throw InvariantViolation("oracle table does not fulfill the promise for its hidden subgroup");
  }
}

std::size_t PromiseOracle::n() const { return data_->n; }
std::size_t PromiseOracle::codomain_bits() const { return data_->codomain_bits; }
const Gf2Basis &PromiseOracle::hidden_basis() const { return data_->hidden; }
std::uint64_t PromiseOracle::seed() const { return data_->seed; }
bool PromiseOracle::tabulated() const { return !data_->lazy; }

std::span<const std::uint64_t> PromiseOracle::table() const {
  if (data_->lazy) {
    throw std::logic_error("lazily generated oracles have no materialized table");
  }
  return data_->table;
}

std::uint64_t PromiseOracle::value(std::uint64_t g) const { return data_->lookup(g); }
std::uint64_t PromiseOracle::query_count() const { return data_->queries.load(std::memory_order_relaxed); }
void PromiseOracle::reset_queries() const { data_->queries.store(0, std::memory_order_relaxed); }

PromiseOracle random_promise_oracle(std::size_t n, const Gf2Basis &hidden, std::size_t codomain_bits,
                                    std::uint64_t seed) {
  if (n == 0 || n > 64) {
    throw std::invalid_argument("oracle dimension must be in [1, 64]");
  }
  if (hidden.dimension() != n) {
    throw std::invalid_argument("hidden subgroup dimension does not match n");
  }
  const std::size_t coset_bits = n - hidden.rank();
  if (codomain_bits < coset_bits) {
    throw std::invalid_argument("codomain of " + std::to_string(codomain_bits) + " bits cannot separate 2^" +
                                std::to_string(coset_bits) + " cosets");
  }
  if (codomain_bits > 63) {
    throw std::invalid_argument("codomain wider than 63 bits");
  }
  auto data = std::make_shared<detail::OracleData>();
  data->n = n;
  data->codomain_bits = codomain_bits;
  data->hidden = hidden;
  data->seed = seed;
  Rng rng(seed);
  if (n > kMaxTabulatedDimension) {
    data->lazy = true;
    std::uint64_t state = seed;
    for (auto &k : data->keys) {
      k = splitmix64(state);
    }
    return PromiseOracle(std::move(data));
  }

  // Uniform injection: the first 2^coset_bits entries of a random ordering
  // of the codomain.
  const std::size_t cosets = std::size_t{1} << coset_bits;
  std::vector<std::uint64_t> values;
  if (codomain_bits <= kMaxTabulatedDimension) {
    values.resize(std::size_t{1} << codomain_bits);
    for (std::size_t v = 0; v < values.size(); ++v) {
      values[v] = v;
    }
    for (std::size_t k = 0; k < cosets; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, values.size() - 1);
      std::swap(values[k], values[pick(rng)]);
    }
    values.resize(cosets);
  } else {
    std::unordered_set<std::uint64_t> used;
    std::uniform_int_distribution<std::uint64_t> pick(0, low_mask(codomain_bits));
    while (values.size() < cosets) {
      std::uint64_t v = pick(rng);
      if (used.insert(v).second) {
        values.push_back(v);
      }
    }
  }
  CosetIndexer indexer(hidden);
  data->table.resize(std::size_t{1} << n);
  for (std::uint64_t g = 0; g < data->table.size(); ++g) {
    data->table[g] = values[indexer.index(g)];
  }
  return PromiseOracle(std::move(data));
}

PromiseOracle random_promise_oracle(std::size_t n, const Gf2Basis &hidden, std::size_t codomain_bits, Rng &rng) {
  return random_promise_oracle(n, hidden, codomain_bits, rng());
}

PromiseOracle random_simon_instance(std::size_t n, Rng &rng) {
  if (n < 2 || n > 64) {
    throw std::invalid_argument("Simon instances need 2 <= n <= 64");
  }
  std::uniform_int_distribution<std::uint64_t> pick(1, low_mask(n));
  Gf2Basis hidden(n);
  hidden.insert(GroupElement::from_index(n, pick(rng)));
  return random_promise_oracle(n, hidden, n - 1, rng());
}

PromiseOracle random_bijection(std::size_t n, Rng &rng) { return random_promise_oracle(n, Gf2Basis(n), n, rng()); }

Gf2Basis random_subgroup(std::size_t n, std::size_t rank, Rng &rng) {
  if (rank > n || n > 64) {
    throw std::invalid_argument("subgroup rank exceeds the dimension");
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, low_mask(n));
  Gf2Basis basis(n);
  while (basis.rank() < rank) {
    basis.insert(GroupElement::from_index(n, pick(rng)));
  }
  return basis;
}

bool verify_promise(const PromiseOracle &oracle, std::uint64_t sample_seed) {
  const std::size_t n = oracle.n();
  CosetIndexer indexer(oracle.hidden_basis());
  if (n <= 12) {
    // rho(g) = rho(h) <=> same coset, checked by mapping every g to its coset
    // representative: constant on cosets and injective on representatives.
    std::unordered_map<std::uint64_t, std::uint64_t> rep_of_value;
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << n); ++g) {
      const std::uint64_t rep = indexer.representative(g);
      const std::uint64_t v = oracle.value(g);
      if (v != oracle.value(rep)) {
        return false;
      }
      auto [it, inserted] = rep_of_value.emplace(v, rep);
      if (!inserted && it->second != rep) {
        return false;
      }
    }
    return true;
  }
  Rng rng(sample_seed ^ 0x5eed5eed5eedULL);
  std::uniform_int_distribution<std::uint64_t> pick(0, low_mask(n));
  const auto &hidden = oracle.hidden_basis();
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t g = pick(rng);
    std::uint64_t h = 0;
    for (const auto &v : hidden.vectors()) {
      if (rng() & 1) {
        h ^= v.to_index();
      }
    }
    if (oracle.value(g) != oracle.value(g ^ h)) {
      return false;
    }
    const std::uint64_t other = pick(rng);
    const bool same_coset = indexer.representative(g) == indexer.representative(other);
    if (same_coset != (oracle.value(g) == oracle.value(other))) {
      return false;
    }
  }
  return true;
}

nlohmann::json oracle_to_json(const PromiseOracle &oracle) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto &v : oracle.hidden_basis().vectors()) {
    basis.push_back(v.to_string());
  }
  auto table = oracle.table();
  return nlohmann::json{
      {"n", oracle.n()},
      {"codomain_bits", oracle.codomain_bits()},
      {"hidden_basis", basis},
      {"table", std::vector<std::uint64_t>(table.begin(), table.end())},
      {"seed", oracle.seed()},
  };
}

PromiseOracle oracle_from_json(const nlohmann::json &j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto codomain_bits = j.at("codomain_bits").get<std::size_t>();
    std::vector<GroupElement> generators;
    for (const auto &s : j.at("hidden_basis")) {
      generators.push_back(GroupElement::from_string(s.get<std::string>()));
      if (generators.back().size() != n) {
        throw std::invalid_argument("hidden basis element has the wrong length");
      }
    }
    auto table = j.at("table").get<std::vector<std::uint64_t>>();
    const auto seed = j.value("seed", std::uint64_t{0});
    if (n == 0) {
      throw std::invalid_argument("n must be positive");
    }
    Gf2Basis hidden = extract_basis(n, generators);
    if (hidden.rank() != generators.size()) {
      throw std::invalid_argument("hidden_basis is not linearly independent");
    }
    return PromiseOracle(n, codomain_bits, std::move(table), std::move(hidden), seed);
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("malformed oracle JSON: ") + e.what());
  } catch (const InvariantViolation &e) {
    throw std::invalid_argument(std::string("oracle JSON breaks the promise: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Balanced functions

BalancedFunction gamma_xor() {
  return BalancedFunction("parity", [](std::uint64_t x, std::size_t) { return (std::popcount(x) & 1) != 0; });
}

BalancedFunction gamma_msb() {
  return BalancedFunction("msb", [](std::uint64_t x, std::size_t n) { return ((x >> (n - 1)) & 1) != 0; });
}

BalancedFunction gamma_lsb() {
  return BalancedFunction("lsb", [](std::uint64_t x, std::size_t) { return (x & 1) != 0; });
}

BalancedFunction gamma_by_name(const std::string &name) {
  if (name == "parity" || name == "xor") {
    return gamma_xor();
  }
  if (name == "msb") {
    return gamma_msb();
  }
  if (name == "lsb") {
    return gamma_lsb();
  }
  throw std::invalid_argument("unknown balanced function \"" + name + "\" (expected parity, msb or lsb)");
}

}  // namespace simonqp
