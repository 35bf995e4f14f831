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

#include "simonqp/qstate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "simonqp/errors.hpp"

namespace simonqp {

namespace {

constexpr std::size_t kMaxSlabWidth = 26;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::uint64_t low_mask(std::size_t width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

void fwht(std::span<Amplitude> v, double scale) {
  const std::size_t size = v.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += half << 1) {
      for (std::size_t k = block; k < block + half; ++k) {
        Amplitude a = v[k];
        Amplitude b = v[k + half];
        v[k] = a + b;
        v[k + half] = a - b;
      }
    }
  }
  for (auto &a : v) {
    a *= scale;
  }
}

// Uniform double in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t k) {
  std::uint64_t z = master + k + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// RegisterLayout

RegisterLayout::RegisterLayout(std::vector<std::size_t> widths, std::size_t max_total_width)
    : widths_(std::move(widths)) {
  if (widths_.empty()) {
    throw std::invalid_argument("a register layout needs at least one register");
  }
  offsets_.reserve(widths_.size());
  for (auto w : widths_) {
    offsets_.push_back(total_);
    total_ += w;
  }
  if (total_ > std::min<std::size_t>(max_total_width, 64)) {
    throw CapExceeded("register layout of " + std::to_string(total_) + " bits exceeds the cap of " +
                      std::to_string(max_total_width));
  }
}

std::size_t RegisterLayout::width(std::size_t reg) const {
  if (reg >= widths_.size()) {
    throw std::out_of_range("register " + std::to_string(reg) + " does not exist");
  }
  return widths_[reg];
}

std::size_t RegisterLayout::offset(std::size_t reg) const {
  if (reg >= widths_.size()) {
    throw std::out_of_range("register " + std::to_string(reg) + " does not exist");
  }
  return offsets_[reg];
}

std::uint64_t RegisterLayout::mask(std::size_t reg) const {
  return low_mask(width(reg)) << offset(reg);
}

std::uint64_t RegisterLayout::pack(std::span<const std::uint64_t> values) const {
  if (values.size() != widths_.size()) {
    throw std::invalid_argument("label has " + std::to_string(values.size()) + " registers, layout has " +
                                std::to_string(widths_.size()));
  }
  std::uint64_t label = 0;
  for (std::size_t r = 0; r < values.size(); ++r) {
    if ((values[r] & ~low_mask(widths_[r])) != 0) {
      throw std::out_of_range("value " + std::to_string(values[r]) + " does not fit register " +
                              std::to_string(r));
    }
    label |= values[r] << offsets_[r];
  }
  return label;
}

std::vector<std::uint64_t> RegisterLayout::unpack(std::uint64_t label) const {
  std::vector<std::uint64_t> values(widths_.size());
  for (std::size_t r = 0; r < widths_.size(); ++r) {
    values[r] = value(label, r);
  }
  return values;
}

// ---------------------------------------------------------------------------
// BooleanPredicate

BooleanPredicate BooleanPredicate::constant(bool value) {
  return BooleanPredicate([value](std::uint64_t) { return value; });
}

BooleanPredicate BooleanPredicate::bit_is_set(std::size_t i) {
  return BooleanPredicate([i](std::uint64_t x) { return ((x >> i) & 1) != 0; });
}

// ---------------------------------------------------------------------------
// SparseState

namespace {

// Scatters the low bits of `index` onto the set bits of `mask`.
std::uint64_t deposit(std::uint64_t index, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t bit = 1; mask != 0; bit <<= 1) {
    const std::uint64_t low = mask & -mask;
    if (index & bit) {
      out |= low;
    }
    mask ^= low;
  }
  return out;
}

// Gathers the bits of x under `mask` into the low bits.
std::uint64_t extract(std::uint64_t x, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t bit = 1; mask != 0; bit <<= 1) {
    const std::uint64_t low = mask & -mask;
    if (x & low) {
      out |= bit;
    }
    mask ^= low;
  }
  return out;
}

// v[i] <-> v[i ^ flip] for every i with (i & cond) == cond; flip must not
// touch cond.
void swap_within_slab(std::vector<Amplitude> &v, std::uint64_t cond, std::uint64_t flip) {
  if (flip == 0) {
    return;
  }
  for (std::uint64_t i = 0; i < v.size(); ++i) {
    const std::uint64_t partner = i ^ flip;
    if ((i & cond) == cond && i < partner) {
      std::swap(v[i], v[partner]);
    }
  }
}

}  // namespace

SparseState init_zero(const RegisterLayout &layout, const StateConfig &config) {
  if (layout.total_width() > config.max_total_width) {
    throw CapExceeded("layout exceeds the configured total width");
  }
  if (layout.width(0) > kMaxSlabWidth) {
    throw CapExceeded("register 0 is wider than " + std::to_string(kMaxSlabWidth) + " bits");
  }
  SparseState state;
  state.layout_ = layout;
  state.config_ = config;
  state.active0_ = 0;
  state.slabs_.emplace(0, SparseState::Slab{Amplitude{1.0}});
  return state;
}

SparseState SparseState::from_entries(const RegisterLayout &layout,
                                      std::span<const std::pair<std::uint64_t, Amplitude>> entries,
                                      const StateConfig &config) {
  SparseState state = init_zero(layout, config);
  state.slabs_.clear();
  state.active0_ = layout.mask(0);
  const std::uint64_t mask0 = layout.mask(0);
  for (const auto &[label, amp] : entries) {
    if ((label & ~low_mask(layout.total_width())) != 0) {
      throw std::out_of_range("label outside the layout");
    }
    state.slab_for(state.slabs_, label & ~mask0)[label & mask0] += amp;
  }
  state.finish("from_entries");
  return state;
}

std::vector<std::uint64_t> SparseState::expansion() const {
  std::vector<std::uint64_t> xs(slab_size());
  std::uint64_t x = 0;
  for (auto &out : xs) {
    out = x;
    x = ((x | ~active0_) + 1) & active0_;
  }
  return xs;
}

void SparseState::set_active(std::uint64_t mask) {
  mask &= layout_.mask(0);
  if (mask == active0_) {
    return;
  }
  const std::vector<std::uint64_t> xs = expansion();
  const std::size_t new_size = std::size_t{1} << std::popcount(mask);
  if (slabs_.size() * new_size > config_.max_support) {
    throw CapExceeded("state support would exceed " + std::to_string(config_.max_support) + " amplitudes");
  }
  for (auto &kv : slabs_) {
    Slab next(new_size);
    for (std::size_t i = 0; i < kv.second.size(); ++i) {
      if (kv.second[i] != Amplitude{}) {
        next[extract(xs[i], mask)] = kv.second[i];
      }
    }
    kv.second = std::move(next);
  }
  active0_ = mask;
}

SparseState::Slab &SparseState::slab_for(std::unordered_map<std::uint64_t, Slab> &map, std::uint64_t rest) {
  auto it = map.find(rest);
  if (it != map.end()) {
    return it->second;
  }
  if ((map.size() + 1) * slab_size() > config_.max_support) {
    throw CapExceeded("state support would exceed " + std::to_string(config_.max_support) + " amplitudes");
  }
  return map.emplace(rest, Slab(slab_size())).first->second;
}

void SparseState::move_slab(std::unordered_map<std::uint64_t, Slab> &map, std::uint64_t rest, Slab &&slab) {
  auto [it, inserted] = map.try_emplace(rest);
  if (inserted) {
    it->second = std::move(slab);
    return;
  }
  for (std::size_t i = 0; i < slab.size(); ++i) {
    it->second[i] += slab[i];
  }
}

void SparseState::finish(const char *op) {
  const double threshold_sq = config_.prune_threshold * config_.prune_threshold;
  double norm = 0.0;
  std::uint64_t used = 0;
  for (auto it = slabs_.begin(); it != slabs_.end();) {
    bool any = false;
    auto &slab = it->second;
    for (std::size_t i = 0; i < slab.size(); ++i) {
      const double p = std::norm(slab[i]);
      if (p < threshold_sq) {
        slab[i] = 0.0;
      } else {
        any = true;
        used |= i;
        norm += p;
      }
    }
    it = any ? std::next(it) : slabs_.erase(it);
  }
  if (std::abs(norm - 1.0) > config_.norm_tolerance) {
    throw InvariantViolation(std::string(op) + ": squared norm drifted to " + std::to_string(norm));
  }
  // Drop register-0 columns that are zero in every stored label.
  const std::uint64_t used_columns = deposit(used, active0_);
  if (used_columns != active0_) {
    set_active(used_columns);
  }
  if (slabs_.size() * slab_size() > config_.max_support) {
    throw CapExceeded(std::string(op) + ": state support exceeds the configured cap");
  }
}

std::vector<std::uint64_t> SparseState::sorted_rests() const {
  std::vector<std::uint64_t> rests;
  rests.reserve(slabs_.size());
  for (const auto &kv : slabs_) {
    rests.push_back(kv.first);
  }
  std::sort(rests.begin(), rests.end());
  return rests;
}

Amplitude SparseState::amplitude(std::uint64_t label) const {
  const std::uint64_t mask0 = layout_.mask(0);
  const std::uint64_t x = label & mask0;
  if ((x & ~active0_) != 0) {
    return Amplitude{};
  }
  auto it = slabs_.find(label & ~mask0);
  return it == slabs_.end() ? Amplitude{} : it->second[extract(x, active0_)];
}

std::vector<std::pair<std::uint64_t, Amplitude>> SparseState::entries() const {
  const std::vector<std::uint64_t> xs = expansion();
  std::vector<std::pair<std::uint64_t, Amplitude>> out;
  for (auto rest : sorted_rests()) {
    const Slab &slab = slabs_.at(rest);
    for (std::size_t i = 0; i < slab.size(); ++i) {
      if (slab[i] != Amplitude{}) {
        out.emplace_back(rest | xs[i], slab[i]);
      }
    }
  }
  return out;
}

std::size_t SparseState::support_size() const {
  std::size_t count = 0;
  for (const auto &kv : slabs_) {
    count += static_cast<std::size_t>(
        std::count_if(kv.second.begin(), kv.second.end(), [](Amplitude a) { return a != Amplitude{}; }));
  }
  return count;
}

double SparseState::norm_squared() const {
  double total = 0.0;
  for (auto rest : sorted_rests()) {
    for (auto a : slabs_.at(rest)) {
      total += std::norm(a);
    }
  }
  return total;
}

std::string SparseState::dump(int precision) const {
  const double eps = 0.5 * std::pow(10.0, -precision);
  auto clean = [eps](double v) { return std::abs(v) < eps ? 0.0 : v; };
  std::ostringstream out;
  for (const auto &[label, amp] : entries()) {
    auto values = layout_.unpack(label);
    out << '(';
    for (std::size_t r = 0; r < values.size(); ++r) {
      out << (r ? "," : "") << values[r];
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "): %.*f%+.*fi\n", precision, clean(amp.real()), precision, clean(amp.imag()));
    out << buf;
  }
  return out.str();
}

void SparseState::append_register(std::size_t width) {
  std::vector<std::size_t> widths = layout_.widths();
  widths.push_back(width);
  layout_ = RegisterLayout(std::move(widths), config_.max_total_width);
}

void SparseState::apply_walsh_hadamard(std::size_t reg) {
  const std::size_t w = layout_.width(reg);
  if (w == 0) {
    throw std::invalid_argument("Walsh-Hadamard needs a register of width >= 1");
  }
  if (reg == 0) {
    set_active(layout_.mask(0));
    const double scale = std::pow(kInvSqrt2, static_cast<double>(w));
    for (auto &kv : slabs_) {
      fwht(kv.second, scale);
    }
    finish("walsh_hadamard");
    return;
  }
  const std::size_t size = slab_size();
  for (std::size_t b = 0; b < w; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << (layout_.offset(reg) + b);
    std::unordered_map<std::uint64_t, Slab> next;
    next.reserve(slabs_.size() * 2);
    for (const auto &kv : slabs_) {
      const std::uint64_t base = kv.first & ~bit;
      if (next.contains(base)) {
        continue;
      }
      auto it0 = slabs_.find(base);
      auto it1 = slabs_.find(base | bit);
      Slab &out0 = slab_for(next, base);
      Slab &out1 = slab_for(next, base | bit);
      const Amplitude *a0 = it0 == slabs_.end() ? nullptr : it0->second.data();
      const Amplitude *a1 = it1 == slabs_.end() ? nullptr : it1->second.data();
      for (std::size_t i = 0; i < size; ++i) {
        const Amplitude u = a0 ? a0[i] : Amplitude{};
        const Amplitude v = a1 ? a1[i] : Amplitude{};
        out0[i] = (u + v) * kInvSqrt2;
        out1[i] = (u - v) * kInvSqrt2;
      }
    }
    slabs_ = std::move(next);
  }
  finish("walsh_hadamard");
}

template <typename Relabel>
void SparseState::permute(Relabel relabel) {
  const std::uint64_t mask0 = layout_.mask(0);
  const std::vector<std::uint64_t> xs = expansion();
  std::unordered_map<std::uint64_t, Slab> next;
  next.reserve(slabs_.size());
  std::uint64_t cached_rest = ~std::uint64_t{0};
  Slab *cached = nullptr;
  for (const auto &[rest, slab] : slabs_) {
    for (std::size_t i = 0; i < slab.size(); ++i) {
      if (slab[i] == Amplitude{}) {
        continue;
      }
      const std::uint64_t label = relabel(rest | xs[i]);
      const std::uint64_t new_rest = label & ~mask0;
      if (cached == nullptr || new_rest != cached_rest) {
        cached = &slab_for(next, new_rest);
        cached_rest = new_rest;
      }
      (*cached)[extract(label & mask0, active0_)] = slab[i];
    }
  }
  slabs_ = std::move(next);
}

void SparseState::apply_function(std::span<const std::uint64_t> table, std::size_t source, std::size_t target) {
  if (source == target) {
    throw std::invalid_argument("U_f needs distinct source and target registers");
  }
  const std::size_t ws = layout_.width(source);
  const std::size_t wt = layout_.width(target);
  if (table.size() != (std::size_t{1} << ws)) {
    throw std::invalid_argument("function table has " + std::to_string(table.size()) + " entries, expected 2^" +
                                std::to_string(ws));
  }
  const std::uint64_t range = low_mask(wt);
  for (auto v : table) {
    if ((v & ~range) != 0) {
      throw std::out_of_range("function value " + std::to_string(v) + " does not fit the target register");
    }
  }
  const std::size_t off_t = layout_.offset(target);
  const std::size_t off_s = layout_.offset(source);
  const std::uint64_t mask_s = layout_.mask(source);
  if (source == 0) {
    // Each amplitude moves to the slab selected by f(x); cache slab pointers
    // per distinct function value inside one source slab.
    const std::vector<std::uint64_t> xs = expansion();
    std::unordered_map<std::uint64_t, Slab> next;
    next.reserve(slabs_.size());
    const bool flat = wt <= 20;
    std::vector<Slab *> flat_dest(flat ? std::size_t{1} << wt : 0, nullptr);
    std::vector<std::uint64_t> touched;
    std::unordered_map<std::uint64_t, Slab *> dest;
    for (const auto &[rest, slab] : slabs_) {
      for (auto v : touched) {
        flat_dest[v] = nullptr;
      }
      touched.clear();
      dest.clear();
      for (std::size_t i = 0; i < slab.size(); ++i) {
        if (slab[i] == Amplitude{}) {
          continue;
        }
        const std::uint64_t value = table[xs[i]];
        Slab *out;
        if (flat) {
          out = flat_dest[value];
          if (out == nullptr) {
            out = flat_dest[value] = &slab_for(next, rest ^ (value << off_t));
            touched.push_back(value);
          }
        } else {
          auto it = dest.find(value);
          if (it == dest.end()) {
            out = &slab_for(next, rest ^ (value << off_t));
            dest.emplace(value, out);
          } else {
            out = it->second;
          }
        }
        (*out)[i] = slab[i];
      }
    }
    slabs_ = std::move(next);
  } else {
    if (target == 0) {
      set_active(layout_.mask(0));
    }
    permute([&](std::uint64_t label) {
      const std::uint64_t fx = table[(label & mask_s) >> off_s];
      return label ^ (fx << off_t);
    });
  }
  finish("apply_function");
}

void SparseState::apply_phase_on_predicate(const BooleanPredicate &chi, Amplitude phase) {
  if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
    throw std::invalid_argument("phase must have modulus 1");
  }
  const std::vector<std::uint64_t> xs = expansion();
  std::vector<char> marked(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    marked[i] = chi(xs[i]) ? 1 : 0;
  }
  for (auto &kv : slabs_) {
    for (std::size_t i = 0; i < marked.size(); ++i) {
      if (marked[i]) {
        kv.second[i] *= phase;
      }
    }
  }
  finish("phase_on_predicate");
}

void SparseState::apply_phase_on_zero(std::span<const std::size_t> registers, Amplitude phase) {
  if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
    throw std::invalid_argument("phase must have modulus 1");
  }
  std::uint64_t rest_mask = 0;
  bool includes_group = false;
  for (auto r : registers) {
    if (r == 0) {
      includes_group = true;
      layout_.width(0);
    } else {
      rest_mask |= layout_.mask(r);
    }
  }
  for (auto &[rest, slab] : slabs_) {
    if ((rest & rest_mask) != 0) {
      continue;
    }
    if (includes_group) {
      slab[0] *= phase;
    } else {
      for (auto &a : slab) {
        a *= phase;
      }
    }
  }
  finish("phase_on_zero");
}

void SparseState::xor_where(std::uint64_t cond, std::uint64_t flip) {
  const std::uint64_t mask0 = layout_.mask(0);
  if ((cond & mask0 & ~active0_) != 0) {
    return;  // the condition needs a register-0 bit that is zero everywhere
  }
  set_active(active0_ | (flip & mask0));
  const std::uint64_t cond0 = extract(cond & mask0, active0_);
  const std::uint64_t flip0 = extract(flip & mask0, active0_);
  const std::uint64_t cond_rest = cond & ~mask0;
  const std::uint64_t flip_rest = flip & ~mask0;
  if (flip_rest == 0) {
    for (auto &[rest, slab] : slabs_) {
      if ((rest & cond_rest) == cond_rest) {
        swap_within_slab(slab, cond0, flip0);
      }
    }
    return;
  }
  std::unordered_map<std::uint64_t, Slab> next;
  next.reserve(slabs_.size() * 2);
  for (auto &[rest, slab] : slabs_) {
    if ((rest & cond_rest) != cond_rest) {
      move_slab(next, rest, std::move(slab));
      continue;
    }
    swap_within_slab(slab, cond0, flip0);
    if (cond0 == 0) {
      move_slab(next, rest ^ flip_rest, std::move(slab));
      continue;
    }
    // Entries with the register-0 condition bits set move to another slab.
    Slab *stay = nullptr;
    Slab *move = nullptr;
    for (std::size_t i = 0; i < slab.size(); ++i) {
      if (slab[i] == Amplitude{}) {
        continue;
      }
      Slab *&out = (i & cond0) == cond0 ? move : stay;
      if (out == nullptr) {
        out = &slab_for(next, (i & cond0) == cond0 ? rest ^ flip_rest : rest);
      }
      (*out)[i] = slab[i];
    }
  }
  slabs_ = std::move(next);
}

void SparseState::apply_controlled_not(Qubit control, Qubit target) {
  if (control == target) {
    throw std::invalid_argument("controlled NOT needs distinct control and target qubits");
  }
  if (control.bit >= layout_.width(control.reg) || target.bit >= layout_.width(target.reg)) {
    throw std::out_of_range("qubit index outside its register");
  }
  const std::uint64_t c = std::uint64_t{1} << (layout_.offset(control.reg) + control.bit);
  const std::uint64_t t = std::uint64_t{1} << (layout_.offset(target.reg) + target.bit);
  xor_where(c, t);
  finish("controlled_not");
}

void SparseState::apply_conditional_xor(Qubit condition, const GroupElement &y, std::size_t target) {
  if (condition.bit >= layout_.width(condition.reg)) {
    throw std::out_of_range("condition qubit outside its register");
  }
  if (y.size() != layout_.width(target)) {
    throw std::invalid_argument("XOR operand has dimension " + std::to_string(y.size()) + ", register has width " +
                                std::to_string(layout_.width(target)));
  }
  if (condition.reg == target && y.bit(condition.bit)) {
    throw std::invalid_argument("conditional XOR would flip its own condition qubit");
  }
  const std::uint64_t c = std::uint64_t{1} << (layout_.offset(condition.reg) + condition.bit);
  const std::uint64_t shift = y.to_index() << layout_.offset(target);
  xor_where(c, shift);
  finish("conditional_xor");
}

std::vector<std::pair<std::uint64_t, double>> SparseState::distribution(std::size_t reg) const {
  std::vector<std::pair<std::uint64_t, double>> out;
  if (reg == 0) {
    const std::vector<std::uint64_t> xs = expansion();
    std::vector<double> probs(xs.size(), 0.0);
    for (auto rest : sorted_rests()) {
      const Slab &slab = slabs_.at(rest);
      for (std::size_t i = 0; i < slab.size(); ++i) {
        probs[i] += std::norm(slab[i]);
      }
    }
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (probs[i] > 0.0) {
        out.emplace_back(xs[i], probs[i]);
      }
    }
    return out;
  }
  layout_.width(reg);
  std::vector<std::pair<std::uint64_t, double>> raw;
  for (auto rest : sorted_rests()) {
    double p = 0.0;
    for (auto a : slabs_.at(rest)) {
      p += std::norm(a);
    }
    raw.emplace_back(layout_.value(rest, reg), p);
  }
  std::sort(raw.begin(), raw.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
  for (const auto &[v, p] : raw) {
    if (!out.empty() && out.back().first == v) {
      out.back().second += p;
    } else {
      out.emplace_back(v, p);
    }
  }
  return out;
}

std::set<std::uint64_t> SparseState::support_values(std::size_t reg, double threshold) const {
  std::set<std::uint64_t> out;
  for (const auto &[v, p] : distribution(reg)) {
    if (p > threshold) {
      out.insert(v);
    }
  }
  return out;
}

std::uint64_t sample_distribution(std::span<const std::pair<std::uint64_t, double>> dist, Rng &rng) {
  double total = 0.0;
  for (const auto &vp : dist) {
    total += vp.second;
  }
  if (dist.empty() || total <= 0.0) {
    throw InvariantViolation("cannot sample from a zero-weight distribution");
  }
  const double u = uniform01(rng) * total;
  double acc = 0.0;
  for (const auto &[v, p] : dist) {
    acc += p;
    if (u < acc) {
      return v;
    }
  }
  return dist.back().first;
}

std::uint64_t SparseState::apply_measure(std::size_t reg, Rng &rng) {
  const auto dist = distribution(reg);
  if (dist.empty()) {
    throw InvariantViolation("cannot measure a zero-norm state");
  }
  const std::uint64_t outcome = sample_distribution(dist, rng);
  double kept = 0.0;
  const std::size_t kept_index = reg == 0 ? extract(outcome, active0_) : 0;
  for (auto it = slabs_.begin(); it != slabs_.end();) {
    if (reg == 0) {
      for (std::size_t i = 0; i < it->second.size(); ++i) {
        if (i != kept_index) {
          it->second[i] = 0.0;
        } else {
          kept += std::norm(it->second[i]);
        }
      }
      ++it;
    } else if (layout_.value(it->first, reg) != outcome) {
      it = slabs_.erase(it);
    } else {
      for (auto a : it->second) {
        kept += std::norm(a);
      }
      ++it;
    }
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (auto &kv : slabs_) {
    for (auto &a : kv.second) {
      a *= scale;
    }
  }
  finish("measure");
  return outcome;
}

// ---------------------------------------------------------------------------
// Value API

SparseState walsh_hadamard(SparseState state, std::size_t reg) {
  state.apply_walsh_hadamard(reg);
  return state;
}

SparseState apply_function(SparseState state, std::span<const std::uint64_t> table, std::size_t source,
                           std::size_t target) {
  state.apply_function(table, source, target);
  return state;
}

SparseState phase_on_predicate(SparseState state, const BooleanPredicate &chi, Amplitude phase) {
  state.apply_phase_on_predicate(chi, phase);
  return state;
}

SparseState phase_on_zero(SparseState state, std::span<const std::size_t> registers, Amplitude phase) {
  state.apply_phase_on_zero(registers, phase);
  return state;
}

SparseState controlled_not(SparseState state, Qubit control, Qubit target) {
  state.apply_controlled_not(control, target);
  return state;
}

SparseState conditional_xor(SparseState state, Qubit condition, const GroupElement &y, std::size_t target) {
  state.apply_conditional_xor(condition, y, target);
  return state;
}

Measurement measure(SparseState state, std::size_t reg, Rng &rng) {
  std::uint64_t value = state.apply_measure(reg, rng);
  return {value, std::move(state)};
}

std::set<std::uint64_t> support_values(const SparseState &state, std::size_t reg) {
  return state.support_values(reg);
}

}  // namespace simonqp
