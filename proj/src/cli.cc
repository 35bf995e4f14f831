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

#include "simonqp/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "simonqp/abelian.hpp"
#include "simonqp/classical.hpp"
#include "simonqp/errors.hpp"
#include "simonqp/oracle.hpp"
#include "simonqp/report.hpp"
#include "simonqp/simon.hpp"

namespace simonqp {

namespace {

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    out.push_back(part);
  }
  return out;
}

std::uint64_t parse_uint(const std::string &text, const std::string &what) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument("malformed " + what + " \"" + text + "\"");
  }
  return v;
}

/// "random:RANK" picks the rank; returns nullopt for explicit bitstrings.
std::optional<std::size_t> random_rank(const std::string &spec) {
  const std::string prefix = "random:";
  if (spec.rfind(prefix, 0) != 0) {
    return std::nullopt;
  }
  return parse_uint(spec.substr(prefix.size()), "subgroup rank");
}

Gf2Basis parse_gf2_subgroup(std::size_t n, const std::string &spec) {
  std::vector<GroupElement> gens;
  for (const auto &s : split(spec, ',')) {
    if (s.empty()) {
      continue;
    }
    gens.push_back(GroupElement::from_string(s));
    if (gens.back().size() != n) {
      throw std::invalid_argument("subgroup generator " + s + " does not have length " + std::to_string(n));
    }
  }
  return extract_basis(n, gens);
}

AbelianElement parse_abelian_element(const AbelianGroupSpec &group, const std::string &text) {
  AbelianElement g;
  if (text.find(',') != std::string::npos || group.rank() == 1) {
    for (const auto &part : split(text, ',')) {
      g.residues.push_back(parse_uint(part, "residue"));
    }
  } else {
    if (text.size() != group.rank()) {
      throw std::invalid_argument("element \"" + text + "\" does not have " + std::to_string(group.rank()) +
                                  " digits");
    }
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed element \"" + text + "\"");
      }
      g.residues.push_back(static_cast<std::uint64_t>(c - '0'));
    }
  }
  group.check(g);
  return g;
}

void emit(std::ostream &out, nlohmann::json report, std::uint64_t seed) {
  report["version"] = version_string();
  report["seed"] = seed;
  out << report.dump() << '\n';
}

struct SolveArgs {
  std::size_t n = 0;
  std::string mode = "exact-opt";
  std::uint64_t seed = 1;
  std::string oracle = "random";
  std::string subgroup = "random:1";
  std::optional<std::size_t> codomain_bits;
  std::string write_oracle;
  std::string simulation = "reflection";
  std::size_t max_samples = 4096;
};

int cmd_solve(const SolveArgs &a, std::ostream &out, std::ostream &err) {
  std::optional<PromiseOracle> oracle;
  nlohmann::json report{{"command", "solve"}, {"mode", a.mode}, {"simulation", a.simulation}};
  if (a.oracle == "random") {
    if (a.n == 0) {
      throw std::invalid_argument("--n is required with a random oracle");
    }
    Gf2Basis hidden(a.n);
    if (auto rank = random_rank(a.subgroup)) {
      Rng rng(stream_seed(a.seed, 0));
      hidden = random_subgroup(a.n, *rank, rng);
    } else {
      hidden = parse_gf2_subgroup(a.n, a.subgroup);
    }
    oracle.emplace(random_promise_oracle(a.n, hidden, a.codomain_bits.value_or(a.n), stream_seed(a.seed, 1)));
    report["oracle"] = "random";
    report["subgroup"] = a.subgroup;
  } else {
    std::ifstream in(a.oracle);
    if (!in) {
      throw std::invalid_argument("cannot open oracle file " + a.oracle);
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception &e) {
      throw std::invalid_argument("malformed oracle file: " + std::string(e.what()));
    }
    oracle.emplace(oracle_from_json(j));
    if (a.n != 0 && a.n != oracle->n()) {
      throw std::invalid_argument("--n does not match the oracle file");
    }
    report["oracle"] = a.oracle;
  }
  if (!a.write_oracle.empty()) {
    std::ofstream file(a.write_oracle);
    file << oracle_to_json(*oracle).dump() << '\n';
    if (!file) {
      throw std::invalid_argument("cannot write oracle file " + a.write_oracle);
    }
  }

  SolverOptions options;
  options.simulation = a.simulation == "circuit" ? Simulation::kCircuit : Simulation::kReflection;
  options.max_samples = a.max_samples;
  Rng rng(stream_seed(a.seed, 2));
  const BlackBox box = oracle->black_box();
  SolveResult result;
  if (a.mode == "exact") {
    result = qp_solve(box, rng, options);
  } else if (a.mode == "exact-opt") {
    result = qp_solve_optimized(box, rng, options);
  } else {
    result = zqp_solve(box, rng, options);
  }
  const bool matches = result.basis == oracle->hidden_basis();
  report.update(solve_to_json(result));
  report["n"] = oracle->n();
  report["codomain_bits"] = oracle->codomain_bits();
  report["matches_hidden"] = matches;
  report["max_samples"] = a.max_samples;
  emit(out, report, a.seed);
  err << "solve: n=" << oracle->n() << " mode=" << a.mode << " rank=" << result.basis.rank()
      << " rho_evaluations=" << result.rho_evaluations << (matches ? " ok" : " MISMATCH") << '\n';
  if (!matches) {
    throw InvariantViolation("recovered subgroup differs from the hidden subgroup");
  }
  return kExitOk;
}

struct AdversaryArgs {
  std::size_t n = 0;
  std::size_t budget = 0;
  std::size_t trials = 10000;
  std::string gamma = "parity";
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::string format = "json";
};

int cmd_adversary(const AdversaryArgs &a, std::ostream &out, std::ostream &err) {
  if (a.n < 2) {
    throw std::invalid_argument("--n must be at least 2");
  }
  const DefeatReport r = defeat_experiment(a.n, a.trials, a.budget, gamma_by_name(a.gamma), a.seed, a.jobs);
  if (a.format == "csv") {
    out << defeat_csv(r);
  } else {
    nlohmann::json report = to_json(r);
    report["command"] = "adversary";
    report["jobs"] = a.jobs;
    emit(out, report, a.seed);
  }
  err << "adversary: n=" << r.n << " budget=" << r.budget << " success=" << r.success_rate
      << " collisions=" << r.collision_rate << " bound=" << r.bound << " verdict=" << r.verdict() << '\n';
  return kExitOk;
}

struct AbelianArgs {
  std::string group;
  std::string subgroup = "random:1";
  bool check_laws = false;
  bool dlog = false;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> zeta;
  std::optional<std::uint64_t> a;
  std::uint64_t seed = 1;
  std::size_t max_samples = 4096;
};

int cmd_abelian(const AbelianArgs &a, std::ostream &out, std::ostream &err) {
  nlohmann::json report{{"command", "abelian"}};
  if (a.dlog) {
    if (!a.p || !a.zeta || !a.a) {
      throw std::invalid_argument("--dlog needs --p, --zeta and --a");
    }
    Rng rng(stream_seed(a.seed, 1));
    const DlogResult r = discrete_log(*a.p, *a.zeta, *a.a, rng, a.max_samples);
    report["dlog"] = to_json(r);
    report["p"] = *a.p;
    report["zeta"] = *a.zeta;
    report["a"] = *a.a;
    report["verified"] = pow_mod(*a.zeta, r.r, *a.p) == *a.a;
    report["max_samples"] = a.max_samples;
    emit(out, report, a.seed);
    err << "abelian dlog: " << *a.zeta << "^" << r.r << " = " << *a.a << " mod " << *a.p << " after " << r.samples
        << " samples\n";
    return kExitOk;
  }
  if (a.group.empty()) {
    throw std::invalid_argument("--group is required");
  }
  const AbelianGroupSpec group = AbelianGroupSpec::parse(a.group);
  report["group"] = group.to_string();
  report["order"] = group.order();
  if (a.check_laws) {
    const LawCheck check = check_commutative_laws(group, 1e-9, a.seed);
    report.update(to_json(check));
    report["fourier_unitarity_defect"] = unitarity_defect(fourier(group));
    emit(out, report, a.seed);
    err << "abelian laws on " << group.to_string() << ": " << (check.passed ? "PASS" : "FAIL") << " ("
        << check.pairs_checked << " pairs)\n";
    if (!check.passed) {
      err << check.counterexample << '\n';
      return kExitInvariant;
    }
    return kExitOk;
  }
  Rng rng(stream_seed(a.seed, 0));
  AbelianSubgroup hidden;
  if (auto k = random_rank(a.subgroup)) {
    hidden = random_abelian_subgroup(group, *k, rng);
  } else {
    std::vector<AbelianElement> gens;
    for (const auto &part : split(a.subgroup, ';')) {
      if (!part.empty()) {
        gens.push_back(parse_abelian_element(group, part));
      }
    }
    hidden = AbelianSubgroup::generated_by(group, std::move(gens));
  }
  const AbelianOracle oracle = random_abelian_oracle(hidden, rng);
  Rng sampler(stream_seed(a.seed, 1));
  const AbelianSolveResult result = zqp_solve_abelian(oracle, sampler, a.max_samples);
  const bool matches = result.subgroup == hidden;
  report["subgroup"] = a.subgroup;
  report["hidden"] = subgroup_to_json(hidden);
  report["recovered"] = subgroup_to_json(result.subgroup);
  report["orthogonal"] = subgroup_to_json(result.orthogonal);
  report["samples"] = result.samples;
  report["queries"] = result.queries;
  report["matches_hidden"] = matches;
  report["max_samples"] = a.max_samples;
  emit(out, report, a.seed);
  err << "abelian: G=" << group.to_string() << " |H0|=" << hidden.order() << " samples=" << result.samples
      << (matches ? " ok" : " MISMATCH") << '\n';
  if (!matches) {
    throw InvariantViolation("recovered subgroup differs from the hidden subgroup");
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Simulation of the exact quantum algorithm for Simon's subgroup problem", "simonqp"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  SolveArgs solve;
  auto *s = app.add_subcommand("solve", "recover a hidden subgroup of Z_2^n");
  s->add_option("--n", solve.n, "dimension n");
  s->add_option("--mode", solve.mode, "solver")->check(CLI::IsMember({"exact", "exact-opt", "zqp"}));
  s->add_option("--seed", solve.seed, "master seed");
  s->add_option("--oracle", solve.oracle, "\"random\" or an oracle JSON file");
  s->add_option("--subgroup", solve.subgroup, "comma separated bitstrings or random:RANK");
  s->add_option("--codomain-bits", solve.codomain_bits, "codomain width of a random oracle (default n)");
  s->add_option("--write-oracle", solve.write_oracle, "save the oracle as JSON");
  s->add_option("--simulation", solve.simulation, "amplification simulation")
      ->check(CLI::IsMember({"reflection", "circuit"}));
  s->add_option("--max-samples", solve.max_samples, "sample cap of the zqp solver");

  AdversaryArgs adv;
  auto *d = app.add_subcommand("adversary", "classical collision adversary experiment");
  d->add_option("--n", adv.n, "dimension n")->required();
  d->add_option("--budget", adv.budget, "queries per trial")->required();
  d->add_option("--trials", adv.trials, "number of trials");
  d->add_option("--gamma", adv.gamma, "balanced function")->check(CLI::IsMember({"parity", "msb", "lsb"}));
  d->add_option("--seed", adv.seed, "master seed");
  d->add_option("--jobs", adv.jobs, "worker threads")->check(CLI::PositiveNumber);
  d->add_option("--format", adv.format, "output format")->check(CLI::IsMember({"json", "csv"}));

  AbelianArgs ab;
  auto *g = app.add_subcommand("abelian", "finite Abelian group experiments");
  g->add_option("--group", ab.group, "moduli m1,m2,...");
  g->add_option("--subgroup", ab.subgroup, "generators separated by ';' or random:COUNT");
  g->add_flag("--check-laws", ab.check_laws, "verify the commutative laws of F, tau and phi");
  g->add_flag("--dlog", ab.dlog, "solve a discrete logarithm");
  g->add_option("--p", ab.p, "prime modulus");
  g->add_option("--zeta", ab.zeta, "generator of Z_p*");
  g->add_option("--a", ab.a, "target element");
  g->add_option("--seed", ab.seed, "master seed");
  g->add_option("--max-samples", ab.max_samples, "sample cap");

  std::vector<std::string> argv_storage{"simonqp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &x : argv_storage) {
    argv.push_back(x.data());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (s->parsed()) {
      return cmd_solve(solve, out, err);
    }
    if (d->parsed()) {
      return cmd_adversary(adv, out, err);
    }
    return cmd_abelian(ab, out, err);
  } catch (const CapExceeded &e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const InvariantViolation &e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace simonqp
