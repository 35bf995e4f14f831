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

#include "simonqp/report.hpp"

#include <sstream>

#ifndef SIMONQP_VERSION_STRING
#define SIMONQP_VERSION_STRING "0.0.0"
#endif

namespace simonqp {

std::string version_string() { return SIMONQP_VERSION_STRING; }

nlohmann::json basis_to_json(const Gf2Basis &basis) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &v : basis.vectors()) {
    out.push_back(v.to_string());
  }
  return out;
}

nlohmann::json solve_to_json(const SolveResult &result) {
  nlohmann::json out{
      {"basis", basis_to_json(result.basis)},
      {"orthogonal", basis_to_json(result.orthogonal)},
      {"rho_evaluations", result.rho_evaluations},
      {"iterations", result.iterations},
  };
  if (!result.q_runs.empty()) {
    out["q_runs"] = result.q_runs;
  }
  return out;
}

nlohmann::json element_to_json(const AbelianElement &g) { return g.residues; }

nlohmann::json subgroup_to_json(const AbelianSubgroup &h) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto &g : h.generators()) {
    gens.push_back(element_to_json(g));
  }
  return nlohmann::json{{"generators", gens}, {"order", h.order()}};
}

nlohmann::json to_json(const LawCheck &check) {
  return nlohmann::json{
      {"check_laws", check.passed ? "PASS" : "FAIL"},
      {"pairs_checked", check.pairs_checked},
      {"max_defect", check.max_defect},
      {"counterexample", check.counterexample},
  };
}

nlohmann::json to_json(const DlogResult &result) {
  return nlohmann::json{
      {"r", result.r},
      {"samples", result.samples},
      {"queries", result.queries},
      {"witness", element_to_json(result.witness)},
  };
}

std::string defeat_csv(const DefeatReport &r) {
  std::ostringstream out;
  out.precision(17);
  out << "n,budget,trials,gamma,seed,success_rate,collision_rate,bound,collision_bound,success_sigma,"
         "collision_sigma,verdict\n";
  out << r.n << ',' << r.budget << ',' << r.trials << ',' << r.gamma << ',' << r.seed << ',' << r.success_rate << ','
      << r.collision_rate << ',' << r.bound << ',' << r.collision_bound << ',' << r.success_sigma << ','
      << r.collision_sigma << ',' << r.verdict() << '\n';
  return out.str();
}

}  // namespace simonqp
