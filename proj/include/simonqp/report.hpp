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

#ifndef SIMONQP_REPORT_HPP
#define SIMONQP_REPORT_HPP

#include <string>

#include "json.hpp"
#include "simonqp/abelian.hpp"
#include "simonqp/classical.hpp"
#include "simonqp/gf2.hpp"
#include "simonqp/simon.hpp"

namespace simonqp {

/// Release version plus `git describe` of the build tree, if available.
std::string version_string();

/// Basis vectors as "g1g2...gn" strings.
nlohmann::json basis_to_json(const Gf2Basis &basis);

/// basis, orthogonal, rho_evaluations, iterations, q_runs.
nlohmann::json solve_to_json(const SolveResult &result);

nlohmann::json element_to_json(const AbelianElement &g);
/// generators and order.
nlohmann::json subgroup_to_json(const AbelianSubgroup &h);
nlohmann::json to_json(const LawCheck &check);
nlohmann::json to_json(const DlogResult &result);

/// Header line plus one data line.
std::string defeat_csv(const DefeatReport &report);

}  // namespace simonqp

#endif  // SIMONQP_REPORT_HPP
