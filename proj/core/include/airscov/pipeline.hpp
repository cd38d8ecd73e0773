// SPDX-License-Identifier: Apache-2.0
//
// airscov - aerial reflecting-surface coverage planner
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef AIRSCOV_PIPELINE_HPP
#define AIRSCOV_PIPELINE_HPP

#include <iosfwd>

#include "airscov/placement.hpp"
#include "airscov/scenario.hpp"

namespace airscov {

enum class SweepKind {
    kRatioCurve,     // optimal ratio coefficient(s) vs rho
    kGainProfile,    // array gain vs spatial-frequency deviation
    kElementsSweep,  // single-target SNR vs element count, optimal vs midpoint
    kPlacementSweep, // worst-case SNR vs hover x
    kPowerSweep,     // worst-case SNR vs transmit power, optimal vs benchmark
    kSingleLocation, // single-target SNR vs element count, chosen placement
};

enum class BenchmarkMode { kOptimal, kMidpoint, kAreaCenter };

struct SweepSpec {
    SweepKind kind = SweepKind::kRatioCurve;
    ScenarioConfig config;
    double start = 0.0; // abscissa lattice, inclusive of both ends
    double stop = 0.0;
    double step = 0.0;
    BenchmarkMode benchmark = BenchmarkMode::kMidpoint;
    std::vector<int> gain_elements = {50, 100, 200}; // curves of the gain profile
    GroundPoint single_target;                       // elements / single-location kinds
    double search_step_m = 10.0;                     // x lattice of the inner line search

    // Canonical lattice and benchmark for each kind, derived from cfg.
    static SweepSpec for_kind(SweepKind kind, const ScenarioConfig& cfg);
};

struct SweepColumn {
    std::string name;
    std::string unit; // empty when dimensionless
};

struct SweepResult {
    std::vector<SweepColumn> columns;
    std::vector<std::vector<double>> rows;
};

// End-to-end max-min solve: MRT transmit beam, per-candidate phase
// synthesis, x-axis line search over [0, x0 + Dx/2].
SolveResult solve(const ScenarioConfig& cfg, double search_step_m = 10.0);

SweepResult run_sweep(const SweepSpec& spec);

// Header "name [unit]" row followed by one row per lattice point, 15
// significant digits.
void write_csv(const SweepResult& result, std::ostream& out);

} // namespace airscov

#endif
