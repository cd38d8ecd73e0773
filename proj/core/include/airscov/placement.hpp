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

#ifndef AIRSCOV_PLACEMENT_HPP
#define AIRSCOV_PLACEMENT_HPP

#include "airscov/beamform.hpp"
#include "airscov/scenario.hpp"

namespace airscov {

enum class RatioRegime {
    kHigh,     // rho > 1/2: single optimum at the midpoint
    kCritical, // rho = 1/2: coalesced triple root at the midpoint
    kLow,      // rho < 1/2: two symmetric optima
};

// Optimal fraction(s) of the source-to-target segment at which to hover,
// as a function of rho = altitude / source-target distance. In the low
// regime roots are {1/2 - s, 1/2 + s} with s = sqrt(1/4 - rho^2), sorted
// ascending; otherwise the single root 1/2.
struct RatioSolution {
    double rho = 0.0;
    RatioRegime regime = RatioRegime::kHigh;
    std::vector<double> roots;
};

enum class StationaryKind { kMinimum, kMaximum };

struct StationaryPoint {
    double xi = 0.0;
    StationaryKind kind = StationaryKind::kMinimum;
};

// Stationary points of the concatenated-loss profile
// f(xi) = (xi^2 + rho^2)((xi - 1)^2 + rho^2), found as the real roots of the
// depressed cubic f'(xi) = 0 and classified by the sign pattern of f'
// around each root. Sorted ascending.
std::vector<StationaryPoint> cubic_stationary_points(double rho);

RatioSolution single_location_ratio(double rho);

// Coherent-combining SNR (dB) at `target` for a platform hovering at q:
// budget * ref^2 * M * N^2 / ((H^2+|q-t|^2)(H^2+|q|^2)), all phases aligned.
double single_location_snr_db(const ScenarioConfig& cfg, const Placement& q,
                              const GroundPoint& target);

struct SingleLocationSolution {
    RatioSolution ratio;
    Placement placement; // smaller root when two optima exist
    double snr_db = 0.0;
};

// Closed-form optimal hover point for a single known destination. Rejects a
// target at the source (zero distance).
SingleLocationSolution single_location_placement(const ScenarioConfig& cfg,
                                                 const GroundPoint& target);

struct WorstCase {
    double snr_db = 0.0;
    GroundPoint point;
    std::size_t index = 0; // first grid index attaining the minimum
};

WorstCase worst_case_snr(const ScenarioConfig& cfg, const Placement& q, const PhasePlan& plan,
                         const AreaGrid& grid);

struct SolveResult {
    Placement placement;
    PhasePlan phases;
    arma::cx_vec tx_beam;
    double worst_snr_db = 0.0;
    GroundPoint worst_point;
    std::vector<double> snr_map_db; // one entry per grid point, same order

    // Empirical check of the worst-point location: whether the grid arg-min
    // is the boundary point (x0 + Dx/2, 0), and the SNR at that point.
    // Callers should surface a violation rather than assume the claim.
    bool worst_at_boundary = false;
    double boundary_snr_db = 0.0;
};

// Max-min placement along the x-axis: for each lattice x in [x_lo, x_hi]
// build the partition, synthesize phases and record the worst grid SNR;
// returns the best candidate (ties to the smaller x). Rejects an empty
// lattice.
SolveResult placement_line_search(const ScenarioConfig& cfg, const AreaGrid& grid, double x_lo,
                                  double x_hi, double step_m);

} // namespace airscov

#endif
