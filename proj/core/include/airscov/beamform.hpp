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

#ifndef AIRSCOV_BEAMFORM_HPP
#define AIRSCOV_BEAMFORM_HPP

#include "airscov/channel.hpp"
#include "airscov/scenario.hpp"

namespace airscov {

// How the N reflecting elements are split into contiguous sub-arrays, each
// steered to one ground target on the y = 0 segment. num_subarrays == 1 is
// the full-array mode. Sizes differ by at most one.
struct PartitionPlan {
    int num_subarrays = 1;
    std::vector<int> subarray_sizes;
    std::vector<GroundPoint> targets;
    std::vector<double> target_sins; // departure sine per target, at synthesis placement
};

// Per-element phase shifts, wrapped into [0, 2 pi), plus the partition that
// generated them and the common phase offset applied to every element.
struct PhasePlan {
    std::vector<double> phases;
    PartitionPlan partition;
    double common_phase = 0.0;
};

// Signed spread of departure sines over the area, relative to the area
// center: lo <= 0 <= hi, max_abs = max(|lo|, |hi|).
struct DeviationSpan {
    double max_abs = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

// Maximum-ratio transmit vector: the source steering vector toward the
// platform, normalized to unit norm. Optimal regardless of the ground point.
arma::cx_vec mrt_vector(const ScenarioConfig& cfg, const Placement& q);

// Received SNR (linear) under MRT transmit beamforming, reduced to the
// passive-array sum: no matrices, only the N-term phasor sum over elements
// divided by the concatenated two-hop path loss.
double snr_reduced(const ScenarioConfig& cfg, const Placement& q, const PhasePlan& plan,
                   const GroundPoint& w);

// Phase shifts that make all N reflected rays combine coherently at one
// target location (full-array plan, common phase zero).
PhasePlan optimal_phases_single(const ScenarioConfig& cfg, const Placement& q,
                                const GroundPoint& target);

// Power gain of an n-element sub-array steered with spacing_wl at spatial
// frequency deviation delta_sin from its target:
// |sin(pi n d delta) / sin(pi d delta)|^2, with the removable singularities
// (main lobe and grating lobes) evaluated as n^2 by the derivative limit.
double array_gain(double delta_sin, int n_elems, double spacing_wl);

// First-null beamwidth 2 / (n d) and half-power beamwidth 0.8858 / (n d) in
// spatial-frequency units.
double null_beamwidth(int n_elems, double spacing_wl);
double three_db_beamwidth(int n_elems, double spacing_wl);

DeviationSpan max_spatial_deviation(const ScenarioConfig& cfg, const Placement& q,
                                    const AreaGrid& grid);

// Full array if half the 3-dB beamwidth covers the worst deviation.
// Otherwise the smallest L >= 2 sub-arrays such that the per-partition
// deviation max_abs/L fits within half the 3-dB beamwidth of the smallest
// block; the signed deviation interval is split into L equal parts and each
// block targets the y = 0 point whose departure sine is its sub-interval
// midpoint (clamped to the area's x-range). Throws SolverError when no
// L <= N satisfies the coverage condition.
PartitionPlan choose_partition(const ScenarioConfig& cfg, const Placement& q,
                               const AreaGrid& grid);

// Per-element phases for a partition: each block gets the coherent phases of
// its own target, indexed by global element position.
PhasePlan synthesize_phases(const ScenarioConfig& cfg, const Placement& q,
                            const PartitionPlan& partition);

} // namespace airscov

#endif
