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

#ifndef AIRSCOV_SCENARIO_HPP
#define AIRSCOV_SCENARIO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace airscov {

// Thrown when an otherwise valid problem instance cannot be solved
// (infeasible sub-array partition, empty search lattice, ...).
class SolverError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A location on the ground plane (z = 0).
struct GroundPoint {
    double x_m = 0.0;
    double y_m = 0.0;
};

// Horizontal coordinate of the aerial reflecting surface. The altitude is a
// fixed scenario parameter, so the platform position is 2-D.
struct Placement {
    double x_m = 0.0;
    double y_m = 0.0;
};

// One complete problem instance. The source node sits at the origin, the
// rectangular coverage area is centered at (area_center_x_m, 0).
//
// All dB/dBm quantities are external-facing; internal computation is carried
// out in linear units. Element spacings are normalized by the carrier
// wavelength, so no absolute frequency appears anywhere.
struct ScenarioConfig {
    double altitude_m = 100.0;            // platform altitude H
    double area_center_x_m = 1000.0;      // x0
    double area_length_m = 1000.0;        // Dx (along x)
    double area_width_m = 600.0;          // Dy (along y), Dy <= Dx
    double tx_power_dbm = 20.0;           // P
    double noise_power_dbm = -110.0;      // sigma^2
    double ref_gain_db = -40.0;           // channel power at 1 m
    int tx_antennas = 16;                 // M
    int irs_elements = 200;               // N
    double irs_spacing_wavelengths = 0.1; // d/lambda, must be < 1
    double tx_spacing_wavelengths = 0.5;  // d0/lambda
    int grid_nx = 50;                     // area sampling resolution
    int grid_ny = 30;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    GroundPoint area_center() const { return {area_center_x_m, 0.0}; }
    double ref_gain_linear() const;
    // P / sigma^2 as a linear ratio.
    double snr_budget_linear() const;
};

double db_to_linear(double v_db);
double linear_to_db(double v_linear);

// Discretization of the coverage rectangle. Besides the uniform lattice the
// point list always contains the four corners, the area center and the
// boundary point (x0 + Dx/2, 0); duplicates are removed. Ordering is
// deterministic: lattice rows first (y outer, x inner), forced extras last.
struct AreaGrid {
    std::vector<GroundPoint> points;

    std::size_t size() const { return points.size(); }
    bool contains(const GroundPoint& p, double tol_m = 1e-9) const;
};

AreaGrid make_grid(const ScenarioConfig& cfg);

// Flat key/value configuration text: one "name = value" pair per line, '#'
// starts a comment. Keys are exactly the ScenarioConfig field names; unknown
// keys and malformed values raise std::invalid_argument naming the field.
ScenarioConfig load_config(std::istream& in);
ScenarioConfig load_config_file(const std::string& path);

// Applies one "field=value" override with per-field type checking.
void apply_override(ScenarioConfig& cfg, std::string_view key, std::string_view value);

} // namespace airscov

#endif
