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

#ifndef AIRSCOV_CHANNEL_HPP
#define AIRSCOV_CHANNEL_HPP

#include <armadillo>
#include <span>

#include "airscov/scenario.hpp"

namespace airscov {

// Distances and spatial frequencies of the two hops of one reflected link.
//
// Angle convention: the source ULA and the reflecting ULA are modelled in
// the vertical plane through the link, so a spatial frequency is the sine of
// the angle measured from the nadir, signed by the x-offset of the link
// (sign(dx) * sqrt(dx^2 + dy^2) / d3d). For on-axis geometry this equals the
// x-component of the unit direction vector.
struct LinkGeometry {
    double dist_src_airs_m = 0.0; // source -> platform, 3-D
    double dist_airs_gnd_m = 0.0; // platform -> ground point, 3-D
    double sin_aoa_airs = 0.0;    // arrival at the platform from the source
    double sin_aod_airs = 0.0;    // departure from the platform to the ground
    double sin_aod_src = 0.0;     // departure from the source to the platform
};

// Free-space channel power gain of each hop: ref_gain / squared distance.
double path_gain_src_airs(const ScenarioConfig& cfg, const Placement& q);
double path_gain_airs_gnd(const ScenarioConfig& cfg, const Placement& q, const GroundPoint& w);

LinkGeometry link_geometry(const ScenarioConfig& cfg, const Placement& q, const GroundPoint& w);

// ULA steering vector, element k = exp(-j 2 pi k spacing sin). Unit-modulus
// entries, so its squared norm is n_elems. Rejects |sin_angle| > 1.
arma::cx_vec array_response(int n_elems, double spacing_wl, double sin_angle);

// Source -> platform channel matrix (N x M), a scaled rank-one outer product
// of the two steering vectors. The scalar propagation phase exp(-j 2 pi d /
// lambda) never affects any SNR; prop_wavelength_m only exists so tests can
// assert that invariance.
arma::cx_mat channel_src_airs(const ScenarioConfig& cfg, const Placement& q,
                              double prop_wavelength_m = 1.0);

// Platform -> ground channel vector (length N); its conjugate transpose is
// the receive-side row.
arma::cx_vec channel_airs_gnd(const ScenarioConfig& cfg, const Placement& q,
                              const GroundPoint& w, double prop_wavelength_m = 1.0);

// Received SNR (linear) evaluated by explicit dense matrix arithmetic:
// (P/sigma^2) |h^H diag(e^{j theta}) G v|^2. This is the ground-truth oracle
// for the reduced closed forms; it takes raw per-element phase shifts and a
// unit-norm transmit vector (rejected if off by more than 1e-12).
double snr_full(const ScenarioConfig& cfg, const Placement& q,
                std::span<const double> phase_shifts, const GroundPoint& w,
                const arma::cx_vec& tx_beam, double prop_wavelength_m = 1.0);

} // namespace airscov

#endif
