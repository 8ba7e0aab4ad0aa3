// Copyright 2026 The poincare Authors
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

#ifndef POINCARE_PHASE_SPACE_H
#define POINCARE_PHASE_SPACE_H

#include <algorithm>
#include <string>
#include <vector>

#include "poincare/multipoles.h"
#include "poincare/states.h"

namespace poincare {

/// Gauss-Legendre nodes in cos(theta) times uniform azimuths.
struct SphereGrid {
    std::vector<double> thetas;  // ascending
    std::vector<double> theta_weights;
    std::vector<double> phis;
    double phi_weight = 0;

    static SphereGrid gauss_legendre(int n_theta = 64, int n_phi = 128);
    int band_limit() const { return std::min<int>(thetas.size(), phis.size() / 2) - 1; }
    Direction node(int i, int j) const { return {thetas[i], phis[j]}; }
};

/// Integral over the sphere (not divided by 4 pi). Rows of f run over theta, columns over phi.
double integrate(const SphereGrid &grid, const Eigen::MatrixXd &f);

/// <S,n| rho |S,n>, in [0, 1].
double q_layer(const LayerState &layer, const Direction &n);
/// The same value from the multipole expansion over spherical harmonics.
double q_layer_from_multipoles(const MultipoleTable &table, const Direction &n);
/// sum_S (2S+1) w_S q_layer; (1/4 pi) times its integral is 1.
double q_total(const PolarizationSector &sector, const Direction &n);
/// Rank-K part of q_layer.
double q_partial_layer(const LayerState &layer, int K, const Direction &n);
/// Rank-K part of q_total; sum over K gives q_total.
double q_partial(const PolarizationSector &sector, int K, const Direction &n);

enum class QKind { layer, total, partial };

struct QSamples {
    SphereGrid grid;
    QKind kind = QKind::total;
    int rank = 0;
    Eigen::MatrixXd values;
};

/// Evaluates q_total (kind total) or q_partial (kind partial, rank K) on the grid, theta-major.
QSamples q_grid(const PolarizationSector &sector, const SphereGrid &grid, QKind kind = QKind::total, int K = 0);
QSamples q_grid(const LayerState &layer, const SphereGrid &grid);

/// Recovers rho_Kq from grid samples of q_layer.
MultipoleTable multipoles_from_q(HalfSpin s, const QSamples &samples);

/// theta,phi,value rows with 17 significant digits.
std::string q_csv(const QSamples &samples);
/// Parses q_csv output back into a row-major vector of values.
std::vector<double> parse_q_csv(const std::string &csv);

/// [(1 + n.n0)/2]^{2S}.
double q_coherent_reference(HalfSpin s, const Direction &n0, const Direction &n);
/// q_total of the two-mode coherent state with mean photon number nbar centred on n0.
double q_two_mode_coherent_reference(double nbar, const Direction &n0, const Direction &n);
/// q_total of the two-mode squeezed vacuum, summed in closed form over its |S,0> layers.
double q_tmsv_reference(double r, const Direction &n);

}  // namespace poincare

#endif
