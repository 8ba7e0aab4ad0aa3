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

#ifndef POINCARE_TRANSFORMS_H
#define POINCARE_TRANSFORMS_H

#include <vector>

#include "poincare/states.h"

namespace poincare {

using JonesMatrix = Eigen::Matrix2cd;
using MuellerMatrix = Eigen::Matrix4d;

/// exp(-i angle S.axis) by Hermitian eigendecomposition.
CMatrix rotation_unitary(HalfSpin s, const Eigen::Vector3d &axis, double angle);
LayerState rotate(const LayerState &state, const Direction &axis, double angle);
PolarizationSector rotate(const PolarizationSector &sector, const Direction &axis, double angle);
/// The 2x2 image exp(-i angle sigma.axis/2) of the same rotation.
Eigen::Matrix2cd su2_matrix(const Direction &axis, double angle);

/// D(n) = exp(-i phi S_3) exp(-i theta S_2).
CMatrix displacement(HalfSpin s, const Direction &n);

/// R_jk = 1/2 Tr(sigma_j U sigma_k U^-1). Throws unless U is special unitary to 1e-10.
Eigen::Matrix3d rotation_from_su2(const Eigen::Matrix2cd &U);

/// M_mu,nu = 1/2 Tr(sigma_mu T sigma_nu T^dagger) with sigma_0 = identity.
MuellerMatrix mueller_from_jones(const JonesMatrix &T);

struct PolarDecomposition {
    Eigen::Matrix2cd U;
    Eigen::Matrix2cd H;
    bool degenerate;
};

/// T = U H with H = (T^dagger T)^{1/2}. A singular T throws DegenerateInput unless allow_singular,
/// in which case U is completed from the singular vectors and the result is flagged.
PolarDecomposition polar_decompose(const JonesMatrix &T, bool allow_singular = false);

struct FockAmplitude {
    int n_plus;
    int n_minus;
    cplx c;
};
using TwoModeKet = std::vector<FockAmplitude>;

/// Fock amplitudes of |alpha_+, alpha_-> truncated at total weight 1 - eps.
TwoModeKet two_mode_coherent_ket(cplx alpha_plus, cplx alpha_minus, double eps = 1e-12);
/// Block-diagonal reduction: layer weights sum_m |c|^2, renormalized.
PolarizationSector polarization_sector(const TwoModeKet &ket);

/// Cross-Kerr evolution, amplitudes times exp(-i chi_t n_+ n_-).
TwoModeKet kerr_evolve(const TwoModeKet &ket, double chi_t);
/// Layer form: conjugation by diag exp(-i chi_t (S^2 - m^2)).
LayerState kerr_evolve(const LayerState &state, double chi_t);
PolarizationSector kerr_evolve(const PolarizationSector &sector, double chi_t);

}  // namespace poincare

#endif
