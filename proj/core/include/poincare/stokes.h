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

#ifndef POINCARE_STOKES_H
#define POINCARE_STOKES_H

#include <cstdint>

#include "poincare/states.h"

namespace poincare {

struct StokesMatrices {
    HalfSpin spin;
    CMatrix s0, s1, s2, s3;

    /// k = 1, 2, 3.
    const CMatrix &axis(int k) const;
};

/// Cached per spin; the reference stays valid for the life of the process.
const StokesMatrices &stokes_matrices(HalfSpin s);
/// S . n for a (not necessarily unit) 3-vector.
CMatrix stokes_along(HalfSpin s, const Eigen::Vector3d &n);
/// S_+ = S_1 + i S_2.
CMatrix stokes_raising(HalfSpin s);

struct StokesMean {
    double s0;
    Eigen::Vector3d vec;
};

StokesMean stokes_mean(const LayerState &layer);
StokesMean stokes_mean(const PolarizationSector &sector);

/// Symmetrized covariance 1/2<{S_k,S_l}> - <S_k><S_l>.
Eigen::Matrix3d stokes_covariance(const LayerState &layer);
Eigen::Matrix3d stokes_covariance(const PolarizationSector &sector);
double variance_along(const LayerState &layer, const Eigen::Vector3d &n);

struct MinVariance {
    double lambda_min;
    Eigen::Vector3d axis;
    Direction n;
};

/// Smallest covariance eigenvalue; the eigenvector sign makes its largest component positive.
MinVariance min_variance_direction(const Eigen::Matrix3d &cov);
MinVariance min_variance_direction(const LayerState &layer);

/// xi_S^2 = (2/S) min Var over directions orthogonal to <S>; every direction when <S> = 0.
double xi_s_squared(const LayerState &layer);
/// xi_R^2 = 2S/|<S>|^2 times the same minimum, so coherent states give 1. DomainError for zero mean spin.
double xi_r_squared(const LayerState &layer);

struct Squeezing {
    double xi_s_sq;
    double xi_r_sq;
};
/// Both parameters; DomainError when <S> = 0.
Squeezing squeezing_parameters(const LayerState &layer);

/// Var(S_perp) < |<S>| < Var(S_perp') in the dark plane.
bool polarization_squeezed(const LayerState &layer);

/// min over pure states in H_S of Var(S_k)+Var(S_l), k != l in {1,2,3}.
double planar_uncertainty_min(HalfSpin s, int k, int l, int restarts = 50, std::uint64_t seed = 1);

struct Complementarity {
    double D;
    double V;
    double P;
    cplx g;
};

/// DomainError when <N_+> + <N_-> = 0.
Complementarity complementarity(const LayerState &layer);
Complementarity complementarity(const PolarizationSector &sector);

}  // namespace poincare

#endif
