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

#ifndef POINCARE_CLASSICAL_H
#define POINCARE_CLASSICAL_H

#include <Eigen/Core>

#include "poincare/transforms.h"
#include "poincare/types.h"

namespace poincare {

/// Field amplitudes in the circular basis {+, -}.
struct JonesVector {
    cplx a_plus;
    cplx a_minus;

    /// a_+ = (a_H + i a_V)/sqrt2, a_- = (i a_H + a_V)/sqrt2.
    static JonesVector from_hv(cplx a_h, cplx a_v);
    Eigen::Vector2cd hv() const;
    Eigen::Vector2cd vec() const { return {a_plus, a_minus}; }
    double intensity() const { return std::norm(a_plus) + std::norm(a_minus); }
};

using CoherenceMatrix = Eigen::Matrix2cd;

/// Half-normalized Stokes parameters: s0 = I/2, s3 the circular excess, s2 the H/V excess, s1 the diagonal excess.
struct ClassicalStokes {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0;

    Eigen::Vector4d vec() const { return {s0, s1, s2, s3}; }
    static ClassicalStokes from_vec(const Eigen::Vector4d &v) { return {v(0), v(1), v(2), v(3)}; }
    /// s0^2 - s1^2 - s2^2 - s3^2.
    double minkowski() const { return s0 * s0 - s1 * s1 - s2 * s2 - s3 * s3; }
};

/// Textbook normalization and labels: (I, H-V, D-A, R-L).
Eigen::Vector4d to_textbook(const ClassicalStokes &s);
ClassicalStokes from_textbook(const Eigen::Vector4d &t);

struct EllipseParams {
    double psi;  // [0, pi)
    double chi;  // [-pi/4, pi/4]
};

/// Orientation and ellipticity from H/V amplitudes. Throws DomainError for a zero field.
EllipseParams ellipse_params(cplx a_h, cplx a_v);

/// Poincare sphere angles of a Stokes vector and back.
EllipseParams sphere_angles(const ClassicalStokes &s);
ClassicalStokes stokes_from_angles(double s0, const EllipseParams &p);

CoherenceMatrix coherence_matrix(const JonesVector &a);
/// s_mu = Tr(J sigma_mu)/2.
ClassicalStokes stokes_from_coherence(const CoherenceMatrix &J);
ClassicalStokes stokes_from_jones(const JonesVector &a);
CoherenceMatrix coherence_from_stokes(const ClassicalStokes &s);

/// Throws DomainError unless J is Hermitian and PSD to 1e-12 with positive trace.
void validate_coherence(const CoherenceMatrix &J);

/// (l+ - l-)/(l+ + l-); the trace and determinant forms are checked against each other.
double classical_degree(const CoherenceMatrix &J);

struct ClassicalDecomposition {
    double degree;
    double intensity;
    CoherenceMatrix polarized;    // rank one, unit trace
    CoherenceMatrix unpolarized;  // identity / 2
};

/// J = I [(1 - P) J_unpol + P J_pol]. For P = 0 the polarized part defaults to the + projector.
ClassicalDecomposition decompose(const CoherenceMatrix &J);

/// -sum l_i ln l_i over trace-normalized eigenvalues.
double coherence_entropy(const CoherenceMatrix &J);
/// The same entropy as a function of the degree alone.
double entropy_from_degree(double P);

ClassicalStokes mueller_apply(const MuellerMatrix &M, const ClassicalStokes &s);
JonesVector jones_apply(const JonesMatrix &T, const JonesVector &a);

}  // namespace poincare

#endif
