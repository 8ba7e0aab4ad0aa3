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

#include "poincare/classical.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "poincare/errors.h"

namespace poincare {

namespace {

const cplx I(0, 1);

Eigen::Matrix2cd pauli(int mu) {
    Eigen::Matrix2cd s;
    switch (mu) {
        case 0:
            s << 1, 0, 0, 1;
            break;
        case 1:
            s << 0, 1, 1, 0;
            break;
        case 2:
            s << 0, -I, I, 0;
            break;
        default:
            s << 1, 0, 0, -1;
    }
    return s;
}

Eigen::Vector2d eigenvalues(const CoherenceMatrix &J) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(J, Eigen::EigenvaluesOnly);
    return {std::max(0.0, es.eigenvalues()(1)), std::max(0.0, es.eigenvalues()(0))};
}

}  // namespace

JonesVector JonesVector::from_hv(cplx a_h, cplx a_v) {
    return {(a_h + I * a_v) / std::sqrt(2.0), (I * a_h + a_v) / std::sqrt(2.0)};
}

Eigen::Vector2cd JonesVector::hv() const {
    return {(a_plus - I * a_minus) / std::sqrt(2.0), (a_minus - I * a_plus) / std::sqrt(2.0)};
}

Eigen::Vector4d to_textbook(const ClassicalStokes &s) { return 2 * Eigen::Vector4d(s.s0, s.s2, s.s1, s.s3); }

ClassicalStokes from_textbook(const Eigen::Vector4d &t) { return {t(0) / 2, t(2) / 2, t(1) / 2, t(3) / 2}; }

EllipseParams ellipse_params(cplx a_h, cplx a_v) {
    double eh = std::abs(a_h), ev = std::abs(a_v);
    if (eh * eh + ev * ev == 0) {
        throw DomainError("ellipse of a zero field");
    }
    double delta = std::arg(a_v) - std::arg(a_h);
    double two_psi = std::atan2(2 * eh * ev * std::cos(delta), eh * eh - ev * ev);
    if (two_psi < 0) {
        two_psi += 2 * std::numbers::pi;
    }
    double sin2chi = std::clamp(2 * eh * ev * std::sin(delta) / (eh * eh + ev * ev), -1.0, 1.0);
    double psi = 0.5 * two_psi;
    if (psi >= std::numbers::pi) {
        psi -= std::numbers::pi;
    }
    return {psi, 0.5 * std::asin(sin2chi)};
}

EllipseParams sphere_angles(const ClassicalStokes &s) {
    double len = std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3);
    if (len == 0) {
        throw DomainError("sphere angles of an unpolarized vector");
    }
    double two_psi = std::atan2(s.s1, s.s2);
    if (two_psi < 0) {
        two_psi += 2 * std::numbers::pi;
    }
    return {0.5 * two_psi, 0.5 * std::asin(std::clamp(s.s3 / len, -1.0, 1.0))};
}

ClassicalStokes stokes_from_angles(double s0, const EllipseParams &p) {
    double c = std::cos(2 * p.chi);
    return {s0, s0 * c * std::sin(2 * p.psi), s0 * c * std::cos(2 * p.psi), s0 * std::sin(2 * p.chi)};
}

CoherenceMatrix coherence_matrix(const JonesVector &a) {
    Eigen::Vector2cd v = a.vec();
    return v * v.adjoint();
}

ClassicalStokes stokes_from_coherence(const CoherenceMatrix &J) {
    Eigen::Vector4d v;
    for (int mu = 0; mu < 4; mu++) {
        v(mu) = 0.5 * (J * pauli(mu)).trace().real();
    }
    return ClassicalStokes::from_vec(v);
}

ClassicalStokes stokes_from_jones(const JonesVector &a) { return stokes_from_coherence(coherence_matrix(a)); }

CoherenceMatrix coherence_from_stokes(const ClassicalStokes &s) {
    Eigen::Vector4d v = s.vec();
    CoherenceMatrix J = CoherenceMatrix::Zero();
    for (int mu = 0; mu < 4; mu++) {
        J += v(mu) * pauli(mu);
    }
    return J;
}

void validate_coherence(const CoherenceMatrix &J) {
    if (!J.allFinite() || (J - J.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw DomainError("coherence matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(J, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) < -1e-12) {
        throw DomainError("coherence matrix is not positive semidefinite");
    }
    if (!(J.trace().real() > 0)) {
        throw DomainError("zero intensity");
    }
}

double classical_degree(const CoherenceMatrix &J) {
    validate_coherence(J);
    double tr = J.trace().real();
    double purity_form = 2 * (J * J).trace().real() / (tr * tr) - 1;
    double det_form = 1 - 4 * J.determinant().real() / (tr * tr);
    if (std::abs(purity_form - det_form) > 1e-12) {
        throw std::logic_error("degree forms disagree");
    }
    Eigen::Vector2d l = eigenvalues(J);
    return (l(0) - l(1)) / (l(0) + l(1));
}

ClassicalDecomposition decompose(const CoherenceMatrix &J) {
    double P = classical_degree(J);
    double inten = J.trace().real();
    CoherenceMatrix pol = CoherenceMatrix::Zero();
    if (P > 1e-15) {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(J);
        Eigen::Vector2cd v = es.eigenvectors().col(1);
        pol = v * v.adjoint();
    } else {
        pol(0, 0) = 1;
    }
    return {P, inten, pol, 0.5 * CoherenceMatrix::Identity()};
}

double coherence_entropy(const CoherenceMatrix &J) {
    validate_coherence(J);
    Eigen::Vector2d l = eigenvalues(J);
    l /= l.sum();
    double h = 0;
    for (int i = 0; i < 2; i++) {
        if (l(i) > 0) {
            h -= l(i) * std::log(l(i));
        }
    }
    return h;
}

double entropy_from_degree(double P) {
    if (P < 0 || P > 1) {
        throw DomainError("degree outside [0, 1]");
    }
    double h = 0;
    for (double x : {(1 + P) / 2, (1 - P) / 2}) {
        if (x > 0) {
            h -= x * std::log(x);
        }
    }
    return h;
}

ClassicalStokes mueller_apply(const MuellerMatrix &M, const ClassicalStokes &s) {
    return ClassicalStokes::from_vec(M * s.vec());
}

JonesVector jones_apply(const JonesMatrix &T, const JonesVector &a) {
    Eigen::Vector2cd v = T * a.vec();
    return {v(0), v(1)};
}

}  // namespace poincare
