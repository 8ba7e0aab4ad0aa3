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

#include "poincare/transforms.h"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

#include "poincare/angular.h"
#include "poincare/errors.h"
#include "poincare/stokes.h"

namespace poincare {

namespace {

const Eigen::Matrix2cd &pauli(int k) {
    static const std::array<Eigen::Matrix2cd, 4> s = [] {
        std::array<Eigen::Matrix2cd, 4> p;
        p[0] << 1, 0, 0, 1;
        p[1] << 0, 1, 1, 0;
        p[2] << 0, cplx(0, -1), cplx(0, 1), 0;
        p[3] << 1, 0, 0, -1;
        return p;
    }();
    return s[k];
}

CMatrix hermitian_exp(const CMatrix &h, double angle) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    CVector ph(h.rows());
    for (int i = 0; i < h.rows(); i++) {
        ph(i) = std::polar(1.0, -angle * es.eigenvalues()(i));
    }
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

CMatrix rotation_unitary(HalfSpin s, const Eigen::Vector3d &axis, double angle) {
    double n = axis.norm();
    if (!(n > 0)) {
        throw std::invalid_argument("rotation axis must be nonzero");
    }
    return hermitian_exp(stokes_along(s, axis / n), angle);
}

LayerState rotate(const LayerState &state, const Direction &axis, double angle) {
    CMatrix u = rotation_unitary(state.spin(), axis.unit(), angle);
    if (state.is_pure()) {
        return LayerState::from_ket(state.spin(), u * state.ket());
    }
    CMatrix r = u * state.rho() * u.adjoint();
    return LayerState::from_density(state.spin(), 0.5 * (r + r.adjoint()));
}

PolarizationSector rotate(const PolarizationSector &sector, const Direction &axis, double angle) {
    std::vector<Layer> out;
    for (const auto &l : sector.layers()) {
        out.push_back({l.spin, l.weight, rotate(l.state, axis, angle)});
    }
    return PolarizationSector(std::move(out));
}

Eigen::Matrix2cd su2_matrix(const Direction &axis, double angle) {
    Eigen::Vector3d n = axis.unit();
    Eigen::Matrix2cd h = 0.5 * (n.x() * pauli(1) + n.y() * pauli(2) + n.z() * pauli(3));
    return hermitian_exp(h, angle);
}

CMatrix displacement(HalfSpin s, const Direction &n) {
    const auto &m = stokes_matrices(s);
    CMatrix rz = CMatrix::Zero(s.dim(), s.dim());
    for (int i = 0; i < s.dim(); i++) {
        rz(i, i) = std::polar(1.0, -n.phi * s.m(i));
    }
    return rz * hermitian_exp(m.s2, n.theta);
}

Eigen::Matrix3d rotation_from_su2(const Eigen::Matrix2cd &U) {
    if ((U.adjoint() * U - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-10 ||
        std::abs(U.determinant() - 1.0) > 1e-10) {
        throw std::invalid_argument("rotation_from_su2 needs a special unitary matrix");
    }
    Eigen::Matrix3d r;
    for (int j = 1; j <= 3; j++) {
        for (int k = 1; k <= 3; k++) {
            r(j - 1, k - 1) = 0.5 * (pauli(j) * U * pauli(k) * U.adjoint()).trace().real();
        }
    }
    return r;
}

MuellerMatrix mueller_from_jones(const JonesMatrix &T) {
    MuellerMatrix m;
    for (int mu = 0; mu < 4; mu++) {
        for (int nu = 0; nu < 4; nu++) {
            m(mu, nu) = 0.5 * (pauli(mu) * T * pauli(nu) * T.adjoint()).trace().real();
        }
    }
    return m;
}

PolarDecomposition polar_decompose(const JonesMatrix &T, bool allow_singular) {
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(T, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Vector2d sv = svd.singularValues();
    bool singular = !(sv(1) > 1e-14 * std::max(1.0, sv(0)));
    if (singular && !allow_singular) {
        throw DegenerateInput("polar decomposition of a singular Jones matrix (polarizer limit)");
    }
    Eigen::Matrix2cd V = svd.matrixV();
    PolarDecomposition out;
    out.U = svd.matrixU() * V.adjoint();
    out.H = V * sv.cast<cplx>().asDiagonal() * V.adjoint();
    out.degenerate = singular;
    return out;
}

TwoModeKet two_mode_coherent_ket(cplx alpha_plus, cplx alpha_minus, double eps) {
    if (!(eps > 0 && eps < 1)) {
        throw std::invalid_argument("truncation eps must lie in (0, 1)");
    }
    double nbar = std::norm(alpha_plus) + std::norm(alpha_minus);
    TwoModeKet out;
    long double cum = 0;
    int cap = (int)(nbar + 60 * std::sqrt(nbar) + 200);
    for (int N = 0; N <= cap; N++) {
        for (int np = N; np >= 0; np--) {
            int nm = N - np;
            long double lmag = -0.5L * nbar - 0.5L * (log_factorial(np) + log_factorial(nm));
            cplx c = std::pow(alpha_plus, np) * std::pow(alpha_minus, nm) * (double)std::exp(lmag);
            cum += std::norm(c);
            out.push_back({np, nm, c});
        }
        if (nbar == 0 || (1 - cum <= eps && N >= nbar)) {
            break;
        }
    }
    return out;
}

PolarizationSector polarization_sector(const TwoModeKet &ket) {
    std::map<int, CVector> blocks;
    for (const auto &a : ket) {
        if (a.n_plus < 0 || a.n_minus < 0) {
            throw std::invalid_argument("negative photon number in Fock amplitude");
        }
        HalfSpin s(a.n_plus + a.n_minus);
        auto it = blocks.find(s.twice);
        if (it == blocks.end()) {
            it = blocks.emplace(s.twice, CVector::Zero(s.dim())).first;
        }
        it->second(s.index_of(a.n_plus - a.n_minus)) += a.c;
    }
    std::vector<Layer> layers;
    long double total = 0;
    for (auto &[tw, v] : blocks) {
        total += v.squaredNorm();
    }
    if (!(total > 0)) {
        throw std::invalid_argument("two-mode ket has zero norm");
    }
    for (auto &[tw, v] : blocks) {
        double w = (double)(v.squaredNorm() / total);
        if (w == 0) {
            continue;
        }
        layers.push_back({HalfSpin(tw), w, LayerState::from_ket(HalfSpin(tw), v)});
    }
    double sum = 0;
    for (const auto &l : layers) {
        sum += l.weight;
    }
    for (auto &l : layers) {
        l.weight /= sum;
    }
    return PolarizationSector(std::move(layers));
}

TwoModeKet kerr_evolve(const TwoModeKet &ket, double chi_t) {
    TwoModeKet out = ket;
    for (auto &a : out) {
        a.c *= std::polar(1.0, -chi_t * double(a.n_plus) * double(a.n_minus));
    }
    return out;
}

LayerState kerr_evolve(const LayerState &state, double chi_t) {
    HalfSpin s = state.spin();
    CVector ph(s.dim());
    double S = s.value();
    for (int i = 0; i < s.dim(); i++) {
        double m = s.m(i);
        ph(i) = std::polar(1.0, -chi_t * (S * S - m * m));
    }
    if (state.is_pure()) {
        return LayerState::from_ket(s, ph.asDiagonal() * state.ket());
    }
    CMatrix r = ph.asDiagonal() * state.rho() * ph.conjugate().asDiagonal();
    return LayerState::from_density(s, r);
}

PolarizationSector kerr_evolve(const PolarizationSector &sector, double chi_t) {
    std::vector<Layer> out;
    for (const auto &l : sector.layers()) {
        out.push_back({l.spin, l.weight, kerr_evolve(l.state, chi_t)});
    }
    return PolarizationSector(std::move(out));
}

}  // namespace poincare
