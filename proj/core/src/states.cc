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

#include "poincare/states.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "poincare/angular.h"

namespace poincare {

namespace {

constexpr double kTol = 1e-12;

CVector gauge_fixed(CVector v) {
    Eigen::Index k;
    v.cwiseAbs().maxCoeff(&k);
    cplx ph = v(k) / std::abs(v(k));
    return v / ph;
}

}  // namespace

LayerState::LayerState(HalfSpin s, CMatrix rho, std::optional<CVector> ket)
    : spin_(s), rho_(std::move(rho)), ket_(std::move(ket)) {}

LayerState LayerState::from_ket(HalfSpin s, const CVector &ket) {
    if (ket.size() != s.dim()) {
        throw std::invalid_argument("ket dimension " + std::to_string(ket.size()) + " does not match 2S+1 = " +
                                    std::to_string(s.dim()));
    }
    double nrm = ket.norm();
    if (!(nrm > 0) || !std::isfinite(nrm)) {
        throw std::invalid_argument("ket has zero or non-finite norm");
    }
    // Kept verbatim when already unit length so serialization round trips are exact.
    CVector v = std::abs(nrm - 1) <= 4e-16 ? ket : CVector(ket / nrm);
    CMatrix rho = v * v.adjoint();
    return LayerState(s, std::move(rho), std::move(v));
}

LayerState LayerState::from_density(HalfSpin s, const CMatrix &rho) {
    if (rho.rows() != s.dim() || rho.cols() != s.dim()) {
        throw std::invalid_argument("density matrix must be (2S+1)x(2S+1) with 2S+1 = " + std::to_string(s.dim()));
    }
    if (!rho.allFinite()) {
        throw std::invalid_argument("density matrix has non-finite entries");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kTol) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    cplx tr = rho.trace();
    if (std::abs(tr - 1.0) > kTol) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    CMatrix h = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    if (es.eigenvalues().minCoeff() < -kTol) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
    // Pure input is stored through its ket so rho and the serialized amplitudes agree bit for bit.
    if (std::abs(es.eigenvalues()(s.dim() - 1) - 1.0) < 1e-10) {
        return from_ket(s, gauge_fixed(es.eigenvectors().col(s.dim() - 1)));
    }
    return LayerState(s, std::move(h), std::nullopt);
}

const CVector &LayerState::ket() const {
    if (!ket_) {
        throw std::logic_error("layer state is not pure");
    }
    return *ket_;
}

double LayerState::purity() const {
    return (rho_ * rho_).trace().real();
}

PolarizationSector::PolarizationSector(std::vector<Layer> layers) : layers_(std::move(layers)) {
    if (layers_.empty()) {
        throw std::invalid_argument("sector needs at least one layer");
    }
    double total = 0;
    for (size_t i = 0; i < layers_.size(); i++) {
        const auto &l = layers_[i];
        if (!(l.weight >= 0) || !std::isfinite(l.weight)) {
            throw std::invalid_argument("layer weight must be nonnegative");
        }
        if (l.state.spin() != l.spin) {
            throw std::invalid_argument("layer spin does not match its state");
        }
        if (i > 0 && !(layers_[i - 1].spin < l.spin)) {
            throw std::invalid_argument("layer spins must be strictly increasing");
        }
        total += l.weight;
    }
    if (std::abs(total - 1.0) > kTol) {
        throw std::invalid_argument("layer weights must sum to 1");
    }
}

PolarizationSector PolarizationSector::single(const LayerState &state) {
    return PolarizationSector({Layer{state.spin(), 1.0, state}});
}

double PolarizationSector::mean_photon_number() const {
    double n = 0;
    for (const auto &l : layers_) {
        n += l.weight * l.spin.twice;
    }
    return n;
}

int PolarizationSector::max_twice_spin() const {
    return layers_.back().spin.twice;
}

FockLabel FockLabel::from_spin(HalfSpin s, int m_twice) {
    s.index_of(m_twice);
    return FockLabel{(s.twice + m_twice) / 2, (s.twice - m_twice) / 2};
}

CVector coherent_amplitudes(HalfSpin s, const Direction &n) {
    int N = s.twice;
    double c = std::cos(0.5 * n.theta), sn = std::sin(0.5 * n.theta);
    CVector v(s.dim());
    for (int i = 0; i <= N; i++) {
        double mag = std::sqrt(binomial(N, i)) * std::pow(sn, i) * std::pow(c, N - i);
        v(i) = std::polar(mag, -(N - i) * n.phi);
    }
    return v;
}

LayerState su2_coherent(HalfSpin s, const Direction &n) {
    return LayerState::from_ket(s, coherent_amplitudes(s, n));
}

LayerState fock_layer(HalfSpin s, int m_twice) {
    CVector v = CVector::Zero(s.dim());
    v(s.index_of(m_twice)) = 1;
    return LayerState::from_ket(s, v);
}

LayerState noon(HalfSpin s) {
    if (s.twice == 0) {
        throw std::invalid_argument("NOON state needs S >= 1/2");
    }
    CVector v = CVector::Zero(s.dim());
    v(0) = 1 / std::sqrt(2.0);
    v(s.twice) = -1 / std::sqrt(2.0);
    return LayerState::from_ket(s, v);
}

LayerState unpolarized(HalfSpin s) {
    CMatrix rho = CMatrix::Identity(s.dim(), s.dim()) / double(s.dim());
    return LayerState::from_density(s, rho);
}

LayerState relative_phase_state(HalfSpin s, int r) {
    if (!(-s.twice - 1 < 2 * r && 2 * r <= s.twice + 1)) {
        throw std::invalid_argument("phase index r out of range for this spin");
    }
    double delta = 2 * std::numbers::pi * r / s.dim();
    CVector v(s.dim());
    for (int i = 0; i < s.dim(); i++) {
        v(i) = std::polar(1 / std::sqrt(double(s.dim())), -s.m(i) * delta);
    }
    return LayerState::from_ket(s, v);
}

LayerState first_order_unpolarized(double lambda) {
    if (!(lambda >= 0 && lambda <= 0.5)) {
        throw std::invalid_argument("lambda must lie in [0, 1/2]");
    }
    if (lambda == 0) {
        return fock_layer(HalfSpin(2), 0);
    }
    CMatrix rho = CMatrix::Zero(3, 3);
    rho(0, 0) = lambda;
    rho(1, 1) = 1 - 2 * lambda;
    rho(2, 2) = lambda;
    return LayerState::from_density(HalfSpin(2), rho);
}

namespace {

PolarizationSector renormalized(std::vector<Layer> layers) {
    long double total = 0;
    for (const auto &l : layers) {
        total += l.weight;
    }
    for (auto &l : layers) {
        l.weight = (double)(l.weight / total);
    }
    return PolarizationSector(std::move(layers));
}

void check_eps(double eps) {
    if (!(eps > 0 && eps < 1)) {
        throw std::invalid_argument("truncation eps must lie in (0, 1)");
    }
}

}  // namespace

PolarizationSector two_mode_coherent_sector(cplx alpha_plus, cplx alpha_minus, double eps) {
    check_eps(eps);
    double nbar = std::norm(alpha_plus) + std::norm(alpha_minus);
    if (nbar == 0) {
        return PolarizationSector::single(fock_layer(HalfSpin(0), 0));
    }
    Direction dir;
    dir.theta = 2 * std::atan2(std::abs(alpha_minus), std::abs(alpha_plus));
    dir.phi = std::arg(alpha_minus) - std::arg(alpha_plus);
    std::vector<Layer> layers;
    long double cum = 0;
    int cap = (int)(nbar + 60 * std::sqrt(nbar) + 200);
    for (int N = 0; N <= cap; N++) {
        long double w = std::exp(-(long double)nbar + N * std::log((long double)nbar) - log_factorial(N));
        cum += w;
        HalfSpin s(N);
        layers.push_back(Layer{s, (double)w, su2_coherent(s, dir)});
        if (1 - cum <= eps && N >= nbar) {
            break;
        }
    }
    return renormalized(std::move(layers));
}

PolarizationSector tmsv_sector(double r, double eps) {
    check_eps(eps);
    if (!(r >= 0)) {
        throw std::invalid_argument("squeezing r must be nonnegative");
    }
    long double t2 = std::pow(std::tanh((long double)r), 2);
    long double c2 = std::pow(std::cosh((long double)r), 2);
    std::vector<Layer> layers;
    long double cum = 0;
    for (int n = 0;; n++) {
        long double w = std::pow(t2, n) / c2;
        cum += w;
        HalfSpin s(2 * n);
        layers.push_back(Layer{s, (double)w, fock_layer(s, 0)});
        if (1 - cum <= eps || n > 100000) {
            break;
        }
    }
    return renormalized(std::move(layers));
}

}  // namespace poincare
