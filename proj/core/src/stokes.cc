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

#include "poincare/stokes.h"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>

#include "optimize.h"
#include "poincare/errors.h"

namespace poincare {

const CMatrix &StokesMatrices::axis(int k) const {
    switch (k) {
        case 1:
            return s1;
        case 2:
            return s2;
        case 3:
            return s3;
    }
    throw std::invalid_argument("Stokes axis must be 1, 2 or 3");
}

CMatrix stokes_raising(HalfSpin s) {
    int d = s.dim();
    double S = s.value();
    CMatrix sp = CMatrix::Zero(d, d);
    for (int i = 1; i < d; i++) {
        double m = s.m(i);
        sp(i - 1, i) = std::sqrt(S * (S + 1) - m * (m + 1));
    }
    return sp;
}

const StokesMatrices &stokes_matrices(HalfSpin s) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<StokesMatrices>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(s.twice);
    if (it != cache.end()) {
        return *it->second;
    }
    int d = s.dim();
    auto m = std::make_unique<StokesMatrices>();
    m->spin = s;
    CMatrix sp = stokes_raising(s);
    CMatrix sm = sp.adjoint();
    m->s0 = CMatrix::Identity(d, d) * s.value();
    m->s1 = 0.5 * (sp + sm);
    m->s2 = (sp - sm) / cplx(0, 2);
    m->s3 = CMatrix::Zero(d, d);
    for (int i = 0; i < d; i++) {
        m->s3(i, i) = s.m(i);
    }
    auto &ref = *m;
    cache.emplace(s.twice, std::move(m));
    return ref;
}

CMatrix stokes_along(HalfSpin s, const Eigen::Vector3d &n) {
    const auto &m = stokes_matrices(s);
    return n.x() * m.s1 + n.y() * m.s2 + n.z() * m.s3;
}

namespace {

double expect(const CMatrix &rho, const CMatrix &op) {
    return (rho * op).trace().real();
}

Eigen::Vector3d mean_vec(const LayerState &layer) {
    const auto &m = stokes_matrices(layer.spin());
    return {expect(layer.rho(), m.s1), expect(layer.rho(), m.s2), expect(layer.rho(), m.s3)};
}

Eigen::Matrix3d second_moments(const LayerState &layer) {
    const auto &m = stokes_matrices(layer.spin());
    Eigen::Matrix3d out;
    for (int k = 1; k <= 3; k++) {
        for (int l = k; l <= 3; l++) {
            CMatrix anti = m.axis(k) * m.axis(l) + m.axis(l) * m.axis(k);
            out(k - 1, l - 1) = out(l - 1, k - 1) = 0.5 * expect(layer.rho(), anti);
        }
    }
    return out;
}

Eigen::Matrix2d dark_plane_covariance(const Eigen::Matrix3d &cov, const Eigen::Vector3d &v) {
    Eigen::Vector3d u = v.normalized();
    Eigen::Vector3d seed = std::abs(u.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    Eigen::Vector3d e1 = (seed - seed.dot(u) * u).normalized();
    Eigen::Vector3d e2 = u.cross(e1);
    Eigen::Matrix<double, 3, 2> b;
    b << e1, e2;
    return b.transpose() * cov * b;
}

constexpr double kZeroMean = 1e-12;

}  // namespace

StokesMean stokes_mean(const LayerState &layer) {
    return {layer.spin().value(), mean_vec(layer)};
}

StokesMean stokes_mean(const PolarizationSector &sector) {
    StokesMean out{0, Eigen::Vector3d::Zero()};
    for (const auto &l : sector.layers()) {
        out.s0 += l.weight * l.spin.value();
        out.vec += l.weight * mean_vec(l.state);
    }
    return out;
}

Eigen::Matrix3d stokes_covariance(const LayerState &layer) {
    Eigen::Vector3d v = mean_vec(layer);
    return second_moments(layer) - v * v.transpose();
}

Eigen::Matrix3d stokes_covariance(const PolarizationSector &sector) {
    Eigen::Matrix3d second = Eigen::Matrix3d::Zero();
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    for (const auto &l : sector.layers()) {
        second += l.weight * second_moments(l.state);
        v += l.weight * mean_vec(l.state);
    }
    return second - v * v.transpose();
}

double variance_along(const LayerState &layer, const Eigen::Vector3d &n) {
    Eigen::Vector3d u = n.normalized();
    return u.dot(stokes_covariance(layer) * u);
}

MinVariance min_variance_direction(const Eigen::Matrix3d &cov) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
    Eigen::Vector3d a = es.eigenvectors().col(0);
    Eigen::Index k;
    a.cwiseAbs().maxCoeff(&k);
    if (a(k) < 0) {
        a = -a;
    }
    return {es.eigenvalues()(0), a, Direction::from_vector(a)};
}

MinVariance min_variance_direction(const LayerState &layer) {
    return min_variance_direction(stokes_covariance(layer));
}

double xi_s_squared(const LayerState &layer) {
    if (layer.spin().twice == 0) {
        throw DomainError("squeezing parameters undefined for S = 0");
    }
    Eigen::Vector3d v = mean_vec(layer);
    Eigen::Matrix3d cov = stokes_covariance(layer);
    double vmin;
    if (v.norm() < kZeroMean) {
        vmin = min_variance_direction(cov).lambda_min;
    } else {
        vmin = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(dark_plane_covariance(cov, v)).eigenvalues()(0);
    }
    return 2.0 / layer.spin().value() * vmin;
}

double xi_r_squared(const LayerState &layer) {
    Eigen::Vector3d v = mean_vec(layer);
    if (v.norm() < kZeroMean) {
        throw DomainError("xi_R undefined: mean Stokes vector vanishes");
    }
    double S = layer.spin().value();
    return 2 * S * (xi_s_squared(layer) * S / 2.0) / v.squaredNorm();
}

Squeezing squeezing_parameters(const LayerState &layer) {
    return {xi_s_squared(layer), xi_r_squared(layer)};
}

bool polarization_squeezed(const LayerState &layer) {
    Eigen::Vector3d v = mean_vec(layer);
    if (v.norm() < kZeroMean) {
        return false;
    }
    Eigen::Vector2d ev =
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(dark_plane_covariance(stokes_covariance(layer), v)).eigenvalues();
    return ev(0) < v.norm() && v.norm() < ev(1);
}

double planar_uncertainty_min(HalfSpin s, int k, int l, int restarts, std::uint64_t seed) {
    if (k == l || k < 1 || k > 3 || l < 1 || l > 3) {
        throw std::invalid_argument("planar pair needs two distinct axes in {1,2,3}");
    }
    const auto &m = stokes_matrices(s);
    const CMatrix A = m.axis(k), B = m.axis(l);
    const CMatrix A2 = A * A, B2 = B * B;
    int d = s.dim();
    auto ket_of = [d](const std::vector<double> &x) {
        CVector v(d);
        v(0) = x[0];
        for (int i = 1; i < d; i++) {
            v(i) = cplx(x[2 * i - 1], x[2 * i]);
        }
        return v;
    };
    auto f = [&](const std::vector<double> &x) {
        CVector v = ket_of(x);
        double n2 = v.squaredNorm();
        if (!(n2 > 1e-300)) {
            return 1e300;
        }
        auto ex = [&](const CMatrix &op) { return v.dot(op * v).real() / n2; };
        double a = ex(A), b = ex(B);
        return ex(A2) - a * a + ex(B2) - b * b;
    };
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    double best = 1e300;
    for (int r = 0; r < restarts; r++) {
        std::vector<double> x(2 * d - 1);
        for (auto &xi : x) {
            xi = g(rng);
        }
        auto res = detail::nelder_mead(f, x, 0.3, 1e-10, 20000);
        for (int polish = 0; polish < 2; polish++) {
            res = detail::nelder_mead(f, res.x, 0.05, 1e-12, 20000);
        }
        best = std::min(best, res.value);
    }
    return best;
}

namespace {

Complementarity complementarity_from(double nplus, double nminus, cplx sp) {
    double total = nplus + nminus;
    if (!(total > 0)) {
        throw DomainError("complementarity undefined for the vacuum");
    }
    double prod = nplus * nminus;
    cplx g = prod > 0 ? sp / std::sqrt(prod) : cplx(0);
    double D = std::abs(nplus - nminus) / total;
    double V = 2 * std::sqrt(prod) / total * std::abs(g);
    double P = std::sqrt(std::max(0.0, 1 - 4 * prod * (1 - std::norm(g)) / (total * total)));
    return {D, V, P, g};
}

}  // namespace

Complementarity complementarity(const LayerState &layer) {
    return complementarity(PolarizationSector::single(layer));
}

Complementarity complementarity(const PolarizationSector &sector) {
    StokesMean mean = stokes_mean(sector);
    return complementarity_from(mean.s0 + mean.vec.z(), mean.s0 - mean.vec.z(), cplx(mean.vec.x(), mean.vec.y()));
}

}  // namespace poincare
