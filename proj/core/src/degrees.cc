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

#include "poincare/degrees.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "optimize.h"
#include "poincare/angular.h"
#include "poincare/errors.h"
#include "poincare/multipoles.h"
#include "poincare/phase_space.h"
#include "poincare/stokes.h"

namespace poincare {

namespace {

constexpr double kRankTol = 1e-13;

struct KindName {
    DegreeKind kind;
    const char *name;
    const char *short_name;
};

constexpr KindName kKinds[] = {
    {DegreeKind::semiclassical, "semiclassical", "s"},
    {DegreeKind::semiclassical2, "semiclassical2", "s2"},
    {DegreeKind::semiclassical2_invariant, "semiclassical2_invariant", "s2inv"},
    {DegreeKind::hilbert_schmidt, "hilbert_schmidt", "hs"},
    {DegreeKind::trace, "trace", "t"},
    {DegreeKind::bures, "bures", "b"},
    {DegreeKind::chernoff, "chernoff", "c"},
    {DegreeKind::husimi, "husimi", "q"},
    {DegreeKind::distinguishability, "distinguishability", "d"},
    {DegreeKind::purity, "purity", "p"},
};

/// Eigenvalues in decreasing order; values below the rank tolerance are exact zeros.
Eigen::VectorXd spectrum(const LayerState &layer) {
    Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<CMatrix>(layer.rho(), Eigen::EigenvaluesOnly).eigenvalues();
    Eigen::VectorXd out = ev.reverse();
    for (auto &x : out) {
        if (x < kRankTol) {
            x = 0;
        }
    }
    return out;
}

double log_xi(const Eigen::VectorXd &lam, double t) {
    double s = 0;
    for (double x : lam) {
        if (x > 0) {
            s += std::pow(x, t);
        }
    }
    return std::log(s);
}

struct LayerSpectrum {
    double weight;
    int dim;
    Eigen::VectorXd lam;
};

std::vector<LayerSpectrum> spectra(const PolarizationSector &sector) {
    std::vector<LayerSpectrum> out;
    for (const auto &l : sector.layers()) {
        if (l.weight > 0) {
            out.push_back({l.weight, l.spin.dim(), spectrum(l.state)});
        }
    }
    return out;
}

/// [sum_S w (2S+1)^{1-1/t} xi_t^{1/t}]^t evaluated in the log domain; t = 0 is the limit.
double chernoff_objective(const std::vector<LayerSpectrum> &sp, double t) {
    if (t <= 0) {
        double best = 0;
        for (const auto &l : sp) {
            int rank = (int)(l.lam.array() > 0).count();
            best = std::max(best, double(rank) / l.dim);
        }
        return best;
    }
    std::vector<double> terms;
    for (const auto &l : sp) {
        terms.push_back(std::log(l.weight) + (1 - 1 / t) * std::log(double(l.dim)) + log_xi(l.lam, t) / t);
    }
    double mx = *std::max_element(terms.begin(), terms.end());
    double s = 0;
    for (double x : terms) {
        s += std::exp(x - mx);
    }
    return std::exp(t * (mx + std::log(s)));
}

}  // namespace

std::string to_string(DegreeKind kind) {
    for (const auto &k : kKinds) {
        if (k.kind == kind) {
            return k.name;
        }
    }
    return "unknown";
}

DegreeKind parse_degree_kind(const std::string &name) {
    for (const auto &k : kKinds) {
        if (name == k.name || name == k.short_name) {
            return k.kind;
        }
    }
    throw std::invalid_argument("unknown degree kind: " + name);
}

double semiclassical_degree(const PolarizationSector &sector, SemiclassicalVariant variant) {
    StokesMean mean = stokes_mean(sector);
    if (!(mean.s0 > 0)) {
        throw DomainError("semiclassical degree undefined for <S_0> = 0");
    }
    double casimir = 0;
    for (const auto &l : sector.layers()) {
        double S = l.spin.value();
        casimir += l.weight * S * (S + 1);
    }
    switch (variant) {
        case SemiclassicalVariant::s:
            return mean.vec.norm() / mean.s0;
        case SemiclassicalVariant::s2:
            return mean.vec.norm() / std::sqrt(casimir);
        case SemiclassicalVariant::s2inv: {
            double vmin = min_variance_direction(stokes_covariance(sector)).lambda_min;
            return std::sqrt(std::max(0.0, 1 - 3 * vmin / casimir));
        }
    }
    throw std::invalid_argument("unknown semiclassical variant");
}

DegreeReport distance_degree(const PolarizationSector &sector, DistanceMetric metric) {
    auto sp = spectra(sector);
    switch (metric) {
        case DistanceMetric::hilbert_schmidt: {
            double p = 0;
            for (const auto &l : sp) {
                p += l.weight * l.weight * (l.lam.squaredNorm() - 1.0 / l.dim);
            }
            return {DegreeKind::hilbert_schmidt, p, {}};
        }
        case DistanceMetric::trace: {
            double p = 0;
            for (const auto &l : sp) {
                int ms = 0;
                for (int n = 0; n < l.dim; n++) {
                    if (l.lam(n) >= 1.0 / l.dim - 1e-14) {
                        ms = n;
                    }
                }
                p += l.weight * (l.lam.head(ms + 1).sum() - double(ms + 1) / l.dim);
            }
            return {DegreeKind::trace, p, {}};
        }
        case DistanceMetric::bures: {
            double s = 0;
            for (const auto &l : sp) {
                double xi = l.lam.cwiseSqrt().sum();
                s += l.weight / l.dim * xi * xi;
            }
            return {DegreeKind::bures, 1 - std::sqrt(s), {}};
        }
        case DistanceMetric::chernoff: {
            auto f = [&](double t) { return chernoff_objective(sp, t); };
            constexpr int kScan = 200;
            double best_t = 0, best = f(0);
            for (int i = 1; i <= kScan; i++) {
                double t = double(i) / kScan;
                double v = f(t);
                if (v < best) {
                    best = v;
                    best_t = t;
                }
            }
            if (best_t > 0 && best_t < 1) {
                double lo = best_t - 1.0 / kScan, hi = best_t + 1.0 / kScan;
                double t = detail::golden_section(f, lo, best_t, hi, 1e-10, 200);
                double v = f(t);
                if (v < best) {
                    best = v;
                    best_t = t;
                }
            }
            return {DegreeKind::chernoff, 1 - best, {{"t_opt", best_t}}};
        }
    }
    throw std::invalid_argument("unknown distance metric");
}

double husimi_q_squared_mean(const PolarizationSector &sector) {
    int kmax = sector.max_twice_spin();
    std::vector<cplx> acc((kmax + 1) * (kmax + 1));
    for (const auto &l : sector.layers()) {
        if (l.weight == 0) {
            continue;
        }
        MultipoleTable t = multipoles(l.state);
        double base = l.weight * std::sqrt(double(l.spin.dim()));
        for (int K = 0; K <= l.spin.twice; K++) {
            double c = base * coherent_cg(l.spin, K);
            for (int q = -K; q <= K; q++) {
                acc[K * K + q + K] += c * t.at(K, q);
            }
        }
    }
    double s = 0;
    for (auto a : acc) {
        s += std::norm(a);
    }
    return s;
}

DegreeReport husimi_degree(const PolarizationSector &sector, bool grid_check) {
    double dq = husimi_q_squared_mean(sector) - 1;
    DegreeReport r{DegreeKind::husimi, dq / (dq + 1), {{"D_Q", dq}}};
    if (grid_check) {
        int n = sector.max_twice_spin();
        SphereGrid g = SphereGrid::gauss_legendre(std::max(64, n + 2), std::max(128, 2 * n + 4));
        QSamples q = q_grid(sector, g);
        double mean_sq = integrate(g, q.values.cwiseProduct(q.values)) / (4 * std::numbers::pi);
        r.meta["D_Q_grid"] = mean_sq - 1;
    }
    return r;
}

namespace {

/// Per-layer data for the averaged overlap sum_S w Tr(rho U rho U^dagger).
struct OverlapLayer {
    double weight;
    HalfSpin spin;
    CMatrix rho;
    Eigen::VectorXd m;
    CMatrix s2_vecs;
    Eigen::VectorXd s2_vals;
};

double overlap(const std::vector<OverlapLayer> &layers, double alpha, double beta, double gamma) {
    double total = 0;
    for (const auto &l : layers) {
        int d = l.spin.dim();
        CVector ph_b(d);
        for (int i = 0; i < d; i++) {
            ph_b(i) = std::polar(1.0, -beta * l.s2_vals(i));
        }
        CMatrix dy = l.s2_vecs * ph_b.asDiagonal() * l.s2_vecs.adjoint();
        CMatrix u(d, d);
        for (int i = 0; i < d; i++) {
            for (int j = 0; j < d; j++) {
                u(i, j) = std::polar(1.0, -alpha * l.m(i) - gamma * l.m(j)) * dy(i, j);
            }
        }
        CMatrix rotated = u * l.rho * u.adjoint();
        total += l.weight * (l.rho.cwiseProduct(rotated.transpose())).sum().real();
    }
    return total;
}

}  // namespace

DegreeReport distinguishability_degree(const PolarizationSector &sector, int restarts, std::uint64_t seed) {
    std::vector<OverlapLayer> layers;
    for (const auto &l : sector.layers()) {
        if (l.weight == 0) {
            continue;
        }
        const auto &sm = stokes_matrices(l.spin);
        Eigen::SelfAdjointEigenSolver<CMatrix> es(sm.s2);
        Eigen::VectorXd m(l.spin.dim());
        for (int i = 0; i < l.spin.dim(); i++) {
            m(i) = l.spin.m(i);
        }
        layers.push_back({l.weight, l.spin, l.state.rho(), m, es.eigenvectors(), es.eigenvalues()});
    }
    constexpr int kGrid = 24;
    const double two_pi = 2 * std::numbers::pi;
    struct Start {
        double value;
        double a, b, g;
    };
    std::vector<Start> starts;
    for (int i = 0; i < kGrid; i++) {
        for (int j = 0; j < kGrid; j++) {
            for (int k = 0; k < kGrid; k++) {
                double a = two_pi * i / kGrid, b = std::numbers::pi * j / (kGrid - 1), g = two_pi * k / kGrid;
                starts.push_back({overlap(layers, a, b, g), a, b, g});
            }
        }
    }
    int keep = std::max(1, std::min<int>(restarts, starts.size()));
    std::partial_sort(starts.begin(), starts.begin() + keep, starts.end(),
                      [](const Start &x, const Start &y) { return x.value < y.value; });
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.02, 0.02);
    double best = starts[0].value;
    auto f = [&](const std::vector<double> &x) { return overlap(layers, x[0], x[1], x[2]); };
    for (int r = 0; r < keep; r++) {
        std::vector<double> x0 = {starts[r].a + jitter(rng), starts[r].b + jitter(rng), starts[r].g + jitter(rng)};
        auto res = detail::nelder_mead(f, x0, 0.1, 1e-9, 4000);
        res = detail::nelder_mead(f, res.x, 0.01, 1e-11, 4000);
        best = std::min(best, res.value);
    }
    best = std::clamp(best, 0.0, 1.0);
    return {DegreeKind::distinguishability, std::sqrt(1 - best), {{"min_overlap", best}}};
}

DegreeReport purity_degree(const PolarizationSector &sector) {
    double p = 0;
    for (const auto &l : sector.layers()) {
        if (l.spin.twice == 0) {
            continue;
        }
        p += l.weight * (l.spin.dim() * l.state.purity() - 1) / l.spin.twice;
    }
    return {DegreeKind::purity, p, {}};
}

DegreeReport degree(const PolarizationSector &sector, DegreeKind kind, std::uint64_t seed) {
    switch (kind) {
        case DegreeKind::semiclassical:
            return {kind, semiclassical_degree(sector, SemiclassicalVariant::s), {}};
        case DegreeKind::semiclassical2:
            return {kind, semiclassical_degree(sector, SemiclassicalVariant::s2), {}};
        case DegreeKind::semiclassical2_invariant:
            return {kind, semiclassical_degree(sector, SemiclassicalVariant::s2inv), {}};
        case DegreeKind::hilbert_schmidt:
            return distance_degree(sector, DistanceMetric::hilbert_schmidt);
        case DegreeKind::trace:
            return distance_degree(sector, DistanceMetric::trace);
        case DegreeKind::bures:
            return distance_degree(sector, DistanceMetric::bures);
        case DegreeKind::chernoff:
            return distance_degree(sector, DistanceMetric::chernoff);
        case DegreeKind::husimi:
            return husimi_degree(sector);
        case DegreeKind::distinguishability:
            return distinguishability_degree(sector, 6, seed);
        case DegreeKind::purity:
            return purity_degree(sector);
    }
    throw std::invalid_argument("unknown degree kind");
}

}  // namespace poincare
