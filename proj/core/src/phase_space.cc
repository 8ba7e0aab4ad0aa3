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

#include "poincare/phase_space.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <gsl/gsl_integration.h>

#include "poincare/angular.h"

namespace poincare {

SphereGrid SphereGrid::gauss_legendre(int n_theta, int n_phi) {
    if (n_theta < 1 || n_phi < 1) {
        throw std::invalid_argument("grid needs at least one node per axis");
    }
    SphereGrid g;
    gsl_integration_glfixed_table *t = gsl_integration_glfixed_table_alloc(n_theta);
    std::vector<std::pair<double, double>> nodes;
    for (int i = 0; i < n_theta; i++) {
        double x, w;
        gsl_integration_glfixed_point(-1, 1, i, &x, &w, t);
        nodes.emplace_back(std::acos(x), w);
    }
    gsl_integration_glfixed_table_free(t);
    std::sort(nodes.begin(), nodes.end());
    for (auto [th, w] : nodes) {
        g.thetas.push_back(th);
        g.theta_weights.push_back(w);
    }
    g.phi_weight = 2 * std::numbers::pi / n_phi;
    for (int j = 0; j < n_phi; j++) {
        g.phis.push_back(j * g.phi_weight);
    }
    return g;
}

double integrate(const SphereGrid &grid, const Eigen::MatrixXd &f) {
    double s = 0;
    for (size_t i = 0; i < grid.thetas.size(); i++) {
        s += grid.theta_weights[i] * f.row(i).sum();
    }
    return s * grid.phi_weight;
}

double q_layer(const LayerState &layer, const Direction &n) {
    CVector c = coherent_amplitudes(layer.spin(), n);
    return c.dot(layer.rho() * c).real();
}

double q_layer_from_multipoles(const MultipoleTable &table, const Direction &n) {
    HalfSpin s = table.spin();
    cplx acc = 0;
    for (int K = 0; K <= s.twice; K++) {
        cplx part = 0;
        for (int q = -K; q <= K; q++) {
            part += table.at(K, q) * spherical_harmonic(K, q, n);
        }
        acc += coherent_cg(s, K) * part;
    }
    return std::sqrt(4 * std::numbers::pi / s.dim()) * acc.real();
}

double q_total(const PolarizationSector &sector, const Direction &n) {
    double q = 0;
    for (const auto &l : sector.layers()) {
        q += l.spin.dim() * l.weight * q_layer(l.state, n);
    }
    return q;
}

double q_partial_layer(const LayerState &layer, int K, const Direction &n) {
    HalfSpin s = layer.spin();
    if (K < 0) {
        throw std::invalid_argument("partial rank K must be >= 0");
    }
    if (K > s.twice) {
        return 0;
    }
    MultipoleTable t = multipoles(layer);
    CVector c = coherent_amplitudes(s, n);
    cplx acc = 0;
    for (int q = -K; q <= K; q++) {
        acc += t.at(K, q) * c.dot(tensor_operator(s, K, q) * c);
    }
    return acc.real();
}

double q_partial(const PolarizationSector &sector, int K, const Direction &n) {
    double q = 0;
    for (const auto &l : sector.layers()) {
        q += l.spin.dim() * l.weight * q_partial_layer(l.state, K, n);
    }
    return q;
}

QSamples q_grid(const PolarizationSector &sector, const SphereGrid &grid, QKind kind, int K) {
    if (kind == QKind::layer) {
        if (sector.layers().size() != 1) {
            throw std::invalid_argument("layer Q grid needs a single-layer sector");
        }
        return q_grid(sector.layers()[0].state, grid);
    }
    QSamples out{grid, kind, K, Eigen::MatrixXd(grid.thetas.size(), grid.phis.size())};
    if (kind == QKind::total) {
        for (size_t i = 0; i < grid.thetas.size(); i++) {
            for (size_t j = 0; j < grid.phis.size(); j++) {
                out.values(i, j) = q_total(sector, grid.node(i, j));
            }
        }
        return out;
    }
    out.values.setZero();
    for (const auto &l : sector.layers()) {
        HalfSpin s = l.spin;
        if (K > s.twice || l.weight == 0) {
            continue;
        }
        MultipoleTable t = multipoles(l.state);
        std::vector<CMatrix> ops;
        for (int q = -K; q <= K; q++) {
            ops.push_back(tensor_operator(s, K, q));
        }
        for (size_t i = 0; i < grid.thetas.size(); i++) {
            for (size_t j = 0; j < grid.phis.size(); j++) {
                CVector c = coherent_amplitudes(s, grid.node(i, j));
                cplx acc = 0;
                for (int q = -K; q <= K; q++) {
                    acc += t.at(K, q) * c.dot(ops[q + K] * c);
                }
                out.values(i, j) += s.dim() * l.weight * acc.real();
            }
        }
    }
    return out;
}

QSamples q_grid(const LayerState &layer, const SphereGrid &grid) {
    QSamples out{grid, QKind::layer, 0, Eigen::MatrixXd(grid.thetas.size(), grid.phis.size())};
    for (size_t i = 0; i < grid.thetas.size(); i++) {
        for (size_t j = 0; j < grid.phis.size(); j++) {
            out.values(i, j) = q_layer(layer, grid.node(i, j));
        }
    }
    return out;
}

MultipoleTable multipoles_from_q(HalfSpin s, const QSamples &samples) {
    if (samples.kind != QKind::layer) {
        throw std::invalid_argument("multipole inversion needs layer Q samples");
    }
    const auto &g = samples.grid;
    MultipoleTable out(s);
    for (int K = 0; K <= s.twice; K++) {
        double scale = std::sqrt(s.dim() / (4 * std::numbers::pi)) / coherent_cg(s, K);
        for (int q = -K; q <= K; q++) {
            cplx acc = 0;
            for (size_t i = 0; i < g.thetas.size(); i++) {
                cplx row = 0;
                for (size_t j = 0; j < g.phis.size(); j++) {
                    row += samples.values(i, j) * std::conj(spherical_harmonic(K, q, g.node(i, j)));
                }
                acc += g.theta_weights[i] * row;
            }
            out.set(K, q, scale * g.phi_weight * acc);
        }
    }
    return out;
}

std::string q_csv(const QSamples &samples) {
    std::string out = "theta,phi,value\n";
    char buf[96];
    const auto &g = samples.grid;
    for (size_t i = 0; i < g.thetas.size(); i++) {
        for (size_t j = 0; j < g.phis.size(); j++) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", g.thetas[i], g.phis[j], samples.values(i, j));
            out += buf;
        }
    }
    return out;
}

std::vector<double> parse_q_csv(const std::string &csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "theta,phi,value") {
        throw std::invalid_argument("Q CSV must start with the header theta,phi,value");
    }
    std::vector<double> values;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto last = line.rfind(',');
        if (std::count(line.begin(), line.end(), ',') != 2) {
            throw std::invalid_argument("malformed Q CSV row: " + line);
        }
        std::size_t used = 0;
        std::string field = line.substr(last + 1);
        double v = 0;
        try {
            v = std::stod(field, &used);
        } catch (const std::logic_error &) {
            used = 0;
        }
        if (used == 0 || used != field.size()) {
            throw std::invalid_argument("malformed Q CSV value: " + line);
        }
        values.push_back(v);
    }
    return values;
}

double q_coherent_reference(HalfSpin s, const Direction &n0, const Direction &n) {
    return std::pow(0.5 * (1 + n.unit().dot(n0.unit())), s.twice);
}

double q_two_mode_coherent_reference(double nbar, const Direction &n0, const Direction &n) {
    double x = 0.5 * (1 + n.unit().dot(n0.unit()));
    return (1 + nbar * x) * std::exp(-nbar * (1 - x));
}

double q_tmsv_reference(double r, const Direction &n) {
    double t2 = std::pow(std::tanh(r), 2);
    double s2 = std::pow(std::sin(n.theta), 2);
    return std::pow(1 - t2 * s2, -1.5) / std::pow(std::cosh(r), 2);
}

}  // namespace poincare
