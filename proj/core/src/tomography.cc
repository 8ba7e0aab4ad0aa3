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

#include "poincare/tomography.h"

#include <Eigen/SVD>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "optimize.h"
#include "poincare/angular.h"
#include "poincare/errors.h"
#include "poincare/stokes.h"
#include "poincare/transforms.h"

namespace poincare {

namespace {

double moment_prefactor(HalfSpin s) { return std::sqrt(4 * std::numbers::pi / s.dim()); }

/// sum_q rho_Kq Y_Kq(n), real by the conjugation symmetry.
double rank_projection(const MultipoleTable &table, int K, const Direction &n) {
    cplx acc = 0;
    for (int q = -K; q <= K; q++) {
        acc += table.at(K, q) * spherical_harmonic(K, q, n);
    }
    return acc.real();
}

Direction to_direction(const Eigen::Vector3d &v) { return Direction::from_vector(v.normalized()); }

std::vector<Eigen::Vector3d> spiral_start(int count, std::mt19937_64 &rng) {
    // Points on the upper hemisphere only, since antipodes describe the same line.
    std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
    double offset = u(rng);
    double golden = std::numbers::pi * (3 - std::sqrt(5.0));
    std::vector<Eigen::Vector3d> pts;
    for (int i = 0; i < count; i++) {
        double z = 1 - (i + 0.5) / count;
        double r = std::sqrt(1 - z * z);
        double phi = offset + golden * i;
        pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return pts;
}

void repel(std::vector<Eigen::Vector3d> &pts, int iterations) {
    int n = pts.size();
    for (int it = 0; it < iterations; it++) {
        std::vector<Eigen::Vector3d> force(n, Eigen::Vector3d::Zero());
        double fmax = 0;
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                if (i == j) {
                    continue;
                }
                for (double sgn : {1.0, -1.0}) {
                    Eigen::Vector3d d = pts[i] - sgn * pts[j];
                    double r = d.norm();
                    force[i] += d / (r * r * r);
                }
            }
            force[i] -= force[i].dot(pts[i]) * pts[i];
            fmax = std::max(fmax, force[i].norm());
        }
        if (fmax == 0) {
            break;
        }
        double step = 0.1 * (1 - double(it) / iterations) + 1e-3;
        for (int i = 0; i < n; i++) {
            pts[i] = (pts[i] + step * force[i] / fmax).normalized();
        }
    }
}

double condition_number(const Eigen::MatrixXd &a) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto &sv = svd.singularValues();
    double lo = sv(sv.size() - 1);
    return lo > 0 ? sv(0) / lo : std::numeric_limits<double>::infinity();
}

double min_line_angle(const std::vector<Direction> &dirs) {
    double best = std::numbers::pi / 2;
    for (size_t i = 0; i < dirs.size(); i++) {
        for (size_t j = 0; j < i; j++) {
            double c = std::min(1.0, std::abs(dirs[i].unit().dot(dirs[j].unit())));
            best = std::min(best, std::acos(c));
        }
    }
    return best;
}

/// Simplex descent on log condition number, keeping the minimum line angle above half its start value.
std::vector<Direction> refine_condition(int K, std::vector<Direction> dirs) {
    double floor_angle = 0.5 * min_line_angle(dirs);
    auto unpack = [](const std::vector<double> &x) {
        std::vector<Direction> d;
        for (size_t i = 0; i + 1 < x.size(); i += 2) {
            d.push_back(Direction{x[i], x[i + 1]});
        }
        return d;
    };
    auto f = [&](const std::vector<double> &x) {
        auto d = unpack(x);
        double pen = std::max(0.0, floor_angle - min_line_angle(d));
        return std::log(condition_number(design_matrix(K, d))) + 1e3 * pen;
    };
    std::vector<double> x;
    for (const auto &d : dirs) {
        x.push_back(d.theta);
        x.push_back(d.phi);
    }
    auto res = detail::nelder_mead(f, x, 0.05, 1e-3, 1000 * (2 * K + 1));
    auto out = unpack(res.x);
    for (auto &d : out) {
        d = to_direction(d.unit());
    }
    return out;
}

}  // namespace

double stokes_moment(const LayerState &layer, const Direction &n, int ell) {
    if (ell < 1) {
        throw std::invalid_argument("moment order must be at least 1");
    }
    CMatrix sn = stokes_along(layer.spin(), n.unit());
    CMatrix p = sn;
    for (int k = 1; k < ell; k++) {
        p = p * sn;
    }
    return (p * layer.rho()).trace().real();
}

double moment_coefficient(HalfSpin s, int K, int ell) {
    double f = 0;
    for (int i = 0; i < s.dim(); i++) {
        int m2 = s.m_twice(i);
        f += std::pow(0.5 * m2, ell) * clebsch_gordan(s.twice, m2, 2 * K, 0, s.twice, m2);
    }
    return f;
}

double moment_from_multipoles(const MultipoleTable &table, const Direction &n, int ell) {
    HalfSpin s = table.spin();
    double acc = 0;
    for (int K = ell % 2; K <= std::min(ell, s.twice); K += 2) {
        acc += moment_coefficient(s, K, ell) * rank_projection(table, K, n);
    }
    return moment_prefactor(s) * acc;
}

Eigen::MatrixXd design_matrix(int K, const std::vector<Direction> &dirs) {
    Eigen::MatrixXd a(dirs.size(), 2 * K + 1);
    for (size_t i = 0; i < dirs.size(); i++) {
        a(i, 0) = spherical_harmonic(K, 0, dirs[i]).real();
        for (int q = 1; q <= K; q++) {
            cplx y = spherical_harmonic(K, q, dirs[i]);
            a(i, 2 * q - 1) = 2 * y.real();
            a(i, 2 * q) = -2 * y.imag();
        }
    }
    return a;
}

DirectionSet design_directions(int K, std::uint64_t seed, double max_condition) {
    if (K < 1) {
        throw std::invalid_argument("design rank must be at least 1");
    }
    static std::mutex mu;
    static std::map<std::tuple<int, std::uint64_t, double>, DirectionSet> cache;
    auto key = std::make_tuple(K, seed, max_condition);
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    int count = 2 * K + 1;
    for (int attempt = 0; attempt < 10; attempt++) {
        std::mt19937_64 rng(seed + attempt);
        auto pts = spiral_start(count, rng);
        repel(pts, 500);
        DirectionSet set{K, {}, 0};
        for (auto &p : pts) {
            set.directions.push_back(to_direction(p));
        }
        set.condition = condition_number(design_matrix(K, set.directions));
        if (set.condition > max_condition) {
            set.directions = refine_condition(K, set.directions);
            set.condition = condition_number(design_matrix(K, set.directions));
        }
        if (set.condition <= max_condition) {
            std::lock_guard lock(mu);
            cache.emplace(key, set);
            return set;
        }
    }
    throw IllConditioned("no well-conditioned direction set of rank " + std::to_string(K));
}

std::vector<MomentSample> exact_moments(const LayerState &layer, int M, std::uint64_t seed) {
    std::vector<MomentSample> out;
    for (int ell = 1; ell <= M; ell++) {
        for (const auto &n : design_directions(ell, seed).directions) {
            out.push_back({n, ell, stokes_moment(layer, n, ell)});
        }
    }
    return out;
}

MultipoleTable reconstruct_multipoles(const std::vector<MomentSample> &moments, HalfSpin s, int M, double tikhonov) {
    if (M < 1 || M > s.twice) {
        throw std::invalid_argument("reconstruction rank must satisfy 1 <= M <= 2S");
    }
    MultipoleTable table(s);
    table.set(0, 0, 1 / std::sqrt(double(s.dim())));
    double pre = moment_prefactor(s);
    for (int K = 1; K <= M; K++) {
        std::vector<Direction> dirs;
        std::vector<double> rhs;
        for (const auto &mo : moments) {
            if (mo.ell != K) {
                continue;
            }
            double known = 0;
            for (int Kp = K % 2; Kp < K; Kp += 2) {
                known += moment_coefficient(s, Kp, K) * rank_projection(table, Kp, mo.n);
            }
            dirs.push_back(mo.n);
            rhs.push_back(mo.value / pre - known);
        }
        double fkk = moment_coefficient(s, K, K);
        if ((int)dirs.size() < 2 * K + 1 || std::abs(fkk) < 1e-12) {
            throw IllConditioned("not enough independent moments for rank " + std::to_string(K));
        }
        Eigen::MatrixXd a = design_matrix(K, dirs) * fkk;
        Eigen::VectorXd b = Eigen::Map<Eigen::VectorXd>(rhs.data(), rhs.size());
        if (condition_number(a) > 1e12) {
            throw IllConditioned("singular design system at rank " + std::to_string(K));
        }
        Eigen::VectorXd x;
        if (tikhonov > 0) {
            Eigen::MatrixXd n = a.transpose() * a;
            n.diagonal().array() += tikhonov;
            x = n.ldlt().solve(a.transpose() * b);
        } else {
            x = a.colPivHouseholderQr().solve(b);
        }
        table.set(K, 0, x(0));
        for (int q = 1; q <= K; q++) {
            cplx v(x(2 * q - 1), x(2 * q));
            table.set(K, q, v);
            table.set(K, -q, (q % 2 ? -1.0 : 1.0) * std::conj(v));
        }
    }
    return table.hermitian_symmetrized();
}

std::vector<double> tomogram_probabilities(const LayerState &layer, const Direction &n) {
    CMatrix d = displacement(layer.spin(), n);
    CMatrix r = d.adjoint() * layer.rho() * d;
    std::vector<double> w(layer.spin().dim());
    for (int i = 0; i < layer.spin().dim(); i++) {
        w[i] = std::max(0.0, r(i, i).real());
    }
    return w;
}

TomogramCounts simulate_tomograms(const LayerState &layer, const Direction &n, int shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be positive");
    }
    auto w = tomogram_probabilities(layer, n);
    std::mt19937_64 rng(seed);
    TomogramCounts tc{layer.spin(), n, shots, std::vector<long>(w.size(), 0)};
    long left = shots;
    double mass = 0;
    for (double x : w) {
        mass += x;
    }
    for (size_t i = 0; i + 1 < w.size() && left > 0; i++) {
        double p = mass > 0 ? std::clamp(w[i] / mass, 0.0, 1.0) : 0.0;
        std::binomial_distribution<long> bin(left, p);
        tc.counts[i] = bin(rng);
        left -= tc.counts[i];
        mass -= w[i];
    }
    tc.counts.back() += left;
    return tc;
}

double empirical_moment(const TomogramCounts &counts, int ell) {
    double acc = 0;
    for (int i = 0; i < counts.spin.dim(); i++) {
        acc += std::pow(counts.spin.m(i), ell) * counts.counts[i];
    }
    return acc / counts.shots;
}

std::string tomogram_csv(const std::vector<TomogramCounts> &tomograms) {
    std::string out = "theta,phi,m_twice,count\n";
    char buf[128];
    for (const auto &t : tomograms) {
        for (int i = 0; i < t.spin.dim(); i++) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%ld\n", t.n.theta, t.n.phi, t.spin.m_twice(i),
                          t.counts[i]);
            out += buf;
        }
    }
    return out;
}

std::vector<TomogramCounts> parse_tomogram_csv(const std::string &csv, HalfSpin s) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    if (line != "theta,phi,m_twice,count") {
        throw DomainError("tomogram csv: bad header");
    }
    std::vector<TomogramCounts> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) {
            continue;
        }
        double th, ph;
        int m2;
        long c;
        if (std::sscanf(line.c_str(), "%lf,%lf,%d,%ld", &th, &ph, &m2, &c) != 4 || c < 0 ||
            std::abs(m2) > s.twice || (m2 + s.twice) % 2) {
            throw DomainError("tomogram csv: bad row at line " + std::to_string(lineno));
        }
        if (out.empty() || out.back().n.theta != th || out.back().n.phi != ph) {
            out.push_back({s, Direction{th, ph}, 0, std::vector<long>(s.dim(), 0)});
        }
        out.back().counts[s.index_of(m2)] += c;
        out.back().shots += c;
    }
    return out;
}

std::string moments_csv(const std::vector<MomentSample> &moments) {
    std::string out = "theta,phi,ell,value\n";
    char buf[128];
    for (const auto &m : moments) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%.17g\n", m.n.theta, m.n.phi, m.ell, m.value);
        out += buf;
    }
    return out;
}

std::vector<MomentSample> parse_moments_csv(const std::string &csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    if (line != "theta,phi,ell,value") {
        throw DomainError("moments csv: bad header");
    }
    std::vector<MomentSample> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) {
            continue;
        }
        MomentSample m{};
        if (std::sscanf(line.c_str(), "%lf,%lf,%d,%lf", &m.n.theta, &m.n.phi, &m.ell, &m.value) != 4 || m.ell < 1) {
            throw DomainError("moments csv: bad row at line " + std::to_string(lineno));
        }
        out.push_back(m);
    }
    return out;
}

}  // namespace poincare
