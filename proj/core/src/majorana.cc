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

#include "poincare/majorana.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "optimize.h"
#include "poincare/angular.h"
#include "poincare/errors.h"
#include "poincare/multipoles.h"

namespace poincare {

namespace {

void require_pure(const LayerState &state) {
    if (state.purity() < 1 - 1e-10) {
        throw std::invalid_argument("Majorana representation needs a pure state");
    }
}

CVector pure_ket(const LayerState &state) {
    require_pure(state);
    if (state.is_pure()) {
        return state.ket();
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(state.rho());
    return es.eigenvectors().col(state.spin().dim() - 1);
}

/// Parlett-Reinsch balancing with radix 2, in place.
void balance(CMatrix &a) {
    const double radix = 2, sqrdx = radix * radix;
    int n = a.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; i++) {
            double r = 0, c = 0;
            for (int j = 0; j < n; j++) {
                if (j != i) {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            }
            if (c == 0 || r == 0) {
                continue;
            }
            double g = r / radix, f = 1, s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

cplx horner(const std::vector<cplx> &p, cplx z, cplx *deriv) {
    cplx v = 0, d = 0;
    for (int k = (int)p.size() - 1; k >= 0; k--) {
        d = d * z + v;
        v = v * z + p[k];
    }
    *deriv = d;
    return v;
}

std::vector<cplx> polynomial_roots(std::vector<cplx> p) {
    int d = (int)p.size() - 1;
    std::vector<cplx> roots;
    if (d <= 0) {
        return roots;
    }
    CMatrix comp = CMatrix::Zero(d, d);
    for (int k = 0; k < d; k++) {
        comp(0, k) = -p[d - 1 - k] / p[d];
    }
    for (int i = 1; i < d; i++) {
        comp(i, i - 1) = 1;
    }
    balance(comp);
    Eigen::ComplexEigenSolver<CMatrix> es(comp, false);
    for (int i = 0; i < d; i++) {
        cplx z = es.eigenvalues()(i);
        for (int it = 0; it < 3; it++) {
            cplx dp;
            cplx v = horner(p, z, &dp);
            if (std::abs(dp) == 0) {
                break;
            }
            cplx next = z - v / dp;
            cplx dn;
            if (!std::isfinite(std::abs(next)) || std::abs(horner(p, next, &dn)) >= std::abs(v)) {
                break;
            }
            z = next;
        }
        roots.push_back(z);
    }
    // Roots closer than 1e-8 are one repeated root; replace them by their mean.
    std::vector<int> label(d, -1);
    for (int i = 0; i < d; i++) {
        if (label[i] >= 0) {
            continue;
        }
        label[i] = i;
        cplx sum = roots[i];
        int count = 1;
        for (int j = i + 1; j < d; j++) {
            if (label[j] < 0 && std::abs(roots[j] - roots[i]) < 1e-8 * (1 + std::abs(roots[i]))) {
                label[j] = i;
                sum += roots[j];
                count++;
            }
        }
        for (int j = i; j < d && count > 1; j++) {
            if (label[j] == i) {
                roots[j] = sum / double(count);
            }
        }
    }
    return roots;
}

}  // namespace

Constellation constellation(const LayerState &state) {
    HalfSpin s = state.spin();
    CVector psi = pure_ket(state);
    int n = s.twice;
    std::vector<cplx> p(n + 1);
    double scale = 0;
    for (int i = 0; i <= n; i++) {
        int k = n - i;  // power S+m
        double sign = (i % 2) ? -1.0 : 1.0;
        p[k] = sign * std::sqrt(binomial(n, k)) * psi(i);
        scale = std::max(scale, std::abs(p[k]));
    }
    int deg = n;
    while (deg > 0 && std::abs(p[deg]) <= 1e-14 * scale) {
        deg--;
    }
    p.resize(deg + 1);
    Constellation c{s, {}};
    for (cplx z : polynomial_roots(p)) {
        c.points.push_back(Direction::from_vector(
            Eigen::Vector3d(2 * z.real(), 2 * z.imag(), 1 - std::norm(z)) / (1 + std::norm(z))));
    }
    for (int k = deg; k < n; k++) {
        c.points.push_back(Direction{std::numbers::pi, 0});
    }
    return c;
}

LayerState state_from_constellation(const Constellation &c) {
    HalfSpin s = c.spin;
    int n = s.twice;
    if ((int)c.points.size() != n) {
        throw std::invalid_argument("constellation needs exactly 2S points");
    }
    std::vector<cplx> e(1, 1.0);
    for (const auto &pt : c.points) {
        cplx a = std::cos(0.5 * pt.theta);
        cplx b = std::polar(std::sin(0.5 * pt.theta), pt.phi);
        std::vector<cplx> next(e.size() + 1, 0.0);
        for (size_t j = 0; j < e.size(); j++) {
            next[j] += a * e[j];
            next[j + 1] += b * e[j];
        }
        e = std::move(next);
    }
    CVector psi(s.dim());
    for (int i = 0; i <= n; i++) {
        int j = i;  // power of a-^dagger equals S-m
        psi(i) = e[j] * (double)std::exp(0.5L * (log_factorial(n - j) + log_factorial(j)));
    }
    double nrm = psi.norm();
    if (!(nrm > 1e-300)) {
        throw DegenerateInput("constellation product has zero norm");
    }
    return LayerState::from_ket(s, psi / nrm);
}

int anticoherence_order(const LayerState &state, double tol) {
    require_pure(state);
    if (state.spin().twice == 0) {
        return 0;
    }
    MultipoleTable t = multipoles(state);
    int order = 0;
    for (int M = 1; M <= state.spin().twice; M++) {
        if (cumulative_A(t, M) < tol) {
            order = M;
        } else {
            break;
        }
    }
    return order;
}

KingCandidate search_kings(HalfSpin s, int M, int restarts, std::uint64_t seed) {
    if (M < 1 || M > s.twice) {
        throw std::invalid_argument("search order M must satisfy 1 <= M <= 2S");
    }
    int d = s.dim();
    std::vector<CMatrix> ops;
    for (int K = 1; K <= M; K++) {
        for (int q = -K; q <= K; q++) {
            ops.push_back(tensor_operator(s, K, q).adjoint());
        }
    }
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
        double a = 0;
        for (const auto &b : ops) {
            a += std::norm(v.dot(b * v));
        }
        return a / (n2 * n2);
    };
    auto grad = [&](const std::vector<double> &x, std::vector<double> &g) {
        CVector v = ket_of(x);
        double n2 = v.squaredNorm();
        CVector w = CVector::Zero(d);
        for (const auto &b : ops) {
            cplx val = v.dot(b * v) / n2;
            CVector dv = (b * v) / n2 - val * v / n2;
            CVector dvc = (b.adjoint() * v) / n2 - std::conj(val) * v / n2;
            w += std::conj(val) * dv + val * dvc;
        }
        g[0] = 2 * w(0).real();
        for (int i = 1; i < d; i++) {
            g[2 * i - 1] = 2 * w(i).real();
            g[2 * i] = 2 * w(i).imag();
        }
    };
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    double best = 1e300;
    std::vector<double> best_x;
    for (int r = 0; r < restarts; r++) {
        std::vector<double> x(2 * d - 1);
        for (auto &xi : x) {
            xi = gauss(rng);
        }
        auto res = detail::bfgs(f, grad, x, 1e-14, 2000);
        if (res.value < best) {
            best = res.value;
            best_x = res.x;
        }
    }
    LayerState st = LayerState::from_ket(s, ket_of(best_x));
    return {st, M, cumulative_A(st, M)};
}

std::vector<KingEntry> king_table() {
    struct Row {
        int twice;
        int order;
        std::map<int, cplx> amps;
        const char *name;
    };
    const double r2 = std::sqrt(0.5);
    const cplx a3(std::sqrt(637.0 / 13420), std::sqrt(512603.0 / 9783180));
    const cplx a0(std::sqrt(12561757.0 / 163053000), -std::sqrt(512603.0 / 2013000));
    const std::vector<Row> rows = {
        {2, 1, {{0, 1}}, "radial line"},
        {3, 1, {{3, r2}, {-3, r2}}, "equatorial triangle"},
        {4, 2, {{4, std::sqrt(1.0 / 3)}, {-2, std::sqrt(2.0 / 3)}}, "tetrahedron"},
        {5, 1, {{3, r2}, {-3, r2}}, "equatorial triangle + poles"},
        {6, 3, {{4, r2}, {-4, r2}}, "octahedron"},
        {7, 2, {{-5, std::sqrt(7.0 / 18)}, {1, std::sqrt(7.0 / 18)}, {7, std::sqrt(2.0 / 9)}}, "two triangles + pole"},
        {8, 3, {{8, std::sqrt(5.0 / 24)}, {-8, std::sqrt(5.0 / 24)}, {0, std::sqrt(7.0 / 12)}}, "cube"},
        {9, 2, {{9, 1 / std::sqrt(6.0)}, {-9, 1 / std::sqrt(6.0)}, {3, 1 / std::sqrt(3.0)}, {-3, 1 / std::sqrt(3.0)}},
         "three triangles"},
        {10, 3, {{10, 1 / std::sqrt(5.0)}, {-10, 1 / std::sqrt(5.0)}, {0, std::sqrt(3.0 / 5)}}, "pentagonal prism"},
        {11, 3,
         {{11, std::sqrt(17.0) / 12}, {-11, std::sqrt(17.0) / 12}, {5, cplx(0, std::sqrt(55.0) / 12)},
          {-5, cplx(0, std::sqrt(55.0) / 12)}},
         "pentagon + two triangles"},
        {12, 5, {{10, std::sqrt(7.0) / 5}, {-10, -std::sqrt(7.0) / 5}, {0, -std::sqrt(11.0) / 5}}, "icosahedron"},
        {14, 4,
         {{12, std::sqrt(854.0 / 3645)}, {-12, std::sqrt(854.0 / 3645)}, {6, a3}, {-6, a3}, {0, a0}},
         "three squares + poles"},
        {20, 5,
         {{20, std::sqrt(187.0 / 1875)}, {-20, std::sqrt(187.0 / 1875)}, {10, std::sqrt(209.0 / 625)},
          {-10, -std::sqrt(209.0 / 625)}, {0, std::sqrt(247.0 / 1875)}},
         "deformed dodecahedron"},
    };
    std::vector<KingEntry> out;
    for (const auto &row : rows) {
        HalfSpin s(row.twice);
        CVector v = CVector::Zero(s.dim());
        for (auto [m2, a] : row.amps) {
            v(s.index_of(m2)) = a;
        }
        out.push_back({s, row.order, LayerState::from_ket(s, v), row.name});
    }
    return out;
}

}  // namespace poincare
