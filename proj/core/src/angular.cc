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

#include "poincare/angular.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace poincare {

HalfSpin::HalfSpin(int twice_value) : twice(twice_value) {
    if (twice_value < 0) {
        throw std::invalid_argument("negative spin: 2S = " + std::to_string(twice_value));
    }
}

int HalfSpin::index_of(int m_twice) const {
    if (std::abs(m_twice) > twice || (twice - m_twice) % 2 != 0) {
        throw std::invalid_argument(
            "projection 2m = " + std::to_string(m_twice) + " invalid for 2S = " + std::to_string(twice));
    }
    return (twice - m_twice) / 2;
}

Eigen::Vector3d Direction::unit() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Direction Direction::from_vector(const Eigen::Vector3d &v) {
    double r = v.norm();
    if (!(r > 0)) {
        throw std::invalid_argument("zero vector has no direction");
    }
    Direction d;
    d.theta = std::acos(std::clamp(v.z() / r, -1.0, 1.0));
    d.phi = std::atan2(v.y(), v.x());
    if (d.phi < 0) {
        d.phi += 2 * std::numbers::pi;
    }
    return d;
}

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr int kExactLimit = 40;

const std::vector<long double> &log_factorial_table() {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(4096);
        t[0] = 0;
        for (size_t i = 1; i < t.size(); i++) {
            t[i] = t[i - 1] + std::log((long double)i);
        }
        return t;
    }();
    return table;
}

const std::vector<cpp_int> &factorial_table() {
    static const std::vector<cpp_int> table = [] {
        std::vector<cpp_int> t(3 * kExactLimit / 2 + 8);
        t[0] = 1;
        for (size_t i = 1; i < t.size(); i++) {
            t[i] = t[i - 1] * (unsigned)i;
        }
        return t;
    }();
    return table;
}

void check_pair(int j, int m, const char *name) {
    if (j < 0) {
        throw std::invalid_argument(std::string("negative angular momentum ") + name);
    }
    if ((j - m) % 2 != 0) {
        throw std::invalid_argument(std::string("parity mismatch between j and m for ") + name);
    }
    if (std::abs(m) > j) {
        throw std::invalid_argument(std::string("projection out of range for ") + name);
    }
}

}  // namespace

long double log_factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("log_factorial of negative integer");
    }
    const auto &t = log_factorial_table();
    if ((size_t)n < t.size()) {
        return t[n];
    }
    return std::lgamma((long double)n + 1);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    return (double)std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k));
}

double clebsch_gordan(int j1, int m1, int j2, int m2, int J, int M) {
    return clebsch_gordan(CGKey{j1, m1, j2, m2, J, M});
}

double clebsch_gordan(const CGKey &k) {
    check_pair(k.j1, k.m1, "j1");
    check_pair(k.j2, k.m2, "j2");
    check_pair(k.J, k.M, "J");
    if (k.m1 + k.m2 != k.M) {
        return 0;
    }
    if (k.J < std::abs(k.j1 - k.j2) || k.J > k.j1 + k.j2 || (k.j1 + k.j2 - k.J) % 2 != 0) {
        return 0;
    }

    int a = (k.j1 + k.j2 - k.J) / 2;
    int b = (k.j1 - k.j2 + k.J) / 2;
    int c = (-k.j1 + k.j2 + k.J) / 2;
    int d = (k.j1 + k.j2 + k.J) / 2 + 1;
    int p1 = (k.j1 + k.m1) / 2, q1 = (k.j1 - k.m1) / 2;
    int p2 = (k.j2 + k.m2) / 2, q2 = (k.j2 - k.m2) / 2;
    int pJ = (k.J + k.M) / 2, qJ = (k.J - k.M) / 2;
    int e = (k.J - k.j2 + k.m1) / 2;
    int f = (k.J - k.j1 - k.m2) / 2;
    int kmin = std::max({0, -e, -f});
    int kmax = std::min({a, q1, p2});
    if (kmin > kmax) {
        return 0;
    }

    if (std::max({k.j1, k.j2, k.J}) <= kExactLimit) {
        const auto &F = factorial_table();
        cpp_rational pref(cpp_int(k.J + 1) * F[a] * F[b] * F[c] * F[p1] * F[q1] * F[p2] * F[q2] * F[pJ] * F[qJ], F[d]);
        cpp_rational sum = 0;
        for (int s = kmin; s <= kmax; s++) {
            cpp_rational term(cpp_int(1), F[s] * F[a - s] * F[q1 - s] * F[p2 - s] * F[e + s] * F[f + s]);
            if (s % 2) {
                sum -= term;
            } else {
                sum += term;
            }
        }
        if (sum == 0) {
            return 0;
        }
        cpp_rational sq = pref * sum * sum;
        long double mag = std::sqrt(sq.convert_to<long double>());
        return (double)(sum < 0 ? -mag : mag);
    }

    long double log_pref = 0.5L * (std::log((long double)(k.J + 1)) + log_factorial(a) + log_factorial(b) +
                                   log_factorial(c) - log_factorial(d) + log_factorial(p1) + log_factorial(q1) +
                                   log_factorial(p2) + log_factorial(q2) + log_factorial(pJ) + log_factorial(qJ));
    long double sum = 0;
    for (int s = kmin; s <= kmax; s++) {
        long double lt = log_pref - log_factorial(s) - log_factorial(a - s) - log_factorial(q1 - s) -
                         log_factorial(p2 - s) - log_factorial(e + s) - log_factorial(f + s);
        long double t = std::exp(lt);
        sum += (s % 2) ? -t : t;
    }
    return (double)sum;
}

double coherent_cg(HalfSpin s, int K) {
    if (K < 0 || K > s.twice) {
        throw std::invalid_argument("rank K out of range [0, 2S]");
    }
    int n = s.twice;
    long double l = 0.5L * std::log((long double)(n + 1)) + log_factorial(n) -
                    0.5L * (log_factorial(n - K) + log_factorial(n + K + 1));
    return (double)std::exp(l);
}

cplx spherical_harmonic(int K, int q, const Direction &n) {
    if (K < 0 || std::abs(q) > K) {
        throw std::invalid_argument("spherical harmonic requires |q| <= K");
    }
    int aq = std::abs(q);
    double p = std::sph_legendre((unsigned)K, (unsigned)aq, n.theta);
    cplx y = p * std::polar(1.0, aq * n.phi);
    if (q < 0) {
        y = (aq % 2 ? -1.0 : 1.0) * std::conj(y);
    }
    return y;
}

double wigner_small_d(HalfSpin s, int mp_twice, int m_twice, double beta) {
    check_pair(s.twice, mp_twice, "m'");
    check_pair(s.twice, m_twice, "m");
    int jpm = (s.twice + m_twice) / 2, jmm = (s.twice - m_twice) / 2;
    int jpmp = (s.twice + mp_twice) / 2, jmmp = (s.twice - mp_twice) / 2;
    int diff = (mp_twice - m_twice) / 2;
    int kmin = std::max(0, -diff);
    int kmax = std::min(jpm, jmmp);
    long double c = std::cos(0.5L * beta), sn = std::sin(0.5L * beta);
    long double half_log =
        0.5L * (log_factorial(jpmp) + log_factorial(jmmp) + log_factorial(jpm) + log_factorial(jmm));
    long double sum = 0;
    for (int k = kmin; k <= kmax; k++) {
        long double mag = std::exp(half_log - log_factorial(jpm - k) - log_factorial(k) - log_factorial(jmmp - k) -
                                   log_factorial(k + diff));
        int pc = s.twice - 2 * k - diff;
        int ps = 2 * k + diff;
        long double t = mag * std::pow(c, pc) * std::pow(sn, ps);
        sum += ((k + diff) % 2 != 0) ? -t : t;
    }
    return (double)sum;
}

Eigen::MatrixXd wigner_small_d_matrix(HalfSpin s, double beta) {
    Eigen::MatrixXd d(s.dim(), s.dim());
    for (int i = 0; i < s.dim(); i++) {
        for (int j = 0; j < s.dim(); j++) {
            d(i, j) = wigner_small_d(s, s.m_twice(i), s.m_twice(j), beta);
        }
    }
    return d;
}

}  // namespace poincare
