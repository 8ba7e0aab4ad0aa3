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

#include "poincare/multipoles.h"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "poincare/angular.h"

namespace poincare {

MultipoleTable::MultipoleTable(HalfSpin s) : spin_(s), entries_((s.twice + 1) * (s.twice + 1)) {}

void MultipoleTable::check(int K, int q) const {
    if (K < 0 || K > spin_.twice || std::abs(q) > K) {
        throw std::invalid_argument("multipole index (K=" + std::to_string(K) + ", q=" + std::to_string(q) +
                                    ") out of range");
    }
}

cplx MultipoleTable::at(int K, int q) const {
    check(K, q);
    return entries_[index(K, q)];
}

void MultipoleTable::set(int K, int q, cplx value) {
    check(K, q);
    entries_[index(K, q)] = value;
}

double MultipoleTable::rank_norm(int K) const {
    double s = 0;
    for (int q = -K; q <= K; q++) {
        s += std::norm(at(K, q));
    }
    return s;
}

MultipoleTable MultipoleTable::hermitian_symmetrized() const {
    MultipoleTable out(spin_);
    for (int K = 0; K <= spin_.twice; K++) {
        for (int q = -K; q <= K; q++) {
            double sign = (q % 2) ? -1.0 : 1.0;
            out.set(K, q, 0.5 * (at(K, q) + sign * std::conj(at(K, -q))));
        }
    }
    return out;
}

namespace {

struct Element {
    int row, col;
    double value;
};

/// Nonzero entries of every T_Kq for one spin, ordered by K*K+q+K.
using SparseTensors = std::vector<std::vector<Element>>;

const SparseTensors &sparse_tensors(HalfSpin s) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SparseTensors>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(s.twice);
    if (it != cache.end()) {
        return *it->second;
    }
    auto t = std::make_unique<SparseTensors>((s.twice + 1) * (s.twice + 1));
    for (int K = 0; K <= s.twice; K++) {
        double scale = std::sqrt((2.0 * K + 1) / s.dim());
        for (int q = -K; q <= K; q++) {
            auto &list = (*t)[K * K + q + K];
            for (int j = 0; j < s.dim(); j++) {
                int m = s.m_twice(j);
                int mp = m + 2 * q;
                if (std::abs(mp) > s.twice) {
                    continue;
                }
                double c = clebsch_gordan(s.twice, m, 2 * K, 2 * q, s.twice, mp);
                if (c != 0) {
                    list.push_back({s.index_of(mp), j, scale * c});
                }
            }
        }
    }
    auto &ref = *t;
    cache.emplace(s.twice, std::move(t));
    return ref;
}

void check_rank(HalfSpin s, int K, int q) {
    if (K < 0 || K > s.twice || std::abs(q) > K) {
        throw std::invalid_argument("tensor operator rank out of range: need 0 <= K <= 2S and |q| <= K");
    }
}

}  // namespace

CMatrix tensor_operator(HalfSpin s, int K, int q) {
    check_rank(s, K, q);
    CMatrix t = CMatrix::Zero(s.dim(), s.dim());
    for (const auto &e : sparse_tensors(s)[K * K + q + K]) {
        t(e.row, e.col) = e.value;
    }
    return t;
}

MultipoleTable multipoles(const LayerState &layer) {
    HalfSpin s = layer.spin();
    const auto &t = sparse_tensors(s);
    MultipoleTable out(s);
    for (int K = 0; K <= s.twice; K++) {
        for (int q = -K; q <= K; q++) {
            cplx acc = 0;
            for (const auto &e : t[K * K + q + K]) {
                acc += layer.rho()(e.row, e.col) * e.value;
            }
            out.set(K, q, acc);
        }
    }
    return out;
}

CMatrix density_from_multipoles(const MultipoleTable &table) {
    HalfSpin s = table.spin();
    const auto &t = sparse_tensors(s);
    CMatrix rho = CMatrix::Zero(s.dim(), s.dim());
    for (int K = 0; K <= s.twice; K++) {
        for (int q = -K; q <= K; q++) {
            cplx c = table.at(K, q);
            for (const auto &e : t[K * K + q + K]) {
                rho(e.row, e.col) += c * e.value;
            }
        }
    }
    return rho;
}

double cumulative_A(const MultipoleTable &table, int M) {
    if (M < 1 || M > table.max_rank()) {
        throw std::invalid_argument("cumulative order M must satisfy 1 <= M <= 2S");
    }
    double a = 0;
    for (int K = 1; K <= M; K++) {
        a += table.rank_norm(K);
    }
    return a;
}

double cumulative_A(const LayerState &layer, int M) {
    return cumulative_A(multipoles(layer), M);
}

double cumulative_A_coherent_max(HalfSpin s, int M) {
    if (M < 1 || M > s.twice) {
        throw std::invalid_argument("cumulative order M must satisfy 1 <= M <= 2S");
    }
    int n = s.twice;
    double first = double(n) / (n + 1);
    if (M >= n) {
        return first;
    }
    long double l = 2 * log_factorial(n) - log_factorial(n - M - 1) - log_factorial(n + M + 1);
    return first - (double)std::exp(l);
}

double degree_hierarchy(const PolarizationSector &sector, int M) {
    if (M < 1) {
        throw std::invalid_argument("hierarchy order M must be >= 1");
    }
    double p = 0;
    for (const auto &l : sector.layers()) {
        if (l.spin.twice < M || l.weight == 0) {
            continue;
        }
        double ratio = cumulative_A(l.state, M) / cumulative_A_coherent_max(l.spin, M);
        p += l.weight * std::sqrt(std::max(0.0, ratio));
    }
    return p;
}

}  // namespace poincare
