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

#ifndef POINCARE_STATES_RANDOM_H
#define POINCARE_STATES_RANDOM_H

#include <random>

namespace poincare {

template <typename Rng>
CVector random_ket(HalfSpin s, Rng &rng) {
    std::normal_distribution<double> g;
    CVector v(s.dim());
    for (int i = 0; i < s.dim(); i++) {
        v(i) = cplx(g(rng), g(rng));
    }
    return v / v.norm();
}

template <typename Rng>
LayerState random_mixed(HalfSpin s, int rank, Rng &rng) {
    std::normal_distribution<double> g;
    CMatrix a(s.dim(), rank);
    for (int i = 0; i < s.dim(); i++) {
        for (int j = 0; j < rank; j++) {
            a(i, j) = cplx(g(rng), g(rng));
        }
    }
    CMatrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    return LayerState::from_density(s, rho);
}

}  // namespace poincare

#endif
