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

#ifndef POINCARE_MAJORANA_H
#define POINCARE_MAJORANA_H

#include <cstdint>
#include <vector>

#include "poincare/states.h"

namespace poincare {

struct Constellation {
    HalfSpin spin;
    std::vector<Direction> points;
};

/// Roots of sum_m (-1)^{S-m} sqrt(C(2S,S+m)) Psi_m zeta^{S+m}, zeta = tan(theta/2) e^{i phi}.
/// A coherent state at n maps to 2S points at n. Missing degree puts points at the south pole.
Constellation constellation(const LayerState &state);
/// Normalized prod_k [cos(theta_k/2) a+^dagger + e^{i phi_k} sin(theta_k/2) a-^dagger] |0,0>.
LayerState state_from_constellation(const Constellation &c);

/// Largest M with A_M < tol; 0 when the dipole is present. Pure states only.
int anticoherence_order(const LayerState &state, double tol = 1e-10);

struct KingCandidate {
    LayerState state;
    int order;
    double residual;
};

/// Minimizes A_M over pure states of spin S; deterministic in seed.
KingCandidate search_kings(HalfSpin s, int M, int restarts = 100, std::uint64_t seed = 1);

struct KingEntry {
    HalfSpin spin;
    int order;
    LayerState state;
    const char *name;
};

/// Maximally unpolarized reference states with normalized amplitudes.
std::vector<KingEntry> king_table();

}  // namespace poincare

#endif
