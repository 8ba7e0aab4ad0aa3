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

#ifndef POINCARE_MULTIPOLES_H
#define POINCARE_MULTIPOLES_H

#include <vector>

#include "poincare/states.h"

namespace poincare {

/// rho_Kq for 0 <= K <= 2S, |q| <= K.
class MultipoleTable {
   public:
    explicit MultipoleTable(HalfSpin s);

    HalfSpin spin() const { return spin_; }
    int max_rank() const { return spin_.twice; }
    cplx at(int K, int q) const;
    void set(int K, int q, cplx value);
    /// sum_q |rho_Kq|^2.
    double rank_norm(int K) const;
    /// Averages each (K,q) with (-1)^q conj(rho_{K,-q}).
    MultipoleTable hermitian_symmetrized() const;

   private:
    static int index(int K, int q) { return K * K + q + K; }
    void check(int K, int q) const;
    HalfSpin spin_;
    std::vector<cplx> entries_;
};

/// T_Kq with elements sqrt((2K+1)/(2S+1)) C_{Sm,Kq}^{Sm'}.
CMatrix tensor_operator(HalfSpin s, int K, int q);

/// rho_Kq = Tr[rho T_Kq^dagger].
MultipoleTable multipoles(const LayerState &layer);
/// sum_Kq rho_Kq T_Kq.
CMatrix density_from_multipoles(const MultipoleTable &table);

/// A_M = sum_{K=1..M} sum_q |rho_Kq|^2, 1 <= M <= 2S.
double cumulative_A(const MultipoleTable &table, int M);
double cumulative_A(const LayerState &layer, int M);
/// Value of A_M attained by every SU(2) coherent state, which is maximal.
double cumulative_A_coherent_max(HalfSpin s, int M);

/// P_M = sum_S w_S sqrt(A_M / A_M^max). Layers with 2S < M contribute 0.
double degree_hierarchy(const PolarizationSector &sector, int M);

}  // namespace poincare

#endif
