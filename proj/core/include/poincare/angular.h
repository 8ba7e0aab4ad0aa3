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

#ifndef POINCARE_ANGULAR_H
#define POINCARE_ANGULAR_H

#include "poincare/types.h"

namespace poincare {

/// Clebsch-Gordan key; every entry is a twice-value (2j, 2m).
struct CGKey {
    int j1, m1, j2, m2, J, M;
};

/// <j1 m1; j2 m2 | J M>, Condon-Shortley. Exact rational arithmetic while all 2j <= 40.
double clebsch_gordan(const CGKey &key);
double clebsch_gordan(int j1, int m1, int j2, int m2, int J, int M);

/// C_{SS,K0}^{SS} = sqrt(2S+1) (2S)! / sqrt((2S-K)! (2S+K+1)!).
double coherent_cg(HalfSpin s, int K);

/// Orthonormal Y_Kq with the Condon-Shortley phase.
cplx spherical_harmonic(int K, int q, const Direction &n);

/// d^S_{m'm}(beta) = <S m'| exp(-i beta S_y) |S m>. Projections are twice-values.
double wigner_small_d(HalfSpin s, int mp_twice, int m_twice, double beta);
Eigen::MatrixXd wigner_small_d_matrix(HalfSpin s, double beta);

long double log_factorial(int n);
double binomial(int n, int k);

}  // namespace poincare

#endif
