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

#include <gtest/gtest.h>

#include "oracles/frozen_values.h"
#include "test_util.h"

namespace {

using namespace ptest;

TEST(TensorOperator, MonopoleAndDipole) {
    for (int tw = 0; tw <= 8; tw++) {
        HalfSpin s(tw);
        CMatrix id = CMatrix::Identity(s.dim(), s.dim());
        EXPECT_LT(max_abs(tensor_operator(s, 0, 0) - id / std::sqrt(s.dim())), 1e-15);
        if (tw > 0) {
            double S = s.value();
            double f = std::sqrt(3.0 / ((2 * S + 1) * (S + 1) * S));
            EXPECT_LT(max_abs(tensor_operator(s, 1, 0) - f * stokes_matrices(s).s3), 1e-14);
        }
    }
}

TEST(TensorOperator, OrthonormalForSpinTwo) {
    HalfSpin s(4);
    for (int K = 0; K <= 4; K++) {
        for (int q = -K; q <= K; q++) {
            CMatrix a = tensor_operator(s, K, q);
            for (int K2 = 0; K2 <= 4; K2++) {
                for (int q2 = -K2; q2 <= K2; q2++) {
                    cplx ip = (a * tensor_operator(s, K2, q2).adjoint()).trace();
                    double expected = (K == K2 && q == q2) ? 1 : 0;
                    EXPECT_NEAR(std::abs(ip - expected), 0, 1e-13) << K << q << K2 << q2;
                }
            }
        }
    }
}

TEST(TensorOperator, AdjointSymmetry) {
    HalfSpin s(5);
    for (int K = 0; K <= 5; K++) {
        for (int q = -K; q <= K; q++) {
            double sign = (q % 2 == 0) ? 1 : -1;
            EXPECT_LT(max_abs(tensor_operator(s, K, q).adjoint() - sign * tensor_operator(s, K, -q)), 1e-14);
        }
    }
}

TEST(TensorOperator, RangeErrors) {
    EXPECT_THROW(tensor_operator(HalfSpin(2), 3, 0), std::invalid_argument);
    EXPECT_THROW(tensor_operator(HalfSpin(2), 1, 2), std::invalid_argument);
    EXPECT_THROW(tensor_operator(HalfSpin(2), -1, 0), std::invalid_argument);
    MultipoleTable t(HalfSpin(2));
    EXPECT_THROW(t.at(3, 0), std::invalid_argument);
    EXPECT_THROW(cumulative_A(t, 0), std::invalid_argument);
    EXPECT_THROW(cumulative_A(t, 3), std::invalid_argument);
}

TEST(Multipoles, Examples) {
    MultipoleTable u = multipoles(unpolarized(HalfSpin(3)));
    for (int K = 1; K <= 3; K++) {
        EXPECT_NEAR(u.rank_norm(K), 0, 1e-30);
    }
    MultipoleTable half = multipoles(su2_coherent(HalfSpin(1), Direction{}));
    EXPECT_NEAR(half.at(1, 0).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(cumulative_A(half, 1), 0.5, 1e-15);
    MultipoleTable f = multipoles(fock_layer(HalfSpin(2), 0));
    EXPECT_NEAR(f.rank_norm(1), 0, 1e-30);
    EXPECT_NEAR(cumulative_A(f, 1), 0, 1e-15);
    EXPECT_NEAR(cumulative_A(f, 2), 2.0 / 3, 1e-15);
}

TEST(Multipoles, InvariantsOnRandomStates) {
    Rng rng(1);
    for (int i = 0; i < 60; i++) {
        HalfSpin s(i % 9);
        LayerState st = i % 2 ? random_pure(s, rng) : random_mixed(s, 1 + i % 3, rng);
        MultipoleTable t = multipoles(st);
        EXPECT_NEAR(std::abs(t.at(0, 0) - 1 / std::sqrt((double)s.dim())), 0, 1e-14);
        for (int K = 0; K <= s.twice; K++) {
            for (int q = -K; q <= K; q++) {
                double sign = (q % 2 == 0) ? 1 : -1;
                EXPECT_NEAR(std::abs(t.at(K, -q) - sign * std::conj(t.at(K, q))), 0, 1e-12);
            }
            if (K >= 1) {
                double prev = cumulative_A(t, K - 1 >= 1 ? K - 1 : 1);
                EXPECT_GE(cumulative_A(t, K) + 1e-15, K == 1 ? 0 : prev);
            }
        }
        EXPECT_LT(max_abs(density_from_multipoles(t) - st.rho()), 1e-12);
        if (s.twice >= 1) {
            EXPECT_NEAR(cumulative_A(t, s.twice), st.purity() - 1.0 / s.dim(), 1e-12);
        }
    }
}

TEST(Multipoles, HermitianSymmetrizationProjects) {
    MultipoleTable t(HalfSpin(2));
    t.set(0, 0, 1 / std::sqrt(3.0));
    t.set(1, 1, cplx(0.2, 0.1));
    t.set(1, -1, cplx(0.1, 0.3));
    MultipoleTable h = t.hermitian_symmetrized();
    EXPECT_NEAR(std::abs(h.at(1, -1) + std::conj(h.at(1, 1))), 0, 1e-16);
    MultipoleTable hh = h.hermitian_symmetrized();
    EXPECT_NEAR(max_abs(h, hh), 0, 1e-16);
    CMatrix rho = density_from_multipoles(h);
    EXPECT_LT(max_abs(rho - rho.adjoint()), 1e-15);
}

TEST(CoherentMax, FrozenValues) {
    for (const auto &c : frozen::kCoherentA) {
        HalfSpin s(c.twice);
        EXPECT_NEAR(cumulative_A_coherent_max(s, c.M), c.value, 1e-12) << c.twice << " " << c.M;
        EXPECT_NEAR(cumulative_A(su2_coherent(s, Direction{0.7, 1.9}), c.M), c.value, 1e-10);
    }
}

TEST(CoherentMax, SmallCases) {
    EXPECT_NEAR(cumulative_A_coherent_max(HalfSpin(1), 1), 0.5, 1e-15);
    EXPECT_NEAR(cumulative_A_coherent_max(HalfSpin(2), 1), 0.5, 1e-15);
    EXPECT_NEAR(cumulative_A_coherent_max(HalfSpin(2), 2), 2.0 / 3, 1e-15);
}

TEST(CoherentMax, IsMaximalOnRandomPureStates) {
    Rng rng(2);
    for (int i = 0; i < 60; i++) {
        HalfSpin s(1 + i % 8);
        LayerState st = random_pure(s, rng);
        for (int M = 1; M <= s.twice; M++) {
            EXPECT_LE(cumulative_A(st, M), cumulative_A_coherent_max(s, M) + 1e-12);
        }
    }
}

TEST(CumulativeA, RotationInvariant) {
    Rng rng(3);
    for (int i = 0; i < 20; i++) {
        HalfSpin s(1 + i % 7);
        LayerState st = random_mixed(s, 2, rng);
        LayerState r = rotate(st, random_direction(rng), 6.0 * i / 20);
        for (int M = 1; M <= s.twice; M++) {
            EXPECT_NEAR(cumulative_A(r, M), cumulative_A(st, M), 1e-10);
        }
    }
}

TEST(Hierarchy, CoherentLayersGiveOne) {
    for (int tw = 1; tw <= 8; tw++) {
        PolarizationSector sec = PolarizationSector::single(su2_coherent(HalfSpin(tw), Direction{1, 2}));
        for (int M = 1; M <= tw; M++) {
            EXPECT_NEAR(degree_hierarchy(sec, M), 1, 1e-12);
        }
    }
}

TEST(Hierarchy, TwoModeCoherent) {
    for (double nbar : {0.5, 1.0, 2.0, 5.0}) {
        PolarizationSector sec = two_mode_coherent_sector(std::sqrt(nbar), 0);
        EXPECT_NEAR(degree_hierarchy(sec, 2), 1 - (1 + nbar) * std::exp(-nbar), 1e-11) << nbar;
        EXPECT_NEAR(degree_hierarchy(sec, 1), 1 - std::exp(-nbar), 1e-11);
    }
}

TEST(Hierarchy, BoundedOnRandomSectors) {
    Rng rng(4);
    for (int i = 0; i < 30; i++) {
        PolarizationSector sec = random_sector(1 + i % 5, rng);
        for (int M = 1; M <= sec.max_twice_spin(); M++) {
            double p = degree_hierarchy(sec, M);
            EXPECT_GE(p, 0);
            EXPECT_LE(p, 1 + 1e-12);
        }
    }
    EXPECT_THROW(degree_hierarchy(tmsv_sector(0.3), 0), std::invalid_argument);
}

TEST(Hierarchy, UnpolarizedGivesZero) {
    PolarizationSector sec({{HalfSpin(1), 0.3, unpolarized(HalfSpin(1))}, {HalfSpin(3), 0.7, unpolarized(HalfSpin(3))}});
    for (int M = 1; M <= 3; M++) {
        EXPECT_NEAR(degree_hierarchy(sec, M), 0, 1e-7);
    }
}

}  // namespace
