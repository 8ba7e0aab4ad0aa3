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

#include <unsupported/Eigen/MatrixFunctions>

#include "oracles/frozen_values.h"
#include "test_util.h"

namespace {

using namespace ptest;

TEST(ClebschGordan, MatchesFrozenValues) {
    for (const auto &c : frozen::kClebschGordan) {
        EXPECT_NEAR(clebsch_gordan(c.j1, c.m1, c.j2, c.m2, c.J, c.M), c.value, 1e-14)
            << c.j1 << " " << c.m1 << " " << c.j2 << " " << c.m2 << " " << c.J << " " << c.M;
    }
}

TEST(ClebschGordan, SingletAndTrivialCoupling) {
    EXPECT_NEAR(clebsch_gordan(1, 1, 1, -1, 0, 0), 1 / std::sqrt(2.0), 1e-15);
    for (int tw = 0; tw <= 12; tw++) {
        for (int m = -tw; m <= tw; m += 2) {
            EXPECT_DOUBLE_EQ(clebsch_gordan(tw, m, 0, 0, tw, m), 1.0);
        }
    }
}

TEST(ClebschGordan, CoherentCoefficient) {
    EXPECT_NEAR(coherent_cg(HalfSpin(2), 2), 0.31622776601683794, 1e-15);
    for (int tw = 1; tw <= 20; tw++) {
        for (int K = 0; K <= tw; K++) {
            EXPECT_NEAR(coherent_cg(HalfSpin(tw), K), clebsch_gordan(tw, tw, 2 * K, 0, tw, tw), 1e-12);
        }
    }
}

TEST(ClebschGordan, SelectionRulesGiveZero) {
    EXPECT_EQ(clebsch_gordan(2, 2, 2, 0, 4, 0), 0.0);  // m1 + m2 != M
    EXPECT_EQ(clebsch_gordan(2, 0, 2, 0, 6, 0), 0.0);  // triangle
}

TEST(ClebschGordan, ParityMismatchThrows) {
    EXPECT_THROW(clebsch_gordan(1, 0, 1, 1, 2, 1), std::invalid_argument);
    EXPECT_THROW(clebsch_gordan(2, 4, 2, 0, 2, 4), std::invalid_argument);
}

TEST(ClebschGordan, Orthogonality) {
    for (int j1 = 0; j1 <= 8; j1++) {
        for (int j2 = 0; j2 <= 8; j2++) {
            for (int J = std::abs(j1 - j2); J <= j1 + j2; J += 2) {
                for (int Jp = std::abs(j1 - j2); Jp <= j1 + j2; Jp += 2) {
                    for (int M = -std::min(J, Jp); M <= std::min(J, Jp); M += 2) {
                        double sum = 0;
                        for (int m1 = -j1; m1 <= j1; m1 += 2) {
                            int m2 = M - m1;
                            if (std::abs(m2) > j2) {
                                continue;
                            }
                            sum += clebsch_gordan(j1, m1, j2, m2, J, M) * clebsch_gordan(j1, m1, j2, m2, Jp, M);
                        }
                        EXPECT_NEAR(sum, J == Jp ? 1.0 : 0.0, 1e-12);
                    }
                }
            }
        }
    }
}

TEST(ClebschGordan, ExactAndFloatingPathsAgreeAtBoundary) {
    // 2j = 40 uses rationals, 2j = 42 the log-factorial sum; both must be consistent with orthonormality.
    for (int tw : {40, 42}) {
        double sum = 0;
        for (int m1 = -tw; m1 <= tw; m1 += 2) {
            double c = clebsch_gordan(tw, m1, tw, -m1, 0, 0);
            sum += c * c;
        }
        EXPECT_NEAR(sum, 1.0, 1e-12) << tw;
    }
}

TEST(SphericalHarmonic, LowOrders) {
    Rng rng(1);
    for (int i = 0; i < 10; i++) {
        Direction n = random_direction(rng);
        EXPECT_NEAR(std::abs(spherical_harmonic(0, 0, n) - 1 / std::sqrt(4 * kPi)), 0, 1e-15);
        EXPECT_NEAR(std::abs(spherical_harmonic(1, 0, n) - std::sqrt(3 / (4 * kPi)) * std::cos(n.theta)), 0, 1e-15);
        cplx y11 = -std::sqrt(3 / (8 * kPi)) * std::sin(n.theta) * std::polar(1.0, n.phi);
        EXPECT_NEAR(std::abs(spherical_harmonic(1, 1, n) - y11), 0, 1e-15);
    }
}

TEST(SphericalHarmonic, ConjugationSymmetry) {
    Rng rng(2);
    for (int i = 0; i < 20; i++) {
        Direction n = random_direction(rng);
        for (int K = 0; K <= 8; K++) {
            for (int q = -K; q <= K; q++) {
                cplx lhs = std::conj(spherical_harmonic(K, q, n));
                cplx rhs = (q % 2 ? -1.0 : 1.0) * spherical_harmonic(K, -q, n);
                EXPECT_NEAR(std::abs(lhs - rhs), 0, 1e-14);
            }
        }
    }
}

TEST(SphericalHarmonic, OrthonormalOnGrid) {
    SphereGrid grid = SphereGrid::gauss_legendre(24, 48);
    for (auto [K, q, Kp, qp] : std::vector<std::array<int, 4>>{{2, 1, 2, 1}, {2, 1, 3, 1}, {5, -3, 5, -3}, {4, 2, 4, -2}}) {
        Eigen::MatrixXd re(grid.thetas.size(), grid.phis.size()), im = re;
        for (size_t i = 0; i < grid.thetas.size(); i++) {
            for (size_t j = 0; j < grid.phis.size(); j++) {
                cplx v = spherical_harmonic(K, q, grid.node(i, j)) * std::conj(spherical_harmonic(Kp, qp, grid.node(i, j)));
                re(i, j) = v.real();
                im(i, j) = v.imag();
            }
        }
        EXPECT_NEAR(integrate(grid, re), (K == Kp && q == qp) ? 1.0 : 0.0, 1e-12);
        EXPECT_NEAR(integrate(grid, im), 0.0, 1e-12);
    }
}

TEST(SphericalHarmonic, RankOutOfRangeThrows) {
    EXPECT_THROW(spherical_harmonic(2, 3, Direction{}), std::invalid_argument);
}

TEST(WignerD, SpinHalfAndIdentity) {
    for (double b : {0.0, 0.3, 1.7, 3.0}) {
        EXPECT_NEAR(wigner_small_d(HalfSpin(1), 1, 1, b), std::cos(b / 2), 1e-15);
    }
    for (int tw = 0; tw <= 10; tw++) {
        Eigen::MatrixXd d = wigner_small_d_matrix(HalfSpin(tw), 0);
        EXPECT_NEAR((d - Eigen::MatrixXd::Identity(tw + 1, tw + 1)).cwiseAbs().maxCoeff(), 0, 1e-15);
    }
}

TEST(WignerD, RowsAreUnitVectors) {
    Eigen::MatrixXd d = wigner_small_d_matrix(HalfSpin(2), 0.7);
    for (int i = 0; i < 3; i++) {
        EXPECT_NEAR(d.row(i).squaredNorm(), 1.0, 1e-14);
    }
}

TEST(WignerD, AgreesWithGeneratorExponential) {
    for (int tw = 0; tw <= 12; tw++) {
        HalfSpin s(tw);
        for (double b : {0.4, 1.3, 2.9}) {
            CMatrix arg = cplx(0, -b) * stokes_matrices(s).axis(2);
            CMatrix e = arg.exp();
            Eigen::MatrixXd d = wigner_small_d_matrix(s, b);
            EXPECT_NEAR(max_abs(e - d.cast<cplx>()), 0, 1e-12) << "2S=" << tw << " beta=" << b;
        }
    }
}

TEST(WignerD, OutOfRangeThrows) {
    EXPECT_THROW(wigner_small_d(HalfSpin(2), 4, 0, 0.1), std::invalid_argument);
    EXPECT_THROW(wigner_small_d(HalfSpin(2), 1, 0, 0.1), std::invalid_argument);
}

TEST(HalfSpin, IndexingRoundTrip) {
    for (int tw = 0; tw <= 9; tw++) {
        HalfSpin s(tw);
        for (int i = 0; i < s.dim(); i++) {
            EXPECT_EQ(s.index_of(s.m_twice(i)), i);
        }
    }
    EXPECT_THROW(HalfSpin(-1), std::invalid_argument);
    EXPECT_THROW(HalfSpin(2).index_of(1), std::invalid_argument);
}

TEST(Factorials, LogAndBinomial) {
    EXPECT_NEAR(std::exp((double)log_factorial(10)), 3628800.0, 1e-6);
    EXPECT_DOUBLE_EQ(binomial(10, 3), 120.0);
    EXPECT_NEAR(binomial(40, 20), 137846528820.0, 1e-2);
}

}  // namespace
