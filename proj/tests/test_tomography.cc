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

double line_angle(const Direction &a, const Direction &b) {
    return std::acos(std::min(1.0, std::abs(a.unit().dot(b.unit()))));
}

double singular_condition(const Eigen::MatrixXd &m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues()(0) / svd.singularValues().tail(1)(0);
}

TEST(Moments, CoefficientOracles) {
    for (const auto &c : frozen::kMomentCoefficients) {
        EXPECT_NEAR(moment_coefficient(HalfSpin(c.twice), c.K, c.ell), c.value, 1e-12)
            << c.twice << " " << c.K << " " << c.ell;
    }
}

TEST(Moments, CoefficientClosedForms) {
    for (int tw = 1; tw <= 12; tw++) {
        double S = 0.5 * tw;
        HalfSpin s(tw);
        EXPECT_NEAR(moment_coefficient(s, 0, 2), S * (S + 1) * (2 * S + 1) / 3, 1e-10);
        EXPECT_NEAR(moment_coefficient(s, 1, 2), 0, 1e-12);
        if (tw >= 2) {
            double f22 = 8.0 / 120 * (2 * S + 1) * std::sqrt(S * (2 * S - 1) * (S + 1) * (2 * S + 3));
            EXPECT_NEAR(moment_coefficient(s, 2, 2), f22, 1e-10) << tw;
        }
    }
}

TEST(Moments, Examples) {
    for (int tw = 1; tw <= 8; tw++) {
        double S = 0.5 * tw;
        EXPECT_NEAR(stokes_moment(su2_coherent(HalfSpin(tw), Direction{}), Direction{}, 1), S, 1e-13);
        EXPECT_NEAR(stokes_moment(unpolarized(HalfSpin(tw)), Direction{1.3, 0.4}, 2), S * (S + 1) / 3, 1e-12);
    }
    EXPECT_THROW(stokes_moment(unpolarized(HalfSpin(2)), Direction{}, 0), std::invalid_argument);
}

TEST(Moments, MultipoleSideMatchesDirectTrace) {
    Rng rng(1);
    for (int i = 0; i < 20; i++) {
        HalfSpin s(1 + i % 8);
        LayerState st = random_mixed(s, 2, rng);
        MultipoleTable t = multipoles(st);
        Direction n = random_direction(rng);
        for (int ell = 1; ell <= 4; ell++) {
            EXPECT_NEAR(moment_from_multipoles(t, n, ell), stokes_moment(st, n, ell), 1e-10) << s.twice << " " << ell;
        }
    }
}

TEST(Design, RankOneSpreadsLines) {
    DirectionSet d = design_directions(1);
    ASSERT_EQ(d.directions.size(), 3u);
    for (int a = 0; a < 3; a++) {
        for (int b = 0; b < a; b++) {
            EXPECT_GE(line_angle(d.directions[a], d.directions[b]), kPi / 3 - 1e-6);
        }
    }
}

TEST(Design, ConditionBoundForEveryRank) {
    for (int K = 1; K <= 8; K++) {
        DirectionSet d = design_directions(K);
        EXPECT_EQ((int)d.directions.size(), 2 * K + 1);
        EXPECT_LE(d.condition, 1e3) << K;
        Eigen::MatrixXd m = design_matrix(K, d.directions);
        EXPECT_EQ(m.rows(), 2 * K + 1);
        EXPECT_EQ(m.cols(), 2 * K + 1);
        EXPECT_NEAR(singular_condition(m), d.condition, 1e-6 * d.condition);
    }
    Eigen::MatrixXd five = design_matrix(2, design_directions(2).directions);
    EXPECT_EQ(Eigen::FullPivLU<Eigen::MatrixXd>(five).rank(), 5);
}

TEST(Design, SeedChangesDirectionsNotResults) {
    DirectionSet a = design_directions(2, 1), b = design_directions(2, 7);
    double moved = 0;
    for (int i = 0; i < 5; i++) {
        moved = std::max(moved, (a.directions[i].unit() - b.directions[i].unit()).norm());
    }
    EXPECT_GT(moved, 1e-3);
    Rng rng(2);
    LayerState st = random_mixed(HalfSpin(4), 3, rng);
    MultipoleTable ra = reconstruct_multipoles(exact_moments(st, 4, 1), HalfSpin(4), 4);
    MultipoleTable rb = reconstruct_multipoles(exact_moments(st, 4, 7), HalfSpin(4), 4);
    EXPECT_LT(max_abs(ra, rb), 1e-8);
}

TEST(Reconstruct, NoiselessRoundTrip) {
    Rng rng(3);
    for (int tw = 1; tw <= 8; tw++) {
        HalfSpin s(tw);
        LayerState st = tw % 2 ? random_pure(s, rng) : random_mixed(s, 2, rng);
        MultipoleTable truth = multipoles(st);
        for (int M = 1; M <= tw; M++) {
            MultipoleTable rec = reconstruct_multipoles(exact_moments(st, M), s, M);
            for (int K = 0; K <= tw; K++) {
                for (int q = -K; q <= K; q++) {
                    cplx expected = K <= M ? truth.at(K, q) : cplx(0);
                    EXPECT_NEAR(std::abs(rec.at(K, q) - expected), 0, 1e-8) << tw << " " << M << " " << K << " " << q;
                }
            }
        }
    }
}

TEST(Reconstruct, HiddenPolarization) {
    LayerState st = fock_layer(HalfSpin(2), 0);
    MultipoleTable rec = reconstruct_multipoles(exact_moments(st, 2), HalfSpin(2), 2);
    EXPECT_LT(rec.rank_norm(1), 1e-20);
    EXPECT_NEAR(std::abs(rec.at(2, 0)), std::sqrt(2.0 / 3), 1e-10);
}

TEST(Reconstruct, SecondMomentsCarryNoDipole) {
    // A pure dipole offset must not leak into the rank-2 solve.
    Rng rng(4);
    LayerState a = random_mixed(HalfSpin(2), 3, rng);
    MultipoleTable ta = multipoles(a);
    std::vector<MomentSample> moments = exact_moments(a, 2);
    for (auto &m : moments) {
        if (m.ell == 2) {
            EXPECT_NEAR(m.value, moment_from_multipoles(ta, m.n, 2), 1e-12);
        }
    }
    MultipoleTable rec = reconstruct_multipoles(moments, HalfSpin(2), 2);
    EXPECT_LT(max_abs(rec, ta), 1e-10);
}

TEST(Reconstruct, Errors) {
    LayerState st = unpolarized(HalfSpin(2));
    std::vector<MomentSample> m = exact_moments(st, 2);
    m.pop_back();
    EXPECT_THROW(reconstruct_multipoles(m, HalfSpin(2), 2), IllConditioned);
    std::vector<MomentSample> same(5, MomentSample{Direction{0.3, 0.2}, 2, 0.6});
    std::vector<MomentSample> one = exact_moments(st, 1);
    same.insert(same.end(), one.begin(), one.end());
    EXPECT_THROW(reconstruct_multipoles(same, HalfSpin(2), 2), IllConditioned);
    EXPECT_THROW(reconstruct_multipoles(m, HalfSpin(2), 3), std::invalid_argument);
}

TEST(Reconstruct, OutputIsHermitianSymmetric) {
    Rng rng(5);
    LayerState st = random_mixed(HalfSpin(3), 2, rng);
    std::vector<MomentSample> moments;
    for (int ell = 1; ell <= 3; ell++) {
        for (const auto &n : design_directions(ell).directions) {
            TomogramCounts c = simulate_tomograms(st, n, 2000, 10 * ell + moments.size());
            moments.push_back({n, ell, empirical_moment(c, ell)});
        }
    }
    MultipoleTable rec = reconstruct_multipoles(moments, HalfSpin(3), 3, 1e-3);
    EXPECT_LT(max_abs(rec, rec.hermitian_symmetrized()), 1e-15);
}

TEST(Sampling, ProbabilitiesAndCounts) {
    Rng rng(6);
    LayerState st = random_mixed(HalfSpin(5), 2, rng);
    Direction n = random_direction(rng);
    std::vector<double> w = tomogram_probabilities(st, n);
    double total = 0;
    for (double x : w) {
        total += x;
    }
    EXPECT_NEAR(total, 1, 1e-13);
    TomogramCounts c = simulate_tomograms(st, n, 12345, 3);
    long sum = 0;
    for (long k : c.counts) {
        sum += k;
    }
    EXPECT_EQ(sum, 12345);
    TomogramCounts again = simulate_tomograms(st, n, 12345, 3);
    EXPECT_EQ(c.counts, again.counts);
    EXPECT_THROW(simulate_tomograms(st, n, 0, 1), std::invalid_argument);
}

TEST(Sampling, CoherentEigenstate) {
    Direction n{0.8, 2.2};
    TomogramCounts c = simulate_tomograms(su2_coherent(HalfSpin(6), n), n, 1000, 1);
    EXPECT_EQ(c.counts[0], 1000);
}

TEST(Sampling, EmpiricalFirstMomentWithinFourSigma) {
    Rng rng(7);
    for (int i = 0; i < 5; i++) {
        LayerState st = random_mixed(HalfSpin(4), 2, rng);
        Direction n = random_direction(rng);
        double exact = stokes_moment(st, n, 1);
        double var = stokes_moment(st, n, 2) - exact * exact;
        const int shots = 100000;
        double est = empirical_moment(simulate_tomograms(st, n, shots, 100 + i), 1);
        EXPECT_LT(std::abs(est - exact), 4 * std::sqrt(var / shots) + 1e-12);
    }
}

TEST(Csv, TomogramRoundTrip) {
    Rng rng(8);
    LayerState st = random_mixed(HalfSpin(3), 2, rng);
    std::vector<TomogramCounts> t;
    for (const auto &n : design_directions(2).directions) {
        t.push_back(simulate_tomograms(st, n, 500, t.size() + 1));
    }
    std::string csv = tomogram_csv(t);
    EXPECT_EQ(csv.rfind("theta,phi,m_twice,count\n", 0), 0u);
    std::vector<TomogramCounts> back = parse_tomogram_csv(csv, HalfSpin(3));
    ASSERT_EQ(back.size(), t.size());
    for (size_t i = 0; i < t.size(); i++) {
        EXPECT_EQ(back[i].n.theta, t[i].n.theta);
        EXPECT_EQ(back[i].n.phi, t[i].n.phi);
        EXPECT_EQ(back[i].counts, t[i].counts);
        EXPECT_EQ(back[i].shots, 500);
    }
    EXPECT_THROW(parse_tomogram_csv("theta,phi\n", HalfSpin(3)), DomainError);
    EXPECT_THROW(parse_tomogram_csv("theta,phi,m_twice,count\n0,0,9,3\n", HalfSpin(3)), DomainError);
}

TEST(Csv, MomentsRoundTrip) {
    Rng rng(9);
    std::vector<MomentSample> m = exact_moments(random_mixed(HalfSpin(4), 2, rng), 4);
    std::vector<MomentSample> back = parse_moments_csv(moments_csv(m));
    ASSERT_EQ(back.size(), m.size());
    for (size_t i = 0; i < m.size(); i++) {
        EXPECT_EQ(back[i].n.theta, m[i].n.theta);
        EXPECT_EQ(back[i].n.phi, m[i].n.phi);
        EXPECT_EQ(back[i].ell, m[i].ell);
        EXPECT_EQ(back[i].value, m[i].value);
    }
    EXPECT_THROW(parse_moments_csv("theta,phi,ell,value\n1,2,x,3\n"), DomainError);
}

}  // namespace
