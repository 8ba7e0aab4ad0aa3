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

#ifndef POINCARE_TOMOGRAPHY_H
#define POINCARE_TOMOGRAPHY_H

#include <cstdint>
#include <string>
#include <vector>

#include "poincare/multipoles.h"
#include "poincare/states.h"

namespace poincare {

struct DirectionSet {
    int rank;
    std::vector<Direction> directions;
    double condition;
};

struct MomentSample {
    Direction n;
    int ell;
    double value;
};

struct TomogramCounts {
    HalfSpin spin;
    Direction n;
    int shots;
    /// counts[i] for m = S - i.
    std::vector<long> counts;
};

/// Tr[(S.n)^ell rho].
double stokes_moment(const LayerState &layer, const Direction &n, int ell);
/// sum_m m^ell C_{Sm,K0}^{Sm}.
double moment_coefficient(HalfSpin s, int K, int ell);
/// The same moment evaluated from the multipoles of rank K <= ell.
double moment_from_multipoles(const MultipoleTable &table, const Direction &n, int ell);

/// Real design matrix of rank K: columns Y_K0, 2 Re Y_Kq, -2 Im Y_Kq for q > 0.
Eigen::MatrixXd design_matrix(int K, const std::vector<Direction> &dirs);
/// 2K+1 lines spread by projective repulsion. Throws IllConditioned after 10 failed attempts.
DirectionSet design_directions(int K, std::uint64_t seed = 1, double max_condition = 1e3);

/// Exact moments on design_directions(ell) for ell = 1..M.
std::vector<MomentSample> exact_moments(const LayerState &layer, int M, std::uint64_t seed = 1);

/// Recursive linear inversion, rank K from the ell = K moments. Monopole fixed, ranks above M zero.
MultipoleTable reconstruct_multipoles(const std::vector<MomentSample> &moments, HalfSpin s, int M,
                                      double tikhonov = 0);

/// Multinomial sample of w_m(n) = <S,m|D^dagger rho D|S,m>.
TomogramCounts simulate_tomograms(const LayerState &layer, const Direction &n, int shots, std::uint64_t seed);
std::vector<double> tomogram_probabilities(const LayerState &layer, const Direction &n);
double empirical_moment(const TomogramCounts &counts, int ell);

/// theta,phi,m_twice,count
std::string tomogram_csv(const std::vector<TomogramCounts> &tomograms);
std::vector<TomogramCounts> parse_tomogram_csv(const std::string &csv, HalfSpin s);
/// theta,phi,ell,value
std::string moments_csv(const std::vector<MomentSample> &moments);
std::vector<MomentSample> parse_moments_csv(const std::string &csv);

}  // namespace poincare

#endif
