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

#ifndef POINCARE_DEGREES_H
#define POINCARE_DEGREES_H

#include <cstdint>
#include <map>
#include <string>

#include "poincare/states.h"

namespace poincare {

enum class DegreeKind {
    semiclassical,
    semiclassical2,
    semiclassical2_invariant,
    hilbert_schmidt,
    trace,
    bures,
    chernoff,
    husimi,
    distinguishability,
    purity,
};

struct DegreeReport {
    DegreeKind kind;
    double value;
    std::map<std::string, double> meta;
};

std::string to_string(DegreeKind kind);
/// Accepts the long names above and the short forms s, s2, s2inv, hs, t, b, c, q, d, p.
DegreeKind parse_degree_kind(const std::string &name);

enum class SemiclassicalVariant { s, s2, s2inv };
enum class DistanceMetric { hilbert_schmidt, trace, bures, chernoff };

/// DomainError when <S_0> = 0.
double semiclassical_degree(const PolarizationSector &sector, SemiclassicalVariant variant);

/// Distances to the unpolarized sector with the same photon statistics.
DegreeReport distance_degree(const PolarizationSector &sector, DistanceMetric metric);

/// (1/4 pi) int Q^2 dn computed from multipoles, including cross-layer terms.
double husimi_q_squared_mean(const PolarizationSector &sector);
/// P_Q = D_Q/(D_Q+1). With grid_check the quadrature value is reported as meta "D_Q_grid".
DegreeReport husimi_degree(const PolarizationSector &sector, bool grid_check = false);

/// Minimum over SU(2) of the averaged overlap, 24^3 Euler grid then simplex refinement of the best starts.
DegreeReport distinguishability_degree(const PolarizationSector &sector, int restarts = 6, std::uint64_t seed = 1);

/// sum_S w_S [(2S+1) Tr(rho^2) - 1]/(2S), vacuum excluded.
DegreeReport purity_degree(const PolarizationSector &sector);

DegreeReport degree(const PolarizationSector &sector, DegreeKind kind, std::uint64_t seed = 1);

}  // namespace poincare

#endif
