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

#ifndef POINCARE_TYPES_H
#define POINCARE_TYPES_H

#include <complex>
#include <compare>

#include <Eigen/Dense>

namespace poincare {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Spin label S kept as the integer 2S.
struct HalfSpin {
    int twice = 0;

    HalfSpin() = default;
    explicit HalfSpin(int twice_value);

    double value() const { return 0.5 * twice; }
    int dim() const { return twice + 1; }
    bool is_integer() const { return twice % 2 == 0; }

    /// 2m for basis row i; rows run m = S, S-1, ..., -S.
    int m_twice(int i) const { return twice - 2 * i; }
    double m(int i) const { return 0.5 * (twice - 2 * i); }
    /// Basis row of projection 2m. Throws on bad parity or range.
    int index_of(int m_twice) const;

    auto operator<=>(const HalfSpin &) const = default;
};

/// Point on the unit sphere in polar coordinates.
struct Direction {
    double theta = 0;
    double phi = 0;

    Eigen::Vector3d unit() const;
    static Direction from_vector(const Eigen::Vector3d &v);
};

}  // namespace poincare

#endif
