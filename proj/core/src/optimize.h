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

#ifndef POINCARE_SRC_OPTIMIZE_H
#define POINCARE_SRC_OPTIMIZE_H

#include <functional>
#include <vector>

namespace poincare::detail {

using Objective = std::function<double(const std::vector<double> &)>;
using Gradient = std::function<void(const std::vector<double> &, std::vector<double> &)>;

struct Minimum {
    std::vector<double> x;
    double value;
};

/// Derivative-free simplex search; stops when the simplex size falls below size_tol.
Minimum nelder_mead(const Objective &f, std::vector<double> x0, double step, double size_tol, int max_iter);

/// Quasi-Newton descent with an analytic gradient.
Minimum bfgs(const Objective &f, const Gradient &grad, std::vector<double> x0, double grad_tol, int max_iter);

/// Golden-section minimization of a unimodal function bracketed by [a, b] around guess.
double golden_section(const std::function<double(double)> &f, double a, double guess, double b, double tol,
                      int max_iter);

}  // namespace poincare::detail

#endif
