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

#ifndef POINCARE_STATES_H
#define POINCARE_STATES_H

#include <optional>
#include <vector>

#include "poincare/types.h"

namespace poincare {

/// Unit-trace density matrix on the layer H_S, rows ordered m = S ... -S.
class LayerState {
   public:
    /// Normalizes the ket; throws on a zero vector or wrong dimension.
    static LayerState from_ket(HalfSpin s, const CVector &ket);
    /// Validates hermiticity, positivity and trace to 1e-12.
    static LayerState from_density(HalfSpin s, const CMatrix &rho);

    HalfSpin spin() const { return spin_; }
    const CMatrix &rho() const { return rho_; }
    bool is_pure() const { return ket_.has_value(); }
    /// Throws std::logic_error when the state was not built from a ket.
    const CVector &ket() const;
    double purity() const;

   private:
    LayerState(HalfSpin s, CMatrix rho, std::optional<CVector> ket);
    HalfSpin spin_;
    CMatrix rho_;
    std::optional<CVector> ket_;
};

struct Layer {
    HalfSpin spin;
    double weight;
    LayerState state;
};

/// Block-diagonal state over Fock layers with photon-number weights w_S.
class PolarizationSector {
   public:
    /// Validates weights (sum 1 to 1e-12, nonnegative) and strictly increasing spins.
    explicit PolarizationSector(std::vector<Layer> layers);
    static PolarizationSector single(const LayerState &state);

    const std::vector<Layer> &layers() const { return layers_; }
    double mean_photon_number() const;
    int max_twice_spin() const;

   private:
    std::vector<Layer> layers_;
};

struct FockLabel {
    int n_plus = 0;
    int n_minus = 0;

    HalfSpin spin() const { return HalfSpin(n_plus + n_minus); }
    int m_twice() const { return n_plus - n_minus; }
    static FockLabel from_spin(HalfSpin s, int m_twice);
};

/// Coefficients c_m(n) of the SU(2) coherent state |S, n>.
CVector coherent_amplitudes(HalfSpin s, const Direction &n);
LayerState su2_coherent(HalfSpin s, const Direction &n);
/// |S, m>.
LayerState fock_layer(HalfSpin s, int m_twice);
/// (|S,S> - |S,-S>)/sqrt 2.
LayerState noon(HalfSpin s);
LayerState unpolarized(HalfSpin s);
/// Phase state |delta_r>, delta_r = 2 pi r / (2S+1). Accepted r: the 2S+1 integers in (-S-1/2, S+1/2].
LayerState relative_phase_state(HalfSpin s, int r);
/// diag(lambda, 1 - 2 lambda, lambda) on S = 1.
LayerState first_order_unpolarized(double lambda);

PolarizationSector two_mode_coherent_sector(cplx alpha_plus, cplx alpha_minus, double eps = 1e-12);
PolarizationSector tmsv_sector(double r, double eps = 1e-12);

/// Draws a random pure state (Haar) or a random mixed state of the given rank.
template <typename Rng>
CVector random_ket(HalfSpin s, Rng &rng);
template <typename Rng>
LayerState random_mixed(HalfSpin s, int rank, Rng &rng);

}  // namespace poincare

#include "poincare/states_random.h"

#endif
