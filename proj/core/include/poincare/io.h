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

#ifndef POINCARE_IO_H
#define POINCARE_IO_H

#include <string>

#include "poincare/majorana.h"
#include "poincare/multipoles.h"
#include "poincare/states.h"

namespace poincare {

/// State files hold a sector {"layers": [{"twice_spin", "weight", "rho": [[[re, im], ...], ...]}, ...]}.
/// A pure layer may give "amplitudes": [[re, im], ...] instead of "rho", and a file holding
/// one layer may drop the "layers" wrapper and the weight.
/// Schema violations throw DomainError naming the offending JSON path.
PolarizationSector parse_state(const std::string &text);
PolarizationSector load_state(const std::string &path);
/// Always the "layers" form, pure layers as amplitudes. Doubles use shortest round-trip formatting.
std::string state_json(const PolarizationSector &sector);
void save_state(const std::string &path, const PolarizationSector &sector);

/// {"twice_spin", "entries": [{"K", "q", "re", "im"}, ...]}
std::string multipoles_json(const MultipoleTable &table);
MultipoleTable parse_multipoles(const std::string &text);

/// {"twice_spin", "points": [{"theta", "phi"}, ...]}
std::string constellation_json(const Constellation &c);
Constellation parse_constellation(const std::string &text);

/// Whole file as a string; DomainError when it cannot be opened.
std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

}  // namespace poincare

#endif
