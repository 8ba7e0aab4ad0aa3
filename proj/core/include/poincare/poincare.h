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

#ifndef POINCARE_POINCARE_H
#define POINCARE_POINCARE_H

#include "poincare/angular.h"
#include "poincare/classical.h"
#include "poincare/degrees.h"
#include "poincare/errors.h"
#include "poincare/io.h"
#include "poincare/majorana.h"
#include "poincare/multipoles.h"
#include "poincare/phase_space.h"
#include "poincare/states.h"
#include "poincare/stokes.h"
#include "poincare/tomography.h"
#include "poincare/transforms.h"
#include "poincare/types.h"

namespace poincare {

inline constexpr const char *kVersion = "0.1.0";

}  // namespace poincare

#endif
