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

#ifndef POINCARE_ERRORS_H
#define POINCARE_ERRORS_H

#include <stdexcept>
#include <string>

namespace poincare {

/// The requested quantity is undefined for this input (zero intensity, zero mean spin, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : DomainError {
    using DomainError::DomainError;
};

struct IllConditioned : DomainError {
    using DomainError::DomainError;
};

}  // namespace poincare

#endif
