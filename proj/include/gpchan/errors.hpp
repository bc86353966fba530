// Copyright 2026 The gpchan Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace gpchan {

/// Two states whose overlap is too small for its phase to mean anything.
struct OrthogonalStates : std::domain_error {
    using std::domain_error::domain_error;
};

struct PathNotClosed : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegeneratePolygon : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The spherical coordinate chart is singular at the poles.
struct PoleSingularity : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidPort : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyTally : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Some expected cell count under the null model is too small for the
/// chi-square approximation.
struct DegenerateModel : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gpchan
