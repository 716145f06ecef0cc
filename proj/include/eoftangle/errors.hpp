// Copyright 2026 The eoftangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace eoft {

/// Invalid caller input: bad indices, wrong shapes, out-of-range parameters.
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The requested quantity needs a measurement on a party of dimension > 2.
/// Callers should route through the Koashi-Winter identity instead.
class UnsupportedDimensionError : public ArgumentError {
  public:
    using ArgumentError::ArgumentError;
};

/// Malformed or inconsistent state file.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An internal identity failed beyond numerical slack.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace eoft
