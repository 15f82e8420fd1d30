// Copyright 2026 The extremal-states Authors
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

#ifndef EXTREMAL_ERRORS_HPP
#define EXTREMAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace extremal {

/// Base class for all library failures that are not plain precondition
/// violations (those throw std::invalid_argument).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix shapes inconsistent with each other or with a DimensionPair.
struct DimensionError : Error {
    using Error::Error;
};

/// An input that must be positive semidefinite is not (beyond tolerance).
struct ConeViolationError : Error {
    using Error::Error;
};

/// The pivoted block decomposition produced a numerically singular leading
/// block; usually a sign of an inconsistent rank tolerance.
struct DecompositionError : Error {
    using Error::Error;
};

/// A perturbation direction is unusable: zero, outside the admissible
/// orthogonal complement, or unbounded for a boundary step.
struct DirectionError : Error {
    using Error::Error;
};

/// An operation required a state inside C(rho1, rho2) but validation failed.
struct MembershipError : Error {
    using Error::Error;
};

}  // namespace extremal

#endif
