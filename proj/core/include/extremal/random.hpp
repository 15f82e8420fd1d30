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

#ifndef EXTREMAL_RANDOM_HPP
#define EXTREMAL_RANDOM_HPP

#include <random>

#include "extremal/matrix.hpp"

namespace extremal {

/// RNG state is always caller-supplied; nothing in the library keeps global
/// randomness.
using Rng = std::mt19937_64;

/// Matrix of independent standard complex Gaussians (real and imaginary
/// parts each N(0,1)).
Matrix complex_gaussian(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed unitary, generated by Gram-Schmidt orthonormalization of
/// a complex Gaussian matrix. Adequate at the small orders used here.
Matrix haar_unitary(std::size_t d, Rng& rng);

}  // namespace extremal

#endif
