// Copyright 2026 The kdctx Authors
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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "kdctx/hilbert.hpp"
#include "kdctx/pentagon.hpp"

namespace kdctx::testing {

inline constexpr double kExact = 1e-12;
inline constexpr double kLoose = 1e-10;

inline StateVector random_pure_vector(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::Vector3cd v;
    for (int i = 0; i < 3; ++i) v(i) = Complex(g(rng), g(rng));
    return StateVector::normalized(v);
}

inline DensityMatrix random_pure(std::mt19937_64 &rng) {
    return DensityMatrix::from_pure(random_pure_vector(rng));
}

// Rank 1, 2 or 3 with equal odds.
inline DensityMatrix random_density(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> rank_dist(1, 3);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    const int rank = rank_dist(rng);
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    double total = 0;
    for (int k = 0; k < rank; ++k) {
        const double w = u(rng);
        const auto &a = random_pure_vector(rng).amplitudes();
        m += w * a * a.adjoint();
        total += w;
    }
    return validate_density(m / total);
}

// Angles away from multiples of pi/2 so no two contexts coincide.
inline PentagonFrame random_angle_frame(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
    auto draw = [&] {
        for (;;) {
            const double t = u(rng);
            if (std::abs(std::sin(t)) > 0.1 && std::abs(std::cos(t)) > 0.1) return t;
        }
    };
    const double t1 = draw();
    return frame_from_angles(t1, draw());
}

inline bool near(Complex a, Complex b, double tol = kExact) { return std::abs(a - b) <= tol; }
inline bool near(double a, double b, double tol = kExact) { return std::abs(a - b) <= tol; }

} // namespace kdctx::testing
