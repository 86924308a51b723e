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

#include <array>
#include <cstdint>

#include "kdctx/hilbert.hpp"
#include "kdctx/kd.hpp"
#include "kdctx/pentagon.hpp"
#include "kdctx/tomography.hpp"

namespace kdctx {

/// Non-contextual models bound the sum of the five shared-outcome
/// probabilities by 2.
inline constexpr double kNoncontextualBound = 2.0;

struct SigmaReport {
    double sigma = 0;
    /// P(1), P(2), P(S1), P(S2), P(f) in kSharedOutcomes order.
    std::array<double, 5> probabilities{};
    bool violated = false;
    double margin = 0;  // sigma - 2
};

SigmaReport make_sigma_report(const std::array<double, 5> &probabilities,
                              double tol = kTolerance);

/// Born-rule evaluation of P(1)+P(2)+P(S1)+P(S2)+P(f).
SigmaReport probability_sum(const DensityMatrix &rho,
                            const PentagonFrame &frame = canonical_frame());

/// 7/4 + P(f)/4 + Re(3rho(1,f) - rho(1,D2) - 3/2 rho(D2,f)); canonical frame.
double sigma_from_data(const TomographicData &data);

struct ViolationCriterion {
    double lhs = 0;  // Re(3rho(1,f) + rho(2,f) - 5rho(3,f) - 4rho(1,P2))
    bool violated = false;
    /// Sigma implied by the red entries, 7/4 + lhs/4.
    double sigma() const { return 1.75 + 0.25 * lhs; }
};

/// Violation iff lhs > 1 + tol; canonical frame.
ViolationCriterion violation_criterion(const RedEntries &red, double tol = kTolerance);

/// 2 minus the terms of paths with fewer than two shared outcomes (the [0]
/// path counted twice); real part.
double sigma_from_kd(const KDDistribution11 &terms);

struct SigmaMaximum {
    double sigma = 0;
    StateVector state = StateVector::basis(0);
    int restarts = 0;
};

/// Random restarts plus coordinate ascent over pure states. Diagnostic only.
SigmaMaximum maximize_sigma(std::uint64_t seed, int restarts = 32,
                            const PentagonFrame &frame = canonical_frame());

} // namespace kdctx
