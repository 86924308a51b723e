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
#include <vector>

#include "kdctx/hilbert.hpp"
#include "kdctx/pentagon.hpp"

namespace kdctx {

/// Rows whose outcome probability is at or below this are undefined.
inline constexpr double kMinConditionProbability = 1e-12;

/// W(b|a) = rho(b,a) / P(a): the contextual outcome value of b given that a
/// was observed. Throws ZeroProbabilityCondition when P(a) <= 1e-12.
Complex contextual_value(const DensityMatrix &rho, Outcome b, Outcome a,
                         const PentagonFrame &frame = canonical_frame());

struct OutcomeValueRow {
    Outcome outcome;
    double probability = 0;
    bool defined = false;
    /// W(b|outcome) for every b, indexed by index(b); zero when undefined.
    std::array<Complex, kOutcomeCount> values{};

    Complex value(Outcome b) const { return values[index(b)]; }
};

struct OutcomeValueTable {
    Context context;
    std::array<OutcomeValueRow, 3> rows;
};

OutcomeValueTable outcome_value_table(const DensityMatrix &rho, Context context,
                                      const PentagonFrame &frame = canonical_frame());

/// Statistics of W(b|a) over the outcomes a of one context, weighted by P(a).
/// Undefined rows carry zero weight and are listed separately.
struct FluctuationReport {
    Outcome b;
    Context context;
    double probability = 0;    // Born P(b)
    double mean = 0;           // Re sum_a W(b|a) P(a)
    double variance = 0;       // sum_a |W(b|a) - P(b)|^2 P(a)
    double second_moment = 0;  // sum_a |W(b|a)|^2 P(a)
    bool bound_satisfied = false;
    std::vector<Outcome> undefined_rows;
};

FluctuationReport fluctuation(const DensityMatrix &rho, Outcome b, Context context,
                              const PentagonFrame &frame = canonical_frame(),
                              double tol = kTolerance);

FluctuationReport fluctuation(const OutcomeValueTable &table, Outcome b, double probability,
                              double tol = kTolerance);

} // namespace kdctx
