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
#include <limits>
#include <optional>

#include "kdctx/hilbert.hpp"
#include "kdctx/kd.hpp"
#include "kdctx/pentagon.hpp"

namespace kdctx {

/// Five coefficients that determine any qutrit state: P(1), P(f) and the KD
/// terms rho(1,f), rho(1,D2), rho(D2,f).
struct TomographicData {
    double p1 = 0;
    double pf = 0;
    Complex r_1f;
    Complex r_1D2;
    Complex r_D2f;

    TomographicData operator*(double s) const { return {p1 * s, pf * s, r_1f * s, r_1D2 * s, r_D2f * s}; }
    TomographicData operator+(const TomographicData &o) const {
        return {p1 + o.p1, pf + o.pf, r_1f + o.r_1f, r_1D2 + o.r_1D2, r_D2f + o.r_D2f};
    }
};

/// The five KD-table entries sufficient for reconstruction.
struct RedEntries {
    Complex r_1f;
    Complex r_2f;
    Complex r_3f;
    Complex r_1S2;
    Complex r_1P2;
};

/// Remaining three KD-table entries.
struct CompletedEntries {
    Complex r_3P2;
    Complex r_2P2;
    Complex r_3S2;
};

TomographicData extract(const DensityMatrix &rho, const PentagonFrame &frame = canonical_frame());
RedEntries red_entries(const DensityMatrix &rho, const PentagonFrame &frame = canonical_frame());

/// Result of assembling a density operator from tomographic data. The
/// matrix is always returned; `diagnosis` is set when it is not a valid
/// state (noisy or inconsistent data).
struct Reconstruction {
    Eigen::Matrix3cd matrix;
    double p_d2 = 0;  // P(D2) implied by the trace condition
    std::optional<DensityDiagnosis> diagnosis;

    bool valid() const noexcept { return !diagnosis.has_value(); }
    /// The validated state; throws the diagnosed error (typically NotPositive).
    DensityMatrix density() const;
};

/// Expansion over the non-orthogonal basis {S2, 2, S1} dual to {1, f, D2}.
/// On the canonical frame this is
///   2P(1)|S2><S2| + 3P(f)|2><2| + 4P(D2)|S1><S1|
///   + 3sqrt2 rho(1,f)|S2><2| + h.c. - 2rho(1,D2)Lambda(S2,S1) + h.c.
///   - 3rho(f,D2)Lambda(2,S1) + h.c.
/// with P(D2) fixed by Tr = 1. Reversed-order KD terms are the conjugates.
Reconstruction reconstruct(const TomographicData &data,
                           const PentagonFrame &frame = canonical_frame());

/// Result of red_to_data with the imaginary parts of the two marginals.
struct MarginalCheck {
    TomographicData data;
    double imag_p1 = 0;
    double imag_pf = 0;
};

/// P(1) and P(f) are marginals of the red entries; rho(1,D2) = rho(1,f) +
/// rho(1,P2) and rho(D2,f) = rho(1,f) + rho(3,f). Throws InconsistentMarginal
/// if either marginal has an imaginary part above `imag_tol`.
MarginalCheck red_to_data_checked(const RedEntries &red, double imag_tol = 1e-8);
TomographicData red_to_data(const RedEntries &red, double imag_tol = 1e-8);

/// Closed-form completion of the KD table (canonical frame).
CompletedEntries complete_table(const RedEntries &red);

struct DerivedProbabilities {
    double p2 = 0;
    double ps2 = 0;
    double pd2 = 0;
    double ps1 = 0;
};

/// P(2), P(S2), P(D2), P(S1) as affine functions of the data (canonical frame).
DerivedProbabilities derived_probabilities(const TomographicData &data);

} // namespace kdctx
