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
#include <string>
#include <vector>

#include "kdctx/hilbert.hpp"
#include "kdctx/pentagon.hpp"
#include "kdctx/tomography.hpp"

namespace kdctx {

using Seed = std::uint64_t;

/// Stream seed for parallel unit `unit`: splitmix64(splitmix64(seed) + unit).
/// Every sampling call seeds a fresh mt19937_64 from one of these, so results
/// do not depend on scheduling.
std::uint64_t derive_seed(Seed seed, std::uint64_t unit) noexcept;

/// Counts of one projective measurement.
struct CountRecord {
    std::string basis;
    std::vector<std::string> outcomes;
    std::vector<std::uint64_t> counts;
    std::uint64_t shots = 0;

    double frequency(std::size_t i) const {
        return shots ? static_cast<double>(counts[i]) / static_cast<double>(shots) : 0.0;
    }
};

struct SimOptions {
    /// Worker threads for independent settings; results are identical for
    /// any value.
    unsigned threads = 1;
};

/// Multinomial draw with probabilities P(a) = <a|rho|a>, a in `context`.
CountRecord sample_context(const DensityMatrix &rho, Context context, std::uint64_t shots,
                           Seed seed, const PentagonFrame &frame = canonical_frame());

struct ObservableSample {
    CountRecord record;
    std::vector<double> eigenvalues;  // value of each bin
    double mean = 0;
    double stderr_mean = 0;
};

/// Projective measurement of Hermitian `h` in its eigenbasis. Eigenvalues
/// closer than 1e-9 share one bin. Throws NotHermitian.
ObservableSample sample_observable(const DensityMatrix &rho, const OperatorMatrix &h,
                                   std::uint64_t shots, Seed seed, std::string label = "H");

struct KDEstimate {
    Complex value;
    /// Standard errors of the real and imaginary parts.
    double stderr_re = 0;
    double stderr_im = 0;
    /// Empty when <a|b> = 0 (the estimate is exactly zero).
    std::vector<ObservableSample> settings;
};

/// Unbiased estimate of rho(a,b): Tr(rho K) with K = <b|a>|b><a| split into
/// Hermitian and anti-Hermitian parts, each sampled with half the shots (the
/// extra shot of an odd total goes to the Hermitian part). Requires shots >= 2.
KDEstimate estimate_kd(const DensityMatrix &rho, Outcome a, Outcome b, std::uint64_t shots,
                       Seed seed, const PentagonFrame &frame = canonical_frame());

struct EstimationReport {
    RedEntries estimated;
    /// Standard errors (real, imaginary) for r_1f, r_2f, r_3f, r_1S2, r_1P2.
    std::array<std::array<double, 2>, 5> red_stderr{};
    TomographicData data;
    double imag_p1 = 0;
    double imag_pf = 0;
    Reconstruction reconstruction;
    double trace_distance = 0;
    /// Sigma implied by the red entries, with propagated standard error.
    double sigma_from_red = 0;
    double sigma_from_red_stderr = 0;
    std::uint64_t shots_per_setting = 0;
    Seed seed = 0;
    std::vector<CountRecord> settings;
};

/// Red entries in the order r_1f, r_2f, r_3f, r_1S2, r_1P2.
std::array<std::pair<Outcome, Outcome>, 5> red_entry_pairs();

/// Downstream half of the tomography pipeline: red entries -> data ->
/// reconstruction -> trace distance against `truth`.
EstimationReport analyze_red_entries(const RedEntries &red,
                                     const std::array<std::array<double, 2>, 5> &red_stderr,
                                     const DensityMatrix &truth,
                                     const PentagonFrame &frame = canonical_frame());

EstimationReport run_tomography_experiment(const DensityMatrix &rho,
                                           std::uint64_t shots_per_setting, Seed seed,
                                           const PentagonFrame &frame = canonical_frame(),
                                           SimOptions options = {});

struct InequalityReport {
    double sigma_hat = 0;
    double stderr_sigma = 0;
    /// P(1), P(2), P(S1), P(S2), P(f) estimates.
    std::array<double, 5> probabilities{};
    std::uint64_t shots_per_context = 0;
    Seed seed = 0;
    /// C123, C1, C2, Cf1.
    std::vector<CountRecord> settings;
};

/// P(1), P(2) from C123; P(S1) from C1; P(S2) from C2; P(f) from Cf1.
InequalityReport run_inequality_experiment(const DensityMatrix &rho,
                                           std::uint64_t shots_per_context, Seed seed,
                                           const PentagonFrame &frame = canonical_frame(),
                                           SimOptions options = {});

} // namespace kdctx
