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

#include "kdctx/contextuality.hpp"

#include <cmath>
#include <random>

namespace kdctx {

namespace {

using O = Outcome;

} // namespace

SigmaReport make_sigma_report(const std::array<double, 5> &probabilities, double tol) {
    SigmaReport r;
    r.probabilities = probabilities;
    for (double p : probabilities) r.sigma += p;
    r.margin = r.sigma - kNoncontextualBound;
    r.violated = r.margin > tol;
    return r;
}

SigmaReport probability_sum(const DensityMatrix &rho, const PentagonFrame &frame) {
    std::array<double, 5> p{};
    for (std::size_t i = 0; i < kSharedOutcomes.size(); ++i) {
        p[i] = rho.probability(frame.vec(kSharedOutcomes[i]));
    }
    return make_sigma_report(p);
}

double sigma_from_data(const TomographicData &d) {
    return 1.75 + 0.25 * d.pf + (3.0 * d.r_1f - d.r_1D2 - 1.5 * d.r_D2f).real();
}

ViolationCriterion violation_criterion(const RedEntries &red, double tol) {
    ViolationCriterion v;
    v.lhs = 3.0 * red.r_1f.real() + red.r_2f.real() - 5.0 * red.r_3f.real() -
            4.0 * red.r_1P2.real();
    v.violated = v.lhs > 1.0 + tol;
    return v;
}

double sigma_from_kd(const KDDistribution11 &t) {
    const Complex s = 2.0 - t[Path::S1D2] - t[Path::S2D1] - t[Path::TwoP1] - t[Path::OneP2] -
                      t[Path::F3] - 2.0 * t[Path::Zero];
    return s.real();
}

SigmaMaximum maximize_sigma(std::uint64_t seed, int restarts, const PentagonFrame &frame) {
    // Sigma(psi) = <psi|A|psi> with A the sum of the five shared projectors;
    // ascent runs on six real amplitude parameters with shrinking steps.
    Eigen::Matrix3cd a = Eigen::Matrix3cd::Zero();
    for (Outcome o : kSharedOutcomes) a += projector(frame.vec(o)).matrix();
    auto sigma_of = [&](const Eigen::Vector3cd &v) {
        return v.dot(a * v).real() / v.squaredNorm();
    };

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    SigmaMaximum best;
    best.sigma = -1;
    best.restarts = restarts;
    for (int r = 0; r < restarts; ++r) {
        Eigen::Vector3cd v;
        for (int i = 0; i < 3; ++i) v(i) = Complex(gauss(rng), gauss(rng));
        v.normalize();
        double current = sigma_of(v);
        for (double step = 0.5; step > 1e-12; step *= 0.5) {
            bool improved = true;
            while (improved) {
                improved = false;
                for (int k = 0; k < 6; ++k) {
                    for (double dir : {1.0, -1.0}) {
                        Eigen::Vector3cd trial = v;
                        const Complex delta = k % 2 == 0 ? Complex(dir * step, 0) : Complex(0, dir * step);
                        trial(k / 2) += delta;
                        trial.normalize();
                        const double s = sigma_of(trial);
                        if (s > current) {
                            current = s;
                            v = trial;
                            improved = true;
                        }
                    }
                }
            }
        }
        if (current > best.sigma) {
            best.sigma = current;
            best.state = StateVector::normalized(v);
        }
    }
    return best;
}

} // namespace kdctx
