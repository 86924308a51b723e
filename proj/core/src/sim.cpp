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

#include "kdctx/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <thread>

#include "kdctx/contextuality.hpp"

namespace kdctx {

namespace {

using O = Outcome;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Multinomial via conditional binomials: O(bins) work per draw.
std::vector<std::uint64_t> multinomial(std::mt19937_64 &rng, std::vector<double> probs,
                                       std::uint64_t shots) {
    for (double &p : probs) p = std::clamp(p, 0.0, 1.0);
    double mass = 0;
    for (double p : probs) mass += p;
    std::vector<std::uint64_t> counts(probs.size(), 0);
    if (mass <= 0) throw Error(ErrorCode::InvalidArgument, "outcome probabilities vanish");
    std::uint64_t remaining = shots;
    double remaining_mass = mass;
    for (std::size_t i = 0; i + 1 < probs.size() && remaining > 0; ++i) {
        const double q = remaining_mass > 0 ? std::clamp(probs[i] / remaining_mass, 0.0, 1.0) : 0.0;
        std::binomial_distribution<std::uint64_t> binom(remaining, q);
        counts[i] = q >= 1.0 ? remaining : binom(rng);
        remaining -= counts[i];
        remaining_mass -= probs[i];
    }
    counts.back() += remaining;
    return counts;
}

std::string format_value(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto &t : pool) t.join();
}

void require_shots(std::uint64_t shots, std::uint64_t minimum) {
    if (shots < minimum) {
        throw Error(ErrorCode::InvalidArgument,
                    "at least " + std::to_string(minimum) + " shot(s) required");
    }
}

} // namespace

std::uint64_t derive_seed(Seed seed, std::uint64_t unit) noexcept {
    return splitmix64(splitmix64(seed) + unit);
}

CountRecord sample_context(const DensityMatrix &rho, Context context, std::uint64_t shots,
                           Seed seed, const PentagonFrame &frame) {
    require_shots(shots, 1);
    CountRecord rec;
    rec.basis = std::string(to_string(context));
    rec.shots = shots;
    std::vector<double> probs;
    for (Outcome o : members(context)) {
        rec.outcomes.emplace_back(to_string(o));
        probs.push_back(rho.probability(frame.vec(o)));
    }
    std::mt19937_64 rng(derive_seed(seed, 0));
    rec.counts = multinomial(rng, probs, shots);
    return rec;
}

ObservableSample sample_observable(const DensityMatrix &rho, const OperatorMatrix &h,
                                   std::uint64_t shots, Seed seed, std::string label) {
    require_shots(shots, 1);
    if (hermiticity_residual(h.matrix()) > kTolerance) {
        throw Error(ErrorCode::NotHermitian, "observable is not Hermitian");
    }
    const Eigen::Matrix3cd hm = 0.5 * (h.matrix() + h.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(hm);
    const auto &values = solver.eigenvalues();
    const auto &vectors = solver.eigenvectors();

    ObservableSample out;
    std::vector<double> probs;
    for (int i = 0; i < 3;) {
        int j = i + 1;
        while (j < 3 && values(j) - values(j - 1) < 1e-9) ++j;
        Eigen::Matrix3cd proj = Eigen::Matrix3cd::Zero();
        double sum = 0;
        for (int k = i; k < j; ++k) {
            proj += vectors.col(k) * vectors.col(k).adjoint();
            sum += values(k);
        }
        const double value = sum / (j - i);
        out.eigenvalues.push_back(value);
        out.record.outcomes.push_back(format_value(value));
        probs.push_back((rho.matrix() * proj).trace().real());
        i = j;
    }
    out.record.basis = std::move(label);
    out.record.shots = shots;
    std::mt19937_64 rng(derive_seed(seed, 0));
    out.record.counts = multinomial(rng, probs, shots);

    const double n = static_cast<double>(shots);
    for (std::size_t k = 0; k < out.eigenvalues.size(); ++k) {
        out.mean += out.eigenvalues[k] * static_cast<double>(out.record.counts[k]);
    }
    out.mean /= n;
    if (shots > 1) {
        double ss = 0;
        for (std::size_t k = 0; k < out.eigenvalues.size(); ++k) {
            const double d = out.eigenvalues[k] - out.mean;
            ss += d * d * static_cast<double>(out.record.counts[k]);
        }
        out.stderr_mean = std::sqrt(ss / (n - 1.0) / n);
    }
    return out;
}

KDEstimate estimate_kd(const DensityMatrix &rho, Outcome a, Outcome b, std::uint64_t shots,
                       Seed seed, const PentagonFrame &frame) {
    KDEstimate est;
    const Complex overlap = frame.overlap(b, a);
    if (std::abs(overlap) <= kTolerance) return est;
    require_shots(shots, 2);

    // Tr(rho K) = <b|a><a|rho|b> = rho(a,b).
    const OperatorMatrix k = overlap * outer(frame.vec(b), frame.vec(a));
    const OperatorMatrix herm = Complex(0.5) * (k + k.adjoint());
    const OperatorMatrix anti = Complex(0, -0.5) * (k - k.adjoint());
    const std::string name = std::string(to_string(a)) + "," + std::string(to_string(b));

    const std::uint64_t shots_h = shots - shots / 2;
    const std::uint64_t shots_a = shots / 2;
    est.settings.push_back(sample_observable(rho, herm, shots_h, derive_seed(seed, 0), "Re[" + name + "]"));
    est.settings.push_back(sample_observable(rho, anti, shots_a, derive_seed(seed, 1), "Im[" + name + "]"));
    est.value = Complex(est.settings[0].mean, est.settings[1].mean);
    est.stderr_re = est.settings[0].stderr_mean;
    est.stderr_im = est.settings[1].stderr_mean;
    return est;
}

std::array<std::pair<Outcome, Outcome>, 5> red_entry_pairs() {
    return {{{O::One, O::F}, {O::Two, O::F}, {O::Three, O::F}, {O::One, O::S2}, {O::One, O::P2}}};
}

EstimationReport analyze_red_entries(const RedEntries &red,
                                     const std::array<std::array<double, 2>, 5> &red_stderr,
                                     const DensityMatrix &truth, const PentagonFrame &frame) {
    EstimationReport r;
    r.estimated = red;
    r.red_stderr = red_stderr;
    const auto checked = red_to_data_checked(red, std::numeric_limits<double>::infinity());
    r.data = checked.data;
    r.imag_p1 = checked.imag_p1;
    r.imag_pf = checked.imag_pf;
    r.reconstruction = reconstruct(r.data, frame);
    r.trace_distance = trace_distance(r.reconstruction.matrix, truth.matrix());

    r.sigma_from_red = violation_criterion(red).sigma();
    const auto &s = red_stderr;
    const double var = 9.0 * s[0][0] * s[0][0] + s[1][0] * s[1][0] + 25.0 * s[2][0] * s[2][0] +
                       16.0 * s[4][0] * s[4][0];
    r.sigma_from_red_stderr = 0.25 * std::sqrt(var);
    return r;
}

EstimationReport run_tomography_experiment(const DensityMatrix &rho,
                                           std::uint64_t shots_per_setting, Seed seed,
                                           const PentagonFrame &frame, SimOptions options) {
    require_shots(shots_per_setting, 2);
    const auto pairs = red_entry_pairs();
    std::array<KDEstimate, 5> estimates;
    parallel_for(pairs.size(), options.threads, [&](std::size_t i) {
        estimates[i] = estimate_kd(rho, pairs[i].first, pairs[i].second, shots_per_setting,
                                   derive_seed(seed, i), frame);
    });

    RedEntries red{estimates[0].value, estimates[1].value, estimates[2].value,
                   estimates[3].value, estimates[4].value};
    std::array<std::array<double, 2>, 5> se{};
    for (std::size_t i = 0; i < 5; ++i) se[i] = {estimates[i].stderr_re, estimates[i].stderr_im};

    auto report = analyze_red_entries(red, se, rho, frame);
    report.shots_per_setting = shots_per_setting;
    report.seed = seed;
    for (const auto &e : estimates) {
        for (const auto &s : e.settings) report.settings.push_back(s.record);
    }
    return report;
}

InequalityReport run_inequality_experiment(const DensityMatrix &rho,
                                           std::uint64_t shots_per_context, Seed seed,
                                           const PentagonFrame &frame, SimOptions options) {
    require_shots(shots_per_context, 1);
    constexpr std::array<Context, 4> contexts = {Context::C123, Context::C1, Context::C2,
                                                 Context::Cf1};
    std::vector<CountRecord> records(contexts.size());
    parallel_for(contexts.size(), options.threads, [&](std::size_t i) {
        records[i] = sample_context(rho, contexts[i], shots_per_context, derive_seed(seed, i), frame);
    });

    auto freq = [&](std::size_t ctx, Outcome o) {
        const auto m = members(contexts[ctx]);
        const auto it = std::find(m.begin(), m.end(), o);
        return records[ctx].frequency(static_cast<std::size_t>(it - m.begin()));
    };

    InequalityReport r;
    r.seed = seed;
    r.shots_per_context = shots_per_context;
    r.probabilities = {freq(0, O::One), freq(0, O::Two), freq(1, O::S1), freq(2, O::S2),
                       freq(3, O::F)};
    for (double p : r.probabilities) r.sigma_hat += p;

    // P(1) and P(2) come from one multinomial, so their sum is binomial.
    const double n = static_cast<double>(shots_per_context);
    const double p12 = r.probabilities[0] + r.probabilities[1];
    double var = p12 * (1.0 - p12);
    for (std::size_t i = 2; i < 5; ++i) var += r.probabilities[i] * (1.0 - r.probabilities[i]);
    r.stderr_sigma = std::sqrt(std::max(var, 0.0) / n);
    r.settings = std::move(records);
    return r;
}

} // namespace kdctx
