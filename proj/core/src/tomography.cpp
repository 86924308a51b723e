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

#include "kdctx/tomography.hpp"

#include <cmath>
#include <sstream>

namespace kdctx {

namespace {

using O = Outcome;

} // namespace

TomographicData extract(const DensityMatrix &rho, const PentagonFrame &frame) {
    return {
        rho.probability(frame.vec(O::One)),
        rho.probability(frame.vec(O::F)),
        kd_term(rho, O::One, O::F, frame),
        kd_term(rho, O::One, O::D2, frame),
        kd_term(rho, O::D2, O::F, frame),
    };
}

RedEntries red_entries(const DensityMatrix &rho, const PentagonFrame &frame) {
    return {
        kd_term(rho, O::One, O::F, frame),   kd_term(rho, O::Two, O::F, frame),
        kd_term(rho, O::Three, O::F, frame), kd_term(rho, O::One, O::S2, frame),
        kd_term(rho, O::One, O::P2, frame),
    };
}

DensityMatrix Reconstruction::density() const {
    if (diagnosis) throw Error(diagnosis->code, "reconstructed matrix: " + diagnosis->message);
    return validate_density(matrix);
}

Reconstruction reconstruct(const TomographicData &data, const PentagonFrame &frame) {
    // rho = sum_jk |v_j><u_j|rho|u_k><v_k| / (<u_j|v_j><v_k|u_k>), where
    // <u_j|rho|u_k> = rho(u_j,u_k) / <u_k|u_j> off the diagonal.
    const std::array<Outcome, 3> u = {O::One, O::F, O::D2};
    const std::array<Outcome, 3> v = {O::S2, O::Two, O::S1};

    std::array<std::array<Complex, 3>, 3> kd{};
    kd[0][1] = data.r_1f;
    kd[0][2] = data.r_1D2;
    kd[2][1] = data.r_D2f;
    kd[1][0] = std::conj(data.r_1f);
    kd[2][0] = std::conj(data.r_1D2);
    kd[1][2] = std::conj(data.r_D2f);

    auto term = [&](int j, int k) {
        const Complex coeff = 1.0 / (frame.overlap(u[k], u[j]) * frame.overlap(u[j], v[j]) *
                                     frame.overlap(v[k], u[k]));
        return (kd[j][k] * coeff) * outer(frame.vec(v[j]), frame.vec(v[k]));
    };
    auto diag = [&](int j, double p) {
        return Complex(p / std::norm(frame.overlap(u[j], v[j]))) * projector(frame.vec(v[j]));
    };

    OperatorMatrix known = diag(0, data.p1) + diag(1, data.pf);
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            if (j != k) known += term(j, k);
        }
    }
    // Tr(|S1><S1|) = 1, so the D2 block contributes P(D2)/|<D2|S1>|^2 to the trace.
    Reconstruction out;
    out.p_d2 = (1.0 - known.trace().real()) * std::norm(frame.overlap(u[2], v[2]));
    out.matrix = (known + diag(2, out.p_d2)).matrix();
    out.diagnosis = diagnose_density(out.matrix);
    return out;
}

MarginalCheck red_to_data_checked(const RedEntries &red, double imag_tol) {
    const Complex p1 = red.r_1f + red.r_1S2 + red.r_1P2;
    const Complex pf = red.r_1f + red.r_2f + red.r_3f;
    MarginalCheck out;
    out.imag_p1 = p1.imag();
    out.imag_pf = pf.imag();
    if (std::abs(out.imag_p1) > imag_tol || std::abs(out.imag_pf) > imag_tol) {
        std::ostringstream os;
        os << "marginals have imaginary parts Im P(1) = " << out.imag_p1
           << ", Im P(f) = " << out.imag_pf;
        throw Error(ErrorCode::InconsistentMarginal, os.str());
    }
    out.data = {p1.real(), pf.real(), red.r_1f, red.r_1f + red.r_1P2, red.r_1f + red.r_3f};
    return out;
}

TomographicData red_to_data(const RedEntries &red, double imag_tol) {
    return red_to_data_checked(red, imag_tol).data;
}

CompletedEntries complete_table(const RedEntries &r) {
    const double a = r.r_1f.real(), b = r.r_2f.real(), c = r.r_3f.real();
    const double d = r.r_1S2.real(), e = r.r_1P2.real();
    const double ia = r.r_1f.imag(), ib = r.r_2f.imag(), ic = r.r_3f.imag();
    const double id = r.r_1S2.imag(), ie = r.r_1P2.imag();
    return {
        Complex(0.25 * (1.0 + a - 3.0 * b - c - 2.0 * d - 2.0 * e), 0.5 * (ib - ic + id - ie)),
        Complex(0.5 * (1.0 - a + b - 3.0 * c - 2.0 * d + 2.0 * e),
                (2.0 * ia - 5.0 * ib + 3.0 * ic - id - ie) / 8.0),
        Complex(0.25 * (1.0 - 3.0 * a - 3.0 * b + 3.0 * c + 2.0 * d - 6.0 * e),
                (2.0 * ia - ib - ic - 5.0 * id + 3.0 * ie) / 8.0),
    };
}

DerivedProbabilities derived_probabilities(const TomographicData &d) {
    const double re_1d2 = d.r_1D2.real();
    const double re_d2f = d.r_D2f.real();
    DerivedProbabilities p;
    p.p2 = 0.5 * (1.0 - 2.0 * d.p1 + 3.0 * d.pf + 4.0 * re_1d2 - 6.0 * re_d2f);
    p.ps2 = 0.25 * (1.0 + 6.0 * d.p1 - 3.0 * d.pf - (12.0 * re_1d2 - 6.0 * re_d2f));
    p.pd2 = 0.25 * (1.0 - 2.0 * d.p1 - 3.0 * d.pf + 4.0 * re_1d2 + 6.0 * re_d2f);
    p.ps1 = 1.0 - 1.5 * d.p1 - 1.5 * d.pf + 3.0 * d.r_1f.real();
    return p;
}

} // namespace kdctx
