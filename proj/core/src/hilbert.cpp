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

#include "kdctx/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kdctx {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateOverlap: return "DegenerateOverlap";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::InconsistentMarginal: return "InconsistentMarginal";
    case ErrorCode::ZeroProbabilityCondition: return "ZeroProbabilityCondition";
    }
    return "Unknown";
}

namespace {

bool all_finite(const Eigen::Vector3cd &v) {
    for (int i = 0; i < 3; ++i) {
        if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) return false;
    }
    return true;
}

} // namespace

StateVector StateVector::normalized(const Eigen::Vector3cd &amp) {
    const double n = amp.norm();
    if (!all_finite(amp) || n < kTolerance) {
        throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero or non-finite vector");
    }
    return StateVector(amp / n);
}

StateVector StateVector::from_unit(const Eigen::Vector3cd &amp, double tol) {
    if (!all_finite(amp) || std::abs(amp.squaredNorm() - 1.0) > tol) {
        throw Error(ErrorCode::InvalidArgument, "state vector is not normalized");
    }
    return StateVector(amp);
}

StateVector StateVector::basis(int index) {
    if (index < 0 || index > 2) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    Eigen::Vector3cd v = Eigen::Vector3cd::Zero();
    v(index) = 1.0;
    return StateVector(v);
}

StateVector StateVector::with_phase(double radians) const {
    return StateVector(amp_ * std::polar(1.0, radians));
}

Complex OperatorMatrix::sandwich(const StateVector &u, const StateVector &v) const {
    return u.amplitudes().dot(m_ * v.amplitudes());
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    const auto &a = psi.amplitudes();
    return DensityMatrix(a * a.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(Eigen::Matrix3cd::Identity() / 3.0);
}

DensityMatrix DensityMatrix::mix(const DensityMatrix &other, double weight) const {
    if (!(weight >= 0.0 && weight <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "mixing weight must lie in [0, 1]");
    }
    return DensityMatrix(weight * m_ + (1.0 - weight) * other.m_);
}

double DensityMatrix::probability(const StateVector &v) const {
    return v.amplitudes().dot(m_ * v.amplitudes()).real();
}

Complex inner(const StateVector &u, const StateVector &v) {
    // Eigen's dot() conjugates the left operand.
    return u.amplitudes().dot(v.amplitudes());
}

OperatorMatrix outer(const StateVector &a, const StateVector &b) {
    return OperatorMatrix(a.amplitudes() * b.amplitudes().adjoint());
}

OperatorMatrix projector(const StateVector &v) { return outer(v, v); }

OperatorMatrix lambda_op(const StateVector &a, const StateVector &b, double tol) {
    const Complex overlap = inner(b, a);
    if (std::abs(overlap) <= tol) {
        throw Error(ErrorCode::DegenerateOverlap, "<b|a> vanishes; Lambda(a,b) is undefined");
    }
    return (1.0 / overlap) * outer(a, b);
}

Complex expectation(const DensityMatrix &rho, const OperatorMatrix &op) {
    return (rho.matrix() * op.matrix()).trace();
}

double hermiticity_residual(const Eigen::Matrix3cd &m) {
    return max_abs(m - m.adjoint());
}

double max_abs(const Eigen::Matrix3cd &m) { return m.cwiseAbs().maxCoeff(); }

std::array<double, 3> hermitian_eigenvalues(const Eigen::Matrix3cd &m) {
    const Eigen::Matrix3cd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(h, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return {ev(0), ev(1), ev(2)};
}

double trace_distance(const Eigen::Matrix3cd &a, const Eigen::Matrix3cd &b) {
    const auto ev = hermitian_eigenvalues(a - b);
    return 0.5 * (std::abs(ev[0]) + std::abs(ev[1]) + std::abs(ev[2]));
}

std::optional<DensityDiagnosis> diagnose_density(const Eigen::Matrix3cd &m, double tol) {
    DensityDiagnosis d;
    d.hermiticity_residual = hermiticity_residual(m);
    d.trace = m.trace();
    if (!m.allFinite()) {
        d.code = ErrorCode::NotHermitian;
        d.message = "matrix has non-finite entries";
        return d;
    }
    if (d.hermiticity_residual > tol) {
        d.code = ErrorCode::NotHermitian;
        std::ostringstream os;
        os << "max |M - M^dagger| = " << d.hermiticity_residual;
        d.message = os.str();
        return d;
    }
    d.eigenvalues = hermitian_eigenvalues(m);
    d.min_eigenvalue = d.eigenvalues[0];
    if (std::abs(d.trace - 1.0) > tol) {
        d.code = ErrorCode::TraceNotOne;
        std::ostringstream os;
        os << "trace = " << d.trace.real() << (d.trace.imag() < 0 ? " - " : " + ")
           << std::abs(d.trace.imag()) << "i";
        d.message = os.str();
        return d;
    }
    if (d.min_eigenvalue < -kPsdTolerance) {
        d.code = ErrorCode::NotPositive;
        std::ostringstream os;
        os << "most negative eigenvalue = " << d.min_eigenvalue;
        d.message = os.str();
        return d;
    }
    return std::nullopt;
}

DensityMatrix validate_density(const Eigen::Matrix3cd &m, double tol) {
    if (auto diag = diagnose_density(m, tol)) {
        throw Error(diag->code, diag->message);
    }
    // Drop the roundoff-level anti-Hermitian part so downstream real-valued
    // quantities are exactly real.
    return DensityMatrix(0.5 * (m + m.adjoint()));
}

} // namespace kdctx
