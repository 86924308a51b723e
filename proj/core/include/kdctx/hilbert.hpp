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
#include <complex>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "kdctx/error.hpp"

namespace kdctx {

using Complex = std::complex<double>;

/// Default absolute tolerance for comparisons between exact small rationals.
inline constexpr double kTolerance = 1e-10;
/// Eigenvalues down to -kPsdTolerance still count as non-negative.
inline constexpr double kPsdTolerance = 1e-9;

/// Unit vector in C^3, stored in the {|1>,|2>,|3>} reference basis.
class StateVector {
public:
    /// Normalizes `amp`; throws InvalidArgument for a (near) zero vector.
    static StateVector normalized(const Eigen::Vector3cd &amp);
    /// Accepts `amp` as is, provided its norm is 1 within `tol`.
    static StateVector from_unit(const Eigen::Vector3cd &amp, double tol = kTolerance);
    static StateVector basis(int index);

    const Eigen::Vector3cd &amplitudes() const noexcept { return amp_; }
    Complex operator[](int i) const { return amp_(i); }

    /// Same ray, different global phase.
    StateVector with_phase(double radians) const;

private:
    explicit StateVector(const Eigen::Vector3cd &amp) : amp_(amp) {}
    Eigen::Vector3cd amp_;
};

/// Arbitrary 3x3 complex matrix; Lambda operators are not Hermitian.
class OperatorMatrix {
public:
    OperatorMatrix() : m_(Eigen::Matrix3cd::Zero()) {}
    explicit OperatorMatrix(const Eigen::Matrix3cd &m) : m_(m) {}

    static OperatorMatrix identity() { return OperatorMatrix(Eigen::Matrix3cd::Identity()); }

    const Eigen::Matrix3cd &matrix() const noexcept { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }
    Complex trace() const { return m_.trace(); }
    OperatorMatrix adjoint() const { return OperatorMatrix(m_.adjoint()); }

    /// <u| M |v>
    Complex sandwich(const StateVector &u, const StateVector &v) const;

    OperatorMatrix &operator+=(const OperatorMatrix &o) { m_ += o.m_; return *this; }
    OperatorMatrix &operator-=(const OperatorMatrix &o) { m_ -= o.m_; return *this; }
    OperatorMatrix &operator*=(Complex s) { m_ *= s; return *this; }

    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix &b) { return a += b; }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix &b) { return a -= b; }
    friend OperatorMatrix operator*(Complex s, OperatorMatrix a) { return a *= s; }
    friend OperatorMatrix operator*(const OperatorMatrix &a, const OperatorMatrix &b) {
        return OperatorMatrix(a.m_ * b.m_);
    }

private:
    Eigen::Matrix3cd m_;
};

/// Hermitian, unit-trace, positive semidefinite 3x3 matrix. Only
/// constructible through validation, so every instance satisfies the
/// invariants.
class DensityMatrix {
public:
    static DensityMatrix from_pure(const StateVector &psi);
    static DensityMatrix maximally_mixed();

    const Eigen::Matrix3cd &matrix() const noexcept { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }
    OperatorMatrix as_operator() const { return OperatorMatrix(m_); }

    /// Convex combination weight * this + (1 - weight) * other.
    DensityMatrix mix(const DensityMatrix &other, double weight) const;

    /// Born probability <v|rho|v>.
    double probability(const StateVector &v) const;

private:
    friend DensityMatrix validate_density(const Eigen::Matrix3cd &, double);
    explicit DensityMatrix(const Eigen::Matrix3cd &m) : m_(m) {}
    Eigen::Matrix3cd m_;
};

/// Why a candidate matrix is not a density matrix.
struct DensityDiagnosis {
    ErrorCode code;                   // NotHermitian, TraceNotOne or NotPositive
    double hermiticity_residual = 0;  // max |M - M^dagger|
    Complex trace;
    std::array<double, 3> eigenvalues{};  // ascending; valid only when Hermitian
    double min_eigenvalue = 0;
    std::string message;
};

Complex inner(const StateVector &u, const StateVector &v);
OperatorMatrix outer(const StateVector &a, const StateVector &b);  // |a><b|
OperatorMatrix projector(const StateVector &v);

/// |a><b| / <b|a>. Throws DegenerateOverlap when |<b|a>| <= tol.
OperatorMatrix lambda_op(const StateVector &a, const StateVector &b, double tol = kTolerance);

/// Tr(rho op)
Complex expectation(const DensityMatrix &rho, const OperatorMatrix &op);

/// Returns the first violated invariant, or nullopt if `m` is a valid state.
std::optional<DensityDiagnosis> diagnose_density(const Eigen::Matrix3cd &m,
                                                 double tol = kTolerance);

/// Throws Error(NotHermitian | TraceNotOne | NotPositive) on failure. The
/// NotPositive message reports the most negative eigenvalue.
DensityMatrix validate_density(const Eigen::Matrix3cd &m, double tol = kTolerance);

/// Ascending eigenvalues of the Hermitian part (M + M^dagger)/2.
std::array<double, 3> hermitian_eigenvalues(const Eigen::Matrix3cd &m);

double hermiticity_residual(const Eigen::Matrix3cd &m);

/// Largest absolute entry.
double max_abs(const Eigen::Matrix3cd &m);

/// Half the sum of absolute eigenvalues of the Hermitian part of a - b.
double trace_distance(const Eigen::Matrix3cd &a, const Eigen::Matrix3cd &b);

} // namespace kdctx
