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
#include <string>
#include <vector>

#include "kdctx/hilbert.hpp"
#include "kdctx/pentagon.hpp"

namespace kdctx {

/// Kirkwood-Dirac term rho(a,b) = <b|a><a|rho|b>. Zero whenever <a|b> = 0.
Complex kd_term(const DensityMatrix &rho, Outcome a, Outcome b,
                const PentagonFrame &frame = canonical_frame());

/// KD term of the path through the five unique outcomes:
/// rho(0) = rho(D1,D2) - rho(3,f).
Complex rho_zero(const DensityMatrix &rho, const PentagonFrame &frame = canonical_frame());

/// Multi-context KD distribution over the eleven classical paths.
class KDDistribution11 {
public:
    KDDistribution11() { terms_.fill(Complex{}); }
    explicit KDDistribution11(const std::array<Complex, kPathCount> &terms) : terms_(terms) {}

    Complex operator[](Path p) const { return terms_[index(p)]; }
    Complex &operator[](Path p) { return terms_[index(p)]; }
    const std::array<Complex, kPathCount> &terms() const noexcept { return terms_; }

    /// rho(a,b) for a pair that labels a path, in either order; the reverse
    /// order is the complex conjugate of the stored term. Throws
    /// InvalidArgument for pairs that do not label a path.
    Complex term(Outcome a, Outcome b) const;

    Complex total() const;

private:
    std::array<Complex, kPathCount> terms_;
};

KDDistribution11 eleven_terms(const DensityMatrix &rho,
                              const PentagonFrame &frame = canonical_frame());

/// Sum of the eleven terms over the paths through outcome `o` in context `c`.
Complex path_marginal(const KDDistribution11 &terms, Context c, Outcome o);

/// One line of a five-line relation, e.g. Lambda(1,S2)+Lambda(f,2)+Lambda(D2,S1) = I.
struct ResidualLine {
    std::string relation;
    double residual = 0;
};

struct ResidualReport {
    std::array<ResidualLine, 5> lines;
    double max_residual() const;
    /// 1-based indices of lines whose residual exceeds tol.
    std::vector<int> failing(double tol) const;
};

/// Max-norm residual of each of the five Lambda-operator decompositions of
/// the identity.
ResidualReport identity_residuals(const PentagonFrame &frame = canonical_frame());

/// Same as identity_residuals but throws IdentityViolation listing the
/// failing lines when any residual exceeds tol.
ResidualReport verify_identities(const PentagonFrame &frame = canonical_frame(),
                                 double tol = kTolerance);

/// The five weighted sums implied by the Lambda identities, each equal to 1.
/// Weights 1/|<a|b>|^2 come from the frame, and terms are evaluated in the
/// order the relations are conventionally written (e.g. rho(f,2)).
ResidualReport determinism_residuals(const KDDistribution11 &terms,
                                     const PentagonFrame &frame = canonical_frame());

/// Throws ConstraintViolation naming the failing lines.
ResidualReport check_determinism(const KDDistribution11 &terms,
                                 const PentagonFrame &frame = canonical_frame(),
                                 double tol = kTolerance);

/// Two-context KD distribution: rows f, S2, P2 against columns 1, 2, 3.
struct KDTable {
    static constexpr std::array<Outcome, 3> kRows = {Outcome::F, Outcome::S2, Outcome::P2};
    static constexpr std::array<Outcome, 3> kColumns = {Outcome::One, Outcome::Two, Outcome::Three};

    /// entries[row][col] = rho(column outcome, row outcome).
    std::array<std::array<Complex, 3>, 3> entries{};

    /// (S2, 2) is structurally zero: <2|S2> = 0.
    static constexpr bool forbidden(int row, int col) noexcept { return row == 1 && col == 1; }

    Complex at(Outcome row, Outcome column) const;
    Complex row_sum(int row) const;
    Complex column_sum(int col) const;
    Complex total() const;
};

KDTable kd_table(const DensityMatrix &rho, const PentagonFrame &frame = canonical_frame());

/// Residuals of rho(3,S2) = rho(S1,S2)+rho(D1,S2), rho(2,P2) = rho(2,S1)+rho(2,P1)
/// and rho(3,P2) = rho(S1,D2)+rho(0).
std::array<double, 3> pair_sum_relations(const DensityMatrix &rho,
                                         const PentagonFrame &frame = canonical_frame());

/// <3|D1><D1|P1><P1|P2><P2|D2><D2|3>
Complex bargmann_invariant(const PentagonFrame &frame = canonical_frame());

} // namespace kdctx
