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

#include "kdctx/kd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kdctx {

namespace {

using O = Outcome;
using Pair = std::pair<Outcome, Outcome>;

// Each line lists three paths that share no outcome in any context.
constexpr std::array<std::array<Pair, 3>, 5> kRelationLines = {{
    {Pair{O::One, O::S2}, Pair{O::F, O::Two}, Pair{O::D2, O::S1}},
    {Pair{O::S1, O::Two}, Pair{O::S2, O::One}, Pair{O::Three, O::F}},
    {Pair{O::F, O::One}, Pair{O::Two, O::S1}, Pair{O::D1, O::S2}},
    {Pair{O::S2, O::S1}, Pair{O::One, O::F}, Pair{O::P1, O::Two}},
    {Pair{O::Two, O::F}, Pair{O::S1, O::S2}, Pair{O::P2, O::One}},
}};

std::string describe_line(const std::array<Pair, 3> &line, std::string_view fn,
                          std::string_view rhs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (i) os << " + ";
        os << fn << '(' << to_string(line[i].first) << ',' << to_string(line[i].second) << ')';
    }
    os << " = " << rhs;
    return os.str();
}

std::string list_lines(const std::vector<int> &lines) {
    std::ostringstream os;
    for (std::size_t i = 0; i < lines.size(); ++i) os << (i ? ", " : "") << lines[i];
    return os.str();
}

} // namespace

Complex kd_term(const DensityMatrix &rho, Outcome a, Outcome b, const PentagonFrame &frame) {
    const auto &va = frame.vec(a);
    const auto &vb = frame.vec(b);
    return inner(vb, va) * rho.as_operator().sandwich(va, vb);
}

Complex rho_zero(const DensityMatrix &rho, const PentagonFrame &frame) {
    return kd_term(rho, O::D1, O::D2, frame) - kd_term(rho, O::Three, O::F, frame);
}

Complex KDDistribution11::term(Outcome a, Outcome b) const {
    for (const auto &info : paths()) {
        if (!info.kd_pair) continue;
        if (info.kd_pair->first == a && info.kd_pair->second == b) return terms_[index(info.path)];
        if (info.kd_pair->first == b && info.kd_pair->second == a) {
            return std::conj(terms_[index(info.path)]);
        }
    }
    throw Error(ErrorCode::InvalidArgument, "pair (" + std::string(to_string(a)) + "," +
                                                std::string(to_string(b)) + ") labels no path");
}

Complex KDDistribution11::total() const {
    Complex s{};
    for (const auto &t : terms_) s += t;
    return s;
}

KDDistribution11 eleven_terms(const DensityMatrix &rho, const PentagonFrame &frame) {
    KDDistribution11 out;
    for (const auto &info : paths()) {
        if (info.kd_pair) {
            out[info.path] = kd_term(rho, info.kd_pair->first, info.kd_pair->second, frame);
        }
    }
    out[Path::Zero] = rho_zero(rho, frame);
    return out;
}

Complex path_marginal(const KDDistribution11 &terms, Context c, Outcome o) {
    Complex s{};
    for (Path p : paths_through(c, o)) s += terms[p];
    return s;
}

double ResidualReport::max_residual() const {
    double m = 0;
    for (const auto &l : lines) m = std::max(m, l.residual);
    return m;
}

std::vector<int> ResidualReport::failing(double tol) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!(lines[i].residual <= tol)) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

ResidualReport identity_residuals(const PentagonFrame &frame) {
    ResidualReport report;
    for (std::size_t i = 0; i < kRelationLines.size(); ++i) {
        OperatorMatrix sum;
        for (const auto &[a, b] : kRelationLines[i]) {
            sum += lambda_op(frame.vec(a), frame.vec(b));
        }
        report.lines[i].relation = describe_line(kRelationLines[i], "Lambda", "I");
        report.lines[i].residual = max_abs(sum.matrix() - Eigen::Matrix3cd::Identity());
    }
    return report;
}

ResidualReport verify_identities(const PentagonFrame &frame, double tol) {
    auto report = identity_residuals(frame);
    if (auto bad = report.failing(tol); !bad.empty()) {
        throw Error(ErrorCode::IdentityViolation, "operator identity line(s) " + list_lines(bad) +
                                                      " exceed tolerance");
    }
    return report;
}

ResidualReport determinism_residuals(const KDDistribution11 &terms, const PentagonFrame &frame) {
    ResidualReport report;
    for (std::size_t i = 0; i < kRelationLines.size(); ++i) {
        Complex sum{};
        std::ostringstream os;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto [a, b] = kRelationLines[i][k];
            const double weight = 1.0 / std::norm(frame.overlap(a, b));
            sum += weight * terms.term(a, b);
            os << (k ? " + " : "") << weight << "*rho(" << to_string(a) << ',' << to_string(b)
               << ')';
        }
        os << " = 1";
        report.lines[i].relation = os.str();
        report.lines[i].residual = std::abs(sum - 1.0);
    }
    return report;
}

ResidualReport check_determinism(const KDDistribution11 &terms, const PentagonFrame &frame,
                                 double tol) {
    auto report = determinism_residuals(terms, frame);
    if (auto bad = report.failing(tol); !bad.empty()) {
        throw Error(ErrorCode::ConstraintViolation,
                    "determinism constraint line(s) " + list_lines(bad) + " violated");
    }
    return report;
}

Complex KDTable::at(Outcome row, Outcome column) const {
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (kRows[r] == row && kColumns[c] == column) return entries[r][c];
        }
    }
    throw Error(ErrorCode::InvalidArgument, "outcome pair is not part of the KD table");
}

Complex KDTable::row_sum(int row) const {
    return entries[row][0] + entries[row][1] + entries[row][2];
}

Complex KDTable::column_sum(int col) const {
    return entries[0][col] + entries[1][col] + entries[2][col];
}

Complex KDTable::total() const { return row_sum(0) + row_sum(1) + row_sum(2); }

KDTable kd_table(const DensityMatrix &rho, const PentagonFrame &frame) {
    KDTable t;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            t.entries[r][c] = KDTable::forbidden(r, c)
                                  ? Complex{}
                                  : kd_term(rho, KDTable::kColumns[c], KDTable::kRows[r], frame);
        }
    }
    return t;
}

std::array<double, 3> pair_sum_relations(const DensityMatrix &rho, const PentagonFrame &frame) {
    auto kd = [&](Outcome a, Outcome b) { return kd_term(rho, a, b, frame); };
    return {
        std::abs(kd(O::Three, O::S2) - kd(O::S1, O::S2) - kd(O::D1, O::S2)),
        std::abs(kd(O::Two, O::P2) - kd(O::Two, O::S1) - kd(O::Two, O::P1)),
        std::abs(kd(O::Three, O::P2) - kd(O::S1, O::D2) - rho_zero(rho, frame)),
    };
}

Complex bargmann_invariant(const PentagonFrame &frame) {
    return frame.overlap(O::Three, O::D1) * frame.overlap(O::D1, O::P1) *
           frame.overlap(O::P1, O::P2) * frame.overlap(O::P2, O::D2) *
           frame.overlap(O::D2, O::Three);
}

} // namespace kdctx
