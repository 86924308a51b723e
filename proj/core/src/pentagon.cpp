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

#include "kdctx/pentagon.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace kdctx {

namespace {

using O = Outcome;

constexpr std::array<std::string_view, kOutcomeCount> kOutcomeNames = {
    "1", "2", "3", "S1", "S2", "D1", "D2", "f", "P1", "P2"};
constexpr std::array<std::string_view, kContextCount> kContextNames = {
    "C123", "C1", "C2", "Cf1", "Cf2"};

constexpr std::array<std::array<Outcome, 3>, kContextCount> kMembers = {{
    {O::One, O::Two, O::Three},
    {O::One, O::S1, O::D1},
    {O::Two, O::S2, O::D2},
    {O::S1, O::F, O::P1},
    {O::S2, O::F, O::P2},
}};

// Assignments are listed per context in enum order: C123, C1, C2, Cf1, Cf2.
std::array<PathInfo, kPathCount> make_paths() {
    using P = std::pair<Outcome, Outcome>;
    std::array<PathInfo, kPathCount> t = {{
        {Path::Zero, "0", std::nullopt, {O::Three, O::D1, O::D2, O::P1, O::P2}, 0},
        {Path::OneP2, "1,P2", P{O::One, O::P2}, {O::One, O::One, O::D2, O::P1, O::P2}, 0},
        {Path::S1D2, "S1,D2", P{O::S1, O::D2}, {O::Three, O::S1, O::D2, O::S1, O::P2}, 0},
        {Path::F3, "f,3", P{O::Three, O::F}, {O::Three, O::D1, O::D2, O::F, O::F}, 0},
        {Path::S2D1, "S2,D1", P{O::D1, O::S2}, {O::Three, O::D1, O::S2, O::P1, O::S2}, 0},
        {Path::TwoP1, "2,P1", P{O::Two, O::P1}, {O::Two, O::D1, O::Two, O::P1, O::P2}, 0},
        {Path::OneF, "1,f", P{O::One, O::F}, {O::One, O::One, O::D2, O::F, O::F}, 0},
        {Path::S1S2, "S1,S2", P{O::S1, O::S2}, {O::Three, O::S1, O::S2, O::S1, O::S2}, 0},
        {Path::TwoF, "2,f", P{O::Two, O::F}, {O::Two, O::D1, O::Two, O::F, O::F}, 0},
        {Path::OneS2, "1,S2", P{O::One, O::S2}, {O::One, O::One, O::S2, O::P1, O::S2}, 0},
        {Path::TwoS1, "2,S1", P{O::Two, O::S1}, {O::Two, O::S1, O::Two, O::S1, O::P2}, 0},
    }};
    for (auto &p : t) {
        std::set<int> shared;
        for (Outcome o : p.assignment) {
            if (is_shared(o)) shared.insert(index(o));
        }
        p.shared_outcomes = static_cast<int>(shared.size());
    }
    return t;
}

const std::array<PathInfo, kPathCount> &path_table() {
    static const auto table = make_paths();
    return table;
}

Eigen::Vector3cd conj_cross(const Eigen::Vector3cd &a, const Eigen::Vector3cd &b) {
    return a.cross(b).conjugate();
}

StateVector complement(const StateVector &a, const StateVector &b, std::string_view what) {
    const Eigen::Vector3cd v = conj_cross(a.amplitudes(), b.amplitudes());
    if (v.norm() < kTolerance) {
        throw Error(ErrorCode::DegenerateFrame,
                    "orthogonal complement for " + std::string(what) + " is not unique");
    }
    return StateVector::normalized(v);
}

StateVector real_vector(double x, double y, double z) {
    return StateVector::normalized(Eigen::Vector3cd(x, y, z));
}

} // namespace

std::string_view to_string(Outcome o) noexcept { return kOutcomeNames[index(o)]; }
std::string_view to_string(Context c) noexcept { return kContextNames[index(c)]; }

std::optional<Outcome> parse_outcome(std::string_view s) noexcept {
    for (Outcome o : kAllOutcomes) {
        if (to_string(o) == s) return o;
    }
    if (s == "F") return Outcome::F;
    return std::nullopt;
}

std::optional<Context> parse_context(std::string_view s) noexcept {
    std::string norm(s);
    norm.erase(std::remove(norm.begin(), norm.end(), '_'), norm.end());
    for (Context c : kAllContexts) {
        if (to_string(c) == norm) return c;
    }
    if (norm == "CF1") return Context::Cf1;
    if (norm == "CF2") return Context::Cf2;
    return std::nullopt;
}

std::array<Outcome, 3> members(Context c) noexcept { return kMembers[index(c)]; }

bool contains(Context c, Outcome o) noexcept {
    const auto &m = kMembers[index(c)];
    return std::find(m.begin(), m.end(), o) != m.end();
}

std::vector<Context> contexts_of(Outcome o) {
    std::vector<Context> out;
    for (Context c : kAllContexts) {
        if (contains(c, o)) out.push_back(c);
    }
    return out;
}

bool is_shared(Outcome o) noexcept {
    return std::find(kSharedOutcomes.begin(), kSharedOutcomes.end(), o) != kSharedOutcomes.end();
}

const PathInfo &path_info(Path p) noexcept { return path_table()[index(p)]; }

std::span<const PathInfo, kPathCount> paths() { return path_table(); }

std::optional<Path> parse_path(std::string_view label) noexcept {
    for (const auto &p : path_table()) {
        if (p.label == label) return p.path;
    }
    return std::nullopt;
}

std::vector<Path> paths_through(Context c, Outcome o) {
    std::vector<Path> out;
    for (const auto &p : path_table()) {
        if (p.assignment[index(c)] == o) out.push_back(p.path);
    }
    return out;
}

PentagonFrame PentagonFrame::with_vector(Outcome o, const StateVector &v) const {
    auto copy = vec_;
    copy[index(o)] = v;
    return PentagonFrame(copy);
}

const PentagonFrame &canonical_frame() {
    static const PentagonFrame frame({
        real_vector(1, 0, 0),   // 1
        real_vector(0, 1, 0),   // 2
        real_vector(0, 0, 1),   // 3
        real_vector(0, 1, 1),   // S1
        real_vector(1, 0, 1),   // S2
        real_vector(0, 1, -1),  // D1
        real_vector(1, 0, -1),  // D2
        real_vector(1, 1, -1),  // f
        real_vector(2, -1, 1),  // P1
        real_vector(-1, 2, 1),  // P2
    });
    return frame;
}

PentagonFrame frame_from_angles(double theta1, double theta2) {
    const double c1 = std::cos(theta1), s1 = std::sin(theta1);
    const double c2 = std::cos(theta2), s2 = std::sin(theta2);
    if (!std::isfinite(theta1) || !std::isfinite(theta2)) {
        throw Error(ErrorCode::DegenerateFrame, "angles must be finite");
    }
    if (std::min({std::abs(c1), std::abs(s1), std::abs(c2), std::abs(s2)}) < kTolerance) {
        throw Error(ErrorCode::DegenerateFrame,
                    "sin and cos of both angles must be non-zero; otherwise contexts coincide");
    }
    const auto e1 = StateVector::basis(0);
    const auto e2 = StateVector::basis(1);
    const auto e3 = StateVector::basis(2);
    const auto sv1 = StateVector::normalized(Eigen::Vector3cd(0, c1, s1));
    const auto sv2 = StateVector::normalized(Eigen::Vector3cd(c2, 0, s2));
    const auto f = complement(sv1, sv2, "f");
    const auto d1 = complement(sv1, e1, "D1");
    const auto d2 = complement(e2, sv2, "D2");
    const auto p1 = complement(f, sv1, "P1");
    const auto p2 = complement(sv2, f, "P2");
    PentagonFrame frame({e1, e2, e3, sv1, sv2, d1, d2, f, p1, p2});
    validate_frame(frame);
    return frame;
}

double context_gram_residual(const PentagonFrame &frame) {
    double worst = 0;
    for (Context c : kAllContexts) {
        const auto m = members(c);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const Complex g = frame.overlap(m[i], m[j]);
                worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
            }
        }
    }
    return worst;
}

void validate_frame(const PentagonFrame &frame, double tol) {
    const double r = context_gram_residual(frame);
    if (!(r <= tol)) {
        throw Error(ErrorCode::DegenerateFrame,
                    "context Gram matrix deviates from identity by " + std::to_string(r));
    }
}

int OrthogonalityGraph::degree(Outcome o) const {
    int d = 0;
    for (bool b : adjacent[index(o)]) d += b ? 1 : 0;
    return d;
}

std::vector<std::pair<Outcome, Outcome>> OrthogonalityGraph::edges() const {
    std::vector<std::pair<Outcome, Outcome>> out;
    for (int i = 0; i < kOutcomeCount; ++i) {
        for (int j = i + 1; j < kOutcomeCount; ++j) {
            if (adjacent[i][j]) out.emplace_back(kAllOutcomes[i], kAllOutcomes[j]);
        }
    }
    return out;
}

OrthogonalityGraph orthogonality_graph(const PentagonFrame &frame, double tol) {
    OrthogonalityGraph g;
    for (Outcome a : kAllOutcomes) {
        for (Outcome b : kAllOutcomes) {
            if (a != b) g.adjacent[index(a)][index(b)] = std::abs(frame.overlap(a, b)) <= tol;
        }
    }
    return g;
}

bool path_overlaps_nonzero(const PentagonFrame &frame, Path p, double tol) {
    const auto &a = path_info(p).assignment;
    for (Outcome x : a) {
        for (Outcome y : a) {
            if (std::abs(frame.overlap(x, y)) <= tol) return false;
        }
    }
    return true;
}

Reflectivities reflectivities(const PentagonFrame &frame) {
    auto sq = [&](Outcome a, Outcome b) { return std::norm(frame.overlap(a, b)); };
    return {sq(O::Two, O::S1), sq(O::One, O::S2), sq(O::D1, O::P1), sq(O::D2, O::P2),
            sq(O::D1, O::D2)};
}

} // namespace kdctx
