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
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "kdctx/hilbert.hpp"

namespace kdctx {

/// The ten measurement outcomes. 1, 2, S1, S2 and f are shared by two
/// contexts; 3, D1, D2, P1 and P2 belong to one context only.
enum class Outcome { One, Two, Three, S1, S2, D1, D2, F, P1, P2 };
inline constexpr int kOutcomeCount = 10;
inline constexpr std::array<Outcome, kOutcomeCount> kAllOutcomes = {
    Outcome::One, Outcome::Two, Outcome::Three, Outcome::S1, Outcome::S2,
    Outcome::D1,  Outcome::D2,  Outcome::F,     Outcome::P1, Outcome::P2};
inline constexpr std::array<Outcome, 5> kSharedOutcomes = {
    Outcome::One, Outcome::Two, Outcome::S1, Outcome::S2, Outcome::F};

enum class Context { C123, C1, C2, Cf1, Cf2 };
inline constexpr int kContextCount = 5;
inline constexpr std::array<Context, kContextCount> kAllContexts = {
    Context::C123, Context::C1, Context::C2, Context::Cf1, Context::Cf2};
/// Order in which a classical path visits the contexts (around the pentagram).
inline constexpr std::array<Context, kContextCount> kCyclicContextOrder = {
    Context::C123, Context::C1, Context::Cf1, Context::Cf2, Context::C2};

constexpr int index(Outcome o) noexcept { return static_cast<int>(o); }
constexpr int index(Context c) noexcept { return static_cast<int>(c); }

std::string_view to_string(Outcome o) noexcept;
std::string_view to_string(Context c) noexcept;
/// Accepts "1", "2", "3", "S1", "S2", "D1", "D2", "f", "P1", "P2".
std::optional<Outcome> parse_outcome(std::string_view s) noexcept;
/// Accepts "C123", "C1", "C2", "Cf1", "Cf2" (an underscore after the C is allowed).
std::optional<Context> parse_context(std::string_view s) noexcept;

std::array<Outcome, 3> members(Context c) noexcept;
bool contains(Context c, Outcome o) noexcept;
/// Contexts containing `o` (one or two).
std::vector<Context> contexts_of(Outcome o);
bool is_shared(Outcome o) noexcept;

/// The eleven classical paths through the five contexts.
enum class Path { Zero, OneP2, S1D2, F3, S2D1, TwoP1, OneF, S1S2, TwoF, OneS2, TwoS1 };
inline constexpr int kPathCount = 11;
inline constexpr std::array<Path, kPathCount> kAllPaths = {
    Path::Zero, Path::OneP2, Path::S1D2, Path::F3,   Path::S2D1, Path::TwoP1,
    Path::OneF, Path::S1S2,  Path::TwoF, Path::OneS2, Path::TwoS1};

constexpr int index(Path p) noexcept { return static_cast<int>(p); }

struct PathInfo {
    Path path;
    std::string_view label;  // "0", "1,P2", "f,3", ...
    /// Ordered pair whose KD term represents the path; nullopt for [0].
    /// [f,3] and [S2,D1] are represented by rho(3,f) and rho(D1,S2).
    std::optional<std::pair<Outcome, Outcome>> kd_pair;
    /// Outcome visited in each context, indexed by index(Context).
    std::array<Outcome, kContextCount> assignment;
    int shared_outcomes;  // 0, 1 or 2
};

const PathInfo &path_info(Path p) noexcept;
std::span<const PathInfo, kPathCount> paths();
std::optional<Path> parse_path(std::string_view label) noexcept;
/// Paths passing through outcome `o` within context `c`.
std::vector<Path> paths_through(Context c, Outcome o);

/// Ten outcome vectors in the reference basis. Construction does not
/// validate; use validate_frame() or the factory functions.
class PentagonFrame {
public:
    explicit PentagonFrame(const std::array<StateVector, kOutcomeCount> &vectors)
        : vec_(vectors) {}

    const StateVector &vec(Outcome o) const noexcept { return vec_[index(o)]; }
    const std::array<StateVector, kOutcomeCount> &vectors() const noexcept { return vec_; }

    /// <a|b>
    Complex overlap(Outcome a, Outcome b) const { return inner(vec(a), vec(b)); }

    PentagonFrame with_vector(Outcome o, const StateVector &v) const;

private:
    std::array<StateVector, kOutcomeCount> vec_;
};

/// |S1> = (|2>+|3>)/sqrt2, |S2> = (|1>+|3>)/sqrt2, |f> = (|1>+|2>-|3>)/sqrt3
/// and real-valued complements. Equal to frame_from_angles(pi/4, pi/4).
const PentagonFrame &canonical_frame();

/// |S1> = cos t1 |2> + sin t1 |3>, |S2> = cos t2 |1> + sin t2 |3>; every other
/// vector is the normalized conjugated cross product of its two context
/// partners. Throws DegenerateFrame when a sine or cosine vanishes or a
/// complement collapses.
PentagonFrame frame_from_angles(double theta1, double theta2);

/// Max deviation of any context Gram matrix from the identity.
double context_gram_residual(const PentagonFrame &frame);
/// Throws DegenerateFrame if a context is not orthonormal within `tol`.
void validate_frame(const PentagonFrame &frame, double tol = kTolerance);

struct OrthogonalityGraph {
    std::array<std::array<bool, kOutcomeCount>, kOutcomeCount> adjacent{};

    bool edge(Outcome a, Outcome b) const { return adjacent[index(a)][index(b)]; }
    int degree(Outcome o) const;
    std::vector<std::pair<Outcome, Outcome>> edges() const;  // a < b
};

/// Edge (a,b) iff |<a|b>| <= tol.
OrthogonalityGraph orthogonality_graph(const PentagonFrame &frame, double tol = kTolerance);

/// Checks that all outcomes on each path have pairwise non-zero overlaps.
bool path_overlaps_nonzero(const PentagonFrame &frame, Path p, double tol = kTolerance);

struct Reflectivities {
    double r1 = 0;   // |<2|S1>|^2
    double r2 = 0;   // |<1|S2>|^2
    double rs1 = 0;  // |<D1|P1>|^2
    double rs2 = 0;  // |<D2|P2>|^2
    double rf = 0;   // |<D1|D2>|^2
};

Reflectivities reflectivities(const PentagonFrame &frame);

} // namespace kdctx
