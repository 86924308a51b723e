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

#include "kdctx/states.hpp"

#include <array>

#include "kdctx/pentagon.hpp"

namespace kdctx {

namespace {

constexpr std::array<std::string_view, 13> kNames = {
    "1", "2", "3", "S1", "S2", "D1", "D2", "f", "P1", "P2", "T1f", "Nx", "mixed"};

} // namespace

StateVector state_t1f() { return StateVector::normalized(Eigen::Vector3cd(3, 1, -1)); }

StateVector state_nx() { return StateVector::normalized(Eigen::Vector3cd(2, 2, 1)); }

std::optional<DensityMatrix> named_state(std::string_view name) {
    if (name == "T1f") return DensityMatrix::from_pure(state_t1f());
    if (name == "Nx") return DensityMatrix::from_pure(state_nx());
    if (name == "mixed") return DensityMatrix::maximally_mixed();
    if (auto o = parse_outcome(name); o && name != "F") {
        return DensityMatrix::from_pure(canonical_frame().vec(*o));
    }
    return std::nullopt;
}

std::span<const std::string_view> named_state_names() { return kNames; }

} // namespace kdctx
