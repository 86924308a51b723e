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

#include <optional>
#include <span>
#include <string_view>

#include "kdctx/hilbert.hpp"

namespace kdctx {

/// |T1f> = (3|1> + |2> - |3>)/sqrt11, concentrated on the [1,f] path.
StateVector state_t1f();
/// |Nx> = (2|1> + 2|2> + |3>)/3, close to maximal violation.
StateVector state_nx();

/// Names: the ten outcome labels ("1", ..., "P2") as canonical-frame
/// eigenstates, "T1f", "Nx", and "mixed" (I/3).
std::optional<DensityMatrix> named_state(std::string_view name);
std::span<const std::string_view> named_state_names();

} // namespace kdctx
