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

#include <string>
#include <vector>

#include "json.hpp"

#include "kdctx/contextuality.hpp"
#include "kdctx/hilbert.hpp"
#include "kdctx/kd.hpp"
#include "kdctx/pentagon.hpp"
#include "kdctx/sim.hpp"
#include "kdctx/tomography.hpp"
#include "kdctx/weakvalues.hpp"

namespace kdctx {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits and maps -0 to 0 so emitted documents are
/// stable across platforms.
double round12(double x);

Json to_json(Complex z);  // [re, im]
Json to_json(const StateVector &v);
Json matrix_to_json(const Eigen::Matrix3cd &m);  // 3x3 of [re, im]

Json to_json(const PentagonFrame &frame);  // {"vectors", "contexts"}
Json to_json(const Reflectivities &r);     // {"R1", "R2", "RS1", "RS2", "Rf"}
Json to_json(const OrthogonalityGraph &g);
Json to_json(const ResidualReport &r);
Json to_json(const KDDistribution11 &terms);  // keyed by path label
Json to_json(const KDTable &table);
Json to_json(const TomographicData &d);
Json to_json(const RedEntries &r);
Json to_json(const CompletedEntries &c);
Json to_json(const DerivedProbabilities &p);
Json to_json(const SigmaReport &r);
Json to_json(const OutcomeValueTable &t);
Json to_json(const FluctuationReport &f);
Json to_json(const DensityDiagnosis &d);
Json to_json(const CountRecord &c);
Json to_json(const EstimationReport &r);
Json to_json(const InequalityReport &r);

/// Parsers raise Error(InvalidArgument) on malformed documents.
Complex complex_from_json(const Json &j);
Eigen::Matrix3cd matrix_from_json(const Json &j);
RedEntries red_entries_from_json(const Json &j);
TomographicData tomographic_data_from_json(const Json &j);

/// {"kind": "pure", "amplitudes": [[re,im] x3]} (normalized on load),
/// {"kind": "density", "matrix": [[[re,im] x3] x3]} (validated), or
/// {"kind": "named", "name": "Nx"}.
DensityMatrix state_from_json(const Json &j);

/// CSV with columns row,column,re,im; the forbidden cell is omitted.
std::string kd_table_csv(const KDTable &table);
/// CSV with columns basis,outcome,count.
std::string counts_csv(const std::vector<CountRecord> &records);

} // namespace kdctx
