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

#include "kdctx/weakvalues.hpp"

#include <sstream>

#include "kdctx/kd.hpp"

namespace kdctx {

Complex contextual_value(const DensityMatrix &rho, Outcome b, Outcome a,
                         const PentagonFrame &frame) {
    const double pa = rho.probability(frame.vec(a));
    if (pa <= kMinConditionProbability) {
        std::ostringstream os;
        os << "P(" << to_string(a) << ") = " << pa << "; W(" << to_string(b) << '|'
           << to_string(a) << ") is undefined";
        throw Error(ErrorCode::ZeroProbabilityCondition, os.str());
    }
    return kd_term(rho, b, a, frame) / pa;
}

OutcomeValueTable outcome_value_table(const DensityMatrix &rho, Context context,
                                      const PentagonFrame &frame) {
    OutcomeValueTable table{context, {}};
    const auto outs = members(context);
    for (int i = 0; i < 3; ++i) {
        auto &row = table.rows[i];
        row.outcome = outs[i];
        row.probability = rho.probability(frame.vec(outs[i]));
        row.defined = row.probability > kMinConditionProbability;
        if (!row.defined) continue;
        for (Outcome b : kAllOutcomes) {
            row.values[index(b)] = kd_term(rho, b, outs[i], frame) / row.probability;
        }
    }
    return table;
}

FluctuationReport fluctuation(const OutcomeValueTable &table, Outcome b, double probability,
                              double tol) {
    FluctuationReport r;
    r.b = b;
    r.context = table.context;
    r.probability = probability;
    for (const auto &row : table.rows) {
        if (!row.defined) {
            r.undefined_rows.push_back(row.outcome);
            continue;
        }
        const Complex w = row.value(b);
        r.mean += (w * row.probability).real();
        r.variance += std::norm(w - probability) * row.probability;
        r.second_moment += std::norm(w) * row.probability;
    }
    r.bound_satisfied = r.second_moment <= probability + tol &&
                        r.variance <= probability * (1.0 - probability) + tol;
    return r;
}

FluctuationReport fluctuation(const DensityMatrix &rho, Outcome b, Context context,
                              const PentagonFrame &frame, double tol) {
    return fluctuation(outcome_value_table(rho, context, frame), b,
                       rho.probability(frame.vec(b)), tol);
}

} // namespace kdctx
