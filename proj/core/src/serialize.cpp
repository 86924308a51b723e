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

#include "kdctx/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "kdctx/states.hpp"

namespace kdctx {

namespace {

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", round12(x));
    return buf;
}

Json outcome_list(std::span<const Outcome> outs) {
    Json a = Json::array();
    for (Outcome o : outs) a.push_back(std::string(to_string(o)));
    return a;
}

[[noreturn]] void malformed(const std::string &what) {
    throw Error(ErrorCode::InvalidArgument, "malformed JSON: " + what);
}

const Json &field(const Json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

double number(const Json &j, const char *what) {
    if (!j.is_number()) malformed(std::string(what) + " must be a number");
    return j.get<double>();
}

} // namespace

double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

Json to_json(Complex z) { return Json::array({round12(z.real()), round12(z.imag())}); }

Json to_json(const StateVector &v) {
    Json a = Json::array();
    for (int i = 0; i < 3; ++i) a.push_back(to_json(v[i]));
    return a;
}

Json matrix_to_json(const Eigen::Matrix3cd &m) {
    Json rows = Json::array();
    for (int r = 0; r < 3; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 3; ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const PentagonFrame &frame) {
    Json vectors = Json::object();
    for (Outcome o : kAllOutcomes) vectors[std::string(to_string(o))] = to_json(frame.vec(o));
    Json contexts = Json::object();
    for (Context c : kAllContexts) {
        const auto m = members(c);
        contexts[std::string(to_string(c))] = outcome_list(m);
    }
    return Json{{"vectors", std::move(vectors)}, {"contexts", std::move(contexts)}};
}

Json to_json(const Reflectivities &r) {
    return Json{{"R1", round12(r.r1)},   {"R2", round12(r.r2)}, {"RS1", round12(r.rs1)},
                {"RS2", round12(r.rs2)}, {"Rf", round12(r.rf)}};
}

Json to_json(const OrthogonalityGraph &g) {
    Json edges = Json::array();
    for (const auto &[a, b] : g.edges()) {
        edges.push_back(Json::array({std::string(to_string(a)), std::string(to_string(b))}));
    }
    Json degree = Json::object();
    for (Outcome o : kAllOutcomes) degree[std::string(to_string(o))] = g.degree(o);
    return Json{{"edges", std::move(edges)}, {"degree", std::move(degree)}};
}

Json to_json(const ResidualReport &r) {
    Json lines = Json::array();
    for (const auto &l : r.lines) {
        lines.push_back(Json{{"relation", l.relation}, {"residual", l.residual}});
    }
    return Json{{"lines", std::move(lines)}, {"max_residual", r.max_residual()}};
}

Json to_json(const KDDistribution11 &terms) {
    Json j = Json::object();
    for (const auto &info : paths()) j[std::string(info.label)] = to_json(terms[info.path]);
    return j;
}

Json to_json(const KDTable &t) {
    Json entries = Json::array();
    for (int r = 0; r < 3; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 3; ++c) {
            row.push_back(KDTable::forbidden(r, c) ? Json(nullptr) : to_json(t.entries[r][c]));
        }
        entries.push_back(std::move(row));
    }
    Json row_sums = Json::array(), col_sums = Json::array();
    for (int i = 0; i < 3; ++i) {
        row_sums.push_back(to_json(t.row_sum(i)));
        col_sums.push_back(to_json(t.column_sum(i)));
    }
    return Json{{"rows", outcome_list(KDTable::kRows)},
                {"columns", outcome_list(KDTable::kColumns)},
                {"entries", std::move(entries)},
                {"forbidden", Json{{"row", "S2"}, {"column", "2"}}},
                {"row_sums", std::move(row_sums)},
                {"column_sums", std::move(col_sums)}};
}

Json to_json(const TomographicData &d) {
    return Json{{"p1", round12(d.p1)},
                {"pf", round12(d.pf)},
                {"rho_1f", to_json(d.r_1f)},
                {"rho_1D2", to_json(d.r_1D2)},
                {"rho_D2f", to_json(d.r_D2f)}};
}

Json to_json(const RedEntries &r) {
    return Json{{"rho_1f", to_json(r.r_1f)},
                {"rho_2f", to_json(r.r_2f)},
                {"rho_3f", to_json(r.r_3f)},
                {"rho_1S2", to_json(r.r_1S2)},
                {"rho_1P2", to_json(r.r_1P2)}};
}

Json to_json(const CompletedEntries &c) {
    return Json{{"rho_3P2", to_json(c.r_3P2)},
                {"rho_2P2", to_json(c.r_2P2)},
                {"rho_3S2", to_json(c.r_3S2)}};
}

Json to_json(const DerivedProbabilities &p) {
    return Json{{"P2", round12(p.p2)},
                {"PS2", round12(p.ps2)},
                {"PD2", round12(p.pd2)},
                {"PS1", round12(p.ps1)}};
}

Json to_json(const SigmaReport &r) {
    Json probs = Json::object();
    for (std::size_t i = 0; i < kSharedOutcomes.size(); ++i) {
        probs[std::string(to_string(kSharedOutcomes[i]))] = round12(r.probabilities[i]);
    }
    return Json{{"sigma", round12(r.sigma)},
                {"probabilities", std::move(probs)},
                {"violated", r.violated},
                {"margin", round12(r.margin)}};
}

Json to_json(const OutcomeValueTable &t) {
    Json rows = Json::array();
    for (const auto &row : t.rows) {
        Json values = Json::object();
        if (row.defined) {
            for (Outcome b : kAllOutcomes) values[std::string(to_string(b))] = to_json(row.value(b));
        }
        rows.push_back(Json{{"outcome", std::string(to_string(row.outcome))},
                            {"probability", round12(row.probability)},
                            {"defined", row.defined},
                            {"values", row.defined ? std::move(values) : Json(nullptr)}});
    }
    return Json{{"context", std::string(to_string(t.context))}, {"rows", std::move(rows)}};
}

Json to_json(const FluctuationReport &f) {
    Json undefined = Json::array();
    for (Outcome o : f.undefined_rows) undefined.push_back(std::string(to_string(o)));
    return Json{{"outcome", std::string(to_string(f.b))},
                {"context", std::string(to_string(f.context))},
                {"probability", round12(f.probability)},
                {"mean", round12(f.mean)},
                {"variance", round12(f.variance)},
                {"second_moment", round12(f.second_moment)},
                {"eigencontext_variance", round12(f.probability * (1.0 - f.probability))},
                {"bound_satisfied", f.bound_satisfied},
                {"undefined_rows", std::move(undefined)}};
}

Json to_json(const DensityDiagnosis &d) {
    Json ev = Json::array();
    for (double e : d.eigenvalues) ev.push_back(round12(e));
    return Json{{"error", std::string(to_string(d.code))},
                {"message", d.message},
                {"hermiticity_residual", d.hermiticity_residual},
                {"trace", to_json(d.trace)},
                {"eigenvalues", std::move(ev)},
                {"min_eigenvalue", round12(d.min_eigenvalue)}};
}

Json to_json(const CountRecord &c) {
    Json counts = Json::object();
    for (std::size_t i = 0; i < c.outcomes.size(); ++i) counts[c.outcomes[i]] = c.counts[i];
    return Json{{"basis", c.basis}, {"counts", std::move(counts)}, {"shots", c.shots}};
}

Json to_json(const EstimationReport &r) {
    Json settings = Json::array();
    for (const auto &c : r.settings) settings.push_back(to_json(c));
    Json se = Json::object();
    const std::array<const char *, 5> names = {"rho_1f", "rho_2f", "rho_3f", "rho_1S2", "rho_1P2"};
    for (std::size_t i = 0; i < names.size(); ++i) {
        se[names[i]] = Json::array({round12(r.red_stderr[i][0]), round12(r.red_stderr[i][1])});
    }
    Json estimates{{"red", to_json(r.estimated)},
                   {"red_stderr", std::move(se)},
                   {"data", to_json(r.data)},
                   {"marginal_imaginary", Json{{"p1", round12(r.imag_p1)}, {"pf", round12(r.imag_pf)}}},
                   {"p_d2", round12(r.reconstruction.p_d2)},
                   {"sigma_from_red", round12(r.sigma_from_red)},
                   {"sigma_from_red_stderr", round12(r.sigma_from_red_stderr)}};
    Json j{{"experiment", "tomography"},
           {"settings", std::move(settings)},
           {"estimates", std::move(estimates)},
           {"reconstructed", matrix_to_json(r.reconstruction.matrix)},
           {"positive", r.reconstruction.valid()},
           {"trace_distance", round12(r.trace_distance)},
           {"seed", r.seed},
           {"shots_per_setting", r.shots_per_setting}};
    if (r.reconstruction.diagnosis) j["diagnosis"] = to_json(*r.reconstruction.diagnosis);
    return j;
}

Json to_json(const InequalityReport &r) {
    Json settings = Json::array();
    for (const auto &c : r.settings) settings.push_back(to_json(c));
    Json probs = Json::object();
    for (std::size_t i = 0; i < kSharedOutcomes.size(); ++i) {
        probs[std::string(to_string(kSharedOutcomes[i]))] = round12(r.probabilities[i]);
    }
    return Json{{"experiment", "inequality"},
                {"settings", std::move(settings)},
                {"estimates",
                 Json{{"sigma_hat", round12(r.sigma_hat)},
                      {"stderr", round12(r.stderr_sigma)},
                      {"probabilities", std::move(probs)},
                      {"violated", r.sigma_hat > kNoncontextualBound + kTolerance}}},
                {"seed", r.seed},
                {"shots_per_setting", r.shots_per_context}};
}

Complex complex_from_json(const Json &j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) malformed("complex values are [re, im] pairs");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Eigen::Matrix3cd matrix_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 3) malformed("matrix must have 3 rows");
    Eigen::Matrix3cd m;
    for (int r = 0; r < 3; ++r) {
        if (!j[r].is_array() || j[r].size() != 3) malformed("matrix rows must have 3 entries");
        for (int c = 0; c < 3; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

RedEntries red_entries_from_json(const Json &j) {
    return {complex_from_json(field(j, "rho_1f")), complex_from_json(field(j, "rho_2f")),
            complex_from_json(field(j, "rho_3f")), complex_from_json(field(j, "rho_1S2")),
            complex_from_json(field(j, "rho_1P2"))};
}

TomographicData tomographic_data_from_json(const Json &j) {
    return {number(field(j, "p1"), "p1"), number(field(j, "pf"), "pf"),
            complex_from_json(field(j, "rho_1f")), complex_from_json(field(j, "rho_1D2")),
            complex_from_json(field(j, "rho_D2f"))};
}

DensityMatrix state_from_json(const Json &j) {
    const Json &kind = field(j, "kind");
    if (!kind.is_string()) malformed("\"kind\" must be a string");
    const auto k = kind.get<std::string>();
    if (k == "pure") {
        const Json &amps = field(j, "amplitudes");
        if (!amps.is_array() || amps.size() != 3) malformed("\"amplitudes\" needs 3 entries");
        Eigen::Vector3cd v;
        for (int i = 0; i < 3; ++i) v(i) = complex_from_json(amps[i]);
        return DensityMatrix::from_pure(StateVector::normalized(v));
    }
    if (k == "density") return validate_density(matrix_from_json(field(j, "matrix")));
    if (k == "named") {
        const Json &name = field(j, "name");
        if (!name.is_string()) malformed("\"name\" must be a string");
        if (auto s = named_state(name.get<std::string>())) return *s;
        throw Error(ErrorCode::InvalidArgument, "unknown named state " + name.get<std::string>());
    }
    malformed("unknown state kind \"" + k + "\"");
}

std::string kd_table_csv(const KDTable &t) {
    std::ostringstream os;
    os << "row,column,re,im\n";
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (KDTable::forbidden(r, c)) continue;
            os << to_string(KDTable::kRows[r]) << ',' << to_string(KDTable::kColumns[c]) << ','
               << fmt12(t.entries[r][c].real()) << ',' << fmt12(t.entries[r][c].imag()) << '\n';
        }
    }
    return os.str();
}

std::string counts_csv(const std::vector<CountRecord> &records) {
    std::ostringstream os;
    os << "basis,outcome,count\n";
    for (const auto &rec : records) {
        for (std::size_t i = 0; i < rec.outcomes.size(); ++i) {
            os << '"' << rec.basis << "\"," << rec.outcomes[i] << ',' << rec.counts[i] << '\n';
        }
    }
    return os.str();
}

} // namespace kdctx
