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

#include <cmath>
#include <limits>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kdctx/contextuality.hpp"
#include "kdctx/error.hpp"
#include "kdctx/kd.hpp"
#include "kdctx/pentagon.hpp"
#include "kdctx/serialize.hpp"
#include "kdctx/sim.hpp"
#include "kdctx/states.hpp"
#include "kdctx/tomography.hpp"
#include "kdctx/weakvalues.hpp"

namespace {

using namespace kdctx;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDiagnostic = 3;

// Raised for anything the caller supplied wrongly; always exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string describe(const Error &e) { return e.what(); }

struct FrameOptions {
    std::string kind = "canonical";
    std::optional<double> theta1;
    std::optional<double> theta2;
};

struct Resolved {
    PentagonFrame frame;
    bool canonical = true;
};

Resolved resolve_frame(const FrameOptions &o) {
    if (o.kind == "canonical") {
        if (o.theta1 || o.theta2) throw UsageError("--theta1/--theta2 need --frame angles");
        return {canonical_frame(), true};
    }
    if (!o.theta1 || !o.theta2) throw UsageError("--frame angles needs --theta1 and --theta2");
    try {
        return {frame_from_angles(*o.theta1, *o.theta2), false};
    } catch (const Error &e) {
        throw UsageError(describe(e));
    }
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw UsageError(path + ": " + e.what());
    }
}

DensityMatrix resolve_state(const std::string &source) {
    try {
        if (source.rfind("named:", 0) == 0) {
            const auto name = source.substr(6);
            if (auto s = named_state(name)) return *s;
            std::string known;
            for (auto n : named_state_names()) known += (known.empty() ? "" : ", ") + std::string(n);
            throw UsageError("unknown named state '" + name + "' (known: " + known + ")");
        }
        if (source.rfind("file:", 0) == 0) return state_from_json(read_json_file(source.substr(5)));
    } catch (const Error &e) {
        throw UsageError("invalid state: " + describe(e));
    }
    throw UsageError("state must be named:<name> or file:<path>");
}

Context resolve_context(const std::string &s) {
    if (auto c = parse_context(s)) return *c;
    throw UsageError("unknown context '" + s + "'");
}

Outcome resolve_outcome(const std::string &s) {
    if (auto o = parse_outcome(s)) return *o;
    throw UsageError("unknown outcome '" + s + "'");
}

void emit(const Json &j) { std::cout << j.dump(2) << '\n'; }

Json state_json(const DensityMatrix &rho) { return matrix_to_json(rho.matrix()); }

Json weak_block(const DensityMatrix &rho, Context c, const PentagonFrame &frame,
                std::optional<Outcome> target) {
    const auto table = outcome_value_table(rho, c, frame);
    Json fl = Json::array();
    for (Outcome b : kAllOutcomes) {
        if (target && b != *target) continue;
        fl.push_back(to_json(fluctuation(table, b, rho.probability(frame.vec(b)))));
    }
    return Json{{"table", to_json(table)}, {"fluctuations", std::move(fl)}};
}

Json sigma_block(const DensityMatrix &rho, const Resolved &f) {
    Json j = to_json(probability_sum(rho, f.frame));
    j["sigma_from_kd"] = round12(sigma_from_kd(eleven_terms(rho, f.frame)));
    if (f.canonical) {
        const auto red = red_entries(rho);
        const auto crit = violation_criterion(red);
        j["sigma_from_data"] = round12(sigma_from_data(extract(rho)));
        j["criterion"] = Json{{"lhs", round12(crit.lhs)}, {"violated", crit.violated}};
    }
    j["bound"] = kNoncontextualBound;
    return j;
}

int cmd_contexts(const FrameOptions &fo) {
    const auto f = resolve_frame(fo);
    const auto residuals = identity_residuals(f.frame);
    Json j = to_json(f.frame);
    j["reflectivities"] = to_json(reflectivities(f.frame));
    j["orthogonality_graph"] = to_json(orthogonality_graph(f.frame));
    j["identity_residuals"] = to_json(residuals);
    j["bargmann_invariant"] = to_json(bargmann_invariant(f.frame));
    emit(j);
    return residuals.max_residual() <= kTolerance ? kExitOk : kExitDiagnostic;
}

int cmd_kd(const FrameOptions &fo, const std::string &state, bool table, bool eleven,
           const std::string &format) {
    const auto f = resolve_frame(fo);
    const auto rho = resolve_state(state);
    if (format == "csv") {
        if (eleven) throw UsageError("--format csv is only available with --table");
        std::cout << kd_table_csv(kd_table(rho, f.frame));
        return kExitOk;
    }
    if (!table && !eleven) table = eleven = true;
    Json j = Json::object();
    if (table) j["kd_table"] = to_json(kd_table(rho, f.frame));
    if (eleven) {
        const auto terms = eleven_terms(rho, f.frame);
        j["eleven_terms"] = to_json(terms);
        j["total"] = to_json(terms.total());
        j["determinism_residuals"] = to_json(determinism_residuals(terms, f.frame));
    }
    emit(j);
    return kExitOk;
}

int report_reconstruction(Json j, const Reconstruction &rec, const DensityMatrix *truth) {
    j["reconstructed"] = matrix_to_json(rec.matrix);
    j["p_d2"] = round12(rec.p_d2);
    j["positive"] = rec.valid();
    if (truth) j["trace_distance"] = round12(trace_distance(rec.matrix, truth->matrix()));
    if (rec.diagnosis) {
        j["diagnosis"] = to_json(*rec.diagnosis);
        emit(j);
        std::cerr << "reconstructed matrix is not a valid state: " << to_string(rec.diagnosis->code)
                  << '\n';
        return kExitDiagnostic;
    }
    emit(j);
    return kExitOk;
}

int cmd_reconstruct(const FrameOptions &fo, const std::string &state, const std::string &red_path,
                    const std::string &data_path) {
    const auto f = resolve_frame(fo);
    const int given = !state.empty() + !red_path.empty() + !data_path.empty();
    if (given != 1) throw UsageError("give exactly one of --state, --red, --data");
    if (!state.empty()) {
        const auto rho = resolve_state(state);
        const auto data = extract(rho, f.frame);
        return report_reconstruction(Json{{"input", to_json(data)}}, reconstruct(data, f.frame), &rho);
    }
    if (!red_path.empty()) {
        if (!f.canonical) throw UsageError("--red is defined for the canonical frame only");
        RedEntries red;
        MarginalCheck mc;
        try {
            red = red_entries_from_json(read_json_file(red_path));
            mc = red_to_data_checked(red, std::numeric_limits<double>::infinity());
        } catch (const Error &e) {
            throw UsageError(describe(e));
        }
        Json in{{"red", to_json(red)},
                {"data", to_json(mc.data)},
                {"completed", to_json(complete_table(red))},
                {"marginal_imaginary", Json{{"p1", round12(mc.imag_p1)}, {"pf", round12(mc.imag_pf)}}}};
        return report_reconstruction(Json{{"input", std::move(in)}}, reconstruct(mc.data, f.frame),
                                     nullptr);
    }
    TomographicData data;
    try {
        data = tomographic_data_from_json(read_json_file(data_path));
    } catch (const Error &e) {
        throw UsageError(describe(e));
    }
    return report_reconstruction(Json{{"input", to_json(data)}}, reconstruct(data, f.frame), nullptr);
}

int cmd_inequality(const FrameOptions &fo, const std::string &state) {
    const auto f = resolve_frame(fo);
    emit(sigma_block(resolve_state(state), f));
    return kExitOk;
}

int cmd_weak(const FrameOptions &fo, const std::string &state, const std::string &context,
             const std::string &target) {
    const auto f = resolve_frame(fo);
    const auto rho = resolve_state(state);
    const Context c = resolve_context(context);
    std::optional<Outcome> t;
    if (!target.empty()) t = resolve_outcome(target);
    emit(weak_block(rho, c, f.frame, t));
    return kExitOk;
}

int cmd_simulate(const FrameOptions &fo, const std::string &state, const std::string &experiment,
                 std::uint64_t shots, std::uint64_t seed, unsigned threads,
                 const std::string &format) {
    const auto f = resolve_frame(fo);
    const auto rho = resolve_state(state);
    if (shots == 0) throw UsageError("--shots must be positive");
    SimOptions opts;
    opts.threads = threads;
    std::vector<CountRecord> counts;
    Json j;
    try {
        if (experiment == "tomography") {
            if (shots < 2) throw UsageError("tomography needs --shots >= 2");
            auto r = run_tomography_experiment(rho, shots, seed, f.frame, opts);
            counts = r.settings;
            j = to_json(r);
        } else {
            auto r = run_inequality_experiment(rho, shots, seed, f.frame, opts);
            counts = r.settings;
            j = to_json(r);
        }
    } catch (const Error &e) {
        if (e.code() == ErrorCode::InvalidArgument) throw UsageError(e.what());
        throw;
    }
    if (format == "csv") {
        std::cout << counts_csv(counts);
    } else {
        emit(j);
    }
    return kExitOk;
}

int cmd_report(const FrameOptions &fo, const std::string &state) {
    const auto f = resolve_frame(fo);
    const auto rho = resolve_state(state);
    const auto terms = eleven_terms(rho, f.frame);
    Json j{{"state", state_json(rho)},
           {"frame", fo.kind},
           {"reflectivities", to_json(reflectivities(f.frame))},
           {"kd_table", to_json(kd_table(rho, f.frame))},
           {"eleven_terms", to_json(terms)},
           {"determinism_residuals", to_json(determinism_residuals(terms, f.frame))},
           {"tomographic_data", to_json(extract(rho, f.frame))}};
    if (f.canonical) {
        const auto red = red_entries(rho);
        j["red_entries"] = to_json(red);
        j["completed"] = to_json(complete_table(red));
        j["derived_probabilities"] = to_json(derived_probabilities(extract(rho)));
    }
    const auto rec = reconstruct(extract(rho, f.frame), f.frame);
    j["reconstruction_trace_distance"] = round12(trace_distance(rec.matrix, rho.matrix()));
    j["inequality"] = sigma_block(rho, f);
    Json weak = Json::object();
    for (Context c : kAllContexts) weak[std::string(to_string(c))] = weak_block(rho, c, f.frame, {});
    j["weak"] = std::move(weak);
    emit(j);
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Kirkwood-Dirac analysis of the five-context qutrit scenario"};
    app.require_subcommand(1);

    FrameOptions fo;
    auto add_frame = [&](CLI::App *cmd) {
        cmd->add_option("--frame", fo.kind, "canonical or angles")
            ->check(CLI::IsMember({"canonical", "angles"}));
        cmd->add_option("--theta1", fo.theta1, "first frame angle (radians)");
        cmd->add_option("--theta2", fo.theta2, "second frame angle (radians)");
    };
    std::string state, format = "json";
    auto add_state = [&](CLI::App *cmd, bool required) {
        auto *o = cmd->add_option("--state", state, "named:<name> or file:<path>");
        if (required) o->required();
    };
    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };

    auto *contexts = app.add_subcommand("contexts", "frame, reflectivities and operator identities");
    add_frame(contexts);

    bool table = false, eleven = false;
    auto *kd = app.add_subcommand("kd", "KD table or eleven-term distribution");
    add_frame(kd);
    add_state(kd, true);
    add_format(kd);
    kd->add_flag("--table", table, "3x3 KD table");
    kd->add_flag("--eleven", eleven, "eleven-term distribution");

    std::string red_path, data_path;
    bool roundtrip = false;
    auto *rec = app.add_subcommand("reconstruct", "state reconstruction from KD data");
    add_frame(rec);
    add_state(rec, false);
    rec->add_flag("--roundtrip", roundtrip, "extract then reconstruct --state");
    rec->add_option("--red", red_path, "JSON file with the five red entries");
    rec->add_option("--data", data_path, "JSON file with tomographic data");

    auto *ineq = app.add_subcommand("inequality", "probability sum against the noncontextual bound");
    add_frame(ineq);
    add_state(ineq, true);

    std::string context, target;
    auto *weak = app.add_subcommand("weak", "contextual weak values and fluctuations");
    add_frame(weak);
    add_state(weak, true);
    weak->add_option("--context", context, "context label")->required();
    weak->add_option("--target", target, "outcome b of W(b|a)");

    std::string experiment = "tomography";
    std::uint64_t shots = 0, seed = 0;
    unsigned threads = 1;
    auto *sim = app.add_subcommand("simulate", "finite-shot measurement simulation");
    add_frame(sim);
    add_state(sim, true);
    add_format(sim);
    sim->add_option("--experiment", experiment)->check(CLI::IsMember({"tomography", "inequality"}));
    sim->add_option("--shots", shots, "shots per measurement setting")->required();
    sim->add_option("--seed", seed, "RNG seed")->required();
    sim->add_option("--threads", threads)->check(CLI::PositiveNumber);

    auto *report = app.add_subcommand("report", "all analyses for one state");
    add_frame(report);
    add_state(report, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*contexts) return cmd_contexts(fo);
        if (*kd) return cmd_kd(fo, state, table, eleven, format);
        if (*rec) {
            if (roundtrip && state.empty()) throw UsageError("--roundtrip needs --state");
            return cmd_reconstruct(fo, state, red_path, data_path);
        }
        if (*ineq) return cmd_inequality(fo, state);
        if (*weak) return cmd_weak(fo, state, context, target);
        if (*sim) return cmd_simulate(fo, state, experiment, shots, seed, threads, format);
        if (*report) return cmd_report(fo, state);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << describe(e) << '\n';
        return e.code() == ErrorCode::InvalidArgument ? kExitUsage : kExitDiagnostic;
    }
    return kExitUsage;
}
