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

#include <catch2/catch_amalgamated.hpp>

#include "kdctx/contextuality.hpp"
#include "kdctx/error.hpp"
#include "kdctx/kd.hpp"
#include "kdctx/serialize.hpp"
#include "kdctx/sim.hpp"
#include "kdctx/states.hpp"
#include "kdctx/weakvalues.hpp"
#include "support.hpp"

using namespace kdctx;
using namespace kdctx::testing;

TEST_CASE("numbers are rounded to 12 significant digits", "[serialize]") {
    CHECK(round12(1.0 / 3) == 0.333333333333);
    CHECK(round12(-0.0) == 0.0);
    CHECK(round12(1e-17) == 1e-17);
    CHECK(to_json(Complex(0.5, -0.25)) == Json::array({0.5, -0.25}));
}

TEST_CASE("eleven terms are keyed by path label", "[serialize]") {
    const auto j = to_json(eleven_terms(*named_state("Nx")));
    CHECK(j.size() == 11);
    CHECK(j.at("0")[0].get<double>() == round12(5.0 / 36));
    CHECK(j.at("f,3")[0].get<double>() == round12(-1.0 / 9));
    CHECK(j.begin().key() == "0");
}

TEST_CASE("KD table JSON and CSV", "[serialize]") {
    const auto t = kd_table(*named_state("T1f"));
    const auto j = to_json(t);
    CHECK(j.at("entries")[1][1].is_null());
    CHECK(j.at("entries")[0][0][0].get<double>() == round12(15.0 / 33));
    const auto csv = kd_table_csv(t);
    CHECK(csv.rfind("row,column,re,im\n", 0) == 0);
    CHECK(csv.find("f,1,0.454545454545,0\n") != std::string::npos);
    CHECK(csv.find("S2,2,") == std::string::npos);
}

TEST_CASE("state specifications", "[serialize]") {
    const auto pure = state_from_json(Json::parse(R"({"kind":"pure","amplitudes":[[2,0],[2,0],[1,0]]})"));
    CHECK(max_abs(pure.matrix() - named_state("Nx")->matrix()) <= kExact);

    const auto named = state_from_json(Json::parse(R"({"kind":"named","name":"mixed"})"));
    CHECK(max_abs(named.matrix() - Eigen::Matrix3cd::Identity() / 3.0) <= kExact);

    const auto dens = state_from_json(
        Json{{"kind", "density"}, {"matrix", matrix_to_json(named_state("T1f")->matrix())}});
    CHECK(max_abs(dens.matrix() - named_state("T1f")->matrix()) <= 1e-11);

    auto code_of = [](const char *text) {
        try {
            (void)state_from_json(Json::parse(text));
        } catch (const Error &e) {
            return e.code();
        }
        FAIL("expected an error");
        return ErrorCode::InvalidArgument;
    };
    CHECK(code_of(R"({"kind":"named","name":"Q"})") == ErrorCode::InvalidArgument);
    CHECK(code_of(R"({"kind":"pure","amplitudes":[[1,0],[0,0]]})") == ErrorCode::InvalidArgument);
    CHECK(code_of(R"({"kind":"density","matrix":[[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[-1,0]]]})") ==
          ErrorCode::NotPositive);
    CHECK(code_of(R"({"amplitudes":[]})") == ErrorCode::InvalidArgument);
}

TEST_CASE("red entries and data round-trip through JSON", "[serialize]") {
    const auto rho = *named_state("T1f");
    const auto red = red_entries(rho);
    const auto back = red_entries_from_json(to_json(red));
    CHECK(near(back.r_1P2, red.r_1P2));
    const auto data = extract(rho);
    const auto d2 = tomographic_data_from_json(to_json(data));
    CHECK(near(d2.r_D2f, data.r_D2f));
    CHECK(near(d2.pf, data.pf));
}

TEST_CASE("report documents carry the expected fields", "[serialize]") {
    const auto rho = *named_state("Nx");
    const auto s = to_json(probability_sum(rho));
    for (const char *k : {"sigma", "probabilities", "violated", "margin"}) CHECK(s.contains(k));

    const auto w = to_json(outcome_value_table(rho, Context::C123));
    CHECK(w.at("context") == "C123");
    CHECK(w.at("rows").size() == 3);
    const auto f = to_json(fluctuation(rho, Outcome::F, Context::C123));
    for (const char *k : {"mean", "variance", "second_moment", "bound_satisfied"}) CHECK(f.contains(k));

    const auto e = to_json(run_tomography_experiment(rho, 100, 1));
    for (const char *k : {"settings", "estimates", "reconstructed", "trace_distance", "seed", "shots_per_setting"}) {
        CHECK(e.contains(k));
    }
    const auto counts = to_json(sample_context(rho, Context::C1, 50, 2));
    CHECK(counts.at("shots") == 50);
    CHECK(counts.at("counts").size() == 3);
}
