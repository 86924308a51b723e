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

#include <algorithm>
#include <cmath>

#include "kdctx/error.hpp"
#include "kdctx/kd.hpp"
#include "kdctx/states.hpp"
#include "kdctx/tomography.hpp"
#include "support.hpp"

using namespace kdctx;
using namespace kdctx::testing;

TEST_CASE("round trip over random densities", "[tomography][property]") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        const auto rho = random_density(rng);
        const auto rec = reconstruct(extract(rho));
        REQUIRE(rec.valid());
        CHECK(max_abs(rec.matrix - rho.matrix()) <= kLoose);
    }
}

TEST_CASE("round trip on random angle frames", "[tomography][property]") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        const auto frame = random_angle_frame(rng);
        const auto rho = random_density(rng);
        const auto rec = reconstruct(extract(rho, frame), frame);
        CHECK(max_abs(rec.matrix - rho.matrix()) <= 1e-9);
    }
}

TEST_CASE("red entries determine the data", "[tomography][property]") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 1000; ++i) {
        const auto rho = random_density(rng);
        const auto direct = extract(rho);
        const auto via = red_to_data(red_entries(rho));
        CHECK(near(via.p1, direct.p1, kLoose));
        CHECK(near(via.pf, direct.pf, kLoose));
        CHECK(near(via.r_1f, direct.r_1f, kLoose));
        CHECK(near(via.r_1D2, direct.r_1D2, kLoose));
        CHECK(near(via.r_D2f, direct.r_D2f, kLoose));
    }
}

TEST_CASE("completion relations match direct KD terms", "[tomography][property]") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 1000; ++i) {
        const auto rho = random_density(rng);
        const auto c = complete_table(red_entries(rho));
        CHECK(near(c.r_3P2, kd_term(rho, Outcome::Three, Outcome::P2), kLoose));
        CHECK(near(c.r_2P2, kd_term(rho, Outcome::Two, Outcome::P2), kLoose));
        CHECK(near(c.r_3S2, kd_term(rho, Outcome::Three, Outcome::S2), kLoose));
    }
}

TEST_CASE("completion special cases", "[tomography]") {
    const auto t = complete_table(red_entries(*named_state("T1f")));
    CHECK(near(t.r_3P2, Complex(1.0 / 33, 0)));
    CHECK(near(t.r_2P2, Complex(-2.0 / 33, 0)));
    CHECK(near(t.r_3S2, Complex(-3.0 / 33, 0)));

    const auto s1 = complete_table(red_entries(*named_state("S1")));
    CHECK(near(s1.r_3P2, Complex(0.25, 0)));
    CHECK(near(s1.r_2P2, Complex(0.5, 0)));
    CHECK(near(s1.r_3S2, Complex(0.25, 0)));

    const auto two = red_entries(*named_state("2"));
    const auto c2 = complete_table(two);
    CHECK(near(c2.r_2P2, Complex(2.0 / 3, 0)));
    CHECK(near(c2.r_3P2, Complex(0, 0)));
    CHECK(near(c2.r_3S2, Complex(0, 0)));

    const auto s2 = complete_table(red_entries(*named_state("S2")));
    CHECK(near(s2.r_3S2, Complex(0.5, 0)));
    CHECK(near(s2.r_2P2, Complex(0, 0)));
}

TEST_CASE("all-zero red entries reconstruct |S1>", "[tomography]") {
    const RedEntries zero{};
    const auto rec = reconstruct(red_to_data(zero));
    REQUIRE(rec.valid());
    const auto s1 = DensityMatrix::from_pure(canonical_frame().vec(Outcome::S1));
    CHECK(max_abs(rec.matrix - s1.matrix()) <= kExact);
}

TEST_CASE("derived probabilities agree with the Born rule", "[tomography][property]") {
    std::mt19937_64 rng(46);
    const auto &f = canonical_frame();
    for (int i = 0; i < 500; ++i) {
        const auto rho = random_density(rng);
        const auto p = derived_probabilities(extract(rho));
        CHECK(near(p.p2, rho.probability(f.vec(Outcome::Two)), kLoose));
        CHECK(near(p.ps2, rho.probability(f.vec(Outcome::S2)), kLoose));
        CHECK(near(p.pd2, rho.probability(f.vec(Outcome::D2)), kLoose));
        CHECK(near(p.ps1, rho.probability(f.vec(Outcome::S1)), kLoose));
    }
}

TEST_CASE("non-physical data is diagnosed as NotPositive", "[tomography]") {
    RedEntries red;
    red.r_1f = red.r_2f = red.r_3f = red.r_1S2 = red.r_1P2 = Complex(0.5, 0);
    const auto rec = reconstruct(red_to_data(red));
    REQUIRE_FALSE(rec.valid());
    CHECK(rec.diagnosis->code == ErrorCode::NotPositive);
    CHECK(rec.diagnosis->min_eigenvalue < 0);
    try {
        (void)rec.density();
        FAIL("expected NotPositive");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotPositive);
    }
}

TEST_CASE("inconsistent marginals are rejected", "[tomography]") {
    RedEntries red{};
    red.r_1f = Complex(0.1, 0.3);
    try {
        (void)red_to_data(red);
        FAIL("expected InconsistentMarginal");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::InconsistentMarginal);
    }
    CHECK_NOTHROW(red_to_data_checked(red, 1.0));
}

TEST_CASE("extraction is affine", "[tomography][property]") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_density(rng);
        const auto b = random_density(rng);
        const double lam = 0.3;
        const auto lhs = extract(a.mix(b, lam));
        const auto rhs = extract(a) * lam + extract(b) * (1 - lam);
        CHECK(near(lhs.p1, rhs.p1, kLoose));
        CHECK(near(lhs.pf, rhs.pf, kLoose));
        CHECK(near(lhs.r_1f, rhs.r_1f, kLoose));
        CHECK(near(lhs.r_1D2, rhs.r_1D2, kLoose));
        CHECK(near(lhs.r_D2f, rhs.r_D2f, kLoose));
    }
}

TEST_CASE("five red plus three completed entries sum to one", "[tomography][property]") {
    std::mt19937_64 rng(48);
    for (int i = 0; i < 1000; ++i) {
        const auto red = red_entries(random_density(rng));
        const auto c = complete_table(red);
        const Complex s = red.r_1f + red.r_2f + red.r_3f + red.r_1S2 + red.r_1P2 + c.r_3P2 + c.r_2P2 + c.r_3S2;
        CHECK(near(s, Complex(1, 0), kLoose));
    }
}

TEST_CASE("rho(2,f) bound near |S1>", "[tomography]") {
    // with the other red entries at zero, P(S2) = (1 - 3 rho(2,f)) / 4
    for (double x : {0.0, 0.2, 1.0 / 3 - 1e-6}) {
        RedEntries red{};
        red.r_2f = x;
        const auto data = red_to_data(red);
        CHECK(near(derived_probabilities(data).ps2, 0.25 - 0.75 * x));
        CHECK(reconstruct(data).valid());
    }
    for (double x : {1.0 / 3 + 1e-6, 0.35, 0.4}) {
        RedEntries red{};
        red.r_2f = x;
        const auto rec = reconstruct(red_to_data(red));
        REQUIRE_FALSE(rec.valid());
        CHECK(rec.diagnosis->code == ErrorCode::NotPositive);
    }
}

TEST_CASE("rho(2,f) over all states stays below its pure-state maximum", "[tomography][property]") {
    // |<f|2>| max_psi Re <2|psi><psi|f> = (1 + 1/sqrt 3) / (2 sqrt 3); exceeds 1/3
    const double bound = (1 + 1 / std::sqrt(3.0)) / (2 * std::sqrt(3.0));
    std::mt19937_64 rng(49);
    double largest = 0;
    for (int i = 0; i < 20000; ++i) {
        const double v = red_entries(random_pure(rng)).r_2f.real();
        CHECK(v <= bound + kLoose);
        largest = std::max(largest, v);
    }
    CHECK(largest > 1.0 / 3);
}
