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

#include <map>
#include <string>

#include "kdctx/error.hpp"
#include "kdctx/kd.hpp"
#include "kdctx/states.hpp"
#include "support.hpp"

using namespace kdctx;
using namespace kdctx::testing;

namespace {

DensityMatrix named(const char *name) { return *named_state(name); }

void check_eleven(const DensityMatrix &rho, const std::map<std::string, double> &expected) {
    const auto terms = eleven_terms(rho);
    for (const auto &info : paths()) {
        INFO("path " << info.label);
        CHECK(near(terms[info.path], Complex(expected.at(std::string(info.label)), 0)));
    }
}

} // namespace

TEST_CASE("eleven terms for |P2>", "[kd]") {
    check_eleven(named("P2"), {{"0", -1.0 / 12}, {"1,P2", 1.0 / 6}, {"S1,D2", 0.25}, {"f,3", 0},
                               {"S2,D1", 0}, {"2,P1", 1.0 / 6}, {"1,f", 0}, {"S1,S2", 0},
                               {"2,f", 0}, {"1,S2", 0}, {"2,S1", 0.5}});
}

TEST_CASE("eleven terms for |T1f>", "[kd]") {
    check_eleven(named("T1f"), {{"0", 1.0 / 33}, {"1,P2", 1.0 / 11}, {"S1,D2", 0}, {"f,3", 5.0 / 33},
                                {"S2,D1", -1.0 / 11}, {"2,P1", -2.0 / 33}, {"1,f", 5.0 / 11},
                                {"S1,S2", 0}, {"2,f", 5.0 / 33}, {"1,S2", 3.0 / 11}, {"2,S1", 0}});
}

TEST_CASE("eleven terms for |Nx>", "[kd]") {
    check_eleven(named("Nx"), {{"0", 5.0 / 36}, {"1,P2", -1.0 / 9}, {"S1,D2", -1.0 / 12},
                               {"f,3", -1.0 / 9}, {"S2,D1", -1.0 / 12}, {"2,P1", -1.0 / 9},
                               {"1,f", 2.0 / 9}, {"S1,S2", 0.25}, {"2,f", 2.0 / 9},
                               {"1,S2", 1.0 / 3}, {"2,S1", 1.0 / 3}});
}

TEST_CASE("rho(0) for eigenstates and the maximally mixed state", "[kd]") {
    for (const char *n : {"3", "D1", "P1", "P2", "D2"}) {
        INFO(n);
        CHECK(near(rho_zero(named(n)), Complex(-1.0 / 12, 0)));
    }
    for (const char *n : {"1", "2", "S1", "S2", "f"}) {
        INFO(n);
        CHECK(near(rho_zero(named(n)), Complex(0, 0)));
    }
    CHECK(near(rho_zero(named("mixed")), Complex(-1.0 / 36, 0)));
}

TEST_CASE("KD table of |T1f>", "[kd]") {
    const auto t = kd_table(named("T1f"));
    const double expect[3][3] = {{15.0 / 33, 5.0 / 33, 5.0 / 33},
                                 {9.0 / 33, 0, -3.0 / 33},
                                 {3.0 / 33, -2.0 / 33, 1.0 / 33}};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) CHECK(near(t.entries[r][c], Complex(expect[r][c], 0)));
    }
    CHECK(near(t.at(Outcome::F, Outcome::One), Complex(15.0 / 33, 0)));
    CHECK(near(t.total(), Complex(1, 0)));
}

TEST_CASE("KD table marginals", "[kd][property]") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const auto rho = random_density(rng);
        const auto t = kd_table(rho);
        // row sums are the Born probabilities of f, S2, P2 and column sums those of 1, 2, 3
        for (int r = 0; r < 3; ++r) {
            CHECK(near(t.row_sum(r), Complex(rho.probability(canonical_frame().vec(KDTable::kRows[r])), 0),
                       kLoose));
        }
        for (int c = 0; c < 3; ++c) {
            CHECK(near(t.column_sum(c),
                       Complex(rho.probability(canonical_frame().vec(KDTable::kColumns[c])), 0),
                       kLoose));
        }
        CHECK(near(t.entries[1][1], Complex(0, 0)));
    }
}

TEST_CASE("operator identities hold on canonical and random frames", "[kd][property]") {
    const auto canon = verify_identities(canonical_frame(), kExact);
    CHECK(canon.max_residual() <= kExact);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const auto frame = random_angle_frame(rng);
        CHECK(identity_residuals(frame).max_residual() <= kLoose);
    }
}

TEST_CASE("identity check fails on a perturbed frame", "[kd]") {
    const auto tilted = canonical_frame().with_vector(
        Outcome::P1, StateVector::normalized(Eigen::Vector3cd(2, -1, 1.2)));
    try {
        (void)verify_identities(tilted);
        FAIL("expected IdentityViolation");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::IdentityViolation);
    }
}

TEST_CASE("eleven terms: normalization, marginals and determinism", "[kd][property]") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const auto rho = random_density(rng);
        const auto terms = eleven_terms(rho);
        CHECK(near(terms.total(), Complex(1, 0), kLoose));
        for (Outcome o : members(Context::C123)) {
            CHECK(near(path_marginal(terms, Context::C123, o),
                       Complex(rho.probability(canonical_frame().vec(o)), 0), kLoose));
        }
        for (Context c : kAllContexts) {
            for (Outcome o : members(c)) {
                CHECK(near(path_marginal(terms, c, o).real(),
                           rho.probability(canonical_frame().vec(o)), kLoose));
            }
        }
        CHECK(check_determinism(terms, canonical_frame(), kLoose).max_residual() <= kLoose);
    }
}

TEST_CASE("determinism check rejects inconsistent terms", "[kd]") {
    auto terms = eleven_terms(*named_state("Nx"));
    terms[Path::OneF] += Complex(0.1, 0);
    try {
        (void)check_determinism(terms);
        FAIL("expected ConstraintViolation");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::ConstraintViolation);
    }
}

TEST_CASE("term lookup in either order", "[kd]") {
    std::mt19937_64 rng(3);
    const auto rho = random_density(rng);
    const auto terms = eleven_terms(rho);
    CHECK(near(terms.term(Outcome::Three, Outcome::F), kd_term(rho, Outcome::Three, Outcome::F)));
    CHECK(near(terms.term(Outcome::F, Outcome::Three), kd_term(rho, Outcome::F, Outcome::Three)));
    CHECK(near(terms.term(Outcome::S2, Outcome::D1), kd_term(rho, Outcome::S2, Outcome::D1)));
    CHECK_THROWS_AS(terms.term(Outcome::One, Outcome::Two), Error);
}

TEST_CASE("pair-sum relations", "[kd][property]") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        for (double r : pair_sum_relations(random_density(rng))) CHECK(r <= kLoose);
    }
}

TEST_CASE("Bargmann invariant is -1/12 and phase independent", "[kd][property]") {
    CHECK(near(bargmann_invariant(), Complex(-1.0 / 12, 0)));
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> phase(0, 6.283185307179586);
    for (int i = 0; i < 100; ++i) {
        PentagonFrame f = canonical_frame();
        for (Outcome o : kAllOutcomes) f = f.with_vector(o, f.vec(o).with_phase(phase(rng)));
        CHECK(near(bargmann_invariant(f), Complex(-1.0 / 12, 0)));
    }
}

TEST_CASE("P(3) relations, rho(0) normalization and Hermitian pairing", "[kd][property]") {
    using O = Outcome;
    std::mt19937_64 rng(21);
    for (int i = 0; i < 1000; ++i) {
        const auto rho = i % 2 ? random_pure(rng) : random_density(rng);
        const auto t = eleven_terms(rho);
        const double p3 = rho.probability(canonical_frame().vec(O::Three));
        CHECK(near(t[Path::Zero] + t[Path::S1D2] + t[Path::S2D1] + t[Path::F3] + t[Path::S1S2],
                   Complex(p3, 0), kLoose));
        CHECK(near(kd_term(rho, O::S1, O::S2) + kd_term(rho, O::D1, O::S2) +
                       kd_term(rho, O::S1, O::D2) + kd_term(rho, O::D1, O::D2),
                   Complex(p3, 0), kLoose));
        Complex ten{};
        for (const auto &info : paths()) {
            if (info.path != Path::Zero) ten += t[info.path];
        }
        CHECK(near(t[Path::Zero], Complex(1, 0) - ten, kLoose));
        for (O a : kAllOutcomes) {
            for (O b : kAllOutcomes) CHECK(near(kd_term(rho, a, b), std::conj(kd_term(rho, b, a)), kLoose));
        }
    }
}

TEST_CASE("negative terms appear in every position of the sigma decomposition", "[kd]") {
    const auto nx = eleven_terms(*named_state("Nx"));
    for (Path p : {Path::S1D2, Path::S2D1, Path::TwoP1, Path::OneP2, Path::F3}) CHECK(nx[p].real() < 0);
    CHECK(eleven_terms(*named_state("3"))[Path::Zero].real() < 0);
}
