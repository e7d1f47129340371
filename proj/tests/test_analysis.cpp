// Copyright 2026 The planarpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "planarpulse/analysis.hpp"
#include "planarpulse/error_model.hpp"
#include "planarpulse/planar_synth.hpp"
#include "test_util.hpp"

using namespace planarpulse;
using namespace planarpulse::testing;

TEST_CASE("time_cost: named sequences") {
    CHECK(time_cost({Pulse(kTwoPi, 0.3)}) == doctest::Approx(2.0));
    const Sequence v = build_robust_theta(hadamard_asym_decomposition());
    CHECK(time_cost(v) == doctest::Approx(5.5).epsilon(1e-12));
    const Sequence nested = nest(v);
    // 12 + (3 pi / 2 - 4 (k(pi) + k(pi/2))) / pi = 12.3732...
    const double expected =
        12.0 + (1.5 * kPi - 4.0 * (corpse_k(kPi) + corpse_k(kPi / 2.0))) / kPi;
    CHECK(time_cost(nested) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(time_cost(nested) == doctest::Approx(12.373).epsilon(1e-3));
}

TEST_CASE("predicted_time_cost: named decompositions") {
    CHECK(predicted_time_cost(z_gate_decomposition(0.77), Robustness::amplitude_only) ==
          doctest::Approx(6.0));
    CHECK(predicted_time_cost(z_gate_decomposition(kPi), Robustness::nested) ==
          doctest::Approx(12.0 + 2.0 / 3.0).epsilon(1e-12));
    CHECK(predicted_time_cost(hadamard_asym_decomposition(),
                              Robustness::amplitude_only) == doctest::Approx(5.5));
}

TEST_CASE("predicted_time_cost: equals the built sequence cost") {
    auto rng = seeded_rng();
    for (int i = 0; i < 1000; ++i) {
        const ThetaDecomposition d = random_decomposition(rng);
        const Sequence v = build_robust_theta(d);
        CHECK(time_cost(v) ==
              doctest::Approx(predicted_time_cost(d, Robustness::amplitude_only))
                  .epsilon(1e-9));
        CHECK(time_cost(nest(v)) ==
              doctest::Approx(predicted_time_cost(d, Robustness::nested))
                  .epsilon(1e-9));
    }
}

TEST_CASE("sweep: grid shape, determinism and entries") {
    const Sequence v = build_robust_theta(z_gate_decomposition(kPi));
    const Mat2 target = z_rotation(kPi);
    std::vector<double> eps;
    for (int i = 0; i < 81; ++i) {
        eps.push_back(-0.2 + 0.4 * i / 80.0);
    }
    const std::vector<double> fs{0.0, 0.001, 0.01, 0.1};

    const SweepGrid serial = sweep(target, v, eps, fs, "z:pi", "robust", 1);
    const SweepGrid parallel = sweep(target, v, eps, fs, "z:pi", "robust", 4);
    REQUIRE(serial.infidelities.size() == 4 * 81);
    CHECK(serial.infidelities == parallel.infidelities);  // bitwise identical

    for (double value : serial.infidelities) {
        CHECK(value >= 0.0);
        CHECK(value <= 1.0 + 1e-12);
    }
    // Error-free cell reproduces the target to numerical noise.
    CHECK(serial.at(0, 40) < 1e-15);

    // The robust sequence dominates the bare two-pulse split at f = 0.
    const SweepGrid bare =
        sweep(target, bare_theta(z_gate_decomposition(kPi)), eps, fs, "z:pi", "bare");
    CHECK(serial.at(0, 60) * 10.0 < bare.at(0, 60));  // the eps = 0.1 column
}

TEST_CASE("sweep: even in epsilon inside the robust window at f = 0") {
    const Sequence v = build_robust_theta(z_gate_decomposition(kPi));
    const Mat2 target = z_rotation(kPi);
    std::vector<double> eps;
    for (int i = -5; i <= 5; ++i) {
        eps.push_back(0.002 * i);
    }
    const SweepGrid grid = sweep(target, v, eps, {0.0});
    double peak = 0.0;
    for (double value : grid.infidelities) {
        peak = std::max(peak, value);
    }
    for (int i = 0; i < 5; ++i) {
        const double asym = std::abs(grid.at(0, i) - grid.at(0, 10 - i));
        CHECK(asym <= 0.1 * peak);
    }
}

TEST_CASE("sweep: nested hadamard baseline at f = 0.01") {
    const Sequence nested = nest(build_robust_theta(hadamard_asym_decomposition()));
    const Mat2 target = theta_unitary(hadamard_asym_decomposition());
    const SweepGrid grid = sweep(target, nested, {0.0}, {0.01});
    CHECK(grid.at(0, 0) <= 1e-5);
    // Regression baseline measured from this implementation.
    CHECK(grid.at(0, 0) == doctest::Approx(4.382856e-9).epsilon(1e-3));
}

TEST_CASE("sweep: rejects empty axes") {
    CHECK_THROWS_AS(sweep(Mat2::identity(), {}, {}, {0.0}), std::invalid_argument);
}

TEST_CASE("scaling_exponent: bare pulse against the analytic law") {
    const Pulse p(kPi, 0.0);
    const Mat2 target = pulse_unitary(p);
    const double slope =
        scaling_exponent({p}, target, ErrorVariable::epsilon, 1e-3, 1e-2);
    CHECK(slope > 1.8);
    CHECK(slope < 2.2);
    // Infidelity of the bare pulse is exactly 1 - cos(eps pi / 2).
    for (double eps : {1e-3, 3e-3, 1e-2}) {
        const double measured =
            infidelity(target, faulty_compose({p}, {eps, 0.0}));
        CHECK(measured ==
              doctest::Approx(1.0 - std::cos(eps * kPi / 2.0)).epsilon(1e-9));
    }
}

TEST_CASE("scaling_exponent: robust and corpse sequences") {
    const ThetaDecomposition d = hadamard_asym_decomposition();
    CHECK(scaling_exponent(build_robust_theta(d), theta_unitary(d),
                           ErrorVariable::epsilon, 1e-3, 1e-2) >= 3.5);
    CHECK(scaling_exponent(corpse(Pulse(kPi, 0.0)), rotation(kPi, 0.0),
                           ErrorVariable::f, 1e-3, 1e-2) >= 3.5);
}

TEST_CASE("scaling_exponent: window validation and data floor") {
    const Sequence seq{Pulse(kPi, 0.0)};
    CHECK_THROWS_AS(scaling_exponent(seq, rotation(kPi, 0.0),
                                     ErrorVariable::epsilon, 1e-2, 1e-3),
                    std::invalid_argument);
    // A sequence equal to its target for every amplitude error never rises
    // above the infidelity floor.
    const Sequence inert{Pulse(kPi, 0.0), Pulse(kPi, kPi)};
    CHECK_THROWS_AS(scaling_exponent(inert, Mat2::identity(),
                                     ErrorVariable::epsilon, 1e-3, 1e-2),
                    InsufficientData);
}

TEST_CASE("table1_catalog: shape and lookups") {
    const std::vector<CatalogEntry> catalog = table1_catalog();
    CHECK(catalog.size() == 18);  // 10 families, 8 with both gate columns

    const auto quad_h = catalog_lookup("quad4", Gate::hadamard);
    REQUIRE(quad_h.has_value());
    CHECK(quad_h->pulse_count == 4);
    CHECK(quad_h->time_cost == doctest::Approx(5.5));

    const auto skinsc_z = catalog_lookup("reduced SKinsC", Gate::z_phi);
    REQUIRE(skinsc_z.has_value());
    CHECK(skinsc_z->pulse_count == 12);
    CHECK(skinsc_z->time_cost == doctest::Approx(12.7));

    CHECK_FALSE(catalog_lookup("quad-sym", Gate::z_phi).has_value());
    CHECK_FALSE(catalog_lookup("nope", Gate::hadamard).has_value());

    for (const CatalogEntry& e : catalog) {
        CHECK(e.pulse_count >= 1);
        CHECK(e.time_cost > 0.0);
        CHECK(e.robust_ae);
    }
}

TEST_CASE("table1_catalog: synthesized rows match the built sequences") {
    auto one_decimal = [](double value) { return std::lround(value * 10.0); };
    const Sequence h_ae = robust_hadamard_asym(Robustness::amplitude_only);
    CHECK(one_decimal(time_cost(h_ae)) ==
          one_decimal(catalog_lookup("quad4", Gate::hadamard)->time_cost));
    const Sequence z_nested = robust_z(kPi, Robustness::nested);
    CHECK(one_decimal(time_cost(z_nested)) ==
          one_decimal(catalog_lookup("nested quad4", Gate::z_phi)->time_cost));
    const Sequence sym_nested = robust_hadamard_sym(Robustness::nested);
    CHECK(one_decimal(time_cost(sym_nested)) ==
          one_decimal(catalog_lookup("nested quad-sym", Gate::hadamard)->time_cost));
}
