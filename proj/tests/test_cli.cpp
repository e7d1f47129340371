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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "planarpulse/cli.hpp"
#include "planarpulse/sequence_io.hpp"
#include "test_util.hpp"

using namespace planarpulse;
using namespace planarpulse::cli;
using namespace planarpulse::testing;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

int synth_to(const TargetSpec& spec, const std::string& path, std::string* log = nullptr) {
    std::ostringstream out, err;
    const int rc = run_synth({spec, path}, out, err);
    if (log) {
        *log = out.str() + err.str();
    }
    return rc;
}

int verify_file(const std::string& path, std::string* log = nullptr) {
    std::ostringstream out, err;
    const int rc = run_verify({path, 1e-3, 1e-2}, out, err);
    if (log) {
        *log = out.str() + err.str();
    }
    return rc;
}

}  // namespace

TEST_CASE("synth then verify passes for every target kind and robustness") {
    auto rng = seeded_rng(41);
    const Mat2 haar = random_su2(rng);
    const std::vector<TargetKind> kinds{
        HadamardAsym{}, HadamardSym{}, ZGate{kPi}, PlanarRotation{1.2, 0.4},
        ArbitraryGate{haar}};
    int index = 0;
    for (const TargetKind& kind : kinds) {
        for (Robustness level : {Robustness::amplitude_only, Robustness::nested}) {
            TempFile file("cli_case_" + std::to_string(index++) + ".json");
            std::string synth_log;
            REQUIRE(synth_to({kind, level}, file.path, &synth_log) == kExitOk);
            CHECK(synth_log.find("pulses:") != std::string::npos);
            CHECK(synth_log.find("time_cost:") != std::string::npos);
            CHECK(synth_log.find("generator_norm:") != std::string::npos);
            CHECK(synth_log.find("closure_residual:") != std::string::npos);

            std::string verify_log;
            CHECK(verify_file(file.path, &verify_log) == kExitOk);
            CHECK(verify_log.find("FAIL") == std::string::npos);
        }
    }
}

TEST_CASE("synth: degenerate z target exits with code 3") {
    std::ostringstream out, err;
    const int rc = run_synth({{ZGate{kTwoPi}, Robustness::amplitude_only}, ""}, out, err);
    CHECK(rc == kExitDegenerate);
    CHECK(err.str().find("degenerate") != std::string::npos);
}

TEST_CASE("synth: document goes to stdout when no output path is given") {
    std::ostringstream out, err;
    REQUIRE(run_synth({{ZGate{kPi}, Robustness::amplitude_only}, ""}, out, err) ==
            kExitOk);
    const SequenceDocument doc = parse_document(out.str());
    CHECK(doc.pulses.size() == 4);
    CHECK(doc.robustness == "ae");
    REQUIRE(doc.provenance.has_value());
    CHECK(doc.provenance->branch == QuadBranch::principal);
    CHECK(err.str().find("pulses: 4") != std::string::npos);
}

TEST_CASE("verify: perturbed closure phase fails with exit 1") {
    TempFile file("cli_perturbed.json");
    REQUIRE(synth_to({ZGate{kPi}, Robustness::amplitude_only}, file.path) == kExitOk);
    SequenceDocument doc = load_document(file.path);
    REQUIRE(doc.pulses.size() == 4);
    doc.pulses[2] = Pulse(doc.pulses[2].theta, doc.pulses[2].phi + 0.1);
    save_document(doc, file.path);

    std::string log;
    CHECK(verify_file(file.path, &log) == kExitVerifyFailed);
    CHECK(log.find("FAIL generator_norm") != std::string::npos);
    // The trivial pulse still composes to -1, so reproduction holds.
    CHECK(log.find("PASS target_reproduction") != std::string::npos);
}

TEST_CASE("verify: empty sequence against the identity passes vacuously") {
    TempFile file("cli_empty.json");
    SequenceDocument doc;
    doc.target = format_target(ArbitraryGate{Mat2::identity()});
    doc.robustness = "ae";
    save_document(doc, file.path);
    std::string log;
    CHECK(verify_file(file.path, &log) == kExitOk);
    CHECK(log.find("vacuous") != std::string::npos);
}

TEST_CASE("verify: missing file is a usage error") {
    std::ostringstream out, err;
    CHECK(run_verify({"missing_file.json", 1e-3, 1e-2}, out, err) == kExitUsage);
}

TEST_CASE("sweep: defaults produce the full grid deterministically") {
    TempFile doc_file("cli_sweep_doc.json");
    REQUIRE(synth_to({ZGate{kPi}, Robustness::amplitude_only}, doc_file.path) ==
            kExitOk);

    std::ostringstream out1, out2, err;
    SweepOptions opts;
    opts.doc_path = doc_file.path;
    REQUIRE(run_sweep(opts, out1, err) == kExitOk);
    REQUIRE(run_sweep(opts, out2, err) == kExitOk);
    CHECK(out1.str() == out2.str());  // byte-identical

    std::istringstream lines(out1.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "f,epsilon,infidelity");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
    }
    CHECK(rows == 4 * 81);
}

TEST_CASE("sweep: single zero point reports zero infidelity") {
    TempFile doc_file("cli_sweep_zero.json");
    REQUIRE(synth_to({HadamardAsym{}, Robustness::amplitude_only}, doc_file.path) ==
            kExitOk);
    std::ostringstream out, err;
    SweepOptions opts;
    opts.doc_path = doc_file.path;
    opts.eps_spec = "0:0:1";
    opts.f_spec = "0";
    REQUIRE(run_sweep(opts, out, err) == kExitOk);
    std::istringstream lines(out.str());
    std::string header, row;
    std::getline(lines, header);
    REQUIRE(std::getline(lines, row));
    const double inf = std::stod(row.substr(row.rfind(',') + 1));
    CHECK(inf < 1e-12);
    CHECK_FALSE(std::getline(lines, row));
}

TEST_CASE("sweep: robust beats bare across the amplitude window at f = 0") {
    TempFile robust_file("cli_sweep_robust.json");
    REQUIRE(synth_to({HadamardAsym{}, Robustness::amplitude_only}, robust_file.path) ==
            kExitOk);

    // Hand-made bare document: the unprotected two-pulse split.
    TempFile bare_file("cli_sweep_bare.json");
    SequenceDocument bare;
    bare.target = "hadamard";
    bare.robustness = "none";
    bare.pulses = {Pulse(kPi, 0.0), Pulse(kPi / 2.0, 3.0 * kPi / 2.0)};
    save_document(bare, bare_file.path);

    auto grid_of = [&](const std::string& path) {
        std::ostringstream out, err;
        SweepOptions opts;
        opts.doc_path = path;
        opts.eps_spec = "-0.1:0.1:21";
        opts.f_spec = "0";
        REQUIRE(run_sweep(opts, out, err) == kExitOk);
        std::vector<double> values;
        std::istringstream lines(out.str());
        std::string line;
        std::getline(lines, line);
        while (std::getline(lines, line)) {
            values.push_back(std::stod(line.substr(line.rfind(',') + 1)));
        }
        return values;
    };
    const std::vector<double> robust = grid_of(robust_file.path);
    const std::vector<double> plain = grid_of(bare_file.path);
    REQUIRE(robust.size() == 21);
    REQUIRE(plain.size() == 21);
    for (std::size_t i = 0; i < robust.size(); ++i) {
        CHECK(robust[i] <= plain[i] + 1e-15);
    }
}

TEST_CASE("sweep: malformed axis specs are usage errors") {
    TempFile doc_file("cli_sweep_bad.json");
    REQUIRE(synth_to({ZGate{kPi}, Robustness::amplitude_only}, doc_file.path) ==
            kExitOk);
    std::ostringstream out, err;
    SweepOptions opts;
    opts.doc_path = doc_file.path;
    opts.eps_spec = "backwards";
    CHECK(run_sweep(opts, out, err) == kExitUsage);
    opts.eps_spec = "0.2:-0.2:5";
    CHECK(run_sweep(opts, out, err) == kExitUsage);
    opts.eps_spec = "-0.1:0.1:3";
    opts.f_spec = "0.1,0.01";  // unsorted
    CHECK(run_sweep(opts, out, err) == kExitUsage);
}

TEST_CASE("table: catalog text with recomputed rows and filters") {
    std::ostringstream out, err;
    REQUIRE(run_table({}, out, err) == kExitOk);
    const std::string text = out.str();
    for (const char* name : {"quad4", "quad-sym", "SCROFULOUS", "SK1", "BB1",
                             "nested quad4", "nested quad-sym", "reduced CinSK",
                             "reduced CinBB", "reduced SKinsC"}) {
        CHECK(text.find(name) != std::string::npos);
    }
    CHECK(text.find("MISMATCH") == std::string::npos);

    std::ostringstream z_out;
    REQUIRE(run_table({Gate::z_phi, false}, z_out, err) == kExitOk);
    CHECK(z_out.str().find("quad-sym") == std::string::npos);  // hadamard-only row

    std::ostringstream csv_out;
    REQUIRE(run_table({std::nullopt, true}, csv_out, err) == kExitOk);
    std::istringstream lines(csv_out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line ==
          "name,gate,N,T,robust_ae,robust_ore,recomputed_N,recomputed_T,match");
    int rows = 0;
    int mismatches = 0;
    while (std::getline(lines, line)) {
        ++rows;
        if (line.find("MISMATCH") != std::string::npos) {
            ++mismatches;
        }
    }
    CHECK(rows == 18);
    CHECK(mismatches == 0);
}

#ifdef PLANARPULSE_CLI_BIN
TEST_CASE("binary: end-to-end invocations and exit codes") {
    const std::string bin = PLANARPULSE_CLI_BIN;
    auto run = [&](const std::string& args) {
        const int status = std::system((bin + " " + args).c_str());
        return WEXITSTATUS(status);
    };
    TempFile doc("cli_bin_doc.json");
    CHECK(run("synth hadamard --robust ae -o " + doc.path + " > /dev/null") == 0);
    CHECK(run("verify " + doc.path + " > /dev/null") == 0);
    TempFile csv("cli_bin_sweep.csv");
    CHECK(run("sweep " + doc.path + " --eps -0.05:0.05:5 --f 0,0.01 -o " +
              csv.path) == 0);
    CHECK(run("table > /dev/null") == 0);
    CHECK(run("table --gate z --csv > /dev/null") == 0);

    // Degenerate z target.
    CHECK(run("synth z --phi 6.283185307179586 --robust ae 2> /dev/null") == 3);
    // Usage errors: unknown subcommand, unknown target, missing option value.
    CHECK(run("frobnicate 2> /dev/null") == 2);
    CHECK(run("synth nonsense --robust ae 2> /dev/null") == 2);
    CHECK(run("synth z --robust ae 2> /dev/null") == 2);
    CHECK(run("sweep missing.json 2> /dev/null") == 2);

    // Degrees flag: z at 180 degrees equals z at pi radians.
    TempFile deg_doc("cli_bin_deg.json");
    TempFile rad_doc("cli_bin_rad.json");
    CHECK(run("synth z --phi 180 --degrees --robust ae -o " + deg_doc.path +
              " > /dev/null") == 0);
    CHECK(run("synth z --phi 3.14159265358979323846 --robust ae -o " +
              rad_doc.path + " > /dev/null") == 0);
    const SequenceDocument lhs = load_document(deg_doc.path);
    const SequenceDocument rhs = load_document(rad_doc.path);
    REQUIRE(lhs.pulses.size() == rhs.pulses.size());
    for (std::size_t i = 0; i < lhs.pulses.size(); ++i) {
        CHECK(lhs.pulses[i].theta == doctest::Approx(rhs.pulses[i].theta));
        CHECK(lhs.pulses[i].phi == doctest::Approx(rhs.pulses[i].phi));
    }

    // Arbitrary matrix synthesis through the full argument parser.
    TempFile arb_doc("cli_bin_arb.json");
    CHECK(run("synth arbitrary --matrix "
              "0.70710678118654746+0j,0.70710678118654746+0j,"
              "0.70710678118654746+0j,-0.70710678118654746+0j "
              "--robust nested -o " +
              arb_doc.path + " > /dev/null") == 0);
    CHECK(run("verify " + arb_doc.path + " > /dev/null") == 0);
}
#endif
