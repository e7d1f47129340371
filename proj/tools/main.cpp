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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "planarpulse/cli.hpp"
#include "planarpulse/sequence_io.hpp"
#include "planarpulse/su2.hpp"

namespace {

using namespace planarpulse;

constexpr double kDegToRad = kPi / 180.0;

struct SynthArgs {
    std::string target;
    double phi = 0.0;
    double theta = 0.0;
    bool has_phi = false;
    bool has_theta = false;
    std::string matrix;
    std::string robust;
    std::string out_path;
    bool degrees = false;
};

// TODO: expose CORPSE winding configuration on `synth` once a concrete
// need for non-default windings shows up; the library already supports it.
int dispatch_synth(const SynthArgs& args, std::ostream& out, std::ostream& err) {
    const double scale = args.degrees ? kDegToRad : 1.0;
    TargetSpec spec;
    try {
        spec.robustness = parse_robustness(args.robust);
    } catch (const DocumentParseError&) {
        err << "--robust must be 'ae' or 'nested'\n";
        return cli::kExitUsage;
    }
    if (args.target == "hadamard") {
        spec.kind = HadamardAsym{};
    } else if (args.target == "hadamard-sym") {
        spec.kind = HadamardSym{};
    } else if (args.target == "z") {
        if (!args.has_phi) {
            err << "target 'z' requires --phi\n";
            return cli::kExitUsage;
        }
        spec.kind = ZGate{args.phi * scale};
    } else if (args.target == "rot") {
        if (!args.has_theta || !args.has_phi) {
            err << "target 'rot' requires --theta and --phi\n";
            return cli::kExitUsage;
        }
        spec.kind = PlanarRotation{args.theta * scale, args.phi * scale};
    } else if (args.target == "arbitrary") {
        if (args.matrix.empty()) {
            err << "target 'arbitrary' requires --matrix\n";
            return cli::kExitUsage;
        }
        try {
            spec.kind = std::get<ArbitraryGate>(parse_target("arbitrary:" + args.matrix));
        } catch (const DocumentParseError& e) {
            err << "bad --matrix: " << e.what() << "\n";
            return cli::kExitUsage;
        }
    } else {
        err << "unknown target '" << args.target
            << "' (expected hadamard|hadamard-sym|z|rot|arbitrary)\n";
        return cli::kExitUsage;
    }
    return cli::run_synth({spec, args.out_path}, out, err);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthesis and verification of robust single-qubit pulse sequences"};
    app.require_subcommand(1);

    SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand(
        "synth", "Synthesize a robust pulse sequence for a target gate");
    synth->add_option("target", synth_args.target,
                      "hadamard|hadamard-sym|z|rot|arbitrary")
        ->required();
    CLI::Option* phi_opt = synth->add_option("--phi", synth_args.phi,
                                             "phase angle (radians)");
    CLI::Option* theta_opt = synth->add_option("--theta", synth_args.theta,
                                               "flip angle (radians)");
    synth->add_option("--matrix", synth_args.matrix,
                      "m00,m01,m10,m11 with complex entries as re+imj");
    synth->add_option("--robust", synth_args.robust, "ae|nested")->required();
    synth->add_option("-o,--output", synth_args.out_path, "output document path");
    synth->add_flag("--degrees", synth_args.degrees,
                    "interpret --phi/--theta in degrees");

    cli::SweepOptions sweep_opts;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Infidelity sweep of a stored sequence, CSV output");
    sweep->add_option("file", sweep_opts.doc_path, "sequence document")->required();
    sweep->add_option("--eps", sweep_opts.eps_spec, "amplitude-error axis lo:hi:n");
    sweep->add_option("--f", sweep_opts.f_spec, "off-resonance values, comma list");
    sweep->add_option("-o,--output", sweep_opts.out_path, "output CSV path");

    cli::VerifyOptions verify_opts;
    std::string slope_window;
    CLI::App* verify = app.add_subcommand(
        "verify", "Re-check robustness properties of a stored sequence");
    verify->add_option("file", verify_opts.doc_path, "sequence document")->required();
    verify->add_option("--slope-window", slope_window,
                       "scaling-fit window lo:hi (default 1e-3:1e-2)");

    cli::TableOptions table_opts;
    std::string gate_filter;
    CLI::App* table = app.add_subcommand(
        "table", "Composite-pulse cost catalog with recomputed rows");
    table->add_option("--gate", gate_filter, "hadamard|z");
    table->add_flag("--csv", table_opts.csv, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << e.what() << "\n";
        return planarpulse::cli::kExitUsage;
    }

    try {
        if (synth->parsed()) {
            synth_args.has_phi = phi_opt->count() > 0;
            synth_args.has_theta = theta_opt->count() > 0;
            return dispatch_synth(synth_args, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            return cli::run_sweep(sweep_opts, std::cout, std::cerr);
        }
        if (verify->parsed()) {
            if (!slope_window.empty()) {
                const std::size_t colon = slope_window.find(':');
                try {
                    if (colon == std::string::npos) {
                        throw std::invalid_argument(slope_window);
                    }
                    verify_opts.slope_lo = std::stod(slope_window.substr(0, colon));
                    verify_opts.slope_hi = std::stod(slope_window.substr(colon + 1));
                } catch (const std::logic_error&) {
                    std::cerr << "bad --slope-window '" << slope_window << "'\n";
                    return cli::kExitUsage;
                }
            }
            return cli::run_verify(verify_opts, std::cout, std::cerr);
        }
        if (!gate_filter.empty()) {
            if (gate_filter == "hadamard") {
                table_opts.gate_filter = Gate::hadamard;
            } else if (gate_filter == "z") {
                table_opts.gate_filter = Gate::z_phi;
            } else {
                std::cerr << "--gate must be 'hadamard' or 'z'\n";
                return cli::kExitUsage;
            }
        }
        return cli::run_table(table_opts, std::cout, std::cerr);
    } catch (const DocumentParseError& e) {
        std::cerr << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const DegenerateTarget& e) {
        std::cerr << "degenerate target: " << e.what() << "\n";
        return cli::kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    }
}
