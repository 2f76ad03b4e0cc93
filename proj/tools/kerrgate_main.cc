// Copyright 2026 The kerrgate Authors
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

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kerrgate/commands.h"

namespace {

using namespace kerrgate;

void emit(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    f << text;
    if (!f) {
        throw std::runtime_error("failed writing output file '" + path + "'");
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Kerr-modulated coherent bus statistics and parity-gate resolution"};
    app.set_version_flag("--version", std::string(cli::kVersion));
    app.require_subcommand(1);

    // sweep
    auto *sweep = app.add_subcommand("sweep", "Grid sweep over (r, theta) written as CSV");
    std::string kind_name = "s";
    cli::SweepConfig sc;
    bool no_lock = false;
    sweep->add_option("--kind", kind_name, "s | skewness | kurtosis")->capture_default_str();
    auto *o_rmin = sweep->add_option("--r-min", sc.r_min);
    auto *o_rmax = sweep->add_option("--r-max", sc.r_max);
    sweep->add_option("--r-steps", sc.r_steps)->capture_default_str();
    sweep->add_option("--theta-min", sc.theta_min)->capture_default_str();
    sweep->add_option("--theta-max", sc.theta_max)->capture_default_str();
    sweep->add_option("--theta-steps", sc.theta_steps)->capture_default_str();
    sweep->add_flag("--no-lock-ratio", no_lock, "Use --phi instead of theta = 2 phi");
    sweep->add_option("--phi", sc.phi, "Per-medium SPM when the ratio is unlocked");
    sweep->add_option("--lambda-offset", sc.lambda_offset, "Added to the optimal lambda");
    sweep->add_option("--xi", sc.xi, "Bus phase for skewness/kurtosis maps");
    sweep->add_option("--output", sc.output_path, "CSV path (stdout if omitted)");

    // profile
    auto *profile = app.add_subcommand("profile", "Marginal or Wigner function of one bus state");
    std::string what_name = "marginal";
    cli::ProfileConfig pc;
    profile->add_option("--what", what_name, "marginal | wigner")->capture_default_str();
    profile->add_option("--r", pc.r)->capture_default_str();
    profile->add_option("--xi", pc.xi)->capture_default_str();
    profile->add_option("--phi-eff", pc.phi_eff, "Total accumulated SPM")->capture_default_str();
    profile->add_option("--lambda", pc.lambda)->capture_default_str();
    profile->add_option("--x-min", pc.x_min)->capture_default_str();
    profile->add_option("--x-max", pc.x_max)->capture_default_str();
    profile->add_option("--x-points", pc.x_points)->capture_default_str();
    profile->add_option("--p-min", pc.p_min)->capture_default_str();
    profile->add_option("--p-max", pc.p_max)->capture_default_str();
    profile->add_option("--p-points", pc.p_points)->capture_default_str();
    profile->add_flag("--series", pc.series, "Add the generating-function route (small phi only)");
    profile->add_option("--k-max", pc.k_max)->capture_default_str();
    profile->add_flag("--analytic-only", pc.analytic_only, "Moments only when r exceeds the Fock cap");
    profile->add_option("--output", pc.output_path);

    // gate
    auto *gate_cmd = app.add_subcommand("gate", "Resolution report for one gate configuration");
    cli::GateConfig gc;
    std::string scheme_name = "identical";
    bool lock = false;
    std::vector<double> coeffs;
    double zeta = 0.0;
    gate_cmd->add_option("--r", gc.params.r)->required();
    gate_cmd->add_option("--theta", gc.params.theta)->required();
    auto *o_phi = gate_cmd->add_option("--phi", gc.params.phi);
    gate_cmd->add_option("--scheme", scheme_name, "opposite | identical")->capture_default_str();
    gate_cmd->add_flag("--lock-ratio", lock, "Set phi = theta / 2");
    gate_cmd->add_option("--coeffs", coeffs, "c00 c01 c10 c11 as 8 reals (re im ...)")->expected(8);
    auto *o_zeta = gate_cmd->add_option("--zeta", zeta, "Squeezing parameter");
    gate_cmd->add_option("--lambda-offset", gc.lambda_offset);
    gate_cmd->add_option("--output", gc.output_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        std::ostringstream buf;
        std::string path;
        if (*sweep) {
            const cli::SweepKind kind = cli::parse_sweep_kind(kind_name);
            cli::SweepConfig cfg = cli::SweepConfig::defaults(kind);
            cfg.r_min = o_rmin->count() ? sc.r_min : cfg.r_min;
            cfg.r_max = o_rmax->count() ? sc.r_max : cfg.r_max;
            cfg.r_steps = sc.r_steps;
            cfg.theta_min = sc.theta_min;
            cfg.theta_max = sc.theta_max;
            cfg.theta_steps = sc.theta_steps;
            cfg.lock_ratio = !no_lock;
            cfg.phi = sc.phi;
            cfg.lambda_offset = sc.lambda_offset;
            cfg.xi = sc.xi;
            cli::run_sweep(kind, cfg, buf);
            path = sc.output_path;
        } else if (*profile) {
            pc.what = cli::parse_profile_kind(what_name);
            cli::run_profile(pc, buf);
            path = pc.output_path;
        } else {
            gc.params.scheme = gate::parse_scheme(scheme_name);
            if (lock) {
                if (o_phi->count()) {
                    throw std::invalid_argument("--phi conflicts with --lock-ratio");
                }
                gc.params = gate::GateParams::locked(gc.params.r, gc.params.theta, gc.params.scheme);
            }
            if (!coeffs.empty()) {
                for (std::size_t i = 0; i < 4; i++) {
                    gc.coeffs[i] = {coeffs[2 * i], coeffs[2 * i + 1]};
                }
            }
            if (o_zeta->count()) {
                gc.zeta = zeta;
            }
            cli::run_gate(gc, buf);
            path = gc.output_path;
        }
        emit(path, buf.str());
    } catch (const std::exception &e) {
        std::cerr << "kerrgate: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
