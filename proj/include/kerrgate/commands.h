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

#ifndef KERRGATE_COMMANDS_H
#define KERRGATE_COMMANDS_H

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "kerrgate/gate.h"

// CSV-producing front ends behind the `kerrgate` tool. Every output starts
// with `#` metadata lines (tool version and a full parameter echo) followed by
// a header row; numbers use 17 significant digits.
namespace kerrgate::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum class SweepKind { s, skewness, kurtosis };
SweepKind parse_sweep_kind(std::string_view name);
std::string_view sweep_kind_name(SweepKind k);

struct SweepConfig {
    double r_min = 0.2;
    double r_max = 10.0;
    std::size_t r_steps = 50;
    double theta_min = 0.002;
    double theta_max = 0.1;
    std::size_t theta_steps = 50;
    /// theta = 2 phi at every grid point.
    bool lock_ratio = true;
    /// Per-medium self-phase modulation when the ratio is not locked.
    double phi = 0.0;
    double lambda_offset = 0.0;
    /// Bus phase at which skewness/kurtosis are evaluated.
    double xi = 0.0;
    std::string output_path;

    /// Default grid for each kind: r up to 10 for s, up to 50 otherwise.
    static SweepConfig defaults(SweepKind kind);
    void validate() const;
};

/// One row per (r, theta), r-major with theta ascending.
void run_sweep(SweepKind kind, const SweepConfig &cfg, std::ostream &out);

enum class ProfileKind { marginal, wigner };
ProfileKind parse_profile_kind(std::string_view name);

struct ProfileConfig {
    ProfileKind what = ProfileKind::marginal;
    double r = 2.0;
    double xi = 0.0;
    double phi_eff = 0.0;
    double lambda = 0.0;
    double x_min = -6.0;
    double x_max = 6.0;
    std::size_t x_points = 201;
    double p_min = -6.0;
    double p_max = 6.0;
    std::size_t p_points = 101;
    /// Adds a generating-function column next to the Fock-basis one.
    bool series = false;
    int k_max = 12;
    /// Above the Fock cap, emit analytic moments instead of failing.
    bool analytic_only = false;
    double tail_tol = 1e-14;
    std::string output_path;
};

void run_profile(const ProfileConfig &cfg, std::ostream &out);

struct GateConfig {
    gate::GateParams params;
    std::array<std::complex<double>, 4> coeffs = {0.5, 0.5, 0.5, 0.5};
    std::optional<double> zeta;
    double lambda_offset = 0.0;
    std::string output_path;
};

/// key,value rows: resolution report, small-angle variance triplet, and the
/// squeezed report plus minimal rescuing zeta when zeta is given.
void run_gate(const GateConfig &cfg, std::ostream &out);

/// 17-significant-digit scientific formatting.
std::string format_number(double v);

}  // namespace kerrgate::cli

#endif  // KERRGATE_COMMANDS_H
