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

#ifndef KERRGATE_ANALYTIC_H
#define KERRGATE_ANALYTIC_H

#include <array>

/// Closed-form quadrature statistics of a Kerr-modulated coherent state.
///
/// The state is exp(-i phi_eff n^2)|r e^{i xi}> and the observable is the
/// rotated quadrature x_lambda. `phi_eff` is the total self-phase modulation
/// the bus has accumulated; a gate in which the bus crosses two media of
/// strength phi passes phi_eff = 2 phi. Nothing in this namespace doubles or
/// halves phi_eff on the caller's behalf.
namespace kerrgate::analytic {

struct BusParams {
    double r = 0.0;
    double xi = 0.0;
    double phi_eff = 0.0;

    /// Throws std::invalid_argument unless r >= 0 and every field is finite.
    void validate() const;
};

struct MomentSet {
    double mean = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;
    double variance = 0.0;
    double mu3 = 0.0;
    double mu4 = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
};

/// <x_lambda> = sqrt(2) r e^{-r^2 (1 - cos 2 phi_eff)} cos(r^2 sin 2 phi_eff + phi_eff - xi + lambda).
double mean_x(const BusParams &bp, double lambda);

/// <(x_lambda)^k> for k = 2, 3, 4. Throws std::invalid_argument otherwise.
double raw_moment(const BusParams &bp, double lambda, int k);

/// Mean, raw and central moments, skewness and excess kurtosis.
///
/// Central moments are evaluated about the mean directly (in terms of the
/// deviations exp(...) - 1 of each normal-ordered term from its coherent
/// value), so they stay exact at phi_eff = 0 for any r instead of emerging
/// from cancellation between raw moments of size r^4.
MomentSet central_stats(const BusParams &bp, double lambda);

/// Quadrature angle at which the bus states r and r e^{2 i theta}, both
/// carrying phi_eff, have equal means: theta - r^2 sin(2 phi_eff) - phi_eff.
double lambda_star(double r, double theta, double phi_eff);

/// Small-angle variances for bus phases 0, theta and 2 theta with
/// phi_eff = theta (two passes at theta = 2 phi). Comparison only; every
/// decision in the library uses central_stats.
std::array<double, 3> variance_triplet_approx(double r, double theta);

}  // namespace kerrgate::analytic

#endif  // KERRGATE_ANALYTIC_H
