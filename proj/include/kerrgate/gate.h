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

#ifndef KERRGATE_GATE_H
#define KERRGATE_GATE_H

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "kerrgate/fock.h"

/// Weak-nonlinearity parity gate on a coherent bus.
///
/// Two qubits each imprint a conditional phase theta on the bus (cross-phase
/// modulation) while the bus also picks up self-phase modulation phi per
/// medium. In the opposite scheme the second medium has the reversed sign, so
/// the bus phases are {0, -theta, +theta, 0} and the Kerr terms cancel. In the
/// identical scheme both media are the same: bus phases {0, theta, theta,
/// 2 theta} and the bus carries 2 phi of self-phase modulation.
namespace kerrgate::gate {

using cplx = std::complex<double>;

/// Largest bus amplitude materialized in the Fock basis.
inline constexpr double kOracleMaxR = 6.0;

enum class Scheme { opposite, identical };

std::string_view scheme_name(Scheme s);
/// Throws std::invalid_argument for anything but "opposite" / "identical".
Scheme parse_scheme(std::string_view name);

struct GateParams {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    Scheme scheme = Scheme::identical;
    /// Enforces theta == 2 phi.
    bool locked_ratio = false;

    /// Locked-ratio parameters with phi = theta / 2.
    static GateParams locked(double r, double theta, Scheme scheme);

    /// Throws std::invalid_argument on negative r, non-finite values, a broken
    /// theta = 2 phi lock, or theta and phi of opposite sign.
    void validate() const;

    /// Self-phase modulation accumulated by the bus: 0 (opposite) or 2 phi.
    double bus_phi() const;
};

enum class Label { b00, b01, b10, b11 };
std::string_view label_name(Label l);
bool is_even(Label l);

struct Branch {
    Label label;
    cplx coeff;
    double bus_xi;
    double bus_phi;
    fock::FockVector fock;
};

/// Branches with nonzero coefficient, in label order.
struct GateState {
    double r = 0.0;
    std::vector<Branch> branches;
};

struct ResolutionReport {
    double lambda_used = 0.0;
    double mean_e = 0.0;
    double mean_o = 0.0;
    double sd_0 = 0.0;
    double sd_theta = 0.0;
    double sd_2theta = 0.0;
    /// |mean_e - mean_o| - (sd_theta + max(sd_0, sd_2theta)).
    double S_caption = 0.0;
    /// |mean_e - mean_o|^2 - 4 min(sd_0, sd_theta, sd_2theta)^2.
    double S_bound = 0.0;
    bool resolvable = false;
    /// True when the scheme cancels self-phase modulation on the bus.
    bool spm_cancelled = false;
};

struct SqueezeParams {
    double zeta = 0.0;
    /// Angle between the squeezed quadrature and the measured one.
    double angle_offset = 0.0;
};

struct ParityDistributions {
    /// Empty when the sector has zero weight.
    std::optional<fock::Distribution> even;
    std::optional<fock::Distribution> odd;
    double even_weight = 0.0;
    double odd_weight = 0.0;
};

enum class Sector { even, odd };

/// Applies both conditional phase shifts (and their Kerr terms) to
/// (c00, c01, c10, c11) |r>. Coefficients must be normalized to 1e-10;
/// r above kOracleMaxR throws std::domain_error.
GateState gate_evolve(const std::array<cplx, 4> &coeffs, const GateParams &gp, double tail_tol);

/// Quadrature-outcome densities conditioned on each parity sector. Each is
/// the weighted mixture of its branch marginals, renormalized by the sector
/// weight.
ParityDistributions parity_distributions(const GateState &gs, double lambda,
                                         const fock::QuadratureGrid &grid);

/// Even/odd separation against the spread of the three bus states, using the
/// exact analytic moments. The identical scheme measures at
/// lambda_star(r, theta, 2 phi); the opposite scheme at lambda = 0. Both add
/// `lambda_offset`.
ResolutionReport resolution_stats(const GateParams &gp, double lambda_offset = 0.0);

/// Outcome-dependent relative phase 2 theta(x) of the sector's second branch
/// with respect to its first (label order: 00 before 11, 01 before 10),
/// arg <x_lambda|second> - arg <x_lambda|first>, wrapped to (-pi, pi].
/// Throws std::domain_error unless the sector holds exactly two branches and
/// both amplitudes exceed 1e-12 in modulus at x.
double corrective_phase(const GateState &gs, Sector sector, double x, double lambda);

/// Idealized squeezing: mean separation is weighted by e^{zeta} against the
/// unchanged spreads. Only S_caption and resolvable change.
ResolutionReport squeezed_resolution(const ResolutionReport &report, const SqueezeParams &sq);

/// Smallest double zeta for which squeezed_resolution reports resolvable;
/// +infinity when the means coincide.
double min_rescuing_zeta(const ResolutionReport &report);

/// cos^2(offset) e^{-2 zeta} + sin^2(offset) e^{2 zeta}.
double rotated_squeezed_variance(const SqueezeParams &sq);

/// arctan(e^{-zeta}): the offset beyond which squeezing stops helping.
double breakeven_angle(double zeta);

}  // namespace kerrgate::gate

#endif  // KERRGATE_GATE_H
