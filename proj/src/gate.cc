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

#include "kerrgate/gate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "kerrgate/analytic.h"

namespace kerrgate::gate {

namespace {

constexpr std::array<Label, 4> kLabels = {Label::b00, Label::b01, Label::b10, Label::b11};

// Bus phase picked up by each branch.
double branch_xi(Label l, const GateParams &gp) {
    const bool first = l == Label::b10 || l == Label::b11;
    const bool second = l == Label::b01 || l == Label::b11;
    const double second_sign = gp.scheme == Scheme::opposite ? -1.0 : 1.0;
    return (first ? gp.theta : 0.0) + (second ? second_sign * gp.theta : 0.0);
}

double squeezed_margin(const ResolutionReport &report, double zeta) {
    return std::abs(report.mean_e - report.mean_o) * std::exp(zeta) -
           (report.sd_theta + std::max(report.sd_0, report.sd_2theta));
}

}  // namespace

std::string_view scheme_name(Scheme s) {
    return s == Scheme::opposite ? "opposite" : "identical";
}

Scheme parse_scheme(std::string_view name) {
    if (name == "opposite") {
        return Scheme::opposite;
    }
    if (name == "identical") {
        return Scheme::identical;
    }
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

GateParams GateParams::locked(double r, double theta, Scheme scheme) {
    return GateParams{r, theta, theta / 2, scheme, true};
}

void GateParams::validate() const {
    if (!std::isfinite(r) || !std::isfinite(theta) || !std::isfinite(phi)) {
        throw std::invalid_argument("gate parameters must be finite");
    }
    if (r < 0.0) {
        throw std::invalid_argument("gate amplitude r must be non-negative");
    }
    if (locked_ratio && theta != 2 * phi) {
        throw std::invalid_argument("locked ratio requires theta == 2 phi");
    }
    if (theta != 0.0 && phi != 0.0 && std::signbit(theta) != std::signbit(phi)) {
        throw std::invalid_argument("theta and phi must share a sign");
    }
}

double GateParams::bus_phi() const {
    return scheme == Scheme::opposite ? 0.0 : 2 * phi;
}

std::string_view label_name(Label l) {
    switch (l) {
        case Label::b00:
            return "00";
        case Label::b01:
            return "01";
        case Label::b10:
            return "10";
        case Label::b11:
            return "11";
    }
    return "??";
}

bool is_even(Label l) {
    return l == Label::b00 || l == Label::b11;
}

GateState gate_evolve(const std::array<cplx, 4> &coeffs, const GateParams &gp, double tail_tol) {
    gp.validate();
    double norm = 0;
    for (const auto &c : coeffs) {
        norm += std::norm(c);
    }
    if (std::abs(norm - 1.0) > 1e-10) {
        throw std::invalid_argument("qubit coefficients are not normalized");
    }
    if (gp.r > kOracleMaxR) {
        throw std::domain_error("bus amplitude exceeds the Fock-basis cap; use analytic statistics");
    }
    const fock::FockVector bus = fock::coherent_fock(gp.r, tail_tol);
    GateState gs{gp.r, {}};
    for (std::size_t i = 0; i < kLabels.size(); i++) {
        if (coeffs[i] == cplx{}) {
            continue;
        }
        const double xi = branch_xi(kLabels[i], gp);
        const double phi = gp.bus_phi();
        gs.branches.push_back(
            Branch{kLabels[i], coeffs[i], xi, phi,
                   fock::apply_spm(fock::apply_linear_phase(bus, xi), phi)});
    }
    return gs;
}

ParityDistributions parity_distributions(const GateState &gs, double lambda,
                                         const fock::QuadratureGrid &grid) {
    ParityDistributions out;
    std::vector<double> even(grid.num_points(), 0.0);
    std::vector<double> odd(grid.num_points(), 0.0);
    for (const auto &b : gs.branches) {
        const double w = std::norm(b.coeff);
        const fock::Distribution d = fock::marginal_distribution(b.fock, lambda, grid);
        auto &acc = is_even(b.label) ? even : odd;
        (is_even(b.label) ? out.even_weight : out.odd_weight) += w;
        for (std::size_t i = 0; i < acc.size(); i++) {
            acc[i] += w * d.density[i];
        }
    }
    auto finish = [&](std::vector<double> &acc, double weight) -> std::optional<fock::Distribution> {
        if (weight <= 0.0) {
            return std::nullopt;
        }
        fock::Distribution d{grid, std::move(acc)};
        for (auto &v : d.density) {
            v /= weight;
        }
        d.captured = d.moment(0);
        d.window_warning = d.captured < 1.0 - 1e-6;
        return d;
    };
    out.even = finish(even, out.even_weight);
    out.odd = finish(odd, out.odd_weight);
    return out;
}

ResolutionReport resolution_stats(const GateParams &gp, double lambda_offset) {
    gp.validate();
    ResolutionReport rep;
    const double phi_eff = gp.bus_phi();
    rep.spm_cancelled = gp.scheme == Scheme::opposite;
    rep.lambda_used = (gp.scheme == Scheme::identical ? analytic::lambda_star(gp.r, gp.theta, phi_eff)
                                                      : 0.0) +
                      lambda_offset;

    // The even sector holds the two outer bus states, the odd sector the
    // middle one (its partner has the same statistics).
    const double xi_even_a = 0.0;
    const double xi_even_b = gp.scheme == Scheme::identical ? 2 * gp.theta : 0.0;
    const double xi_odd = gp.theta;
    const auto stats = [&](double xi) {
        return analytic::central_stats({gp.r, xi, phi_eff}, rep.lambda_used);
    };
    const analytic::MomentSet ea = stats(xi_even_a);
    const analytic::MomentSet eb = stats(xi_even_b);
    const analytic::MomentSet od = stats(xi_odd);

    rep.mean_e = ea.mean;
    rep.mean_o = od.mean;
    rep.sd_0 = std::sqrt(ea.variance);
    rep.sd_theta = std::sqrt(od.variance);
    rep.sd_2theta = std::sqrt(eb.variance);
    const double sep = std::abs(rep.mean_e - rep.mean_o);
    rep.S_caption = sep - (rep.sd_theta + std::max(rep.sd_0, rep.sd_2theta));
    const double sd_min = std::min({rep.sd_0, rep.sd_theta, rep.sd_2theta});
    rep.S_bound = sep * sep - 4 * sd_min * sd_min;
    rep.resolvable = rep.S_caption > 0;
    return rep;
}

double corrective_phase(const GateState &gs, Sector sector, double x, double lambda) {
    std::vector<const Branch *> members;
    for (const auto &b : gs.branches) {
        if (is_even(b.label) == (sector == Sector::even)) {
            members.push_back(&b);
        }
    }
    if (members.size() != 2) {
        throw std::domain_error("corrective phase needs exactly two branches in the sector");
    }
    const cplx first = fock::wavefunction(members[0]->fock, lambda, x);
    const cplx second = fock::wavefunction(members[1]->fock, lambda, x);
    if (std::abs(first) < 1e-12 || std::abs(second) < 1e-12) {
        throw std::domain_error("corrective phase is ill-defined where a branch amplitude vanishes");
    }
    return std::arg(second * std::conj(first));
}

ResolutionReport squeezed_resolution(const ResolutionReport &report, const SqueezeParams &sq) {
    ResolutionReport out = report;
    out.S_caption = squeezed_margin(report, sq.zeta);
    out.resolvable = out.S_caption > 0;
    return out;
}

double min_rescuing_zeta(const ResolutionReport &report) {
    const double sep = std::abs(report.mean_e - report.mean_o);
    if (sep == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double spread = report.sd_theta + std::max(report.sd_0, report.sd_2theta);
    double zeta = std::log(spread / sep);
    constexpr double kInf = std::numeric_limits<double>::infinity();
    // The algebraic threshold itself sits on the boundary; walk to the first
    // representable value strictly inside.
    while (!(squeezed_margin(report, zeta) > 0)) {
        zeta = std::nextafter(zeta, kInf);
    }
    while (squeezed_margin(report, std::nextafter(zeta, -kInf)) > 0) {
        zeta = std::nextafter(zeta, -kInf);
    }
    return zeta;
}

double rotated_squeezed_variance(const SqueezeParams &sq) {
    const double c = std::cos(sq.angle_offset);
    const double s = std::sin(sq.angle_offset);
    return c * c * std::exp(-2 * sq.zeta) + s * s * std::exp(2 * sq.zeta);
}

double breakeven_angle(double zeta) {
    return std::atan(std::exp(-zeta));
}

}  // namespace kerrgate::gate
