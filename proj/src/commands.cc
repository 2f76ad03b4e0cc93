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

#include "kerrgate/commands.h"

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "kerrgate/analytic.h"
#include "kerrgate/fock.h"
#include "kerrgate/wigner.h"

namespace kerrgate::cli {

namespace {

double grid_value(double lo, double hi, std::size_t steps, std::size_t i) {
    if (i + 1 == steps) {
        return hi;
    }
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void write_row(std::ostream &out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) {
            out << ',';
        }
        out << format_number(v);
        first = false;
    }
    out << '\n';
}

void write_kv(std::ostream &out, std::string_view key, double v) {
    out << key << ',' << format_number(v) << '\n';
}

void write_kv(std::ostream &out, std::string_view key, bool v) {
    out << key << ',' << (v ? "true" : "false") << '\n';
}

void write_report(std::ostream &out, std::string_view prefix, const gate::ResolutionReport &rep) {
    const std::string p(prefix);
    write_kv(out, p + "lambda_used", rep.lambda_used);
    write_kv(out, p + "mean_e", rep.mean_e);
    write_kv(out, p + "mean_o", rep.mean_o);
    write_kv(out, p + "sd_0", rep.sd_0);
    write_kv(out, p + "sd_theta", rep.sd_theta);
    write_kv(out, p + "sd_2theta", rep.sd_2theta);
    write_kv(out, p + "S_caption", rep.S_caption);
    write_kv(out, p + "S_bound", rep.S_bound);
    write_kv(out, p + "resolvable", rep.resolvable);
}

void preamble(std::ostream &out, std::string_view command) {
    out << "# kerrgate " << kVersion << '\n';
    out << "# command=" << command << '\n';
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

SweepKind parse_sweep_kind(std::string_view name) {
    if (name == "s") {
        return SweepKind::s;
    }
    if (name == "skewness") {
        return SweepKind::skewness;
    }
    if (name == "kurtosis") {
        return SweepKind::kurtosis;
    }
    throw std::invalid_argument("unknown sweep kind '" + std::string(name) + "'");
}

std::string_view sweep_kind_name(SweepKind k) {
    switch (k) {
        case SweepKind::s:
            return "s";
        case SweepKind::skewness:
            return "skewness";
        case SweepKind::kurtosis:
            return "kurtosis";
    }
    return "?";
}

SweepConfig SweepConfig::defaults(SweepKind kind) {
    SweepConfig cfg;
    if (kind != SweepKind::s) {
        cfg.r_min = 1.0;
        cfg.r_max = 50.0;
    }
    return cfg;
}

void SweepConfig::validate() const {
    for (double v : {r_min, r_max, theta_min, theta_max, phi, lambda_offset, xi}) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("sweep bounds must be finite");
        }
    }
    if (r_min < 0.0 || !(r_min < r_max)) {
        throw std::invalid_argument("sweep needs 0 <= r-min < r-max");
    }
    if (!(theta_min < theta_max)) {
        throw std::invalid_argument("sweep needs theta-min < theta-max");
    }
    if (r_steps < 2 || theta_steps < 2) {
        throw std::invalid_argument("sweep needs at least 2 steps per axis");
    }
}

void run_sweep(SweepKind kind, const SweepConfig &cfg, std::ostream &out) {
    cfg.validate();
    preamble(out, "sweep");
    out << "# kind=" << sweep_kind_name(kind) << '\n';
    out << "# r_min=" << format_number(cfg.r_min) << " r_max=" << format_number(cfg.r_max)
        << " r_steps=" << cfg.r_steps << '\n';
    out << "# theta_min=" << format_number(cfg.theta_min)
        << " theta_max=" << format_number(cfg.theta_max) << " theta_steps=" << cfg.theta_steps
        << '\n';
    out << "# lock_ratio=" << (cfg.lock_ratio ? "true" : "false")
        << " phi=" << format_number(cfg.phi) << " lambda_offset=" << format_number(cfg.lambda_offset)
        << " xi=" << format_number(cfg.xi) << '\n';
    switch (kind) {
        case SweepKind::s:
            out << "r,theta,lambda,mean_e,mean_o,sd_0,sd_theta,sd_2theta,S_caption,S_bound\n";
            break;
        case SweepKind::skewness:
            out << "r,theta,gamma1\n";
            break;
        case SweepKind::kurtosis:
            out << "r,theta,gamma2\n";
            break;
    }

    for (std::size_t i = 0; i < cfg.r_steps; i++) {
        const double r = grid_value(cfg.r_min, cfg.r_max, cfg.r_steps, i);
        for (std::size_t j = 0; j < cfg.theta_steps; j++) {
            const double theta = grid_value(cfg.theta_min, cfg.theta_max, cfg.theta_steps, j);
            gate::GateParams gp = cfg.lock_ratio
                                      ? gate::GateParams::locked(r, theta, gate::Scheme::identical)
                                      : gate::GateParams{r, theta, cfg.phi, gate::Scheme::identical, false};
            if (kind == SweepKind::s) {
                const gate::ResolutionReport rep = gate::resolution_stats(gp, cfg.lambda_offset);
                write_row(out, {r, theta, rep.lambda_used, rep.mean_e, rep.mean_o, rep.sd_0,
                                rep.sd_theta, rep.sd_2theta, rep.S_caption, rep.S_bound});
                continue;
            }
            gp.validate();
            const double phi_eff = gp.bus_phi();
            const double lambda = analytic::lambda_star(r, theta, phi_eff) + cfg.lambda_offset;
            const analytic::MomentSet m = analytic::central_stats({r, cfg.xi, phi_eff}, lambda);
            write_row(out, {r, theta, kind == SweepKind::skewness ? m.gamma1 : m.gamma2});
        }
    }
}

ProfileKind parse_profile_kind(std::string_view name) {
    if (name == "marginal") {
        return ProfileKind::marginal;
    }
    if (name == "wigner") {
        return ProfileKind::wigner;
    }
    throw std::invalid_argument("unknown profile kind '" + std::string(name) + "'");
}

void run_profile(const ProfileConfig &cfg, std::ostream &out) {
    const analytic::BusParams bp{cfg.r, cfg.xi, cfg.phi_eff};
    bp.validate();
    if (!std::isfinite(cfg.lambda)) {
        throw std::invalid_argument("lambda must be finite");
    }
    const bool wig = cfg.what == ProfileKind::wigner;
    preamble(out, "profile");
    out << "# what=" << (wig ? "wigner" : "marginal") << " r=" << format_number(cfg.r)
        << " xi=" << format_number(cfg.xi) << " phi_eff=" << format_number(cfg.phi_eff)
        << " lambda=" << format_number(cfg.lambda) << '\n';

    if (cfg.r > gate::kOracleMaxR) {
        if (!cfg.analytic_only) {
            throw std::domain_error("r exceeds the Fock-basis cap of 6; pass --analytic-only");
        }
        out << "# route=analytic\n";
        const analytic::MomentSet m = analytic::central_stats(bp, cfg.lambda);
        out << "mean,variance,gamma1,gamma2\n";
        write_row(out, {m.mean, m.variance, m.gamma1, m.gamma2});
        return;
    }

    const fock::QuadratureGrid xs(cfg.x_min, cfg.x_max, cfg.x_points);
    const fock::FockVector psi =
        fock::apply_spm(fock::coherent_fock(std::polar(cfg.r, cfg.xi), cfg.tail_tol), cfg.phi_eff);
    // The series route is written for the unrotated quadrature; rotating the
    // state by -lambda is the same as rotating the frame.
    const std::complex<double> alpha = std::polar(cfg.r, cfg.xi - cfg.lambda);
    const wigner::SeriesControl ctl{cfg.k_max};
    out << "# route=fock-oracle" << (cfg.series ? "+series" : "") << " x_min=" << format_number(cfg.x_min)
        << " x_max=" << format_number(cfg.x_max) << " x_points=" << cfg.x_points;
    if (wig) {
        out << " p_min=" << format_number(cfg.p_min) << " p_max=" << format_number(cfg.p_max)
            << " p_points=" << cfg.p_points;
    }
    if (cfg.series) {
        out << " k_max=" << cfg.k_max;
    }
    out << '\n';

    if (!wig) {
        const fock::Distribution d = fock::marginal_distribution(psi, cfg.lambda, xs);
        out << (cfg.series ? "x,density,density_series\n" : "x,density\n");
        for (std::size_t i = 0; i < xs.num_points(); i++) {
            const double x = xs.point(i);
            if (cfg.series) {
                write_row(out, {x, d.density[i], wigner::marginal_series(alpha, cfg.phi_eff, x, ctl).value});
            } else {
                write_row(out, {x, d.density[i]});
            }
        }
        return;
    }

    const fock::QuadratureGrid ps(cfg.p_min, cfg.p_max, cfg.p_points);
    const fock::FockVector rotated = fock::apply_linear_phase(psi, -cfg.lambda);
    out << (cfg.series ? "q,p,W,W_series\n" : "q,p,W\n");
    double w_min = 0.0;
    for (std::size_t i = 0; i < xs.num_points(); i++) {
        const double q = xs.point(i);
        for (std::size_t j = 0; j < ps.num_points(); j++) {
            const double p = ps.point(j);
            const double w = fock::wigner_numeric(rotated, q, p);
            w_min = std::min(w_min, w);
            if (cfg.series) {
                write_row(out, {q, p, w, wigner::wigner_series(alpha, cfg.phi_eff, q, p, ctl).value});
            } else {
                write_row(out, {q, p, w});
            }
        }
    }
    out << "# min_W=" << format_number(w_min) << (w_min < 0 ? " negative_region=true" : " negative_region=false")
        << '\n';
}

void run_gate(const GateConfig &cfg, std::ostream &out) {
    const gate::GateParams &gp = cfg.params;
    gp.validate();
    double norm = 0;
    for (const auto &c : cfg.coeffs) {
        norm += std::norm(c);
    }
    if (std::abs(norm - 1.0) > 1e-10) {
        throw std::invalid_argument("qubit coefficients are not normalized");
    }
    preamble(out, "gate");
    out << "# scheme=" << gate::scheme_name(gp.scheme) << " r=" << format_number(gp.r)
        << " theta=" << format_number(gp.theta) << " phi=" << format_number(gp.phi)
        << " locked_ratio=" << (gp.locked_ratio ? "true" : "false")
        << " lambda_offset=" << format_number(cfg.lambda_offset);
    if (cfg.zeta) {
        out << " zeta=" << format_number(*cfg.zeta);
    }
    out << '\n';
    out << "# coeffs=";
    for (std::size_t i = 0; i < cfg.coeffs.size(); i++) {
        out << (i ? ";" : "") << format_number(cfg.coeffs[i].real()) << ','
            << format_number(cfg.coeffs[i].imag());
    }
    out << '\n';
    out << "key,value\n";

    const gate::ResolutionReport rep = gate::resolution_stats(gp, cfg.lambda_offset);
    write_kv(out, "spm_cancelled", rep.spm_cancelled);
    write_kv(out, "bus_phi", gp.bus_phi());
    const double even_w = std::norm(cfg.coeffs[0]) + std::norm(cfg.coeffs[3]);
    write_kv(out, "even_weight", even_w);
    write_kv(out, "odd_weight", std::norm(cfg.coeffs[1]) + std::norm(cfg.coeffs[2]));
    write_report(out, "", rep);

    const auto approx = analytic::variance_triplet_approx(gp.r, gp.theta);
    write_kv(out, "var_approx_0", approx[0]);
    write_kv(out, "var_approx_theta", approx[1]);
    write_kv(out, "var_approx_2theta", approx[2]);

    if (cfg.zeta) {
        const gate::ResolutionReport sq = gate::squeezed_resolution(rep, {*cfg.zeta, 0.0});
        write_kv(out, "squeezed_zeta", *cfg.zeta);
        write_kv(out, "squeezed_S_caption", sq.S_caption);
        write_kv(out, "squeezed_resolvable", sq.resolvable);
        write_kv(out, "min_rescuing_zeta", gate::min_rescuing_zeta(rep));
    }
}

}  // namespace kerrgate::cli
