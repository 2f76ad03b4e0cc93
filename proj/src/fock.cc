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

#include "kerrgate/fock.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kerrgate::fock {

namespace {

void require_finite(double v, const char *what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

// Poisson weights are generated until this far below the tolerance so the
// unenumerated remainder never matters.
constexpr double kRemainderFactor = 1e-6;

// Applies x_lambda to v in place of out; entries above out.size() are dropped.
void apply_quadrature(std::span<const cplx> v, double lambda, std::span<cplx> out) {
    const cplx down = std::polar(1.0, -lambda) / std::numbers::sqrt2;
    const cplx up = std::polar(1.0, lambda) / std::numbers::sqrt2;
    const std::size_t d = out.size();
    for (std::size_t n = 0; n < d; n++) {
        cplx acc = 0;
        if (n + 1 < v.size()) {
            acc += down * std::sqrt(static_cast<double>(n + 1)) * v[n + 1];
        }
        if (n >= 1 && n - 1 < v.size()) {
            acc += up * std::sqrt(static_cast<double>(n)) * v[n - 1];
        }
        out[n] = acc;
    }
}

// Rotated amplitudes plus scratch space for repeated wavefunction evaluation.
class WaveEvaluator {
 public:
    WaveEvaluator(const FockVector &psi, double lambda)
        : rotated_(psi.dim()), basis_(psi.dim()) {
        for (std::size_t n = 0; n < psi.dim(); n++) {
            rotated_[n] = psi[n] * std::polar(1.0, -lambda * static_cast<double>(n));
        }
    }

    cplx operator()(double x) {
        hermite_functions(x, basis_);
        cplx acc = 0;
        for (std::size_t n = 0; n < rotated_.size(); n++) {
            acc += rotated_[n] * basis_[n];
        }
        return acc;
    }

    // Beyond this |x| every basis function in use is negligible.
    double support_radius() const {
        return std::sqrt(2.0 * static_cast<double>(rotated_.size()) + 1.0) + 8.0;
    }

 private:
    std::vector<cplx> rotated_;
    std::vector<double> basis_;
};

}  // namespace

FockVector::FockVector(std::vector<cplx> amplitudes, double tail_bound)
    : amplitudes_(std::move(amplitudes)), tail_bound_(tail_bound) {
    if (amplitudes_.empty()) {
        throw std::invalid_argument("FockVector needs at least one level");
    }
    if (!(tail_bound_ >= 0.0 && tail_bound_ < 1.0)) {
        throw std::invalid_argument("tail_bound must lie in [0, 1)");
    }
}

double FockVector::norm_squared() const {
    double s = 0;
    for (const auto &a : amplitudes_) {
        s += std::norm(a);
    }
    return s;
}

double FockVector::mean_photon_number() const {
    double s = 0;
    for (std::size_t n = 0; n < amplitudes_.size(); n++) {
        s += static_cast<double>(n) * std::norm(amplitudes_[n]);
    }
    return s;
}

QuadratureGrid::QuadratureGrid(double x_min, double x_max, std::size_t num_points)
    : x_min_(x_min), x_max_(x_max), num_points_(num_points) {
    require_finite(x_min, "x_min");
    require_finite(x_max, "x_max");
    if (!(x_min < x_max)) {
        throw std::invalid_argument("QuadratureGrid requires x_min < x_max");
    }
    if (num_points < 2) {
        throw std::invalid_argument("QuadratureGrid requires at least 2 points");
    }
}

double QuadratureGrid::point(std::size_t i) const {
    if (i + 1 == num_points_) {
        return x_max_;
    }
    return x_min_ + step() * static_cast<double>(i);
}

double Distribution::moment(int k) const {
    const double h = grid.step();
    double s = 0;
    for (std::size_t i = 0; i < density.size(); i++) {
        const double w = (i == 0 || i + 1 == density.size()) ? 0.5 : 1.0;
        s += w * std::pow(grid.point(i), k) * density[i];
    }
    return s * h;
}

FockVector coherent_fock(cplx alpha, double tail_tol) {
    require_finite(alpha.real(), "alpha");
    require_finite(alpha.imag(), "alpha");
    if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
        throw std::invalid_argument("tail_tol must lie in (0, 1)");
    }
    const double mean = std::norm(alpha);
    if (mean == 0.0) {
        std::vector<cplx> amps(1 + kHeadRoom, cplx{0.0, 0.0});
        amps[0] = 1.0;
        return FockVector(std::move(amps), 0.0);
    }

    // Poisson weights p_n, generated past the mean until the geometric bound
    // on everything not yet enumerated is negligible.
    const double log_mean = std::log(mean);
    std::vector<double> weights;
    double remainder = 0;
    for (std::size_t n = 0;; n++) {
        const double nd = static_cast<double>(n);
        const double p = std::exp(-mean + nd * log_mean - std::lgamma(nd + 1.0));
        weights.push_back(p);
        // p_{n+1} = p mean / (n + 1); later ratios are at most mean / (n + 2).
        const double ratio = mean / (nd + 2.0);
        if (nd > mean && ratio < 1.0) {
            remainder = p * (mean / (nd + 1.0)) / (1.0 - ratio);
            if (remainder < kRemainderFactor * tail_tol) {
                break;
            }
        }
    }

    // tail[n] = sum_{k >= n} p_k, accumulated from the small end.
    std::vector<double> tail(weights.size() + 1);
    tail[weights.size()] = remainder;
    for (std::size_t n = weights.size(); n-- > 0;) {
        tail[n] = tail[n + 1] + weights[n];
    }
    std::size_t cutoff = 1;
    while (cutoff < tail.size() - 1 && tail[cutoff] >= tail_tol) {
        cutoff++;
    }
    const std::size_t dim = cutoff + kHeadRoom;
    const double tail_bound = dim < tail.size() ? tail[dim] : remainder;

    std::vector<cplx> amps(dim);
    if (mean < 1000.0) {
        amps[0] = std::exp(-0.5 * mean);
        for (std::size_t n = 1; n < dim; n++) {
            amps[n] = amps[n - 1] * alpha / std::sqrt(static_cast<double>(n));
        }
    } else {
        // exp(-|alpha|^2 / 2) underflows; build magnitudes in log space.
        const double phase = std::arg(alpha);
        for (std::size_t n = 0; n < dim; n++) {
            const double nd = static_cast<double>(n);
            const double log_mag = 0.5 * (-mean + nd * log_mean - std::lgamma(nd + 1.0));
            amps[n] = std::polar(std::exp(log_mag), nd * phase);
        }
    }
    return FockVector(std::move(amps), tail_bound);
}

FockVector apply_spm(const FockVector &psi, double phi) {
    require_finite(phi, "phi");
    std::vector<cplx> out(psi.amplitudes().begin(), psi.amplitudes().end());
    for (std::size_t n = 0; n < out.size(); n++) {
        const double nd = static_cast<double>(n);
        out[n] *= std::polar(1.0, -phi * nd * nd);
    }
    return FockVector(std::move(out), psi.tail_bound());
}

FockVector apply_linear_phase(const FockVector &psi, double theta) {
    require_finite(theta, "theta");
    std::vector<cplx> out(psi.amplitudes().begin(), psi.amplitudes().end());
    for (std::size_t n = 0; n < out.size(); n++) {
        out[n] *= std::polar(1.0, theta * static_cast<double>(n));
    }
    return FockVector(std::move(out), psi.tail_bound());
}

double quadrature_moment(const FockVector &psi, double lambda, int k) {
    if (k < 1) {
        throw std::invalid_argument("quadrature_moment needs k >= 1");
    }
    require_finite(lambda, "lambda");
    const std::size_t work = psi.dim() + static_cast<std::size_t>(k);
    std::vector<cplx> base(work, cplx{0.0, 0.0});
    std::copy(psi.amplitudes().begin(), psi.amplitudes().end(), base.begin());

    // <psi| X^k |psi> = <X^{k/2} psi | X^{k - k/2} psi>, which keeps even
    // moments manifestly real.
    std::vector<cplx> left = base;
    std::vector<cplx> scratch(work);
    const int half = k / 2;
    for (int i = 0; i < half; i++) {
        apply_quadrature(left, lambda, scratch);
        left.swap(scratch);
    }
    std::vector<cplx> right = left;
    if (k % 2 == 1) {
        apply_quadrature(left, lambda, scratch);
        right = scratch;
    }
    cplx acc = 0;
    for (std::size_t n = 0; n < work; n++) {
        acc += std::conj(left[n]) * right[n];
    }
    if (std::abs(acc.imag()) > 1e-10 * std::max(1.0, std::abs(acc.real()))) {
        throw std::runtime_error("quadrature_moment: expectation value is not real");
    }
    return acc.real();
}

void hermite_functions(double x, std::span<double> out) {
    if (out.empty()) {
        return;
    }
    out[0] = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
    if (out.size() > 1) {
        out[1] = std::numbers::sqrt2 * x * out[0];
    }
    for (std::size_t n = 1; n + 1 < out.size(); n++) {
        const double nd = static_cast<double>(n);
        out[n + 1] = x * std::sqrt(2.0 / (nd + 1.0)) * out[n] - std::sqrt(nd / (nd + 1.0)) * out[n - 1];
    }
}

cplx wavefunction(const FockVector &psi, double lambda, double x) {
    require_finite(lambda, "lambda");
    require_finite(x, "x");
    WaveEvaluator eval(psi, lambda);
    return eval(x);
}

Distribution marginal_distribution(const FockVector &psi, double lambda,
                                   const QuadratureGrid &grid) {
    require_finite(lambda, "lambda");
    WaveEvaluator eval(psi, lambda);
    Distribution dist{grid, std::vector<double>(grid.num_points())};
    for (std::size_t i = 0; i < grid.num_points(); i++) {
        dist.density[i] = std::norm(eval(grid.point(i)));
    }
    dist.captured = dist.moment(0);
    dist.window_warning = dist.captured < 1.0 - 10.0 * psi.tail_bound() - 1e-12;
    return dist;
}

double wigner_numeric(const FockVector &psi, double q, double p) {
    require_finite(q, "q");
    require_finite(p, "p");
    WaveEvaluator eval(psi, 0.0);
    const double half_width = eval.support_radius();

    // The integrand f(x) satisfies f(-x) = conj(f(x)), so only x >= 0 is
    // sampled and the real part doubled.
    auto integrand = [&](double x) {
        return (std::polar(1.0, -2.0 * p * x) * eval(q - x) * std::conj(eval(q + x))).real();
    };

    std::size_t intervals = 64;
    double h = half_width / static_cast<double>(intervals);
    double sum = 0.5 * integrand(0.0);
    for (std::size_t j = 1; j <= intervals; j++) {
        sum += integrand(h * static_cast<double>(j));
    }
    double estimate = 2.0 * h * sum / std::numbers::pi;
    for (int level = 0; level < 14; level++) {
        // Halve the step: only the new midpoints need evaluating.
        double mid = 0;
        for (std::size_t j = 0; j < intervals; j++) {
            mid += integrand(h * (static_cast<double>(j) + 0.5));
        }
        sum += mid;
        intervals *= 2;
        h *= 0.5;
        const double refined = 2.0 * h * sum / std::numbers::pi;
        const double change = std::abs(refined - estimate);
        estimate = refined;
        if (level >= 1 && change < 1e-10) {
            break;
        }
    }
    return estimate;
}

cplx overlap(const FockVector &psi1, const FockVector &psi2) {
    const std::size_t n = std::min(psi1.dim(), psi2.dim());
    cplx acc = 0;
    for (std::size_t i = 0; i < n; i++) {
        acc += std::conj(psi1[i]) * psi2[i];
    }
    return acc;
}

}  // namespace kerrgate::fock
