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

#include "kerrgate/analytic.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace kerrgate::analytic {

namespace {

using cplx = std::complex<double>;

// e^{-r^2 (1 - cos a)}, with 1 - cos a written as 2 sin^2(a/2).
double decay(double r, double a) {
    const double s = std::sin(0.5 * a);
    return std::exp(-2.0 * r * r * s * s);
}

// exp(z) - 1 without cancellation for small |z|.
cplx expm1(cplx z) {
    const double s = std::sin(0.5 * z.imag());
    return {std::expm1(z.real()) * std::cos(z.imag()) - 2.0 * s * s,
            std::exp(z.real()) * std::sin(z.imag())};
}

// Deviation from 1 of the normal-ordered ratio
//   <b^dag^p b^q> / (beta*^p beta^q) = exp(-i phi (q^2 - p^2) + r^2 (e^{-2 i phi (q - p)} - 1)),
// b = a e^{-i lambda}, beta = r e^{i (xi - lambda)}.
cplx normal_deviation(double r, double phi, int p, int q) {
    const double d = q - p;
    const double s = std::sin(phi * d);
    const cplx shift{-2.0 * s * s, -std::sin(2.0 * phi * d)};
    return expm1(cplx{0.0, -phi * (q * q - p * p)} + r * r * shift);
}

double binomial(int n, int k) {
    static constexpr int table[5][5] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
    return table[n][k];
}

}  // namespace

void BusParams::validate() const {
    if (!std::isfinite(r) || !std::isfinite(xi) || !std::isfinite(phi_eff)) {
        throw std::invalid_argument("BusParams fields must be finite");
    }
    if (r < 0.0) {
        throw std::invalid_argument("BusParams.r must be non-negative");
    }
}

double mean_x(const BusParams &bp, double lambda) {
    bp.validate();
    const double r = bp.r;
    const double phi = bp.phi_eff;
    return std::numbers::sqrt2 * r * decay(r, 2 * phi) *
           std::cos(r * r * std::sin(2 * phi) + phi - bp.xi + lambda);
}

double raw_moment(const BusParams &bp, double lambda, int k) {
    bp.validate();
    const double r = bp.r;
    const double r2 = r * r;
    const double phi = bp.phi_eff;
    const double xi = bp.xi;
    switch (k) {
        case 2:
            return 0.5 + r2 +
                   r2 * decay(r, 4 * phi) *
                       std::cos(2 * lambda - 2 * xi + 4 * phi + r2 * std::sin(4 * phi));
        case 3: {
            const double c = std::numbers::sqrt2 / 2;
            return c * r2 * r * decay(r, 6 * phi) *
                       std::cos(3 * lambda - 3 * xi + 9 * phi + r2 * std::sin(6 * phi)) +
                   3 * c * r2 * r * decay(r, 2 * phi) *
                       std::cos(lambda - xi + 3 * phi + r2 * std::sin(2 * phi)) +
                   3 * c * r * decay(r, 2 * phi) *
                       std::cos(lambda - xi + phi + r2 * std::sin(2 * phi));
        }
        case 4:
            return 0.5 * r2 * r2 * decay(r, 8 * phi) *
                       std::cos(4 * lambda - 4 * xi + 16 * phi + r2 * std::sin(8 * phi)) +
                   2 * r2 * r2 * decay(r, 4 * phi) *
                       std::cos(2 * lambda - 2 * xi + 8 * phi + r2 * std::sin(4 * phi)) +
                   3 * r2 * decay(r, 4 * phi) *
                       std::cos(2 * lambda - 2 * xi + 4 * phi + r2 * std::sin(4 * phi)) +
                   1.5 * r2 * r2 + 3 * r2 + 0.75;
        default:
            throw std::invalid_argument("raw_moment supports k = 2, 3, 4");
    }
}

MomentSet central_stats(const BusParams &bp, double lambda) {
    bp.validate();
    const double r = bp.r;
    const double phi = bp.phi_eff;

    // eps[p][q] = w_pq - 1 for the normal-ordered ratios, p + q <= 4.
    cplx eps[5][5] = {};
    for (int p = 0; p <= 4; p++) {
        for (int q = 0; p + q <= 4; q++) {
            eps[p][q] = normal_deviation(r, phi, p, q);
        }
    }
    const cplx u = 1.0 + eps[0][1];

    // N_pq = <(b - <b>)^dag^p (b - <b>)^q> / (beta*^p beta^q). Expanding the
    // shifted operators binomially, the constant parts of every w_ij sum to
    // (1 - u*)^p (1 - u)^q; what remains is linear in the small eps_ij.
    auto shifted = [&](int p, int q) {
        cplx acc = std::pow(-std::conj(eps[0][1]), p) * std::pow(-eps[0][1], q);
        for (int i = 0; i <= p; i++) {
            for (int j = 0; j <= q; j++) {
                acc += binomial(p, i) * binomial(q, j) * std::pow(-std::conj(u), p - i) *
                       std::pow(-u, q - j) * eps[i][j];
            }
        }
        return acc;
    };
    const cplx beta = std::polar(r, bp.xi - lambda);
    auto moment = [&](int p, int q) {
        return std::pow(std::conj(beta), p) * std::pow(beta, q) * shifted(p, q);
    };
    const cplx n02 = moment(0, 2);
    const cplx n11 = moment(1, 1);
    const cplx n03 = moment(0, 3);
    const cplx n12 = moment(1, 2);
    const cplx n04 = moment(0, 4);
    const cplx n13 = moment(1, 3);
    const cplx n22 = moment(2, 2);

    MomentSet m;
    m.mean = mean_x(bp, lambda);
    m.m2 = raw_moment(bp, lambda, 2);
    m.m3 = raw_moment(bp, lambda, 3);
    m.m4 = raw_moment(bp, lambda, 4);
    // x - <x> = (c + c^dag) / sqrt(2), c = b - <b>, with <c> = 0.
    m.variance = 0.5 + n02.real() + n11.real();
    m.mu3 = (2 * n03.real() + 6 * n12.real()) / (2 * std::numbers::sqrt2);
    m.mu4 = (2 * n04.real() + 8 * n13.real() + 6 * n22.real() + 12 * n02.real() +
             12 * n11.real() + 3) /
            4;
    m.gamma1 = m.mu3 / std::pow(m.variance, 1.5);
    m.gamma2 = m.mu4 / (m.variance * m.variance) - 3;
    return m;
}

double lambda_star(double r, double theta, double phi_eff) {
    if (!(r >= 0.0)) {
        throw std::invalid_argument("lambda_star requires r >= 0");
    }
    return theta - r * r * std::sin(2 * phi_eff) - phi_eff;
}

std::array<double, 3> variance_triplet_approx(double r, double theta) {
    const double r2 = r * r;
    const double t2 = theta * theta;
    const double t3 = t2 * theta;
    const double base = 0.5 + r2;
    const double far = r2 * std::exp(-8 * r2 * t2);
    const double near = 2 * r2 * std::exp(-4 * r2 * t2);
    const double c2 = std::cos(theta) * std::cos(theta);
    return {
        base + far * std::cos(4 * theta - 8 * r2 * t3) - near * c2,
        base + far * std::cos(2 * theta - 8 * r2 * t3) - near,
        base + far * std::cos(8 * r2 * t3) - near * c2,
    };
}

}  // namespace kerrgate::analytic
