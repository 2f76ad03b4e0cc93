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

#include "kerrgate/wigner.h"

#include <cmath>
#include <numbers>

namespace kerrgate::wigner {

namespace {

constexpr cplx kI{0.0, 1.0};

double factorial(int n) {
    return std::tgamma(static_cast<double>(n) + 1.0);
}

void require_same_order(const Jet2 &a, const Jet2 &b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("Jet2 orders differ");
    }
}

// Pascal's triangle through row n, flattened as row * (n + 1) + k.
std::vector<double> pascal(std::size_t n) {
    std::vector<double> c((n + 1) * (n + 1), 0.0);
    for (std::size_t row = 0; row <= n; row++) {
        c[row * (n + 1)] = 1.0;
        for (std::size_t k = 1; k <= row; k++) {
            c[row * (n + 1) + k] = c[(row - 1) * (n + 1) + k - 1] + c[(row - 1) * (n + 1) + k];
        }
    }
    return c;
}

// Taylor coefficients in s of c1 e^s + c2 e^{2s}, through s^order.
std::vector<cplx> polynomial_of_exp(std::size_t order, cplx c1, cplx c2) {
    std::vector<cplx> g(order + 1);
    double inv_fact = 1.0;
    for (std::size_t i = 0; i <= order; i++) {
        g[i] = (c1 + c2 * std::pow(2.0, static_cast<double>(i))) * inv_fact;
        inv_fact /= static_cast<double>(i + 1);
    }
    return g;
}

// exp of a univariate truncated series: n f_n = sum_k k g_k f_{n-k}.
std::vector<cplx> exp_series(const std::vector<cplx> &g) {
    std::vector<cplx> f(g.size());
    f[0] = std::exp(g[0]);
    for (std::size_t n = 1; n < g.size(); n++) {
        cplx acc = 0;
        for (std::size_t k = 1; k <= n; k++) {
            acc += static_cast<double>(k) * g[k] * f[n - k];
        }
        f[n] = acc / static_cast<double>(n);
    }
    return f;
}

}  // namespace

Jet2::Jet2(std::size_t order) : order_(order), coeffs_((order + 1) * (order + 1)) {}

Jet2 Jet2::constant(std::size_t order, cplx value) {
    Jet2 j(order);
    j.at(0, 0) = value;
    return j;
}

Jet2 Jet2::exp_s(std::size_t order, cplx c) {
    Jet2 j(order);
    cplx term = c;
    for (std::size_t i = 0; i <= order; i++) {
        j.at(i, 0) = term;
        term /= static_cast<double>(i + 1);
    }
    return j;
}

Jet2 Jet2::exp_t(std::size_t order, cplx c) {
    Jet2 j(order);
    cplx term = c;
    for (std::size_t k = 0; k <= order; k++) {
        j.at(0, k) = term;
        term /= static_cast<double>(k + 1);
    }
    return j;
}

Jet2 &Jet2::operator+=(const Jet2 &o) {
    require_same_order(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); i++) {
        coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

Jet2 &Jet2::operator*=(cplx c) {
    for (auto &v : coeffs_) {
        v *= c;
    }
    return *this;
}

Jet2 operator*(const Jet2 &a, const Jet2 &b) {
    require_same_order(a, b);
    const std::size_t n = a.order();
    Jet2 out(n);
    for (std::size_t i1 = 0; i1 <= n; i1++) {
        for (std::size_t j1 = 0; j1 <= n; j1++) {
            const cplx x = a.at(i1, j1);
            if (x == cplx{}) {
                continue;
            }
            for (std::size_t i2 = 0; i1 + i2 <= n; i2++) {
                for (std::size_t j2 = 0; j1 + j2 <= n; j2++) {
                    out.at(i1 + i2, j1 + j2) += x * b.at(i2, j2);
                }
            }
        }
    }
    return out;
}

Jet2 Jet2::exp() const {
    const std::size_t n = order_;
    Jet2 f(n);
    f.at(0, 0) = std::exp(at(0, 0));
    // Row s^0: univariate exp in t.
    for (std::size_t j = 1; j <= n; j++) {
        cplx acc = 0;
        for (std::size_t b = 1; b <= j; b++) {
            acc += static_cast<double>(b) * at(0, b) * f.at(0, j - b);
        }
        f.at(0, j) = acc / static_cast<double>(j);
    }
    // i f_ij = sum_{a >= 1, b} a g_ab f_{i-a, j-b}.
    for (std::size_t i = 1; i <= n; i++) {
        for (std::size_t j = 0; j <= n; j++) {
            cplx acc = 0;
            for (std::size_t a = 1; a <= i; a++) {
                for (std::size_t b = 0; b <= j; b++) {
                    acc += static_cast<double>(a) * at(a, b) * f.at(i - a, j - b);
                }
            }
            f.at(i, j) = acc / static_cast<double>(i);
        }
    }
    return f;
}

cplx gen_G(cplx alpha, double x) {
    return std::exp(-0.5 * x * x + std::numbers::sqrt2 * alpha * x - 0.5 * alpha * alpha) /
           std::sqrt(std::sqrt(std::numbers::pi));
}

cplx gen_K(cplx beta, cplx gamma, double q, double p) {
    const cplx gc = std::conj(gamma);
    return std::exp(-p * p - q * q + kI * std::numbers::sqrt2 * (beta - gc) * p +
                    std::numbers::sqrt2 * (beta + gc) * q - beta * gc);
}

cplx gen_L(cplx beta, cplx gamma, double q) {
    const cplx gc = std::conj(gamma);
    const cplx d = beta - gc;
    return std::exp(-q * q + std::numbers::sqrt2 * (beta + gc) * q - 0.5 * d * d - beta * gc);
}

Jet2 kernel_jet(const Kernel &kernel, cplx alpha, std::size_t order) {
    // beta = alpha e^s and gamma* = alpha* e^t, so (beta d_beta)^m -> d_s^m.
    const Jet2 beta = Jet2::exp_s(order, alpha);
    const Jet2 gconj = Jet2::exp_t(order, std::conj(alpha));
    const double r2 = std::numbers::sqrt2;
    if (const auto *k = std::get_if<WignerKernel>(&kernel)) {
        const Jet2 exponent = Jet2::constant(order, -k->p * k->p - k->q * k->q) +
                              (kI * r2 * k->p + r2 * k->q) * beta +
                              (-kI * r2 * k->p + r2 * k->q) * gconj + cplx{-1.0} * (beta * gconj);
        return exponent.exp();
    }
    const auto &m = std::get<MarginalKernel>(kernel);
    // -(beta - g)^2 / 2 - beta g = -(beta^2 + g^2) / 2.
    const Jet2 exponent = Jet2::constant(order, -m.q * m.q) + r2 * m.q * beta + r2 * m.q * gconj +
                          cplx{-0.5} * (beta * beta) + cplx{-0.5} * (gconj * gconj);
    return exponent.exp();
}

SeriesValue apply_U_pair(const Kernel &kernel, cplx alpha, double phi,
                         const SeriesControl &ctl) {
    if (ctl.k_max < 0) {
        throw std::invalid_argument("SeriesControl.k_max must be non-negative");
    }
    if (!std::isfinite(phi) || !std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
        throw std::invalid_argument("apply_U_pair inputs must be finite");
    }
    const int k_max = phi == 0.0 ? 0 : ctl.k_max;
    const auto order = static_cast<std::size_t>(2 * k_max);
    const double r2 = std::numbers::sqrt2;
    const cplx ac = std::conj(alpha);

    // Both kernels have the form exp(c0 + A(beta) + B(gamma*) + c_x beta gamma*),
    // with A, B polynomials of degree <= 2. In s, t that is a product of a
    // univariate jet in s, one in t, and a function of s + t alone, so only
    // the (2k, 2l) coefficients needed below are ever assembled.
    cplx c0;
    cplx a1;
    cplx a2;
    cplx b1;
    cplx b2;
    cplx cx;
    if (const auto *k = std::get_if<WignerKernel>(&kernel)) {
        c0 = -k->p * k->p - k->q * k->q;
        a1 = kI * r2 * k->p + r2 * k->q;
        b1 = -kI * r2 * k->p + r2 * k->q;
        a2 = b2 = 0.0;
        cx = -1.0;
    } else {
        const auto &m = std::get<MarginalKernel>(kernel);
        c0 = -m.q * m.q;
        a1 = b1 = r2 * m.q;
        a2 = b2 = -0.5;
        cx = 0.0;
    }
    const std::vector<cplx> s_part = exp_series(
        polynomial_of_exp(order, alpha * a1, alpha * alpha * a2));
    const std::vector<cplx> t_part = exp_series(
        polynomial_of_exp(order, ac * b1, ac * ac * b2));
    // exp(cx |alpha|^2 e^u) with u = s + t, up to total order 2 * order.
    const std::vector<cplx> cross = exp_series(polynomial_of_exp(2 * order, cx * std::norm(alpha), 0.0));
    const cplx front = std::exp(c0);
    const std::size_t width = 2 * order + 1;
    const std::vector<double> binom = pascal(2 * order);

    auto coefficient = [&](std::size_t i, std::size_t j) {
        cplx acc = 0;
        for (std::size_t a = 0; a <= i; a++) {
            for (std::size_t b = 0; b <= j; b++) {
                const std::size_t u = (i - a) + (j - b);
                acc += s_part[a] * t_part[b] * cross[u] * binom[u * width + (i - a)];
            }
        }
        return front * acc;
    };

    SeriesValue out{cplx{}, 0.0};
    double outer_shell = 0.0;
    for (int k = 0; k <= k_max; k++) {
        const cplx wk = std::pow(cplx{0.0, -phi}, k) / factorial(k) * factorial(2 * k);
        for (int l = 0; l <= k_max; l++) {
            const cplx wl = std::pow(cplx{0.0, phi}, l) / factorial(l) * factorial(2 * l);
            const cplx term = wk * wl * coefficient(2 * k, 2 * l);
            out.value += term;
            if (k == k_max || l == k_max) {
                outer_shell += std::abs(term);
            }
        }
    }
    out.tail_estimate = k_max == 0 ? 0.0 : outer_shell;
    if (out.tail_estimate > ctl.tail_threshold) {
        throw SeriesNotConverged(out.tail_estimate);
    }
    return out;
}

SeriesResult wigner_series(cplx alpha, double phi, double q, double p,
                           const SeriesControl &ctl) {
    const SeriesValue v = apply_U_pair(WignerKernel{q, p}, alpha, phi, ctl);
    const double pref = std::exp(-std::norm(alpha)) / std::numbers::pi;
    return {pref * v.value.real(), pref * v.value.imag(), pref * v.tail_estimate};
}

SeriesResult marginal_series(cplx alpha, double phi, double q, const SeriesControl &ctl) {
    const SeriesValue v = apply_U_pair(MarginalKernel{q}, alpha, phi, ctl);
    const double pref = std::exp(-std::norm(alpha)) / std::sqrt(std::numbers::pi);
    return {pref * v.value.real(), pref * v.value.imag(), pref * v.tail_estimate};
}

}  // namespace kerrgate::wigner
