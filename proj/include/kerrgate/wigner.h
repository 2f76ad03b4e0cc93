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

#ifndef KERRGATE_WIGNER_H
#define KERRGATE_WIGNER_H

#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <variant>
#include <vector>

/// Generating-function route to the Wigner function and quadrature marginal
/// of exp(-i phi n^2)|alpha>.
///
/// The Kerr factor acts on the Gaussian kernels G, K, L as the differential
/// operator U_alpha(phi) = exp[-i phi (alpha d/dalpha)^2]. With the
/// substitution beta = alpha e^s, gamma* = alpha* e^t the Euler operators
/// become plain derivatives in s and t, which are read off a bivariate
/// truncated Taylor expansion (Jet2) of the kernel. The phi power series is
/// only asymptotic in |alpha|, so this route is meant for small
/// |phi| (1 + |alpha|^2)^2; the Fock-basis functions in `fock` are the
/// general-purpose route.
namespace kerrgate::wigner {

using cplx = std::complex<double>;

/// Truncated Taylor expansion sum c[i][j] s^i t^j, 0 <= i, j <= order.
class Jet2 {
 public:
    explicit Jet2(std::size_t order);

    static Jet2 constant(std::size_t order, cplx value);
    /// c * e^s.
    static Jet2 exp_s(std::size_t order, cplx c);
    /// c * e^t.
    static Jet2 exp_t(std::size_t order, cplx c);

    std::size_t order() const { return order_; }
    cplx &at(std::size_t i, std::size_t j) { return coeffs_[i * (order_ + 1) + j]; }
    cplx at(std::size_t i, std::size_t j) const { return coeffs_[i * (order_ + 1) + j]; }

    Jet2 &operator+=(const Jet2 &o);
    Jet2 &operator*=(cplx c);
    friend Jet2 operator+(Jet2 a, const Jet2 &b) { return a += b; }
    friend Jet2 operator*(Jet2 a, cplx c) { return a *= c; }
    friend Jet2 operator*(cplx c, Jet2 a) { return a *= c; }
    friend Jet2 operator*(const Jet2 &a, const Jet2 &b);

    /// exp of the series, via f_s = g_s f.
    Jet2 exp() const;

 private:
    std::size_t order_;
    std::vector<cplx> coeffs_;
};

struct SeriesControl {
    /// Highest power of phi kept on each side of U_beta U_gamma^dag.
    int k_max = 12;
    /// Largest acceptable apply_U_pair tail_estimate (before the e^{-|alpha|^2}
    /// prefactor); exceeding it throws SeriesNotConverged.
    double tail_threshold = std::numeric_limits<double>::infinity();
};

class SeriesNotConverged : public std::runtime_error {
 public:
    explicit SeriesNotConverged(double tail)
        : std::runtime_error("U-series not converged"), tail_estimate(tail) {}
    double tail_estimate;
};

struct SeriesValue {
    cplx value;
    /// Summed magnitude of the outermost retained (k, l) shell.
    double tail_estimate = 0.0;
};

struct SeriesResult {
    double value = 0.0;
    double imag_residue = 0.0;
    double tail_estimate = 0.0;
};

/// pi^{-1/4} exp(-x^2/2 + sqrt(2) alpha x - alpha^2/2).
cplx gen_G(cplx alpha, double x);

/// exp(-p^2 - q^2 + i sqrt(2)(beta - gamma*) p + sqrt(2)(beta + gamma*) q - beta gamma*).
cplx gen_K(cplx beta, cplx gamma, double q, double p);

/// exp(-q^2 + sqrt(2)(beta + gamma*) q - (beta - gamma*)^2 / 2 - beta gamma*).
cplx gen_L(cplx beta, cplx gamma, double q);

/// Wigner kernel K at fixed phase-space point.
struct WignerKernel {
    double q;
    double p;
};
/// Marginal kernel L at fixed quadrature value.
struct MarginalKernel {
    double q;
};
using Kernel = std::variant<WignerKernel, MarginalKernel>;

/// Jet2 of the kernel in (s, t), built with general jet arithmetic.
Jet2 kernel_jet(const Kernel &kernel, cplx alpha, std::size_t order);

/// U_beta(phi) U_gamma^dag(phi) kernel, evaluated at beta = gamma = alpha.
SeriesValue apply_U_pair(const Kernel &kernel, cplx alpha, double phi,
                         const SeriesControl &ctl);

/// W(q, p) = e^{-|alpha|^2} / pi * U U^dag K, on the same (q, p) axes as
/// fock::wigner_numeric.
SeriesResult wigner_series(cplx alpha, double phi, double q, double p,
                           const SeriesControl &ctl);

/// P(q) = e^{-|alpha|^2} / sqrt(pi) * U U^dag L.
SeriesResult marginal_series(cplx alpha, double phi, double q, const SeriesControl &ctl);

}  // namespace kerrgate::wigner

#endif  // KERRGATE_WIGNER_H
