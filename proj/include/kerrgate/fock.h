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

#ifndef KERRGATE_FOCK_H
#define KERRGATE_FOCK_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

/// Truncated photon-number representation of a single bosonic mode.
///
/// Everything in here is brute force: states are amplitude vectors, the
/// Kerr phase and linear phase are diagonal multiplications, and quadrature
/// statistics come from ladder-operator matrix elements or from the
/// Hermite-function wavefunction. The closed-form routes in `analytic` and
/// `wigner` are checked against these functions.
namespace kerrgate::fock {

using cplx = std::complex<double>;

/// Levels kept beyond the point where the discarded Poisson weight drops
/// below the requested tolerance.
inline constexpr std::size_t kHeadRoom = 8;

/// Amplitudes A_n for n = 0..dim-1.
///
/// `tail_bound` bounds the probability that was discarded by truncation,
/// so for states built from normalized inputs the squared norm lies in
/// [1 - tail_bound, 1].
class FockVector {
 public:
  FockVector(std::vector<cplx> amplitudes, double tail_bound);

  std::size_t dim() const { return amplitudes_.size(); }
  double tail_bound() const { return tail_bound_; }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  const cplx &operator[](std::size_t n) const { return amplitudes_[n]; }

  double norm_squared() const;
  /// Sum of n |A_n|^2.
  double mean_photon_number() const;

 private:
  std::vector<cplx> amplitudes_;
  double tail_bound_;
};

/// Uniform sampling of a quadrature axis, endpoints included.
class QuadratureGrid {
 public:
  QuadratureGrid(double x_min, double x_max, std::size_t num_points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t num_points() const { return num_points_; }
  double step() const { return (x_max_ - x_min_) / static_cast<double>(num_points_ - 1); }
  double point(std::size_t i) const;

 private:
  double x_min_;
  double x_max_;
  std::size_t num_points_;
};

/// Sampled probability density over a quadrature grid.
struct Distribution {
  QuadratureGrid grid;
  std::vector<double> density;
  /// Trapezoid integral of `density`.
  double captured = 0.0;
  /// Set when the grid misses more probability than truncation alone explains.
  bool window_warning = false;

  /// Trapezoid estimate of the k-th raw moment (not renormalized).
  double moment(int k) const;
};

/// Coherent state |alpha>, truncated so the discarded Poisson weight is below
/// `tail_tol`, plus kHeadRoom extra levels.
FockVector coherent_fock(cplx alpha, double tail_tol);

/// Applies exp(-i phi n^2) (self-phase modulation of strength phi).
FockVector apply_spm(const FockVector &psi, double phi);

/// Applies exp(i theta n); maps |alpha> to |alpha e^{i theta}>.
FockVector apply_linear_phase(const FockVector &psi, double theta);

/// <psi|(x_lambda)^k|psi> with x_lambda = (a e^{-i lambda} + a^dag e^{i lambda}) / sqrt(2).
///
/// Works in dimension dim + k so the truncated ladder operators never act on
/// a populated edge level. Throws std::runtime_error if the imaginary part of
/// the expectation value exceeds round-off.
double quadrature_moment(const FockVector &psi, double lambda, int k);

/// Normalized Hermite functions psi_0(x)..psi_{count-1}(x) (hbar = 1).
void hermite_functions(double x, std::span<double> out);

/// Position-representation amplitude <x_lambda|psi>.
cplx wavefunction(const FockVector &psi, double lambda, double x);

/// Density of x_lambda outcomes on `grid`.
Distribution marginal_distribution(const FockVector &psi, double lambda,
                                   const QuadratureGrid &grid);

/// W(q, p) = (1/pi) Int dx e^{-2ipx} psi(q - x) psi*(q + x), by trapezoid
/// quadrature refined until successive halvings agree to 1e-10. With this
/// kernel sign the momentum axis is mirrored relative to <p>: |alpha> peaks at
/// (sqrt2 Re alpha, -sqrt2 Im alpha). wigner::wigner_series uses the same axis.
double wigner_numeric(const FockVector &psi, double q, double p);

/// sum_n conj(psi1[n]) psi2[n]; the shorter vector is zero padded.
cplx overlap(const FockVector &psi1, const FockVector &psi2);

}  // namespace kerrgate::fock

#endif  // KERRGATE_FOCK_H
