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
#include <limits>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "kerrgate/fock.h"

using namespace kerrgate;
using analytic::BusParams;

namespace {

fock::FockVector oracle_state(const BusParams &bp) {
    return fock::apply_spm(fock::coherent_fock(std::polar(bp.r, bp.xi), 1e-15), bp.phi_eff);
}

struct OracleStats {
    double mean, variance, mu3, mu4;
};

OracleStats oracle_stats(const BusParams &bp, double lambda) {
    const fock::FockVector v = oracle_state(bp);
    const double m1 = fock::quadrature_moment(v, lambda, 1);
    const double m2 = fock::quadrature_moment(v, lambda, 2);
    const double m3 = fock::quadrature_moment(v, lambda, 3);
    const double m4 = fock::quadrature_moment(v, lambda, 4);
    return {m1, m2 - m1 * m1, m3 - 3 * m2 * m1 + 2 * m1 * m1 * m1,
            m4 - 4 * m3 * m1 + 6 * m2 * m1 * m1 - 3 * m1 * m1 * m1 * m1};
}

}  // namespace

TEST(MeanX, CoherentValue) {
    EXPECT_NEAR(analytic::mean_x({3.0, 0.0, 0.0}, 0.0), 3 * std::numbers::sqrt2, 1e-14);
}

TEST(MeanX, MatchesOracle) {
    const BusParams bp{2.0, 0.0, 0.02};
    EXPECT_NEAR(analytic::mean_x(bp, 0.0), fock::quadrature_moment(oracle_state(bp), 0.0, 1),
                1e-9);
}

TEST(MeanX, PeriodicInLambda) {
    const BusParams bp{2.5, 0.3, 0.07};
    for (double lambda : {-1.0, 0.0, 0.4, 2.9}) {
        EXPECT_NEAR(analytic::mean_x(bp, lambda), analytic::mean_x(bp, lambda + 2 * std::numbers::pi),
                    1e-12);
    }
}

TEST(MeanX, RejectsInvalidBus) {
    EXPECT_THROW(analytic::mean_x({-1.0, 0.0, 0.0}, 0.0), std::invalid_argument);
    EXPECT_THROW(analytic::mean_x({1.0, std::numeric_limits<double>::quiet_NaN(), 0.0}, 0.0),
                 std::invalid_argument);
    EXPECT_THROW(analytic::central_stats({1.0, 0.0, std::numeric_limits<double>::infinity()}, 0.0),
                 std::invalid_argument);
}

TEST(RawMoment, CoherentReductions) {
    EXPECT_NEAR(analytic::raw_moment({1.7, 0.4, 0.0}, 0.4, 2), 0.5 + 2 * 1.7 * 1.7, 1e-12);
    EXPECT_NEAR(analytic::raw_moment({0.0, 0.0, 0.0}, 0.0, 4), 0.75, 1e-15);
    EXPECT_NEAR(analytic::raw_moment({0.0, 0.0, 0.3}, 1.0, 4), 0.75, 1e-15);
    EXPECT_NEAR(analytic::raw_moment({0.0, 0.0, 0.3}, 1.0, 3), 0.0, 1e-15);
}

TEST(RawMoment, MatchesOracle) {
    const BusParams bp{2.0, 0.0, 0.02};
    const fock::FockVector v = oracle_state(bp);
    for (int k : {2, 3, 4}) {
        EXPECT_NEAR(analytic::raw_moment(bp, 0.1, k), fock::quadrature_moment(v, 0.1, k), 1e-8)
            << "k=" << k;
    }
}

TEST(RawMoment, RejectsUnsupportedOrder) {
    for (int k : {0, 1, 5}) {
        EXPECT_THROW(analytic::raw_moment({1.0, 0.0, 0.0}, 0.0, k), std::invalid_argument);
    }
}

// >= 100 random points with r <= 6 and |phi_eff| <= 0.3.
TEST(RawMoment, OracleEquivalenceProperty) {
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> r_dist(0.0, 6.0);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> phi_dist(-0.3, 0.3);
    for (int trial = 0; trial < 120; trial++) {
        const BusParams bp{r_dist(rng), ang(rng), phi_dist(rng)};
        const double lambda = ang(rng);
        const fock::FockVector v = oracle_state(bp);
        EXPECT_NEAR(analytic::mean_x(bp, lambda), fock::quadrature_moment(v, lambda, 1), 1e-7);
        for (int k : {2, 3, 4}) {
            EXPECT_NEAR(analytic::raw_moment(bp, lambda, k), fock::quadrature_moment(v, lambda, k),
                        1e-7)
                << "k=" << k << " r=" << bp.r << " xi=" << bp.xi << " phi=" << bp.phi_eff;
        }
    }
}

TEST(CentralStats, GaussianAtZeroPhi) {
    for (double r : {0.0, 1.0, 7.5, 40.0}) {
        const analytic::MomentSet m = analytic::central_stats({r, 0.3, 0.0}, -1.1);
        EXPECT_NEAR(m.variance, 0.5, 1e-12);
        EXPECT_NEAR(m.gamma1, 0.0, 1e-12);
        EXPECT_NEAR(m.gamma2, 0.0, 1e-12);
    }
}

TEST(CentralStats, PlatykurticOperatingPoint) {
    const double theta = 0.1;
    const double lambda = analytic::lambda_star(30.0, theta, theta);
    const analytic::MomentSet m = analytic::central_stats({30.0, 0.0, theta}, lambda);
    EXPECT_GE(m.gamma2, -1.8);
    EXPECT_LE(m.gamma2, -1.2);
}

TEST(CentralStats, MatchesOracle) {
    const BusParams bp{2.0, 0.0, 0.05};
    const analytic::MomentSet m = analytic::central_stats(bp, 0.2);
    const OracleStats o = oracle_stats(bp, 0.2);
    const fock::FockVector v = oracle_state(bp);
    EXPECT_NEAR(m.mean, o.mean, 1e-7);
    EXPECT_NEAR(m.m2, fock::quadrature_moment(v, 0.2, 2), 1e-7);
    EXPECT_NEAR(m.m3, fock::quadrature_moment(v, 0.2, 3), 1e-7);
    EXPECT_NEAR(m.m4, fock::quadrature_moment(v, 0.2, 4), 1e-7);
    EXPECT_NEAR(m.variance, o.variance, 1e-7);
    EXPECT_NEAR(m.mu3, o.mu3, 1e-7);
    EXPECT_NEAR(m.mu4, o.mu4, 1e-7);
    EXPECT_NEAR(m.gamma1, o.mu3 / std::pow(o.variance, 1.5), 1e-7);
    EXPECT_NEAR(m.gamma2, o.mu4 / (o.variance * o.variance) - 3, 1e-7);
}

// The stable route and the textbook identities on raw moments agree wherever
// the raw moments are small enough not to cancel.
TEST(CentralStats, FieldIdentitiesProperty) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> r_dist(0.0, 4.0);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> phi_dist(-0.5, 0.5);
    for (int trial = 0; trial < 200; trial++) {
        const BusParams bp{r_dist(rng), ang(rng), phi_dist(rng)};
        const analytic::MomentSet m = analytic::central_stats(bp, ang(rng));
        const double mean = m.mean;
        EXPECT_NEAR(m.variance, m.m2 - mean * mean, 1e-10);
        EXPECT_NEAR(m.mu3, m.m3 - 3 * m.m2 * mean + 2 * mean * mean * mean, 1e-9);
        EXPECT_NEAR(m.mu4,
                    m.m4 - 4 * m.m3 * mean + 6 * m.m2 * mean * mean - 3 * mean * mean * mean * mean,
                    1e-8);
        EXPECT_NEAR(m.gamma1, m.mu3 / std::pow(m.variance, 1.5), 1e-12);
        EXPECT_NEAR(m.gamma2, m.mu4 / (m.variance * m.variance) - 3, 1e-12);
    }
}

TEST(CentralStats, VariancePositiveProperty) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> r_dist(0.0, 50.0);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> phi_dist(-0.3, 0.3);
    for (int trial = 0; trial < 1000; trial++) {
        const analytic::MomentSet m =
            analytic::central_stats({r_dist(rng), ang(rng), phi_dist(rng)}, ang(rng));
        EXPECT_GT(m.variance, 0.0);
        EXPECT_TRUE(std::isfinite(m.gamma1));
        EXPECT_TRUE(std::isfinite(m.gamma2));
    }
}

// Kerr evolution squeezes: some quadrature dips below the vacuum level 1/2.
TEST(CentralStats, KerrSqueezingBelowVacuum) {
    const BusParams bp{3.0, 0.0, 0.005};
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3600; i++) {
        const double lambda = i * std::numbers::pi / 3600;
        best = std::min(best, analytic::central_stats(bp, lambda).variance);
    }
    EXPECT_LT(best, 0.5);
    EXPECT_GT(best, 0.0);
    const double lambda = 0.0;
    EXPECT_NEAR(analytic::central_stats(bp, lambda).variance, oracle_stats(bp, lambda).variance,
                1e-9);
}

TEST(CentralStats, LargeAmplitudeStaysExact) {
    // At phi = 0 the raw moments are ~ r^4 = 6e6 but the stable route keeps
    // the Gaussian values; a tiny phi moves them continuously.
    const analytic::MomentSet m0 = analytic::central_stats({50.0, 0.0, 0.0}, 0.3);
    EXPECT_EQ(m0.variance, 0.5);
    const analytic::MomentSet m1 = analytic::central_stats({50.0, 0.0, 1e-12}, 0.3);
    EXPECT_NEAR(m1.variance, 0.5, 1e-6);
    EXPECT_NEAR(m1.gamma2, 0.0, 1e-6);
}

TEST(Symmetries, XiLambdaShift) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> r_dist(0.0, 10.0);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    std::uniform_real_distribution<double> phi_dist(-0.3, 0.3);
    for (int trial = 0; trial < 200; trial++) {
        const BusParams bp{r_dist(rng), ang(rng), phi_dist(rng)};
        const double lambda = ang(rng);
        const double c = ang(rng);
        const BusParams shifted{bp.r, bp.xi + c, bp.phi_eff};
        EXPECT_NEAR(analytic::mean_x(shifted, lambda + c), analytic::mean_x(bp, lambda), 1e-9);
        for (int k : {2, 3, 4}) {
            const double scale = std::pow(1 + bp.r, k);
            EXPECT_NEAR(analytic::raw_moment(shifted, lambda + c, k),
                        analytic::raw_moment(bp, lambda, k), 1e-11 * scale);
        }
    }
}

TEST(Symmetries, ConjugationLeavesMeanInvariant) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> r_dist(0.0, 10.0);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    std::uniform_real_distribution<double> phi_dist(-0.3, 0.3);
    for (int trial = 0; trial < 200; trial++) {
        const double r = r_dist(rng);
        const double xi = ang(rng);
        const double lambda = ang(rng);
        const double phi = phi_dist(rng);
        // phi -> -phi and (lambda - xi) -> -(lambda - xi), realized via xi -> lambda.
        EXPECT_NEAR(analytic::mean_x({r, lambda, -phi}, xi), analytic::mean_x({r, xi, phi}, lambda),
                    1e-9);
    }
}

TEST(LambdaStar, NoSpmReducesToTheta) {
    EXPECT_EQ(analytic::lambda_star(7.0, 0.03, 0.0), 0.03);
}

TEST(LambdaStar, DoubledPassSubstitution) {
    // Per-pass phi = 0.04 accumulates phi_eff = 0.08 on the bus.
    EXPECT_NEAR(analytic::lambda_star(10.0, 0.04, 0.08), 0.04 - 100 * std::sin(0.16) - 0.08, 1e-14);
    EXPECT_THROW(analytic::lambda_star(-1.0, 0.04, 0.08), std::invalid_argument);
}

TEST(LambdaStar, DefiningPropertyProperty) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> r_dist(0.0, 50.0);
    std::uniform_real_distribution<double> theta_dist(0.0, 0.1);
    std::uniform_real_distribution<double> phi_dist(-0.3, 0.3);
    for (int trial = 0; trial < 500; trial++) {
        const double r = r_dist(rng);
        const double theta = theta_dist(rng);
        const double phi_eff = trial % 2 == 0 ? theta : phi_dist(rng);
        const double lambda = analytic::lambda_star(r, theta, phi_eff);
        EXPECT_NEAR(analytic::mean_x({r, 0.0, phi_eff}, lambda),
                    analytic::mean_x({r, 2 * theta, phi_eff}, lambda), 1e-12);
    }
}

TEST(VarianceTriplet, ZeroAngle) {
    for (double r : {0.0, 2.0, 9.0}) {
        for (double v : analytic::variance_triplet_approx(r, 0.0)) {
            EXPECT_NEAR(v, 0.5, 1e-12 * (1 + r * r));
        }
    }
}

TEST(VarianceTriplet, TracksExactVariances) {
    const double r = 5.0;
    const double theta = 0.05;
    const double lambda = analytic::lambda_star(r, theta, theta);
    const auto approx = analytic::variance_triplet_approx(r, theta);
    const double xis[3] = {0.0, theta, 2 * theta};
    for (int i = 0; i < 3; i++) {
        const double exact = analytic::central_stats({r, xis[i], theta}, lambda).variance;
        EXPECT_NEAR(approx[i], exact, 0.05) << "xi index " << i;
    }
}

TEST(VarianceTriplet, EvenVariancesDiffer) {
    for (double theta : {0.02, 0.05, 0.1}) {
        const auto v = analytic::variance_triplet_approx(4.0, theta);
        EXPECT_GT(std::abs(v[0] - v[2]), 1e-6) << "theta=" << theta;
    }
}
