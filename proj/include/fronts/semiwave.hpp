#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fronts/model.hpp"
#include "fronts/types.hpp"

namespace fronts {

// Solution of the half-line connection problem
//   d q'' - k q' + q(theta - q) = 0,  q(0) = 0, q'(0) = k/nu, q(inf) = theta,
// with the unique speed k in (0, 2 sqrt(theta d)).
struct SemiWave {
    double k = 0.0;
    double nu = 0.0;
    double d = 0.0;
    double theta = 0.0;
    // (y, q(y)) samples, y increasing from 0; truncated where q >= theta(1 - 1e-6)
    std::vector<std::pair<double, double>> profile;
};

// The four speed evaluations feeding the front-speed sandwich: upper/lower
// rates for the prey and predator fronts.
struct SpeedTable {
    double kbar_beta = 0.0;            // k(beta, d, a)
    double kund_mu = 0.0;              // k(mu, 1, 1)
    double kbar_mu = 0.0;              // k(mu, 1, 1+ac)
    std::optional<double> kund_beta;   // k(beta, d, a-b(1+ac)), absent if a <= b(1+ac)
};

// Phase-plane solve: backward integration of the unstable manifold leaving
// (theta, 0), with bisection on k over the residual q'(0) - k/nu.
SemiWave solve_semiwave(double nu, double d, double theta, double tol = 1e-6);

// Speed only.
double kappa(double nu, double d, double theta, double tol = 1e-6);

SpeedTable speed_table(const ModelParams& p, double tol = 1e-6);

}  // namespace fronts
