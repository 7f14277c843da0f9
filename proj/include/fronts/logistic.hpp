#pragma once

#include <vector>

#include "fronts/model.hpp"
#include "fronts/solver_config.hpp"
#include "fronts/types.hpp"

namespace fronts {

enum class Classification { Spreading, Vanishing, Undecided };

const char* to_string(Classification c);

// Single-species free boundary problem
//   z_t - d z_xx = z(theta - z)  on 0 < x < rho(t),
//   z_x(t,0) = 0, z(t,rho) = 0, rho' = -gamma z_x(t,rho),
// discretized in the front-fixed coordinate y = x/rho.
struct ScalarRecord {
    double t, rho, rho_dot, max_z;
};

struct ScalarTrajectory {
    std::vector<ScalarRecord> records;
    Classification classification = Classification::Undecided;
    double clamp_mass = 0.0;     // accumulated negativity clamp, relative
    bool clamp_flagged = false;
    // final grid state, for node-level comparisons
    Vector z_final;
    double rho_final = 0.0;
};

ScalarTrajectory solve_logistic(double d, double theta, double gamma, double rho0,
                                const InitialProfile& z0, const SolverConfig& cfg,
                                const DetectConfig& detect = {});

// Applies the spreading/vanishing rules to a recorded trajectory:
// Spreading once rho clears (pi/2) sqrt(d/theta) * (1 + margin); Vanishing when
// the density max and front velocity stay below eps over the trailing window.
Classification classify_scalar(const std::vector<ScalarRecord>& records, double d,
                               double theta, const DetectConfig& detect);

struct SpeedEstimate {
    double slope = 0.0;
    double stderr_ = 0.0;
    int points = 0;
};

// Least-squares slope of rho(t) over the trailing half of the record.
SpeedEstimate front_speed(const ScalarTrajectory& traj);

}  // namespace fronts
