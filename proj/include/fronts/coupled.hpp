#pragma once

#include <vector>

#include "fronts/logistic.hpp"
#include "fronts/model.hpp"
#include "fronts/solver_config.hpp"
#include "fronts/types.hpp"

namespace fronts {

// State of the coupled system on two separately front-fixed grids:
// prey w(y), y = x/g on [0,1]; predator phi(xi), xi = x/h on [0,1].
struct FrontState {
    double t = 0.0;
    double g = 0.0, h = 0.0;
    Vector w, phi;
};

struct CoupledRecord {
    double t, g, h, gdot, hdot;
    double umax, vmax, u_at_0, v_at_0;
    double mass_u, mass_v;  // integral of density over the physical domain
};

// Physical-space snapshot on a uniform grid covering [0, max(g,h)].
struct Snapshot {
    double t = 0.0;
    std::vector<double> x, u, v;
};

struct Trajectory {
    std::vector<CoupledRecord> records;
    std::vector<Snapshot> snapshots;
    double clamp_mass_u = 0.0, clamp_mass_v = 0.0;  // relative
    bool clamp_flagged = false;
};

// Build the t = 0 state from the initial profiles.
FrontState initial_state(const ModelParams& p, const InitialProfile& u0,
                         const InitialProfile& v0, const SolverConfig& cfg);

struct StepInfo {
    double dt = 0.0;
    double gdot = 0.0, hdot = 0.0;
    double clamp_u = 0.0, clamp_v = 0.0;  // computational clamp mass this step
};

// Advance one time step of size dt (dt <= 0 lets the configured policy
// choose). Coupling terms are read from the other grid at the old time level,
// with the zero extension beyond the other species' front.
StepInfo step(FrontState& state, const ModelParams& p, const SolverConfig& cfg,
              double dt = 0.0);

Trajectory simulate(const ModelParams& p, const InitialProfile& u0,
                    const InitialProfile& v0, const SolverConfig& cfg,
                    const DetectConfig& detect = {});

Snapshot resample_physical(const FrontState& state, int nx);

}  // namespace fronts
