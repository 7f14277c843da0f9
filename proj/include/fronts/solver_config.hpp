#pragma once

#include "fronts/types.hpp"

namespace fronts {

enum class DtPolicy { Cfl, Fixed };

struct SolverConfig {
    int ny = 400;                  // prey / scalar grid nodes
    int nxi = 400;                 // predator grid nodes
    DtPolicy dt_policy = DtPolicy::Cfl;
    double dt = 1e-4;              // used when dt_policy == Fixed
    double dt_cap = 1e-3;          // upper bound under the CFL policy
    double t_max = 100.0;
    double record_dt = 0.1;        // time between trajectory records
    double snapshot_dt = 0.0;      // 0 disables snapshots
    int snapshot_nx = 512;         // nodes of the uniform physical snapshot grid
    bool stop_on_decision = false; // stop a coupled run once both species classify

    void validate() const {
        if (ny < 16 || nxi < 16) throw ConfigError("solver.ny and solver.nxi must be >= 16");
        if (!(t_max > 0.0)) throw ConfigError("solver.t_max must be positive");
        if (!(record_dt > 0.0)) throw ConfigError("solver.record_dt must be positive");
        if (dt_policy == DtPolicy::Fixed && !(dt > 0.0))
            throw ConfigError("solver.dt must be positive for the fixed policy");
        if (snapshot_dt < 0.0) throw ConfigError("solver.snapshot_dt must be >= 0");
        if (snapshot_nx < 2) throw ConfigError("solver.snapshot_nx must be >= 2");
    }
};

struct DetectConfig {
    double eps_vanish = 1e-4;   // density / front-velocity level for vanishing
    double spread_margin = 0.2; // barrier inflation absorbing front discretization error
    int window = 10;            // trailing records required for a vanishing call
    double t_cap = 320.0;       // largest t_max the threshold bisection may retry to
};

}  // namespace fronts
