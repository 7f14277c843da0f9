#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fronts/coupled.hpp"
#include "fronts/logistic.hpp"
#include "fronts/model.hpp"
#include "fronts/semiwave.hpp"

namespace fronts {

struct WindowStats {
    double front_growth = 0.0;   // front advance over the trailing window
    double max_density = 0.0;    // largest density max over the window
    double max_front_dot = 0.0;
};

struct Outcome {
    Classification prey = Classification::Undecided;
    Classification predator = Classification::Undecided;
    WindowStats prey_evidence, predator_evidence;
};

// Per-species long-time classification of a coupled run. Prey spreading uses
// the conservative barrier with theta = a - b(1+ac) when that is positive;
// the predator uses theta = 1 (its logistic sub-solution).
Outcome classify_outcome(const Trajectory& traj, const ModelParams& p,
                         const DetectConfig& detect = {});

enum class SpeedRegime { W, S, Neither };

struct SpeedReport {
    std::optional<SpeedEstimate> g_slope, h_slope;  // absent when not spreading
    SpeedTable table;
    SpeedRegime regime = SpeedRegime::Neither;
    SpeedConstants constants;
};

SpeedReport measure_speeds(const Trajectory& traj, const ModelParams& p,
                           const DetectConfig& detect = {});

// sup|u - A| and sup|v - B| over the expanding window [0, k0 t], per snapshot.
struct FrameError {
    double t, err_u, err_v;
};

std::vector<FrameError> moving_frame_error(const std::vector<Snapshot>& snapshots,
                                           double k0, double A, double B);

// Regime-specific asymptotic speed expectations from the c-constants:
// regime W (da < 1): prey slope in [c3, c4], predator slope 2;
// regime S (d[a-b(1+ac)] > 1+ac): prey slope c1, predator slope in [c5, c2].
struct RegimeBounds {
    SpeedRegime regime = SpeedRegime::Neither;
    double prey_lo = 0.0, prey_hi = 0.0;
    double pred_lo = 0.0, pred_hi = 0.0;
};

RegimeBounds speed_regime_bounds(const ModelParams& p, double tol = 1e-6);

const char* to_string(SpeedRegime r);

}  // namespace fronts
