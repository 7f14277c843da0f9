#pragma once

#include <map>
#include <string>
#include <vector>

#include "fronts/model.hpp"
#include "fronts/solver_config.hpp"

namespace fronts {

struct ProfileSpec {
    std::string kind = "cosine";  // cosine | bump | tabulated
    double amplitude = 1.0;
    std::string table;            // CSV path for tabulated profiles

    InitialProfile build(double support) const;
};

struct OutputConfig {
    std::string directory = "out";
    bool plot = false;
};

// Full run description: the four physical/numerical sections plus output.
// Unknown keys are hard errors so that a misspelled parameter cannot be
// silently defaulted.
struct RunConfig {
    ModelParams model;
    ProfileSpec u0, v0;
    SolverConfig solver;
    DetectConfig detect;
    OutputConfig output;

    void validate() const;
    std::string serialize() const;

    InitialProfile prey_profile() const { return u0.build(model.g0); }
    InitialProfile predator_profile() const { return v0.build(model.h0); }
};

RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

// Sweep description: a base run config plus up to two value axes over config
// keys ("model.beta = 1, 2, 5"), a concurrency limit and a total-run cap.
struct SweepAxis {
    std::string key;
    std::vector<double> values;
};

struct SweepSpec {
    RunConfig base;
    std::vector<SweepAxis> axes;
    int concurrency = 4;
    int max_runs = 256;
};

SweepSpec parse_sweep_spec(const std::string& text);
SweepSpec load_sweep_spec(const std::string& path);

// Apply an axis value to a config key ("model.beta", "model.mu", ...).
void set_config_value(RunConfig& cfg, const std::string& key, double value);

}  // namespace fronts
