#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fronts/logistic.hpp"
#include "fronts/model.hpp"
#include "fronts/solver_config.hpp"

namespace fronts {

// Critical moving parameter gamma(d, theta, rho0, z0): the Stefan coefficient
// separating vanishing from spreading when rho0 sits below the barrier
// (pi/2) sqrt(d/theta).
struct GammaThreshold {
    bool spreads_for_all_gamma = false;
    double value = 0.0;
    double lo = 0.0, hi = 0.0;  // bracket: lo classifies Vanishing, hi Spreading
    int runs = 0;               // simulations consumed
    bool flagged = false;       // an Undecided run was assigned pessimistically
};

struct ThresholdOptions {
    double tol = 0.05;          // relative bracket width
    SolverConfig solver;        // per-run solver settings (t_max is the initial horizon)
    DetectConfig detect;
    ThresholdOptions() {
        solver.ny = 200;
        solver.t_max = 40.0;
    }
};

GammaThreshold critical_gamma(double d, double theta, double rho0,
                              const InitialProfile& z0,
                              const ThresholdOptions& opt = {});

// The three named thresholds: beta* = gamma(d,a,g0,u0),
// mu* = gamma(1,1,h0,v0), mu_star (lower) = gamma(1,1+ac,h0,v0).
struct NamedThresholds {
    GammaThreshold beta_star, mu_star, mu_lower;
};

NamedThresholds named_thresholds(const ModelParams& p, const InitialProfile& u0,
                                 const InitialProfile& v0,
                                 const ThresholdOptions& opt = {});

enum class CriterionStatus { Satisfied, NotSatisfied, NotApplicable, Inconclusive };

struct CriterionEntry {
    std::string theorem;     // which sufficient criterion is instantiated
    std::string prediction;  // the conclusion it would imply
    CriterionStatus status = CriterionStatus::NotApplicable;
    std::vector<std::pair<std::string, double>> hypothesis;  // values entering it
    std::string note;
};

struct CriteriaReport {
    std::vector<CriterionEntry> entries;
};

CriteriaReport check_criteria(const ModelParams& p, const InitialProfile& u0,
                              const InitialProfile& v0,
                              const ThresholdOptions& opt = {});

// Constructive prey/predator separation condition: sigma = K mu must stay
// below sqrt(2da); the front then dominates the envelope K mu t + h0 + L_sigma
// whenever the exponential eigenfunction condition and the initial gap hold.
struct SeparationReport {
    bool applicable = false;   // sigma < sqrt(2da)
    double K = 0.0;
    double sigma = 0.0;
    double L_sigma = 0.0;
    double delta_sigma = 0.0;
    bool condition_ok = false;     // sigma < beta delta_sigma (pi/L) exp(-sigma L/(2d))
    bool gap_ok = false;           // g0 - h0 > L_sigma
    bool satisfied = false;        // all of the above
};

SeparationReport separation_condition(const ModelParams& p, const InitialProfile& u0,
                                      const InitialProfile& v0);

}  // namespace fronts
