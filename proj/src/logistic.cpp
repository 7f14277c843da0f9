#include "fronts/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fronts/fit.hpp"
#include "fronts/stepper.hpp"

namespace fronts {

const char* to_string(Classification c) {
    switch (c) {
        case Classification::Spreading: return "spreading";
        case Classification::Vanishing: return "vanishing";
        case Classification::Undecided: return "undecided";
    }
    return "undecided";
}

Classification classify_scalar(const std::vector<ScalarRecord>& records, double d,
                               double theta, const DetectConfig& detect) {
    const double barrier =
        0.5 * M_PI * std::sqrt(d / theta) * (1.0 + detect.spread_margin);
    for (const auto& r : records)
        if (r.rho > barrier) return Classification::Spreading;

    const int n = int(records.size());
    if (n >= detect.window) {
        bool flat = true;
        for (int i = n - detect.window; i < n; ++i) {
            if (records[i].max_z >= detect.eps_vanish ||
                records[i].rho_dot >= detect.eps_vanish) {
                flat = false;
                break;
            }
        }
        if (flat) return Classification::Vanishing;
    }
    return Classification::Undecided;
}

ScalarTrajectory solve_logistic(double d, double theta, double gamma, double rho0,
                                const InitialProfile& z0, const SolverConfig& cfg,
                                const DetectConfig& detect) {
    if (!(d > 0.0) || !(theta > 0.0) || !(gamma > 0.0) || !(rho0 > 0.0))
        throw RegimeError("solve_logistic requires positive parameters");
    cfg.validate();
    if (std::abs(z0.support() - rho0) > 1e-12 * std::max(1.0, rho0))
        throw RegimeError("initial profile support must equal rho0");

    const int n = cfg.ny;
    const double dy = 1.0 / double(n - 1);
    Vector z = z0.sample(n);
    detail::TridiagWork wk;
    Vector reaction(n);

    const double zmax_bound = std::max(theta, z0.sup()) * (1.0 + 1e-6);
    const double rhodot_bound =
        2.0 * gamma *
        std::max(std::max(theta, z0.sup()) * std::sqrt(theta / (2.0 * d)),
                 -z0.min_derivative()) *
        (1.0 + 1e-3);

    ScalarTrajectory traj;
    double t = 0.0, rho = rho0;
    double next_record = 0.0;
    double clamp = 0.0;

    auto record = [&](double rhodot) {
        traj.records.push_back({t, rho, rhodot, z.maxCoeff()});
    };

    const long max_steps = 400'000'000L;
    for (long step = 0;; ++step) {
        if (step >= max_steps) throw SolverError("solve_logistic exceeded the step budget");

        const double zy1 = detail::boundary_slope(z, dy);
        double rhodot = -gamma * zy1 / rho;
        if (rhodot < 0.0) {
            if (rhodot < -1e-12 * rhodot_bound)
                throw InvariantError("front velocity went negative");
            rhodot = 0.0;
        }
        if (rhodot > rhodot_bound)
            throw InvariantError("front velocity bound breached (Stefan monitor)");

        if (t >= next_record) {
            record(rhodot);
            next_record += cfg.record_dt;
            const double zmax = traj.records.back().max_z;
            if (zmax > zmax_bound)
                throw InvariantError("density bound breached (maximum principle monitor)");
            traj.classification = classify_scalar(traj.records, d, theta, detect);
            if (traj.classification != Classification::Undecided) break;
        }
        if (t >= cfg.t_max) break;

        double dt = cfg.dt_policy == DtPolicy::Fixed
                        ? cfg.dt
                        : std::min(cfg.dt_cap, 0.2 * dy * dy * rho * rho / d);
        if (!(dt > 0.0)) throw SolverError("step size underflow");
        if (t + dt > cfg.t_max) dt = cfg.t_max - t;

        reaction = z * (theta - z);
        clamp += detail::advance_species(z, d, rho, rhodot, dt, dy, reaction, wk);
        rho += dt * rhodot;
        t += dt;
    }

    traj.clamp_mass = clamp / std::max(1e-300, double(z0.sample(n).sum() * dy));
    traj.clamp_flagged = traj.clamp_mass > 1e-6;
    traj.z_final = z;
    traj.rho_final = rho;
    if (traj.classification == Classification::Undecided)
        traj.classification = classify_scalar(traj.records, d, theta, detect);
    return traj;
}

SpeedEstimate front_speed(const ScalarTrajectory& traj) {
    const int n = int(traj.records.size());
    const int start = n / 2;
    if (n - start < 10) throw DataError("front_speed needs >= 10 trailing records");
    std::vector<double> ts, rs;
    ts.reserve(n - start);
    rs.reserve(n - start);
    for (int i = start; i < n; ++i) {
        ts.push_back(traj.records[i].t);
        rs.push_back(traj.records[i].rho);
    }
    const auto f = detail::linear_fit(ts, rs);
    return {f.slope, f.stderr_, f.points};
}

}  // namespace fronts
