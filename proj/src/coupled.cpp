#include "fronts/coupled.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fronts/stepper.hpp"

namespace fronts {
namespace {

// Linear interpolation on a front-fixed grid at coordinate frac; exactly zero
// at and beyond the front (frac >= 1), no smoothing at the seam.
double interp_fixed(const Vector& z, double frac) {
    if (frac >= 1.0) return 0.0;
    if (frac <= 0.0) return z[0];
    const Eigen::Index n = z.size();
    const double s = frac * double(n - 1);
    const Eigen::Index j = std::min<Eigen::Index>(n - 2, Eigen::Index(s));
    const double t = s - double(j);
    return (1.0 - t) * z[j] + t * z[j + 1];
}

double trapz_mass(const Vector& z, double dy, double scale) {
    return scale * dy * (z.sum() - 0.5 * (z[0] + z[z.size() - 1]));
}

}  // namespace

FrontState initial_state(const ModelParams& p, const InitialProfile& u0,
                         const InitialProfile& v0, const SolverConfig& cfg) {
    p.validate();
    cfg.validate();
    if (std::abs(u0.support() - p.g0) > 1e-12 * std::max(1.0, p.g0))
        throw RegimeError("u0 support must equal g0");
    if (std::abs(v0.support() - p.h0) > 1e-12 * std::max(1.0, p.h0))
        throw RegimeError("v0 support must equal h0");
    FrontState s;
    s.g = p.g0;
    s.h = p.h0;
    s.w = u0.sample(cfg.ny);
    s.phi = v0.sample(cfg.nxi);
    return s;
}

StepInfo step(FrontState& state, const ModelParams& p, const SolverConfig& cfg,
              double dt) {
    const int ny = int(state.w.size());
    const int nxi = int(state.phi.size());
    const double dy = 1.0 / double(ny - 1);
    const double dxi = 1.0 / double(nxi - 1);

    StepInfo info;
    if (dt > 0.0) {
        info.dt = dt;
    } else if (cfg.dt_policy == DtPolicy::Fixed) {
        info.dt = cfg.dt;
    } else {
        info.dt = std::min({cfg.dt_cap, 0.2 * dy * dy * state.g * state.g / p.d,
                            0.2 * dxi * dxi * state.h * state.h});
    }
    if (!(info.dt > 0.0)) throw SolverError("step size underflow");

    // (i) front velocities from the old level
    info.gdot = std::max(0.0, -p.beta * detail::boundary_slope(state.w, dy) / state.g);
    info.hdot = std::max(0.0, -p.mu * detail::boundary_slope(state.phi, dxi) / state.h);

    // (ii) reactions with cross-grid coupling at the old level
    thread_local Vector rw, rphi;
    rw.resize(ny);
    rphi.resize(nxi);
    for (int i = 0; i < ny; ++i) {
        const double x = state.g * (double(i) * dy);
        const double vloc = x > state.h ? 0.0 : interp_fixed(state.phi, x / state.h);
        rw[i] = state.w[i] * (p.a - state.w[i] - p.b * vloc);
    }
    for (int j = 0; j < nxi; ++j) {
        const double x = state.h * (double(j) * dxi);
        const double uloc = x > state.g ? 0.0 : interp_fixed(state.w, x / state.g);
        rphi[j] = state.phi[j] * (1.0 - state.phi[j] + p.c * uloc);
    }

    // (iii) implicit diffusion + drift per species
    thread_local detail::TridiagWork wk;
    info.clamp_u =
        detail::advance_species(state.w, p.d, state.g, info.gdot, info.dt, dy, rw, wk);
    info.clamp_v =
        detail::advance_species(state.phi, 1.0, state.h, info.hdot, info.dt, dxi, rphi, wk);

    // (iv) explicit front advance
    state.g += info.dt * info.gdot;
    state.h += info.dt * info.hdot;
    state.t += info.dt;
    return info;
}

Snapshot resample_physical(const FrontState& state, int nx) {
    Snapshot s;
    s.t = state.t;
    const double xmax = std::max(state.g, state.h);
    s.x.resize(nx);
    s.u.resize(nx);
    s.v.resize(nx);
    for (int i = 0; i < nx; ++i) {
        const double x = xmax * double(i) / double(nx - 1);
        s.x[i] = x;
        s.u[i] = x > state.g ? 0.0 : interp_fixed(state.w, x / state.g);
        s.v[i] = x > state.h ? 0.0 : interp_fixed(state.phi, x / state.h);
    }
    return s;
}

Trajectory simulate(const ModelParams& p, const InitialProfile& u0,
                    const InitialProfile& v0, const SolverConfig& cfg,
                    const DetectConfig& detect) {
    const DerivedConstants dc = derive_constants(p, u0, v0);
    FrontState s = initial_state(p, u0, v0, cfg);

    // The centered drift discretization can overshoot the continuum bounds by
    // O(dy + dt); allow that margin while still catching genuine blowups.
    const double dt_top = cfg.dt_policy == DtPolicy::Fixed ? cfg.dt : cfg.dt_cap;
    const double mesh_tol =
        1e-6 + 4.0 * (1.0 / double(cfg.ny - 1) + 1.0 / double(cfg.nxi - 1) + dt_top);
    const double umax_bound = dc.M1 * (1.0 + mesh_tol);
    const double vmax_bound = dc.M2 * (1.0 + mesh_tol);
    const double gdot_bound =
        2.0 * p.beta *
        std::max(dc.M1 * std::sqrt(p.a / (2.0 * p.d)), -u0.min_derivative()) *
        (1.0 + 1e-3);
    const double hdot_bound = p.mu * dc.K * (1.0 + 1e-3);

    const double dy = 1.0 / double(cfg.ny - 1);
    const double dxi = 1.0 / double(cfg.nxi - 1);
    const double mass_u0 = trapz_mass(s.w, dy, p.g0);
    const double mass_v0 = trapz_mass(s.phi, dxi, p.h0);

    // conservative spreading barrier per species, for the optional early stop
    const double theta_eff = p.a - p.b * (1.0 + p.a * p.c);
    const double prey_spread_barrier =
        theta_eff > 0.0 ? 0.5 * M_PI * std::sqrt(p.d / theta_eff) *
                              (1.0 + detect.spread_margin)
                        : std::numeric_limits<double>::infinity();
    const double pred_spread_barrier = 0.5 * M_PI * (1.0 + detect.spread_margin);

    Trajectory traj;
    double next_record = 0.0;
    double next_snapshot = cfg.snapshot_dt > 0.0 ? 0.0
                                                 : std::numeric_limits<double>::infinity();
    double clamp_u = 0.0, clamp_v = 0.0;
    double gdot = 0.0, hdot = 0.0;

    auto decided = [&](auto front, auto dens_max, auto front_dot, double barrier) {
        // front cleared the barrier, or trailing window flat and near-zero
        const int n = int(traj.records.size());
        for (const auto& r : traj.records)
            if (front(r) > barrier) return true;
        if (n < detect.window) return false;
        for (int i = n - detect.window; i < n; ++i)
            if (dens_max(traj.records[i]) >= detect.eps_vanish ||
                front_dot(traj.records[i]) >= detect.eps_vanish)
                return false;
        return true;
    };

    const long max_steps = 400'000'000L;
    for (long step_no = 0;; ++step_no) {
        if (step_no >= max_steps) throw SolverError("simulate exceeded the step budget");

        if (s.t >= next_record) {
            CoupledRecord r;
            r.t = s.t;
            r.g = s.g;
            r.h = s.h;
            r.gdot = gdot;
            r.hdot = hdot;
            r.umax = s.w.maxCoeff();
            r.vmax = s.phi.maxCoeff();
            r.u_at_0 = s.w[0];
            r.v_at_0 = s.phi[0];
            r.mass_u = trapz_mass(s.w, dy, s.g);
            r.mass_v = trapz_mass(s.phi, dxi, s.h);
            traj.records.push_back(r);
            next_record += cfg.record_dt;

            if (r.umax > umax_bound || r.vmax > vmax_bound)
                throw InvariantError("density bound breached (maximum principle monitor)");
            if (!traj.records.empty() && traj.records.size() >= 2) {
                const auto& prev = traj.records[traj.records.size() - 2];
                if (r.g < prev.g || r.h < prev.h)
                    throw InvariantError("front positions must be non-decreasing");
            }
            if (cfg.stop_on_decision &&
                decided([](const CoupledRecord& r) { return r.g; },
                        [](const CoupledRecord& r) { return r.umax; },
                        [](const CoupledRecord& r) { return r.gdot; },
                        prey_spread_barrier) &&
                decided([](const CoupledRecord& r) { return r.h; },
                        [](const CoupledRecord& r) { return r.vmax; },
                        [](const CoupledRecord& r) { return r.hdot; },
                        pred_spread_barrier))
                break;
        }
        if (s.t >= next_snapshot) {
            traj.snapshots.push_back(resample_physical(s, cfg.snapshot_nx));
            next_snapshot += cfg.snapshot_dt;
        }
        if (s.t >= cfg.t_max) break;

        double dt_want = 0.0;  // policy decides
        if (cfg.dt_policy == DtPolicy::Fixed) {
            dt_want = std::min(cfg.dt, cfg.t_max - s.t);
        } else {
            const double dt_cfl =
                std::min({cfg.dt_cap, 0.2 * dy * dy * s.g * s.g / p.d,
                          0.2 * dxi * dxi * s.h * s.h});
            dt_want = std::min(dt_cfl, cfg.t_max - s.t);
        }
        const StepInfo info = step(s, p, cfg, dt_want);
        gdot = info.gdot;
        hdot = info.hdot;
        clamp_u += info.clamp_u;
        clamp_v += info.clamp_v;

        if (gdot > gdot_bound || hdot > hdot_bound)
            throw InvariantError("front velocity bound breached (Stefan monitor)");
    }

    traj.clamp_mass_u = clamp_u * p.g0 / std::max(mass_u0, 1e-300);
    traj.clamp_mass_v = clamp_v * p.h0 / std::max(mass_v0, 1e-300);
    traj.clamp_flagged = traj.clamp_mass_u > 1e-6 || traj.clamp_mass_v > 1e-6;
    if (traj.clamp_flagged)
        throw SolverError("negativity clamp mass exceeded 1e-6 relative (instability)");
    return traj;
}

}  // namespace fronts
